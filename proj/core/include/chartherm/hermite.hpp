#pragma once

#include <vector>

namespace chartherm {

/// Normalized oscillator eigenfunction psi_n(q) (mass, frequency and hbar
/// all 1), via the recurrence on normalized functions
///   psi_{n+1} = q sqrt(2/(n+1)) psi_n - sqrt(n/(n+1)) psi_{n-1},
/// which stays in range long after the raw Hermite polynomials overflow.
double hermite_psi(int n, double q);

/// psi_0(q)..psi_max(q) in one pass.
std::vector<double> hermite_psi_all(int max_level, double q);

}  // namespace chartherm
