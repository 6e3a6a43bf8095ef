#pragma once

namespace linseg {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x). Uses the power
/// series below x = a + 1 and a Lentz continued fraction above it.
double regularized_gamma_q(double a, double x);

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
/// Returns 1 for statistic <= 0.
double chi_square_survival(double statistic, double dof);

}  // namespace linseg
