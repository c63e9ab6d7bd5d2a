#pragma once

namespace dlm {

// Regularized lower incomplete gamma P(a, x); series for x < a+1,
// continued fraction otherwise.
double gamma_p(double a, double x);

// Inverse of gamma_p in x for fixed a, to |P(a,x) - p| <= 1e-12.
double gamma_p_inv(double a, double p);

// Chi-squared CDF with k degrees of freedom.
double chi_square_cdf(double x, double k);

// Inverse chi-squared CDF; F(result, k) = gamma within 1e-8.
double chi_square_inverse_cdf(double gamma, double k);

}  // namespace dlm
