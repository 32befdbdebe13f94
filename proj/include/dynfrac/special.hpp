#pragma once

#include <complex>

namespace dynfrac {

// Complex log-gamma (Lanczos, g = 7). Branch is not the principal one of
// log(Gamma); only exp() of differences is meaningful.
std::complex<double> log_gamma(std::complex<double> z);

std::complex<double> gamma_fn(std::complex<double> z);

// log Gamma(z + a) - log Gamma(z + b); uses the large-|z| expansion when
// direct subtraction would cancel.
std::complex<double> log_gamma_ratio(std::complex<double> z, double a, double b);

// 1/Gamma(z), entire; exact zero at the nonpositive integers.
std::complex<double> rgamma(std::complex<double> z);

// tanh(pi p)/p, continuous at 0.
double tanh_pi_ratio(double p);

// log(sin(pi z)) without overflow for large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z);

}  // namespace dynfrac
