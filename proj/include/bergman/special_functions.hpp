#ifndef BERGMAN_SPECIAL_FUNCTIONS_HPP
#define BERGMAN_SPECIAL_FUNCTIONS_HPP

namespace bergman::sf {

// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};

// log Gamma(x) for x > 0.  Throws domain_error for x <= 0.
double log_gamma(double x);

// Gamma in signed-log form for any non-pole argument
// (poles: x = 0, -1, -2, ...; throws pole_error there).
SignedLogGamma log_gamma_signed(double x);

// Gamma(x) itself; overflows to +/-inf for large x.
double gamma_fn(double x);

// psi(x) = Gamma'(x)/Gamma(x); any non-pole argument.
double digamma(double x);

// Rising factorial (a)_n, integer n >= 0.
double pochhammer(double a, int n);

// Euler Beta.  Arguments must avoid Gamma poles.
double log_beta(double a, double b);
double beta_fn(double a, double b);

// (Gamma(1-2u)/Gamma(1-u)^2 - 1) / u^2 for u < 1/2, evaluated stably
// through u = 0 where the limit is zeta(2) = pi^2/6.
double gamma_ratio_quadratic(double u);

// Gauss hypergeometric 2F1(a,b;c;z) restricted to real z in [0,1].
// z = 1 requires c-a-b > 0 (else divergence_error) unless the series
// terminates.  Throws pole_error when c is a nonpositive integer that the
// series reaches, convergence_error if the series budget is exhausted.
double hyp2f1(double a, double b, double c, double z);

// 2F1(a,b;c;1-w) with the boundary distance w in [0,1] supplied exactly.
// Near z = 1 this avoids the cancellation of forming 1-z in the caller,
// which matters for quadrature against integrable boundary singularities.
double hyp2f1_from_w(double a, double b, double c, double w);

// d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z).
double hyp2f1_derivative(double a, double b, double c, double z);

}  // namespace bergman::sf

#endif
