#pragma once

namespace gl3tf {

// Euler-Maclaurin evaluation of the Riemann zeta function and its first
// derivative for real s > 0, s != 1, with truncation chosen for the target
// accuracy (floored near machine precision).
double zeta_em(double s, double target_eps = 1e-14);
double zeta_em_derivative(double s, double target_eps = 1e-14);

// Stieltjes constants gamma_0 (Euler-Mascheroni) and gamma_1 from the same
// tail expansion applied to ln^j(x)/x.
double stieltjes_gamma0();
double stieltjes_gamma1();

}  // namespace gl3tf
