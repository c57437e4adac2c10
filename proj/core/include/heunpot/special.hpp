#pragma once

#include <complex>

#include "heunpot/params.hpp"

namespace heunpot {

enum class BesselKind { J, Y };

struct BesselSpec {
    double nu = 0.0;     // order (non-integer for Y)
    double scale = 1.0;  // argument scale k in Z_nu(k * ...)
    BesselKind kind = BesselKind::J;
};

/// Ascending-series J_nu (x <= 30; TruncationError beyond) and
/// Y_nu = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi) for non-integer nu.
double bessel_j(double nu, double x);
double bessel_j_deriv(double nu, double x);
double bessel_y(double nu, double x);
double bessel_y_deriv(double nu, double x);
double bessel_eval(const BesselSpec& spec, double x);

/// Kummer series M(a, b, z) = sum (a)_n z^n / ((b)_n n!), |z| <= 40.
std::complex<double> kummer_m(std::complex<double> a, double b, std::complex<double> z);

/// M_{kappa,mu}(z) = e^{-z/2} z^{mu+1/2} M(mu - kappa + 1/2, 1 + 2 mu, z)
std::complex<double> whittaker_m(std::complex<double> kappa, double mu, std::complex<double> z);
std::complex<double> whittaker_m_deriv(std::complex<double> kappa, double mu,
                                       std::complex<double> z);
std::complex<double> whittaker_m_deriv2(std::complex<double> kappa, double mu,
                                        std::complex<double> z);

/// W_{kappa,mu} via the standard M-combination (2 mu non-integer).
std::complex<double> whittaker_w(std::complex<double> kappa, double mu, std::complex<double> z);

struct WhittakerSpec {
    std::complex<double> kappa;
    double mu = 0.0;
    bool second_kind = false;  // W instead of M
};

std::complex<double> whittaker_eval(const WhittakerSpec& spec, std::complex<double> z);

/// Zero-energy scattering state of the pure V3 member (a_i = 0, b0 = b1 = 0):
///   psi0(r) = sqrt(r) [C1 J_{sqrt7/6}((2 sqrt(e4)/3) r^{3/2}) + C2 Y_{...}],
/// e4 = 9/(2 b2^{3/2}); solves psi'' + V3 psi = 0 with V3 = -3/(16 r^2) + e4 r.
double zero_energy_state(const HeunSixParams& p, double C1, double C2, double r);

/// Index convention for the reduced oscillator-like member: the scaled
/// convention kappa = i(E - v0)/(4 sqrt(v5)) is the one consistent with the
/// radial equation; the flat 4*sqrt(5) denominator is kept selectable for
/// the convention-resolution oracle.
enum class WhittakerIndexConvention { ScaledByV5, FlatSqrt5 };

/// psi_E(r) = r^{-1/2} [C1 M_{kappa,mu}(i sqrt(v5) r^2) + C2 W_{kappa,mu}(...)],
/// mu = sqrt(14)/12, v5 = 81/(16 b1^2); at E = v0 the Bessel form
/// sqrt(r) [C1 J_mu(sqrt(v5) r^2 / 2) + C2 Y_mu(...)] is returned instead.
std::complex<double> v4_reduced_state(double b1, double v0, double E, std::complex<double> C1,
                                      std::complex<double> C2, double r,
                                      WhittakerIndexConvention conv =
                                          WhittakerIndexConvention::ScaledByV5);

/// Complex log-gamma (Lanczos), exposed for the Whittaker W combination tests.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace heunpot
