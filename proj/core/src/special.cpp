#include "heunpot/special.hpp"

#include <cmath>

namespace heunpot {

namespace {

constexpr double kBesselArgCap = 30.0;
constexpr double kKummerArgCap = 40.0;
constexpr int kSeriesCap = 500;
constexpr double kTermEps = 1e-16;

// J_nu(x) = sum_m (-1)^m (x/2)^{2m+nu} / (m! Gamma(m+nu+1))
double bessel_j_series(double nu, double x, int deriv) {
    if (x <= 0.0) fail(Errc::DomainError, "Bessel series needs x > 0");
    if (x > kBesselArgCap)
        fail(Errc::TruncationError, "argument beyond the series-safe radius (cap 30)");
    const double xh = 0.5 * x;
    const double q = xh * xh;
    double term = std::pow(xh, nu) / std::tgamma(nu + 1.0);
    double sum = 0.0, comp = 0.0;
    int small_run = 0;
    for (int m = 0; m < kSeriesCap; ++m) {
        const double p = 2.0 * m + nu;  // current power of x (as (x/2)^p scaled)
        double contrib;
        if (deriv == 0) {
            contrib = term;
        } else {
            contrib = term * p / x;  // d/dx (x/2)^p = (p/x)(x/2)^p
        }
        const double y = contrib - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(contrib) <= kTermEps * (1.0 + std::fabs(sum))) {
            if (++small_run >= 3 && m >= 2) return sum;
        } else {
            small_run = 0;
        }
        term *= -q / ((m + 1.0) * (m + 1.0 + nu));
    }
    fail(Errc::TruncationError, "Bessel series did not meet the tail criterion");
}

}  // namespace

double bessel_j(double nu, double x) { return bessel_j_series(nu, x, 0); }
double bessel_j_deriv(double nu, double x) { return bessel_j_series(nu, x, 1); }

double bessel_y(double nu, double x) {
    if (std::fabs(nu - std::round(nu)) < 1e-9)
        fail(Errc::InvalidParams, "Y from the connection formula needs non-integer order");
    const double c = std::cos(nu * M_PI), s = std::sin(nu * M_PI);
    return (bessel_j(nu, x) * c - bessel_j(-nu, x)) / s;
}

double bessel_y_deriv(double nu, double x) {
    if (std::fabs(nu - std::round(nu)) < 1e-9)
        fail(Errc::InvalidParams, "Y from the connection formula needs non-integer order");
    const double c = std::cos(nu * M_PI), s = std::sin(nu * M_PI);
    return (bessel_j_deriv(nu, x) * c - bessel_j_deriv(-nu, x)) / s;
}

double bessel_eval(const BesselSpec& spec, double x) {
    return spec.kind == BesselKind::J ? bessel_j(spec.nu, spec.scale * x)
                                      : bessel_y(spec.nu, spec.scale * x);
}

std::complex<double> kummer_m(std::complex<double> a, double b, std::complex<double> z) {
    if (std::abs(z) > kKummerArgCap)
        fail(Errc::TruncationError, "argument beyond the series-safe radius (cap 40)");
    if (b <= 0.0 && std::fabs(b - std::round(b)) < 1e-12)
        fail(Errc::InvalidParams, "Kummer series pole: b is a nonpositive integer");
    std::complex<double> term = 1.0, sum = 1.0;
    int small_run = 0;
    for (int n = 0; n < kSeriesCap; ++n) {
        term *= (a + static_cast<double>(n)) / (b + static_cast<double>(n)) * z /
                (static_cast<double>(n) + 1.0);
        sum += term;
        if (std::abs(term) <= kTermEps * (1.0 + std::abs(sum))) {
            if (++small_run >= 3 && n >= 2) return sum;
        } else {
            small_run = 0;
        }
    }
    fail(Errc::TruncationError, "Kummer series did not meet the tail criterion");
}

std::complex<double> whittaker_m(std::complex<double> kappa, double mu, std::complex<double> z) {
    if (z == std::complex<double>(0.0)) fail(Errc::DomainError, "Whittaker M needs z != 0");
    const std::complex<double> a = mu - kappa + 0.5;
    const double b = 1.0 + 2.0 * mu;
    return std::exp(-0.5 * z) * std::pow(z, mu + 0.5) * kummer_m(a, b, z);
}

std::complex<double> whittaker_m_deriv(std::complex<double> kappa, double mu,
                                       std::complex<double> z) {
    const std::complex<double> a = mu - kappa + 0.5;
    const double b = 1.0 + 2.0 * mu;
    const std::complex<double> m0 = kummer_m(a, b, z);
    const std::complex<double> m1 = kummer_m(a + 1.0, b + 1.0, z) * (a / b);  // M'
    const std::complex<double> pref = std::exp(-0.5 * z) * std::pow(z, mu + 0.5);
    return pref * (m1 + ((mu + 0.5) / z - 0.5) * m0);
}

std::complex<double> whittaker_m_deriv2(std::complex<double> kappa, double mu,
                                        std::complex<double> z) {
    const std::complex<double> a = mu - kappa + 0.5;
    const double b = 1.0 + 2.0 * mu;
    const std::complex<double> m0 = kummer_m(a, b, z);
    const std::complex<double> m1 = kummer_m(a + 1.0, b + 1.0, z) * (a / b);
    const std::complex<double> m2 =
        kummer_m(a + 2.0, b + 2.0, z) * (a * (a + 1.0) / (b * (b + 1.0)));
    const std::complex<double> pref = std::exp(-0.5 * z) * std::pow(z, mu + 0.5);
    const std::complex<double> g = (mu + 0.5) / z - 0.5;           // (log prefactor)'
    const std::complex<double> gd = -(mu + 0.5) / (z * z);         // its derivative
    return pref * (m2 + 2.0 * g * m1 + (g * g + gd) * m0);
}

std::complex<double> log_gamma(std::complex<double> z) {
    // Lanczos approximation (g = 7, 9 coefficients) with reflection for Re z < 1/2.
    static const double kCoef[9] = {
        0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
        771.32342877765313,   -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        const std::complex<double> pi = M_PI;
        return std::log(pi / std::sin(M_PI * z)) - log_gamma(1.0 - z);
    }
    const std::complex<double> zz = z - 1.0;
    std::complex<double> acc = kCoef[0];
    for (int i = 1; i < 9; ++i) acc += kCoef[i] / (zz + static_cast<double>(i));
    const std::complex<double> t = zz + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (zz + 0.5) * std::log(t) - t + std::log(acc);
}

std::complex<double> whittaker_w(std::complex<double> kappa, double mu, std::complex<double> z) {
    if (std::fabs(2.0 * mu - std::round(2.0 * mu)) < 1e-9)
        fail(Errc::InvalidParams, "W from the M-combination needs 2 mu non-integer");
    const std::complex<double> g1 = std::exp(log_gamma(std::complex<double>(-2.0 * mu)) -
                                             log_gamma(0.5 - mu - kappa));
    const std::complex<double> g2 = std::exp(log_gamma(std::complex<double>(2.0 * mu)) -
                                             log_gamma(0.5 + mu - kappa));
    return g1 * whittaker_m(kappa, mu, z) + g2 * whittaker_m(kappa, -mu, z);
}

std::complex<double> whittaker_eval(const WhittakerSpec& spec, std::complex<double> z) {
    return spec.second_kind ? whittaker_w(spec.kappa, spec.mu, z)
                            : whittaker_m(spec.kappa, spec.mu, z);
}

double zero_energy_state(const HeunSixParams& p, double C1, double C2, double r) {
    if (r <= 0.0) fail(Errc::DomainError, "zero-energy state needs r > 0");
    if (p.b2 <= 0.0 || p.b0 != 0.0 || p.b1 != 0.0)
        fail(Errc::InvalidParams, "zero-energy Bessel state needs b0 = b1 = 0, b2 > 0");
    const double e4 = 4.5 / (p.b2 * std::sqrt(p.b2));
    const double nu = std::sqrt(7.0) / 6.0;
    const double arg = 2.0 * std::sqrt(e4) / 3.0 * std::pow(r, 1.5);
    double acc = 0.0;
    if (C1 != 0.0) acc += C1 * bessel_j(nu, arg);
    if (C2 != 0.0) acc += C2 * bessel_y(nu, arg);
    return std::sqrt(r) * acc;
}

std::complex<double> v4_reduced_state(double b1, double v0, double E, std::complex<double> C1,
                                      std::complex<double> C2, double r,
                                      WhittakerIndexConvention conv) {
    if (r <= 0.0) fail(Errc::DomainError, "reduced state needs r > 0");
    if (b1 == 0.0) fail(Errc::InvalidParams, "reduced member needs b1 != 0");
    const double v5 = 81.0 / (16.0 * b1 * b1);
    const double mu = std::sqrt(14.0) / 12.0;

    if (E == v0) {
        const double arg = 0.5 * std::sqrt(v5) * r * r;
        std::complex<double> acc = 0.0;
        if (C1 != std::complex<double>(0.0)) acc += C1 * bessel_j(mu, arg);
        if (C2 != std::complex<double>(0.0)) acc += C2 * bessel_y(mu, arg);
        return std::sqrt(r) * acc;
    }

    const double denom = conv == WhittakerIndexConvention::ScaledByV5 ? 4.0 * std::sqrt(v5)
                                                                      : 4.0 * std::sqrt(5.0);
    const std::complex<double> kappa(0.0, (E - v0) / denom);
    const std::complex<double> z(0.0, std::sqrt(v5) * r * r);
    std::complex<double> acc = 0.0;
    if (C1 != std::complex<double>(0.0)) acc += C1 * whittaker_m(kappa, mu, z);
    if (C2 != std::complex<double>(0.0)) acc += C2 * whittaker_w(kappa, mu, z);
    return acc / std::sqrt(r);
}

}  // namespace heunpot
