#include "heunpot/asymptotics.hpp"

#include <cmath>
#include <limits>

namespace heunpot {

namespace {

inline double pi3(const CanonicalParams& p, int n) {
    return (p.beta - 3.0 * (n + 1)) / ((n + 2.0) * (n + 3.0));
}

inline double step_bottom_row(const CanonicalParams& p, int n, const std::array<double, 3>& z) {
    const double pi1 = -p.gamma / (n + 3.0);
    const double pi2 = p.alpha / ((n + 2.0) * (n + 3.0));
    return -pi1 * z[2] - pi2 * z[1] - pi3(p, n) * z[0];
}

}  // namespace

std::vector<CompanionState> propagate(const CanonicalParams& p, int n_max) {
    std::vector<CompanionState> states;
    states.reserve(static_cast<size_t>(n_max) + 1);
    std::array<double, 3> z{1.0, p.gamma, 0.5 * (p.gamma * p.gamma - p.alpha)};
    states.push_back({0, z});
    for (int n = 0; n < n_max; ++n) {
        z = {z[1], z[2], step_bottom_row(p, n, z)};
        states.push_back({n + 1, z});
    }
    return states;
}

ScaledSequence propagate_scaled(const CanonicalParams& p, int n_max) {
    ScaledSequence seq;
    seq.mantissa.reserve(static_cast<size_t>(n_max) + 1);
    seq.log_scale.reserve(static_cast<size_t>(n_max) + 1);
    std::array<double, 3> z{1.0, p.gamma, 0.5 * (p.gamma * p.gamma - p.alpha)};
    double lg = 0.0;
    seq.mantissa.push_back(z[0]);
    seq.log_scale.push_back(0.0);
    for (int n = 0; n < n_max; ++n) {
        z = {z[1], z[2], step_bottom_row(p, n, z)};
        const double mag = std::fmax(std::fmax(std::fabs(z[0]), std::fabs(z[1])), std::fabs(z[2]));
        if (mag > 0.0 && (mag > 1e50 || mag < 1e-50)) {
            for (double& c : z) c /= mag;
            lg += std::log(mag);
        }
        seq.mantissa.push_back(z[0]);
        seq.log_scale.push_back(lg);
    }
    return seq;
}

double ScaledSequence::value(int n) const {
    return mantissa[static_cast<size_t>(n)] * std::exp(log_scale[static_cast<size_t>(n)]);
}

double ScaledSequence::log_abs(int n) const {
    const double m = mantissa[static_cast<size_t>(n)];
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(m)) + log_scale[static_cast<size_t>(n)];
}

int ScaledSequence::sign(int n) const {
    const double m = mantissa[static_cast<size_t>(n)];
    return m > 0.0 ? 1 : m < 0.0 ? -1 : 0;
}

CasoratianPair casoratian(const CanonicalParams& p,
                          const std::array<std::vector<double>, 3>& s, int n, double W0) {
    const auto& u = s[0];
    const auto& v = s[1];
    const auto& w = s[2];
    const size_t i = static_cast<size_t>(n);
    const double direct =
        u[i] * (v[i + 1] * w[i + 2] - v[i + 2] * w[i + 1]) -
        v[i] * (u[i + 1] * w[i + 2] - u[i + 2] * w[i + 1]) +
        w[i] * (u[i + 1] * v[i + 2] - u[i + 2] * v[i + 1]);
    double pred = W0;
    for (int k = 0; k < n; ++k) pred *= -pi3(p, k);
    return {direct, pred};
}

double limit_tail_max(const CanonicalParams& p, int n_max) {
    const ScaledSequence seq = propagate_scaled(p, n_max);
    const int start = n_max - std::max(1, n_max / 10);
    double tail = 0.0;
    for (int n = start; n <= n_max; ++n) {
        const double la = seq.log_abs(n);
        tail = std::fmax(tail, la < -700.0 ? 0.0 : std::exp(la));
    }
    return tail;
}

BirkhoffExpansion birkhoff(const CanonicalParams& p) {
    BirkhoffExpansion b;
    b.params = p;
    b.theta = -5.0 / 6.0 - p.beta / 9.0;
    const double nine13 = std::cbrt(9.0);
    const double q = p.alpha - p.gamma * p.gamma / 6.0;
    b.c1 = q / nine13;
    b.c2 = (p.gamma * (1.0 - p.beta / 3.0) + q * q) / (2.0 * nine13);
    b.c3 = (-108.0 * b.c1 * b.c1 * b.c1 + 324.0 * b.c1 * b.c2 +
            (8.0 * std::cbrt(1089.0) - 36.0 * std::cbrt(9.0)) * p.gamma * b.c1 +
            6.0 * p.beta * p.beta + 18.0 * p.beta - 2.0 * std::pow(p.gamma, 3) - 81.0) /
           324.0;
    return b;
}

std::complex<double> BirkhoffExpansion::eval(int branch, int n, int terms) const {
    using namespace std::complex_literals;
    const double nn = static_cast<double>(n);
    const double lead_log = nn / 3.0 * (std::log(3.0) + 1.0 - std::log(nn)) + theta * std::log(nn);
    const double x = std::cbrt(nn / 3.0);  // (n/3)^{1/3}
    const double n13 = std::cbrt(nn);

    std::complex<double> expo, bracket = 1.0;
    const std::complex<double> irt3 = 1i * std::sqrt(3.0);
    switch (branch) {
        case 0:
            expo = params.gamma * x;
            if (terms >= 1) bracket += c1 / n13;
            if (terms >= 2) bracket += c2 / (n13 * n13);
            if (terms >= 3) bracket += c3 / nn;
            break;
        case 1:
            expo = -2.0 / 3.0 * M_PI * 1i * nn - 0.5 * (1.0 - irt3) * params.gamma * x;
            if (terms >= 1) bracket += -0.5 * (1.0 + irt3) * c1 / n13;
            if (terms >= 2) bracket += -0.5 * (1.0 - irt3) * c2 / (n13 * n13);
            if (terms >= 3) bracket += c3 / nn;
            break;
        case 2:
            expo = -4.0 / 3.0 * M_PI * 1i * nn - 0.5 * (1.0 + irt3) * params.gamma * x;
            if (terms >= 1) bracket += -0.5 * (1.0 - irt3) * c1 / n13;
            if (terms >= 2) bracket += -0.5 * (1.0 + irt3) * c2 / (n13 * n13);
            if (terms >= 3) bracket += c3 / nn;
            break;
        default:
            fail(Errc::InvalidParams, "branch must be 0, 1 or 2");
    }
    return std::exp(lead_log + expo) * bracket;
}

double BirkhoffExpansion::log_abs_k0(int n, int terms) const {
    const double nn = static_cast<double>(n);
    const double lead = nn / 3.0 * (std::log(3.0) + 1.0 - std::log(nn)) + theta * std::log(nn) +
                        params.gamma * std::cbrt(nn / 3.0);
    double bracket = 1.0;
    const double n13 = std::cbrt(nn);
    if (terms >= 1) bracket += c1 / n13;
    if (terms >= 2) bracket += c2 / (n13 * n13);
    if (terms >= 3) bracket += c3 / nn;
    return lead + std::log(std::fabs(bracket));
}

}  // namespace heunpot
