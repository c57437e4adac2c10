#include "heunpot/spectrum.hpp"

#include <cmath>
#include <map>

namespace heunpot {

double QESCondition::constraint_value(double alpha, double gamma) const {
    double acc = 0.0;
    for (const auto& m : constraint)
        acc += m.coeff * std::pow(alpha, m.alpha_pow) * std::pow(gamma, m.gamma_pow);
    return acc;
}

namespace {

using Poly2 = std::map<std::pair<int, int>, double>;  // (alpha_pow, gamma_pow) -> coeff

Poly2 axpy(double c, const Poly2& p, int da, int dg) {
    Poly2 out;
    for (const auto& [k, v] : p) out[{k.first + da, k.second + dg}] = c * v;
    return out;
}

void add_into(Poly2& dst, const Poly2& src) {
    for (const auto& [k, v] : src) {
        dst[k] += v;
        if (dst[k] == 0.0) dst.erase(k);
    }
}

QESCondition from_poly2(int N, const Poly2& p) {
    QESCondition q;
    q.n = N;
    q.beta_required = 3.0 * (N + 1);
    for (const auto& [k, v] : p) q.constraint.push_back({v, k.first, k.second});
    return q;
}

}  // namespace

QESCondition qes_constraint(int N) {
    if (N < 0) fail(Errc::InvalidParams, "N must be nonnegative");
    QESCondition q;
    q.n = N;
    q.beta_required = 3.0 * (N + 1);
    switch (N) {
        case 0: q.constraint = {{1, 1, 0}}; return q;                                    // alpha
        case 1: q.constraint = {{1, 2, 0}, {3, 0, 1}}; return q;                         // a^2+3g
        case 2: q.constraint = {{1, 3, 0}, {12, 1, 1}, {36, 0, 0}}; return q;
        case 3: q.constraint = {{1, 4, 0}, {30, 2, 1}, {216, 1, 0}, {81, 0, 2}}; return q;
        case 4:
            q.constraint = {{1, 5, 0}, {60, 3, 1}, {756, 2, 0}, {576, 1, 2}, {5184, 0, 1}};
            return q;
        default:
            break;
    }
    // symbolic minor recurrence for N > 4
    Poly2 m3;            // M_{k-3}
    Poly2 m2;            // M_{k-2}
    Poly2 m1{{{0, 0}, 1.0}};  // M_{k-1}, starting from M_0 = 1
    for (int k = 1; k <= N + 1; ++k) {
        Poly2 mk = axpy(1.0, m1, 1, 0);  // alpha * M_{k-1}
        add_into(mk, axpy(3.0 * (k - 1) * (N - k + 2), m2, 0, 1));
        add_into(mk, axpy(9.0 * (k - 1) * (k - 2) * (N - k + 2.0) * (N - k + 3.0), m3, 0, 0));
        m3 = std::move(m2);
        m2 = std::move(m1);
        m1 = std::move(mk);
    }
    return from_poly2(N, m1);
}

double energy_eigenvalue(double a1, double b1, int N) {
    if (b1 == 0.0) fail(Errc::DivisionByZero, "quasi-exact energies need b1 != 0");
    return (3.0 * (N + 1) - a1) / b1;
}

double determinant_condition(const CanonicalParams& p, int N) {
    if (std::fabs(p.beta - 3.0 * (N + 1)) > 1e-12)
        fail(Errc::BetaMismatch, "determinant condition needs beta = 3(N+1)");
    double m3 = 0.0, m2 = 0.0, m1 = 1.0;
    for (int k = 1; k <= N + 1; ++k) {
        const double mk = p.alpha * m1 + 3.0 * (k - 1) * (N - k + 2) * p.gamma * m2 +
                          9.0 * (k - 1) * (k - 2) * (N - k + 2.0) * (N - k + 3.0) * m3;
        m3 = m2;
        m2 = m1;
        m1 = mk;
    }
    return m1;
}

HeunPolynomial build_polynomial(const CanonicalParams& p, int N) {
    if (std::fabs(p.beta - 3.0 * (N + 1)) > 1e-12)
        fail(Errc::BetaMismatch, "polynomial solutions need beta = 3(N+1)");
    const double beta = 3.0 * (N + 1);

    HeunPolynomial h;
    h.n = N;
    h.params = p;
    std::vector<double> w(static_cast<size_t>(N) + 3, 0.0);  // w_0..w_{N+2}, top two zero
    w[N] = 1.0;
    for (int n = N; n >= 1; --n) {
        // recurrence row n: (beta-3n) w_{n-1} + alpha w_n - gamma(n+1) w_{n+1} + (n+1)(n+2) w_{n+2} = 0
        w[n - 1] = (-p.alpha * w[n] + p.gamma * (n + 1) * w[n + 1] -
                    static_cast<double>(n + 1) * (n + 2) * w[n + 2]) /
                   (beta - 3.0 * n);
    }
    double wmax = 0.0;
    for (int n = 0; n <= N; ++n) wmax = std::fmax(wmax, std::fabs(w[n]));
    const double row0 = p.alpha * w[0] - p.gamma * w[1] + 2.0 * w[2];
    if (std::fabs(row0) > 1e-8 * wmax)
        fail(Errc::NoNontrivialSolution,
             "top recurrence row does not close; determinant condition is not met");
    w.resize(static_cast<size_t>(N) + 1);
    h.coeffs = std::move(w);
    return h;
}

double HeunPolynomial::eval(double rho) const {
    double acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * rho + coeffs[k];
    return acc;
}

double HeunPolynomial::eval_derivative(double rho) const {
    double acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 1;) acc = acc * rho + coeffs[k] * static_cast<double>(k);
    return acc;
}

std::vector<double> w_sequence_from(const CanonicalParams& p, double w0, double w1, double w2,
                                    int n_max) {
    std::vector<double> w;
    w.reserve(static_cast<size_t>(n_max) + 1);
    w.push_back(w0);
    if (n_max >= 1) w.push_back(w1);
    if (n_max >= 2) w.push_back(w2);
    for (int n = 0; n + 3 <= n_max; ++n) {
        const double pi1 = -p.gamma / (n + 3.0);
        const double pi2 = p.alpha / ((n + 2.0) * (n + 3.0));
        const double pi3 = (p.beta - 3.0 * (n + 1)) / ((n + 2.0) * (n + 3.0));
        w.push_back(-pi1 * w[n + 2] - pi2 * w[n + 1] - pi3 * w[n]);
    }
    return w;
}

std::vector<double> w_sequence(const CanonicalParams& p, int n_max) {
    return w_sequence_from(p, 1.0, p.gamma, 0.5 * (p.gamma * p.gamma - p.alpha), n_max);
}

}  // namespace heunpot
