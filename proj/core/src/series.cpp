#include "heunpot/series.hpp"

#include <cmath>

namespace heunpot {

namespace {

constexpr double kTermEps = 1e-16;

// Compensated (Kahan) sum of the deriv-th derivative of sum c_n rho^{n+shift}
// with the three-consecutive-small-terms stopping rule.
double summed(const std::vector<double>& c, double rho, int shift, int deriv) {
    double sum = 0.0, comp = 0.0;
    double pw = 1.0;
    int cur_pow = 0;
    int small_run = 0;
    const int n_terms = static_cast<int>(c.size());
    for (int n = 0; n < n_terms; ++n) {
        const int p = n + shift;
        const int target = p - deriv;
        if (target < 0) continue;  // term differentiates away
        while (cur_pow < target) {
            pw *= rho;
            ++cur_pow;
        }
        double w = 1.0;
        for (int d = 0; d < deriv; ++d) w *= static_cast<double>(p - d);
        const double term = c[n] * w * pw;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) <= kTermEps * (1.0 + std::fabs(sum))) {
            if (++small_run >= 3 && n >= 4) return sum;
        } else {
            small_run = 0;
        }
    }
    fail(Errc::TruncationError, "series tail criterion unmet within the stored order");
}

}  // namespace

SeriesSolution t1_coeffs(const CanonicalParams& p, int n_max) {
    SeriesSolution s;
    s.kind = SeriesKind::T1;
    s.params = p;
    s.coeffs.resize(static_cast<size_t>(n_max) + 1);
    s.coeffs[0] = 1.0;
    if (n_max >= 1) s.coeffs[1] = 0.0;
    if (n_max >= 2) s.coeffs[2] = -0.5 * p.alpha;
    for (int n = 3; n <= n_max; ++n) {
        s.coeffs[n] = ((n - 1) * p.gamma * s.coeffs[n - 1] - p.alpha * s.coeffs[n - 2] -
                       (p.beta + 6.0 - 3.0 * n) * s.coeffs[n - 3]) /
                      (static_cast<double>(n) * (n - 1));
    }
    return s;
}

SeriesSolution t2_coeffs(const CanonicalParams& p, int n_max) {
    SeriesSolution s;
    s.kind = SeriesKind::T2;
    s.params = p;
    s.coeffs.resize(static_cast<size_t>(n_max) + 1);
    s.coeffs[0] = 1.0;
    if (n_max >= 1) s.coeffs[1] = 0.5 * p.gamma;
    if (n_max >= 2) s.coeffs[2] = (p.gamma * p.gamma - p.alpha) / 6.0;
    for (int n = 3; n <= n_max; ++n) {
        s.coeffs[n] = (n * p.gamma * s.coeffs[n - 1] - p.alpha * s.coeffs[n - 2] -
                       (p.beta + 3.0 - 3.0 * n) * s.coeffs[n - 3]) /
                      (static_cast<double>(n) * (n + 1));
    }
    return s;
}

double SeriesSolution::eval(double rho) const {
    return summed(coeffs, rho, kind == SeriesKind::T2 ? 1 : 0, 0);
}

double SeriesSolution::eval_derivative(double rho) const {
    return summed(coeffs, rho, kind == SeriesKind::T2 ? 1 : 0, 1);
}

double SeriesSolution::eval_second_derivative(double rho) const {
    return summed(coeffs, rho, kind == SeriesKind::T2 ? 1 : 0, 2);
}

double eval_series(const SeriesSolution& s, double rho) { return s.eval(rho); }

double decarreau_identity_residual(const CanonicalParams& p, double rho) {
    const SeriesSolution t1 = t1_coeffs(p);
    const SeriesSolution t2 = t2_coeffs(p);
    const CanonicalParams flipped{p.alpha, -p.beta, p.gamma};
    const SeriesSolution t1f = t1_coeffs(flipped);
    const double lhs = p.gamma * t2.eval(rho) + t1.eval(rho);
    const double rhs = std::exp(rho * rho * rho + p.gamma * rho) * t1f.eval(-rho);
    return lhs - rhs;
}

double assemble_wavefunction(const SeriesSolution& t1, const SeriesSolution& t2,
                             const HeunSixParams& p, const CoordinateMap& map,
                             double cT1, double cT2, double r) {
    const double rho = map.inverse(r);
    const double i1 = p.i1(rho);
    if (i1 <= 0.0) fail(Errc::SingularPoint, "I1 <= 0 at the mapped point");
    const double A2 = t1.params.A2();
    const double pref = std::pow(i1, 0.25) * std::exp(A2 / 3.0 * rho - 0.5 * rho * rho * rho);
    double y = 0.0;
    if (cT1 != 0.0) y += cT1 * t1.eval(rho);
    if (cT2 != 0.0) y += cT2 * t2.eval(rho);
    return pref * y;
}

double assemble_wavefunction(const HeunSixParams& p, double E, const CoordinateMap& map,
                             double cT1, double cT2, double r) {
    const CanonicalParams c = canonical_at_energy(p, E);
    return assemble_wavefunction(t1_coeffs(c), t2_coeffs(c), p, map, cT1, cT2, r);
}

}  // namespace heunpot
