#include "heunpot/potential.hpp"

#include <algorithm>
#include <cmath>

namespace heunpot {

namespace {

double find_named(const std::vector<std::pair<std::string, double>>& v, const std::string& name) {
    for (const auto& [n, x] : v)
        if (n == name) return x;
    fail(Errc::UnsupportedFamily, "no coefficient named '" + name + "'");
}

}  // namespace

const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::V1: return "V1";
        case FamilyKind::V2Variant: return "V2variant";
        case FamilyKind::V3: return "V3";
        case FamilyKind::V4: return "V4";
        case FamilyKind::V5: return "V5";
        case FamilyKind::General: return "General";
    }
    return "?";
}

double PotentialFamily::coeff(const std::string& name) const { return find_named(coeffs, name); }

double v_eff_at_rho(const HeunSixParams& p, double rho) {
    const double i1 = p.i1(rho);
    if (std::fabs(i1) < 1e-14 * (1.0 + rho * rho))
        fail(Errc::SingularPoint, "I1 vanishes at this rho");
    const double rho2 = rho * rho;
    const double num0 = 4.0 * p.a0 + 4.0 * p.a1 * rho + 4.0 * p.a2 * rho2 - 9.0 * rho2 * rho2;
    const double nums = 12.0 * p.b2 * p.b2 * rho2 + 12.0 * p.b1 * p.b2 * rho +
                        5.0 * p.b1 * p.b1 - 8.0 * p.b0 * p.b2;
    return -num0 / (4.0 * i1) - nums / (16.0 * i1 * i1 * i1);
}

double v_eff(const HeunSixParams& p, const CoordinateMap& map, double r) {
    return v_eff_at_rho(p, map.inverse(r));
}

double schwarzian_via_i1(const HeunSixParams& p, double rho) {
    const double i1 = p.i1(rho);
    if (std::fabs(i1) < 1e-14 * (1.0 + rho * rho))
        fail(Errc::SingularPoint, "I1 vanishes at this rho");
    const double di = p.i1_dot(rho);
    const double ddi = 2.0 * p.b2;
    return (5.0 * di * di - 4.0 * i1 * ddi) / (8.0 * i1 * i1 * i1);
}

PotentialFamily family_coefficients(const HeunSixParams& p, CaseTag tag) {
    PotentialFamily f;
    f.params = p;
    const double a0 = p.a0, a1 = p.a1, a2 = p.a2;
    const double b0 = p.b0, b1 = p.b1, b2 = p.b2;

    switch (tag) {
        case CaseTag::DeltaZeroB1Pos: {
            f.kind = FamilyKind::V1;
            const double sb0 = std::sqrt(b0), sb2 = std::sqrt(b2);
            f.coeffs = {
                {"c0", 63.0 * b0 / (4.0 * b2 * b2) - a2 / b2},
                {"c1", 2.0 * a2 * sb0 / b2 - a1 / sb2 - 9.0 * b0 * sb0 / (b2 * b2)},
                {"c2", -a0 + a1 * sb0 / sb2 + 9.0 * b0 * b0 / (4.0 * b2 * b2) - a2 * b0 / b2},
                {"c3", -0.75 * b2},
                {"c4", -9.0 * sb0 / (b2 * b2)},
                {"c5", 4.5 / (b2 * sb2)},
            };
            break;
        }
        case CaseTag::DeltaZeroB1Neg: {
            f.kind = FamilyKind::V2Variant;
            const double sb0 = std::sqrt(b0), sb2 = std::sqrt(b2);
            // d2 carries -a0 (the a0 sign is fixed by matching the general form)
            f.coeffs = {
                {"d0", 63.0 * b0 / (4.0 * b2 * b2) - a2 / b2},
                {"d1", -2.0 * a2 * sb0 / b2 - a1 / sb2 + 9.0 * b0 * sb0 / (b2 * b2)},
                {"d2", -a0 - a1 * sb0 / sb2 + 9.0 * b0 * b0 / (4.0 * b2 * b2) - a2 * b0 / b2},
                {"d3", -0.75 * b2},
                {"d4", 9.0 * sb0 / (b2 * b2)},
                {"d5", 4.5 / (b2 * sb2)},
            };
            break;
        }
        case CaseTag::DeltaZeroB0B1Zero: {
            f.kind = FamilyKind::V3;
            const double sb2 = std::sqrt(b2);
            f.coeffs = {
                {"e0", -a2 / b2},
                {"e1", -a1 / (std::sqrt(2.0) * std::pow(b2, 0.75))},
                {"e2", -a0 / (2.0 * sb2)},
                {"e3", -3.0 / 16.0},
                {"e4", 4.5 / (b2 * sb2)},
            };
            break;
        }
        case CaseTag::LinearB2Zero: {
            f.kind = FamilyKind::V4;
            const double q = b0 / b1;
            const double k23 = std::cbrt(4.0 / (9.0 * b1 * b1));  // (2/(3 b1))^{2/3}
            f.coeffs = {
                {"v0", -a1 / b1 + 2.0 * a2 * b0 / (b1 * b1) - 9.0 * b0 * b0 * b0 / std::pow(b1, 4)},
                {"v1", k23 * (a1 * q - a0 - a2 * q * q + 2.25 * q * q * q * q)},
                {"v2", -5.0 / 36.0},
                // prefactor (9/(4 b1^4))^{1/3}, fixed by matching the general form
                {"v3", std::cbrt(9.0 / (4.0 * std::pow(b1, 4))) * (13.5 * q * q - a2)},
                {"v4", -std::pow(3.0, 10.0 / 3.0) * b0 /
                           (std::pow(2.0, 4.0 / 3.0) * std::pow(std::fabs(b1), 8.0 / 3.0))},
                {"v5", 81.0 / (16.0 * b1 * b1)},
            };
            break;
        }
        case CaseTag::LinearB0B2Zero: {
            f.kind = FamilyKind::V5;
            f.coeffs = {
                {"u0", -a1 / b1},
                {"u1", -a0 * std::cbrt(4.0 / (9.0 * b1 * b1))},
                {"u2", -5.0 / 36.0},
                // prefactor (9/(4 b1^4))^{1/3}, fixed by matching the general form
                {"u3", -a2 * std::cbrt(9.0 / (4.0 * std::pow(b1, 4)))},
                {"u4", 81.0 / (16.0 * b1 * b1)},
            };
            break;
        }
        default:
            f.kind = FamilyKind::General;
            break;
    }
    return f;
}

double PotentialFamily::eval(double r) const {
    const double b0 = params.b0, b1 = params.b1, b2 = params.b2;
    switch (kind) {
        case FamilyKind::V1: {
            const double s2 = b0 + 2.0 * std::sqrt(b2) * r;
            if (s2 <= 0.0) fail(Errc::DomainError, "V1 closed form needs b0 + 2 sqrt(b2) r > 0");
            const double s = std::sqrt(s2);
            return coeffs[0].second + coeffs[1].second / s + coeffs[2].second / s2 +
                   coeffs[3].second / (s2 * s2) + coeffs[4].second * s + coeffs[5].second * r;
        }
        case FamilyKind::V2Variant: {
            const double s2 = b0 + 2.0 * std::sqrt(b2) * r;
            if (s2 <= 0.0) fail(Errc::DomainError, "closed form needs b0 + 2 sqrt(b2) r > 0");
            const double s = std::sqrt(s2);
            return coeffs[0].second + coeffs[1].second / s + coeffs[2].second / s2 +
                   coeffs[3].second / (s2 * s2) + coeffs[4].second * s + coeffs[5].second * r;
        }
        case FamilyKind::V3: {
            if (r <= 0.0) fail(Errc::DomainError, "V3 closed form needs r > 0");
            return coeffs[0].second + coeffs[1].second / std::sqrt(r) + coeffs[2].second / r +
                   coeffs[3].second / (r * r) + coeffs[4].second * r;
        }
        case FamilyKind::V4: {
            if (r <= 0.0) fail(Errc::DomainError, "V4 closed form needs r > 0");
            const double r23 = std::cbrt(r * r);
            return coeffs[0].second + coeffs[1].second / r23 + coeffs[2].second / (r * r) +
                   coeffs[3].second * r23 + coeffs[4].second * r23 * r23 + coeffs[5].second * r * r;
        }
        case FamilyKind::V5: {
            if (r <= 0.0) fail(Errc::DomainError, "V5 closed form needs r > 0");
            const double r23 = std::cbrt(r * r);
            return coeffs[0].second + coeffs[1].second / r23 + coeffs[2].second / (r * r) +
                   coeffs[3].second * r23 + coeffs[4].second * r * r;
        }
        case FamilyKind::General:
            fail(Errc::UnsupportedFamily, "no closed-form family for this case; use v_eff()");
    }
    fail(Errc::UnsupportedFamily, "unreachable");
}

namespace {

// All positive real roots of an ascending-coefficient polynomial on
// [0, 1 + max|a_k|/|a_d|] via sign-change bracketing and bisection.
std::vector<double> positive_roots(const std::vector<double>& poly) {
    int deg = static_cast<int>(poly.size()) - 1;
    while (deg > 0 && poly[deg] == 0.0) --deg;
    auto eval = [&](double x) {
        double acc = 0.0;
        for (int k = deg; k >= 0; --k) acc = acc * x + poly[k];
        return acc;
    };
    double maxq = 0.0;
    for (int k = 0; k < deg; ++k) maxq = std::fmax(maxq, std::fabs(poly[k] / poly[deg]));
    const double rmax = 1.0 + maxq;

    std::vector<double> roots;
    const int n_cells = 4000;
    double x_prev = rmax * 1e-12, f_prev = eval(x_prev);
    for (int i = 1; i <= n_cells; ++i) {
        const double x = rmax * i / n_cells;
        const double fx = eval(x);
        if (f_prev == 0.0) roots.push_back(x_prev);
        if ((f_prev < 0.0 && fx > 0.0) || (f_prev > 0.0 && fx < 0.0)) {
            double lo = x_prev, hi = x, flo = f_prev;
            while (hi - lo > 1e-10 * (1.0 + hi)) {
                const double mid = 0.5 * (lo + hi);
                const double fm = eval(mid);
                if ((fm > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x_prev = x;
        f_prev = fx;
    }
    return roots;
}

}  // namespace

CriticalPointReport critical_points(const PotentialFamily& family) {
    CriticalPointReport rep;
    const double b0 = family.params.b0, b2 = family.params.b2;

    auto c = [&](int i) { return family.coeffs[static_cast<size_t>(i)].second; };
    std::vector<double> poly;
    switch (family.kind) {
        case FamilyKind::V1:
            // u = sqrt(b0 + 2 sqrt(b2) r):  (c5/sqrt(b2)) u^6 + c4 u^5 - c1 u^3 - 2 c2 u^2 - 4 c3 = 0
            poly = {-4.0 * c(3), 0.0, -2.0 * c(2), -c(1), 0.0, c(4), c(5) / std::sqrt(b2)};
            break;
        case FamilyKind::V3:
            // tau = sqrt(r): 2 e4 tau^6 - e1 tau^3 - 2 e2 tau^2 - 4 e3 = 0
            poly = {-4.0 * c(3), 0.0, -2.0 * c(2), -c(1), 0.0, 0.0, 2.0 * c(4)};
            break;
        case FamilyKind::V4:
            // r = tau^{3/2}: 3 v5 tau^6 + 2 v4 tau^5 + v3 tau^4 - v1 tau^2 - 3 v2 = 0
            poly = {-3.0 * c(2), 0.0, -c(1), 0.0, c(3), 2.0 * c(4), 3.0 * c(5)};
            break;
        case FamilyKind::V5:
            // r = tau^{3/4}: 3 u4 tau^3 + u3 tau^2 - u1 tau - 3 u2 = 0
            poly = {-3.0 * c(2), -c(1), c(3), 3.0 * c(4)};
            break;
        default:
            fail(Errc::UnsupportedFamily, "critical-point analysis covers V1, V3, V4, V5");
    }
    rep.poly = poly;

    int changes = 0;
    double last = 0.0;
    for (double a : poly) {
        if (a == 0.0) continue;
        if (last != 0.0 && ((a > 0.0) != (last > 0.0))) ++changes;
        last = a;
    }
    rep.sign_changes = changes;
    for (int k = changes; k >= 0; k -= 2) rep.possible_counts.push_back(k);

    for (double tau : positive_roots(poly)) {
        CriticalPoint pt{};
        pt.tau = tau;
        switch (family.kind) {
            case FamilyKind::V1: pt.r = (tau * tau - b0) / (2.0 * std::sqrt(b2)); break;
            case FamilyKind::V3: pt.r = tau * tau; break;
            case FamilyKind::V4: pt.r = std::pow(tau, 1.5); break;
            case FamilyKind::V5: pt.r = std::pow(tau, 0.75); break;
            default: break;
        }
        const double h = 1e-5 * (1.0 + std::fabs(pt.r));
        bool classified = false;
        try {
            const double vm = family.eval(pt.r - h);
            const double v0 = family.eval(pt.r);
            const double vp = family.eval(pt.r + h);
            const double second = (vp - 2.0 * v0 + vm) / (h * h);
            pt.value = v0;
            const double scale = (std::fabs(vp) + std::fabs(v0) + std::fabs(vm)) / (h * h) * 1e-7;
            pt.kind = second > scale    ? CriticalPoint::Kind::Minimum
                      : second < -scale ? CriticalPoint::Kind::Maximum
                                        : CriticalPoint::Kind::Inflection;
            classified = true;
        } catch (const Error&) {
            // root maps outside the closed form's domain
        }
        if (!classified) {
            pt.value = std::numeric_limits<double>::quiet_NaN();
            pt.kind = CriticalPoint::Kind::Inflection;
        }
        rep.points.push_back(pt);
    }
    return rep;
}

}  // namespace heunpot
