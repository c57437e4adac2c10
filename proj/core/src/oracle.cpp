#include "heunpot/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace heunpot {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0, kA53 = 64448.0 / 6561.0,
                 kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0, kA63 = 46732.0 / 5247.0,
                 kA64 = 49.0 / 176.0, kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0, kE4 = 71.0 / 1920.0,
                 kE5 = -17253.0 / 339200.0, kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

struct Stepper {
    const OdeRhs& rhs;
    size_t dim;
    std::vector<double> k1, k2, k3, k4, k5, k6, k7, tmp, ynew;

    explicit Stepper(const OdeRhs& f, size_t n)
        : rhs(f), dim(n), k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), ynew(n) {}

    // One trial step; returns the scaled error estimate.
    double step(double t, const std::vector<double>& y, double h) {
        rhs(t, y, k1);
        for (size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * kA21 * k1[i];
        rhs(t + h / 5.0, tmp, k2);
        for (size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
        rhs(t + 3.0 * h / 10.0, tmp, k3);
        for (size_t i = 0; i < dim; ++i)
            tmp[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
        rhs(t + 4.0 * h / 5.0, tmp, k4);
        for (size_t i = 0; i < dim; ++i)
            tmp[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
        rhs(t + 8.0 * h / 9.0, tmp, k5);
        for (size_t i = 0; i < dim; ++i)
            tmp[i] = y[i] +
                     h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] + kA65 * k5[i]);
        rhs(t + h, tmp, k6);
        for (size_t i = 0; i < dim; ++i)
            ynew[i] = y[i] + h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] +
                                  kB6 * k6[i]);
        rhs(t + h, ynew, k7);
        double err = 0.0;
        for (size_t i = 0; i < dim; ++i) {
            const double e = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] +
                                  kE6 * k6[i] + kE7 * k7[i]);
            const double sc = 1.0 + std::fmax(std::fabs(y[i]), std::fabs(ynew[i]));
            err = std::fmax(err, std::fabs(e) / sc);
        }
        return err;
    }
};

}  // namespace

Trajectory integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double t0,
                         std::span<const double> t_out, double tol) {
    if (tol < 1e-13 || tol > 1e-6) fail(Errc::InvalidParams, "tol must lie in [1e-13, 1e-6]");
    Trajectory traj;
    Stepper st(rhs, y0.size());
    std::vector<double> y = std::move(y0);
    double t = t0;

    for (double target : t_out) {
        const double dir = target > t ? 1.0 : -1.0;
        double h = dir * std::fmax(1e-8, 0.05 * std::fabs(target - t));
        while (dir * (target - t) > 0.0) {
            if (dir * (t + h) > dir * target) h = target - t;
            const double err = st.step(t, y, h);
            if (err <= tol) {
                t += h;
                y = st.ynew;
            }
            const double fac = err > 0.0 ? 0.9 * std::pow(tol / err, 0.2) : 5.0;
            h *= std::clamp(fac, 0.2, 5.0);
            if (std::fabs(h) < 1e-14 * (1.0 + std::fabs(t)))
                fail(Errc::StepUnderflow, "step size underflow in the RK controller");
        }
        traj.t.push_back(t);
        traj.y.push_back(y);
    }
    return traj;
}

Trajectory integrate_second_order(const std::function<double(double, double, double)>& g,
                                  double y0, double dy0, double t0,
                                  std::span<const double> t_out, double tol) {
    OdeRhs rhs = [&g](double t, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = g(t, y[0], y[1]);
    };
    return integrate_ode(rhs, {y0, dy0}, t0, t_out, tol);
}

namespace {

// Fixed-step RK4 sweep across the whole domain with renormalization;
// returns the terminal sign-carrying value and the node count.  A fixed
// grid keeps the node count well-defined and the E-bisection smooth.
struct Sweep {
    double terminal;
    int nodes;
};

Sweep sweep_once(const std::function<double(double)>& V, double E, Interval dom, int n_steps,
                 double left_index) {
    const double W = dom.width();
    const double h = W / n_steps;
    const double x_end = dom.hi - 1e-9 * W;

    // Power-index boundary data; singular indices (left_index != 1) start
    // deep in the power region and ramp the step geometrically so the
    // r^s scale stays resolved.
    double x, u, du;
    if (left_index == 1.0) {
        x = dom.lo + 1e-9 * W;
        u = x - dom.lo;
        du = 1.0;
    } else {
        x = dom.lo + 1e-8 * W;
        u = std::pow(x - dom.lo, left_index);
        du = left_index * std::pow(x - dom.lo, left_index - 1.0);
    }

    int nodes = 0;
    auto f = [&](double xx, double uu) { return (V(xx) - E) * uu; };
    while (x < x_end) {
        double hh = std::fmin(h, 0.02 * (x - dom.lo));
        hh = std::fmin(hh, x_end - x);
        const double k1u = du, k1v = f(x, u);
        const double k2u = du + 0.5 * hh * k1v, k2v = f(x + 0.5 * hh, u + 0.5 * hh * k1u);
        const double k3u = du + 0.5 * hh * k2v, k3v = f(x + 0.5 * hh, u + 0.5 * hh * k2u);
        const double k4u = du + hh * k3v, k4v = f(x + hh, u + hh * k3u);
        const double unew = u + hh / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        const double dunew = du + hh / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if ((unew > 0.0) != (u > 0.0) && u != 0.0) ++nodes;
        u = unew;
        du = dunew;
        x += hh;
        const double mag = std::fmax(std::fabs(u), std::fabs(du));
        if (mag > 1e200) {
            u /= mag;
            du /= mag;
        }
    }
    return {u, nodes};
}

}  // namespace

std::vector<double> shoot_eigenvalues(const std::function<double(double)>& potential,
                                      Interval dom, int n_levels, double left_index, double tol) {
    if (!std::isfinite(dom.lo) || !std::isfinite(dom.hi) || dom.width() <= 0.0)
        fail(Errc::InvalidParams, "shooting needs a finite domain");
    const int n_steps = 6000;

    // bracket each level by node count of the terminal sweep
    double vmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 100; ++i)
        vmin = std::fmin(vmin, potential(dom.lo + (dom.hi - dom.lo) * (i + 0.5) / 101.0));

    std::vector<double> eigs;
    double e_lo = vmin;  // below the ground state
    for (int level = 0; level < n_levels; ++level) {
        // find an upper bound with node count > level
        double e_hi = std::fmax(e_lo + 1.0, vmin + 1.0);
        for (int tries = 0; tries < 200; ++tries) {
            if (sweep_once(potential, e_hi, dom, n_steps, left_index).nodes > level) break;
            e_hi = vmin + (e_hi - vmin) * 1.6;
            if (tries == 199) fail(Errc::ConvergenceError, "no bracket for the requested level");
        }
        // lower bound with node count <= level
        double lo = e_lo, hi = e_hi;
        // bisect on node count to localize the level-th jump, then refine on sign
        for (int it = 0; it < 200 && hi - lo > tol * (1.0 + std::fabs(hi)); ++it) {
            const double mid = 0.5 * (lo + hi);
            const Sweep s = sweep_once(potential, mid, dom, n_steps, left_index);
            if (s.nodes > level)
                hi = mid;
            else
                lo = mid;
        }
        eigs.push_back(0.5 * (lo + hi));
        e_lo = eigs.back();
    }
    return eigs;
}

std::vector<double> shoot_spectrum(const ShootingProblem& p, int n_levels) {
    // rough level scale to size the box: quartic WKB growth n^{4/3}
    double e_max_guess = 10.0 + 3.0 * std::pow(n_levels + 1.0, 4.0 / 3.0) +
                         std::fabs(p.a0) + std::fabs(p.a1) + std::fabs(p.a2);
    double L = p.cutoff;
    if (L <= 0.0) {
        L = 2.0;
        while (p.potential(L) < 3.0 * e_max_guess || p.potential(-L) < 3.0 * e_max_guess) {
            L += 0.5;
            if (L > 50.0) fail(Errc::CutoffTooSmall, "cannot size the shooting box");
        }
    } else if (p.potential(L) < 1.5 * e_max_guess || p.potential(-L) < 1.5 * e_max_guess) {
        fail(Errc::CutoffTooSmall, "P(+-L) does not dominate the requested levels");
    }
    auto V = [&p](double x) { return p.potential(x); };
    return shoot_eigenvalues(V, Interval{-L, L}, n_levels);
}

OracleReport fd_residual(const std::function<double(double)>& psi,
                         const std::function<double(double)>& potential, double E,
                         std::span<const double> grid, OperatorConvention conv) {
    if (grid.size() < 5) fail(Errc::InvalidParams, "need at least 5 grid points");
    const double h = grid[1] - grid[0];
    const double s = conv == OperatorConvention::SH1 ? 1.0 : -1.0;
    std::vector<double> p(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) p[i] = psi(grid[i]);
    double pmax = 0.0;
    for (double v : p) pmax = std::fmax(pmax, std::fabs(v));
    double worst = 0.0;
    for (size_t i = 2; i + 2 < grid.size(); ++i) {
        const double d2 =
            (-p[i - 2] + 16.0 * p[i - 1] - 30.0 * p[i] + 16.0 * p[i + 1] - p[i + 2]) /
            (12.0 * h * h);
        worst = std::fmax(worst, std::fabs(d2 + s * (E - potential(grid[i])) * p[i]));
    }
    OracleReport rep;
    rep.residual_max = pmax > 0.0 ? worst / pmax : worst;
    rep.grid = std::to_string(grid.size()) + " points, h = " + std::to_string(h);
    return rep;
}

OracleReport fd_residual_complex(const std::function<std::complex<double>(double)>& psi,
                                 const std::function<double(double)>& potential, double E,
                                 std::span<const double> grid, OperatorConvention conv) {
    if (grid.size() < 5) fail(Errc::InvalidParams, "need at least 5 grid points");
    const double h = grid[1] - grid[0];
    const double s = conv == OperatorConvention::SH1 ? 1.0 : -1.0;
    std::vector<std::complex<double>> p(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) p[i] = psi(grid[i]);
    double pmax = 0.0;
    for (const auto& v : p) pmax = std::fmax(pmax, std::abs(v));
    double worst = 0.0;
    for (size_t i = 2; i + 2 < grid.size(); ++i) {
        const std::complex<double> d2 =
            (-p[i - 2] + 16.0 * p[i - 1] - 30.0 * p[i] + 16.0 * p[i + 1] - p[i + 2]) /
            (12.0 * h * h);
        worst = std::fmax(worst, std::abs(d2 + s * (E - potential(grid[i])) * p[i]));
    }
    OracleReport rep;
    rep.residual_max = pmax > 0.0 ? worst / pmax : worst;
    rep.grid = std::to_string(grid.size()) + " points, h = " + std::to_string(h);
    return rep;
}

double fd_schwarzian(const CoordinateMap& map, double r) {
    const double h = 3e-3 * (1.0 + std::fabs(r));
    const double rm2 = map.inverse(r - 2.0 * h), rm1 = map.inverse(r - h);
    const double rc = map.inverse(r);
    const double rp1 = map.inverse(r + h), rp2 = map.inverse(r + 2.0 * h);
    const double d1 = (rp1 - rm1) / (2.0 * h);
    const double d2 = (rp1 - 2.0 * rc + rm1) / (h * h);
    const double d3 = (rp2 - 2.0 * rp1 + 2.0 * rm1 - rm2) / (2.0 * h * h * h);
    return d3 / d1 - 1.5 * (d2 / d1) * (d2 / d1);
}

}  // namespace heunpot
