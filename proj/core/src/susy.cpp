#include "heunpot/susy.hpp"

#include <cmath>

#include "heunpot/oracle.hpp"

namespace heunpot {

Superpotential::Superpotential(const CanonicalParams& p, double c1, int series_order)
    : params_(p), c1_(c1) {
    t1_ = t1_coeffs(p, series_order);
    t1_flip_ = t1_coeffs({p.alpha, -p.beta, p.gamma}, series_order);
}

Superpotential::Parts Superpotential::parts(double rho) const {
    // u1 = e^{f} T1(rho), u2 = e^{-f} T1~(-rho); f' = -(gamma + 3 rho^2)/2, f'' = -3 rho
    const double f = params_.f(rho);
    const double fd = params_.f_dot(rho);
    const double fdd = -3.0 * rho;
    const double ef = std::exp(f), emf = std::exp(-f);

    const double T = t1_.eval(rho);
    const double dT = t1_.eval_derivative(rho);
    const double ddT = t1_.eval_second_derivative(rho);
    const double u1 = ef * T;
    const double du1 = ef * (fd * T + dT);
    const double ddu1 = ef * ((fd * fd + fdd) * T + 2.0 * fd * dT + ddT);

    Parts q{u1, du1, ddu1};
    if (c1_ != 0.0) {
        const double Tf = t1_flip_.eval(-rho);
        const double dTf = t1_flip_.eval_derivative(-rho);   // dT~/dsigma at -rho
        const double ddTf = t1_flip_.eval_second_derivative(-rho);
        const double u2 = emf * Tf;
        // d/drho [T~(-rho)] = -dT~(-rho), d^2/drho^2 = +ddT~(-rho)
        const double du2 = emf * (-fd * Tf - dTf);
        const double ddu2 = emf * ((fd * fd - fdd) * Tf + 2.0 * fd * dTf + ddTf);
        q.u += c1_ * u2;
        q.du += c1_ * du2;
        q.ddu += c1_ * ddu2;
    }
    return q;
}

void Superpotential::check_node(double rho, const Parts& q) const {
    // distance to the movable pole estimated as |u/u'|
    if (q.du != 0.0 && std::fabs(q.u / q.du) < 1e-3)
        fail(Errc::NodeSingularity,
             "rho = " + std::to_string(rho) + " lies within the node exclusion radius");
    if (q.u == 0.0) fail(Errc::NodeSingularity, "denominator vanishes");
}

double Superpotential::value(double rho) const {
    const Parts q = parts(rho);
    check_node(rho, q);
    return q.du / q.u;
}

double Superpotential::derivative(double rho) const {
    const Parts q = parts(rho);
    check_node(rho, q);
    const double w = q.du / q.u;
    return q.ddu / q.u - w * w;
}

double Superpotential::riccati_residual(double rho) const {
    const Parts q = parts(rho);
    check_node(rho, q);
    // W' + W^2 = u''/u
    return q.ddu / q.u - params_.omega(rho);
}

std::pair<double, double> Superpotential::partner_potentials(double rho) const {
    const Parts q = parts(rho);
    check_node(rho, q);
    const double w = q.du / q.u;
    const double wd = q.ddu / q.u - w * w;
    return {w * w - wd, w * w + wd};
}

double Superpotential::denominator(double rho) const { return parts(rho).u; }

double Superpotential::denominator_derivative(double rho) const { return parts(rho).du; }

double Superpotential::zero_mode_minus(double rho) const {
    const Parts q = parts(rho);
    if (q.u == 0.0) fail(Errc::NodeSingularity, "denominator vanishes");
    return 1.0 / q.u;
}

bool Superpotential::near_node(double rho) const {
    const Parts q = parts(rho);
    return q.u == 0.0 || (q.du != 0.0 && std::fabs(q.u / q.du) < 1e-3);
}

std::vector<double> Superpotential::nodes(Interval window, int grid_points) const {
    std::vector<double> out;
    double prev_rho = window.lo;
    double prev = parts(prev_rho).u;
    for (int i = 1; i <= grid_points; ++i) {
        const double rho = window.lo + window.width() * i / grid_points;
        const double cur = parts(rho).u;
        if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) {
            double lo = prev_rho, hi = rho, flo = prev;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = parts(mid).u;
                if ((fm > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.push_back(0.5 * (lo + hi));
        }
        prev = cur;
        prev_rho = rho;
    }
    return out;
}

GroundStateReport ground_state_energy_check(const Superpotential& w, Interval domain) {
    GroundStateReport rep;
    const auto node_list = w.nodes(domain);
    rep.zero_mode_nodeless = node_list.empty();

    // tail decay of 1/u: compare |1/u| at the edges against the interior max
    const int n = 400;
    double interior_max = 0.0;
    for (int i = 1; i < n; ++i) {
        const double rho = domain.lo + domain.width() * i / n;
        const double v = std::fabs(w.zero_mode_minus(rho));
        if (std::isfinite(v)) interior_max = std::fmax(interior_max, v);
    }
    const double edge = std::fmax(std::fabs(w.zero_mode_minus(domain.lo + 1e-3)),
                                  std::fabs(w.zero_mode_minus(domain.hi - 1e-3)));
    rep.zero_mode_decays = interior_max > 0.0 && edge < 1e-3 * interior_max;
    rep.unbroken_indicated = rep.zero_mode_nodeless && rep.zero_mode_decays;

    if (rep.zero_mode_nodeless) {
        // V- is pole-free on the domain; shoot for the lowest level of H-
        auto vminus = [&w](double rho) { return w.partner_potentials(rho).first; };
        try {
            rep.h_minus_lowest = shoot_eigenvalues(vminus, domain, 1).front();
            rep.h_minus_valid = true;
        } catch (const Error&) {
            rep.h_minus_valid = false;
        }
    }
    return rep;
}

}  // namespace heunpot
