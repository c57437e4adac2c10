#pragma once

#include <utility>
#include <vector>

#include "heunpot/series.hpp"

namespace heunpot {

/// Superpotential solving the Riccati equation W' + W^2 = Omega, built from
/// the two normal-form solutions
///   u1 = e^{f} T1(a,b,g; rho),   u2 = e^{-f} T1(a,-b,g; -rho),
/// as W = (u1' + c1 u2')/(u1 + c1 u2) = (1/6)(e^f F - c1 e^{-f} F~)/(e^f T1 + c1 e^{-f} T1~)
/// with F = -3(gamma+3rho^2) T1 + 6 T1'.  Zeros of the denominator are
/// movable poles (node singularities); evaluation inside an exclusion
/// radius of 1e-3 (estimated as |u/u'|) raises NodeSingularity.
///
/// All derivatives come from term-wise differentiated series.
class Superpotential {
public:
    Superpotential(const CanonicalParams& p, double c1, int series_order = kSeriesHardCap);

    const CanonicalParams& params() const { return params_; }
    double c1() const { return c1_; }

    double omega(double rho) const { return params_.omega(rho); }

    double value(double rho) const;        // W
    double derivative(double rho) const;   // W' (series route)
    double riccati_residual(double rho) const;  // W' + W^2 - Omega

    /// (V-, V+) = (W^2 - W', W^2 + W'); V+ coincides with Omega.
    std::pair<double, double> partner_potentials(double rho) const;

    /// denominator u = e^f T1 + c1 e^{-f} T1~(-rho) and its derivative
    double denominator(double rho) const;
    double denominator_derivative(double rho) const;

    /// candidate zero mode of the partner Hamiltonian, 1/u
    double zero_mode_minus(double rho) const;

    bool near_node(double rho) const;
    std::vector<double> nodes(Interval window, int grid_points = 2000) const;

private:
    struct Parts {
        double u, du, ddu;  // denominator and series derivatives
    };
    Parts parts(double rho) const;
    void check_node(double rho, const Parts& q) const;

    CanonicalParams params_;
    double c1_;
    SeriesSolution t1_;       // T1(alpha, beta, gamma; .)
    SeriesSolution t1_flip_;  // T1(alpha, -beta, gamma; .)
};

/// Numerical evidence about the partner ground state: whether 1/u is a
/// normalizable zero mode (no nodes, decaying tails) and the lowest
/// eigenvalue of H- = -d^2/drho^2 + V- from the shooting solver.
struct GroundStateReport {
    bool zero_mode_nodeless = false;
    bool zero_mode_decays = false;
    bool unbroken_indicated = false;  // both of the above
    double h_minus_lowest = 0.0;
    bool h_minus_valid = false;  // false when V- has poles inside the domain
};

GroundStateReport ground_state_energy_check(const Superpotential& w, Interval domain);

}  // namespace heunpot
