#pragma once

#include "heunpot/params.hpp"

namespace heunpot {

/// Parameters of the canonical triconfluent Heun form
///   y'' - (gamma + 3 rho^2) y' + [alpha + (beta - 3) rho] y = 0,
/// reached from v'' + (A0 + A1 rho + A2 rho^2 - (9/4) rho^4) v = 0 by the
/// substitution v = exp((A2/3) rho - rho^3/2) y with
///   alpha = A0 + A2^2/9,  beta = A1,  gamma = -(2/3) A2.
struct CanonicalParams {
    double alpha = 0, beta = 0, gamma = 0;

    double A0() const { return alpha - 0.25 * gamma * gamma; }
    double A1() const { return beta; }
    double A2() const { return -1.5 * gamma; }

    /// Omega(rho) = -A0 - A1 rho - A2 rho^2 + (9/4) rho^4 (normal-form barrier)
    double omega(double rho) const {
        const double r2 = rho * rho;
        return -A0() - rho * (A1() + rho * A2()) + 2.25 * r2 * r2;
    }

    /// f(rho) = -(gamma/2) rho - rho^3/2, the exponent of the canonical substitution
    double f(double rho) const { return -0.5 * rho * (gamma + rho * rho); }
    double f_dot(double rho) const { return -0.5 * (gamma + 3.0 * rho * rho); }
};

inline CanonicalParams canonicalize(double A0, double A1, double A2) {
    return {A0 + A2 * A2 / 9.0, A1, -2.0 / 3.0 * A2};
}

/// Canonical parameters of the family member at energy E (A_i = a_i + E b_i).
inline CanonicalParams canonical_at_energy(const HeunSixParams& p, double E) {
    return canonicalize(p.a0 + E * p.b0, p.a1 + E * p.b1, p.a2 + E * p.b2);
}

}  // namespace heunpot
