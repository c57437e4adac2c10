#pragma once

#include <cmath>
#include <cstdlib>

#include "heunpot/errors.hpp"

namespace heunpot {

/// Six-parameter family identifying a potential in the class.  The Bose
/// invariant of the normal-form ODE splits as I(rho) = I0(rho) + E*I1(rho)
/// with
///   I0(rho) = a0 + a1 rho + a2 rho^2 - (9/4) rho^4,
///   I1(rho) = b0 + b1 rho + b2 rho^2.
struct HeunSixParams {
    double a0 = 0, a1 = 0, a2 = 0;  // potential-shaping coefficients
    double b0 = 0, b1 = 0, b2 = 0;  // energy-coupling coefficients

    double delta() const { return b1 * b1 - 4.0 * b0 * b2; }

    double i0(double rho) const {
        const double r2 = rho * rho;
        return a0 + rho * (a1 + rho * a2) - 2.25 * r2 * r2;
    }
    double i1(double rho) const { return b0 + rho * (b1 + rho * b2); }
    double i1_dot(double rho) const { return b1 + 2.0 * b2 * rho; }

    bool valid() const { return b0 != 0.0 || b1 != 0.0 || b2 != 0.0; }
};

/// Case of the coordinate-transformation ODE, a function of the sign
/// pattern of (b0, b1, b2, Delta) with Delta = b1^2 - 4 b0 b2.
///
/// Delta == 0 is decided with a relative snap tolerance of 1e-12 on
/// max(b1^2, 4|b0 b2|) so that members built from b1 = +-2*sqrt(b0*b2)
/// classify as intended despite rounding.
enum class CaseTag {
    DeltaNegB2Pos,     // Delta < 0 (forces b0,b2 > 0); rho-domain = R
    DeltaZeroB1Pos,    // Delta = 0, b1 > 0, b0,b2 > 0
    DeltaZeroB1Neg,    // Delta = 0, b1 < 0, b0,b2 > 0
    DeltaZeroB0B1Zero, // b0 = b1 = 0, b2 > 0
    DeltaPosB2Pos,     // Delta > 0, b2 > 0; branch (rho2, inf)
    DeltaPosB2Neg,     // Delta > 0, b2 < 0; rho-domain (rho1, rho2)
    LinearB2Zero,      // b2 = 0, b1 != 0, b0 != 0
    LinearB0B2Zero,    // b0 = b2 = 0, b1 != 0
    ConstantB1B2Zero,  // b1 = b2 = 0, b0 > 0
};

const char* to_string(CaseTag tag);

/// Classifies params by the sign pattern of (b0, b1, b2, Delta).
/// Throws InfeasibleCase when no rho-interval with I1 > 0 exists
/// (b2 < 0 with Delta <= 0, or b1 = b2 = 0 with b0 <= 0) and
/// InvalidParams when all b_i vanish.
CaseTag classify(const HeunSixParams& p);

inline const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::DeltaNegB2Pos: return "DeltaNeg_b2Pos";
        case CaseTag::DeltaZeroB1Pos: return "DeltaZero_b1Pos";
        case CaseTag::DeltaZeroB1Neg: return "DeltaZero_b1Neg";
        case CaseTag::DeltaZeroB0B1Zero: return "DeltaZero_b0b1Zero";
        case CaseTag::DeltaPosB2Pos: return "DeltaPos_b2Pos";
        case CaseTag::DeltaPosB2Neg: return "DeltaPos_b2Neg";
        case CaseTag::LinearB2Zero: return "Linear_b2Zero";
        case CaseTag::LinearB0B2Zero: return "Linear_b0b2Zero";
        case CaseTag::ConstantB1B2Zero: return "Constant_b1b2Zero";
    }
    return "?";
}

inline CaseTag classify(const HeunSixParams& p) {
    if (!p.valid())
        fail(Errc::InvalidParams, "I1 is identically zero (b0 = b1 = b2 = 0)");

    if (p.b2 == 0.0) {
        if (p.b1 != 0.0)
            return p.b0 == 0.0 ? CaseTag::LinearB0B2Zero : CaseTag::LinearB2Zero;
        if (p.b0 > 0.0) return CaseTag::ConstantB1B2Zero;
        fail(Errc::InfeasibleCase, "I1 = b0 <= 0 everywhere");
    }

    const double delta = p.delta();
    const double scale = std::fmax(p.b1 * p.b1, 4.0 * std::fabs(p.b0 * p.b2));
    if (std::fabs(delta) <= 1e-12 * scale) {
        if (p.b2 < 0.0)
            fail(Errc::InfeasibleCase, "Delta = 0 with b2 < 0: I1 <= 0 everywhere");
        if (p.b1 > 0.0) return CaseTag::DeltaZeroB1Pos;
        if (p.b1 < 0.0) return CaseTag::DeltaZeroB1Neg;
        return CaseTag::DeltaZeroB0B1Zero;  // b1 = 0 forces b0 = 0
    }
    if (delta < 0.0) {
        if (p.b2 < 0.0)
            fail(Errc::InfeasibleCase, "Delta < 0 with b2 < 0: I1 < 0 everywhere");
        return CaseTag::DeltaNegB2Pos;
    }
    return p.b2 > 0.0 ? CaseTag::DeltaPosB2Pos : CaseTag::DeltaPosB2Neg;
}

}  // namespace heunpot
