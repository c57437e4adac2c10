#pragma once

#include <string>
#include <vector>

#include "heunpot/coordinate_map.hpp"

namespace heunpot {

enum class FamilyKind { V1, V2Variant, V3, V4, V5, General };

const char* to_string(FamilyKind k);

/// Named closed-form coefficients of an analyzed potential family, computed
/// from the six parameters.  eval() is the family's closed form in r and is
/// only available for the named kinds (UnsupportedFamily otherwise); the
/// general case goes through v_eff().
struct PotentialFamily {
    FamilyKind kind = FamilyKind::General;
    HeunSixParams params;
    std::vector<std::pair<std::string, double>> coeffs;

    double coeff(const std::string& name) const;
    double eval(double r) const;
};

/// Maps a case tag onto its analyzed family and computes the coefficient
/// list; cases without a named family fall back to kind == General with an
/// empty list.
PotentialFamily family_coefficients(const HeunSixParams& p, CaseTag tag);

/// V_eff at the mapped point rho = inverse(r):
///   -I0/I1 - (12 b2^2 rho^2 + 12 b1 b2 rho + 5 b1^2 - 8 b0 b2)/(16 I1^3).
/// SingularPoint when |I1| < 1e-14 (1 + rho^2).
double v_eff(const HeunSixParams& p, const CoordinateMap& map, double r);

/// Same expression as a function of rho (no coordinate map involved).
double v_eff_at_rho(const HeunSixParams& p, double rho);

/// Schwarzian derivative of the transformation, expressed through I1:
///   S(rho) = (5 I1'^2 - 4 I1 I1'') / (8 I1^3).
double schwarzian_via_i1(const HeunSixParams& p, double rho);

struct CriticalPoint {
    enum class Kind { Minimum, Maximum, Inflection };
    double tau;   // root of the substituted polynomial
    double r;     // mapped radial position (may be <= 0 for V1 roots below sqrt(b0))
    double value; // family potential at r (NaN when r is outside the closed form)
    Kind kind;
};

/// Descartes analysis of the critical-point equation after the family's
/// variable substitution (u = sqrt(b0 + 2 sqrt(b2) r) for V1, tau = sqrt(r)
/// for V3, r = tau^{3/2} for V4, r = tau^{3/4} for V5).  Roots are isolated
/// by sign-change bracketing on [0, Cauchy bound] and bisected to 1e-10;
/// classification is by second central difference of the family value.
struct CriticalPointReport {
    std::vector<double> poly;  // ascending coefficients of the substituted polynomial
    int sign_changes = 0;
    std::vector<int> possible_counts;  // {s, s-2, ...}
    std::vector<CriticalPoint> points;
};

CriticalPointReport critical_points(const PotentialFamily& family);

}  // namespace heunpot
