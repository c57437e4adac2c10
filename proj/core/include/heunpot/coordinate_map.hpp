#pragma once

#include <limits>

#include "heunpot/params.hpp"

namespace heunpot {

/// Open interval; +-infinity endpoints allowed.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool contains(double x) const { return x > lo && x < hi; }
    double width() const { return hi - lo; }
};

enum class InversionMode { ClosedForm, MonotoneRootFind };

/// Realization of the coordinate transformation rho <-> r defined by
/// rho'(r) = 1/sqrt(I1(rho)), taking the positive square root so that
/// rho is increasing in r.
///
/// The additive constant of the r(rho) antiderivative is fixed so that
/// r -> 0 at the infimum of the rho-domain when that infimum is finite;
/// otherwise r(anchor_rho) = 0 at the reported anchor (the vertex of I1
/// for the Delta < 0 case, rho = 0 for the linear/constant cases).
class CoordinateMap {
public:
    static CoordinateMap create(const HeunSixParams& p);

    CaseTag tag() const { return tag_; }
    const HeunSixParams& params() const { return params_; }
    Interval rho_domain() const { return rho_domain_; }
    Interval r_domain() const { return r_domain_; }
    bool covers_positive_axis() const { return covers_positive_axis_; }
    InversionMode inversion_mode() const { return mode_; }
    double anchor_rho() const { return anchor_rho_; }

    /// r(rho); DomainError outside rho_domain.
    double forward(double rho) const;

    /// rho(r); closed form where available, otherwise bracketed monotone
    /// root finding on forward() (relative tolerance 1e-12, 200 iterations).
    double inverse(double r) const;

    /// Leading large-r approximant of rho(r) for this case.  For the
    /// DeltaPos_b2Neg case (finite r-image) the relevant edge is
    /// r -> sup(r_domain) and the approximant is the interior expansion
    /// about rho2.  No domain check: caller chooses a sensible regime.
    double inverse_asymptotic(double r) const;

private:
    CoordinateMap() = default;

    double forward_raw(double rho) const;  // antiderivative before anchoring

    HeunSixParams params_{};
    CaseTag tag_{};
    Interval rho_domain_{};
    Interval r_domain_{};
    bool covers_positive_axis_ = false;
    InversionMode mode_ = InversionMode::ClosedForm;
    double anchor_rho_ = 0.0;
    double offset_ = 0.0;    // r(rho) = forward_raw(rho) - offset_
    double rho1_ = 0.0, rho2_ = 0.0;  // roots of I1 when Delta > 0
};

}  // namespace heunpot
