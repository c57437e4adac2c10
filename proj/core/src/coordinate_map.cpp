#include "heunpot/coordinate_map.hpp"

#include <algorithm>
#include <cmath>

namespace heunpot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInverseTol = 1e-12;
constexpr int kInverseMaxIter = 200;

}  // namespace

CoordinateMap CoordinateMap::create(const HeunSixParams& p) {
    CoordinateMap m;
    m.params_ = p;
    m.tag_ = classify(p);

    const double b0 = p.b0, b1 = p.b1, b2 = p.b2;
    switch (m.tag_) {
        case CaseTag::DeltaNegB2Pos: {
            m.rho_domain_ = {-kInf, kInf};
            m.anchor_rho_ = -b1 / (2.0 * b2);  // vertex of I1; raw antiderivative is 0 there
            m.offset_ = m.forward_raw(m.anchor_rho_);
            m.r_domain_ = {-kInf, kInf};
            m.covers_positive_axis_ = true;
            m.mode_ = InversionMode::MonotoneRootFind;
            break;
        }
        case CaseTag::DeltaZeroB1Pos: {
            // I1 = (sqrt(b2) rho + sqrt(b0))^2, rho > -sqrt(b0/b2); r(0) = 0.
            m.rho_domain_ = {-std::sqrt(b0 / b2), kInf};
            m.anchor_rho_ = 0.0;
            m.offset_ = 0.0;
            m.r_domain_ = {-b0 / (2.0 * std::sqrt(b2)), kInf};
            m.covers_positive_axis_ = true;
            m.mode_ = InversionMode::ClosedForm;
            break;
        }
        case CaseTag::DeltaZeroB1Neg: {
            // I1 = (sqrt(b2) rho - sqrt(b0))^2, rho > sqrt(b0/b2); r = 0 at 2 sqrt(b0/b2).
            m.rho_domain_ = {std::sqrt(b0 / b2), kInf};
            m.anchor_rho_ = 2.0 * std::sqrt(b0 / b2);
            m.offset_ = 0.0;  // raw form already vanishes at the anchor
            m.r_domain_ = {-b0 / (2.0 * std::sqrt(b2)), kInf};
            m.covers_positive_axis_ = true;
            m.mode_ = InversionMode::ClosedForm;
            break;
        }
        case CaseTag::DeltaZeroB0B1Zero: {
            m.rho_domain_ = {0.0, kInf};
            m.anchor_rho_ = 0.0;
            m.offset_ = 0.0;
            m.r_domain_ = {0.0, kInf};
            m.covers_positive_axis_ = true;
            m.mode_ = InversionMode::ClosedForm;
            break;
        }
        case CaseTag::DeltaPosB2Pos: {
            const double sd = std::sqrt(p.delta());
            m.rho1_ = (-b1 - sd) / (2.0 * b2);
            m.rho2_ = (-b1 + sd) / (2.0 * b2);
            m.rho_domain_ = {m.rho2_, kInf};
            m.anchor_rho_ = m.rho2_;
            // raw form -> -Delta/(8 b2^{3/2}) ln(sqrt(Delta)) as rho -> rho2+
            m.offset_ = -p.delta() / (8.0 * b2 * std::sqrt(b2)) * std::log(sd);
            m.r_domain_ = {0.0, kInf};
            m.covers_positive_axis_ = true;
            m.mode_ = InversionMode::MonotoneRootFind;
            break;
        }
        case CaseTag::DeltaPosB2Neg: {
            const double sd = std::sqrt(p.delta());
            m.rho1_ = (-b1 + sd) / (2.0 * b2);  // b2 < 0 flips the order
            m.rho2_ = (-b1 - sd) / (2.0 * b2);
            m.rho_domain_ = {m.rho1_, m.rho2_};
            m.anchor_rho_ = m.rho1_;
            m.offset_ = p.delta() / (8.0 * b2 * std::sqrt(-b2)) * (std::asin(1.0));
            const double span = M_PI * p.delta() / (8.0 * std::pow(-b2, 1.5));
            m.r_domain_ = {0.0, span};
            m.covers_positive_axis_ = false;
            m.mode_ = InversionMode::MonotoneRootFind;
            break;
        }
        case CaseTag::LinearB2Zero:
        case CaseTag::LinearB0B2Zero: {
            if (b1 > 0.0) {
                m.rho_domain_ = {-b0 / b1, kInf};
                m.r_domain_ = {0.0, kInf};
                m.covers_positive_axis_ = true;
                m.anchor_rho_ = -b0 / b1;
            } else {
                // I1 > 0 on rho < -b0/b1; the image is bounded above.
                m.rho_domain_ = {-kInf, -b0 / b1};
                m.anchor_rho_ = (1.0 - b0) / b1;  // I1 = 1 there
                m.covers_positive_axis_ = false;
            }
            m.offset_ = m.forward_raw(m.anchor_rho_);
            if (b1 < 0.0) m.r_domain_ = {-kInf, m.forward_raw(m.rho_domain_.hi) - m.offset_};
            m.mode_ = InversionMode::ClosedForm;
            break;
        }
        case CaseTag::ConstantB1B2Zero: {
            m.rho_domain_ = {-kInf, kInf};
            m.anchor_rho_ = 0.0;
            m.offset_ = 0.0;
            m.r_domain_ = {-kInf, kInf};
            m.covers_positive_axis_ = true;
            m.mode_ = InversionMode::ClosedForm;
            break;
        }
    }
    return m;
}

double CoordinateMap::forward_raw(double rho) const {
    const double b0 = params_.b0, b1 = params_.b1, b2 = params_.b2;
    switch (tag_) {
        case CaseTag::DeltaNegB2Pos: {
            const double i1 = params_.i1(rho);
            const double delta = params_.delta();
            return 0.5 * (rho + b1 / (2.0 * b2)) * std::sqrt(i1) -
                   delta / (8.0 * b2 * std::sqrt(b2)) *
                       std::asinh((2.0 * b2 * rho + b1) / std::sqrt(-delta));
        }
        case CaseTag::DeltaZeroB1Pos:
            return 0.5 * std::sqrt(b2) * rho * rho + std::sqrt(b0) * rho;
        case CaseTag::DeltaZeroB1Neg:
            return 0.5 * std::sqrt(b2) * rho * rho - std::sqrt(b0) * rho;
        case CaseTag::DeltaZeroB0B1Zero:
            return 0.5 * std::sqrt(b2) * rho * rho;
        case CaseTag::DeltaPosB2Pos: {
            const double i1 = params_.i1(rho);
            const double delta = params_.delta();
            return 0.5 * (rho + b1 / (2.0 * b2)) * std::sqrt(i1) -
                   delta / (8.0 * b2 * std::sqrt(b2)) *
                       std::log(2.0 * std::sqrt(b2 * i1) + 2.0 * b2 * rho + b1);
        }
        case CaseTag::DeltaPosB2Neg: {
            const double i1 = std::fmax(params_.i1(rho), 0.0);
            const double delta = params_.delta();
            return 0.5 * (rho + b1 / (2.0 * b2)) * std::sqrt(i1) +
                   delta / (8.0 * b2 * std::sqrt(-b2)) *
                       std::asin(std::clamp((2.0 * b2 * rho + b1) / std::sqrt(delta), -1.0, 1.0));
        }
        case CaseTag::LinearB2Zero:
        case CaseTag::LinearB0B2Zero:
            return 2.0 / (3.0 * b1) * std::pow(b1 * rho + b0, 1.5);
        case CaseTag::ConstantB1B2Zero:
            return std::sqrt(b0) * rho;
    }
    return 0.0;
}

double CoordinateMap::forward(double rho) const {
    if (!(rho > rho_domain_.lo && rho < rho_domain_.hi) &&
        !(rho == rho_domain_.lo && std::isfinite(rho_domain_.lo)) &&
        !(rho == rho_domain_.hi && std::isfinite(rho_domain_.hi)))
        fail(Errc::DomainError, "rho outside the map's rho-domain");
    return forward_raw(rho) - offset_;
}

double CoordinateMap::inverse(double r) const {
    if (!(r > r_domain_.lo && r < r_domain_.hi))
        fail(Errc::DomainError, "r outside the map's r-domain");

    const double b0 = params_.b0, b1 = params_.b1, b2 = params_.b2;
    switch (tag_) {
        case CaseTag::DeltaZeroB1Pos:
            // (-sqrt(b0)+sqrt(b0+2 sqrt(b2) r))/sqrt(b2), written cancellation-free
            return 2.0 * r / (std::sqrt(b0) + std::sqrt(b0 + 2.0 * std::sqrt(b2) * r));
        case CaseTag::DeltaZeroB1Neg:
            return (std::sqrt(b0) + std::sqrt(b0 + 2.0 * std::sqrt(b2) * r)) / std::sqrt(b2);
        case CaseTag::DeltaZeroB0B1Zero:
            return std::sqrt(2.0 * r / std::sqrt(b2));
        case CaseTag::LinearB2Zero:
        case CaseTag::LinearB0B2Zero: {
            const double base = forward_raw(anchor_rho_) * 1.5 * b1 + 1.5 * b1 * r;
            // (b1 rho + b0)^{3/2} = 1.5 b1 (r + offset-part); invert directly
            return (std::cbrt(base * base) - b0) / b1;
        }
        case CaseTag::ConstantB1B2Zero:
            return r / std::sqrt(b0);
        default:
            break;
    }

    // Bracketed bisection refined by secant steps on the monotone forward map.
    double lo, hi;
    if (tag_ == CaseTag::DeltaPosB2Neg) {
        lo = rho1_;
        hi = rho2_;
    } else {
        const double start = std::isfinite(rho_domain_.lo) ? rho_domain_.lo : anchor_rho_;
        double step = 1.0;
        lo = start;
        hi = start + step;
        while (forward_raw(hi) - offset_ < r) {
            lo = hi;
            step *= 2.0;
            hi = start + step;
            if (step > 1e18) fail(Errc::ConvergenceError, "bracket expansion failed");
        }
        if (std::isinf(rho_domain_.lo)) {
            step = 1.0;
            while (forward_raw(lo) - offset_ > r) {
                hi = lo;
                lo = start - step;
                step *= 2.0;
                if (step > 1e18) fail(Errc::ConvergenceError, "bracket expansion failed");
            }
        }
    }

    double flo = forward_raw(lo) - offset_ - r;
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < kInverseMaxIter; ++it) {
        const double fx = forward_raw(x) - offset_ - r;
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        if (hi - lo <= kInverseTol * (1.0 + std::fabs(lo) + std::fabs(hi))) return 0.5 * (lo + hi);
        // secant proposal, falling back to bisection when it leaves the bracket
        const double fhi = forward_raw(hi) - offset_ - r;
        double xs = (fhi != flo) ? (lo * fhi - hi * flo) / (fhi - flo) : 0.5 * (lo + hi);
        if (!(xs > lo && xs < hi)) xs = 0.5 * (lo + hi);
        x = xs;
    }
    fail(Errc::ConvergenceError, "inverse map root finding exceeded the iteration cap");
}

double CoordinateMap::inverse_asymptotic(double r) const {
    const double b0 = params_.b0, b1 = params_.b1, b2 = params_.b2;
    switch (tag_) {
        case CaseTag::DeltaNegB2Pos:
        case CaseTag::DeltaZeroB1Pos:
        case CaseTag::DeltaZeroB1Neg:
        case CaseTag::DeltaZeroB0B1Zero:
        case CaseTag::DeltaPosB2Pos:
            return std::sqrt(2.0 * r / std::sqrt(b2));
        case CaseTag::DeltaPosB2Neg: {
            // interior expansion about rho2 as r -> sup(r_domain)
            const double rem = std::fmax(r_domain_.hi - r, 0.0);
            return rho2_ - std::pow(1.5 * rem, 2.0 / 3.0) /
                               std::cbrt(-b2 * (rho2_ - rho1_));
        }
        case CaseTag::LinearB2Zero:
        case CaseTag::LinearB0B2Zero:
            return -b0 / b1 + std::cbrt(std::pow(1.5 * b1 * r, 2.0)) / b1;
        case CaseTag::ConstantB1B2Zero:
            return r / std::sqrt(b0);
    }
    return 0.0;
}

}  // namespace heunpot
