#pragma once

#include <vector>

#include "heunpot/canonical.hpp"
#include "heunpot/coordinate_map.hpp"

namespace heunpot {

enum class SeriesKind { T1, T2, PolyW };

/// Taylor solution of the canonical equation carried as a coefficient
/// stream.  T1 = sum e_n rho^n (y(0)=1, y'(0)=0); T2 = sum s_n rho^{n+1}
/// (y(0)=0, y'(0)=1).  Evaluation uses compensated summation and stops at
/// the first n where three consecutive terms satisfy
/// |term| <= 1e-16 (1 + |partial|); TruncationError if the stored
/// coefficients run out first.
struct SeriesSolution {
    SeriesKind kind = SeriesKind::T1;
    CanonicalParams params;
    std::vector<double> coeffs;

    double eval(double rho) const;
    double eval_derivative(double rho) const;
    double eval_second_derivative(double rho) const;
};

inline constexpr int kSeriesHardCap = 500;

SeriesSolution t1_coeffs(const CanonicalParams& p, int n_max = kSeriesHardCap);
SeriesSolution t2_coeffs(const CanonicalParams& p, int n_max = kSeriesHardCap);

double eval_series(const SeriesSolution& s, double rho);

/// gamma T2(a,b,g;rho) + T1(a,b,g;rho) - e^{rho^3+gamma rho} T1(a,-b,g;-rho)
double decarreau_identity_residual(const CanonicalParams& p, double rho);

/// psi(r) = I1(rho)^{1/4} exp((A2/3) rho - rho^3/2) [cT1 T1(rho) + cT2 T2(rho)]
/// at rho = rho(r), with A_i = a_i + E b_i.
double assemble_wavefunction(const HeunSixParams& p, double E, const CoordinateMap& map,
                             double cT1, double cT2, double r);

/// Same assembly against prebuilt series (params/E implied by t1.params).
double assemble_wavefunction(const SeriesSolution& t1, const SeriesSolution& t2,
                             const HeunSixParams& p, const CoordinateMap& map,
                             double cT1, double cT2, double r);

}  // namespace heunpot
