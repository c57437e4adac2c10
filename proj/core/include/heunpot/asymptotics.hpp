#pragma once

#include <array>
#include <complex>
#include <vector>

#include "heunpot/canonical.hpp"

namespace heunpot {

struct CompanionState {
    int n = 0;
    std::array<double, 3> z{};  // (w_n, w_{n+1}, w_{n+2})
};

/// Z_{n+1} = A(n) Z_n with the companion matrix of the third-order
/// recurrence, Z_0 = (1, gamma, (gamma^2-alpha)/2).  Component 0 reproduces
/// w_sequence bit for bit (the bottom row is evaluated in the same order).
std::vector<CompanionState> propagate(const CanonicalParams& p, int n_max);

/// Companion propagation carrying (mantissa, log-scale) pairs so ratios stay
/// meaningful after w_n underflows (superexponential decay).
struct ScaledSequence {
    std::vector<double> mantissa;   // w_n / exp(log_scale[n])
    std::vector<double> log_scale;

    double value(int n) const;      // may underflow to 0 for large n
    double log_abs(int n) const;    // -inf when w_n = 0
    int sign(int n) const;
};

ScaledSequence propagate_scaled(const CanonicalParams& p, int n_max);

/// Casorati determinant of three solutions at index n, next to the Abel
/// prediction W_n = (-1)^{3n} prod_{k<n} pi3(k) W_0
///            = 2 (-1)^{3n} (n+2)/((n+2)!)^2 (beta-3)(beta-6)...(beta-3n) W_0.
/// The direct recurrence W_{n+1} = -pi3(n) W_n matches this with global
/// sign +1; no extra convention factor is applied.
struct CasoratianPair {
    double direct;
    double predicted;
};

CasoratianPair casoratian(const CanonicalParams& p,
                          const std::array<std::vector<double>, 3>& solutions, int n, double W0);

/// max |w_n| over the last 10% of indices up to n_max (Theorem-style limit
/// check; expected to tend to 0).
double limit_tail_max(const CanonicalParams& p, int n_max);

/// Birkhoff expansion of the recurrence solutions:
///   w^(k)_n ~ (3e/n)^{n/3} n^{-5/6-beta/9} e^{phase_k(n)} [1 + c-terms],
/// k = 0 real-directed, k = 1,2 the complex-rotated branches.
struct BirkhoffExpansion {
    CanonicalParams params;
    double theta;  // -5/6 - beta/9
    double c1, c2, c3;

    /// Branch k in {0,1,2}, first `terms` corrections (0..3).
    std::complex<double> eval(int branch, int n, int terms) const;

    /// log of the k = 0 branch magnitude including corrections (real branch).
    double log_abs_k0(int n, int terms) const;
};

BirkhoffExpansion birkhoff(const CanonicalParams& p);

}  // namespace heunpot
