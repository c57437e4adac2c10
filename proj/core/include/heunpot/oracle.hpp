#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heunpot/coordinate_map.hpp"

namespace heunpot {

using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dy)>;

struct Trajectory {
    std::vector<double> t;
    std::vector<std::vector<double>> y;  // state at each requested output point
};

/// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) with local error per
/// step <= tol; steps are clipped to land exactly on the requested output
/// points.  StepUnderflow when the controller stalls.
Trajectory integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double t0,
                         std::span<const double> t_out, double tol);

/// Convenience for scalar second-order problems y'' = g(t, y, y').
Trajectory integrate_second_order(const std::function<double(double, double, double)>& g,
                                  double y0, double dy0, double t0,
                                  std::span<const double> t_out, double tol);

/// Dirichlet eigenvalues of -v'' + V(x) v = E v on [domain.lo, domain.hi],
/// lowest n_levels, by node-counting bisection on the shooting terminal
/// value with running renormalization (log-derivative information survives
/// under the barrier).  The solution may start with a power-law boundary
/// index s: v ~ (x - lo)^s near the left edge (s = 1 is plain Dirichlet).
std::vector<double> shoot_eigenvalues(const std::function<double(double)>& potential,
                                      Interval domain, int n_levels, double left_index = 1.0,
                                      double tol = 1e-10);

/// The quartic boundary problem -v'' + P(rho) v = E v, v(+-L) = 0 with
/// P(rho) = (9/4) rho^4 - a2 rho^2 - a1 rho - a0.  CutoffTooSmall when the
/// barrier at +-L does not dominate the highest requested level.
struct ShootingProblem {
    double a0 = 0, a1 = 0, a2 = 0;
    double cutoff = 0;  // 0 = choose from P(L) >= 3 E_max

    double potential(double rho) const {
        const double r2 = rho * rho;
        return 2.25 * r2 * r2 - a2 * r2 - a1 * rho - a0;
    }
};

std::vector<double> shoot_spectrum(const ShootingProblem& p, int n_levels);

enum class OperatorConvention {
    SH1,  // psi'' + (E - V) psi = 0
    H0,   // psi'' + (V - E) psi = 0
};

struct OracleReport {
    double residual_max = 0.0;
    std::string grid;
    std::optional<std::array<double, 3>> comparison;  // (analytic, numeric, relative error)
};

/// max_i |psi''(r_i) + s(E - V(r_i)) psi(r_i)| / max|psi| with a 4th-order
/// central stencil (s = +1 for SH1, -1 for H0); the outermost two grid
/// points on each side are used only as stencil neighbours.
OracleReport fd_residual(const std::function<double(double)>& psi,
                         const std::function<double(double)>& potential, double E,
                         std::span<const double> grid,
                         OperatorConvention conv = OperatorConvention::SH1);

OracleReport fd_residual_complex(const std::function<std::complex<double>(double)>& psi,
                                 const std::function<double(double)>& potential, double E,
                                 std::span<const double> grid,
                                 OperatorConvention conv = OperatorConvention::SH1);

/// Schwarzian derivative of rho(r) by central differences of the inverse map.
double fd_schwarzian(const CoordinateMap& map, double r);

}  // namespace heunpot
