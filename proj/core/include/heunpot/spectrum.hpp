#pragma once

#include <vector>

#include "heunpot/canonical.hpp"

namespace heunpot {

/// Quasi-exact solvability condition at degree N: beta = 3(N+1) plus a
/// polynomial relation between alpha and gamma (det D_{N+1} = 0).
struct QESCondition {
    struct Monomial {
        double coeff;
        int alpha_pow;
        int gamma_pow;
    };

    int n = 0;
    double beta_required = 3.0;
    std::vector<Monomial> constraint;

    double constraint_value(double alpha, double gamma) const;
};

/// Tabulated constraint for N <= 4; generated from the determinant minor
/// recurrence beyond that (exact integer coefficients while they fit in a
/// double).
QESCondition qes_constraint(int N);

/// E_N = (3(N+1) - a1)/b1; DivisionByZero when b1 = 0.
double energy_eigenvalue(double a1, double b1, int N);

/// det D_{N+1} evaluated by the leading-principal-minor recurrence
///   M_k = alpha M_{k-1} + 3(k-1)(N-k+2) gamma M_{k-2}
///         + 9(k-1)(k-2)(N-k+2)(N-k+3) M_{k-3}.
/// BetaMismatch unless beta = 3(N+1) within 1e-12.
double determinant_condition(const CanonicalParams& p, int N);

/// Degree-N polynomial solution, monic (w_N = 1), found by back-substituting
/// the recurrence rows from the bottom; NoNontrivialSolution when the
/// leftover top row does not close (determinant away from zero, or the null
/// vector has w_N = 0).
struct HeunPolynomial {
    int n = 0;
    std::vector<double> coeffs;  // w_0 .. w_N, ascending
    CanonicalParams params;

    double eval(double rho) const;
    double eval_derivative(double rho) const;
};

HeunPolynomial build_polynomial(const CanonicalParams& p, int N);

/// w_0 = 1, w_1 = gamma, w_2 = (gamma^2 - alpha)/2, then
/// w_{n+3} = -pi1 w_{n+2} - pi2 w_{n+1} - pi3 w_n with
/// pi1 = -gamma/(n+3), pi2 = alpha/((n+2)(n+3)), pi3 = (beta-3(n+1))/((n+2)(n+3)).
std::vector<double> w_sequence(const CanonicalParams& p, int n_max);

/// Same recurrence from arbitrary initial data (w0, w1, w2).
std::vector<double> w_sequence_from(const CanonicalParams& p, double w0, double w1, double w2,
                                    int n_max);

}  // namespace heunpot
