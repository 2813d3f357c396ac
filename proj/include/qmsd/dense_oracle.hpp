#pragma once

// Brute-force dense-matrix checks at small n: Heisenberg-Weyl displacements,
// phase point operators, stabilizer projectors, and numeric validation of
// the trace identities the exact screening relies on. Complex double
// precision; every checked identity is exact in infinite precision, so any
// drift beyond tolerance is a defect upstream.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

#include "qmsd/stabilizer.hpp"

namespace qmsd {

using DenseOperator = Eigen::MatrixXcd;

// D(u,v) = w^(-inv2*u*v) X^u Z^v with w = exp(2 pi i / p), inv2 = (p+1)/2.
DenseOperator heisenberg_weyl(int p, int u, int v);

// Multi-site displacement: tensor product of single-site factors.
DenseOperator heisenberg_weyl_vec(int p, const FFVector& u, const FFVector& v);

// A(0,0) = p^-1 sum_uv D(u,v); A(u,v) = D A(0,0) D^dagger. Trace 1, Hermitian.
DenseOperator phase_point(int p, int u, int v);

// W(rho; u, v) = p^-1 tr(rho A(u,v))
double wigner_value(const DenseOperator& rho, int p, int u, int v);

// Projector onto the trivial-syndrome space: 3^-r sum over the group.
DenseOperator projector(const StabilizerCode& code);  // n <= 5

// (1-eps)|S><S| + eps I/3 with |S> = (|1>-|2>)/sqrt(2).
DenseOperator strange_state(double eps);

// |tr(Pi rho^tensor_n) - sum over S-perp of prod_i W(rho; u_i, v_i)|
double verify_theorem1(const StabilizerCode& code, const DenseOperator& rho);

// Exhaustive phase-space checks: the dual-membership trace pattern, the
// conjugated-projector syndrome identity, and the vanishing of
// tr(Pi^s A(0,0)^n) for s != 0. Returns the largest deviation found.
double verify_appendixA(const StabilizerCode& code);

struct OracleReport {
    int trials = 0;
    double max_residual = 0.0;
    int failures = 0;
};

// Randomized theorem-1 trials over random stabilizer codes and random
// unit-trace Hermitian operators (not necessarily positive).
OracleReport run_oracle_trials(int n_min, int n_max, int trials,
                               std::uint64_t seed, double tol);

}  // namespace qmsd
