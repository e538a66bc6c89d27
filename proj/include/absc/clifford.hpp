#pragma once

#include <vector>

#include "absc/matrix.hpp"

namespace absc {

// Generators of the negative-definite Clifford algebra: gamma_a^2 = -I,
// gamma_a gamma_b + gamma_b gamma_a = -2 delta_ab, each gamma_a odd and
// skew-adjoint for the diagonal grading involution.
struct CliffordData {
    int rank = 0;
    int dim = 0;
    std::vector<QIMat> gamma;
    QIMat grading;

    const QIMat& g(int a) const { return gamma.at(a); }
};

CliffordData build_clifford(int n);

// Exterior algebra of rank n with wedge (eps) and contraction (iota)
// operators indexed by the orthonormal coframe. Basis: subsets of {0..n-1}
// encoded as bitmasks, ordered by increasing mask.
struct ExteriorModule {
    int rank = 0;
    int dim = 0;
    std::vector<QIMat> eps;
    std::vector<QIMat> iota;
    QIMat degree;
    QIMat grading;

    // Clifford action at scaling u: c_u(psi_a) = eps_a - u * iota_a.
    QIMat c_u(int a, const Rat& u) const { return eps.at(a) - u * iota.at(a); }
};

ExteriorModule build_exterior(int n);

// Left and right Clifford actions on the rank-n exterior space.
// cL_a = eps_a - iota_a; cR_a = kappa (eps_a + iota_a) where kappa is the
// degree-parity sign (the right-action sign convention is fixed here).
struct BimoduleData {
    int rank = 0;
    int dim = 0;
    std::vector<QIMat> cL;
    std::vector<QIMat> cR;
    QIMat grading;
};

BimoduleData build_bimodule(int n);

// True right Clifford multiplication by the a-th coframe vector at metric
// scaling u: x -> x . psi_a = (eps_a + u iota_a) kappa (x).
QIMat right_mult(const ExteriorModule& ext, int a, const Rat& u);

// Clifford image of a 2-form: sum_{i<j} beta(i,j) gamma_i gamma_j.
// beta is an antisymmetric rational matrix.
QIMat clifford_two_form(const std::vector<QIMat>& gens, const QIMat& beta);

// Spin representation of a metric-skew matrix M (entries M_{ij} = <M e_j, e_i>
// in an orthonormal frame): sigma(M) = 1/4 sum_{ij} <M e_i, e_j> gamma_i gamma_j.
QIMat spin_rep(const std::vector<QIMat>& gens, const QIMat& M);

// Derivation extension of a skew matrix to the exterior module:
// dLambda(M) = sum_{ab} M_{ab} eps_a iota_b.
QIMat exterior_derivation(const ExteriorModule& ext, const QIMat& M);

// Z2-graded matrix representation: generators tagged by parity, plus the
// grading involution. graded_tensor composes two of them with the Koszul rule.
struct GradedRep {
    int dim = 0;
    QIMat grading;
    std::vector<QIMat> odd_gens;
    std::vector<QIMat> even_gens;
};

GradedRep graded_tensor(const GradedRep& A, const GradedRep& B);

// Lift of an operator on the left (resp. right) tensor factor to the graded
// tensor product. Right lifts of odd operators pick up the left grading.
QIMat lift_left(const QIMat& A, int dim_right);
QIMat lift_right_even(int dim_left, const QIMat& B);
QIMat lift_right_odd(const QIMat& grading_left, const QIMat& B);

}  // namespace absc
