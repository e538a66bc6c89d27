#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "absc/frame_geometry.hpp"
#include "absc/matrix.hpp"
#include "absc/s1_fourier.hpp"

namespace absc {

// Left-invariant fields on the m-th Peter-Weyl block, realized on the
// (m+1)-dimensional weight space (each block carries multiplicity m+1):
// [X,Y] = 2T, [Y,T] = 2X, [T,X] = 2Y exactly, -X^2-Y^2-T^2 = m(m+2).
struct FourierBlock {
    int m = 0;
    int multiplicity = 1;
    QIMat X, Y, T;
};

// convention 0 is the integer-entry realization; convention 1 is its
// conjugate by the basis reversal (same spectra, different matrices).
FourierBlock block_fields(int m, int convention = 0);

// Skew-adjoint (unitary-realization) fields, for inner-product arguments.
struct FourierBlockU {
    int m = 0;
    Eigen::MatrixXcd X, Y, T;
};
FourierBlockU block_fields_unitary(int m);

// Laplacian + T^2 + coefficient * c(dV) T on the C^2 fiber.
Eigen::MatrixXcd even_operator(int m);
// variant 0: coefficient 3/2 (matches the stated spectrum set);
// variant 1: coefficient 3/4 (the displayed alternative). See spectrum_check.
Eigen::MatrixXcd odd_operator(int m, int variant = 0);

struct SpectrumCheck {
    bool matched = false;
    double max_err = 0;
    std::vector<double> computed;  // sorted
    std::vector<double> formula;   // sorted
};

SpectrumCheck check_even_spectrum(int m, double tol = 1e-9);
SpectrumCheck check_odd_spectrum(int m, int variant = 0, double tol = 1e-9);

double odd_operator_eigmin(int m, int variant = 0);

// Which odd-operator coefficient variant reproduces the stated spectrum set
// {m(m+2) - k^2 +- (3/2) k}: returns 0 or 1 (reported, not guessed).
int odd_variant_matching_spectrum(int m_max = 6, double tol = 1e-9);

// Kernel of the full contact operator assembled from the su2 model on blocks
// m <= M_max; returns graded dimensions (even, odd), multiplicities included.
std::pair<int, int> full_kernel(int M_max, int convention = 0, double tol = 1e-9);
std::pair<int, int> per_block_kernel(int m, int convention = 0, double tol = 1e-9);

// Integer solutions of m(m+2) - k^2 + (5/2)k = 0, via box search; the divisor
// factorization route must agree.
std::vector<std::pair<int, int>> quadratic_solutions(int box = 100);
std::vector<std::pair<int, int>> quadratic_solutions_divisor();

// Fourier-mode problems extracted from the Peter-Weyl blocks m' <= block_max,
// for the S^1 mode-kernel solver (modes |m| <= block_max).
std::vector<ModeProblem> hopf_mode_problems(int block_max);

}  // namespace absc
