#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

namespace absc {

// One Fourier mode of the transverse kernel problem: an odd square matrix D
// (twisted base Dirac), the Clifford action of the curvature, the fiber
// parity, and (for m = 0) an inner product.
struct ModeProblem {
    int m = 0;
    Eigen::MatrixXcd D;
    Eigen::MatrixXcd cOmega;
    std::vector<int> parity;  // +1 / -1 per basis vector
    std::optional<Eigen::MatrixXcd> metric;
};

// Kernel dimensions (even summand, odd summand) per the mode case split:
// for m != 0 count solutions of cOmega s = (4i/m) D^2 s on the odd (resp.
// even) subspace; for m = 0 count Ker D plus the perpendicularity condition.
std::pair<int, int> mode_kernel(const ModeProblem& p, double tol = 1e-9);

// Brute-force null space of the assembled 2x2 block system (the oracle).
std::pair<int, int> direct_block_kernel(const ModeProblem& p, double tol = 1e-9);

struct TotalReport {
    std::pair<int, int> total{0, 0};
    std::pair<int, int> oracle_total{0, 0};
    bool truncated_range = true;
    bool routes_agree = true;
};

TotalReport assemble_total(const std::vector<ModeProblem>& problems, double tol = 1e-9);

}  // namespace absc
