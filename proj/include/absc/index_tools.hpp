#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace absc {

// Closed sampled loop in the plane (last sample connects back to the first).
struct SampledLoop {
    std::vector<std::complex<double>> pts;
};

// Winding number by principal-branch argument increments. Throws on a sample
// at the center or an increment of pi or more (undersampled).
int winding(const SampledLoop& loop, std::complex<double> center);

// sum over odd k of k * sum_j W(loop_j, k); the k-range is derived from the
// sample bounding box when not supplied. Throws when a loop passes through an
// odd integer in range.
long long index_formula(const std::vector<SampledLoop>& components,
                        std::optional<std::pair<int, int>> k_range = std::nullopt);

struct DisjointnessProblem {
    Eigen::MatrixXcd gamma;    // even endomorphism commuting with c(dtheta)
    Eigen::MatrixXcd cdtheta;  // Clifford action of d theta
    std::vector<int> parity;   // grading of the fiber
    std::vector<double> alpha; // positive form eigenvalues
    int osc_bound = 12;        // oscillator levels enumerated per coordinate
    double lambda = 1.0;       // Schrodinger parameter (the theorem uses 1)
};

struct DisjointnessResult {
    bool pass = false;
    double gap = 0;
    std::vector<std::complex<double>> twist_spectrum;  // Spec(+- i (gamma-1) c(dtheta))
    std::vector<double> oscillator_spectrum;
};

DisjointnessResult disjointness_check(const DisjointnessProblem& p, double tol = 1e-9);

}  // namespace absc
