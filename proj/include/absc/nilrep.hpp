#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

#include "absc/frame_data.hpp"
#include "absc/uea.hpp"

namespace absc {

// Two-step nilpotent bracket data: layer-1 dimension n1, layer-2 dimension n2,
// B[i][j] the layer-2 components of [e_i, e_j]. Surjectivity of B onto layer 2
// is an invariant.
struct TwoStepAlgebra {
    int n1 = 0, n2 = 0;
    std::vector<std::string> names;  // n1 + n2 generator names
    std::vector<std::vector<std::vector<Rat>>> B;

    static TwoStepAlgebra from_frame(const FramePointData& d);
    void validate() const;
    // Real matrix of the form tau B on layer 1.
    Eigen::MatrixXd tau_form(const Eigen::VectorXd& tau) const;
};

struct DarbouxSplit {
    std::vector<Eigen::VectorXd> isotropic;
    std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> pairs;  // (q_k, p_k)
    std::vector<double> alpha;                                       // positive, descending
    int rank = 0;
    bool degenerate = false;
};

DarbouxSplit darboux_of_form(const Eigen::MatrixXd& S, double tol = 1e-10);
DarbouxSplit darboux_split(const TwoStepAlgebra& alg, const Eigen::VectorXd& tau,
                           double tol = 1e-10);

// Hermite-truncated Schrodinger representation. Generator matrices live on the
// N-window per oscillator coordinate; canonical relations hold exactly below
// the top level.
struct SchrodingerRep {
    int N = 0;
    int n_osc = 0;
    Eigen::VectorXd tau, eta;
    DarbouxSplit split;
    std::vector<Eigen::MatrixXcd> gen;  // one matrix per generator (layer 1 then layer 2)
    int dim() const { return gen.empty() ? 1 : (int)gen[0].rows(); }
};

SchrodingerRep schrodinger_matrices(const TwoStepAlgebra& alg, const Eigen::VectorXd& tau,
                                    const Eigen::VectorXd& eta, int N);

// Evaluates a normal-ordered element in the inflated representation. The
// matrix is computed with internal Hermite padding and compressed back to the
// N-window, so every entry is an exact matrix element of the true operator.
Eigen::MatrixXcd evaluate(const UEAElement& x, const TwoStepAlgebra& alg,
                          const Eigen::VectorXd& tau, const Eigen::VectorXd& eta, int N);

// Finite-dimensional (character-type) representation: layer-1 generator e_k
// acts by i xi_k, layer 2 by zero.
Eigen::MatrixXcd evaluate_finite(const UEAElement& x, const TwoStepAlgebra& alg,
                                 const Eigen::VectorXd& xi);

// Indices of the window basis with every Hermite level <= N-2 (top level
// excluded from all singular-value reports).
std::vector<int> interior_indices(int N, int n_osc, int fiber);

struct RocklandOptions {
    std::vector<double> lambdas{1, -1, 2, -2, 0.5, -0.5};  // n2 == 1 default sweep
    std::vector<Eigen::VectorXd> taus;                     // explicit override
    std::vector<int> Ns{8, 16, 32};
    double pass_tol = 1e-6;
    double fail_tol = 1e-8;
    double conv_tol = 1e-6;
    bool include_finite = true;
};

struct RocklandSample {
    std::string kind;  // "schrodinger" or "finite"
    std::vector<double> tau, eta, xi;
    std::map<int, double> sigma_min;     // per truncation N
    std::map<int, double> quadform_min;  // per truncation N (Hermitian part)
    bool converged = false;
};

struct RocklandReport {
    std::vector<RocklandSample> samples;
    std::string verdict;  // "pass (sampled)", "fail (witness)", "inconclusive"
    double min_sigma = 0;
    double min_quadform = 0;
};

RocklandReport rockland_check(const UEAElement& cosym, const TwoStepAlgebra& alg,
                              const RocklandOptions& opts = {});

// Left-invariant model operator of the two-step data (graded cosymbol of the
// finite part): c(phi^i) E_i + eps_mu F_mu + 1/4 iota_mu c(iota_{F_mu} Omega).
// The algebra argument is the osculating algebra of the same data and must
// outlive the returned element.
UEAElement model_operator(const FramePointData& d, const WeightedAlgebra& alg);

double sigma_min_of(const Eigen::MatrixXcd& m);
double quadform_min_of(const Eigen::MatrixXcd& m);

}  // namespace absc
