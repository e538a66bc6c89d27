#include "absc/index_tools.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace absc {

using cplx = std::complex<double>;

int winding(const SampledLoop& loop, cplx center) {
    if (loop.pts.size() < 3) throw std::invalid_argument("loop needs at least 3 samples");
    const double pi = std::acos(-1.0);
    double total = 0;
    size_t n = loop.pts.size();
    for (size_t k = 0; k < n; ++k) {
        cplx a = loop.pts[k] - center;
        cplx b = loop.pts[(k + 1) % n] - center;
        if (std::abs(a) == 0 || std::abs(b) == 0)
            throw std::invalid_argument("sample-at-center: loop touches the query point");
        double inc = std::arg(b / a);
        if (std::abs(inc) >= pi - 1e-12)
            throw std::invalid_argument("undersampled: argument increment reaches pi");
        total += inc;
    }
    double w = total / (2 * pi);
    long long r = std::llround(w);
    if (std::abs(w - (double)r) > 1e-6)
        throw std::logic_error("winding sum failed to close to an integer");
    return (int)r;
}

long long index_formula(const std::vector<SampledLoop>& components,
                        std::optional<std::pair<int, int>> k_range) {
    int klo, khi;
    if (k_range) {
        klo = k_range->first;
        khi = k_range->second;
    } else {
        double lo = 0, hi = 0;
        bool first = true;
        for (const auto& L : components)
            for (auto z : L.pts) {
                if (first || z.real() < lo) lo = z.real();
                if (first || z.real() > hi) hi = z.real();
                first = false;
            }
        klo = (int)std::floor(lo) - 1;
        khi = (int)std::ceil(hi) + 1;
    }
    long long total = 0;
    for (int k = klo; k <= khi; ++k) {
        if (k % 2 == 0) continue;  // odd integers only
        for (const auto& L : components) {
            for (auto z : L.pts)
                if (std::abs(z - cplx((double)k, 0)) < 1e-12)
                    throw std::invalid_argument("loop hits an odd integer");
            total += (long long)k * winding(L, cplx((double)k, 0));
        }
    }
    return total;
}

DisjointnessResult disjointness_check(const DisjointnessProblem& p, double tol) {
    int n = (int)p.gamma.rows();
    if (p.cdtheta.rows() != n || (int)p.parity.size() != n)
        throw std::invalid_argument("dimension mismatch in DisjointnessProblem");
    // gamma must be even and commute with c(dtheta).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.parity[i] != p.parity[j] && std::abs(p.gamma(i, j)) > 1e-12)
                throw std::invalid_argument("gamma not even");
    Eigen::MatrixXcd comm = p.gamma * p.cdtheta - p.cdtheta * p.gamma;
    if (comm.cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("non-commuting gamma: [gamma, c(dtheta)] != 0");
    for (double a : p.alpha)
        if (a <= 0) throw std::invalid_argument("alpha values must be positive");

    DisjointnessResult r;
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    for (double sgn : {1.0, -1.0}) {
        Eigen::MatrixXcd M = cplx(0, sgn) * ((p.gamma - I) * p.cdtheta);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
        for (int k = 0; k < es.eigenvalues().size(); ++k)
            r.twist_spectrum.push_back(es.eigenvalues()(k));
    }
    // Oscillator spectrum { |lambda| sum alpha_j (2 n_j + 1) } up to the bound.
    std::set<double> osc;
    std::vector<int> levels(p.alpha.size(), 0);
    std::function<void(size_t, double)> rec = [&](size_t j, double acc) {
        if (j == p.alpha.size()) {
            osc.insert(std::abs(p.lambda) * acc);
            return;
        }
        for (int nk = 0; nk <= p.osc_bound; ++nk) rec(j + 1, acc + p.alpha[j] * (2 * nk + 1));
    };
    rec(0, 0.0);
    r.oscillator_spectrum.assign(osc.begin(), osc.end());

    double gap = std::numeric_limits<double>::infinity();
    for (auto z : r.twist_spectrum)
        for (double b : r.oscillator_spectrum) gap = std::min(gap, std::abs(z - cplx(b, 0)));
    r.gap = gap;
    r.pass = gap > tol;
    return r;
}

}  // namespace absc
