#include "absc/s1_fourier.hpp"

#include <stdexcept>

namespace absc {

using Eigen::MatrixXcd;
using cplx = std::complex<double>;

namespace {

std::vector<int> parity_indices(const std::vector<int>& parity, int sign) {
    std::vector<int> idx;
    for (int i = 0; i < (int)parity.size(); ++i)
        if (parity[i] == sign) idx.push_back(i);
    return idx;
}

MatrixXcd submatrix(const MatrixXcd& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
    MatrixXcd r((int)rows.size(), (int)cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r((int)i, (int)j) = m(rows[i], cols[j]);
    return r;
}

int nullity(const MatrixXcd& m, double tol) {
    if (m.cols() == 0) return 0;
    if (m.rows() == 0) return (int)m.cols();
    Eigen::JacobiSVD<MatrixXcd> svd(m);
    double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    double thresh = tol * std::max(1.0, smax);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > thresh) ++rank;
    return (int)m.cols() - rank;
}

// Orthonormal basis of the null space (standard inner product).
MatrixXcd null_basis(const MatrixXcd& m, double tol) {
    if (m.cols() == 0) return MatrixXcd::Zero(0, 0);
    Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeFullV);
    double smax = 0;
    if (svd.singularValues().size()) smax = svd.singularValues()(0);
    double thresh = tol * std::max(1.0, smax);
    int rank = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > thresh) ++rank;
    return svd.matrixV().rightCols(m.cols() - rank);
}

void check_problem(const ModeProblem& p) {
    int n = (int)p.D.rows();
    if (p.D.cols() != n || p.cOmega.rows() != n || p.cOmega.cols() != n ||
        (int)p.parity.size() != n)
        throw std::invalid_argument("dimension mismatch in ModeProblem");
    // D must be odd for the grading.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.parity[i] == p.parity[j] && std::abs(p.D(i, j)) > 1e-12)
                throw std::invalid_argument("ModeProblem.D must be odd for the parity");
}

}  // namespace

std::pair<int, int> mode_kernel(const ModeProblem& p, double tol) {
    check_problem(p);
    auto even = parity_indices(p.parity, +1);
    auto odd = parity_indices(p.parity, -1);
    if (p.m != 0) {
        // even summand: tau odd with cOmega tau = (4i/m) D^2 tau.
        cplx f(0, 4.0 / p.m);
        MatrixXcd A = p.cOmega - f * (p.D * p.D);
        int ev = nullity(submatrix(A, odd, odd), tol);
        int od = nullity(submatrix(A, even, even), tol);
        return {ev, od};
    }
    if (!p.metric) throw std::invalid_argument("missing-metric: m = 0 needs an inner product");
    const MatrixXcd& h = *p.metric;
    // Kernel of D restricted to each parity block.
    std::vector<int> all(p.parity.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    MatrixXcd K_even = null_basis(submatrix(p.D, all, even), tol);  // columns in even coords
    MatrixXcd K_odd = null_basis(submatrix(p.D, all, odd), tol);
    int dim_ker_even = (int)K_even.cols();
    int dim_ker_odd = (int)K_odd.cols();

    auto expand = [&](const MatrixXcd& cols, const std::vector<int>& idx) {
        MatrixXcd full = MatrixXcd::Zero(p.D.rows(), cols.cols());
        for (size_t i = 0; i < idx.size(); ++i) full.row(idx[i]) = cols.row((int)i);
        return full;
    };
    MatrixXcd KE = expand(K_even, even);
    MatrixXcd KO = expand(K_odd, odd);

    auto perp_dim = [&](const MatrixXcd& K) {
        // {tau in span K : <cOmega tau, k>_h = 0 for all k in span K}
        if (K.cols() == 0) return 0;
        MatrixXcd G = K.adjoint() * h * (p.cOmega * K);
        return nullity(G, tol);
    };
    int ev = dim_ker_even + perp_dim(KO);
    int od = dim_ker_odd + perp_dim(KE);
    return {ev, od};
}

std::pair<int, int> direct_block_kernel(const ModeProblem& p, double tol) {
    check_problem(p);
    auto even = parity_indices(p.parity, +1);
    auto odd = parity_indices(p.parity, -1);
    int n = (int)p.D.rows();
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    cplx im(0, (double)p.m);
    // Even section (eta in Gamma^0, tau in Gamma^1):
    //   D eta - 1/4 cOmega tau = 0,  D tau + i m eta = 0.
    {
        MatrixXcd De = submatrix(p.D, all, even);
        MatrixXcd Do = submatrix(p.D, all, odd);
        MatrixXcd Ce = submatrix(p.cOmega, all, even);
        MatrixXcd Co = submatrix(p.cOmega, all, odd);
        MatrixXcd sys = MatrixXcd::Zero(2 * n, (int)even.size() + (int)odd.size());
        sys.block(0, 0, n, (int)even.size()) = De;
        sys.block(0, (int)even.size(), n, (int)odd.size()) = -0.25 * Co;
        sys.block(n, (int)even.size(), n, (int)odd.size()) = Do;
        for (size_t c = 0; c < even.size(); ++c) sys.block(n, (int)c, n, 1) +=
            im * MatrixXcd::Identity(n, n).col(even[c]);
        int ev = nullity(sys, tol);
        // Odd section (sigma in Gamma^1, xi in Gamma^0):
        //   D sigma + 1/4 cOmega xi = 0, D xi - i m sigma = 0.
        MatrixXcd sys2 = MatrixXcd::Zero(2 * n, (int)odd.size() + (int)even.size());
        sys2.block(0, 0, n, (int)odd.size()) = Do;
        sys2.block(0, (int)odd.size(), n, (int)even.size()) = 0.25 * Ce;
        sys2.block(n, (int)odd.size(), n, (int)even.size()) = De;
        for (size_t c = 0; c < odd.size(); ++c) sys2.block(n, (int)c, n, 1) -=
            im * MatrixXcd::Identity(n, n).col(odd[c]);
        int od = nullity(sys2, tol);
        return {ev, od};
    }
}

TotalReport assemble_total(const std::vector<ModeProblem>& problems, double tol) {
    TotalReport rep;
    for (const auto& p : problems) {
        auto a = mode_kernel(p, tol);
        auto b = direct_block_kernel(p, tol);
        rep.total.first += a.first;
        rep.total.second += a.second;
        rep.oracle_total.first += b.first;
        rep.oracle_total.second += b.second;
        if (a != b) rep.routes_agree = false;
    }
    return rep;
}

}  // namespace absc
