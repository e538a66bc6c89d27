#include "absc/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "absc/eigen_bridge.hpp"
#include "absc/models.hpp"
#include "absc/parallel.hpp"

namespace absc {

using Eigen::MatrixXcd;
using cplx = std::complex<double>;

FourierBlock block_fields(int m, int convention) {
    if (m < 0) throw std::invalid_argument("block level must be >= 0");
    int d = m + 1;
    QIMat e(d, d), f(d, d), h(d, d);
    for (int k = 1; k <= m; ++k) e.at(k - 1, k) = QI(k);
    for (int k = 0; k < m; ++k) f.at(k + 1, k) = QI(m - k);
    for (int k = 0; k <= m; ++k) h.at(k, k) = QI(m - 2 * k);
    FourierBlock b;
    b.m = m;
    b.multiplicity = d;
    b.X = QI::i() * (e + f);
    b.Y = f - e;
    b.T = QI::i() * h;
    if (convention == 1) {
        QIMat R(d, d);
        for (int k = 0; k <= m; ++k) R.at(k, m - k) = QI(1);
        b.X = R * b.X * R;  // R is an involution
        b.Y = R * b.Y * R;
        b.T = R * b.T * R;
    }
    return b;
}

FourierBlockU block_fields_unitary(int m) {
    if (m < 0) throw std::invalid_argument("block level must be >= 0");
    int d = m + 1;
    MatrixXcd e = MatrixXcd::Zero(d, d), f = MatrixXcd::Zero(d, d), h = MatrixXcd::Zero(d, d);
    for (int k = 1; k <= m; ++k) e(k - 1, k) = std::sqrt((double)k * (m - k + 1));
    for (int k = 0; k < m; ++k) f(k + 1, k) = std::sqrt((double)(k + 1) * (m - k));
    for (int k = 0; k <= m; ++k) h(k, k) = m - 2 * k;
    FourierBlockU b;
    b.m = m;
    b.X = cplx(0, 1) * (e + f);
    b.Y = f - e;
    b.T = cplx(0, 1) * h;
    return b;
}

namespace {

MatrixXcd c_dV() {
    MatrixXcd c(2, 2);
    c << 0, -1, 1, 0;
    return c;
}

MatrixXcd kr(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

MatrixXcd laplace_plus(int m, double coef) {
    FourierBlock b = block_fields(m);
    int d = m + 1;
    MatrixXcd T = qimat_to_complex(b.T);
    MatrixXcd I2 = MatrixXcd::Identity(2, 2);
    MatrixXcd Id = MatrixXcd::Identity(d, d);
    return (double)(m * (m + 2)) * MatrixXcd::Identity(2 * d, 2 * d) + kr(T * T, I2) +
           coef * kr(T, c_dV());
}

std::vector<double> real_spectrum(const MatrixXcd& M, double tol) {
    Eigen::ComplexEigenSolver<MatrixXcd> es(M);
    std::vector<double> v;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        if (std::abs(es.eigenvalues()(k).imag()) > tol * 100)
            throw std::logic_error("unexpected complex eigenvalue in block operator");
        v.push_back(es.eigenvalues()(k).real());
    }
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<double> formula_set(int m, double coef) {
    std::vector<double> v;
    for (int k = -m; k <= m; k += 2) {
        v.push_back(m * (m + 2) - k * k + coef * k);
        v.push_back(m * (m + 2) - k * k - coef * k);
    }
    std::sort(v.begin(), v.end());
    return v;
}

SpectrumCheck spectrum_check(int m, double coef, double tol) {
    SpectrumCheck sc;
    MatrixXcd M = laplace_plus(m, coef);
    sc.computed = real_spectrum(M, tol);
    sc.formula = formula_set(m, coef);
    sc.matched = sc.computed.size() == sc.formula.size();
    sc.max_err = 0;
    if (sc.matched)
        for (size_t k = 0; k < sc.computed.size(); ++k) {
            double e = std::abs(sc.computed[k] - sc.formula[k]);
            sc.max_err = std::max(sc.max_err, e);
            if (e > tol) sc.matched = false;
        }
    return sc;
}

}  // namespace

MatrixXcd even_operator(int m) { return laplace_plus(m, 2.5); }
MatrixXcd odd_operator(int m, int variant) { return laplace_plus(m, variant == 0 ? 1.5 : 0.75); }

SpectrumCheck check_even_spectrum(int m, double tol) { return spectrum_check(m, 2.5, tol); }
SpectrumCheck check_odd_spectrum(int m, int variant, double tol) {
    SpectrumCheck sc;
    MatrixXcd M = odd_operator(m, variant);
    sc.computed = real_spectrum(M, tol);
    sc.formula = formula_set(m, 1.5);  // the stated set
    sc.matched = sc.computed.size() == sc.formula.size();
    sc.max_err = 0;
    if (sc.matched)
        for (size_t k = 0; k < sc.computed.size(); ++k) {
            double e = std::abs(sc.computed[k] - sc.formula[k]);
            sc.max_err = std::max(sc.max_err, e);
            if (e > tol) sc.matched = false;
        }
    return sc;
}

double odd_operator_eigmin(int m, int variant) {
    auto v = real_spectrum(odd_operator(m, variant), 1e-9);
    return v.front();
}

int odd_variant_matching_spectrum(int m_max, double tol) {
    bool v0 = true, v1 = true;
    for (int m = 0; m <= m_max; ++m) {
        if (!check_odd_spectrum(m, 0, tol).matched) v0 = false;
        if (!check_odd_spectrum(m, 1, tol).matched) v1 = false;
    }
    if (v0) return 0;
    if (v1) return 1;
    throw std::logic_error("no odd-operator coefficient variant matches the stated spectrum");
}

namespace {

struct BlockOperator {
    // su2 contact operator on one Peter-Weyl block.
    MatrixXcd full;         // dim (m+1)*8
    MatrixXcd diracF;       // horizontal part
    MatrixXcd cdtheta;      // Clifford action of the curvature (fiber, lifted)
    MatrixXcd mode_op;      // -i (T-field + fiber rotation): integer spectrum
    std::vector<int> fiber_parity;  // total parity per fiber index
    std::vector<int> theta_free;    // fiber indices with no theta factor
    int d = 0;                      // m+1
    int fdim = 8;
};

BlockOperator su2_block(int m, int convention, bool unitary) {
    static const CatalogEntry entry = su2_model();
    const FramePointData& data = entry.data;
    GlobalParts g = global_formula(data);
    FiberLifts fl = fiber_lifts(data);
    int fdim = fl.dimV;

    MatrixXcd Xf, Yf, Tf;
    if (unitary) {
        FourierBlockU b = block_fields_unitary(m);
        Xf = b.X;
        Yf = b.Y;
        Tf = b.T;
    } else {
        FourierBlock b = block_fields(m, convention);
        Xf = qimat_to_complex(b.X);
        Yf = qimat_to_complex(b.Y);
        Tf = qimat_to_complex(b.T);
    }
    int d = m + 1;
    MatrixXcd If = MatrixXcd::Identity(fdim, fdim);
    MatrixXcd Id = MatrixXcd::Identity(d, d);

    BlockOperator bo;
    bo.d = d;
    bo.fdim = fdim;
    auto lift = [&](const MatrixXcd& field, const QIMat& fib) { return kr(field, qimat_to_complex(fib)); };
    bo.full = lift(Xf, g.total.deriv[0]) + lift(Yf, g.total.deriv[1]) + lift(Tf, g.total.deriv[2]) +
              kr(Id, qimat_to_complex(g.total.zeroth));
    bo.diracF = lift(Xf, g.dirac_F.deriv[0]) + lift(Yf, g.dirac_F.deriv[1]) +
                kr(Id, qimat_to_complex(g.dirac_F.zeroth));
    // c(d theta) on the fiber.
    QIMat beta(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) beta.at(i, j) = QI(omega_F(data, 2, i, j));
    QIMat cd = fl.liftE(clifford_two_form(data.mod.cliff.gamma, beta));
    bo.cdtheta = kr(Id, qimat_to_complex(cd));
    // Mode operator: Lie derivative along the fiber rotation.
    QIMat rho(2, 2);
    rho.at(0, 1) = QI(-2);
    rho.at(1, 0) = QI(2);  // ad_T: X -> 2Y, Y -> -2X
    QIMat rotF = fl.liftE(exterior_derivation(*data.mod.extF, rho));
    MatrixXcd curly = kr(Tf, If) + kr(Id, qimat_to_complex(rotF));
    bo.mode_op = cplx(0, -1) * curly;

    for (int e = 0; e < fl.dimE; ++e)
        for (int s = 0; s < fl.dimT; ++s) {
            int pE = fl.gradE.at(e, e).re > 0 ? 1 : -1;
            int pT = (s == 0) ? 1 : -1;
            bo.fiber_parity.push_back(pE * pT);
            if (s == 0) bo.theta_free.push_back(e * fl.dimT + s);
        }
    return bo;
}

std::pair<int, int> graded_nullity(const MatrixXcd& op, const std::vector<int>& parity,
                                   double tol) {
    auto count = [&](int sign) {
        std::vector<int> cols;
        for (int i = 0; i < (int)parity.size(); ++i)
            if (parity[i] == sign) cols.push_back(i);
        MatrixXcd sub((int)op.rows(), (int)cols.size());
        for (size_t c = 0; c < cols.size(); ++c) sub.col((int)c) = op.col(cols[c]);
        if (sub.cols() == 0) return 0;
        Eigen::JacobiSVD<MatrixXcd> svd(sub);
        double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
        int rank = 0;
        for (int k = 0; k < svd.singularValues().size(); ++k)
            if (svd.singularValues()(k) > tol * std::max(1.0, smax)) ++rank;
        return (int)sub.cols() - rank;
    };
    return {count(+1), count(-1)};
}

}  // namespace

std::pair<int, int> per_block_kernel(int m, int convention, double tol) {
    BlockOperator bo = su2_block(m, convention, false);
    std::vector<int> parity;
    for (int k = 0; k < bo.d; ++k)
        for (int p : bo.fiber_parity) parity.push_back(p);
    auto [ev, od] = graded_nullity(bo.full, parity, tol);
    return {ev * bo.d, od * bo.d};
}

std::pair<int, int> full_kernel(int M_max, int convention, double tol) {
    if (M_max < 2) throw std::invalid_argument("full_kernel needs M_max >= 2");
    // Blocks are independent; reduce in block order.
    auto per = parallel_map(M_max + 1, [&](int m) { return per_block_kernel(m, convention, tol); });
    int ev = 0, od = 0;
    for (auto& [e, o] : per) {
        ev += e;
        od += o;
    }
    return {ev, od};
}

std::vector<std::pair<int, int>> quadratic_solutions(int box) {
    std::vector<std::pair<int, int>> out;
    for (int m = -box; m <= box; ++m)
        for (int k = -box; k <= box; ++k)
            if (4 * m * (m + 2) - 4 * k * k + 10 * k == 0) out.emplace_back(m, k);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> quadratic_solutions_divisor() {
    // (4k - 4m - 9)(4k + 4m - 1) = 9.
    std::vector<std::pair<int, int>> out;
    for (int d1 : {1, -1, 3, -3, 9, -9}) {
        int d2 = 9 / d1;
        if (d1 * d2 != 9) continue;
        int num_k = d1 + d2 + 10, num_m = d2 - d1 - 8;
        if (num_k % 8 == 0 && num_m % 8 == 0) out.emplace_back(num_m / 8, num_k / 8);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ModeProblem> hopf_mode_problems(int block_max) {
    std::vector<ModeProblem> out;
    for (int mb = 0; mb <= block_max; ++mb) {
        BlockOperator bo = su2_block(mb, 0, true);
        // Restrict everything to the theta-free subspace first.
        std::vector<int> tf;  // global indices with theta-free fiber part
        std::vector<int> tf_parity;
        for (int k = 0; k < bo.d; ++k)
            for (int s : bo.theta_free) {
                tf.push_back(k * bo.fdim + s);
                tf_parity.push_back(bo.fiber_parity[s]);
            }
        auto sub = [&](const MatrixXcd& M) {
            MatrixXcd r((int)tf.size(), (int)tf.size());
            for (size_t i = 0; i < tf.size(); ++i)
                for (size_t j = 0; j < tf.size(); ++j) r((int)i, (int)j) = M(tf[i], tf[j]);
            return r;
        };
        MatrixXcd mode0 = sub(bo.mode_op);
        MatrixXcd dirac0 = sub(bo.diracF);
        MatrixXcd cd0 = sub(bo.cdtheta);
        // The mode operator commutes with the restricted pieces.
        if ((mode0 * dirac0 - dirac0 * mode0).cwiseAbs().maxCoeff() > 1e-8)
            throw std::logic_error("mode operator does not commute with the horizontal Dirac");
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(mode0);
        // Collect integer modes; each block contributes multiplicity m+1 copies.
        std::map<int, std::vector<int>> modes;
        for (int k = 0; k < es.eigenvalues().size(); ++k) {
            int m = (int)std::lround(es.eigenvalues()(k));
            if (std::abs(es.eigenvalues()(k) - m) > 1e-8)
                throw std::logic_error("non-integer Fourier mode in block decomposition");
            modes[m].push_back(k);
        }
        for (auto& [m, cols] : modes) {
            if (std::abs(m) > block_max) continue;
            // Order the eigenbasis by fiber parity so the problem is graded.
            MatrixXcd U((int)tf.size(), (int)cols.size());
            for (size_t c = 0; c < cols.size(); ++c) U.col((int)c) = es.eigenvectors().col(cols[c]);
            MatrixXcd G = MatrixXcd::Zero((int)tf.size(), (int)tf.size());
            for (size_t i = 0; i < tf.size(); ++i) G((int)i, (int)i) = tf_parity[i];
            MatrixXcd Gm = U.adjoint() * G * U;
            Eigen::SelfAdjointEigenSolver<MatrixXcd> eg(Gm);
            MatrixXcd W = U * eg.eigenvectors();
            std::vector<int> parity;
            for (int k = 0; k < eg.eigenvalues().size(); ++k) {
                double g = eg.eigenvalues()(k);
                if (std::abs(std::abs(g) - 1.0) > 1e-8)
                    throw std::logic_error("mode eigenspace is not parity-split");
                parity.push_back(g > 0 ? 1 : -1);
            }
            ModeProblem p;
            p.m = m;
            p.D = W.adjoint() * dirac0 * W;
            p.cOmega = W.adjoint() * cd0 * W;
            p.parity = parity;
            p.metric = MatrixXcd::Identity((int)parity.size(), (int)parity.size());
            // Clean numerical dust off the odd structure of D.
            for (int i = 0; i < p.D.rows(); ++i)
                for (int j = 0; j < p.D.cols(); ++j)
                    if (parity[i] == parity[j]) p.D(i, j) = 0;
            // Multiplicity: each block carries m_b + 1 identical copies.
            for (int copy = 0; copy < mb + 1; ++copy) out.push_back(p);
        }
    }
    return out;
}

}  // namespace absc
