#include "absc/clifford.hpp"

#include <stdexcept>

namespace absc {

namespace {

QIMat sigma_x() { return from_rows({{QI(0), QI(1)}, {QI(1), QI(0)}}); }
QIMat sigma_y() { return from_rows({{QI(0), -QI::i()}, {QI::i(), QI(0)}}); }
QIMat sigma_z() { return from_rows({{QI(1), QI(0)}, {QI(0), -QI(1)}}); }

QIMat kron_chain(const std::vector<QIMat>& factors) {
    QIMat m = factors.front();
    for (size_t k = 1; k < factors.size(); ++k) m = m.kron(factors[k]);
    return m;
}

}  // namespace

CliffordData build_clifford(int n) {
    if (n < 1) throw std::invalid_argument("invalid-rank: clifford rank must be >= 1");
    int m = (n + 1) / 2;  // number of 2x2 slots, dim = 2^m
    CliffordData cd;
    cd.rank = n;
    cd.dim = 1 << m;

    QIMat I2 = QIMat::identity(2);
    QIMat ix = QI::i() * sigma_x();
    QIMat iy = QI::i() * sigma_y();
    QIMat sz = sigma_z();

    // Jordan-Wigner gammas on 2m generators; keep the first n.
    for (int g = 0; g < n; ++g) {
        int slot = g / 2;
        std::vector<QIMat> f;
        for (int k = 0; k < slot; ++k) f.push_back(I2);
        f.push_back(g % 2 == 0 ? ix : iy);
        for (int k = slot + 1; k < m; ++k) f.push_back(sz);
        cd.gamma.push_back(kron_chain(f));
    }
    std::vector<QIMat> gz(m, sz);
    cd.grading = kron_chain(gz);
    return cd;
}

ExteriorModule build_exterior(int n) {
    if (n < 1) throw std::invalid_argument("invalid-rank: exterior rank must be >= 1");
    ExteriorModule ext;
    ext.rank = n;
    ext.dim = 1 << n;
    ext.degree = QIMat(ext.dim, ext.dim);
    ext.grading = QIMat(ext.dim, ext.dim);
    for (int s = 0; s < ext.dim; ++s) {
        int deg = __builtin_popcount(static_cast<unsigned>(s));
        ext.degree.at(s, s) = QI(deg);
        ext.grading.at(s, s) = QI(deg % 2 == 0 ? 1 : -1);
    }
    for (int a = 0; a < n; ++a) {
        QIMat e(ext.dim, ext.dim), io(ext.dim, ext.dim);
        for (int s = 0; s < ext.dim; ++s) {
            int sign = __builtin_popcount(static_cast<unsigned>(s) & ((1u << a) - 1)) % 2 ? -1 : 1;
            if (!(s & (1 << a))) {
                e.at(s | (1 << a), s) = QI(sign);  // psi_a wedged from the left
            } else {
                io.at(s & ~(1 << a), s) = QI(sign);
            }
        }
        ext.eps.push_back(std::move(e));
        ext.iota.push_back(std::move(io));
    }
    return ext;
}

BimoduleData build_bimodule(int n) {
    if (n < 1) throw std::invalid_argument("invalid-rank: bimodule rank must be >= 1");
    ExteriorModule ext = build_exterior(n);
    BimoduleData bd;
    bd.rank = n;
    bd.dim = ext.dim;
    bd.grading = ext.grading;
    for (int a = 0; a < n; ++a) {
        bd.cL.push_back(ext.eps[a] - ext.iota[a]);
        bd.cR.push_back(ext.grading * (ext.eps[a] + ext.iota[a]));
    }
    return bd;
}

QIMat right_mult(const ExteriorModule& ext, int a, const Rat& u) {
    return (ext.eps.at(a) + u * ext.iota.at(a)) * ext.grading;
}

QIMat clifford_two_form(const std::vector<QIMat>& gens, const QIMat& beta) {
    int n = static_cast<int>(gens.size());
    if (beta.rows != n || beta.cols != n)
        throw std::invalid_argument("dimension mismatch in clifford_two_form");
    QIMat r = QIMat::zero(gens[0].rows, gens[0].cols);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!beta.at(i, j).is_zero()) r += beta.at(i, j) * (gens[i] * gens[j]);
    return r;
}

QIMat spin_rep(const std::vector<QIMat>& gens, const QIMat& M) {
    int n = static_cast<int>(gens.size());
    if (M.rows != n || M.cols != n) throw std::invalid_argument("dimension mismatch in spin_rep");
    QIMat r = QIMat::zero(gens[0].rows, gens[0].cols);
    Rat quarter(1, 4);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // <M e_i, e_j> = M_{ji} with columns as images.
            const QI& v = M.at(j, i);
            if (!v.is_zero()) r += (QI(quarter) * v) * (gens[i] * gens[j]);
        }
    return r;
}

QIMat exterior_derivation(const ExteriorModule& ext, const QIMat& M) {
    if (M.rows != ext.rank || M.cols != ext.rank)
        throw std::invalid_argument("dimension mismatch in exterior_derivation");
    QIMat r = QIMat::zero(ext.dim, ext.dim);
    for (int a = 0; a < ext.rank; ++a)
        for (int b = 0; b < ext.rank; ++b)
            if (!M.at(a, b).is_zero()) r += M.at(a, b) * (ext.eps[a] * ext.iota[b]);
    return r;
}

QIMat lift_left(const QIMat& A, int dim_right) { return A.kron(QIMat::identity(dim_right)); }

QIMat lift_right_even(int dim_left, const QIMat& B) { return QIMat::identity(dim_left).kron(B); }

QIMat lift_right_odd(const QIMat& grading_left, const QIMat& B) { return grading_left.kron(B); }

GradedRep graded_tensor(const GradedRep& A, const GradedRep& B) {
    if (A.dim <= 0 || B.dim <= 0) throw std::invalid_argument("dimension mismatch in graded_tensor");
    GradedRep r;
    r.dim = A.dim * B.dim;
    r.grading = A.grading.kron(B.grading);
    for (const auto& g : A.odd_gens) r.odd_gens.push_back(lift_left(g, B.dim));
    for (const auto& g : A.even_gens) r.even_gens.push_back(lift_left(g, B.dim));
    for (const auto& g : B.odd_gens) r.odd_gens.push_back(lift_right_odd(A.grading, g));
    for (const auto& g : B.even_gens) r.even_gens.push_back(lift_right_even(A.dim, g));
    return r;
}

}  // namespace absc
