#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "absc/rational.hpp"

namespace absc {

// Dense exact matrix over the Gaussian rationals.
struct QIMat {
    int rows = 0;
    int cols = 0;
    std::vector<QI> a;

    QIMat() = default;
    QIMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static QIMat zero(int r, int c) { return QIMat(r, c); }
    static QIMat identity(int n) {
        QIMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = QI(1);
        return m;
    }
    static QIMat scalar(int n, const QI& v) {
        QIMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = v;
        return m;
    }

    QI& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const QI& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_square() const { return rows == cols; }

    QIMat operator-() const {
        QIMat m(rows, cols);
        for (size_t k = 0; k < a.size(); ++k) m.a[k] = -a[k];
        return m;
    }
    QIMat& operator+=(const QIMat& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
        return *this;
    }
    QIMat& operator-=(const QIMat& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
        return *this;
    }
    friend QIMat operator+(QIMat x, const QIMat& y) { return x += y; }
    friend QIMat operator-(QIMat x, const QIMat& y) { return x -= y; }

    friend QIMat operator*(const QIMat& x, const QIMat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch in matrix product");
        QIMat m(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const QI& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < y.cols; ++j) {
                    const QI& ykj = y.at(k, j);
                    if (!ykj.is_zero()) m.at(i, j) += xik * ykj;
                }
            }
        return m;
    }
    friend QIMat operator*(const QI& s, QIMat m) {
        for (auto& x : m.a) x *= s;
        return m;
    }
    friend QIMat operator*(const Rat& s, QIMat m) { return QI(s) * std::move(m); }

    friend bool operator==(const QIMat& x, const QIMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const QIMat& x, const QIMat& y) { return !(x == y); }

    QIMat transpose() const {
        QIMat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
        return m;
    }
    QIMat conj() const {
        QIMat m(rows, cols);
        for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k].conj();
        return m;
    }
    QIMat adjoint() const { return transpose().conj(); }

    QI trace() const {
        QI t;
        for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
        return t;
    }

    QIMat kron(const QIMat& o) const {
        QIMat m(rows * o.rows, cols * o.cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (at(i, j).is_zero()) continue;
                for (int p = 0; p < o.rows; ++p)
                    for (int q = 0; q < o.cols; ++q)
                        m.at(i * o.rows + p, j * o.cols + q) = at(i, j) * o.at(p, q);
            }
        return m;
    }

    QIMat block(const std::vector<int>& ri, const std::vector<int>& ci) const {
        QIMat m(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
        for (size_t i = 0; i < ri.size(); ++i)
            for (size_t j = 0; j < ci.size(); ++j) m.at((int)i, (int)j) = at(ri[i], ci[j]);
        return m;
    }

    // Determinant by fraction-exact Gaussian elimination over Q(i).
    QI det() const {
        if (!is_square()) throw std::invalid_argument("det of non-square matrix");
        QIMat m = *this;
        QI d(1);
        for (int c = 0; c < m.cols; ++c) {
            int piv = -1;
            for (int r = c; r < m.rows; ++r)
                if (!m.at(r, c).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return QI(0);
            if (piv != c) {
                for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
                d = -d;
            }
            QI p = m.at(c, c);
            d *= p;
            QI pinv = p.inverse();
            for (int r = c + 1; r < m.rows; ++r) {
                QI f = m.at(r, c) * pinv;
                if (f.is_zero()) continue;
                for (int j = c; j < m.cols; ++j) m.at(r, j) -= f * m.at(c, j);
            }
        }
        return d;
    }
    bool invertible() const { return !det().is_zero(); }

    bool commutes_with(const QIMat& o) const { return (*this) * o == o * (*this); }
    bool anticommutes_with(const QIMat& o) const { return ((*this) * o + o * (*this)).is_zero(); }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rows; ++i) {
            s += "[";
            for (int j = 0; j < cols; ++j) {
                s += qi_to_string(at(i, j));
                if (j + 1 < cols) s += ",";
            }
            s += "]";
            if (i + 1 < rows) s += ";";
        }
        s += "]";
        return s;
    }

   private:
    void check_same_shape(const QIMat& o) const {
        if (rows != o.rows || cols != o.cols)
            throw std::invalid_argument("dimension mismatch in matrix sum");
    }
};

inline QIMat from_rows(std::initializer_list<std::initializer_list<QI>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    QIMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
        int j = 0;
        for (const auto& v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

inline QIMat commutator(const QIMat& x, const QIMat& y) { return x * y - y * x; }
inline QIMat anticommutator(const QIMat& x, const QIMat& y) { return x * y + y * x; }

}  // namespace absc
