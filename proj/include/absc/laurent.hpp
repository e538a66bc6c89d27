#pragma once

#include <map>
#include <set>
#include <string>

#include "absc/matrix.hpp"

namespace absc {

inline bool laurent_is_zero(const Rat& v) { return v == 0; }
inline bool laurent_is_zero(const QI& v) { return v.is_zero(); }
inline bool laurent_is_zero(const QIMat& v) { return v.is_zero(); }

// Finite Laurent polynomial in the scaling parameter u, with coefficients in T
// (T is Rat or QIMat). Zero coefficients are pruned so the support is canonical.
template <class T>
struct Laurent {
    std::map<int, T> c;

    Laurent() = default;
    explicit Laurent(const T& v, int deg = 0) {
        if (!laurent_is_zero(v)) c.emplace(deg, v);
    }

    static Laurent monomial(int deg, const T& v) { return Laurent(v, deg); }

    bool is_zero() const { return c.empty(); }

    T coeff(int deg, const T& zero) const {
        auto it = c.find(deg);
        return it == c.end() ? zero : it->second;
    }

    std::set<int> support() const {
        std::set<int> s;
        for (auto& [d, v] : c) s.insert(d);
        return s;
    }
    bool support_within(int lo, int hi) const {
        for (auto& [d, v] : c)
            if (d < lo || d > hi) return false;
        return true;
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [d, v] : o.c) {
            auto it = c.find(d);
            if (it == c.end())
                c.emplace(d, v);
            else {
                it->second += v;
                if (laurent_is_zero(it->second)) c.erase(it);
            }
        }
        return *this;
    }
    Laurent& operator-=(const Laurent& o) { return *this += -o; }
    Laurent operator-() const {
        Laurent r;
        for (auto& [d, v] : c) r.c.emplace(d, -v);
        return r;
    }
    friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
    friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }

    friend Laurent operator*(const Laurent& x, const Laurent& y) {
        Laurent r;
        for (auto& [dx, vx] : x.c)
            for (auto& [dy, vy] : y.c) {
                T prod = vx * vy;
                if (laurent_is_zero(prod)) continue;
                auto it = r.c.find(dx + dy);
                if (it == r.c.end())
                    r.c.emplace(dx + dy, std::move(prod));
                else {
                    it->second += prod;
                    if (laurent_is_zero(it->second)) r.c.erase(it);
                }
            }
        return r;
    }

    friend bool operator==(const Laurent& x, const Laurent& y) { return x.c == y.c; }
    friend bool operator!=(const Laurent& x, const Laurent& y) { return !(x == y); }
};

using LRat = Laurent<Rat>;
using LMat = Laurent<QIMat>;

inline LMat lmat_scale(const LRat& s, const QIMat& m) {
    LMat r;
    for (auto& [d, v] : s.c) {
        QIMat t = v * m;
        if (!t.is_zero()) r.c.emplace(d, std::move(t));
    }
    return r;
}

inline LMat lmat_mul(const LMat& x, const LMat& y) { return x * y; }

inline QIMat lmat_coeff(const LMat& m, int deg, int rows, int cols) {
    auto it = m.c.find(deg);
    return it == m.c.end() ? QIMat::zero(rows, cols) : it->second;
}

inline Rat lrat_eval(const LRat& p, const Rat& u) {
    Rat r = 0;
    for (auto& [d, v] : p.c) {
        Rat t = v;
        if (d > 0)
            for (int k = 0; k < d; ++k) t *= u;
        else
            for (int k = 0; k < -d; ++k) t /= u;
        r += t;
    }
    return r;
}

}  // namespace absc
