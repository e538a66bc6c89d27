#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace absc {

using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline Rat rat_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

// Gaussian rational a + b*i. Exact scalar for all algebraic modules.
struct QI {
    Rat re{0};
    Rat im{0};

    QI() = default;
    QI(int v) : re(v) {}
    QI(long long v) : re(v) {}
    QI(const Rat& r) : re(r) {}
    QI(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static QI i() { return QI(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    QI conj() const { return QI(re, -im); }
    Rat norm2() const { return re * re + im * im; }

    QI operator-() const { return QI(-re, -im); }
    QI& operator+=(const QI& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    QI& operator-=(const QI& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    QI& operator*=(const QI& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend QI operator+(QI a, const QI& b) { return a += b; }
    friend QI operator-(QI a, const QI& b) { return a -= b; }
    friend QI operator*(QI a, const QI& b) { return a *= b; }
    friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const QI& a, const QI& b) { return !(a == b); }

    QI inverse() const {
        Rat n = norm2();
        if (n == 0) throw std::domain_error("division by zero in QI");
        return QI(re / n, -im / n);
    }
    friend QI operator/(const QI& a, const QI& b) { return a * b.inverse(); }
};

// Canonical text form: "p/q" when real, "p/q,r/s" otherwise.
inline std::string qi_to_string(const QI& z) {
    if (z.im == 0) return rat_to_string(z.re);
    return rat_to_string(z.re) + "," + rat_to_string(z.im);
}

inline QI qi_from_string(const std::string& s) {
    auto pos = s.find(',');
    if (pos == std::string::npos) return QI(rat_from_string(s));
    return QI(rat_from_string(s.substr(0, pos)), rat_from_string(s.substr(pos + 1)));
}

inline double rat_to_double(const Rat& r) { return static_cast<double>(r); }

}  // namespace absc
