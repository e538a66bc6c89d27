#pragma once

#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "absc/matrix.hpp"

namespace absc {

// Weighted generators with constant structure coefficients
// [g_a, g_b] = sum_c coeff * g_c. Normal ordering rewrites descents
// g_b g_a -> g_a g_b + [g_b, g_a]; it terminates because a swap lowers the
// inversion count and a contraction lowers the word length.
struct WeightedAlgebra {
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> bracket;

    int size() const { return static_cast<int>(names.size()); }

    static WeightedAlgebra make(std::vector<std::string> names, std::vector<int> weights);

    // Sets [g_a, g_b] (and the opposite orientation).
    void set_bracket(int a, int b, std::vector<std::pair<int, Rat>> rhs);

    bool jacobi_ok() const;

    bool same_as(const WeightedAlgebra& o) const;
};

constexpr int kOrderNegInf = INT_MIN;

using Monomial = std::vector<uint16_t>;

struct UEAElement {
    const WeightedAlgebra* alg = nullptr;
    int fiber = 1;
    std::vector<int> fiber_deg;  // empty means everything in degree 0
    std::map<Monomial, QIMat> terms;

    static UEAElement zero(const WeightedAlgebra& a, int fiber, std::vector<int> deg = {});
    static UEAElement constant(const WeightedAlgebra& a, const QIMat& m,
                               std::vector<int> deg = {});
    static UEAElement generator(const WeightedAlgebra& a, int gen, const QIMat& coeff,
                                std::vector<int> deg = {});

    bool is_zero() const { return terms.empty(); }

    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    UEAElement operator-() const;
    friend UEAElement operator+(UEAElement x, const UEAElement& y) { return x += y; }
    friend UEAElement operator-(UEAElement x, const UEAElement& y) { return x -= y; }
    friend bool operator==(const UEAElement& x, const UEAElement& y) {
        return x.terms == y.terms;
    }
    friend bool operator!=(const UEAElement& x, const UEAElement& y) { return !(x == y); }

    UEAElement scaled(const QI& s) const;
    // Left/right multiplication by a constant fiber matrix.
    UEAElement mat_left(const QIMat& m) const;
    UEAElement mat_right(const QIMat& m) const;

    std::string render() const;
};

UEAElement multiply(const UEAElement& x, const UEAElement& y);

int heisenberg_order(const UEAElement& x);
int graded_order(const UEAElement& x);
UEAElement cosymbol(const UEAElement& x, int l, bool graded);

// Normal form of a plain word of generator indices (PBW rewriting).
std::map<Monomial, Rat> normalize_word(const WeightedAlgebra& alg, const std::vector<int>& word);

int monomial_weight(const WeightedAlgebra& alg, const Monomial& m);

}  // namespace absc
