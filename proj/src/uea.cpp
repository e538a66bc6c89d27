#include "absc/uea.hpp"

#include <algorithm>
#include <stdexcept>

namespace absc {

WeightedAlgebra WeightedAlgebra::make(std::vector<std::string> names, std::vector<int> weights) {
    if (names.size() != weights.size()) throw std::invalid_argument("names/weights size mismatch");
    WeightedAlgebra a;
    a.names = std::move(names);
    a.weights = std::move(weights);
    int n = a.size();
    a.bracket.assign(n, std::vector<std::vector<std::pair<int, Rat>>>(n));
    return a;
}

void WeightedAlgebra::set_bracket(int a, int b, std::vector<std::pair<int, Rat>> rhs) {
    if (a == b) throw std::invalid_argument("bracket of a generator with itself");
    bracket[a][b] = rhs;
    for (auto& [c, v] : rhs) v = -v;
    bracket[b][a] = std::move(rhs);
}

namespace {

// [g_a, x] for x given as a generator-coefficient list.
std::vector<std::pair<int, Rat>> bracket_gen_list(const WeightedAlgebra& alg, int a,
                                                  const std::vector<std::pair<int, Rat>>& x) {
    std::map<int, Rat> acc;
    for (auto& [b, xv] : x)
        for (auto& [c, bv] : alg.bracket[a][b]) acc[c] += xv * bv;
    std::vector<std::pair<int, Rat>> r;
    for (auto& [c, v] : acc)
        if (v != 0) r.emplace_back(c, v);
    return r;
}

}  // namespace

bool WeightedAlgebra::jacobi_ok() const {
    int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                std::map<int, Rat> acc;
                auto add = [&](int x, const std::vector<std::pair<int, Rat>>& yz) {
                    for (auto& [g, v] : bracket_gen_list(*this, x, yz)) acc[g] += v;
                };
                add(a, bracket[b][c]);
                add(b, bracket[c][a]);
                add(c, bracket[a][b]);
                for (auto& [g, v] : acc)
                    if (v != 0) return false;
            }
    return true;
}

bool WeightedAlgebra::same_as(const WeightedAlgebra& o) const {
    return names == o.names && weights == o.weights && bracket == o.bracket;
}

std::map<Monomial, Rat> normalize_word(const WeightedAlgebra& alg, const std::vector<int>& word) {
    std::map<Monomial, Rat> result;
    std::vector<std::pair<std::vector<int>, Rat>> stack;
    stack.emplace_back(word, Rat(1));
    int n = alg.size();
    while (!stack.empty()) {
        auto [w, co] = std::move(stack.back());
        stack.pop_back();
        int descent = -1;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                descent = static_cast<int>(i);
                break;
            }
        if (descent < 0) {
            Monomial m(n, 0);
            for (int g : w) m[g]++;
            auto it = result.find(m);
            if (it == result.end())
                result.emplace(std::move(m), co);
            else {
                it->second += co;
                if (it->second == 0) result.erase(it);
            }
            continue;
        }
        int a = w[descent], b = w[descent + 1];  // a > b, g_a g_b = g_b g_a + [g_a, g_b]
        std::vector<int> swapped = w;
        std::swap(swapped[descent], swapped[descent + 1]);
        stack.emplace_back(std::move(swapped), co);
        for (auto& [c, v] : alg.bracket[a][b]) {
            std::vector<int> contracted;
            contracted.reserve(w.size() - 1);
            contracted.insert(contracted.end(), w.begin(), w.begin() + descent);
            contracted.push_back(c);
            contracted.insert(contracted.end(), w.begin() + descent + 2, w.end());
            stack.emplace_back(std::move(contracted), co * v);
        }
    }
    return result;
}

int monomial_weight(const WeightedAlgebra& alg, const Monomial& m) {
    int w = 0;
    for (int g = 0; g < alg.size(); ++g) w += m[g] * alg.weights[g];
    return w;
}

UEAElement UEAElement::zero(const WeightedAlgebra& a, int fiber, std::vector<int> deg) {
    UEAElement e;
    e.alg = &a;
    e.fiber = fiber;
    e.fiber_deg = std::move(deg);
    if (!e.fiber_deg.empty() && static_cast<int>(e.fiber_deg.size()) != fiber)
        throw std::invalid_argument("fiber grading size mismatch");
    return e;
}

UEAElement UEAElement::constant(const WeightedAlgebra& a, const QIMat& m, std::vector<int> deg) {
    UEAElement e = zero(a, m.rows, std::move(deg));
    if (!m.is_zero()) e.terms.emplace(Monomial(a.size(), 0), m);
    return e;
}

UEAElement UEAElement::generator(const WeightedAlgebra& a, int gen, const QIMat& coeff,
                                 std::vector<int> deg) {
    UEAElement e = zero(a, coeff.rows, std::move(deg));
    if (!coeff.is_zero()) {
        Monomial m(a.size(), 0);
        m[gen] = 1;
        e.terms.emplace(std::move(m), coeff);
    }
    return e;
}

namespace {
void check_compatible(const UEAElement& x, const UEAElement& y) {
    if (x.alg != y.alg && !(x.alg && y.alg && x.alg->same_as(*y.alg)))
        throw std::invalid_argument("algebra mismatch");
    if (x.fiber != y.fiber) throw std::invalid_argument("fiber dimension mismatch");
}
}  // namespace

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    check_compatible(*this, o);
    for (auto& [m, v] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end())
            terms.emplace(m, v);
        else {
            it->second += v;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) { return *this += -o; }

UEAElement UEAElement::operator-() const {
    UEAElement r = *this;
    for (auto& [m, v] : r.terms) v = -v;
    return r;
}

UEAElement UEAElement::scaled(const QI& s) const {
    UEAElement r = *this;
    if (s.is_zero()) {
        r.terms.clear();
        return r;
    }
    for (auto& [m, v] : r.terms) v = s * v;
    return r;
}

UEAElement UEAElement::mat_left(const QIMat& m) const {
    UEAElement r = zero(*alg, fiber, fiber_deg);
    for (auto& [mo, v] : terms) {
        QIMat p = m * v;
        if (!p.is_zero()) r.terms.emplace(mo, std::move(p));
    }
    return r;
}

UEAElement UEAElement::mat_right(const QIMat& m) const {
    UEAElement r = zero(*alg, fiber, fiber_deg);
    for (auto& [mo, v] : terms) {
        QIMat p = v * m;
        if (!p.is_zero()) r.terms.emplace(mo, std::move(p));
    }
    return r;
}

UEAElement multiply(const UEAElement& x, const UEAElement& y) {
    check_compatible(x, y);
    const WeightedAlgebra& alg = *x.alg;
    UEAElement r = UEAElement::zero(alg, x.fiber, x.fiber_deg);
    for (auto& [mx, vx] : x.terms) {
        std::vector<int> wx;
        for (int g = 0; g < alg.size(); ++g)
            for (int k = 0; k < mx[g]; ++k) wx.push_back(g);
        for (auto& [my, vy] : y.terms) {
            std::vector<int> w = wx;
            for (int g = 0; g < alg.size(); ++g)
                for (int k = 0; k < my[g]; ++k) w.push_back(g);
            QIMat coeff = vx * vy;
            if (coeff.is_zero()) continue;
            for (auto& [mono, rat] : normalize_word(alg, w)) {
                QIMat t = QI(rat) * coeff;
                auto it = r.terms.find(mono);
                if (it == r.terms.end())
                    r.terms.emplace(mono, std::move(t));
                else {
                    it->second += t;
                    if (it->second.is_zero()) r.terms.erase(it);
                }
            }
        }
    }
    return r;
}

int heisenberg_order(const UEAElement& x) {
    if (x.is_zero()) return kOrderNegInf;
    int best = kOrderNegInf;
    for (auto& [m, v] : x.terms) best = std::max(best, monomial_weight(*x.alg, m));
    return best;
}

int graded_order(const UEAElement& x) {
    if (x.is_zero()) return kOrderNegInf;
    int best = kOrderNegInf;
    for (auto& [m, v] : x.terms) {
        int w = monomial_weight(*x.alg, m);
        for (int i = 0; i < v.rows; ++i)
            for (int j = 0; j < v.cols; ++j) {
                if (v.at(i, j).is_zero()) continue;
                int p = x.fiber_deg.empty() ? 0 : x.fiber_deg[i];
                int q = x.fiber_deg.empty() ? 0 : x.fiber_deg[j];
                best = std::max(best, w - p + q);
            }
    }
    return best;
}

UEAElement cosymbol(const UEAElement& x, int l, bool graded) {
    int ord = graded ? graded_order(x) : heisenberg_order(x);
    if (ord != kOrderNegInf && ord > l)
        throw std::invalid_argument("order exceeds l in cosymbol");
    UEAElement r = UEAElement::zero(*x.alg, x.fiber, x.fiber_deg);
    for (auto& [m, v] : x.terms) {
        int w = monomial_weight(*x.alg, m);
        if (!graded) {
            if (w == l) r.terms.emplace(m, v);
            continue;
        }
        QIMat kept(v.rows, v.cols);
        bool any = false;
        for (int i = 0; i < v.rows; ++i)
            for (int j = 0; j < v.cols; ++j) {
                if (v.at(i, j).is_zero()) continue;
                int p = x.fiber_deg.empty() ? 0 : x.fiber_deg[i];
                int q = x.fiber_deg.empty() ? 0 : x.fiber_deg[j];
                if (w == l + p - q) {
                    kept.at(i, j) = v.at(i, j);
                    any = true;
                }
            }
        if (any) r.terms.emplace(m, std::move(kept));
    }
    return r;
}

std::string UEAElement::render() const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, v] : terms) {
        if (!first) s += " + ";
        first = false;
        s += v.to_string();
        bool had = false;
        for (int g = 0; g < alg->size(); ++g) {
            if (m[g] == 0) continue;
            s += had ? " " : " * ";
            had = true;
            s += alg->names[g];
            if (m[g] > 1) s += "^" + std::to_string(m[g]);
        }
        if (!had) s += " * 1";
    }
    return s;
}

}  // namespace absc
