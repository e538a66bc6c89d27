#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "absc/uea.hpp"

using namespace absc;

namespace {

// Heisenberg algebra with PBW declaration order (P, Q, T), [Q, P] = T.
WeightedAlgebra heis() {
    WeightedAlgebra a = WeightedAlgebra::make({"P", "Q", "T"}, {1, 1, 2});
    a.set_bracket(1, 0, {{2, Rat(1)}});  // [Q, P] = T
    return a;
}

// su(2)-type brackets, all weights 1.
WeightedAlgebra su2() {
    WeightedAlgebra a = WeightedAlgebra::make({"X", "Y", "T"}, {1, 1, 1});
    a.set_bracket(0, 1, {{2, Rat(2)}});  // [X,Y] = 2T
    a.set_bracket(1, 2, {{0, Rat(2)}});  // [Y,T] = 2X
    a.set_bracket(2, 0, {{1, Rat(2)}});  // [T,X] = 2Y
    return a;
}

UEAElement gen(const WeightedAlgebra& a, int g) {
    return UEAElement::generator(a, g, QIMat::identity(1));
}

UEAElement sc(const WeightedAlgebra& a, int v) {
    return UEAElement::constant(a, QI(v) * QIMat::identity(1));
}

}  // namespace

TEST_CASE("bracket relation QP - PQ = T") {
    WeightedAlgebra a = heis();
    UEAElement Q = gen(a, 1), P = gen(a, 0), T = gen(a, 2);
    CHECK(multiply(Q, P) - multiply(P, Q) == T);
    CHECK(multiply(T, Q) - multiply(Q, T) == UEAElement::zero(a, 1));
}

TEST_CASE("(Q+P)^2 normal-orders to Q^2 + 2PQ + T + P^2") {
    WeightedAlgebra a = heis();
    UEAElement Q = gen(a, 1), P = gen(a, 0), T = gen(a, 2);
    UEAElement s = Q + P;
    UEAElement sq = multiply(s, s);
    UEAElement expect = multiply(Q, Q) + multiply(P, Q).scaled(QI(2)) + T + multiply(P, P);
    CHECK(sq == expect);
    CHECK(sq.render() == "[[1]] * T + [[1]] * Q^2 + [[2]] * P Q + [[1]] * P^2");
}

TEST_CASE("heisenberg order") {
    WeightedAlgebra a = heis();
    UEAElement Q = gen(a, 1), P = gen(a, 0), T = gen(a, 2);
    CHECK(heisenberg_order(multiply(multiply(Q, P), T)) == 4);
    CHECK(heisenberg_order(sc(a, 5)) == 0);
    CHECK(heisenberg_order(UEAElement::zero(a, 1)) == kOrderNegInf);
    // -Q^2 - P^2 + c T with a matrix coefficient has order 2.
    QIMat c = from_rows({{QI(0), QI(-1)}, {QI(1), QI(0)}});
    QIMat id2 = QIMat::identity(2);
    UEAElement x = -multiply(UEAElement::generator(a, 1, id2), UEAElement::generator(a, 1, id2)) -
                   multiply(UEAElement::generator(a, 0, id2), UEAElement::generator(a, 0, id2)) +
                   UEAElement::generator(a, 2, c);
    CHECK(heisenberg_order(x) == 2);
}

TEST_CASE("graded order with a fiber grading") {
    WeightedAlgebra a = heis();
    // Fiber = two summands with degrees (0, 1); eps shifts up, iota shifts down.
    std::vector<int> deg{0, 1};
    QIMat eps = from_rows({{QI(0), QI(0)}, {QI(1), QI(0)}});
    QIMat iota = from_rows({{QI(0), QI(1)}, {QI(0), QI(0)}});
    QIMat id2 = QIMat::identity(2);

    UEAElement epsT = UEAElement::generator(a, 2, eps, deg);  // degree +1, order 2
    CHECK(graded_order(epsT) == 1);
    UEAElement iotaC = UEAElement::constant(a, iota, deg);  // degree -1, order 0
    CHECK(graded_order(iotaC) == 1);
    UEAElement cQ = UEAElement::generator(a, 1, id2, deg);  // degree 0, order 1
    CHECK(graded_order(cQ) == 1);
    // Degree-raising zeroth-order term has graded order -1 and drops from the
    // graded cosymbol at level 1.
    UEAElement raise0 = UEAElement::constant(a, eps, deg);
    CHECK(graded_order(raise0) == -1);
    UEAElement dirac = epsT + iotaC + cQ + raise0;
    CHECK(cosymbol(dirac, 1, true) == epsT + iotaC + cQ);
}

TEST_CASE("cosymbol keeps exactly the top-order terms") {
    WeightedAlgebra a = heis();
    QIMat c = from_rows({{QI(0), QI(-1)}, {QI(1), QI(0)}});
    QIMat id2 = QIMat::identity(2);
    UEAElement Q = UEAElement::generator(a, 1, id2);
    UEAElement P = UEAElement::generator(a, 0, id2);
    UEAElement x = -multiply(Q, Q) - multiply(P, P) + UEAElement::generator(a, 2, c) + Q;
    UEAElement top = -multiply(Q, Q) - multiply(P, P) + UEAElement::generator(a, 2, c);
    CHECK(cosymbol(x, 2, false) == top);
    CHECK(cosymbol(UEAElement::zero(a, 2), 3, false) == UEAElement::zero(a, 2));
    CHECK_THROWS_WITH_AS(cosymbol(x, 1, false), doctest::Contains("order exceeds"),
                         std::invalid_argument);
}

TEST_CASE("normal ordering is associative on random elements") {
    std::mt19937_64 rng(17);
    for (const WeightedAlgebra& a : {heis(), su2()}) {
        auto randel = [&]() {
            UEAElement e = UEAElement::zero(a, 2);
            for (int t = 0; t < 3; ++t) {
                QIMat m(2, 2);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        m.at(i, j) =
                            QI(Rat((long long)(rng() % 7) - 3, 1 + (long long)(rng() % 2)));
                UEAElement term = UEAElement::constant(a, m);
                for (int k = 0; k < 2; ++k) {
                    int g = (int)(rng() % a.size());
                    if (rng() % 2)
                        term = multiply(term, UEAElement::generator(a, g, QIMat::identity(2)));
                }
                e += term;
            }
            return e;
        };
        for (int trial = 0; trial < 25; ++trial) {
            UEAElement x = randel(), y = randel(), z = randel();
            CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
        }
    }
}

TEST_CASE("jacobi holds for the model algebras") {
    CHECK(heis().jacobi_ok());
    CHECK(su2().jacobi_ok());
    WeightedAlgebra bad = WeightedAlgebra::make({"A", "B", "C"}, {1, 1, 1});
    bad.set_bracket(0, 1, {{2, Rat(1)}});
    bad.set_bracket(1, 2, {{0, Rat(1)}});
    bad.set_bracket(0, 2, {{0, Rat(1)}});
    CHECK(!bad.jacobi_ok());
}

TEST_CASE("graded cosymbol is multiplicative when orders are attained") {
    WeightedAlgebra a = heis();
    std::vector<int> deg{0, 1};
    QIMat eps = from_rows({{QI(0), QI(0)}, {QI(1), QI(0)}});
    QIMat iota = from_rows({{QI(0), QI(1)}, {QI(0), QI(0)}});
    QIMat id2 = QIMat::identity(2);
    UEAElement x = UEAElement::generator(a, 1, id2, deg) + UEAElement::generator(a, 2, eps, deg) +
                   UEAElement::constant(a, iota, deg);
    UEAElement y = UEAElement::generator(a, 0, id2, deg) + UEAElement::constant(a, iota, deg);
    int lx = graded_order(x), ly = graded_order(y);
    UEAElement xy = multiply(x, y);
    CHECK(graded_order(xy) <= lx + ly);
    CHECK(cosymbol(xy, lx + ly, true) == multiply(cosymbol(x, lx, true), cosymbol(y, ly, true)));
}

TEST_CASE("algebra mismatch rejected") {
    WeightedAlgebra a = heis(), b = su2();
    CHECK_THROWS_WITH_AS(multiply(gen(a, 0), gen(b, 0)), doctest::Contains("algebra mismatch"),
                         std::invalid_argument);
}

TEST_CASE("rendering golden forms") {
    WeightedAlgebra a = heis();
    CHECK(UEAElement::zero(a, 1).render() == "0");
    CHECK(sc(a, 3).render() == "[[3]] * 1");
    // T is central, so T(QP) = PQT + T^2.
    UEAElement m = multiply(gen(a, 2), multiply(gen(a, 1), gen(a, 0)));
    CHECK(m.render() == "[[1]] * T^2 + [[1]] * P Q T");
}
