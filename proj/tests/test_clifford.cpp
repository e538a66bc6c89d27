#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "absc/clifford.hpp"

using namespace absc;

TEST_CASE("rank 1 generator squares to -I and is odd") {
    CliffordData cd = build_clifford(1);
    CHECK(cd.dim == 2);
    CHECK(cd.gamma[0] * cd.gamma[0] == QI(-1) * QIMat::identity(2));
    CHECK((cd.gamma[0] * cd.grading + cd.grading * cd.gamma[0]).is_zero());
    CHECK(cd.gamma[0].adjoint() == -cd.gamma[0]);
}

TEST_CASE("rank 2 volume element squares to -I, is skew-adjoint, eigenvalues +-i") {
    CliffordData cd = build_clifford(2);
    QIMat w = cd.gamma[0] * cd.gamma[1];
    CHECK(w * w == QI(-1) * QIMat::identity(cd.dim));
    CHECK(w.adjoint() == -w);
    // (w - i)(w + i) = w^2 + 1 = 0, and both factors are nonzero.
    QIMat wi = w - QIMat::scalar(cd.dim, QI::i());
    QIMat wmi = w + QIMat::scalar(cd.dim, QI::i());
    CHECK((wi * wmi).is_zero());
    CHECK(!wi.is_zero());
    CHECK(!wmi.is_zero());
}

TEST_CASE("relations hold exhaustively for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        CliffordData cd = build_clifford(n);
        CHECK(cd.dim == (1 << ((n + 1) / 2)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                QIMat ac = anticommutator(cd.gamma[a], cd.gamma[b]);
                QIMat expect =
                    (a == b) ? QI(-2) * QIMat::identity(cd.dim) : QIMat::zero(cd.dim, cd.dim);
                CHECK(ac == expect);
            }
    }
}

TEST_CASE("invalid rank rejected") {
    CHECK_THROWS_WITH_AS(build_clifford(0), doctest::Contains("invalid-rank"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_exterior(-1), doctest::Contains("invalid-rank"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_bimodule(0), doctest::Contains("invalid-rank"),
                         std::invalid_argument);
}

TEST_CASE("rank 1 exterior operators are the shift matrices") {
    ExteriorModule e = build_exterior(1);
    QIMat eps = from_rows({{QI(0), QI(0)}, {QI(1), QI(0)}});
    QIMat iota = from_rows({{QI(0), QI(1)}, {QI(0), QI(0)}});
    CHECK(e.eps[0] == eps);
    CHECK(e.iota[0] == iota);
    CHECK(e.eps[0] * e.iota[0] * e.eps[0] == e.eps[0]);
}

TEST_CASE("canonical anticommutation relations for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        ExteriorModule e = build_exterior(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                QIMat ei = anticommutator(e.eps[a], e.iota[b]);
                CHECK(ei == (a == b ? QIMat::identity(e.dim) : QIMat::zero(e.dim, e.dim)));
                CHECK(anticommutator(e.eps[a], e.eps[b]).is_zero());
                CHECK(anticommutator(e.iota[a], e.iota[b]).is_zero());
            }
    }
}

TEST_CASE("scaled Clifford action squares to -u") {
    ExteriorModule e = build_exterior(2);
    for (const Rat& u : {Rat(1), Rat(0), Rat(5, 3)}) {
        for (int a = 0; a < 2; ++a) {
            QIMat c = e.c_u(a, u);
            CHECK(c * c == QI(-u) * QIMat::identity(e.dim));
        }
    }
}

TEST_CASE("bimodule relations") {
    BimoduleData b = build_bimodule(2);
    // cL_1 cL_2 + cR_2 cR_1 annihilates the odd-degree subspace.
    QIMat op = b.cL[0] * b.cL[1] + b.cR[1] * b.cR[0];
    ExteriorModule e = build_exterior(2);
    for (int s = 0; s < e.dim; ++s) {
        if (e.grading.at(s, s).re > 0) continue;  // odd basis vectors only
        for (int r = 0; r < e.dim; ++r) CHECK(op.at(r, s).is_zero());
    }
    CHECK(!op.is_zero());

    BimoduleData b1 = build_bimodule(1);
    QIMat cr = from_rows({{QI(0), QI(1)}, {QI(-1), QI(0)}});
    CHECK(b1.cR[0] == cr);
    CHECK(b1.cR[0] * b1.cR[0] == QI(-1) * QIMat::identity(2));

    // One-sided actions commute (plain commutator; forced by associativity).
    CHECK(commutator(b.cL[0], b.cR[0]).is_zero());
    CHECK(commutator(b.cL[0], b.cR[1]).is_zero());
    CHECK(commutator(b.cL[1], b.cR[0]).is_zero());
}

TEST_CASE("left and right actions commute and square to -|phi|^2") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; ++n) {
        BimoduleData b = build_bimodule(n);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Rat> phi;
            Rat norm2 = 0;
            for (int a = 0; a < n; ++a) {
                Rat v((long long)(rng() % 9) - 4, 1 + (long long)(rng() % 3));
                phi.push_back(v);
                norm2 += v * v;
            }
            QIMat L = QIMat::zero(b.dim, b.dim), R = QIMat::zero(b.dim, b.dim);
            for (int a = 0; a < n; ++a) {
                L += phi[a] * b.cL[a];
                R += phi[a] * b.cR[a];
            }
            CHECK(L * L == QI(-norm2) * QIMat::identity(b.dim));
            CHECK(R * R == QI(-norm2) * QIMat::identity(b.dim));
            CHECK(commutator(L, R).is_zero());
        }
    }
}

TEST_CASE("graded tensor Koszul sign") {
    CliffordData c1 = build_clifford(1);
    GradedRep A{c1.dim, c1.grading, {c1.gamma[0]}, {}};
    GradedRep B{c1.dim, c1.grading, {c1.gamma[0]}, {}};
    GradedRep AB = graded_tensor(A, B);
    const QIMat& a = AB.odd_gens[0];
    const QIMat& b = AB.odd_gens[1];
    CHECK(a * b == -(b * a));
    CHECK(AB.grading == c1.grading.kron(c1.grading));

    GradedRep I1{1, QIMat::identity(1), {}, {QIMat::identity(1)}};
    GradedRep II = graded_tensor(I1, I1);
    CHECK(II.even_gens[0] == QIMat::identity(1));
    CHECK(II.even_gens[1] == QIMat::identity(1));
}

TEST_CASE("Clifford(2) tensor Exterior(1) realizes the rank-3 relations") {
    CliffordData c2 = build_clifford(2);
    ExteriorModule e1 = build_exterior(1);
    GradedRep A{c2.dim, c2.grading, {c2.gamma[0], c2.gamma[1]}, {}};
    GradedRep B{e1.dim, e1.grading, {e1.eps[0] - e1.iota[0]}, {}};
    GradedRep AB = graded_tensor(A, B);
    REQUIRE(AB.odd_gens.size() == 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            QIMat ac = anticommutator(AB.odd_gens[i], AB.odd_gens[j]);
            QIMat expect =
                (i == j) ? QI(-2) * QIMat::identity(AB.dim) : QIMat::zero(AB.dim, AB.dim);
            CHECK(ac == expect);
        }
}

TEST_CASE("graded tensor rejects empty factors") {
    GradedRep bad{0, QIMat(), {}, {}};
    GradedRep ok{1, QIMat::identity(1), {}, {}};
    CHECK_THROWS_AS(graded_tensor(bad, ok), std::invalid_argument);
}
