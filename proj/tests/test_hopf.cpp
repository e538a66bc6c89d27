#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "absc/eigen_bridge.hpp"
#include "absc/hopf.hpp"

using namespace absc;

TEST_CASE("block fields satisfy the bracket relations and Casimir exactly") {
    for (int m = 0; m <= 12; ++m) {
        FourierBlock b = block_fields(m);
        int d = m + 1;
        QIMat two = QI(2) * QIMat::identity(d);
        CHECK(commutator(b.X, b.Y) == QI(2) * b.T);
        CHECK(commutator(b.Y, b.T) == QI(2) * b.X);
        CHECK(commutator(b.T, b.X) == QI(2) * b.Y);
        QIMat cas = -(b.X * b.X) - b.Y * b.Y - b.T * b.T;
        CHECK(cas == QI(m * (m + 2)) * QIMat::identity(d));
        (void)two;
    }
}

TEST_CASE("m=0 fields vanish, m=1 Casimir is 3") {
    FourierBlock b0 = block_fields(0);
    CHECK(b0.X.is_zero());
    CHECK(b0.Y.is_zero());
    CHECK(b0.T.is_zero());
    FourierBlock b1 = block_fields(1);
    QIMat cas = -(b1.X * b1.X) - b1.Y * b1.Y - b1.T * b1.T;
    CHECK(cas == QI(3) * QIMat::identity(2));
}

TEST_CASE("T spectrum is the step-2 weight lattice with block multiplicity") {
    FourierBlock b = block_fields(2);
    CHECK(b.multiplicity == 3);
    // T = i diag(m - 2k): eigenvalues {2i, 0, -2i}, each carrying the
    // multiplicity of the dual slot.
    CHECK(b.T.at(0, 0) == QI(Rat(0), Rat(2)));
    CHECK(b.T.at(1, 1) == QI(0));
    CHECK(b.T.at(2, 2) == QI(Rat(0), Rat(-2)));
}

TEST_CASE("unitary realization is skew-adjoint with the same relations") {
    for (int m : {1, 2, 5}) {
        FourierBlockU b = block_fields_unitary(m);
        CHECK((b.X + b.X.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((b.Y + b.Y.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((b.T + b.T.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        auto comm = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& c) { return a * c - c * a; };
        CHECK((comm(b.X, b.Y) - 2.0 * b.T).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((comm(b.Y, b.T) - 2.0 * b.X).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((comm(b.T, b.X) - 2.0 * b.Y).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("even operator: kernel at m=0, formula spectrum, m=1 invertible") {
    Eigen::MatrixXcd z = even_operator(0);
    CHECK(z.cwiseAbs().maxCoeff() == 0.0);  // zero matrix on C^2: kernel dim 2
    for (int m = 0; m <= 10; ++m) {
        SpectrumCheck sc = check_even_spectrum(m);
        INFO("m = ", m);
        CHECK(sc.matched);
        CHECK(sc.max_err < 1e-9);
    }
    // m=1: no kernel (the spectrum contains 9/2 and -1/2, both nonzero).
    SpectrumCheck s1 = check_even_spectrum(1);
    REQUIRE(s1.computed.size() == 4);
    CHECK(s1.computed.front() == doctest::Approx(-0.5));
    CHECK(s1.computed.back() == doctest::Approx(4.5));
    for (double v : s1.computed) CHECK(std::abs(v) > 0.4);
}

TEST_CASE("odd operator: matched coefficient variant, eigmin >= m/2") {
    int variant = odd_variant_matching_spectrum(6);
    CHECK(variant == 0);  // the 3/2 c(dV) T coefficient matches the stated set
    for (int m = 0; m <= 10; ++m) {
        SpectrumCheck sc = check_odd_spectrum(m, variant);
        INFO("m = ", m);
        CHECK(sc.matched);
        CHECK(sc.max_err < 1e-9);
        if (m >= 1) CHECK(odd_operator_eigmin(m, variant) >= m / 2.0 - 1e-9);
    }
    // The displayed 3/4 coefficient does not reproduce the stated spectrum.
    CHECK(!check_odd_spectrum(2, 1).matched);
    // m=3 spectrum values against the closed formula.
    SpectrumCheck s3 = check_odd_spectrum(3, variant);
    CHECK(s3.matched);
    CHECK(s3.computed.front() == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("full kernel is (2,0), concentrated at m=0, convention-independent") {
    auto [e0, o0] = per_block_kernel(0);
    CHECK(e0 == 2);
    CHECK(o0 == 0);
    for (int m = 1; m <= 8; ++m) {
        auto [e, o] = per_block_kernel(m);
        INFO("m = ", m);
        CHECK(e == 0);
        CHECK(o == 0);
    }
    for (int M = 2; M <= 10; ++M) {
        auto k = full_kernel(M);
        CHECK(k.first == 2);
        CHECK(k.second == 0);
    }
    CHECK(full_kernel(6, 1) == std::make_pair(2, 0));
    CHECK_THROWS_AS(full_kernel(1), std::invalid_argument);
}

TEST_CASE("quadratic solutions") {
    std::vector<std::pair<int, int>> expect{{-2, 0}, {-1, 2}, {0, 0}};
    CHECK(quadratic_solutions(100) == expect);
    CHECK(quadratic_solutions_divisor() == expect);
    // Box enlargement does not add solutions.
    CHECK(quadratic_solutions(50) == quadratic_solutions(100));
    // No solutions with m >= 1.
    for (auto& [m, k] : quadratic_solutions(100)) CHECK(m < 1);
}
