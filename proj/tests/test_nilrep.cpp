#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "absc/frame_geometry.hpp"
#include "absc/models.hpp"
#include "absc/nilrep.hpp"

using namespace absc;
using Eigen::MatrixXcd;
using Eigen::VectorXd;

namespace {

VectorXd vec1(double x) {
    VectorXd v(1);
    v << x;
    return v;
}

UEAElement squared(const FramePointData& d, const WeightedAlgebra& alg) {
    // The model's actual operator (the connection variants differ from the
    // template global formula by their right-action terms).
    UEAElement dd = to_uea(finite_part(assemble_Du(d)), alg, fiber_degrees(d));
    return multiply(dd, dd);
}

}  // namespace

TEST_CASE("darboux split of the contact models") {
    TwoStepAlgebra h1 = TwoStepAlgebra::from_frame(heisenberg_model(1).data);
    for (double lam : {1.0, 2.0, -1.5}) {
        DarbouxSplit s = darboux_split(h1, vec1(lam));
        CHECK(s.isotropic.empty());
        REQUIRE(s.alpha.size() == 1);
        CHECK(s.alpha[0] == doctest::Approx(std::abs(lam)).epsilon(1e-12));
        CHECK(!s.degenerate);
        // tau B(q, p) = alpha > 0 and the basis is orthonormal.
        Eigen::MatrixXd S = h1.tau_form(vec1(lam));
        const auto& [q, p] = s.pairs[0];
        CHECK(q.dot(S * p) == doctest::Approx(s.alpha[0]).epsilon(1e-12));
        CHECK(q.norm() == doctest::Approx(1.0));
        CHECK(p.norm() == doctest::Approx(1.0));
        CHECK(std::abs(q.dot(p)) < 1e-12);
    }
    TwoStepAlgebra h2 = TwoStepAlgebra::from_frame(heisenberg_model(2).data);
    DarbouxSplit s2 = darboux_split(h2, vec1(1.0));
    REQUIRE(s2.alpha.size() == 2);
    CHECK(s2.alpha[0] == doctest::Approx(1.0));
    CHECK(s2.alpha[1] == doctest::Approx(1.0));
    CHECK_THROWS_WITH_AS(darboux_split(h1, vec1(0.0)), doctest::Contains("invalid"),
                         std::invalid_argument);
}

TEST_CASE("degenerate form reduces to characters") {
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(3, 3);
    DarbouxSplit s = darboux_of_form(Z);
    CHECK(s.pairs.empty());
    CHECK((int)s.isotropic.size() == 3);
    CHECK(s.rank == 0);
    CHECK(s.degenerate);
}

TEST_CASE("abelian bracket is rejected by the surjectivity invariant") {
    CHECK_THROWS_WITH_AS(TwoStepAlgebra::from_frame(abelian_model(2).data),
                         doctest::Contains("surject"), std::invalid_argument);
}

TEST_CASE("schrodinger matrices: oscillator diagonal and center action") {
    FramePointData d = heisenberg_model(1).data;
    TwoStepAlgebra alg = TwoStepAlgebra::from_frame(d);
    WeightedAlgebra ualg = osculating_algebra(d);
    QIMat one = QIMat::identity(1);
    UEAElement Q = UEAElement::generator(ualg, 1, one);
    UEAElement P = UEAElement::generator(ualg, 0, one);
    UEAElement T = UEAElement::generator(ualg, 2, one);

    // -Q^2 - P^2 evaluates to the oscillator with diagonal alpha(2n+1).
    int N = 6;
    MatrixXcd osc = evaluate(-multiply(Q, Q) - multiply(P, P), alg, vec1(1.0), VectorXd(), N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            double expect = (i == j) ? 2.0 * i + 1.0 : 0.0;
            CHECK(std::abs(osc(i, j) - expect) < 1e-12);
        }
    // pi_lambda(T) = i lambda.
    MatrixXcd t = evaluate(T, alg, vec1(2.5), VectorXd(), N);
    CHECK((t - std::complex<double>(0, 2.5) * MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff() <
          1e-12);
    // The bracket relation is exact as an element.
    UEAElement zero = multiply(Q, P) - multiply(P, Q) - T;
    CHECK(zero.is_zero());
    // Window generator matrices satisfy the relation below the top level.
    SchrodingerRep rep = schrodinger_matrices(alg, vec1(1.0), VectorXd(), N);
    MatrixXcd comm = rep.gen[1] * rep.gen[0] - rep.gen[0] * rep.gen[1] - rep.gen[2];
    for (int i = 0; i + 1 < N; ++i)
        for (int j = 0; j + 1 < N; ++j) CHECK(std::abs(comm(i, j)) < 1e-12);
    CHECK_THROWS_WITH_AS(schrodinger_matrices(alg, vec1(1.0), VectorXd(), 3),
                         doctest::Contains("truncation-too-small"), std::invalid_argument);
    // Finite representation: layer-2 generators act by zero.
    VectorXd xi(2);
    xi << 0.5, -1.0;
    CHECK(evaluate_finite(T, alg, xi).cwiseAbs().maxCoeff() == 0.0);
    MatrixXcd fq = evaluate_finite(Q, alg, xi);
    CHECK(std::abs(fq(0, 0) - std::complex<double>(0, -1.0)) < 1e-14);
}

TEST_CASE("name mismatch between element and representation algebra") {
    FramePointData d = heisenberg_model(1).data;
    TwoStepAlgebra alg = TwoStepAlgebra::from_frame(d);
    WeightedAlgebra other = WeightedAlgebra::make({"A", "B", "C"}, {1, 1, 2});
    UEAElement x = UEAElement::generator(other, 0, QIMat::identity(1));
    CHECK_THROWS_WITH_AS(evaluate(x, alg, vec1(1.0), VectorXd(), 6),
                         doctest::Contains("name mismatch"), std::invalid_argument);
}

TEST_CASE("squared cosymbol of the bimodule model matches the displayed blocks") {
    FramePointData d = bimodule_bad_model().data;
    WeightedAlgebra alg = osculating_algebra(d);
    UEAElement delta = squared(d, alg);
    CHECK(heisenberg_order(delta) == 2);
    UEAElement sym = cosymbol(delta, 2, false);

    FiberLifts fl = fiber_lifts(d);
    const BimoduleData& bim = *d.mod.bim;
    QIMat a = bim.cL[1] * bim.cL[0];  // c^L(phi_Q phi_P)
    QIMat r = bim.cR[0] * bim.cR[1];  // c^R(phi_P phi_Q)
    Rat q34(3, 4), q14(1, 4);
    QIMat tcoef = fl.liftE(QI(q34) * a - QI(q14) * r);
    QIMat idv = QIMat::identity(fl.dimV);
    auto deg = fiber_degrees(d);
    UEAElement expect =
        -multiply(UEAElement::generator(alg, 1, idv, deg), UEAElement::generator(alg, 1, idv, deg)) -
        multiply(UEAElement::generator(alg, 0, idv, deg), UEAElement::generator(alg, 0, idv, deg)) +
        UEAElement::generator(alg, 2, tcoef, deg);
    CHECK(sym == expect);
    // Even block carries 1/2 c^L(phi_Q phi_P), odd block the full coefficient.
    for (int e = 0; e < fl.dimE; ++e)
        for (int f = 0; f < fl.dimE; ++f) {
            bool both_even =
                bim.grading.at(e, e).re > 0 && bim.grading.at(f, f).re > 0;
            bool both_odd = bim.grading.at(e, e).re < 0 && bim.grading.at(f, f).re < 0;
            QI got = tcoef.at(e * fl.dimT, f * fl.dimT);
            if (both_even) CHECK(got == QI(Rat(1, 2)) * a.at(e, f));
            if (both_odd) CHECK(got == a.at(e, f));
        }
}

TEST_CASE("rockland: spin contact models pass with the stated lower bound") {
    for (int n : {1, 2}) {
        FramePointData d = heisenberg_model(n).data;
        WeightedAlgebra alg = osculating_algebra(d);
        UEAElement sym = cosymbol(squared(d, alg), 2, false);
        TwoStepAlgebra two = TwoStepAlgebra::from_frame(d);
        RocklandOptions opts;
        opts.lambdas = {1, -1, 2, -2, 0.5, -0.5};
        opts.Ns = (n == 1) ? std::vector<int>{8, 16, 32} : std::vector<int>{6, 8};
        RocklandReport rep = rockland_check(sym, two, opts);
        CHECK(rep.verdict == "pass (sampled)");
        // quadratic-form minimum per sample >= (|lambda|/4) sum alpha - tol.
        for (const auto& s : rep.samples) {
            if (s.kind != "schrodinger") continue;
            double lam = s.tau[0];
            double bound = std::abs(lam) / 4.0 * n;
            for (auto& [N, v] : s.quadform_min) CHECK(v >= bound - 1e-6);
            CHECK(s.quadform_min.rbegin()->second <= bound + 1e-6);  // attained
        }
    }
}

TEST_CASE("rockland: both alternative connections fail with a zero mode") {
    for (auto entry : {bimodule_bad_model(), levi_civita_bad_model()}) {
        FramePointData d = entry.data;
        WeightedAlgebra alg = osculating_algebra(d);
        UEAElement sym = cosymbol(squared(d, alg), 2, false);
        TwoStepAlgebra two = TwoStepAlgebra::from_frame(d);
        RocklandOptions opts;
        opts.Ns = {8, 16, 32};
        RocklandReport rep = rockland_check(sym, two, opts);
        INFO(entry.name);
        CHECK(rep.verdict == "fail (witness)");
        CHECK(rep.min_sigma < 1e-8);
    }
}

TEST_CASE("rockland is monotone-stable in the truncation on shipped models") {
    auto verdict_at = [&](const CatalogEntry& e, std::vector<int> Ns) {
        FramePointData d = e.data;
        WeightedAlgebra alg = osculating_algebra(d);
        UEAElement sym = cosymbol(squared(d, alg), 2, false);
        RocklandOptions opts;
        opts.Ns = std::move(Ns);
        opts.lambdas = {1, -1};
        return rockland_check(sym, TwoStepAlgebra::from_frame(d), opts).verdict;
    };
    CHECK(verdict_at(heisenberg_model(1), {6, 8}) == "pass (sampled)");
    CHECK(verdict_at(heisenberg_model(1), {16, 24}) == "pass (sampled)");
    CHECK(verdict_at(bimodule_bad_model(), {6, 8}) == "fail (witness)");
    CHECK(verdict_at(bimodule_bad_model(), {16, 24}) == "fail (witness)");
}

TEST_CASE("model operator equals the graded cosymbol (two-step identity)") {
    for (auto e : {heisenberg_model(1), heisenberg_model(2), quaternionic_model()}) {
        FramePointData d = e.data;
        WeightedAlgebra alg = osculating_algebra(d);
        UEAElement mo = model_operator(d, alg);
        UEAElement g1 = cosymbol(to_uea(global_formula(d).total, alg, fiber_degrees(d)), 1, true);
        INFO(e.name);
        CHECK(mo == g1);
    }
}

TEST_CASE("finite representations leave the model operator invertible") {
    std::mt19937_64 rng(23);
    for (auto e : {heisenberg_model(1), quaternionic_model()}) {
        FramePointData d = e.data;
        WeightedAlgebra alg = osculating_algebra(d);
        UEAElement mo = model_operator(d, alg);
        TwoStepAlgebra two = TwoStepAlgebra::from_frame(d);
        for (int trial = 0; trial < 20; ++trial) {
            VectorXd xi(d.n1);
            double norm = 0;
            for (int k = 0; k < d.n1; ++k) {
                xi(k) = ((double)(rng() % 2001) - 1000) / 500.0;
                norm += xi(k) * xi(k);
            }
            if (norm < 1e-4) xi(0) += 1.0;
            MatrixXcd m = evaluate_finite(mo, two, xi);
            CHECK(sigma_min_of(m) > 1e-8);
        }
    }
}

TEST_CASE("per-mode lower bound alpha/4 is attained to 1e-9") {
    FramePointData d = heisenberg_model(1).data;
    TwoStepAlgebra alg = TwoStepAlgebra::from_frame(d);
    WeightedAlgebra ualg = osculating_algebra(d);
    QIMat J = from_rows({{QI(0), QI(-1)}, {QI(1), QI(0)}});
    QIMat id2 = QIMat::identity(2);
    UEAElement e = -multiply(UEAElement::generator(ualg, 1, id2), UEAElement::generator(ualg, 1, id2)) -
                   multiply(UEAElement::generator(ualg, 0, id2), UEAElement::generator(ualg, 0, id2)) +
                   UEAElement::generator(ualg, 2, QI(Rat(3, 4)) * J);
    for (double alpha : {1.0, 2.0, 0.5}) {
        int N = 24;
        MatrixXcd m = evaluate(e, alg, vec1(alpha), VectorXd(), N);
        auto idx = interior_indices(N, 1, 2);
        MatrixXcd mi((int)idx.size(), (int)idx.size());
        for (size_t a = 0; a < idx.size(); ++a)
            for (size_t b = 0; b < idx.size(); ++b) mi((int)a, (int)b) = m(idx[a], idx[b]);
        CHECK(std::abs(quadform_min_of(mi) - alpha / 4.0) < 1e-9);
    }
}

TEST_CASE("quaternionic model passes the sampled graded condition") {
    FramePointData d = quaternionic_model().data;
    WeightedAlgebra alg = osculating_algebra(d);
    UEAElement sym = cosymbol(squared(d, alg), 2, false);
    TwoStepAlgebra two = TwoStepAlgebra::from_frame(d);
    RocklandOptions opts;
    opts.Ns = {6, 8};
    RocklandReport rep = rockland_check(sym, two, opts);
    CHECK(rep.verdict == "pass (sampled)");
}
