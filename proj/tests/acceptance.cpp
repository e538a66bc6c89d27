// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "absc/eigen_bridge.hpp"
#include "absc/frame_geometry.hpp"
#include "absc/hopf.hpp"
#include "absc/index_tools.hpp"
#include "absc/models.hpp"
#include "absc/nilrep.hpp"
#include "absc/s1_fourier.hpp"

using namespace absc;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double secs) {
    std::printf("[criterion %2d] %s - %s (%.2fs)\n", criterion, pass ? "PASS" : "FAIL",
                what.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::vector<FramePointData> route_instances() {
    std::vector<FramePointData> data;
    data.push_back(heisenberg_model(1).data);
    data.push_back(heisenberg_model(2).data);
    data.push_back(su2_model().data);
    for (uint64_t s : {3u, 5u, 9u}) data.push_back(fibration_model(s, true).data);
    struct Shape {
        int n1, n2;
    };
    std::vector<Shape> shapes{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
    for (int s = 0; s < 38; ++s)
        data.push_back(random_two_step(shapes[s % shapes.size()].n1,
                                       shapes[s % shapes.size()].n2, 5000 + s)
                           .data);
    for (int s = 0; s < 12; ++s) data.push_back(random_contact(1 + s % 2, 6000 + s).data);
    return data;
}

UEAElement squared_cosymbol(const FramePointData& d, const WeightedAlgebra& alg) {
    UEAElement dd = to_uea(finite_part(assemble_Du(d)), alg, fiber_degrees(d));
    return cosymbol(multiply(dd, dd), 2, false);
}

SampledLoop circle(std::complex<double> center, double radius, int samples, int turns = 1) {
    SampledLoop L;
    const double pi = std::acos(-1.0);
    for (int k = 0; k < samples; ++k) {
        double th = 2 * pi * turns * k / samples;
        L.pts.push_back(center +
                        radius * std::complex<double>(std::cos(th), std::sin(th)));
    }
    return L;
}

void criterion_1_2() {
    Timer t;
    bool eq = true, support = true;
    auto data = route_instances();
    for (const auto& d : data) {
        LaurentOperator Du = assemble_Du(d);  // throws if outside {-1,0,1}
        if (!Du.support_within(-1, 1)) support = false;
        if (!(finite_part(Du) == global_formula(d).total)) eq = false;
        if (shape_form(d) != shape_form_raw(d)) eq = false;
    }
    double secs = t.seconds();
    report(1, eq && secs < 10.0,
           "route equality finite_part(assemble_Du) == global_formula on " +
               std::to_string(data.size()) + " instances, exact, < 10 s",
           secs);
    report(2, support, "Laurent support of every assembled D_u within {-1,0,1}", secs);
}

void criterion_3() {
    Timer t;
    bool ok = true;
    for (const auto& e : {heisenberg_model(1), heisenberg_model(2), su2_model()}) {
        ok = ok && weitzenbock_check(e.data).ok;
        ok = ok && bianchi_defect_check(e.data).ok;
        ok = ok && curvature_contraction_check(e.data).ok;
    }
    // Rank-2: the cyclic Lie-derivative sum vanishes identically.
    for (const auto& e : {heisenberg_model(1), su2_model()}) {
        const FramePointData& d = e.data;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z)
                    for (int w = 0; w < 2; ++w) {
                        auto lt = [&](int p, int q, int xx, int ww) {
                            Rat s = 0;
                            for (int mu = 0; mu < d.n2; ++mu) {
                                Rat v = d.c[q][p][d.n1 + mu];
                                if (v != 0) s += v * lie_metric_F(d, d.n1 + mu, xx, ww);
                            }
                            return s;
                        };
                        Rat rhs = lt(y, z, x, w) + lt(x, y, z, w) + lt(z, x, y, w);
                        if (rhs != 0) ok = false;
                    }
    }
    report(3, ok, "Weitzenbock / Bianchi-defect / curvature-contraction residuals zero; rank-2 sum",
           t.seconds());
}

void criterion_4() {
    Timer t;
    FramePointData d = heisenberg_model(1).data;
    WeightedAlgebra alg = osculating_algebra(d);
    UEAElement sym = squared_cosymbol(d, alg);
    TwoStepAlgebra two = TwoStepAlgebra::from_frame(d);
    RocklandOptions opts;
    opts.lambdas = {1, -1, 2, -2, 0.5, -0.5};
    opts.Ns = {8, 16, 32};
    RocklandReport rep = rockland_check(sym, two, opts);
    bool ok = rep.verdict == "pass (sampled)";
    for (const auto& s : rep.samples) {
        if (s.kind != "schrodinger") continue;
        double bound = std::abs(s.tau[0]) / 4.0;  // sum alpha_j = n = 1
        for (auto& [N, v] : s.quadform_min)
            if (v < bound - 1e-6) ok = false;
        if (!s.converged) ok = false;
    }
    double secs = t.seconds();
    report(4, ok && secs < 30.0,
           "spin contact cosymbol: quadratic-form minimum >= |lambda|/4 * sum(alpha), N in {8,16,32}",
           secs);
}

void criterion_5() {
    Timer t;
    bool ok = true;
    for (auto e : {bimodule_bad_model(), levi_civita_bad_model()}) {
        WeightedAlgebra alg = osculating_algebra(e.data);
        UEAElement sym = squared_cosymbol(e.data, alg);
        RocklandOptions opts;
        opts.Ns = {8, 16, 32};
        RocklandReport rep = rockland_check(sym, TwoStepAlgebra::from_frame(e.data), opts);
        if (rep.verdict != "fail (witness)" || rep.min_sigma >= 1e-8) ok = false;
    }
    report(5, ok, "both alternative connection choices produce a fail-witness (sigma < 1e-8)",
           t.seconds());
}

void criterion_6() {
    Timer t;
    bool ok = true;
    for (auto e : {heisenberg_model(1), heisenberg_model(2), quaternionic_model()}) {
        WeightedAlgebra alg = osculating_algebra(e.data);
        UEAElement mo = model_operator(e.data, alg);
        UEAElement g1 =
            cosymbol(to_uea(global_formula(e.data).total, alg, fiber_degrees(e.data)), 1, true);
        if (!(mo == g1)) ok = false;
    }
    report(6, ok, "graded cosymbol of the finite part equals the model operator (exact)",
           t.seconds());
}

void criterion_7() {
    Timer t;
    bool ok = true;
    int variant = odd_variant_matching_spectrum(6);
    for (int m = 0; m <= 10; ++m) {
        if (!check_even_spectrum(m, 1e-9).matched) ok = false;
        if (!check_odd_spectrum(m, variant, 1e-9).matched) ok = false;
        if (m >= 1 && odd_operator_eigmin(m, variant) < m / 2.0 - 1e-9) ok = false;
    }
    std::vector<std::pair<int, int>> expect{{-2, 0}, {-1, 2}, {0, 0}};
    if (quadratic_solutions(100) != expect) ok = false;
    if (quadratic_solutions_divisor() != expect) ok = false;
    double secs = t.seconds();
    report(7, ok && secs < 20.0,
           "Hopf spectra match the formula sets to 1e-9 (multiplicity-matched); odd eigmin >= m/2; "
           "quadratic solutions {(-2,0),(-1,2),(0,0)}",
           secs);
}

void criterion_8() {
    Timer t;
    bool ok = true;
    for (int M = 2; M <= 10; ++M)
        if (full_kernel(M) != std::make_pair(2, 0)) ok = false;
    double secs = t.seconds();
    report(8, ok && secs < 60.0, "full kernel (2,0) for every M_max in {2..10}", secs);
}

void criterion_9() {
    Timer t;
    bool ok = true;
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        int dim = 2 + (int)(rng() % 11);
        int m = (int)(rng() % 11) - 5;
        ModeProblem p;
        p.m = m;
        p.parity.resize(dim);
        int n_even = 1 + (int)(rng() % (dim - 1));
        for (int i = 0; i < dim; ++i) p.parity[i] = i < n_even ? 1 : -1;
        auto rnd = [&]() {
            return std::complex<double>(((double)(rng() % 2001) - 1000) / 500.0,
                                        ((double)(rng() % 2001) - 1000) / 500.0);
        };
        Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(dim, dim),
                        C = Eigen::MatrixXcd::Zero(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                if (p.parity[i] != p.parity[j]) D(i, j) = rnd();
                else C(i, j) = rnd();
            }
        p.D = (D + D.adjoint()) / 2.0;
        p.cOmega = C;
        p.metric = Eigen::MatrixXcd::Identity(dim, dim);
        if (mode_kernel(p) != direct_block_kernel(p)) ok = false;
    }
    auto problems = hopf_mode_problems(6);
    TotalReport rep = assemble_total(problems);
    if (!rep.routes_agree || rep.total != std::make_pair(2, 0)) ok = false;
    report(9, ok, "mode_kernel == direct_block_kernel on 100 random instances and Hopf totals (2,0)",
           t.seconds());
}

void criterion_10() {
    Timer t;
    bool ok = true;
    std::mt19937_64 rng(171717);
    for (int trial = 0; trial < 200; ++trial) {
        double cx = ((double)(rng() % 2001) - 1000) / 250.0;
        double cy = ((double)(rng() % 2001) - 1000) / 250.0;
        double radius = 0.2 + (double)(rng() % 1000) / 500.0;
        double qx = cx + ((double)(rng() % 2001) - 1000) / 250.0;
        double qy = cy + ((double)(rng() % 2001) - 1000) / 250.0;
        std::complex<double> c(cx, cy), q(qx, qy);
        if (std::abs(std::abs(q - c) - radius) < 0.05) q += std::complex<double>(radius + 0.1, 0);
        int expect = std::abs(q - c) < radius ? 1 : 0;
        if (winding(circle(c, radius, 720), q) != expect) ok = false;
    }
    for (int k0 : {-4, -2, 0, 2, 4})
        for (int pairing : {1, 2, 3}) {
            SampledLoop gm1 = circle(std::complex<double>(k0 - 1, 0), 0.25, 720, pairing);
            if (index_formula({gm1}) != (long long)(k0 - 1) * pairing) ok = false;
            std::vector<SampledLoop> comps;
            for (int j = 0; j < pairing; ++j)
                comps.push_back(circle(std::complex<double>(k0 - 1, 0), 0.2 + 0.02 * j, 720));
            if (index_formula(comps) != (long long)(k0 - 1) * pairing) ok = false;
        }
    report(10, ok, "winding truth on 200 random triples; Ind = (k0-1)<gamma,L> for k0, pairings",
           t.seconds());
}

void criterion_11() {
    Timer t;
    bool ok = true;
    BimoduleData bim = build_bimodule(2);
    Eigen::MatrixXcd cd = qimat_to_complex(bim.cL[0] * bim.cL[1]);
    std::vector<int> parity;
    for (int i = 0; i < bim.dim; ++i) parity.push_back(bim.grading.at(i, i).re > 0 ? 1 : -1);
    auto make_gamma = [&](std::complex<double> z) {
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(cd);
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(bim.dim, bim.dim);
        for (int k = 0; k < es.eigenvalues().size(); ++k) {
            if (std::abs(es.eigenvalues()(k) - std::complex<double>(0, 1)) > 1e-9) continue;
            Eigen::VectorXcd v = es.eigenvectors().col(k);
            bool even = true;
            for (int i = 0; i < bim.dim; ++i)
                if (parity[i] < 0 && std::abs(v(i)) > 1e-9) even = false;
            if (even) g += (z - 1.0) * (v * v.adjoint());
        }
        return g;
    };
    const double pi = std::acos(-1.0);
    for (int s = 0; s < 16; ++s) {
        double th = 2 * pi * s / 16;
        DisjointnessProblem p;
        p.gamma = make_gamma(std::complex<double>(2 + 0.25 * std::cos(th), 0.25 * std::sin(th)));
        p.cdtheta = cd;
        p.parity = parity;
        p.alpha = {1.0};
        if (!disjointness_check(p).pass) ok = false;
    }
    DisjointnessProblem collision;
    collision.gamma = make_gamma(std::complex<double>(0, 0));
    collision.cdtheta = cd;
    collision.parity = parity;
    collision.alpha = {1.0};
    DisjointnessResult res = disjointness_check(collision);
    if (res.pass || res.gap >= 1e-12) ok = false;
    report(11, ok,
           "twist disjointness: exterior contact example passes off even integers; engineered "
           "collision gap < 1e-12",
           t.seconds());
}

}  // namespace

int main() {
    criterion_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (g_failures) {
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}
