#include "absc/suites.hpp"

#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "absc/eigen_bridge.hpp"
#include "absc/frame_geometry.hpp"
#include "absc/hopf.hpp"
#include "absc/index_tools.hpp"
#include "absc/models.hpp"
#include "absc/nilrep.hpp"
#include "absc/parallel.hpp"

namespace absc {

using ordered_json = nlohmann::ordered_json;

namespace {

struct Failure {
    std::string msg;
};

void require(bool ok, const std::string& what, std::string* failure) {
    if (!ok && failure->empty()) *failure = what;
}

bool route_equality(const FramePointData& d, bool check_support, std::string* failure) {
    LaurentOperator Du;
    AssembleOptions opts;
    opts.check_support = check_support;
    Du = assemble_Du(d, opts);
    if (check_support && !Du.support_within(-1, 1)) {
        require(false, d.name + ": Laurent support escapes {-1,0,1}", failure);
        return false;
    }
    FirstOrderOp fp = finite_part(Du);
    GlobalParts g = global_formula(d);
    if (!(fp == g.total)) {
        require(false, d.name + ": finite part differs from the global formula", failure);
        return false;
    }
    // Shape form: structural formulas vs raw Koszul subtraction.
    auto a = shape_form(d);
    auto b = shape_form_raw(d);
    if (a != b) {
        require(false, d.name + ": shape-form formula disagrees with raw Koszul", failure);
        return false;
    }
    for (const Rat& u : {Rat(1), Rat(2), Rat(1, 2)})
        if (!metric_compatible_at(d, u)) {
            require(false, d.name + ": metric compatibility fails", failure);
            return false;
        }
    return true;
}

bool graded_cosymbol_identity(const FramePointData& d, std::string* failure) {
    WeightedAlgebra alg = osculating_algebra(d);
    GlobalParts g = global_formula(d);
    UEAElement dd = to_uea(g.total, alg, fiber_degrees(d));
    UEAElement sym = cosymbol(dd, 1, true);
    UEAElement mo = model_operator(d, alg);
    if (!(sym == mo)) {
        require(false, d.name + ": graded cosymbol differs from the model operator", failure);
        return false;
    }
    return true;
}

}  // namespace

SuiteResult suite_verify_gfd(int seeds) {
    SuiteResult r;
    r.name = "verify-gfd";
    std::string failure;
    ordered_json checked = ordered_json::array();
    int count = 0;

    std::vector<FramePointData> fixed;
    fixed.push_back(heisenberg_model(1).data);
    fixed.push_back(heisenberg_model(2).data);
    fixed.push_back(su2_model().data);
    fixed.push_back(quaternionic_model().data);
    fixed.push_back(fibration_model(7, true).data);
    for (const auto& d : fixed) {
        if (route_equality(d, true, &failure)) ++count;
        checked.push_back(d.name);
    }
    // Random sweep: two-step and contact data, seed order fixed; instances are
    // generated serially, checked in parallel, and reduced in seed order.
    struct Spec {
        int n1, n2;
    };
    std::vector<Spec> shapes{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
    std::vector<FramePointData> randoms;
    for (int s = 0; s < seeds; ++s) {
        const Spec& sp = shapes[s % shapes.size()];
        randoms.push_back(random_two_step(sp.n1, sp.n2, 1000 + s).data);
        if (s % 3 == 0) randoms.push_back(random_contact(1 + s % 2, 2000 + s).data);
    }
    auto verdicts = parallel_map((int)randoms.size(), [&](int k) {
        std::string f;
        bool ok = route_equality(randoms[k], true, &f);
        return std::make_pair(ok, f);
    });
    for (size_t k = 0; k < randoms.size(); ++k) {
        if (verdicts[k].first)
            ++count;
        else
            require(false, verdicts[k].second, &failure);
        checked.push_back(randoms[k].name);
    }
    // Fibration comparison: the u-independent transverse route differs from
    // the finite part by exactly -1/4 c o eps_{Omega_T}.
    for (uint64_t seed : {3u, 7u, 11u}) {
        FramePointData d = fibration_model(seed, false).data;
        AssembleOptions opts;
        opts.tmode = TConnMode::UIndependent;
        opts.check_support = false;
        FirstOrderOp bismut = finite_part(assemble_Du(d, opts));
        GlobalParts g = global_formula(d);
        FirstOrderOp expect = bismut;
        Rat quarter(1, 4);
        expect.zeroth -= QI(quarter) * g.c_eps_omegaT;
        if (!(g.total == expect))
            require(false, d.name + ": Bismut comparison discrepancy term mismatch", &failure);
        else
            ++count;
        checked.push_back(d.name + "+comparison");
        if (g.c_eps_omegaT.is_zero())
            require(false, d.name + ": comparison test expected Omega_T != 0", &failure);
    }
    {
        FramePointData d = fibration_model(5, true).data;
        GlobalParts g = global_formula(d);
        AssembleOptions opts;
        opts.tmode = TConnMode::UIndependent;
        FirstOrderOp bismut = finite_part(assemble_Du(d, opts));
        if (!g.c_eps_omegaT.is_zero() || !(g.total == bismut))
            require(false, "flat fibration: Bismut route must agree on the nose", &failure);
        else
            ++count;
        checked.push_back(d.name + "+comparison");
    }
    // Graded cosymbol identity (contact and quaternionic two-step models).
    for (const auto& d : {heisenberg_model(1).data, heisenberg_model(2).data,
                          quaternionic_model().data}) {
        if (graded_cosymbol_identity(d, &failure)) ++count;
        checked.push_back(d.name + "+mlmd");
    }

    r.pass = failure.empty();
    r.failure = failure;
    r.report["schema"] = "absc.report/1";
    r.report["suite"] = r.name;
    r.report["instances"] = checked;
    r.report["checks_passed"] = count;
    r.report["pass"] = r.pass;
    if (!r.pass) r.report["failure"] = failure;
    return r;
}

SuiteResult suite_weitzenbock() {
    SuiteResult r;
    r.name = "weitzenbock";
    std::string failure;
    ordered_json rows = ordered_json::array();

    std::vector<FramePointData> models{heisenberg_model(1).data, heisenberg_model(2).data,
                                       su2_model().data, solvable3_model().data,
                                       abelian_model(2).data};
    for (const auto& d : models) {
        ordered_json row;
        row["model"] = d.name;
        auto w = weitzenbock_check(d);
        row["weitzenbock"] = w.ok ? "zero" : w.detail;
        require(w.ok, d.name + ": " + w.detail, &failure);
        auto b = bianchi_defect_check(d);
        row["bianchi_defect"] = b.ok ? "zero" : b.detail;
        require(b.ok, d.name + ": " + b.detail, &failure);
        auto c = curvature_contraction_check(d);
        row["curvature_contraction"] = c.ok ? "zero" : c.detail;
        require(c.ok, d.name + ": " + c.detail, &failure);
        rows.push_back(row);
    }
    // Rank-2 identity: the cyclic Lie-derivative sum vanishes identically.
    for (const auto& d : {heisenberg_model(1).data, su2_model().data}) {
        bool ok = true;
        FramePointData on = d;
        Rat half(1, 2);
        for (int x = 0; x < 2 && ok; ++x)
            for (int y = 0; y < 2 && ok; ++y)
                for (int z = 0; z < 2 && ok; ++z)
                    for (int w = 0; w < 2 && ok; ++w) {
                        auto lterm = [&](int p, int q, int xx, int ww) {
                            Rat s = 0;
                            for (int mu = 0; mu < on.n2; ++mu) {
                                Rat v = on.c[q][p][on.n1 + mu];
                                if (v != 0) s += v * lie_metric_F(on, on.n1 + mu, xx, ww);
                            }
                            return s;
                        };
                        Rat rhs =
                            half * (lterm(y, z, x, w) + lterm(x, y, z, w) + lterm(z, x, y, w));
                        if (rhs != 0) ok = false;
                    }
        require(ok, d.name + ": rank-2 cyclic sum does not vanish", &failure);
        ordered_json row;
        row["model"] = d.name;
        row["rank2_cyclic_sum"] = ok ? "zero" : "nonzero";
        rows.push_back(row);
    }

    r.pass = failure.empty();
    r.failure = failure;
    r.report["schema"] = "absc.report/1";
    r.report["suite"] = r.name;
    r.report["models"] = rows;
    r.report["pass"] = r.pass;
    if (!r.pass) r.report["failure"] = failure;
    return r;
}

namespace {

// Squared operator cosymbol over the osculating algebra of a nilpotent model.
UEAElement squared_cosymbol(const FramePointData& d, const WeightedAlgebra& alg) {
    UEAElement dd = to_uea(finite_part(assemble_Du(d)), alg, fiber_degrees(d));
    UEAElement delta = multiply(dd, dd);
    if (heisenberg_order(delta) > 2)
        throw std::logic_error("squared operator has Heisenberg order above 2");
    return cosymbol(delta, 2, false);
}

}  // namespace

SuiteResult suite_rockland(const RocklandSuiteConfig& cfg) {
    SuiteResult r;
    r.name = "rockland-" + cfg.model;
    std::string failure;

    FramePointData data = [&]() {
        if (cfg.model == "heisenberg1") return heisenberg_model(1).data;
        if (cfg.model == "heisenberg2") return heisenberg_model(2).data;
        if (cfg.model == "bimodule_bad") return bimodule_bad_model().data;
        if (cfg.model == "levi_civita_bad") return levi_civita_bad_model().data;
        if (cfg.model == "quaternionic") return quaternionic_model().data;
        throw std::invalid_argument("unknown rockland model: " + cfg.model);
    }();

    WeightedAlgebra alg = osculating_algebra(data);
    UEAElement sym = squared_cosymbol(data, alg);
    TwoStepAlgebra two = TwoStepAlgebra::from_frame(data);
    RocklandOptions opts;
    opts.lambdas = cfg.lambdas;
    opts.Ns = cfg.Ns;
    opts.pass_tol = cfg.pass_tol;
    opts.fail_tol = cfg.fail_tol;
    RocklandReport rep = rockland_check(sym, two, opts);

    ordered_json samples = ordered_json::array();
    for (const auto& s : rep.samples) {
        ordered_json js;
        js["kind"] = s.kind;
        if (!s.tau.empty()) js["tau"] = s.tau;
        if (!s.eta.empty()) js["eta"] = s.eta;
        if (!s.xi.empty()) js["xi"] = s.xi;
        ordered_json sig;
        for (auto& [N, v] : s.sigma_min) sig[std::to_string(N)] = v;
        js["sigma_min"] = sig;
        ordered_json qf;
        for (auto& [N, v] : s.quadform_min) qf[std::to_string(N)] = v;
        js["quadform_min"] = qf;
        js["converged"] = s.converged;
        samples.push_back(js);
    }

    bool expect_ok = true;
    if (cfg.expect == "pass") expect_ok = rep.verdict == "pass (sampled)";
    if (cfg.expect == "fail") expect_ok = rep.verdict == "fail (witness)";
    if (cfg.expect.empty()) expect_ok = rep.verdict != "inconclusive";
    require(expect_ok, cfg.model + ": verdict " + rep.verdict + " (expected " +
                            (cfg.expect.empty() ? "conclusive" : cfg.expect) + ")",
            &failure);

    r.pass = failure.empty();
    r.inconclusive = rep.verdict == "inconclusive";
    r.failure = failure;
    r.report["schema"] = "absc.report/1";
    r.report["suite"] = r.name;
    r.report["model"] = cfg.model;
    r.report["verdict"] = rep.verdict;
    r.report["min_sigma"] = rep.min_sigma;
    r.report["min_quadform"] = rep.min_quadform;
    r.report["samples"] = samples;
    r.report["note"] = "sampled representations only; pass is evidence, not proof";
    r.report["pass"] = r.pass;
    if (!r.pass) r.report["failure"] = failure;
    return r;
}

SuiteResult suite_hopf(int max_level, std::string* csv) {
    SuiteResult r;
    r.name = "hopf";
    std::string failure;
    ordered_json spectra = ordered_json::array();
    std::ostringstream csvs;
    csvs << "m,operator,eigenvalue,multiplicity,formula_match\n";

    int variant = odd_variant_matching_spectrum(6);
    for (int m = 0; m <= max_level; ++m) {
        auto ev = check_even_spectrum(m);
        auto od = check_odd_spectrum(m, variant);
        require(ev.matched, "even spectrum mismatch at m=" + std::to_string(m), &failure);
        require(od.matched, "odd spectrum mismatch at m=" + std::to_string(m), &failure);
        double eigmin = odd_operator_eigmin(m, variant);
        if (m >= 1)
            require(eigmin >= m / 2.0 - 1e-9,
                    "odd operator eigmin below m/2 at m=" + std::to_string(m), &failure);
        ordered_json row;
        row["m"] = m;
        row["even_max_err"] = ev.max_err;
        row["odd_max_err"] = od.max_err;
        row["odd_eigmin"] = eigmin;
        spectra.push_back(row);
        auto emit = [&](const char* name, const SpectrumCheck& sc) {
            std::map<double, int> mult;
            for (double x : sc.computed) {
                bool found = false;
                for (auto& [v, c] : mult)
                    if (std::abs(v - x) < 1e-7) {
                        ++c;
                        found = true;
                        break;
                    }
                if (!found) mult[x] = 1;
            }
            for (auto& [v, c] : mult)
                csvs << m << "," << name << "," << v << "," << c << ","
                     << (sc.matched ? 1 : 0) << "\n";
        };
        emit("even", ev);
        emit("odd", od);
    }

    auto qs = quadratic_solutions(100);
    auto qd = quadratic_solutions_divisor();
    std::vector<std::pair<int, int>> expect{{-2, 0}, {-1, 2}, {0, 0}};
    require(qs == expect, "quadratic solutions differ from the expected set", &failure);
    require(qd == expect, "divisor-route quadratic solutions differ", &failure);

    ordered_json kernels = ordered_json::array();
    for (int M = 2; M <= std::max(2, max_level); ++M) {
        auto [e, o] = full_kernel(M);
        ordered_json row;
        row["M_max"] = M;
        row["even"] = e;
        row["odd"] = o;
        kernels.push_back(row);
        require(e == 2 && o == 0, "full kernel is not (2,0) at M_max=" + std::to_string(M),
                &failure);
    }
    {
        auto [e0, o0] = per_block_kernel(0);
        require(e0 == 2 && o0 == 0, "block m=0 kernel is not (2,0)", &failure);
        for (int m = 1; m <= max_level; ++m) {
            auto [e, o] = per_block_kernel(m);
            require(e == 0 && o == 0, "unexpected kernel in block m=" + std::to_string(m),
                    &failure);
        }
        auto [ec, oc] = full_kernel(6, 1);
        require(ec == 2 && oc == 0, "kernel changes under the spin-matrix convention", &failure);
    }

    r.pass = failure.empty();
    r.failure = failure;
    r.report["schema"] = "absc.report/1";
    r.report["suite"] = r.name;
    r.report["odd_coefficient_variant"] =
        variant == 0 ? "3/2 c(dV) T (matches stated spectrum)" : "3/4 c(dV) T";
    r.report["spectra"] = spectra;
    r.report["quadratic_solutions"] = ordered_json::array();
    for (auto& [m, k] : qs) r.report["quadratic_solutions"].push_back({m, k});
    r.report["kernels"] = kernels;
    r.report["pass"] = r.pass;
    if (!r.pass) r.report["failure"] = failure;
    if (csv) *csv = csvs.str();
    return r;
}

namespace {

ModeProblem random_mode_problem(std::mt19937_64& rng, int dim, int m) {
    ModeProblem p;
    p.m = m;
    p.parity.resize(dim);
    int n_even = 1 + (int)(rng() % (dim - 1));
    for (int i = 0; i < dim; ++i) p.parity[i] = i < n_even ? 1 : -1;
    auto rnd = [&]() {
        return std::complex<double>(((double)(rng() % 2001) - 1000) / 500.0,
                                    ((double)(rng() % 2001) - 1000) / 500.0);
    };
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (p.parity[i] != p.parity[j]) D(i, j) = rnd();
            if (p.parity[i] == p.parity[j]) C(i, j) = rnd();
        }
    p.D = (D + D.adjoint()) / 2.0;  // Hermitian odd
    p.cOmega = C;
    p.metric = Eigen::MatrixXcd::Identity(dim, dim);
    return p;
}

}  // namespace

SuiteResult suite_s1_kernel(int mode_range, int seeds) {
    SuiteResult r;
    r.name = "s1-kernel";
    std::string failure;
    std::mt19937_64 rng(20240915);
    int agree = 0;
    ordered_json mismatches = ordered_json::array();
    for (int s = 0; s < seeds; ++s) {
        int dim = 2 + (int)(rng() % 11);
        int m = (int)(rng() % (2 * mode_range + 1)) - mode_range;
        ModeProblem p = random_mode_problem(rng, dim, m);
        auto a = mode_kernel(p);
        auto b = direct_block_kernel(p);
        if (a == b)
            ++agree;
        else {
            ordered_json row;
            row["seed"] = s;
            row["m"] = m;
            row["mode_kernel"] = {a.first, a.second};
            row["direct"] = {b.first, b.second};
            mismatches.push_back(row);
            require(false, "mode kernel disagrees with the oracle at seed " + std::to_string(s),
                    &failure);
        }
    }
    // Hopf-derived instance, with a per-mode table from both routes.
    auto problems = hopf_mode_problems(6);
    TotalReport total = assemble_total(problems);
    require(total.routes_agree, "hopf-derived mode problems disagree between routes", &failure);
    require(total.total == std::make_pair(2, 0),
            "hopf-derived totals are not (2,0)", &failure);
    std::map<int, std::array<int, 4>> per_mode;
    for (const auto& p : problems) {
        auto a = mode_kernel(p);
        auto b = direct_block_kernel(p);
        auto& row = per_mode[p.m];
        row[0] += a.first;
        row[1] += a.second;
        row[2] += b.first;
        row[3] += b.second;
    }
    ordered_json mode_rows = ordered_json::array();
    for (auto& [m, row] : per_mode) {
        ordered_json r2;
        r2["m"] = m;
        r2["mode_kernel"] = {row[0], row[1]};
        r2["direct"] = {row[2], row[3]};
        mode_rows.push_back(r2);
    }

    r.pass = failure.empty();
    r.failure = failure;
    r.report["schema"] = "absc.report/1";
    r.report["suite"] = r.name;
    r.report["random_instances"] = seeds;
    r.report["random_agreement"] = agree;
    r.report["mismatches"] = mismatches;
    r.report["hopf_total"] = {total.total.first, total.total.second};
    r.report["hopf_modes"] = (int)problems.size();
    r.report["hopf_per_mode"] = mode_rows;
    r.report["truncated_range"] = true;
    r.report["pass"] = r.pass;
    if (!r.pass) r.report["failure"] = failure;
    return r;
}

namespace {

SampledLoop circle(std::complex<double> center, double radius, int samples, int turns = 1) {
    SampledLoop L;
    const double pi = std::acos(-1.0);
    for (int k = 0; k < samples; ++k) {
        double th = 2 * pi * turns * k / samples;
        L.pts.push_back(center + radius * std::complex<double>(std::cos(th), std::sin(th)));
    }
    return L;
}

}  // namespace

SuiteResult suite_index() {
    SuiteResult r;
    r.name = "index";
    std::string failure;
    std::mt19937_64 rng(77001);

    // Winding against inside/outside ground truth.
    int wins = 0;
    for (int t = 0; t < 200; ++t) {
        double cx = ((double)(rng() % 2001) - 1000) / 250.0;
        double cy = ((double)(rng() % 2001) - 1000) / 250.0;
        double radius = 0.2 + (double)(rng() % 1000) / 500.0;
        double qx = cx + ((double)(rng() % 2001) - 1000) / 250.0;
        double qy = cy + ((double)(rng() % 2001) - 1000) / 250.0;
        std::complex<double> c(cx, cy), q(qx, qy);
        double dist = std::abs(q - c);
        if (std::abs(dist - radius) < 0.05) {
            q += std::complex<double>(0.1 + radius, 0);
            dist = std::abs(q - c);
        }
        int expect = dist < radius ? 1 : 0;
        int got = winding(circle(c, radius, 720), q);
        if (got == expect)
            ++wins;
        else
            require(false, "winding mismatch at trial " + std::to_string(t), &failure);
    }

    // Small-circle index values: Ind = (k0 - 1) * pairing.
    ordered_json index_rows = ordered_json::array();
    for (int k0 : {-4, -2, 0, 2, 4})
        for (int pairing : {1, 2, 3}) {
            // gamma winds `pairing` times around k0; the loop below is gamma-1.
            SampledLoop gm1 = circle(std::complex<double>(k0 - 1, 0), 0.25, 720, pairing);
            long long ind = index_formula({gm1});
            long long expect = (long long)(k0 - 1) * pairing;
            require(ind == expect,
                    "index formula mismatch at k0=" + std::to_string(k0) +
                        " pairing=" + std::to_string(pairing),
                    &failure);
            // Multi-component variant.
            std::vector<SampledLoop> comps;
            for (int j = 0; j < pairing; ++j)
                comps.push_back(circle(std::complex<double>(k0 - 1, 0), 0.2 + 0.02 * j, 720));
            long long ind2 = index_formula(comps);
            require(ind2 == expect, "multi-component index mismatch", &failure);
            ordered_json row;
            row["k0"] = k0;
            row["pairing"] = pairing;
            row["index"] = ind;
            index_rows.push_back(row);
        }

    // Twist disjointness on the exterior-module contact example.
    BimoduleData bim = build_bimodule(2);
    Eigen::MatrixXcd cd = qimat_to_complex(bim.cL[0] * bim.cL[1]);  // c(dtheta), alpha = 1
    std::vector<int> parity;
    for (int i = 0; i < bim.dim; ++i) parity.push_back(bim.grading.at(i, i).re > 0 ? 1 : -1);
    auto make_gamma = [&](std::complex<double> z) {
        // z on the +i eigenspace of c(dtheta)|even, 1 on the rest.
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
    int passes = 0;
    const double pi = std::acos(-1.0);
    for (int s = 0; s < 16; ++s) {
        double th = 2 * pi * s / 16;
        std::complex<double> z =
            std::complex<double>(2, 0) + 0.25 * std::complex<double>(std::cos(th), std::sin(th));
        DisjointnessProblem p;
        p.gamma = make_gamma(z);
        p.cdtheta = cd;
        p.parity = parity;
        p.alpha = {1.0};
        DisjointnessResult res = disjointness_check(p);
        if (res.pass) ++passes;
        require(res.pass, "disjointness failed on the small circle at sample " + std::to_string(s),
                &failure);
    }
    DisjointnessProblem collision;
    collision.gamma = make_gamma(std::complex<double>(0, 0));
    collision.cdtheta = cd;
    collision.parity = parity;
    collision.alpha = {1.0};
    DisjointnessResult cres = disjointness_check(collision);
    require(!cres.pass && cres.gap < 1e-12, "engineered collision did not produce a zero gap",
            &failure);

    r.pass = failure.empty();
    r.failure = failure;
    r.report["schema"] = "absc.report/1";
    r.report["suite"] = r.name;
    r.report["winding_trials"] = 200;
    r.report["winding_correct"] = wins;
    r.report["index_values"] = index_rows;
    r.report["twist_circle_passes"] = passes;
    r.report["collision_gap"] = cres.gap;
    r.report["pass"] = r.pass;
    if (!r.pass) r.report["failure"] = failure;
    return r;
}

std::vector<SuiteResult> suite_all() {
    std::vector<SuiteResult> out;
    out.push_back(suite_verify_gfd(50));
    out.push_back(suite_weitzenbock());
    {
        RocklandSuiteConfig cfg;
        cfg.model = "heisenberg1";
        cfg.expect = "pass";
        out.push_back(suite_rockland(cfg));
    }
    {
        RocklandSuiteConfig cfg;
        cfg.model = "bimodule_bad";
        cfg.expect = "fail";
        out.push_back(suite_rockland(cfg));
    }
    {
        RocklandSuiteConfig cfg;
        cfg.model = "levi_civita_bad";
        cfg.expect = "fail";
        out.push_back(suite_rockland(cfg));
    }
    out.push_back(suite_hopf(10));
    out.push_back(suite_s1_kernel(5, 100));
    out.push_back(suite_index());
    return out;
}

}  // namespace absc
