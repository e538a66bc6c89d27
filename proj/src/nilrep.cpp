#include "absc/nilrep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "absc/frame_geometry.hpp"
#include "absc/parallel.hpp"

namespace absc {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

TwoStepAlgebra TwoStepAlgebra::from_frame(const FramePointData& din) {
    FramePointData d = din.metric_is_identity() ? din : orthonormalized(din);
    TwoStepAlgebra alg;
    alg.n1 = d.n1;
    alg.n2 = d.n2;
    alg.names = d.frame_names;
    if ((int)alg.names.size() != d.frame()) {
        alg.names.clear();
        for (int i = 0; i < d.n1; ++i) alg.names.push_back("X" + std::to_string(i + 1));
        for (int mu = 0; mu < d.n2; ++mu) alg.names.push_back("Z" + std::to_string(mu + 1));
    }
    alg.B.assign(d.n1, std::vector<std::vector<Rat>>(d.n1, std::vector<Rat>(d.n2, Rat(0))));
    for (int i = 0; i < d.n1; ++i)
        for (int j = 0; j < d.n1; ++j)
            for (int mu = 0; mu < d.n2; ++mu) alg.B[i][j][mu] = d.c[i][j][d.n1 + mu];
    alg.validate();
    return alg;
}

void TwoStepAlgebra::validate() const {
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (int mu = 0; mu < n2; ++mu)
                if (B[i][j][mu] != -B[j][i][mu])
                    throw std::invalid_argument("two-step bracket must be antisymmetric");
    // Surjectivity: rank of the induced map wedge^2(layer 1) -> layer 2.
    std::vector<std::vector<Rat>> rows;
    for (int mu = 0; mu < n2; ++mu) {
        std::vector<Rat> row;
        for (int i = 0; i < n1; ++i)
            for (int j = i + 1; j < n1; ++j) row.push_back(B[i][j][mu]);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t lead = 0; r < rows.size() && lead < cols; ++lead) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][lead] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][lead] == 0) continue;
            Rat f = rows[k][lead] / rows[r][lead];
            for (size_t c2 = 0; c2 < cols; ++c2) rows[k][c2] -= f * rows[r][c2];
        }
        ++r;
        ++rank;
    }
    if (rank != n2) throw std::invalid_argument("two-step bracket must surject onto layer 2");
}

Eigen::MatrixXd TwoStepAlgebra::tau_form(const VectorXd& tau) const {
    MatrixXd S = MatrixXd::Zero(n1, n1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) {
            double s = 0;
            for (int mu = 0; mu < n2; ++mu) s += tau(mu) * rat_to_double(B[i][j][mu]);
            S(i, j) = s;
        }
    return S;
}

namespace {

void phase_fix(Eigen::VectorXcd& v) {
    int best = 0;
    double mag = 0;
    for (int k = 0; k < v.size(); ++k)
        if (std::abs(v(k)) > mag + 1e-14) {
            mag = std::abs(v(k));
            best = k;
        }
    cplx ph = v(best) / std::abs(v(best));
    v /= ph;
}

void sign_fix(VectorXd& v) {
    int best = 0;
    double mag = 0;
    for (int k = 0; k < v.size(); ++k)
        if (std::abs(v(k)) > mag + 1e-14) {
            mag = std::abs(v(k));
            best = k;
        }
    if (v(best) < 0) v = -v;
}

}  // namespace

DarbouxSplit darboux_of_form(const MatrixXd& S, double tol) {
    int n = (int)S.rows();
    DarbouxSplit out;
    double scale = std::max(1.0, S.cwiseAbs().maxCoeff());
    Eigen::MatrixXcd H = cplx(0, 1) * S.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
    // Positive eigenvalues descending give the (q,p) pairs.
    std::vector<std::pair<double, int>> pos;
    for (int k = 0; k < n; ++k)
        if (es.eigenvalues()(k) > tol * scale) pos.emplace_back(es.eigenvalues()(k), k);
    std::sort(pos.begin(), pos.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (auto& [al, k] : pos) {
        Eigen::VectorXcd v = es.eigenvectors().col(k);
        phase_fix(v);
        VectorXd x = std::sqrt(2.0) * v.real();
        VectorXd y = std::sqrt(2.0) * v.imag();
        out.pairs.emplace_back(y, x);  // q = sqrt(2) Im v, p = sqrt(2) Re v
        out.alpha.push_back(al);
    }
    out.rank = 2 * (int)out.alpha.size();
    // Kernel basis from the near-zero eigenvalues, realified.
    MatrixXd SS = S.transpose() * S;
    Eigen::SelfAdjointEigenSolver<MatrixXd> ek(SS);
    for (int k = 0; k < n; ++k)
        if (ek.eigenvalues()(k) <= tol * scale * scale * 10) {
            VectorXd v = ek.eigenvectors().col(k);
            sign_fix(v);
            out.isotropic.push_back(v);
        }
    out.degenerate = out.rank < n - (n % 2);
    return out;
}

DarbouxSplit darboux_split(const TwoStepAlgebra& alg, const VectorXd& tau, double tol) {
    if (tau.size() != alg.n2) throw std::invalid_argument("tau has wrong dimension");
    if (tau.norm() == 0) throw std::invalid_argument("invalid: tau must be nonzero");
    return darboux_of_form(alg.tau_form(tau), tol);
}

namespace {

MatrixXcd ladder_down(int N) {
    MatrixXcd A = MatrixXcd::Zero(N, N);
    for (int k = 1; k < N; ++k) A(k - 1, k) = std::sqrt((double)k);
    return A;
}

MatrixXcd slot_op(const MatrixXcd& op, int slot, int n_osc, int N) {
    MatrixXcd m = MatrixXcd::Identity(1, 1);
    for (int s = 0; s < n_osc; ++s) {
        const MatrixXcd& f = (s == slot) ? op : MatrixXcd::Identity(N, N).eval();
        MatrixXcd t = MatrixXcd::Zero(m.rows() * f.rows(), m.cols() * f.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m(i, j) != cplx(0, 0))
                    t.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = m(i, j) * f;
        m = std::move(t);
    }
    return m;
}

std::vector<MatrixXcd> build_generators(const TwoStepAlgebra& alg, const VectorXd& tau,
                                        const VectorXd& eta, const DarbouxSplit& split, int N) {
    int n_osc = (int)split.pairs.size();
    int dim = 1;
    for (int s = 0; s < n_osc; ++s) dim *= N;
    MatrixXcd A = ladder_down(N);
    MatrixXcd Ad = A.adjoint();
    std::vector<MatrixXcd> gens;
    // Layer-1 generators decompose along the split basis.
    for (int a = 0; a < alg.n1; ++a) {
        MatrixXcd g = MatrixXcd::Zero(dim, dim);
        for (size_t k = 0; k < split.pairs.size(); ++k) {
            double al = split.alpha[k];
            double cq = split.pairs[k].first(a);   // component along q_k
            double cp = split.pairs[k].second(a);  // component along p_k
            if (std::abs(cq) > 0) {
                // pi(q_k) = -i x_k with x = sqrt(al/2)(A + A*)
                MatrixXcd x = std::sqrt(al / 2.0) * (A + Ad);
                g += cq * cplx(0, -1) * slot_op(x, (int)k, n_osc, N);
            }
            if (std::abs(cp) > 0) {
                // pi(p_k) = al d/dx = sqrt(al/2)(A - A*)
                MatrixXcd dd = std::sqrt(al / 2.0) * (A - Ad);
                g += cp * slot_op(dd, (int)k, n_osc, N);
            }
        }
        for (size_t j = 0; j < split.isotropic.size(); ++j) {
            double cn = split.isotropic[j](a);
            if (std::abs(cn) > 0 && j < (size_t)eta.size())
                g += cn * cplx(0, eta(j)) * MatrixXcd::Identity(dim, dim);
        }
        gens.push_back(std::move(g));
    }
    for (int mu = 0; mu < alg.n2; ++mu)
        gens.push_back(cplx(0, tau(mu)) * MatrixXcd::Identity(dim, dim));
    return gens;
}

}  // namespace

SchrodingerRep schrodinger_matrices(const TwoStepAlgebra& alg, const VectorXd& tau,
                                    const VectorXd& eta, int N) {
    if (N < 4) throw std::invalid_argument("truncation-too-small: N must be >= 4");
    SchrodingerRep rep;
    rep.N = N;
    rep.tau = tau;
    rep.eta = eta;
    rep.split = darboux_split(alg, tau);
    rep.n_osc = (int)rep.split.pairs.size();
    rep.gen = build_generators(alg, tau, eta, rep.split, N);
    return rep;
}

namespace {

void check_names(const UEAElement& x, const TwoStepAlgebra& alg) {
    if (x.alg->size() != alg.n1 + alg.n2 || x.alg->names != alg.names)
        throw std::invalid_argument("name mismatch between element and representation algebra");
}

MatrixXcd qimat_to_cd(const QIMat& m) {
    MatrixXcd r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r(i, j) = cplx(rat_to_double(m.at(i, j).re), rat_to_double(m.at(i, j).im));
    return r;
}

std::vector<int> window_indices(int Npad, int N, int n_osc) {
    int dim_pad = 1;
    for (int s = 0; s < n_osc; ++s) dim_pad *= Npad;
    std::vector<int> idx;
    for (int v = 0; v < dim_pad; ++v) {
        int t = v;
        bool ok = true;
        for (int s = 0; s < n_osc; ++s) {
            if (t % Npad >= N) {
                ok = false;
                break;
            }
            t /= Npad;
        }
        if (ok) idx.push_back(v);
    }
    return idx;
}

// Re-encode a padded index (base Npad digits) as a window index (base N).
int window_code(int v, int Npad, int N, int n_osc) {
    int code = 0, mult = 1, t = v;
    for (int s = 0; s < n_osc; ++s) {
        code += (t % Npad) * mult;
        mult *= N;
        t /= Npad;
    }
    return code;
}

}  // namespace

MatrixXcd evaluate(const UEAElement& x, const TwoStepAlgebra& alg, const VectorXd& tau,
                   const VectorXd& eta, int N) {
    check_names(x, alg);
    if (N < 4) throw std::invalid_argument("truncation-too-small: N must be >= 4");
    DarbouxSplit split = darboux_split(alg, tau);
    int n_osc = (int)split.pairs.size();
    int maxdeg = 0;
    for (auto& [m, v] : x.terms) {
        int deg = 0;
        for (auto e : m) deg += e;
        maxdeg = std::max(maxdeg, deg);
    }
    int Npad = N + maxdeg;
    auto gens = build_generators(alg, tau, eta, split, Npad);
    int dim_pad = gens.empty() ? 1 : (int)gens[0].rows();
    int fiber = x.fiber;
    int dim_win = 1;
    for (int s = 0; s < n_osc; ++s) dim_win *= N;
    MatrixXcd out = MatrixXcd::Zero(dim_win * fiber, dim_win * fiber);
    auto win = window_indices(Npad, N, n_osc);
    for (auto& [mono, coeff] : x.terms) {
        MatrixXcd rep = MatrixXcd::Identity(dim_pad, dim_pad);
        for (int g = 0; g < x.alg->size(); ++g)
            for (int e = 0; e < mono[g]; ++e) rep = rep * gens[g];
        MatrixXcd cf = qimat_to_cd(coeff);
        // Compress to the window and inflate by the fiber coefficient.
        for (int a = 0; a < (int)win.size(); ++a) {
            int ia = window_code(win[a], Npad, N, n_osc);
            for (int b = 0; b < (int)win.size(); ++b) {
                cplx rv = rep(win[a], win[b]);
                if (rv == cplx(0, 0)) continue;
                int ib = window_code(win[b], Npad, N, n_osc);
                for (int p = 0; p < fiber; ++p)
                    for (int q = 0; q < fiber; ++q)
                        if (cf(p, q) != cplx(0, 0))
                            out(ia * fiber + p, ib * fiber + q) += rv * cf(p, q);
            }
        }
    }
    return out;
}

MatrixXcd evaluate_finite(const UEAElement& x, const TwoStepAlgebra& alg, const VectorXd& xi) {
    check_names(x, alg);
    if (xi.size() != alg.n1) throw std::invalid_argument("xi has wrong dimension");
    int fiber = x.fiber;
    MatrixXcd out = MatrixXcd::Zero(fiber, fiber);
    for (auto& [mono, coeff] : x.terms) {
        cplx scalar(1, 0);
        for (int g = 0; g < x.alg->size(); ++g)
            for (int e = 0; e < mono[g]; ++e)
                scalar *= (g < alg.n1) ? cplx(0, xi(g)) : cplx(0, 0);
        if (scalar != cplx(0, 0)) out += scalar * qimat_to_cd(coeff);
    }
    return out;
}

std::vector<int> interior_indices(int N, int n_osc, int fiber) {
    int dim = 1;
    for (int s = 0; s < n_osc; ++s) dim *= N;
    std::vector<int> idx;
    for (int v = 0; v < dim; ++v) {
        int t = v;
        bool ok = true;
        for (int s = 0; s < n_osc; ++s) {
            if (t % N >= N - 1) {
                ok = false;
                break;
            }
            t /= N;
        }
        if (!ok) continue;
        for (int p = 0; p < fiber; ++p) idx.push_back(v * fiber + p);
    }
    return idx;
}

double sigma_min_of(const MatrixXcd& m) {
    if (m.rows() == 0) return 0;
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m);
        return es.eigenvalues().cwiseAbs().minCoeff();
    }
    Eigen::BDCSVD<MatrixXcd> svd(m);
    return svd.singularValues().minCoeff();
}

double quadform_min_of(const MatrixXcd& m) {
    if (m.rows() == 0) return 0;
    MatrixXcd h = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
    return es.eigenvalues().minCoeff();
}

RocklandReport rockland_check(const UEAElement& cosym, const TwoStepAlgebra& alg,
                              const RocklandOptions& opts) {
    check_names(cosym, alg);
    RocklandReport rep;
    std::vector<VectorXd> taus = opts.taus;
    if (taus.empty()) {
        if (alg.n2 == 1) {
            for (double l : opts.lambdas) {
                VectorXd t(1);
                t(0) = l;
                taus.push_back(t);
            }
        } else {
            for (int mu = 0; mu < alg.n2; ++mu)
                for (double s : {1.0, -1.0, 2.0, 0.5}) {
                    VectorXd t = VectorXd::Zero(alg.n2);
                    t(mu) = s;
                    taus.push_back(t);
                }
            VectorXd diag = VectorXd::Ones(alg.n2);
            taus.push_back(diag);
        }
    }

    double minsig = std::numeric_limits<double>::infinity();
    double minquad = std::numeric_limits<double>::infinity();
    bool any_unconverged = false;
    bool any_fail_witness = false;
    bool all_above_tol = true;

    // Representation evaluations are independent: run the sweep over a worker
    // pool and merge the samples back in sweep order.
    std::vector<std::pair<VectorXd, VectorXd>> sweep;
    for (const auto& tau : taus) {
        DarbouxSplit split = darboux_split(alg, tau);
        sweep.emplace_back(tau, VectorXd::Zero((int)split.isotropic.size()));
        if (!split.isotropic.empty()) {
            VectorXd e = VectorXd::Zero((int)split.isotropic.size());
            e(0) = 1.0;
            sweep.emplace_back(tau, e);
            sweep.emplace_back(tau, -e);
        }
    }
    std::vector<RocklandSample> computed = parallel_map((int)sweep.size(), [&](int k) {
        const auto& [tau, eta] = sweep[k];
        DarbouxSplit split = darboux_split(alg, tau);
        RocklandSample s;
        s.kind = "schrodinger";
        s.tau.assign(tau.data(), tau.data() + tau.size());
        s.eta.assign(eta.data(), eta.data() + eta.size());
        double prev = -1;
        bool conv = false;
        for (int N : opts.Ns) {
            MatrixXcd m = evaluate(cosym, alg, tau, eta, N);
            auto idx = interior_indices(N, (int)split.pairs.size(), cosym.fiber);
            MatrixXcd mi((int)idx.size(), (int)idx.size());
            for (size_t a = 0; a < idx.size(); ++a)
                for (size_t b = 0; b < idx.size(); ++b) mi((int)a, (int)b) = m(idx[a], idx[b]);
            double sg = sigma_min_of(mi);
            s.sigma_min[N] = sg;
            s.quadform_min[N] = quadform_min_of(mi);
            if (prev >= 0) conv = std::abs(sg - prev) <= opts.conv_tol * std::max(1.0, sg);
            prev = sg;
        }
        s.converged = conv;
        return s;
    });
    for (auto& s : computed) {
        double final_sigma = s.sigma_min.rbegin()->second;
        minsig = std::min(minsig, final_sigma);
        minquad = std::min(minquad, s.quadform_min.rbegin()->second);
        if (!s.converged) any_unconverged = true;
        if (s.converged && final_sigma < opts.fail_tol) any_fail_witness = true;
        if (final_sigma <= opts.pass_tol) all_above_tol = false;
        rep.samples.push_back(std::move(s));
    }

    if (opts.include_finite) {
        for (int k = 0; k < alg.n1; ++k)
            for (double sgn : {1.0, -1.0}) {
                VectorXd xi = VectorXd::Zero(alg.n1);
                xi(k) = sgn;
                RocklandSample s;
                s.kind = "finite";
                s.xi.assign(xi.data(), xi.data() + xi.size());
                MatrixXcd m = evaluate_finite(cosym, alg, xi);
                double sg = sigma_min_of(m);
                s.sigma_min[0] = sg;
                s.quadform_min[0] = quadform_min_of(m);
                s.converged = true;
                minsig = std::min(minsig, sg);
                if (sg < opts.fail_tol) any_fail_witness = true;
                if (sg <= opts.pass_tol) all_above_tol = false;
                rep.samples.push_back(std::move(s));
            }
    }

    rep.min_sigma = minsig;
    rep.min_quadform = minquad;
    if (any_fail_witness)
        rep.verdict = "fail (witness)";
    else if (all_above_tol && !any_unconverged)
        rep.verdict = "pass (sampled)";
    else
        rep.verdict = "inconclusive";
    return rep;
}

UEAElement model_operator(const FramePointData& din, const WeightedAlgebra& alg) {
    FramePointData d = din.metric_is_identity() ? din : orthonormalized(din);
    FiberLifts fl = fiber_lifts(d);
    auto deg = fiber_degrees(d);
    UEAElement e = UEAElement::zero(alg, fl.dimV, deg);
    for (int i = 0; i < d.n1; ++i) e += UEAElement::generator(alg, i, fl.cF[i], deg);
    for (int mu = 0; mu < d.n2; ++mu)
        e += UEAElement::generator(alg, d.n1 + mu, fl.epsT[mu], deg);
    Rat quarter(1, 4);
    for (int mu = 0; mu < d.n2; ++mu) {
        QIMat beta(d.n1, d.n1);
        for (int i = 0; i < d.n1; ++i)
            for (int j = 0; j < d.n1; ++j) beta.at(i, j) = QI(omega_F(d, d.n1 + mu, i, j));
        if (!beta.is_zero()) {
            QIMat cf = clifford_two_form(d.mod.cliff.gamma, beta);
            e += UEAElement::constant(alg, QI(quarter) * (fl.liftE(cf) * fl.iotaT[mu]), deg);
        }
    }
    return e;
}

}  // namespace absc
