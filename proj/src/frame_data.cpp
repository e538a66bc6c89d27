#include "absc/frame_data.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace absc {

using ordered_json = nlohmann::ordered_json;

bool FramePointData::metric_is_identity() const {
    return gF == QIMat::identity(n1) && gT == QIMat::identity(n2);
}

bool rat_sqrt(const Rat& x, Rat* out) {
    if (x < 0) return false;
    using boost::multiprecision::cpp_int;
    cpp_int num = boost::multiprecision::numerator(x);
    cpp_int den = boost::multiprecision::denominator(x);
    cpp_int sn = boost::multiprecision::sqrt(num);
    cpp_int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return false;
    if (out) *out = Rat(sn, sd);
    return true;
}

namespace {

bool is_real_symmetric(const QIMat& m) {
    if (!m.is_square()) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j).im != 0) return false;
            if (m.at(i, j).re != m.at(j, i).re) return false;
        }
    return true;
}

bool is_positive_definite(const QIMat& m) {
    // Exact leading-principal-minor test.
    for (int k = 1; k <= m.rows; ++k) {
        std::vector<int> idx;
        for (int i = 0; i < k; ++i) idx.push_back(i);
        QI d = m.block(idx, idx).det();
        if (!(d.im == 0 && d.re > 0)) return false;
    }
    return true;
}

// Exact Cholesky g = L L^T with positive diagonal; requires rational pivots.
QIMat rational_cholesky(const QIMat& g) {
    int n = g.rows;
    QIMat L = QIMat::zero(n, n);
    for (int j = 0; j < n; ++j) {
        Rat s = g.at(j, j).re;
        for (int k = 0; k < j; ++k) s -= L.at(j, k).re * L.at(j, k).re;
        Rat root;
        if (!rat_sqrt(s, &root) || root == 0)
            throw std::invalid_argument(
                "orthonormalization requires rational Cholesky pivots (metric " +
                g.to_string() + ")");
        L.at(j, j) = QI(root);
        for (int i = j + 1; i < n; ++i) {
            Rat t = g.at(i, j).re;
            for (int k = 0; k < j; ++k) t -= L.at(i, k).re * L.at(j, k).re;
            L.at(i, j) = QI(t / root);
        }
    }
    return L;
}

QIMat rational_inverse(const QIMat& m) {
    int n = m.rows;
    QIMat a = m, inv = QIMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("singular matrix in rational_inverse");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        QI p = a.at(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(c, j) *= p;
            inv.at(c, j) *= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a.at(r, c).is_zero()) continue;
            QI f = a.at(r, c);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

}  // namespace

void validate(const FramePointData& d) {
    int n = d.frame();
    if (d.n1 < 1 || d.n2 < 1) throw std::invalid_argument("invalid-rank: need n1 >= 1, n2 >= 1");
    if (!is_real_symmetric(d.gF) || d.gF.rows != d.n1)
        throw std::invalid_argument("gF must be real symmetric n1 x n1");
    if (!is_real_symmetric(d.gT) || d.gT.rows != d.n2)
        throw std::invalid_argument("gT must be real symmetric n2 x n2");
    if (!is_positive_definite(d.gF) || !is_positive_definite(d.gT))
        throw std::invalid_argument("metric must be positive definite");
    if ((int)d.dgF.size() != n || (int)d.dgT.size() != n)
        throw std::invalid_argument("metric derivative arrays must have one entry per direction");
    for (int a = 0; a < n; ++a) {
        if (!is_real_symmetric(d.dgF[a]) || d.dgF[a].rows != d.n1)
            throw std::invalid_argument("dgF entries must be real symmetric n1 x n1");
        if (!is_real_symmetric(d.dgT[a]) || d.dgT[a].rows != d.n2)
            throw std::invalid_argument("dgT entries must be real symmetric n2 x n2");
    }
    if ((int)d.c.size() != n) throw std::invalid_argument("structure tensor has wrong size");
    for (int a = 0; a < n; ++a) {
        if ((int)d.c[a].size() != n) throw std::invalid_argument("structure tensor has wrong size");
        for (int b = 0; b < n; ++b) {
            if ((int)d.c[a][b].size() != n)
                throw std::invalid_argument("structure tensor has wrong size");
            for (int g = 0; g < n; ++g)
                if (d.c[a][b][g] != -d.c[b][a][g])
                    throw std::invalid_argument("structure tensor must be antisymmetric");
        }
    }
    if (d.left_invariant) {
        for (int a = 0; a < n; ++a)
            if (!d.dgF[a].is_zero() || !d.dgT[a].is_zero())
                throw std::invalid_argument(
                    "left-invariant data must have vanishing metric derivatives");
        if (!d.dc.empty()) throw std::invalid_argument("left-invariant data with derivative tensor");
        // Jacobi identity for the constants.
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int e = b + 1; e < n; ++e)
                    for (int g = 0; g < n; ++g) {
                        Rat s = 0;
                        for (int h = 0; h < n; ++h)
                            s += d.c[a][b][h] * d.c[h][e][g] + d.c[b][e][h] * d.c[h][a][g] +
                                 d.c[e][a][h] * d.c[h][b][g];
                        if (s != 0) throw std::invalid_argument("Jacobi identity fails");
                    }
    }
    // Module checks.
    const auto& cl = d.mod.cliff;
    if (cl.rank != d.n1) throw std::invalid_argument("Clifford rank must equal n1");
    for (int i = 0; i < d.n1; ++i) {
        for (int j = 0; j < d.n1; ++j) {
            QIMat ac = anticommutator(cl.gamma[i], cl.gamma[j]);
            QIMat expect = (i == j) ? QI(-2) * QIMat::identity(cl.dim) : QIMat::zero(cl.dim, cl.dim);
            if (ac != expect) throw std::invalid_argument("Clifford relations fail");
        }
        if (!(cl.gamma[i] * cl.grading + cl.grading * cl.gamma[i]).is_zero())
            throw std::invalid_argument("Clifford generator not odd");
        if (cl.gamma[i].adjoint() != -cl.gamma[i])
            throw std::invalid_argument("Clifford generator not skew-adjoint");
    }
    if ((int)d.mod.A.size() != n)
        throw std::invalid_argument("module connection needs one matrix per direction");
    for (const auto& A : d.mod.A) {
        if (A.rows != cl.dim || A.cols != cl.dim)
            throw std::invalid_argument("module connection matrix has wrong size");
        if (!commutator(A, cl.grading).is_zero())
            throw std::invalid_argument("module connection must preserve the grading");
    }
    if (d.mod.variant != ConnectionVariant::Spin && !d.mod.bim)
        throw std::invalid_argument("exterior connection variants need bimodule data");
}

FramePointData orthonormalized(const FramePointData& d) {
    if (d.metric_is_identity()) return d;
    QIMat LF = rational_cholesky(d.gF);
    QIMat LT = rational_cholesky(d.gT);
    // New frame vectors: e~_i = sum_a S[a][i] e_a with S = (L^{-1})^T blockwise.
    QIMat SF = rational_inverse(LF).transpose();
    QIMat ST = rational_inverse(LT).transpose();
    int n = d.frame();
    auto S = [&](int a, int i) -> QI {
        bool fa = a < d.n1, fi = i < d.n1;
        if (fa != fi) return QI(0);
        return fa ? SF.at(a, i) : ST.at(a - d.n1, i - d.n1);
    };
    QIMat Sfull(n, n);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i) Sfull.at(a, i) = S(a, i);
    QIMat Sinv = rational_inverse(Sfull);

    FramePointData r = d;
    r.gF = QIMat::identity(d.n1);
    r.gT = QIMat::identity(d.n2);
    // Structure coefficients: c~[x][y][g~] = S_ax S_by c[a][b][g] Sinv[g~][g].
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int g2 = 0; g2 < n; ++g2) {
                QI s;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        if (Sfull.at(a, x).is_zero() || Sfull.at(b, y).is_zero()) continue;
                        for (int g = 0; g < n; ++g)
                            s += Sfull.at(a, x) * Sfull.at(b, y) * QI(d.c[a][b][g]) *
                                 Sinv.at(g2, g);
                    }
                r.c[x][y][g2] = s.re;
            }
    // Metric derivatives transform as (direction) x (bilinear form).
    for (int x = 0; x < n; ++x) {
        QIMat accF = QIMat::zero(d.n1, d.n1), accT = QIMat::zero(d.n2, d.n2);
        for (int a = 0; a < n; ++a) {
            if (Sfull.at(a, x).is_zero()) continue;
            accF += Sfull.at(a, x) * (SF.transpose() * d.dgF[a] * SF);
            accT += Sfull.at(a, x) * (ST.transpose() * d.dgT[a] * ST);
        }
        r.dgF[x] = accF;
        r.dgT[x] = accT;
    }
    if (!d.dc.empty()) {
        for (int dd = 0; dd < n; ++dd)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int g2 = 0; g2 < n; ++g2) {
                        QI s;
                        for (int e = 0; e < n; ++e)
                            for (int a = 0; a < n; ++a)
                                for (int b = 0; b < n; ++b)
                                    for (int g = 0; g < n; ++g)
                                        s += Sfull.at(e, dd) * Sfull.at(a, x) * Sfull.at(b, y) *
                                             QI(d.dc[e][a][b][g]) * Sinv.at(g2, g);
                        r.dc[dd][x][y][g2] = s.re;
                    }
    }
    // Connection coefficients transform as a 1-form.
    for (int x = 0; x < n; ++x) {
        QIMat acc = QIMat::zero(d.dimE(), d.dimE());
        for (int a = 0; a < n; ++a)
            if (!Sfull.at(a, x).is_zero()) acc += Sfull.at(a, x) * d.mod.A[a];
        r.mod.A[x] = acc;
    }
    if (!d.mod.K.empty()) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                QIMat acc = QIMat::zero(d.dimE(), d.dimE());
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        QI f = Sfull.at(a, x) * Sfull.at(b, y);
                        if (!f.is_zero()) acc += f * d.mod.K[a][b];
                    }
                r.mod.K[x][y] = acc;
            }
    }
    return r;
}

std::vector<std::vector<QIMat>> module_curvature(const FramePointData& d) {
    if (!d.mod.K.empty()) return d.mod.K;
    if (!d.left_invariant)
        throw std::invalid_argument(
            "module curvature of non-invariant data requires explicit K input");
    int n = d.frame();
    int dim = d.dimE();
    std::vector<std::vector<QIMat>> K(n, std::vector<QIMat>(n, QIMat::zero(dim, dim)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            QIMat k = commutator(d.mod.A[a], d.mod.A[b]);
            for (int g = 0; g < n; ++g)
                if (d.c[a][b][g] != 0) k -= d.c[a][b][g] * d.mod.A[g];
            K[a][b] = std::move(k);
        }
    return K;
}

namespace {

ordered_json mat_to_json(const QIMat& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(qi_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

QIMat mat_from_json(const ordered_json& j) {
    int r = (int)j.size();
    int c = r ? (int)j[0].size() : 0;
    QIMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < c; ++k) m.at(i, k) = qi_from_string(j[i][k].get<std::string>());
    return m;
}

std::string variant_name(ConnectionVariant v) {
    switch (v) {
        case ConnectionVariant::Spin: return "spin";
        case ConnectionVariant::ExteriorBimodule: return "bimodule";
        case ConnectionVariant::ExteriorLeviCivita: return "levi_civita";
    }
    return "spin";
}

ConnectionVariant variant_from_name(const std::string& s) {
    if (s == "spin") return ConnectionVariant::Spin;
    if (s == "bimodule") return ConnectionVariant::ExteriorBimodule;
    if (s == "levi_civita") return ConnectionVariant::ExteriorLeviCivita;
    throw std::invalid_argument("unknown connection variant: " + s);
}

}  // namespace

std::string frame_data_to_json(const FramePointData& d) {
    ordered_json j;
    j["schema"] = "absc.frame_point_data/1";
    j["name"] = d.name;
    j["n1"] = d.n1;
    j["n2"] = d.n2;
    j["left_invariant"] = d.left_invariant;
    j["frame_names"] = d.frame_names;
    ordered_json sc = ordered_json::array();
    int n = d.frame();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int g = 0; g < n; ++g)
                if (d.c[a][b][g] != 0) {
                    ordered_json e;
                    e["a"] = a;
                    e["b"] = b;
                    e["g"] = g;
                    e["v"] = rat_to_string(d.c[a][b][g]);
                    sc.push_back(e);
                }
    j["structure_constants"] = sc;
    if (!d.dc.empty()) {
        ordered_json dsc = ordered_json::array();
        for (int e = 0; e < n; ++e)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int g = 0; g < n; ++g)
                        if (d.dc[e][a][b][g] != 0) {
                            ordered_json x;
                            x["d"] = e;
                            x["a"] = a;
                            x["b"] = b;
                            x["g"] = g;
                            x["v"] = rat_to_string(d.dc[e][a][b][g]);
                            dsc.push_back(x);
                        }
        j["structure_constant_derivs"] = dsc;
    }
    j["gF"] = mat_to_json(d.gF);
    j["gT"] = mat_to_json(d.gT);
    ordered_json dgF = ordered_json::array(), dgT = ordered_json::array();
    for (int a = 0; a < n; ++a) {
        dgF.push_back(mat_to_json(d.dgF[a]));
        dgT.push_back(mat_to_json(d.dgT[a]));
    }
    j["dgF"] = dgF;
    j["dgT"] = dgT;
    ordered_json mod;
    mod["kind"] = d.mod.bim ? "exterior" : "clifford";
    mod["connection_variant"] = variant_name(d.mod.variant);
    ordered_json A = ordered_json::array();
    for (const auto& m : d.mod.A) A.push_back(mat_to_json(m));
    mod["A"] = A;
    if (!d.mod.K.empty()) {
        ordered_json K = ordered_json::array();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!d.mod.K[a][b].is_zero()) {
                    ordered_json e;
                    e["a"] = a;
                    e["b"] = b;
                    e["m"] = mat_to_json(d.mod.K[a][b]);
                    K.push_back(e);
                }
        mod["K"] = K;
    }
    j["module"] = mod;
    return j.dump(1);
}

FramePointData frame_data_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("schema").get<std::string>() != "absc.frame_point_data/1")
        throw std::invalid_argument("unsupported frame data schema");
    FramePointData d;
    d.name = j.at("name").get<std::string>();
    d.n1 = j.at("n1").get<int>();
    d.n2 = j.at("n2").get<int>();
    d.left_invariant = j.at("left_invariant").get<bool>();
    d.frame_names = j.at("frame_names").get<std::vector<std::string>>();
    int n = d.frame();
    d.c.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
    for (const auto& e : j.at("structure_constants")) {
        int a = e.at("a").get<int>(), b = e.at("b").get<int>(), g = e.at("g").get<int>();
        Rat v = rat_from_string(e.at("v").get<std::string>());
        d.c[a][b][g] = v;
        d.c[b][a][g] = -v;
    }
    if (j.contains("structure_constant_derivs")) {
        d.dc.assign(n, std::vector<std::vector<std::vector<Rat>>>(
                           n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0)))));
        for (const auto& e : j.at("structure_constant_derivs")) {
            int dd = e.at("d").get<int>(), a = e.at("a").get<int>(), b = e.at("b").get<int>(),
                g = e.at("g").get<int>();
            Rat v = rat_from_string(e.at("v").get<std::string>());
            d.dc[dd][a][b][g] = v;
            d.dc[dd][b][a][g] = -v;
        }
    }
    d.gF = mat_from_json(j.at("gF"));
    d.gT = mat_from_json(j.at("gT"));
    for (const auto& m : j.at("dgF")) d.dgF.push_back(mat_from_json(m));
    for (const auto& m : j.at("dgT")) d.dgT.push_back(mat_from_json(m));
    const auto& mod = j.at("module");
    d.mod.variant = variant_from_name(mod.at("connection_variant").get<std::string>());
    if (mod.at("kind").get<std::string>() == "exterior") {
        auto bim = build_bimodule(d.n1);
        auto ext = build_exterior(d.n1);
        CliffordData cl;
        cl.rank = d.n1;
        cl.dim = bim.dim;
        cl.gamma = bim.cL;
        cl.grading = bim.grading;
        d.mod.cliff = cl;
        d.mod.bim = bim;
        d.mod.extF = ext;
    } else {
        d.mod.cliff = build_clifford(d.n1);
    }
    for (const auto& m : mod.at("A")) d.mod.A.push_back(mat_from_json(m));
    if (mod.contains("K")) {
        int dim = d.dimE();
        d.mod.K.assign(n, std::vector<QIMat>(n, QIMat::zero(dim, dim)));
        for (const auto& e : mod.at("K")) {
            int a = e.at("a").get<int>(), b = e.at("b").get<int>();
            QIMat m = mat_from_json(e.at("m"));
            d.mod.K[a][b] = m;
            d.mod.K[b][a] = -m;
        }
    }
    return d;
}

}  // namespace absc
