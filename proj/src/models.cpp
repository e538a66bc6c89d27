#include "absc/models.hpp"

#include <random>
#include <stdexcept>

#include "absc/frame_geometry.hpp"

namespace absc {

namespace {

FramePointData skeleton(int n1, int n2) {
    FramePointData d;
    d.n1 = n1;
    d.n2 = n2;
    int n = n1 + n2;
    d.c.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
    d.gF = QIMat::identity(n1);
    d.gT = QIMat::identity(n2);
    d.dgF.assign(n, QIMat::zero(n1, n1));
    d.dgT.assign(n, QIMat::zero(n2, n2));
    return d;
}

void set_bracket(FramePointData& d, int a, int b, int g, const Rat& v) {
    d.c[a][b][g] = v;
    d.c[b][a][g] = -v;
}

void attach_spin_module(FramePointData& d) {
    d.mod.cliff = build_clifford(d.n1);
    d.mod.variant = ConnectionVariant::Spin;
    d.mod.A.assign(d.frame(), QIMat::zero(d.mod.cliff.dim, d.mod.cliff.dim));
}

void attach_exterior_module(FramePointData& d, ConnectionVariant v) {
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
    d.mod.variant = v;
    d.mod.A.assign(d.frame(), QIMat::zero(cl.dim, cl.dim));
}

// Spin-lifted Koszul connection coefficients.
void set_spin_connection(FramePointData& d) {
    auto G = nablaF0(d);
    for (int a = 0; a < d.frame(); ++a) d.mod.A[a] = spin_rep(d.mod.cliff.gamma, G[a]);
}

// Induced exterior connection coefficients.
void set_exterior_connection(FramePointData& d) {
    auto G = nablaF0(d);
    for (int a = 0; a < d.frame(); ++a) d.mod.A[a] = exterior_derivation(*d.mod.extF, G[a]);
}

struct RatGen {
    std::mt19937_64 rng;
    explicit RatGen(uint64_t seed) : rng(seed) {}
    Rat small(int span = 2) {
        long long num = (long long)(rng() % (2 * span + 1)) - span;
        long long den = 1 + (long long)(rng() % 2);
        return Rat(num, den);
    }
    QI smallc(int span = 2) { return QI(small(span), small(span)); }
};

QIMat random_symmetric(RatGen& g, int n) {
    QIMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            QI v(g.small());
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

QIMat random_even(RatGen& g, const QIMat& grading) {
    int n = grading.rows;
    QIMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (grading.at(i, i) == grading.at(j, j)) m.at(i, j) = g.smallc(1);
    return m;
}

int bracket_rank(const FramePointData& d) {
    // Rank over Q of the map wedge^2 F -> T.
    std::vector<std::vector<Rat>> rows;
    for (int mu = 0; mu < d.n2; ++mu) {
        std::vector<Rat> row;
        for (int i = 0; i < d.n1; ++i)
            for (int j = i + 1; j < d.n1; ++j) row.push_back(d.c[i][j][d.n1 + mu]);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t lead = 0;
    for (size_t r = 0; r < rows.size() && lead < cols; ++lead) {
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
    return rank;
}

}  // namespace

CatalogEntry heisenberg_model(int n) {
    if (n < 1) throw std::invalid_argument("invalid-rank: heisenberg_model needs n >= 1");
    FramePointData d = skeleton(2 * n, 1);
    d.name = "heisenberg" + std::to_string(n);
    for (int j = 0; j < n; ++j) {
        d.frame_names.push_back("P" + std::to_string(j + 1));
    }
    for (int j = 0; j < n; ++j) d.frame_names.push_back("Q" + std::to_string(j + 1));
    d.frame_names.push_back("T");
    // [Q_j, P_j] = T with frame order (P_1..P_n, Q_1..Q_n, T).
    for (int j = 0; j < n; ++j) set_bracket(d, n + j, j, 2 * n, Rat(1));
    attach_spin_module(d);
    set_spin_connection(d);
    validate(d);
    return {d.name, d, "pass"};
}

CatalogEntry su2_model() {
    FramePointData d = skeleton(2, 1);
    d.name = "su2";
    d.frame_names = {"X", "Y", "T"};
    set_bracket(d, 0, 1, 2, Rat(2));  // [X,Y] = 2T
    set_bracket(d, 1, 2, 0, Rat(2));  // [Y,T] = 2X
    set_bracket(d, 2, 0, 1, Rat(2));  // [T,X] = 2Y
    attach_exterior_module(d, ConnectionVariant::Spin);
    set_exterior_connection(d);
    validate(d);
    return {d.name, d, "pass"};
}

CatalogEntry bimodule_bad_model() {
    CatalogEntry base = heisenberg_model(1);
    FramePointData d = base.data;
    d.name = "bimodule_bad";
    d.mod = ModuleData{};
    attach_exterior_module(d, ConnectionVariant::ExteriorBimodule);
    set_exterior_connection(d);
    validate(d);
    return {d.name, d, "fail"};
}

CatalogEntry levi_civita_bad_model() {
    CatalogEntry base = bimodule_bad_model();
    FramePointData d = base.data;
    d.name = "levi_civita_bad";
    d.mod.variant = ConnectionVariant::ExteriorLeviCivita;
    validate(d);
    return {d.name, d, "fail"};
}

CatalogEntry quaternionic_model() {
    FramePointData d = skeleton(4, 3);
    d.name = "quaternionic";
    d.frame_names = {"E1", "E2", "E3", "E4", "F1", "F2", "F3"};
    // Three independent skew forms on R^4.
    set_bracket(d, 0, 1, 4, Rat(1));
    set_bracket(d, 2, 3, 4, Rat(1));
    set_bracket(d, 0, 2, 5, Rat(1));
    set_bracket(d, 1, 3, 5, Rat(-1));
    set_bracket(d, 0, 3, 6, Rat(1));
    set_bracket(d, 1, 2, 6, Rat(1));
    attach_spin_module(d);
    set_spin_connection(d);
    validate(d);
    if (bracket_rank(d) != 3) throw std::logic_error("quaternionic bracket not surjective");
    return {d.name, d, "pass"};
}

CatalogEntry solvable3_model() {
    FramePointData d = skeleton(3, 1);
    d.name = "solvable3";
    d.frame_names = {"X1", "X2", "X3", "T"};
    set_bracket(d, 0, 1, 3, Rat(1));  // [X1,X2] = T
    set_bracket(d, 3, 0, 2, Rat(1));  // [T,X1] = X3
    attach_spin_module(d);
    set_spin_connection(d);
    validate(d);
    return {d.name, d, ""};
}

CatalogEntry abelian_model(int n1) {
    FramePointData d = skeleton(n1, 1);
    d.name = "abelian" + std::to_string(n1);
    attach_spin_module(d);
    validate(d);
    return {d.name, d, ""};
}

CatalogEntry random_two_step(int n1, int n2, uint64_t seed) {
    if (n2 > n1 * (n1 - 1) / 2)
        throw std::invalid_argument("surjectivity unreachable for n2 > n1(n1-1)/2");
    for (uint64_t attempt = 0;; ++attempt) {
        RatGen g(seed * 1000003ULL + attempt);
        FramePointData d = skeleton(n1, n2);
        d.name = "random2step_" + std::to_string(n1) + "_" + std::to_string(n2) + "_s" +
                 std::to_string(seed);
        // Surjective base: distinct pairs carry the coordinate forms.
        int mu = 0;
        for (int i = 0; i < n1 && mu < n2; ++i)
            for (int j = i + 1; j < n1 && mu < n2; ++j) set_bracket(d, i, j, n1 + mu++, Rat(1));
        for (int i = 0; i < n1; ++i)
            for (int j = i + 1; j < n1; ++j) {
                for (int m = 0; m < n2; ++m) d.c[i][j][n1 + m] += g.small();
                for (int k = 0; k < n1; ++k) d.c[i][j][k] = g.small(1);
                for (int k = 0; k < n1 + n2; ++k) d.c[j][i][k] = -d.c[i][j][k];
            }
        // Mixed brackets [T, F] are allowed; [T, T] stays zero so the
        // transverse curvature form vanishes.
        for (int a = n1; a < n1 + n2; ++a)
            for (int b = 0; b < n1; ++b) {
                for (int k = 0; k < n1 + n2; ++k) d.c[a][b][k] = g.small(1);
                for (int k = 0; k < n1 + n2; ++k) d.c[b][a][k] = -d.c[a][b][k];
            }
        d.left_invariant = false;
        for (int a = 0; a < d.frame(); ++a) {
            d.dgF[a] = random_symmetric(g, n1);
            d.dgT[a] = random_symmetric(g, n2);
        }
        attach_spin_module(d);
        for (int a = 0; a < d.frame(); ++a) d.mod.A[a] = random_even(g, d.mod.cliff.grading);
        if (bracket_rank(d) != n2) continue;
        validate(d);
        return {d.name, d, ""};
    }
}

CatalogEntry random_contact(int n, uint64_t seed) {
    for (uint64_t attempt = 0;; ++attempt) {
        RatGen g(seed * 7777777ULL + attempt);
        int n1 = 2 * n;
        FramePointData d = skeleton(n1, 1);
        d.name = "randomcontact_" + std::to_string(n) + "_s" + std::to_string(seed);
        for (int i = 0; i < n1; ++i)
            for (int j = i + 1; j < n1; ++j) {
                d.c[i][j][n1] = g.small() + ((j == i + n) ? Rat(1) : Rat(0));
                for (int k = 0; k < n1; ++k) d.c[i][j][k] = g.small(1);
                for (int k = 0; k <= n1; ++k) d.c[j][i][k] = -d.c[i][j][k];
            }
        // Reeb-type direction: [T, X]^T = 0, [T, X]^F random.
        for (int b = 0; b < n1; ++b) {
            for (int k = 0; k < n1; ++k) d.c[n1][b][k] = g.small(1);
            for (int k = 0; k < n1; ++k) d.c[b][n1][k] = -d.c[n1][b][k];
        }
        d.left_invariant = false;
        for (int a = 0; a < d.frame(); ++a) d.dgF[a] = random_symmetric(g, n1);
        attach_spin_module(d);
        for (int a = 0; a < d.frame(); ++a) d.mod.A[a] = random_even(g, d.mod.cliff.grading);
        // Nondegenerate transverse form.
        QIMat S(n1, n1);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n1; ++j) S.at(i, j) = QI(d.c[i][j][n1]);
        if (S.det().is_zero()) continue;
        validate(d);
        return {d.name, d, ""};
    }
}

CatalogEntry fibration_model(uint64_t seed, bool omegaT_zero) {
    RatGen g(seed * 424243ULL);
    int n1 = 2, n2 = 2;
    FramePointData d = skeleton(n1, n2);
    d.name = std::string("fibration") + (omegaT_zero ? "_flat" : "") + "_s" + std::to_string(seed);
    // F integrable: [F,F] has no T component.
    set_bracket(d, 0, 1, 0, g.small());
    set_bracket(d, 0, 1, 1, g.small());
    if (!omegaT_zero) {
        // Non-integrable transverse distribution: [T1,T2]^F nonzero.
        d.c[2][3][0] = Rat(1) + g.small();
        d.c[2][3][1] = g.small();
        for (int k = 0; k < 2; ++k) d.c[3][2][k] = -d.c[2][3][k];
    }
    for (int a = n1; a < n1 + n2; ++a)
        for (int b = 0; b < n1; ++b) {
            for (int k = 0; k < n1 + n2; ++k) d.c[a][b][k] = g.small(1);
            for (int k = 0; k < n1 + n2; ++k) d.c[b][a][k] = -d.c[a][b][k];
        }
    d.left_invariant = false;
    for (int a = 0; a < d.frame(); ++a) {
        d.dgF[a] = random_symmetric(g, n1);
        d.dgT[a] = random_symmetric(g, n2);
    }
    attach_spin_module(d);
    for (int a = 0; a < d.frame(); ++a) d.mod.A[a] = random_even(g, d.mod.cliff.grading);
    validate(d);
    return {d.name, d, ""};
}

std::vector<CatalogEntry> shipped_catalog() {
    std::vector<CatalogEntry> v;
    v.push_back(heisenberg_model(1));
    v.push_back(heisenberg_model(2));
    v.push_back(su2_model());
    v.push_back(bimodule_bad_model());
    v.push_back(levi_civita_bad_model());
    v.push_back(quaternionic_model());
    v.push_back(solvable3_model());
    v.push_back(abelian_model(2));
    v.push_back(fibration_model(7, false));
    v.push_back(fibration_model(7, true));
    return v;
}

}  // namespace absc
