#pragma once

#include <optional>
#include <vector>

#include "absc/frame_data.hpp"
#include "absc/laurent.hpp"
#include "absc/uea.hpp"

namespace absc {

// First-order operator with constant matrix coefficients on the fiber
// E tensor Lambda T*: sum_a deriv[a] d_a + zeroth.
struct FirstOrderOp {
    std::vector<QIMat> deriv;
    QIMat zeroth;

    FirstOrderOp() = default;
    FirstOrderOp(int frame, int dim)
        : deriv(frame, QIMat::zero(dim, dim)), zeroth(QIMat::zero(dim, dim)) {}

    int frame() const { return (int)deriv.size(); }
    int dim() const { return zeroth.rows; }

    FirstOrderOp& operator+=(const FirstOrderOp& o);
    FirstOrderOp& operator-=(const FirstOrderOp& o);
    friend FirstOrderOp operator+(FirstOrderOp x, const FirstOrderOp& y) { return x += y; }
    friend FirstOrderOp operator-(FirstOrderOp x, const FirstOrderOp& y) { return x -= y; }
    friend bool operator==(const FirstOrderOp& x, const FirstOrderOp& y) {
        return x.deriv == y.deriv && x.zeroth == y.zeroth;
    }
    bool is_zero() const;
};

// One-parameter family sum_a M_a(u) d_a + M_0(u) with Laurent matrix
// coefficients.
struct LaurentOperator {
    std::vector<LMat> deriv;
    LMat zeroth;
    int dim = 0;

    bool support_within(int lo, int hi) const;
    std::pair<int, int> support_range() const;
};

enum class TConnMode { UDependent, UIndependent };

struct AssembleOptions {
    TConnMode tmode = TConnMode::UDependent;
    bool check_support = true;
    std::optional<QIMat> gamma_twist;  // contact-only Clifford twist on the T line
};

// --- pointwise tensors (orthonormalized data) ---------------------------

Rat omega_F(const FramePointData& d, int U, int Y, int Z);  // Y,Z in F
Rat omega_T(const FramePointData& d, int X, int U, int V);  // U,V in T (0-based T indices)
Rat lie_metric_F(const FramePointData& d, int V, int X, int Y);
Rat lie_metric_T(const FramePointData& d, int V, int U, int W);  // U,W T indices
Rat lie_metric(const FramePointData& d, int V, int X, int Y);    // dispatch on X,Y block

// Full Koszul pairing W[a](b,c) = g_u(nabla_a E_b, E_c) of g_{M,u}.
std::vector<std::vector<std::vector<LRat>>> koszul_pairing(const FramePointData& d);

// Projected connection coefficient matrices (Laurent in u).
std::vector<std::vector<std::vector<LRat>>> nablaF_u(const FramePointData& d);
std::vector<std::vector<std::vector<LRat>>> nablaT_u(const FramePointData& d);
std::vector<QIMat> nablaF0(const FramePointData& d);  // per direction, n1 x n1 rational
std::vector<QIMat> nablaT0(const FramePointData& d);  // per direction, n2 x n2 rational

// Dual shape form iota_a omega_u(E_b, E_c); 'formula' uses the structural
// identities, 'raw' subtracts the projected connections from the Koszul
// pairing. The two routes must agree entry-wise as Laurent polynomials.
std::vector<std::vector<std::vector<LRat>>> shape_form(const FramePointData& d);
std::vector<std::vector<std::vector<LRat>>> shape_form_raw(const FramePointData& d);

// --- operator assembly ---------------------------------------------------

LaurentOperator assemble_Du(const FramePointData& d);
LaurentOperator assemble_Du(const FramePointData& d, const AssembleOptions& opts);
FirstOrderOp finite_part(const LaurentOperator& op);

struct GlobalParts {
    FirstOrderOp dirac_F;     // c(phi^i) (nabla^E + nabla^{T,0})_{e_i}
    FirstOrderOp dT;          // eps_mu (nabla^E + nabla^{T,0})_{f_mu}
    QIMat iota_c_omegaF;      // iota o c(Omega_F)
    QIMat eps_trLgF;          // eps o tr L g_F
    QIMat c_eps_omegaT;       // c o eps_{Omega_T}
    QIMat c_trLgT;            // c o tr L g_T
    FirstOrderOp total;
};

GlobalParts global_formula(const FramePointData& d);

// Contact-only matrix twist of the transverse Clifford relation; gamma = I/4
// recovers the untwisted operator.
FirstOrderOp gamma_twisted(const FramePointData& d, const QIMat& gamma);
FirstOrderOp gamma_twisted_assembled(const FramePointData& d, const QIMat& gamma);

// --- identity checks on left-invariant models ----------------------------

struct IdentityCheck {
    bool ok = false;
    std::string detail;  // first mismatch, empty when ok
};

IdentityCheck weitzenbock_check(const FramePointData& d);
IdentityCheck bianchi_defect_check(const FramePointData& d);
IdentityCheck curvature_contraction_check(const FramePointData& d);

// Curvature of nabla^{F,0} on F: R[a][b] for full-frame a,b (n1 x n1 blocks).
std::vector<std::vector<QIMat>> frame_curvature_F0(const FramePointData& d);

// K^E = c(R^{F,0}) + F^{E/S}; returns F^{E/S}[i][j] over F index pairs and
// verifies membership in the Clifford commutant.
std::vector<std::vector<QIMat>> fes_split(const FramePointData& d);

// --- UEA bridge -----------------------------------------------------------

WeightedAlgebra osculating_algebra(const FramePointData& d);
WeightedAlgebra full_algebra(const FramePointData& d);
std::vector<int> fiber_degrees(const FramePointData& d);

UEAElement to_uea(const FirstOrderOp& op, const WeightedAlgebra& alg,
                  const std::vector<int>& fiber_deg);

// Metric compatibility of the projected connections at a sampled u.
bool metric_compatible_at(const FramePointData& d, const Rat& u);

// Fiber lifts for E tensor Lambda T* (shared with other modules).
struct FiberLifts {
    int dimE = 0, dimT = 0, dimV = 0;
    ExteriorModule extT;
    QIMat gradE, gradV;
    std::vector<QIMat> cF;        // lifted left Clifford generators
    std::vector<QIMat> epsT;      // lifted wedge operators (odd lift)
    std::vector<QIMat> iotaT;     // lifted contractions (odd lift)
    QIMat liftE(const QIMat& x) const;
    QIMat liftT_even(const QIMat& x) const;
    QIMat liftT_odd(const QIMat& x) const;
};

FiberLifts fiber_lifts(const FramePointData& d);

}  // namespace absc
