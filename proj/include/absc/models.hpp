#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "absc/frame_data.hpp"

namespace absc {

struct CatalogEntry {
    std::string name;
    FramePointData data;
    // Expectations regenerated by the relevant module in tests, never hand-edited.
    std::string expected_rockland;  // "pass" / "fail" / ""
};

// Contact H^{2n+1} with framing [Q_j, P_k] = delta_jk T, Reeb-normalized g_T,
// spin-type module. Frame order (P_1..P_n, Q_1..Q_n, T).
CatalogEntry heisenberg_model(int n);

// The unit 3-sphere framing [X,Y] = 2T, [Y,T] = 2X, [T,X] = 2Y with the
// exterior module and its induced connection (template u-curvature part).
CatalogEntry su2_model();

// The two alternative connection choices on the exterior module of H^3.
CatalogEntry bimodule_bad_model();
CatalogEntry levi_civita_bad_model();

// Quaternionic-type two-step data: n1 = 4, n2 = 3, B given by the three
// standard skew forms (surjective).
CatalogEntry quaternionic_model();

// Rank-3 left-invariant model with a genuinely nonzero Bianchi defect:
// [X1,X2] = T, [T,X1] = X3.
CatalogEntry solvable3_model();

// Fully abelian brackets with the spin module (flat Bochner degeneration).
CatalogEntry abelian_model(int n1);

// Random two-step data: surjective B, identity metric at the point with random
// symmetric derivatives, random even module connection. Seed-reproducible.
CatalogEntry random_two_step(int n1, int n2, uint64_t seed);

// Random contact-type data (n2 = 1): nondegenerate transverse bracket form,
// Reeb-normalized g_T, non-invariant g_F.
CatalogEntry random_contact(int n, uint64_t seed);

// Fibration-type data: Omega_F = 0. With omegaT_zero the transverse
// distribution is integrable as well.
CatalogEntry fibration_model(uint64_t seed, bool omegaT_zero = false);

std::vector<CatalogEntry> shipped_catalog();

}  // namespace absc
