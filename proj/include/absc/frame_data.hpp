#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absc/clifford.hpp"
#include "absc/matrix.hpp"

namespace absc {

// How the u-singular part of the module connection is built from the frame
// curvature 2-form. Spin is the default construction; the exterior variants
// realize the two alternative connection choices on the full exterior module.
enum class ConnectionVariant { Spin, ExteriorBimodule, ExteriorLeviCivita };

struct ModuleData {
    CliffordData cliff;                  // left Clifford action on E
    std::optional<BimoduleData> bim;     // present when E is the exterior module
    std::optional<ExteriorModule> extF;  // ditto (right multiplication support)
    ConnectionVariant variant = ConnectionVariant::Spin;
    std::vector<QIMat> A;                   // connection coefficients, one per frame direction
    std::vector<std::vector<QIMat>> K;      // explicit curvature K[a][b]; empty = derive
    int dimE() const { return cliff.dim; }
};

// All pointwise geometric input at a point of a split manifold TM = F + T,
// expressed in a local frame (F directions first, then T directions):
//   - structure coefficients [E_a, E_b] = sum_g c[a][b][g] E_g,
//   - metric coefficients and their frame derivatives,
//   - a Clifford module on the F-fiber with connection coefficients.
struct FramePointData {
    std::string name;
    int n1 = 0, n2 = 0;
    bool left_invariant = true;
    std::vector<std::string> frame_names;
    std::vector<std::vector<std::vector<Rat>>> c;   // c[a][b] -> coefficient per frame index
    std::vector<std::vector<std::vector<std::vector<Rat>>>> dc;  // dc[d][a][b] (optional)
    QIMat gF, gT;                                   // symmetric positive definite, rational
    std::vector<QIMat> dgF, dgT;                    // one per frame direction
    ModuleData mod;

    int frame() const { return n1 + n2; }
    bool isF(int a) const { return a < n1; }
    const Rat& cc(int a, int b, int g) const { return c[a][b][g]; }

    int dimE() const { return mod.dimE(); }
    int dimT() const { return 1 << n2; }
    int dimV() const { return dimE() * dimT(); }

    bool metric_is_identity() const;
};

// Throws std::invalid_argument describing the first violated invariant.
void validate(const FramePointData& d);

// Rewrites the data in a g-orthonormal frame via the (unique positive) exact
// rational Cholesky factor. Inputs whose Cholesky pivots have no rational
// square root are rejected.
FramePointData orthonormalized(const FramePointData& d);

// Exact rational square root when it exists.
bool rat_sqrt(const Rat& x, Rat* out);

// Curvature of the constant-coefficient module connection,
// K[a][b] = [A_a, A_b] - sum_g c^g_{ab} A_g (left-invariant data only);
// returns mod.K when explicitly supplied.
std::vector<std::vector<QIMat>> module_curvature(const FramePointData& d);

std::string frame_data_to_json(const FramePointData& d);
FramePointData frame_data_from_json(const std::string& text);

}  // namespace absc
