#pragma once

#include "ubb/matrix.hpp"

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ubb {

// One cell of the d x d x d cube, addressing the computational-basis state
// |p> x |q> x |r> for parties (A,B,C).
struct BasicBlock {
    int p, q, r;
    friend bool operator<(const BasicBlock& a, const BasicBlock& b) {
        return std::tie(a.p, a.q, a.r) < std::tie(b.p, b.q, b.r);
    }
    friend bool operator==(const BasicBlock& a, const BasicBlock& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r;
    }
};

// Unnormalized tripartite state with integer coefficients. The coefficient
// of |p,q,r> lives at flat index p*d^2 + q*d + r.
struct TripartiteState {
    int d = 0;
    std::string label;
    RationalVector coeffs;

    std::vector<BasicBlock> support() const;
};

enum class FamilyKind { eta, xi, phi };

// How the Gram-Schmidt completion of a local family is ordered. Families of
// window size 2 are identical under both schemes; the knob exists to show
// that nothing downstream depends on the completion choice.
enum class CompletionScheme { standard, permuted };

// Orthogonal single-party vectors supported on one layer's index window.
struct LocalFamily {
    FamilyKind kind;
    int layer = 0;
    int window_begin = 0;  // inclusive
    int window_end = 0;    // exclusive
    std::vector<RationalVector> vectors;
};

// Per-layer geometry of the cube shells.
struct LayerGeometry {
    int level_lo = 0;      // fixed coordinate of the "low" faces
    int level_hi = 0;      // fixed coordinate of the "high" faces
    int eta_begin = 0, eta_end = 0;
    int xi_begin = 0, xi_end = 0;
    int family_size = 0;
};

// Which single-party vector each tensor slot of a face uses.
enum class Slot { lo, hi, eta, xi };

// Complete orthogonal product basis tiling the cube in interlocking face blocks.
struct TOPB {
    int d = 0;
    CompletionScheme scheme = CompletionScheme::standard;
    std::vector<TripartiteState> diagonal_states;
    std::vector<TripartiteState> inner_cube_states;  // even d only
    std::map<std::pair<int, int>, std::vector<TripartiteState>> face_states;  // (face, layer)

    // Deterministic flattening: diagonal, inner cube, then layers ascending
    // with faces 1..6 inside each layer.
    std::vector<TripartiteState> all() const;
    size_t size() const;
};

int layer_count(int d);
LayerGeometry layer_geometry(int d, int layer);

// Tensor-slot pattern (A,B,C) of a face. Faces tile each shell so that every
// non-diagonal cell is covered exactly once; the d=4 cube uses its own
// printed arrangement, all other dimensions share one template.
std::array<Slot, 3> face_pattern(int d, int face);

LocalFamily eta_family(int d, int layer, CompletionScheme scheme = CompletionScheme::standard);
LocalFamily xi_family(int d, int layer, CompletionScheme scheme = CompletionScheme::standard);
LocalFamily phi_family(int d);  // even d only: {|d/2-1> + |d/2>, |d/2-1> - |d/2>}

TOPB build_topb(int d, CompletionScheme scheme = CompletionScheme::standard);

// One text grid per A-level showing which block owns each (B,C) cell.
std::string occupancy_diagram(const TOPB& basis);

}  // namespace ubb
