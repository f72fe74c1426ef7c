#pragma once

#include "ubb/block_cube.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ubb {

// Split of {A,B,C} into one party versus the other two.
enum class Bipartition { A_BC, AC_B, AB_C };

constexpr std::array<Bipartition, 3> all_cuts() {
    return {Bipartition::A_BC, Bipartition::AC_B, Bipartition::AB_C};
}

// Tensor slot (0=A, 1=B, 2=C) of the single party of the cut.
int single_party(Bipartition cut);

std::string to_string(Bipartition cut);
std::optional<Bipartition> parse_bipartition(const std::string& text);

enum class BasisKind { topb, upb, ubb_sym, ubb_asym };

std::string to_string(BasisKind kind);

// Ordered set of pairwise-orthogonal states on the cube. `cut` is set only
// for the asymmetric biseparable basis.
struct BasisSet {
    int d = 0;
    BasisKind kind = BasisKind::topb;
    CompletionScheme scheme = CompletionScheme::standard;
    std::optional<Bipartition> cut;
    std::vector<TripartiteState> states;

    size_t size() const { return states.size(); }
    int complement_dim() const { return d * d * d - static_cast<int>(states.size()); }
};

// The states removed from the full product basis on the way to the UPB plus
// the orthogonal pair-sums; together they span the UPB complement alongside
// the biseparable difference states, and every one of them overlaps |S>.
struct MissingStateSet {
    int d = 0;
    std::vector<TripartiteState> states;
};

// |S> = (|0> + ... + |d-1>)^(x3), the state overlapping every cell.
TripartiteState stopper_state(int d);

BasisSet build_full_topb(int d, CompletionScheme scheme = CompletionScheme::standard);

// Drops one seed state per face block (and the all-plus inner-cube state for
// even d) together with the whole diagonal, then appends |S>.
BasisSet build_upb(int d, CompletionScheme scheme = CompletionScheme::standard);

// UPB plus one biseparable difference state per cut per layer.
BasisSet build_symmetric_ubb(int d, CompletionScheme scheme = CompletionScheme::standard);

// UPB plus, per layer, states biseparable in one fixed cut: two face-pair
// differences and two diagonal-anchored states c|kkk> - |psi(0,0)>_f with c
// chosen so the state is orthogonal to |S>.
BasisSet build_asymmetric_ubb(int d, Bipartition cut,
                              CompletionScheme scheme = CompletionScheme::standard);

MissingStateSet missing_state_set(int d, CompletionScheme scheme = CompletionScheme::standard);

// Builds the requested kind; `cut` is required for ubb_asym and rejected
// otherwise.
BasisSet build_basis(int d, BasisKind kind, std::optional<Bipartition> cut = std::nullopt,
                     CompletionScheme scheme = CompletionScheme::standard);

}  // namespace ubb
