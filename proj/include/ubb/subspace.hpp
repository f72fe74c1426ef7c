#pragma once

#include "ubb/basis_builder.hpp"
#include "ubb/linalg.hpp"

#include <array>
#include <optional>

namespace ubb {

// Exact projector onto the orthogonal complement of a basis set, kept with
// its tripartite shape.
struct SubspaceProjector {
    int d = 0;
    int rank = 0;
    RationalMatrix mat;

    // mat / rank, the density matrix proportional to the projector.
    RationalMatrix normalized() const;
};

// P = I - sum |psi><psi| / <psi|psi>. Requires pairwise-orthogonal input.
SubspaceProjector complement_projector(const BasisSet& basis);

// Traces one party out of a d^3 x d^3 matrix; the remaining two parties keep
// their original tensor order, so tracing A yields the (B,C) marginal,
// tracing B the (A,C) marginal, and tracing C the (A,B) marginal.
RationalMatrix partial_trace(const RationalMatrix& m, int d, int traced_party);

// Traces one side out of a bipartite (da*db) x (da*db) matrix.
RationalMatrix partial_trace_bipartite(const RationalMatrix& m, int da, int db,
                                       bool trace_first);

// Reduced state on a single party (both other parties traced out).
RationalMatrix single_party_marginal(const RationalMatrix& m, int d, int party);

// Basis reorder |i,j> -> |j,i> on a two-party matrix: swaps the tensor
// factors, e.g. turning an (A,C)-ordered marginal into (C,A) order.
RationalMatrix swap_factors(const RationalMatrix& m, int da, int db);

// Transposes the single-party slot of the cut on a d^3 x d^3 matrix.
RationalMatrix partial_transpose(const RationalMatrix& m, int d, Bipartition cut);

struct CutRanks {
    Bipartition cut;
    int two_party_rank = 0;    // rank of the marginal on the pair side
    int single_party_rank = 0; // rank of the marginal on the lone party
};

struct RankProfile {
    int subspace_rank = 0;
    std::array<CutRanks, 3> cuts;
};

RankProfile rank_profile(const SubspaceProjector& p);

// Distillability criterion for the states supported on the subspace:
// rank(P) < max(rank of the two marginals) across the cut.
bool lemma_rank_criterion(const SubspaceProjector& p, Bipartition cut);

struct CutPTVerdict {
    Bipartition cut;
    bool psd = false;
    bool pt_invariant = false;          // partial transpose equals the input entrywise
    std::optional<EigInterval> min_eig; // present when not PSD
};

struct PTReport {
    std::array<CutPTVerdict, 3> cuts;
};

// Exact PSD verdict of the partial transpose of a symmetric matrix in every
// cut; NPT cuts carry a certified min-eigenvalue interval.
PTReport pt_report(const RationalMatrix& rho, int d);

}  // namespace ubb
