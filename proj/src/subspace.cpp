#include "ubb/subspace.hpp"

#include <stdexcept>

namespace ubb {

RationalMatrix SubspaceProjector::normalized() const {
    if (rank == 0) throw std::domain_error("SubspaceProjector: zero projector has no state");
    return mat.scaled(Rational(1, rank));
}

SubspaceProjector complement_projector(const BasisSet& basis) {
    const int n = basis.d * basis.d * basis.d;
    for (size_t i = 0; i < basis.states.size(); ++i)
        for (size_t j = i + 1; j < basis.states.size(); ++j)
            if (!dot(basis.states[i].coeffs, basis.states[j].coeffs).is_zero())
                throw std::invalid_argument("complement_projector: non-orthogonal basis set");
    SubspaceProjector p;
    p.d = basis.d;
    p.rank = n - static_cast<int>(basis.states.size());
    p.mat = RationalMatrix::identity(n);
    for (const TripartiteState& s : basis.states) {
        const Rational norm = dot(s.coeffs, s.coeffs);
        p.mat.add_outer(s.coeffs, -norm);  // subtracts |s><s| / <s|s>
    }
    return p;
}

RationalMatrix partial_trace(const RationalMatrix& m, int d, int traced_party) {
    const int n = d * d * d;
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("partial_trace: matrix is not d^3 x d^3");
    if (traced_party < 0 || traced_party > 2)
        throw std::invalid_argument("partial_trace: party out of range");
    RationalMatrix out(d * d, d * d);
    const auto flat = [d](int p, int q, int r) { return (p * d + q) * d + r; };
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int a2 = 0; a2 < d; ++a2)
                for (int b2 = 0; b2 < d; ++b2) {
                    Rational sum;
                    for (int t = 0; t < d; ++t) {
                        int i, j;
                        switch (traced_party) {
                            case 0: i = flat(t, a, b); j = flat(t, a2, b2); break;
                            case 1: i = flat(a, t, b); j = flat(a2, t, b2); break;
                            default: i = flat(a, b, t); j = flat(a2, b2, t); break;
                        }
                        sum += m.at(i, j);
                    }
                    out.at(a * d + b, a2 * d + b2) = sum;
                }
    return out;
}

RationalMatrix partial_trace_bipartite(const RationalMatrix& m, int da, int db,
                                       bool trace_first) {
    if (m.rows() != da * db || m.cols() != da * db)
        throw std::invalid_argument("partial_trace_bipartite: shape mismatch");
    const int keep = trace_first ? db : da;
    const int gone = trace_first ? da : db;
    RationalMatrix out(keep, keep);
    for (int a = 0; a < keep; ++a)
        for (int a2 = 0; a2 < keep; ++a2) {
            Rational sum;
            for (int t = 0; t < gone; ++t) {
                const int i = trace_first ? t * db + a : a * db + t;
                const int j = trace_first ? t * db + a2 : a2 * db + t;
                sum += m.at(i, j);
            }
            out.at(a, a2) = sum;
        }
    return out;
}

RationalMatrix single_party_marginal(const RationalMatrix& m, int d, int party) {
    switch (party) {
        case 0: return partial_trace_bipartite(partial_trace(m, d, 1), d, d, false);
        case 1: return partial_trace_bipartite(partial_trace(m, d, 0), d, d, false);
        case 2: return partial_trace_bipartite(partial_trace(m, d, 0), d, d, true);
        default: throw std::invalid_argument("single_party_marginal: party out of range");
    }
}

RationalMatrix swap_factors(const RationalMatrix& m, int da, int db) {
    if (m.rows() != da * db || m.cols() != da * db)
        throw std::invalid_argument("swap_factors: shape mismatch");
    RationalMatrix out(da * db, da * db);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int a2 = 0; a2 < da; ++a2)
                for (int b2 = 0; b2 < db; ++b2)
                    out.at(b * da + a, b2 * da + a2) = m.at(a * db + b, a2 * db + b2);
    return out;
}

RationalMatrix partial_transpose(const RationalMatrix& m, int d, Bipartition cut) {
    const int n = d * d * d;
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("partial_transpose: matrix is not d^3 x d^3");
    const int sigma = single_party(cut);
    RationalMatrix out(n, n);
    const auto split = [d](int idx, int slot) {
        switch (slot) {
            case 0: return idx / (d * d);
            case 1: return (idx / d) % d;
            default: return idx % d;
        }
    };
    const auto join = [d](int p, int q, int r) { return (p * d + q) * d + r; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int pi[3] = {split(i, 0), split(i, 1), split(i, 2)};
            int pj[3] = {split(j, 0), split(j, 1), split(j, 2)};
            std::swap(pi[sigma], pj[sigma]);
            out.at(join(pi[0], pi[1], pi[2]), join(pj[0], pj[1], pj[2])) = m.at(i, j);
        }
    return out;
}

RankProfile rank_profile(const SubspaceProjector& p) {
    RankProfile prof;
    prof.subspace_rank = rank(p.mat);
    int idx = 0;
    for (Bipartition cut : all_cuts()) {
        CutRanks cr;
        cr.cut = cut;
        const int sigma = single_party(cut);
        cr.two_party_rank = rank(partial_trace(p.mat, p.d, sigma));
        cr.single_party_rank = rank(single_party_marginal(p.mat, p.d, sigma));
        prof.cuts[idx++] = cr;
    }
    return prof;
}

bool lemma_rank_criterion(const SubspaceProjector& p, Bipartition cut) {
    const int sigma = single_party(cut);
    const int r_pair = rank(partial_trace(p.mat, p.d, sigma));
    const int r_single = rank(single_party_marginal(p.mat, p.d, sigma));
    return p.rank < std::max(r_pair, r_single);
}

PTReport pt_report(const RationalMatrix& rho, int d) {
    if (!rho.is_symmetric()) throw std::invalid_argument("pt_report: asymmetric input");
    PTReport report;
    int idx = 0;
    for (Bipartition cut : all_cuts()) {
        CutPTVerdict v;
        v.cut = cut;
        const RationalMatrix pt = partial_transpose(rho, d, cut);
        v.pt_invariant = (pt == rho);
        v.psd = is_psd(pt);
        if (!v.psd) v.min_eig = min_eig_bound(pt);
        report.cuts[idx++] = v;
    }
    return report;
}

}  // namespace ubb
