// Acceptance gate: one line per criterion, wall-clock budgets enforced,
// nonzero exit when anything fails. Run from the build tree via ctest or
// directly; fixtures resolve through UBB_FIXTURE_DIR.
#include "ubb/basis_builder.hpp"
#include "ubb/certify.hpp"
#include "ubb/io.hpp"
#include "ubb/linalg.hpp"
#include "ubb/report.hpp"
#include "ubb/subspace.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace ubb;

namespace {

using Clock = std::chrono::steady_clock;

template <typename... Ts>
std::string msg(Ts&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

struct Crit {
    bool ok = true;
    std::ostringstream detail;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "       - " << what << "\n";
        }
    }
};

class Acceptance {
public:
    void criterion(const std::string& name, double budget_s,
                   const std::function<void(Crit&)>& body) {
        ++index_;
        Crit c;
        const auto start = Clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.check(false, msg("unhandled exception: ", e.what()));
        }
        const double secs =
            std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > budget_s)
            c.check(false, msg("time budget exceeded: ", secs, "s > ", budget_s, "s"));
        std::printf("[%s] %02d %-42s (%6.2fs, budget %4.0fs)\n", c.ok ? "PASS" : "FAIL", index_,
                    name.c_str(), secs, budget_s);
        std::fflush(stdout);
        if (!c.ok) {
            std::fputs(c.detail.str().c_str(), stdout);
            ++failures_;
        }
    }

    int criteria() const { return index_; }
    int failures() const { return failures_; }

private:
    int index_ = 0;
    int failures_ = 0;
};

std::string fixture(const std::string& name) { return std::string(UBB_FIXTURE_DIR) + "/" + name; }

bool pairwise_orthogonal(const BasisSet& basis) {
    for (std::size_t i = 0; i < basis.states.size(); ++i) {
        if (std::all_of(basis.states[i].coeffs.begin(), basis.states[i].coeffs.end(),
                        [](const Rational& r) { return r.is_zero(); }))
            return false;
        for (std::size_t j = i + 1; j < basis.states.size(); ++j)
            if (!dot(basis.states[i].coeffs, basis.states[j].coeffs).is_zero()) return false;
    }
    return true;
}

// Orthogonal nonzero states are independent, so orthogonality plus the count
// pins the complement dimension exactly; rank_check recomputes it by
// elimination as a second route on the smaller instances.
void check_set(Crit& c, const BasisSet& basis, const std::string& name, int want_count,
               int want_comp, bool rank_check) {
    c.check(static_cast<int>(basis.states.size()) == want_count,
            msg(name, ": got ", basis.states.size(), " states, want ", want_count));
    c.check(pairwise_orthogonal(basis), msg(name, ": states not pairwise orthogonal"));
    c.check(basis.complement_dim() == want_comp,
            msg(name, ": complement dim ", basis.complement_dim(), ", want ", want_comp));
    if (rank_check) {
        std::vector<RationalVector> rows;
        rows.reserve(basis.states.size());
        for (const auto& s : basis.states) rows.push_back(s.coeffs);
        const int comp =
            basis.d * basis.d * basis.d - rank(RationalMatrix::from_rows(rows));
        c.check(comp == want_comp,
                msg(name, ": eliminated complement dim ", comp, ", want ", want_comp));
    }
}

// Deterministic generator for the property sweeps.
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

RationalMatrix random_matrix(RandomRational& rr, Lcg& lcg, int rows, int cols) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (lcg.range(0, 3) != 0) m.at(i, j) = rr.next();
    return m;
}

int run_all() {
    Acceptance acc;
    const std::uint64_t seed = 20240901;
    const int jobs = static_cast<int>(
        std::min<unsigned>(4, std::max<unsigned>(1, std::thread::hardware_concurrency())));

    acc.criterion("product-set counts and complement dims", 1.0, [](Crit& c) {
        check_set(c, build_upb(3), "upb d=3", 19, 8, true);
        check_set(c, build_upb(4), "upb d=4", 56, 8, true);
        check_set(c, build_upb(5), "upb d=5", 109, 16, false);
    });

    acc.criterion("block-set counts and complement dims", 1.0, [](Crit& c) {
        check_set(c, build_symmetric_ubb(3), "ubb-sym d=3", 22, 5, true);
        check_set(c, build_symmetric_ubb(4), "ubb-sym d=4", 59, 5, true);
        check_set(c, build_symmetric_ubb(5), "ubb-sym d=5", 115, 10, false);
        for (Bipartition cut : all_cuts())
            check_set(c, build_asymmetric_ubb(3, cut),
                      msg("ubb-asym d=3 ", to_string(cut)), 23, 4, true);
    });

    acc.criterion("rank-5 complement bimarginals", 1.0, [](Crit& c) {
        const SubspaceProjector p = complement_projector(build_symmetric_ubb(3));
        c.check(p.rank == 5, msg("complement rank ", p.rank, ", want 5"));
        const RationalMatrix rho = p.normalized();
        const RationalMatrix g = read_rmat_file(fixture("ges5_marginal_ca.rmat"));
        const RationalMatrix tr_a = partial_trace(rho, 3, 0);
        const RationalMatrix tr_b = partial_trace(rho, 3, 1);
        const RationalMatrix tr_c = partial_trace(rho, 3, 2);
        c.check(tr_a == g, "trace over A differs from the recorded matrix");
        c.check(swap_factors(tr_b, 3, 3) == g,
                "trace over B (factors swapped) differs from the recorded matrix");
        c.check(tr_c == g, "trace over C differs from the recorded matrix");
        c.check(rank(g) == 6, msg("bimarginal rank ", rank(g), ", want 6"));
    });

    acc.criterion("rank-4 complement marginals and transpose", 5.0, [](Crit& c) {
        const SubspaceProjector p =
            complement_projector(build_asymmetric_ubb(3, Bipartition::AB_C));
        c.check(p.rank == 4, msg("complement rank ", p.rank, ", want 4"));
        const RationalMatrix rho = p.normalized();
        const RationalMatrix g_bc = read_rmat_file(fixture("ges4_marginal_bc.rmat"));
        const RationalMatrix g_ac = read_rmat_file(fixture("ges4_marginal_ac.rmat"));
        c.check(partial_trace(rho, 3, 0) == g_bc,
                "trace over A differs from the recorded matrix");
        c.check(partial_trace(rho, 3, 1) == g_ac,
                "trace over B differs from the recorded matrix");
        c.check(rank(g_bc) == 7, msg("BC marginal rank ", rank(g_bc), ", want 7"));
        c.check(rank(g_ac) == 7, msg("AC marginal rank ", rank(g_ac), ", want 7"));
        const int r_ab = rank(partial_trace(rho, 3, 2));
        c.check(r_ab == 3, msg("AB marginal rank ", r_ab, ", want 3"));

        const PTReport rep = pt_report(rho, 3);
        const Rational lo_bound(-116, 1000), hi_bound(-115, 1000);
        for (const auto& v : rep.cuts) {
            const std::string cut = to_string(v.cut);
            if (v.cut == Bipartition::AB_C) {
                c.check(v.psd, "AB|C transpose should stay PSD");
                c.check(v.pt_invariant, "AB|C transpose should equal the state");
            } else {
                c.check(!v.psd, msg(cut, " transpose should not be PSD"));
                c.check(v.min_eig.has_value(), msg(cut, " missing eigenvalue interval"));
                if (v.min_eig) {
                    c.check(v.min_eig->lo > lo_bound && v.min_eig->hi < hi_bound,
                            msg(cut, " min eigenvalue interval [", v.min_eig->lo.str(), ", ",
                                v.min_eig->hi.str(), "] outside (-116/1000, -115/1000)"));
                }
            }
        }
    });

    acc.criterion("product-set complement stays PPT", 60.0, [](Crit& c) {
        for (int d = 3; d <= 5; ++d) {
            const SubspaceProjector p = complement_projector(build_upb(d));
            const PTReport rep = pt_report(p.normalized(), d);
            for (const auto& v : rep.cuts)
                c.check(v.psd, msg("d=", d, " ", to_string(v.cut), " transpose not PSD"));
        }
    });

    acc.criterion("complement marginal rank excess", 120.0, [seed](Crit& c) {
        const Certificate full = verify_theorem_sampled(3, 5, 200, seed);
        c.check(full.pass, "unique rank-5 projector violates the rank bound");
        c.check(full.method == Method::structural_exact,
                "rank-5 route should be the unique-projector one");
        for (const auto& [key, value] : full.witness)
            if (key == "min_two_party_rank")
                c.check(value == "6", msg("rank-5 bimarginal rank ", value, ", want 6"));
        for (int n = 1; n <= 4; ++n) {
            const Certificate cert = verify_theorem_sampled(3, n, 200, seed);
            c.check(cert.pass, msg("rank-", n, " sampling failed"));
            for (const auto& [key, value] : cert.witness) {
                if (key == "projectors_checked")
                    c.check(value == "200", msg("rank-", n, ": checked ", value, " of 200"));
                if (key == "required_rank")
                    c.check(value == std::to_string(n + 1),
                            msg("rank-", n, ": required rank recorded as ", value));
            }
        }
    });

    acc.criterion("span and mixture rank checks", 120.0, [seed](Crit& c) {
        const Certificate f1 = verify_fact_I(3);
        const Certificate f2 = verify_fact_II(3);
        const Certificate f3 = verify_fact_III(3);
        c.check(f1.pass, "missing states fail to span the complement");
        c.check(f2.pass, "a pairwise span intersection is too large");
        c.check(f3.pass, "a missing-state mixture has a deficient marginal");
        const Certificate f4 = verify_fact_IV(3, 50, seed);
        c.check(f4.pass, "a pairwise combination has a deficient marginal");
        for (const auto& [key, value] : f4.witness) {
            if (key == "pairs_checked")
                c.check(value == "15", msg("pairs checked ", value, ", want 15"));
            if (key == "samples_per_pair")
                c.check(value == "50", msg("samples per pair ", value, ", want 50"));
        }
    });

    acc.criterion("no product or biseparable vector", 300.0, [seed, jobs](Crit& c) {
        SeesawConfig cfg;
        cfg.restarts = 200;
        cfg.seed = seed;
        cfg.jobs = jobs;

        const BasisSet upb = build_upb(3);
        const Certificate np = certify_no_product(upb, cfg);
        c.check(np.pass, "product search reached the complement of the product set");

        const BasisSet sym = build_symmetric_ubb(3);
        for (Bipartition cut : all_cuts()) {
            const Certificate cert = certify_no_biseparable(sym, cut, cfg);
            c.check(cert.pass,
                    msg("biseparable search reached the rank-5 complement in ", to_string(cut)));
        }

        const BasisSet asym = build_asymmetric_ubb(3, Bipartition::AB_C);
        for (Bipartition cut : all_cuts()) {
            const Certificate cert = certify_no_biseparable(asym, cut, cfg);
            c.check(cert.pass,
                    msg("biseparable search reached the rank-4 complement in ", to_string(cut)));
        }

        // Control: the product-set complement does hold an AB|C-biseparable
        // state, and the same search must find it to numerical precision.
        const SearchResult control =
            biseparable_overlap_search(complement_projector(upb), Bipartition::AB_C, cfg);
        c.check(control.best_overlap >= 1.0 - 1e-9,
                msg("control search stalled at ", control.best_overlap));
    });

    acc.criterion("completion-scheme invariance", 120.0, [](Crit& c) {
        const auto p = CompletionScheme::permuted;

        // d=3 windows have size two, so the permuted completion rebuilds the
        // identical sets and every d=3 criterion above carries over verbatim.
        c.check(complement_projector(build_upb(3, p)).mat ==
                    complement_projector(build_upb(3)).mat,
                "d=3 product-set projector changed under the permuted completion");
        c.check(complement_projector(build_symmetric_ubb(3, p)).mat ==
                    complement_projector(build_symmetric_ubb(3)).mat,
                "d=3 block-set projector changed under the permuted completion");
        c.check(complement_projector(build_asymmetric_ubb(3, Bipartition::AB_C, p)).mat ==
                    complement_projector(build_asymmetric_ubb(3, Bipartition::AB_C)).mat,
                "d=3 one-cut projector changed under the permuted completion");

        check_set(c, build_upb(3, p), "permuted upb d=3", 19, 8, true);
        check_set(c, build_upb(4, p), "permuted upb d=4", 56, 8, true);
        check_set(c, build_upb(5, p), "permuted upb d=5", 109, 16, false);
        check_set(c, build_symmetric_ubb(3, p), "permuted ubb-sym d=3", 22, 5, true);
        check_set(c, build_symmetric_ubb(4, p), "permuted ubb-sym d=4", 59, 5, true);
        check_set(c, build_symmetric_ubb(5, p), "permuted ubb-sym d=5", 115, 10, false);
        for (Bipartition cut : all_cuts())
            check_set(c, build_asymmetric_ubb(3, cut, p),
                      msg("permuted ubb-asym d=3 ", to_string(cut)), 23, 4, true);

        for (int d = 4; d <= 5; ++d) {
            const SubspaceProjector proj = complement_projector(build_upb(d, p));
            const PTReport rep = pt_report(proj.normalized(), d);
            for (const auto& v : rep.cuts)
                c.check(v.psd, msg("permuted d=", d, " ", to_string(v.cut),
                                   " transpose not PSD"));
        }
    });

    acc.criterion("exact-arithmetic property sweeps", 60.0, [](Crit& c) {
        RandomRational rr(20240901);
        Lcg lcg(0xACCE57);

        // Complement projectors of random orthogonal sets: symmetric,
        // idempotent, trace equals rank, annihilates every member.
        for (int t = 0; t < 100; ++t) {
            const int count = lcg.range(1, 6);
            std::vector<RationalVector> ortho;
            for (int attempt = 0; attempt < 16 && ortho.empty(); ++attempt) {
                std::vector<RationalVector> draw;
                for (int v = 0; v < count; ++v) {
                    RationalVector vec(27, Rational(0));
                    for (auto& x : vec)
                        if (lcg.range(0, 2) != 0) x = rr.next();
                    draw.push_back(std::move(vec));
                }
                try {
                    ortho = orthogonalize(draw);
                } catch (const std::invalid_argument&) {
                }
            }
            if (ortho.empty()) {
                c.check(false, "could not draw an independent set");
                break;
            }
            BasisSet bs;
            bs.d = 3;
            for (std::size_t i = 0; i < ortho.size(); ++i)
                bs.states.push_back(TripartiteState{3, msg("v", i), ortho[i]});
            const SubspaceProjector proj = complement_projector(bs);
            c.check(proj.mat.is_symmetric(), "projector not symmetric");
            c.check(proj.mat * proj.mat == proj.mat, "projector not idempotent");
            c.check(proj.mat.trace() == Rational(proj.rank), "projector trace differs from rank");
            c.check(proj.rank == 27 - count, "projector rank off");
            for (const auto& s : bs.states) {
                RationalVector image(27, Rational(0));
                for (int i = 0; i < 27; ++i)
                    for (int j = 0; j < 27; ++j) image[i] += proj.mat.at(i, j) * s.coeffs[j];
                c.check(std::all_of(image.begin(), image.end(),
                                    [](const Rational& r) { return r.is_zero(); }),
                        "projector does not annihilate a member");
            }
            if (!c.ok) break;
        }

        // Partial transpose: involution, trace-preserving; partial trace:
        // trace-preserving. All on random rational matrices.
        for (int t = 0; t < 100 && c.ok; ++t) {
            const RationalMatrix m = random_matrix(rr, lcg, 27, 27);
            const Bipartition cut = all_cuts()[static_cast<std::size_t>(t % 3)];
            c.check(partial_transpose(partial_transpose(m, 3, cut), 3, cut) == m,
                    "partial transpose is not an involution");
            c.check(partial_transpose(m, 3, cut).trace() == m.trace(),
                    "partial transpose changed the trace");
            c.check(partial_trace(m, 3, t % 3).trace() == m.trace(),
                    "partial trace changed the trace");
        }

        // Orthogonalization: pairwise orthogonal, integral, primitive.
        for (int t = 0; t < 100 && c.ok; ++t) {
            const int count = lcg.range(2, 5);
            const int dim = lcg.range(count, 9);
            std::vector<RationalVector> draw;
            for (int v = 0; v < count; ++v) {
                RationalVector vec(static_cast<std::size_t>(dim), Rational(0));
                for (auto& x : vec) x = rr.next();
                draw.push_back(std::move(vec));
            }
            std::vector<RationalVector> ortho;
            try {
                ortho = orthogonalize(draw);
            } catch (const std::invalid_argument&) {
                continue;  // dependent draw; property vacuous
            }
            for (std::size_t i = 0; i < ortho.size(); ++i) {
                mpz_class g(0);
                for (const auto& x : ortho[i]) {
                    c.check(x.den() == 1, "orthogonalized entry not integral");
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
                }
                c.check(g == 1, "orthogonalized vector not primitive");
                for (std::size_t j = i + 1; j < ortho.size(); ++j)
                    c.check(dot(ortho[i], ortho[j]).is_zero(),
                            "orthogonalized vectors not orthogonal");
            }
        }

        // Text formats: write/read identity on random matrices and state sets.
        for (int t = 0; t < 100 && c.ok; ++t) {
            const RationalMatrix m =
                random_matrix(rr, lcg, lcg.range(1, 6), lcg.range(1, 6));
            std::ostringstream os;
            write_rmat(os, m);
            std::istringstream is(os.str());
            c.check(read_rmat(is) == m, "rmat round trip changed the matrix");

            StateSetData data;
            data.d = 3;
            const int count = lcg.range(1, 5);
            for (int v = 0; v < count; ++v) {
                TripartiteState st{3, msg("s", v), RationalVector(27, Rational(0))};
                st.coeffs[static_cast<std::size_t>(lcg.range(0, 26))] = rr.next();
                for (auto& x : st.coeffs)
                    if (lcg.range(0, 3) == 0) x = rr.next();
                data.states.push_back(std::move(st));
            }
            std::ostringstream os2;
            write_stateset(os2, data);
            std::istringstream is2(os2.str());
            const StateSetData back = read_stateset(is2);
            c.check(back.d == data.d, "stateset round trip changed d");
            bool same = back.states.size() == data.states.size();
            for (std::size_t i = 0; same && i < back.states.size(); ++i)
                same = back.states[i].label == data.states[i].label &&
                       back.states[i].coeffs == data.states[i].coeffs;
            c.check(same, "stateset round trip changed the states");
        }
    });

    std::printf("acceptance: %d/%d criteria passed\n", acc.criteria() - acc.failures(),
                acc.criteria());
    return acc.failures() == 0 ? 0 : 1;
}

}  // namespace

int main() { return run_all(); }
