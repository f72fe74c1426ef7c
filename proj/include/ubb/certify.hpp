#pragma once

#include "ubb/subspace.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ubb {

struct SeesawConfig {
    int restarts = 200;
    int max_iters = 500;
    double convergence_tol = 1e-12;
    double overlap_threshold = 1.0 - 1e-6;
    std::uint64_t seed = 20240901;
    int jobs = 1;

    void validate() const;
};

enum class Method { structural_exact, exhaustive_exact, randomized_numerical };

std::string to_string(Method method);

// Outcome of one certified claim. Randomized certificates always carry their
// seed and restart/sample counts in the witness.
struct Certificate {
    std::string claim;
    Method method = Method::structural_exact;
    bool pass = false;
    std::uint64_t seed = 0;
    int restarts = 0;
    std::vector<std::pair<std::string, std::string>> witness;

    void note(const std::string& key, const std::string& value) {
        witness.emplace_back(key, value);
    }
};

struct SearchResult {
    double best_overlap = 0.0;
    int best_restart = -1;
    std::vector<double> best_factors;  // concatenated unit-norm local factors
    bool monotone = true;              // no overlap decrease beyond tolerance
    double exact_recheck_delta = 0.0;  // |rationalized exact overlap - float|
};

// Exact Schmidt rank of the coefficient reshape across the cut.
int schmidt_rank(const TripartiteState& state, Bipartition cut);

// True iff the state has Schmidt rank >= 2 across every cut.
bool genuine_entanglement_check(const TripartiteState& state);

// Alternating maximization of <a x b x c| P |a x b x c> over unit product
// vectors; each sweep sets one factor to the top eigenvector of its
// effective matrix. Deterministic for a fixed config.
SearchResult product_overlap_search(const SubspaceProjector& p, const SeesawConfig& cfg);

// Two-factor variant across the cut: one d-dimensional factor and one
// d^2-dimensional factor.
SearchResult biseparable_overlap_search(const SubspaceProjector& p, Bipartition cut,
                                        const SeesawConfig& cfg);

// Uniform random rational with numerator in [-97,97] \ {0} and denominator
// in [1,97].
class RandomRational {
public:
    explicit RandomRational(std::uint64_t seed);
    Rational next();

private:
    std::uint64_t state_;
    std::int64_t next_int(std::int64_t lo, std::int64_t hi);
};

// Exact random vectors inside the complement of the basis set (as rational
// combinations of a kernel basis).
std::vector<RationalVector> sample_complement_vectors(const BasisSet& basis, int count,
                                                      std::uint64_t seed);

// Fact checks on the missing-state set and the symmetric-UBB complement.
Certificate verify_fact_I(int d);
Certificate verify_fact_II(int d);
Certificate verify_fact_III(int d);
Certificate verify_fact_IV(int d, int samples, std::uint64_t seed);

// Random rank-n projectors inside the complement; every two-party marginal
// must have rank >= n+1. When n equals the full complement dimension the
// unique projector is checked instead.
Certificate verify_theorem_sampled(int d, int n, int samples, std::uint64_t seed);

// Claim certificates combining the structural route (exact counterexample
// scan plus exact sampled checks) with the seesaw search.
Certificate certify_no_product(const BasisSet& basis, const SeesawConfig& cfg);
Certificate certify_no_biseparable(const BasisSet& basis, Bipartition cut,
                                   const SeesawConfig& cfg);

}  // namespace ubb
