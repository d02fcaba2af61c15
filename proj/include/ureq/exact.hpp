#pragma once

#include "ureq/graph.hpp"
#include "ureq/matching.hpp"

#include <cstdint>
#include <vector>

namespace ureq {

/// Limits for the exponential solvers. Exceeding either limit raises
/// BudgetError; a solver never returns an unverified answer.
struct SolveBudget {
    int max_order = 26;
    std::uint64_t max_nodes = 100'000'000;
    /// Ignore max_order (the hard representation limit of 64 vertices still applies).
    bool force = false;

    /// Default for the plain-enumeration oracle.
    static SolveBudget oracle_default() { return SolveBudget{16, 200'000'000, false}; }
};

/// Hard limit of the bitset-based exact solvers.
inline constexpr int kExactMaxOrder = 64;

struct SolveResult {
    int size = 0;
    Matching witness;
};

/// Search statistics; optionally records a sample of rejected extensions
/// (current matching plus the edge that would close an alternating cycle).
struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned_extensions = 0;
    std::size_t sample_cap = 0;
    std::vector<Matching> pruned_sample;
};

/// nu(G) via Edmonds' blossom algorithm.
SolveResult max_matching(const Graph& g);

/// nu_s(G). The witness is the lexicographically smallest maximum induced matching.
SolveResult max_induced_matching(const Graph& g, const SolveBudget& budget = {}, SolveStats* stats = nullptr);

/// nu_ur(G). The witness is the lexicographically smallest maximum uniquely
/// restricted matching.
SolveResult max_uniquely_restricted_matching(const Graph& g, const SolveBudget& budget = {},
                                             SolveStats* stats = nullptr);

struct OracleResult {
    int nu = 0;
    int nu_s = 0;
    int nu_ur = 0;
    bool equal = false;
};

/// Ground truth by enumerating every matching of G. Unique restriction is
/// decided by counting perfect matchings of G(M), never by alternating paths.
OracleResult oracle_equality(const Graph& g, const SolveBudget& budget = SolveBudget::oracle_default());

/// Number of perfect matchings of g, counting stops at `cap`.
std::uint64_t count_perfect_matchings(const Graph& g, std::uint64_t cap);

} // namespace ureq
