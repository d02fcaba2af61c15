#pragma once

#include "ureq/decide.hpp"
#include "ureq/exact.hpp"
#include "ureq/graph.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ureq {

inline constexpr int kExhaustiveDefaultMax = 10;

/// One representative per isomorphism class of the connected graphs with
/// maximum degree <= 3 on 1..n_max vertices, ordered by order. Throws
/// BudgetError above kExhaustiveDefaultMax unless forced.
std::vector<Graph> exhaustive_connected_subcubic(int n_max, bool force = false);

enum class Requirement { None, MinDegree2, TwoConnected };

/// Seed-deterministic random subcubic graph on n vertices satisfying the
/// requirement. Throws DomainError when the requirement cannot hold at this n
/// and BudgetError when the retries run out.
Graph random_subcubic(int n, std::uint64_t seed, Requirement require = Requirement::None);

struct VerifyOptions {
    bool run_oracle = false;
    int oracle_max_n = 12;
    bool check_theorem1 = false;
    int jobs = 1;
    SolveBudget budget;
};

struct VerifyRecord {
    std::size_t index = 0;
    /// Set when the line could not be parsed; nothing else is filled then.
    std::optional<std::string> parse_error;
    /// Unexpected failure while verifying a parsed graph.
    std::optional<std::string> internal_error;

    int n = 0;
    int m = 0;
    bool subcubic = false;
    bool two_connected = false;
    bool in_b = false;
    std::optional<DecisionReport> decision;
    std::optional<std::string> skip_reason;
    std::optional<OracleResult> oracle;
    /// Equality verdicts of decision and oracle match.
    std::optional<bool> agree;
    /// The maximum uniquely restricted matching found by murm has the oracle size.
    std::optional<bool> nu_ur_agree;
    /// 2-connected subcubic, order >= 21: decision.equal == in_b.
    std::optional<bool> theorem1_ok;

    bool mismatch() const
    {
        return agree == false || nu_ur_agree == false || theorem1_ok == false;
    }
};

struct VerifySummary {
    std::size_t records = 0;
    std::size_t parse_errors = 0;
    std::size_t internal_errors = 0;
    std::size_t skipped = 0;
    std::size_t decided = 0;
    std::size_t equal = 0;
    std::size_t in_b = 0;
    std::size_t oracle_checked = 0;
    std::size_t theorem1_checked = 0;
    std::size_t mismatches = 0;

    void add(const VerifyRecord& r);
    bool ok() const { return mismatches == 0 && internal_errors == 0; }
};

VerifyRecord verify_graph(std::size_t index, const Graph& g, const VerifyOptions& options);

/// Verifies every graph6 line of `in`, handing records to `sink` in input
/// order. Records may be computed on `options.jobs` threads.
VerifySummary verify_stream(std::istream& in, const VerifyOptions& options,
                            const std::function<void(const VerifyRecord&)>& sink);

} // namespace ureq
