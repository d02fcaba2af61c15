#pragma once

#include "ureq/exact.hpp"
#include "ureq/family.hpp"
#include "ureq/graph.hpp"
#include "ureq/matching.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ureq {

/// A component of the reduced graph that is not in B'. Ids are original ids.
struct NotEqual {
    VertexSet failing_component;

    friend bool operator==(const NotEqual&, const NotEqual&) = default;
};

/// Result of one of the two pendant-elimination algorithms.
struct AlgorithmOutcome {
    std::variant<Matching, NotEqual> result;
    /// Pendant edges taken by the elimination loop, in order.
    std::vector<Edge> pendant_edges;

    bool has_matching() const { return std::holds_alternative<Matching>(result); }
    const Matching& matching() const { return std::get<Matching>(result); }
    const NotEqual& verdict() const { return std::get<NotEqual>(result); }
};

/// Maximum uniquely restricted matching, or the verdict nu_s != nu_ur.
/// Removes both ends of pendant edges. Throws DomainError if g is not subcubic.
AlgorithmOutcome murm(const Graph& g, const SolveBudget& budget = {});

/// Induced matching (maximum whenever nu_s == nu_ur), or the verdict.
/// Removes the closed neighbourhood of the pendant vertex's neighbour.
AlgorithmOutcome msm(const Graph& g, const SolveBudget& budget = {});

/// Local configuration whose presence proves that a given induced matching M
/// is not a maximum uniquely restricted matching.
struct Lemma0Violation {
    /// Edge uv of G - V(M) lying on no 4-cycle u v w x with wx in M.
    struct UncoveredEdge {
        Edge edge;
    };
    /// Disjoint edges u1u2 and v1v2 with u1v1 in M that satisfy none of:
    /// u2 ~ v2; u1 ~ v2 and v1 ~ u2; a 6-cycle u1 u2 x y v2 v1 with xy in M.
    struct LocalPair {
        Edge matched;     ///< u1 v1
        Edge first;       ///< u1 u2
        Edge second;      ///< v1 v2
    };

    std::variant<UncoveredEdge, LocalPair> kind;
    /// Uniquely restricted and one edge larger than M.
    Matching implied_better_matching;
};

/// Throws GraphError if m is not an induced matching of g.
std::vector<Lemma0Violation> lemma0_violations(const Graph& g, const Matching& m);

struct SizeMismatch {
    int ur_size = 0;
    int induced_size = 0;
};

struct FailingComponent {
    std::string algorithm; ///< "murm" or "msm"
    VertexSet component;
};

using Refutation = std::variant<FailingComponent, SizeMismatch, Lemma0Violation>;

struct DecisionReport {
    bool equal = false;
    std::optional<int> nu_s;
    std::optional<int> nu_ur;
    std::optional<Matching> induced_witness;
    std::optional<Matching> ur_witness;
    std::optional<Refutation> refutation;
};

struct DecideOptions {
    SolveBudget budget;
    /// When the graph is unequal, also compute nu_s (and nu_ur if unknown)
    /// with the exact solvers, and upgrade the refutation to a local-pair
    /// violation of the exact maximum induced matching when one exists.
    bool solve_exact = false;
};

/// Runs both algorithms; nu_s == nu_ur iff both return matchings of equal size.
DecisionReport decide_equality(const Graph& g, const DecideOptions& options = {});

} // namespace ureq
