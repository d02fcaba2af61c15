#pragma once

#include "ureq/exact.hpp"
#include "ureq/graph.hpp"
#include "ureq/matching.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ureq {

/// How one end of the ladder L_k is finished.
enum class EndType {
    Open,      ///< nothing added
    EdgeClose, ///< the edge u_1 v_1 (resp. u_k v_k)
    CapVertex, ///< a new vertex adjacent to u_1 and v_1 (resp. u_k and v_k)
};

std::string to_string(EndType e);
std::optional<EndType> end_type_from_string(std::string_view s);

/// Ladder L_k with finished ends; (left, right) is canonical: left <= right.
struct B1Variant {
    int k = 0;
    EndType left = EndType::Open;
    EndType right = EndType::Open;

    friend bool operator==(const B1Variant&, const B1Variant&) = default;
};

/// L_k closed by two long edges: u_1 v_k, v_1 u_k for odd k, u_1 u_k, v_1 v_k for even k.
struct B2Variant {
    int k = 0;

    friend bool operator==(const B2Variant&, const B2Variant&) = default;
};

/// Where each role of the ladder sits in a concrete graph. Index i holds
/// u_{i+1}, v_{i+1}, w_{i+1}.
struct LadderLabeling {
    std::vector<Vertex> u, v, w;
    std::optional<Vertex> cap_first; ///< w'_1
    std::optional<Vertex> cap_last;  ///< w'_k

    friend bool operator==(const LadderLabeling&, const LadderLabeling&) = default;
};

struct FamilySpec {
    std::variant<B1Variant, B2Variant> variant;
    LadderLabeling labeling;

    int k() const;
    bool is_b1() const { return std::holds_alternative<B1Variant>(variant); }
    /// Same variant class, labeling ignored.
    bool same_class(const FamilySpec& other) const { return variant == other.variant; }
};

struct FamilyGraph {
    Graph graph;
    FamilySpec spec;
};

/// L_k for k >= 1, reported as the (Open, Open) ladder.
FamilyGraph generate_lk(int k);

/// L_k with the given ends, k >= 2. The graph is built literally (left end at
/// u_1 v_1); when left > right the spec is canonicalized by mirroring the labeling.
FamilyGraph generate_b1(int k, EndType left, EndType right);

/// k >= 3.
FamilyGraph generate_b2(int k);

/// Builds the graph a spec describes, in the spec's own labeling.
FamilyGraph generate(const FamilySpec& spec);

/// {u_{2i} w_{2i}} united with {v_{2i-1} w_{2i-1}}: an induced matching of size k.
Matching canonical_induced_matching(const FamilySpec& spec);

/// Throws GraphError if the labeling does not fit the graph (wrong sizes, ids
/// out of range, repeated ids, or missing ladder edges).
void require_labeling_fits(const Graph& g, const FamilySpec& spec);

/// iso[v] = image in `h` of vertex v of `g`, or nothing when not isomorphic.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

/// Every member of B on exactly n vertices, one per isomorphism class.
std::vector<FamilyGraph> enumerate_b_of_order(int n);

/// A spec whose labeling points into `g`, if g is isomorphic to a member of B.
std::optional<FamilySpec> in_b(const Graph& g);

/// Order <= 20: nu_s == nu_ur by the exact solvers. Order >= 21: in_b.
bool in_b_prime(const Graph& g, const SolveBudget& budget = {});

inline constexpr int kSmallOrderThreshold = 20;

} // namespace ureq
