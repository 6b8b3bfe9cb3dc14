#ifndef TANGLEDEC_SEPSYS_HPP
#define TANGLEDEC_SEPSYS_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tangledec/errors.hpp"

namespace tangledec {

// A set of vertices as a bitmask; bit i is the i-th vertex in sorted name
// order. Everything downstream (separations, tangles, weights) works on
// these masks and only converts back to names at the JSON boundary.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertexBits = 63;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool subset(VertexSet s, VertexSet t) { return (s & ~t) == 0; }

enum class Mode { Graph, Hypergraph, SetSep };

std::string mode_to_string(Mode mode);
Mode mode_from_string(const std::string& s);

// Operation-level caps, configurable from the CLI via --max-vertices.
struct Limits {
    int max_vertices = 16;
};

/// The universe a separation lives in: a vertex set plus edge structure.
/// Graph edges have exactly two vertices, hyperedges at least two, and
/// setsep mode has no edges at all (every vertex bipartition separates).
class GroundSystem {
public:
    GroundSystem(Mode mode, std::vector<std::string> vertices,
                 const std::vector<std::vector<std::string>>& edges);

    Mode mode() const { return mode_; }
    int vertex_count() const { return static_cast<int>(names_.size()); }
    VertexSet full_set() const { return full_; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int vertex_index(const std::string& name) const;
    const std::vector<VertexSet>& edge_masks() const { return edges_; }

    VertexSet set_of(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(VertexSet s) const;

private:
    Mode mode_;
    std::vector<std::string> names_; // sorted; index = bit position
    std::unordered_map<std::string, int> index_;
    std::vector<VertexSet> edges_; // canonical: sorted, deduplicated
    VertexSet full_ = 0;
};

/// An oriented separation (A,B) with A u B = V. A is the small side the
/// tangle points away from, B the big side it points into.
struct Separation {
    VertexSet a = 0;
    VertexSet b = 0;

    auto operator<=>(const Separation&) const = default;
};

inline VertexSet separator(const Separation& s) { return s.a & s.b; }
inline int order(const Separation& s) { return set_size(s.a & s.b); }
inline Separation inverse(const Separation& s) { return {s.b, s.a}; }

// (A,B) <= (C,D) iff A is a subset of C and B a superset of D.
inline bool leq(const Separation& s, const Separation& t) {
    return subset(s.a, t.a) && subset(t.b, s.b);
}

// True iff A u B = V and no edge meets both A\B and B\A (equivalently,
// every edge lies inside A or inside B). Vacuous edge condition in setsep
// mode. Masks must be subsets of the ground set.
bool is_separation(const GroundSystem& g, VertexSet a, VertexSet b);
// Name-level entry point; unknown vertex identifiers raise MalformedInput.
bool is_separation(const GroundSystem& g, const std::vector<std::string>& a,
                   const std::vector<std::string>& b);

// Connected components after deleting `removed`. Vertices of an edge that
// survives deletion end up in one component; with no edges every remaining
// vertex is its own component.
std::vector<VertexSet> components_after_removal(const GroundSystem& g, VertexSet removed);

// All subsets of {0,..,n-1} with exactly `size` elements, as masks in
// increasing numeric order.
std::vector<VertexSet> subsets_of_size(int n, int size);

// Every oriented separation of order < k, exactly once, canonically sorted
// (and therefore closed under inversion). Generated separator-first: each
// candidate separator C with |C| < k contributes one separation per
// assignment of the components of G - C to the two sides, both of which
// also contain C. Work is spread over separator candidates; the sorted
// output is identical to the serial reference.
std::vector<Separation> enumerate_separations(const GroundSystem& g, int k,
                                              const Limits& limits = {});
std::vector<Separation> enumerate_separations_serial(const GroundSystem& g, int k,
                                                     const Limits& limits = {});

} // namespace tangledec

#endif // TANGLEDEC_SEPSYS_HPP
