#ifndef TANGLEDEC_TANGLES_HPP
#define TANGLEDEC_TANGLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "tangledec/sepsys.hpp"
#include "tangledec/weights.hpp"

namespace tangledec {

/// A total choice of one direction per unordered separation of order < k.
/// `chosen` is kept canonically sorted.
struct Orientation {
    int k = 0;
    std::vector<Separation> chosen;

    bool operator==(const Orientation&) const = default;
};

enum class DefectKind { None, Cover, Consistency, ProfileProperty, Regularity };

std::string defect_to_string(DefectKind kind);

/// Outcome of an axiom check. On failure `witness` re-produces the
/// violation: three small sides covering the structure (cover), the chosen
/// element and the chosen reverse below it (consistency), the two elements
/// and the chosen inverse corner (profile property), or the chosen co-small
/// separation (regularity).
struct TangleCertificate {
    bool ok = true;
    DefectKind kind = DefectKind::None;
    std::vector<Separation> witness;
};

// Throws MalformedInput unless `o.chosen` picks exactly one direction of
// every unordered separation of order < o.k; this is reported distinctly
// from axiom failures, which come back as certificates.
void validate_orientation(const GroundSystem& g, const Orientation& o,
                          const Limits& limits = {});

// Tangle axiom check: no three chosen small sides cover every vertex and
// every edge. Graph or hypergraph mode. The triple scan runs in parallel;
// the serial reference returns the identical (lexicographically first)
// witness.
TangleCertificate is_tangle(const GroundSystem& g, const Orientation& o,
                            const Limits& limits = {});
TangleCertificate is_tangle_serial(const GroundSystem& g, const Orientation& o,
                                   const Limits& limits = {});

// Profile axiom check: consistency (no chosen element sits reversed below
// another chosen element), the profile property (the inverse corner
// (B n D, A u C) of two chosen elements is never chosen when its order is
// below k), and regularity (every (X,V) of order < k is chosen).
TangleCertificate is_profile(const GroundSystem& g, const Orientation& o,
                             const Limits& limits = {});

// All k-tangles, by backtracking over unordered pairs in canonical order.
// Choosing (A,B) propagates every (C,D) <= (A,B) of order < k, and every
// newly chosen element is checked against all triples it completes.
// Deterministic order; stops after `limit` tangles if given.
std::vector<Orientation> enumerate_tangles(const GroundSystem& g, int k,
                                           std::optional<long long> limit = {},
                                           const Limits& limits = {});

/// Result of inducing an orientation by majority vote. Any pair whose two
/// sides compare equal is a tie; ties are never broken silently, they
/// suppress the orientation and are reported in full.
struct InduceResult {
    std::optional<Orientation> orientation;
    std::vector<Separation> ties; // canonical representative of each tied pair

    bool ok() const { return orientation.has_value(); }
};

// Orients each pair (A,B) with |A n X| < |B n X| toward B.
InduceResult induce_from_set(const GroundSystem& g, int k, VertexSet x,
                             const Limits& limits = {});
// Orients each pair (A,B) with w(A) < w(B) toward B.
InduceResult induce_from_weights(const GroundSystem& g, int k, const WeightFunction& w,
                                 const Limits& limits = {});

// Elements of `o.chosen` that are not strictly below another chosen element,
// canonically sorted. This fixed order is the index used by the decider.
std::vector<Separation> maximal_elements(const Orientation& o);

} // namespace tangledec

#endif // TANGLEDEC_TANGLES_HPP
