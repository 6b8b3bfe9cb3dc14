#ifndef TANGLEDEC_ORACLE_HPP
#define TANGLEDEC_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tangledec/sepsys.hpp"
#include "tangledec/tangles.hpp"
#include "tangledec/weights.hpp"

namespace tangledec {

struct VerifyWitness {
    Separation sep;
    Int weight_a;
    Int weight_b;
    bool chosen = false; // whether sep is in the orientation
};

struct VerifyResult {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<VerifyWitness> witness; // canonically first violation
};

// Exhaustive deciderhood check: for every separation (A,B) of order < k,
// (A,B) is chosen exactly when w(A) < w(B), with exact integer comparisons.
// The parallel kernel and the serial reference return identical results,
// including the canonically-first witness.
VerifyResult verify_decider(const GroundSystem& g, const Orientation& o,
                            const WeightFunction& w, const Limits& limits = {});
VerifyResult verify_decider_serial(const GroundSystem& g, const Orientation& o,
                                   const WeightFunction& w, const Limits& limits = {});

struct Search01Result {
    bool found = false;
    VertexSet x = 0;
};

// Exhaustively tests every X, a subset of V, for deciding the orientation by
// majority vote (|A n X| < |B n X|). Returns the first such X in canonical
// (numeric bitmask) order, or none-found. Probe for the {0,1}-decider
// question at tiny scale; guarded by the vertex cap.
Search01Result search_01_decider(const GroundSystem& g, const Orientation& o,
                                 const Limits& limits = {});
Search01Result search_01_decider_serial(const GroundSystem& g, const Orientation& o,
                                        const Limits& limits = {});

// Independent reference for the enumerator: tries all 3^|V| assignments of
// vertices to {A only, B only, both}. At most 7 vertices.
std::vector<Separation> brute_force_separations(const GroundSystem& g, int k);

// Sum over separators C with |C| < k of 2^(number of components of G - C).
unsigned long long separation_count_formula(const GroundSystem& g, int k);

struct CountLawResult {
    bool ok = false;
    std::size_t enumerated = 0;
    std::size_t brute_force = 0;
    unsigned long long formula = 0;
};

// Cross-checks enumerate_separations against the 3^|V| brute force and the
// component-count formula. Graph/hypergraph mode, at most 7 vertices.
CountLawResult count_law_check(const GroundSystem& g, int k, const Limits& limits = {});

} // namespace tangledec

#endif // TANGLEDEC_ORACLE_HPP
