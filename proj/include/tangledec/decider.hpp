#ifndef TANGLEDEC_DECIDER_HPP
#define TANGLEDEC_DECIDER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tangledec/ratlp.hpp"
#include "tangledec/sepsys.hpp"
#include "tangledec/tangles.hpp"
#include "tangledec/weights.hpp"

namespace tangledec {

// Thrown by synthesize_weights when the input orientation fails its axiom
// check; carries the certificate so callers can report the witness.
class AxiomViolation : public Error {
public:
    AxiomViolation(const std::string& what, TangleCertificate cert)
        : Error(what), cert_(std::move(cert)) {}

    const TangleCertificate& certificate() const { return cert_; }

private:
    TangleCertificate cert_;
};

/// The cross matrix of the maximal elements (A_1,B_1),..,(A_n,B_n):
/// m[i][j] = |B_i n (A_j n B_j)| - |A_i n (A_j n B_j)|. Integer-valued,
/// zero diagonal; m[i][j] + m[j][i] > 0 off the diagonal for genuine
/// tangle maximals. Indexing follows the canonical maximal_elements order.
struct CrossMatrix {
    std::size_t n = 0;
    RatMatrix m;
};

CrossMatrix cross_matrix(const std::vector<Separation>& maximals);

enum class CrossDefect { None, CrossCounting, Corner };

/// For every ordered pair i < j of distinct maximals checks the strict
/// cross-counting inequality m[i][j] + m[j][i] > 0 and the corner
/// inequality |(A_i u A_j) n (B_i n B_j)| >= k. Both hold when the inputs
/// really are the maximal elements of a tangle or regular profile.
struct CrossCheckResult {
    bool ok = true;
    CrossDefect defect = CrossDefect::None;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

CrossCheckResult check_cross_counting(const std::vector<Separation>& maximals, int k);

struct Provenance {
    std::size_t n = 0;         // number of maximal elements
    RatVec x;                  // Tucker vector, indexed like the maximals
    bool bump_fired = false;   // whether the degenerate case was repaired
    std::optional<int> bump_vertex; // vertex index that received the bump
};

struct SynthesisResult {
    WeightFunction w;
    Provenance provenance;
};

// Builds an integer weight function deciding the orientation:
//   1. take the maximal elements (n = 0 yields the zero function);
//   2. form the cross matrix M and assert the cross-counting inequalities;
//   3. split M = K + K' with K' = (M + M^T)/2 symmetric and K skew;
//   4. solve for a Tucker vector x of K;
//   5. weight each vertex by the sum of x_i over the separators containing it;
//   6. if some margin (Mx)_i is zero (then exactly one is, and only when x
//      has a single positive entry), add half the smallest positive margin
//      (1 if n = 1) to the canonically smallest vertex of B_i \ A_i;
//   7. clear denominators jointly and assert w(A_i) < w(B_i) exactly for
//      every maximal element.
// The orientation must pass is_tangle (graph/hypergraph) or is_profile
// (setsep); otherwise AxiomViolation is thrown. Every internal assertion is
// a hard error: the construction cannot fail on a genuine tangle/profile.
SynthesisResult synthesize_weights(const GroundSystem& g, const Orientation& o,
                                   const Limits& limits = {});

/// Monotone extension of margins from maximal elements to everything below
/// them: w(C) <= w(A) and w(B) <= w(D) whenever (C,D) <= (A,B) with (A,B)
/// maximal. Holds for all non-negative weight functions.
struct MonotoneCheckResult {
    bool ok = true;
    std::optional<std::pair<Separation, Separation>> witness; // ((C,D),(A,B))
};

MonotoneCheckResult monotone_extension_check(const Orientation& o, const WeightFunction& w);

} // namespace tangledec

#endif // TANGLEDEC_DECIDER_HPP
