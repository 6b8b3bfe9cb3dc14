#include "tangledec/tangles.hpp"

#include <algorithm>
#include <array>

#include "tangledec/parallel.hpp"

namespace tangledec {

std::string defect_to_string(DefectKind kind) {
    switch (kind) {
    case DefectKind::None:
        return "none";
    case DefectKind::Cover:
        return "cover";
    case DefectKind::Consistency:
        return "consistency";
    case DefectKind::ProfileProperty:
        return "profile-property";
    case DefectKind::Regularity:
        return "regularity";
    }
    throw InternalError("unhandled defect kind");
}

namespace {

std::string describe(const GroundSystem& g, const Separation& s) {
    auto join = [&g](VertexSet set) {
        std::string out = "{";
        bool first = true;
        for (const auto& name : g.names_of(set)) {
            if (!first) {
                out += ",";
            }
            out += name;
            first = false;
        }
        return out + "}";
    };
    return "(" + join(s.a) + "," + join(s.b) + ")";
}

// Shared indexing of the order-<k separations: inverse and pair lookup plus
// the per-separation cover data (small-side mask, bitset of edges inside
// the small side) used by the tangle axiom scans.
struct PairSystem {
    const GroundSystem* g = nullptr;
    int k = 0;
    std::vector<Separation> seps; // canonically sorted
    std::vector<int> inv;         // seps index of the inverse
    std::vector<int> pair_of;     // seps index -> pair index
    std::vector<int> pair_rep;    // pair index -> representative seps index
    VertexSet full = 0;
    std::size_t edge_words = 0;
    std::vector<std::uint64_t> edges_inside; // per sep, edge_words words
    std::vector<std::uint64_t> all_edges;

    int find(const Separation& s) const {
        auto it = std::lower_bound(seps.begin(), seps.end(), s);
        if (it == seps.end() || *it != s) {
            return -1;
        }
        return static_cast<int>(it - seps.begin());
    }

    const std::uint64_t* edge_row(int i) const {
        return edges_inside.data() + static_cast<std::size_t>(i) * edge_words;
    }

    bool triple_covers(int x, int y, int z) const {
        if ((seps[static_cast<std::size_t>(x)].a | seps[static_cast<std::size_t>(y)].a |
             seps[static_cast<std::size_t>(z)].a) != full) {
            return false;
        }
        const std::uint64_t* ex = edge_row(x);
        const std::uint64_t* ey = edge_row(y);
        const std::uint64_t* ez = edge_row(z);
        for (std::size_t w = 0; w < edge_words; ++w) {
            if ((ex[w] | ey[w] | ez[w]) != all_edges[w]) {
                return false;
            }
        }
        return true;
    }
};

PairSystem build_pair_system(const GroundSystem& g, int k, const Limits& limits) {
    PairSystem ps;
    ps.g = &g;
    ps.k = k;
    ps.full = g.full_set();
    ps.seps = enumerate_separations(g, k, limits);
    std::size_t m = ps.seps.size();

    ps.inv.resize(m);
    ps.pair_of.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        int j = ps.find(inverse(ps.seps[i]));
        if (j < 0) {
            throw InternalError("enumeration is not closed under inversion");
        }
        ps.inv[i] = j;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (ps.pair_of[i] >= 0) {
            continue;
        }
        int id = static_cast<int>(ps.pair_rep.size());
        ps.pair_rep.push_back(static_cast<int>(i));
        ps.pair_of[i] = id;
        ps.pair_of[static_cast<std::size_t>(ps.inv[i])] = id;
    }

    std::size_t edge_count = g.edge_masks().size();
    ps.edge_words = (edge_count + 63) / 64;
    ps.all_edges.assign(ps.edge_words, 0);
    for (std::size_t e = 0; e < edge_count; ++e) {
        ps.all_edges[e / 64] |= std::uint64_t{1} << (e % 64);
    }
    ps.edges_inside.assign(m * ps.edge_words, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t e = 0; e < edge_count; ++e) {
            if (subset(g.edge_masks()[e], ps.seps[i].a)) {
                ps.edges_inside[i * ps.edge_words + e / 64] |= std::uint64_t{1} << (e % 64);
            }
        }
    }
    return ps;
}

// Maps o.chosen onto separation indices, enforcing the orientation
// invariant: exactly one direction per unordered pair of order < k.
std::vector<int> validate_and_index(const PairSystem& ps, const Orientation& o) {
    std::vector<char> flag(ps.seps.size(), 0);
    for (const Separation& s : o.chosen) {
        int idx = ps.find(s);
        if (idx < 0) {
            throw MalformedInput("orientation element " + describe(*ps.g, s) +
                                 " is not a separation of order < " + std::to_string(ps.k));
        }
        if (flag[static_cast<std::size_t>(idx)]) {
            throw MalformedInput("orientation element " + describe(*ps.g, s) +
                                 " appears twice");
        }
        flag[static_cast<std::size_t>(idx)] = 1;
    }
    for (std::size_t p = 0; p < ps.pair_rep.size(); ++p) {
        int rep = ps.pair_rep[p];
        int other = ps.inv[static_cast<std::size_t>(rep)];
        int count = flag[static_cast<std::size_t>(rep)];
        if (other != rep) {
            count += flag[static_cast<std::size_t>(other)];
        }
        if (count == 0) {
            throw MalformedInput("orientation misses the pair of " +
                                 describe(*ps.g, ps.seps[static_cast<std::size_t>(rep)]));
        }
        if (count > 1) {
            throw MalformedInput("orientation contains both directions of " +
                                 describe(*ps.g, ps.seps[static_cast<std::size_t>(rep)]));
        }
    }
    std::vector<int> chosen;
    chosen.reserve(ps.pair_rep.size());
    for (std::size_t i = 0; i < flag.size(); ++i) {
        if (flag[i]) {
            chosen.push_back(static_cast<int>(i));
        }
    }
    return chosen;
}

void require_edge_mode(const GroundSystem& g, const char* op) {
    if (g.mode() == Mode::SetSep) {
        throw MalformedInput(std::string(op) +
                             " requires graph or hypergraph mode (setsep orientations "
                             "are checked with is_profile)");
    }
}

TangleCertificate cover_witness(const PairSystem& ps, const std::vector<int>& chosen,
                                std::array<std::size_t, 3> t) {
    TangleCertificate cert;
    cert.ok = false;
    cert.kind = DefectKind::Cover;
    for (std::size_t idx : t) {
        cert.witness.push_back(ps.seps[static_cast<std::size_t>(chosen[idx])]);
    }
    return cert;
}

} // namespace

void validate_orientation(const GroundSystem& g, const Orientation& o,
                          const Limits& limits) {
    PairSystem ps = build_pair_system(g, o.k, limits);
    validate_and_index(ps, o);
}

TangleCertificate is_tangle_serial(const GroundSystem& g, const Orientation& o,
                                   const Limits& limits) {
    require_edge_mode(g, "is_tangle");
    PairSystem ps = build_pair_system(g, o.k, limits);
    std::vector<int> chosen = validate_and_index(ps, o);
    std::size_t m = chosen.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            for (std::size_t l = j; l < m; ++l) {
                if (ps.triple_covers(chosen[i], chosen[j], chosen[l])) {
                    return cover_witness(ps, chosen, {i, j, l});
                }
            }
        }
    }
    return {};
}

TangleCertificate is_tangle(const GroundSystem& g, const Orientation& o,
                            const Limits& limits) {
    require_edge_mode(g, "is_tangle");
    PairSystem ps = build_pair_system(g, o.k, limits);
    std::vector<int> chosen = validate_and_index(ps, o);
    long long m = static_cast<long long>(chosen.size());
    const std::array<std::size_t, 3> none{static_cast<std::size_t>(m),
                                          static_cast<std::size_t>(m),
                                          static_cast<std::size_t>(m)};
    std::array<std::size_t, 3> best = none;
#pragma omp parallel
    {
        std::array<std::size_t, 3> local = none;
#pragma omp for schedule(dynamic) nowait
        for (long long i = 0; i < m; ++i) {
            std::size_t si = static_cast<std::size_t>(i);
            if (si > local[0]) {
                continue;
            }
            bool found = false;
            for (std::size_t j = si; j < static_cast<std::size_t>(m) && !found; ++j) {
                for (std::size_t l = j; l < static_cast<std::size_t>(m) && !found; ++l) {
                    if (ps.triple_covers(chosen[si], chosen[j], chosen[l])) {
                        // First (j,l) for this i is minimal for this i.
                        std::array<std::size_t, 3> cand{si, j, l};
                        if (cand < local) {
                            local = cand;
                        }
                        found = true;
                    }
                }
            }
        }
#pragma omp critical
        if (local < best) {
            best = local;
        }
    }
    if (best == none) {
        return {};
    }
    return cover_witness(ps, chosen, best);
}

TangleCertificate is_profile(const GroundSystem& g, const Orientation& o,
                             const Limits& limits) {
    PairSystem ps = build_pair_system(g, o.k, limits);
    std::vector<int> chosen = validate_and_index(ps, o);
    std::vector<char> is_chosen(ps.seps.size(), 0);
    for (int c : chosen) {
        is_chosen[static_cast<std::size_t>(c)] = 1;
    }

    // Consistency: no (C,D) <= (A,B) in chosen with (D,C) chosen too, over
    // distinct unordered pairs. The co-small case {(X,V),(V,X)} is left to
    // the regularity axiom.
    for (int t : chosen) {
        for (int s : chosen) {
            if (s != t &&
                leq(inverse(ps.seps[static_cast<std::size_t>(s)]),
                    ps.seps[static_cast<std::size_t>(t)])) {
                TangleCertificate cert;
                cert.ok = false;
                cert.kind = DefectKind::Consistency;
                cert.witness = {ps.seps[static_cast<std::size_t>(t)],
                                ps.seps[static_cast<std::size_t>(s)]};
                return cert;
            }
        }
    }

    // Profile property: for chosen (A,B),(C,D), the inverse corner
    // (B n D, A u C) must not be chosen when its order is below k.
    for (int r : chosen) {
        for (int s : chosen) {
            const Separation& rs = ps.seps[static_cast<std::size_t>(r)];
            const Separation& ss = ps.seps[static_cast<std::size_t>(s)];
            Separation corner_inv{rs.b & ss.b, rs.a | ss.a};
            if (order(corner_inv) >= ps.k) {
                continue;
            }
            int idx = ps.find(corner_inv);
            if (idx >= 0 && is_chosen[static_cast<std::size_t>(idx)]) {
                TangleCertificate cert;
                cert.ok = false;
                cert.kind = DefectKind::ProfileProperty;
                cert.witness = {rs, ss, corner_inv};
                return cert;
            }
        }
    }

    // Regularity: every small separation (X,V) of order < k is chosen.
    for (std::size_t i = 0; i < ps.seps.size(); ++i) {
        if (ps.seps[i].b == ps.full && !is_chosen[i]) {
            TangleCertificate cert;
            cert.ok = false;
            cert.kind = DefectKind::Regularity;
            cert.witness = {ps.seps[static_cast<std::size_t>(ps.inv[i])]};
            return cert;
        }
    }
    return {};
}

namespace {

class TangleSearch {
public:
    TangleSearch(const PairSystem& ps, std::optional<long long> limit)
        : ps_(ps), limit_(limit) {
        std::size_t m = ps.seps.size();
        below_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j && leq(ps.seps[j], ps.seps[i])) {
                    below_[i].push_back(static_cast<int>(j));
                }
            }
        }
        choice_.assign(ps.pair_rep.size(), -1);
    }

    std::vector<Orientation> run() {
        dfs(0);
        return std::move(out_);
    }

private:
    bool push(int sidx) {
        int p = ps_.pair_of[static_cast<std::size_t>(sidx)];
        if (choice_[static_cast<std::size_t>(p)] != -1) {
            return choice_[static_cast<std::size_t>(p)] == sidx;
        }
        choice_[static_cast<std::size_t>(p)] = sidx;
        trail_.push_back(p);
        chosen_.push_back(sidx);
        // Every triple completed by the new element, repetition included.
        for (std::size_t x = 0; x < chosen_.size(); ++x) {
            for (std::size_t y = x; y < chosen_.size(); ++y) {
                if (ps_.triple_covers(chosen_[x], chosen_[y], sidx)) {
                    return false;
                }
            }
        }
        return true;
    }

    // Chooses sidx and propagates the downward closure: everything below a
    // chosen separation must be chosen as well.
    bool assign(int sidx) {
        if (!push(sidx)) {
            return false;
        }
        for (int j : below_[static_cast<std::size_t>(sidx)]) {
            if (!push(j)) {
                return false;
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            choice_[static_cast<std::size_t>(trail_.back())] = -1;
            trail_.pop_back();
            chosen_.pop_back();
        }
    }

    void dfs(std::size_t from_pair) {
        if (done_) {
            return;
        }
        std::size_t p = from_pair;
        while (p < choice_.size() && choice_[p] != -1) {
            ++p;
        }
        if (p == choice_.size()) {
            emit();
            return;
        }
        int rep = ps_.pair_rep[p];
        int other = ps_.inv[static_cast<std::size_t>(rep)];
        for (int side : {rep, other}) {
            std::size_t mark = trail_.size();
            if (assign(side)) {
                dfs(p + 1);
            }
            undo(mark);
            if (done_ || side == other) {
                return;
            }
        }
    }

    void emit() {
        Orientation o;
        o.k = ps_.k;
        for (int c : chosen_) {
            o.chosen.push_back(ps_.seps[static_cast<std::size_t>(c)]);
        }
        std::sort(o.chosen.begin(), o.chosen.end());
        out_.push_back(std::move(o));
        if (limit_ && static_cast<long long>(out_.size()) >= *limit_) {
            done_ = true;
        }
    }

    const PairSystem& ps_;
    std::optional<long long> limit_;
    std::vector<std::vector<int>> below_;
    std::vector<int> choice_;
    std::vector<int> chosen_;
    std::vector<int> trail_;
    std::vector<Orientation> out_;
    bool done_ = false;
};

} // namespace

std::vector<Orientation> enumerate_tangles(const GroundSystem& g, int k,
                                           std::optional<long long> limit,
                                           const Limits& limits) {
    require_edge_mode(g, "enumerate_tangles");
    if (limit && *limit <= 0) {
        return {};
    }
    PairSystem ps = build_pair_system(g, k, limits);
    return TangleSearch(ps, limit).run();
}

namespace {

template <typename Weigher>
InduceResult induce_impl(const GroundSystem& g, int k, Weigher weigh,
                         const Limits& limits) {
    std::vector<Separation> seps = enumerate_separations(g, k, limits);
    InduceResult res;
    std::vector<Separation> chosen;
    for (const Separation& s : seps) {
        if (s.a > s.b) {
            continue; // one representative per unordered pair
        }
        auto wa = weigh(s.a);
        auto wb = weigh(s.b);
        if (wa == wb) {
            res.ties.push_back(s);
        } else {
            chosen.push_back(wa < wb ? s : inverse(s));
        }
    }
    if (!res.ties.empty()) {
        return res;
    }
    std::sort(chosen.begin(), chosen.end());
    res.orientation = Orientation{k, std::move(chosen)};
    return res;
}

} // namespace

InduceResult induce_from_set(const GroundSystem& g, int k, VertexSet x,
                             const Limits& limits) {
    if (!subset(x, g.full_set())) {
        throw MalformedInput("induce_from_set: X is not a subset of the vertices");
    }
    return induce_impl(
        g, k, [x](VertexSet side) { return set_size(side & x); }, limits);
}

InduceResult induce_from_weights(const GroundSystem& g, int k, const WeightFunction& w,
                                 const Limits& limits) {
    validate_weights(g, w);
    return induce_impl(
        g, k, [&w](VertexSet side) { return w.eval(side); }, limits);
}

std::vector<Separation> maximal_elements(const Orientation& o) {
    std::vector<Separation> out;
    for (const Separation& s : o.chosen) {
        bool maximal = true;
        for (const Separation& t : o.chosen) {
            if (s != t && leq(s, t)) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tangledec
