#include "tangledec/oracle.hpp"

#include <algorithm>
#include <exception>

#include "tangledec/parallel.hpp"

namespace tangledec {

namespace {

// Sorted copy of the chosen separations for binary-search membership.
std::vector<Separation> sorted_chosen(const Orientation& o) {
    std::vector<Separation> chosen = o.chosen;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

bool contains(const std::vector<Separation>& sorted, const Separation& s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
}

} // namespace

VerifyResult verify_decider_serial(const GroundSystem& g, const Orientation& o,
                                   const WeightFunction& w, const Limits& limits) {
    validate_orientation(g, o, limits);
    validate_weights(g, w);
    std::vector<Separation> seps = enumerate_separations(g, o.k, limits);
    std::vector<Separation> chosen = sorted_chosen(o);

    VerifyResult res;
    res.checked = seps.size();
    for (const Separation& s : seps) {
        Int wa = w.eval(s.a);
        Int wb = w.eval(s.b);
        if (contains(chosen, s) != (wa < wb)) {
            res.ok = false;
            res.witness = {s, wa, wb, contains(chosen, s)};
            return res;
        }
    }
    return res;
}

VerifyResult verify_decider(const GroundSystem& g, const Orientation& o,
                            const WeightFunction& w, const Limits& limits) {
    validate_orientation(g, o, limits);
    validate_weights(g, w);
    std::vector<Separation> seps = enumerate_separations(g, o.k, limits);
    std::vector<Separation> chosen = sorted_chosen(o);

    VerifyResult res;
    res.checked = seps.size();
    long long m = static_cast<long long>(seps.size());
    long long first_bad = m;
    std::exception_ptr fail;
#pragma omp parallel
    {
        long long local = m;
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < m; ++i) {
            if (i > local) {
                continue;
            }
            try {
                const Separation& s = seps[static_cast<std::size_t>(i)];
                if (contains(chosen, s) != (w.eval(s.a) < w.eval(s.b))) {
                    local = std::min(local, i);
                }
            } catch (...) {
#pragma omp critical
                if (!fail) {
                    fail = std::current_exception();
                }
            }
        }
#pragma omp critical
        first_bad = std::min(first_bad, local);
    }
    if (fail) {
        std::rethrow_exception(fail);
    }
    if (first_bad < m) {
        const Separation& s = seps[static_cast<std::size_t>(first_bad)];
        res.ok = false;
        res.witness = {s, w.eval(s.a), w.eval(s.b), contains(chosen, s)};
    }
    return res;
}

namespace {

struct PairPredicate {
    VertexSet a, b;
    bool rep_chosen;
};

// One entry per unordered pair; decidability of the orientation by X reduces
// to per-pair popcount comparisons against these.
std::vector<PairPredicate> pair_predicates(const GroundSystem& g, const Orientation& o,
                                           const Limits& limits) {
    validate_orientation(g, o, limits);
    std::vector<Separation> seps = enumerate_separations(g, o.k, limits);
    std::vector<Separation> chosen = sorted_chosen(o);
    std::vector<PairPredicate> pairs;
    for (const Separation& s : seps) {
        if (s.a > s.b) {
            continue;
        }
        pairs.push_back({s.a, s.b, contains(chosen, s)});
    }
    return pairs;
}

bool decides(const std::vector<PairPredicate>& pairs, VertexSet x) {
    for (const PairPredicate& p : pairs) {
        int ca = set_size(p.a & x);
        int cb = set_size(p.b & x);
        if (ca == cb || (ca < cb) != p.rep_chosen) {
            return false;
        }
    }
    return true;
}

void check_search_cap(const GroundSystem& g, const Limits& limits) {
    if (g.vertex_count() > limits.max_vertices) {
        throw CapExceeded("search over 2^" + std::to_string(g.vertex_count()) +
                          " vertex sets is above the cap of 2^" +
                          std::to_string(limits.max_vertices) +
                          " (raise it with --max-vertices)");
    }
}

} // namespace

Search01Result search_01_decider_serial(const GroundSystem& g, const Orientation& o,
                                        const Limits& limits) {
    check_search_cap(g, limits);
    std::vector<PairPredicate> pairs = pair_predicates(g, o, limits);
    VertexSet full = g.full_set();
    for (VertexSet x = 0;; ++x) {
        if (decides(pairs, x)) {
            return {true, x};
        }
        if (x == full) {
            return {false, 0};
        }
    }
}

Search01Result search_01_decider(const GroundSystem& g, const Orientation& o,
                                 const Limits& limits) {
    check_search_cap(g, limits);
    std::vector<PairPredicate> pairs = pair_predicates(g, o, limits);
    long long count = static_cast<long long>(g.full_set()) + 1;
    long long first = count;
#pragma omp parallel
    {
        long long local = count;
#pragma omp for schedule(static) nowait
        for (long long x = 0; x < count; ++x) {
            if (x > local) {
                continue;
            }
            if (decides(pairs, static_cast<VertexSet>(x))) {
                local = std::min(local, x);
            }
        }
#pragma omp critical
        first = std::min(first, local);
    }
    if (first < count) {
        return {true, static_cast<VertexSet>(first)};
    }
    return {false, 0};
}

std::vector<Separation> brute_force_separations(const GroundSystem& g, int k) {
    int n = g.vertex_count();
    if (n > 7) {
        throw CapExceeded("the 3^|V| brute force supports at most 7 vertices");
    }
    unsigned long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= 3;
    }
    std::vector<Separation> out;
    for (unsigned long long code = 0; code < total; ++code) {
        VertexSet a = 0;
        VertexSet b = 0;
        unsigned long long rest = code;
        for (int v = 0; v < n; ++v) {
            switch (rest % 3) {
            case 0:
                a |= VertexSet{1} << v;
                break;
            case 1:
                b |= VertexSet{1} << v;
                break;
            default:
                a |= VertexSet{1} << v;
                b |= VertexSet{1} << v;
            }
            rest /= 3;
        }
        Separation s{a, b};
        if (order(s) < k && is_separation(g, a, b)) {
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long long separation_count_formula(const GroundSystem& g, int k) {
    unsigned long long total = 0;
    int max_size = std::min(k - 1, g.vertex_count());
    for (int size = 0; size <= max_size; ++size) {
        for (VertexSet cand : subsets_of_size(g.vertex_count(), size)) {
            total += 1ull << components_after_removal(g, cand).size();
        }
    }
    return total;
}

CountLawResult count_law_check(const GroundSystem& g, int k, const Limits& limits) {
    if (g.mode() == Mode::SetSep) {
        throw MalformedInput("count_law_check requires graph or hypergraph mode");
    }
    std::vector<Separation> enumerated = enumerate_separations(g, k, limits);
    std::vector<Separation> brute = brute_force_separations(g, k);
    CountLawResult res;
    res.enumerated = enumerated.size();
    res.brute_force = brute.size();
    res.formula = separation_count_formula(g, k);
    res.ok = enumerated == brute && res.formula == enumerated.size();
    return res;
}

} // namespace tangledec
