#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "tangledec/tangles.hpp"

using namespace tangledec;
using namespace fixtures;

namespace {

Orientation majority_orientation(const GroundSystem& g, int k, VertexSet x) {
    InduceResult res = induce_from_set(g, k, x, Limits{});
    REQUIRE(res.ok());
    return *res.orientation;
}

// All 2^pairs total orientations, self-inverse pairs pinned.
std::vector<Orientation> all_orientations(const GroundSystem& g, int k) {
    auto seps = enumerate_separations(g, k);
    std::vector<Separation> reps;
    for (const Separation& s : seps) {
        if (s.a < s.b || s.a == s.b) {
            reps.push_back(s);
        }
    }
    std::vector<std::size_t> free_idx;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i].a != reps[i].b) {
            free_idx.push_back(i);
        }
    }
    REQUIRE(free_idx.size() <= 12);
    std::vector<Orientation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_idx.size()); ++mask) {
        Orientation o;
        o.k = k;
        o.chosen = reps;
        for (std::size_t b = 0; b < free_idx.size(); ++b) {
            if (mask >> b & 1) {
                o.chosen[free_idx[b]] = inverse(o.chosen[free_idx[b]]);
            }
        }
        std::sort(o.chosen.begin(), o.chosen.end());
        out.push_back(std::move(o));
    }
    return out;
}

bool triple_covers(const GroundSystem& g, const Separation& s1, const Separation& s2,
                   const Separation& s3) {
    if ((s1.a | s2.a | s3.a) != g.full_set()) {
        return false;
    }
    for (VertexSet e : g.edge_masks()) {
        if (!subset(e, s1.a) && !subset(e, s2.a) && !subset(e, s3.a)) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("the K4 orientation toward V is a 2-tangle") {
    GroundSystem g = complete_graph(4);
    Orientation tangle = majority_orientation(g, 2, g.full_set());
    TangleCertificate cert = is_tangle(g, tangle);
    CHECK(cert.ok);
    CHECK(cert.kind == DefectKind::None);
}

TEST_CASE("orientations containing (V,X) fail the cover axiom with a witness") {
    GroundSystem g = complete_graph(4);
    Orientation o = majority_orientation(g, 2, g.full_set());
    // Flip ({a},V) to (V,{a}).
    Separation small{g.set_of({"a"}), g.full_set()};
    for (Separation& s : o.chosen) {
        if (s == small) {
            s = inverse(s);
        }
    }
    std::sort(o.chosen.begin(), o.chosen.end());

    TangleCertificate cert = is_tangle(g, o);
    REQUIRE(!cert.ok);
    CHECK(cert.kind == DefectKind::Cover);
    REQUIRE(cert.witness.size() == 3);
    // Re-checking the witness reproduces the violation.
    CHECK(triple_covers(g, cert.witness[0], cert.witness[1], cert.witness[2]));
    for (const Separation& s : cert.witness) {
        CHECK(std::binary_search(o.chosen.begin(), o.chosen.end(), s));
    }
}

TEST_CASE("single vertex, k=1: the empty-small-side orientation is a tangle") {
    GroundSystem g(Mode::Graph, {"a"}, {});
    Orientation o{1, {Separation{0, g.full_set()}}};
    CHECK(is_tangle(g, o).ok);
}

TEST_CASE("malformed orientations are errors, not axiom failures") {
    GroundSystem g = complete_graph(4);
    Orientation tangle = majority_orientation(g, 2, g.full_set());

    Orientation missing = tangle;
    missing.chosen.pop_back();
    CHECK_THROWS_AS(is_tangle(g, missing), MalformedInput);

    Orientation duplicated = tangle;
    duplicated.chosen.push_back(duplicated.chosen.front());
    CHECK_THROWS_AS(is_tangle(g, duplicated), MalformedInput);

    Orientation both = tangle;
    both.chosen.push_back(inverse(both.chosen.front()));
    std::sort(both.chosen.begin(), both.chosen.end());
    CHECK_THROWS_AS(is_tangle(g, both), MalformedInput);
    CHECK_THROWS_AS(is_profile(g, both), MalformedInput);

    Orientation foreign = tangle;
    foreign.chosen.push_back(Separation{g.set_of({"a", "b"}), g.full_set()}); // order 2
    std::sort(foreign.chosen.begin(), foreign.chosen.end());
    CHECK_THROWS_AS(is_tangle(g, foreign), MalformedInput);

    CHECK_THROWS_AS(is_tangle(setsep_universe(2), Orientation{1, {}}), MalformedInput);
}

TEST_CASE("parallel and serial tangle checks agree, witnesses included") {
    GroundSystem g = cycle_graph(5);
    for (const Orientation& o : all_orientations(g, 2)) {
        TangleCertificate par = is_tangle(g, o);
        TangleCertificate ser = is_tangle_serial(g, o);
        CHECK(par.ok == ser.ok);
        CHECK(par.kind == ser.kind);
        CHECK(par.witness == ser.witness);
    }
}

TEST_CASE("enumerate_tangles matches the brute-force filter") {
    std::vector<std::pair<GroundSystem, int>> instances;
    instances.emplace_back(complete_graph(4), 2);
    instances.emplace_back(path_graph(3), 2);
    instances.emplace_back(cycle_graph(5), 2);
    instances.emplace_back(edgeless_graph(2), 1);
    instances.emplace_back(random_graph(5, 3), 2);

    for (const auto& [g, k] : instances) {
        CAPTURE(g.vertex_count());
        CAPTURE(k);
        std::vector<Orientation> expected;
        for (const Orientation& o : all_orientations(g, k)) {
            if (is_tangle(g, o).ok) {
                expected.push_back(o);
            }
        }
        std::vector<Orientation> got = enumerate_tangles(g, k);
        REQUIRE(got.size() == expected.size());
        auto key = [](const Orientation& o) { return o.chosen; };
        std::sort(expected.begin(), expected.end(),
                  [&](const auto& l, const auto& r) { return key(l) < key(r); });
        std::sort(got.begin(), got.end(),
                  [&](const auto& l, const auto& r) { return key(l) < key(r); });
        CHECK(got == expected);
    }
}

TEST_CASE("tangle counts on the documented instances") {
    GroundSystem one(Mode::Graph, {"a"}, {});
    auto single = enumerate_tangles(one, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].chosen == std::vector<Separation>{{0, one.full_set()}});
    // k=2 forces (V,V), whose small side covers everything.
    CHECK(enumerate_tangles(one, 2).empty());

    CHECK(enumerate_tangles(complete_graph(4), 2).size() == 1);
    CHECK(enumerate_tangles(edgeless_graph(2), 1).size() == 2);
    // One 2-tangle per edge of a path: no small side of an order-<2
    // separation contains both endpoints of the focused edge.
    CHECK(enumerate_tangles(path_graph(4), 2).size() == 3);
    CHECK(enumerate_tangles(path_graph(3), 2).size() == 2);
    // The empty orientation is the unique 0-tangle.
    auto zero = enumerate_tangles(complete_graph(4), 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].chosen.empty());
}

TEST_CASE("enumerate_tangles limit returns a prefix") {
    GroundSystem g = edgeless_graph(2);
    auto all = enumerate_tangles(g, 1);
    auto first = enumerate_tangles(g, 1, 1);
    REQUIRE(all.size() == 2);
    REQUIRE(first.size() == 1);
    CHECK(first[0] == all[0]);
    CHECK(enumerate_tangles(g, 1, 0).empty());
}

TEST_CASE("tangles are consistent, point somewhere, and are profiles") {
    std::vector<std::pair<GroundSystem, int>> instances;
    instances.emplace_back(complete_graph(4), 2);
    instances.emplace_back(complete_graph(5), 3);
    instances.emplace_back(cycle_graph(5), 2);
    instances.emplace_back(path_graph(4), 1);
    instances.emplace_back(edgeless_graph(2), 1);
    instances.emplace_back(random_graph(6, 7), 2);

    for (const auto& [g, k] : instances) {
        auto seps = enumerate_separations(g, k);
        for (const Orientation& tangle : enumerate_tangles(g, k)) {
            // Downward closure.
            for (const Separation& s : tangle.chosen) {
                for (const Separation& t : seps) {
                    if (leq(t, s)) {
                        CHECK(std::binary_search(tangle.chosen.begin(), tangle.chosen.end(), t));
                    }
                }
            }
            // The big side is never contained in the small side.
            for (const Separation& s : tangle.chosen) {
                CHECK((s.b & ~s.a) != 0);
            }
            // Every element lies below some maximal element.
            auto maxes = maximal_elements(tangle);
            for (const Separation& s : tangle.chosen) {
                CHECK(std::any_of(maxes.begin(), maxes.end(),
                                  [&s](const Separation& m) { return leq(s, m); }));
            }
            CHECK(is_profile(g, tangle).ok);
        }
    }
}

TEST_CASE("induce_from_set on K4 reproduces the tangle; empty X ties everywhere") {
    GroundSystem g = complete_graph(4);
    Orientation tangle = enumerate_tangles(g, 2).at(0);
    InduceResult res = induce_from_set(g, 2, g.full_set());
    REQUIRE(res.ok());
    CHECK(*res.orientation == tangle);

    InduceResult empty = induce_from_set(g, 2, 0);
    CHECK(!empty.ok());
    CHECK(empty.ties.size() == 5); // one per unordered pair

    CHECK_THROWS_AS(induce_from_set(edgeless_graph(1), 1, VertexSet{2}), MalformedInput);
}

TEST_CASE("the 3x3 grid with X = V induces a 2-tangle by majority vote") {
    GroundSystem g = grid_graph(3, 3);
    InduceResult res = induce_from_set(g, 2, g.full_set());
    REQUIRE(res.ok());
    CHECK(is_tangle(g, *res.orientation).ok);
}

TEST_CASE("induce_from_weights matches induce_from_set on indicator weights") {
    GroundSystem g = random_graph(6, 19);
    for (unsigned x = 0; x < 64; x += 7) {
        for (int k = 1; k <= 2; ++k) {
            WeightFunction indicator;
            indicator.values.assign(6, Int(0));
            for (int v = 0; v < 6; ++v) {
                if (x >> v & 1) {
                    indicator.values[static_cast<std::size_t>(v)] = 1;
                }
            }
            InduceResult by_set = induce_from_set(g, k, x);
            InduceResult by_weights = induce_from_weights(g, k, indicator);
            CHECK(by_set.ok() == by_weights.ok());
            CHECK(by_set.ties == by_weights.ties);
            if (by_set.ok()) {
                CHECK(*by_set.orientation == *by_weights.orientation);
            }
        }
    }
}

TEST_CASE("induce_from_weights ties on the all-zero weighting") {
    GroundSystem g = complete_graph(4);
    WeightFunction zero;
    zero.values.assign(4, Int(0));
    InduceResult res = induce_from_weights(g, 2, zero);
    CHECK(!res.ok());
    CHECK(res.ties.size() == 5);

    WeightFunction negative;
    negative.values.assign(4, Int(-1));
    CHECK_THROWS_AS(induce_from_weights(g, 2, negative), MalformedInput);
}

TEST_CASE("maximal elements of the K4 tangle are the four singleton separations") {
    GroundSystem g = complete_graph(4);
    Orientation tangle = enumerate_tangles(g, 2).at(0);
    std::vector<Separation> maxes = maximal_elements(tangle);
    REQUIRE(maxes.size() == 4);
    for (const Separation& m : maxes) {
        CHECK(set_size(m.a) == 1);
        CHECK(m.b == g.full_set());
    }
    // (0,V) is dominated and must be excluded.
    CHECK(!std::binary_search(maxes.begin(), maxes.end(), Separation{0, g.full_set()}));

    GroundSystem one(Mode::Graph, {"a"}, {});
    Orientation tiny{1, {Separation{0, one.full_set()}}};
    CHECK(maximal_elements(tiny) == tiny.chosen);
}

TEST_CASE("is_profile accepts principal-ultrafilter orientations at k=1") {
    // setsep(2): {(0,V), ({a},{b})} — everything points at b.
    GroundSystem two = setsep_universe(2);
    InduceResult focused = induce_from_set(two, 1, two.set_of({"b"}));
    REQUIRE(focused.ok());
    CHECK(is_profile(two, *focused.orientation).ok);

    GroundSystem three = setsep_universe(3);
    InduceResult at_c = induce_from_set(three, 1, three.set_of({"c"}));
    REQUIRE(at_c.ok());
    CHECK(is_profile(three, *at_c.orientation).ok);
}

TEST_CASE("is_profile rejects the inverse corner of two chosen elements") {
    // Regular total orientation of the full setsep universe on {a,b}, k=2:
    // {(0,V), ({a},{b}), ({a},V), ({b},V)}. The corner of ({a},{b}) and
    // ({b},V) is (V,{b}); its inverse ({b},V) is chosen.
    GroundSystem g = setsep_universe(2);
    VertexSet a = g.set_of({"a"});
    VertexSet b = g.set_of({"b"});
    VertexSet full = g.full_set();
    Orientation o{2, {{0, full}, {a, b}, {a, full}, {b, full}}};
    std::sort(o.chosen.begin(), o.chosen.end());

    TangleCertificate cert = is_profile(g, o);
    REQUIRE(!cert.ok);
    CHECK(cert.kind == DefectKind::ProfileProperty);
    REQUIRE(cert.witness.size() == 3);
    const Separation& r = cert.witness[0];
    const Separation& s = cert.witness[1];
    const Separation& corner_inv = cert.witness[2];
    CHECK(corner_inv == Separation{r.b & s.b, r.a | s.a});
    CHECK(std::binary_search(o.chosen.begin(), o.chosen.end(), corner_inv));
}

TEST_CASE("is_profile reports inconsistency and irregularity") {
    // ({a},{b}) chosen forces (0,V); choosing (V,0) instead is inconsistent.
    GroundSystem two = setsep_universe(2);
    VertexSet a = two.set_of({"a"});
    VertexSet b = two.set_of({"b"});
    Orientation bad{1, {{two.full_set(), 0}, {a, b}}};
    std::sort(bad.chosen.begin(), bad.chosen.end());
    TangleCertificate cert = is_profile(two, bad);
    REQUIRE(!cert.ok);
    CHECK(cert.kind == DefectKind::Consistency);

    // A lone co-small choice on one vertex is caught by regularity.
    GroundSystem one = setsep_universe(1);
    Orientation cosmall{1, {{one.full_set(), 0}}};
    TangleCertificate reg = is_profile(one, cosmall);
    REQUIRE(!reg.ok);
    CHECK(reg.kind == DefectKind::Regularity);
    REQUIRE(reg.witness.size() == 1);
    CHECK(reg.witness[0] == Separation{one.full_set(), 0});
}
