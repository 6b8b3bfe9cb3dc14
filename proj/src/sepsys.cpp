#include "tangledec/sepsys.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "tangledec/parallel.hpp"

namespace tangledec {

std::string mode_to_string(Mode mode) {
    switch (mode) {
    case Mode::Graph:
        return "graph";
    case Mode::Hypergraph:
        return "hypergraph";
    case Mode::SetSep:
        return "setsep";
    }
    throw InternalError("unhandled mode");
}

Mode mode_from_string(const std::string& s) {
    if (s == "graph") {
        return Mode::Graph;
    }
    if (s == "hypergraph") {
        return Mode::Hypergraph;
    }
    if (s == "setsep") {
        return Mode::SetSep;
    }
    throw MalformedInput("unknown mode: \"" + s + "\" (expected graph, hypergraph or setsep)");
}

GroundSystem::GroundSystem(Mode mode, std::vector<std::string> vertices,
                           const std::vector<std::vector<std::string>>& edges)
    : mode_(mode), names_(std::move(vertices)) {
    std::sort(names_.begin(), names_.end());
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
        throw MalformedInput("duplicate vertex identifier");
    }
    if (names_.size() > kMaxVertexBits) {
        throw MalformedInput("at most " + std::to_string(kMaxVertexBits) +
                             " vertices are supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
            throw MalformedInput("empty vertex identifier");
        }
        index_[names_[i]] = static_cast<int>(i);
        full_ |= VertexSet{1} << i;
    }
    if (mode_ == Mode::SetSep && !edges.empty()) {
        throw MalformedInput("setsep mode admits no edges");
    }
    for (const auto& edge : edges) {
        VertexSet e = set_of(edge);
        int size = set_size(e);
        if (mode_ == Mode::Graph && size != 2) {
            throw MalformedInput("graph edges must have exactly 2 distinct vertices");
        }
        if (size < 2) {
            throw MalformedInput("edges must have at least 2 distinct vertices");
        }
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int GroundSystem::vertex_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        throw MalformedInput("unknown vertex identifier: \"" + name + "\"");
    }
    return it->second;
}

VertexSet GroundSystem::set_of(const std::vector<std::string>& names) const {
    VertexSet s = 0;
    for (const auto& name : names) {
        s |= VertexSet{1} << vertex_index(name);
    }
    return s;
}

std::vector<std::string> GroundSystem::names_of(VertexSet s) const {
    std::vector<std::string> out;
    for (int i = 0; i < vertex_count(); ++i) {
        if (s >> i & 1) {
            out.push_back(names_[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

bool is_separation(const GroundSystem& g, VertexSet a, VertexSet b) {
    if ((a | b) != g.full_set()) {
        return false;
    }
    for (VertexSet e : g.edge_masks()) {
        if (!subset(e, a) && !subset(e, b)) {
            return false;
        }
    }
    return true;
}

bool is_separation(const GroundSystem& g, const std::vector<std::string>& a,
                   const std::vector<std::string>& b) {
    return is_separation(g, g.set_of(a), g.set_of(b));
}

std::vector<VertexSet> components_after_removal(const GroundSystem& g, VertexSet removed) {
    int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (VertexSet e : g.edge_masks()) {
        VertexSet rest = e & ~removed;
        if (rest == 0) {
            continue;
        }
        int first = std::countr_zero(rest);
        for (VertexSet bits = rest & (rest - 1); bits != 0; bits &= bits - 1) {
            int v = std::countr_zero(bits);
            parent[static_cast<std::size_t>(find(v))] = find(first);
        }
    }
    std::vector<VertexSet> comp_of_root(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (removed >> v & 1) {
            continue;
        }
        comp_of_root[static_cast<std::size_t>(find(v))] |= VertexSet{1} << v;
    }
    std::vector<VertexSet> comps;
    for (VertexSet c : comp_of_root) {
        if (c != 0) {
            comps.push_back(c);
        }
    }
    return comps;
}

std::vector<VertexSet> subsets_of_size(int n, int size) {
    std::vector<VertexSet> out;
    if (size > n) {
        return out;
    }
    if (size == 0) {
        out.push_back(0);
        return out;
    }
    VertexSet limit = VertexSet{1} << n;
    VertexSet c = (VertexSet{1} << size) - 1;
    while (c < limit) {
        out.push_back(c);
        VertexSet lo = c & (~c + 1);
        VertexSet lz = c + lo;
        c = lz | ((c ^ lz) / lo >> 2);
    }
    return out;
}

namespace {

void check_enumeration_input(const GroundSystem& g, int k, const Limits& limits) {
    if (k < 0) {
        throw MalformedInput("k must be non-negative");
    }
    if (g.vertex_count() > limits.max_vertices) {
        throw CapExceeded("ground system has " + std::to_string(g.vertex_count()) +
                          " vertices, above the enumeration cap of " +
                          std::to_string(limits.max_vertices) +
                          " (raise it with --max-vertices)");
    }
}

std::vector<VertexSet> separator_candidates(const GroundSystem& g, int k) {
    std::vector<VertexSet> cands;
    int max_size = std::min(k - 1, g.vertex_count());
    for (int size = 0; size <= max_size; ++size) {
        auto sized = subsets_of_size(g.vertex_count(), size);
        cands.insert(cands.end(), sized.begin(), sized.end());
    }
    return cands;
}

void emit_for_separator(const GroundSystem& g, VertexSet cand,
                        std::vector<Separation>& out) {
    std::vector<VertexSet> comps = components_after_removal(g, cand);
    std::size_t c = comps.size();
    for (VertexSet assign = 0; assign < (VertexSet{1} << c); ++assign) {
        VertexSet a = cand;
        VertexSet b = cand;
        for (std::size_t j = 0; j < c; ++j) {
            (assign >> j & 1 ? a : b) |= comps[j];
        }
        out.push_back({a, b});
    }
}

} // namespace

std::vector<Separation> enumerate_separations(const GroundSystem& g, int k,
                                              const Limits& limits) {
    check_enumeration_input(g, k, limits);
    std::vector<VertexSet> cands = separator_candidates(g, k);
    std::vector<std::vector<Separation>> per_cand(cands.size());
    std::exception_ptr fail;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(cands.size()); ++i) {
        try {
            emit_for_separator(g, cands[static_cast<std::size_t>(i)],
                               per_cand[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!fail) {
                fail = std::current_exception();
            }
        }
    }
    if (fail) {
        std::rethrow_exception(fail);
    }
    std::vector<Separation> out;
    for (const auto& part : per_cand) {
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Separation> enumerate_separations_serial(const GroundSystem& g, int k,
                                                     const Limits& limits) {
    check_enumeration_input(g, k, limits);
    std::vector<Separation> out;
    for (VertexSet cand : separator_candidates(g, k)) {
        emit_for_separator(g, cand, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tangledec
