#ifndef TANGLEDEC_TESTS_FIXTURES_HPP
#define TANGLEDEC_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "tangledec/sepsys.hpp"

namespace fixtures {

using tangledec::GroundSystem;
using tangledec::Mode;

inline std::vector<std::string> letter_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        names.emplace_back(1, static_cast<char>('a' + i));
    }
    return names;
}

inline GroundSystem complete_graph(int n) {
    auto names = letter_names(n);
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.push_back({names[i], names[j]});
        }
    }
    return GroundSystem(Mode::Graph, names, edges);
}

inline GroundSystem path_graph(int n) {
    auto names = letter_names(n);
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({names[i], names[i + 1]});
    }
    return GroundSystem(Mode::Graph, names, edges);
}

inline GroundSystem cycle_graph(int n) {
    auto names = letter_names(n);
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({names[i], names[i + 1]});
    }
    edges.push_back({names[n - 1], names[0]});
    return GroundSystem(Mode::Graph, names, edges);
}

inline GroundSystem edgeless_graph(int n) {
    return GroundSystem(Mode::Graph, letter_names(n), {});
}

inline GroundSystem single_edge_graph() {
    return GroundSystem(Mode::Graph, {"u", "v"}, {{"u", "v"}});
}

inline GroundSystem setsep_universe(int n) {
    return GroundSystem(Mode::SetSep, letter_names(n), {});
}

// rows x cols grid; vertex (r,c) is named by two letters, so names sort in
// row-major order.
inline GroundSystem grid_graph(int rows, int cols) {
    auto name = [](int r, int c) {
        return std::string{static_cast<char>('a' + r), static_cast<char>('a' + c)};
    };
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            names.push_back(name(r, c));
            if (c + 1 < cols) {
                edges.push_back({name(r, c), name(r, c + 1)});
            }
            if (r + 1 < rows) {
                edges.push_back({name(r, c), name(r + 1, c)});
            }
        }
    }
    return GroundSystem(Mode::Graph, names, edges);
}

// Deterministic G(n, 1/2); only raw engine bits are used, so the graph is
// identical on every platform.
inline GroundSystem random_graph(int n, unsigned seed) {
    std::mt19937 rng(seed);
    auto names = letter_names(n);
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng() & 1u) {
                edges.push_back({names[i], names[j]});
            }
        }
    }
    return GroundSystem(Mode::Graph, names, edges);
}

} // namespace fixtures

#endif // TANGLEDEC_TESTS_FIXTURES_HPP
