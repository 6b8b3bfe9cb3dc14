// Compares the OpenMP kernels against their serial reference
// implementations and checks that both produce identical results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "tangledec/oracle.hpp"
#include "tangledec/parallel.hpp"
#include "tangledec/ratlp.hpp"
#include "tangledec/sepsys.hpp"
#include "tangledec/tangles.hpp"

using namespace tangledec;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

// One untimed warmup run, then the measurement.
template <typename F>
double timed(F&& f) {
    f();
    auto t0 = std::chrono::steady_clock::now();
    f();
    return ms_since(t0);
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "results equal" : "RESULTS DIFFER");
}

GroundSystem grid(int rows, int cols) {
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

} // namespace

int main() {
    std::printf("threads available: %d\n\n", max_threads());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        GroundSystem u(Mode::SetSep,
                       [] {
                           std::vector<std::string> names;
                           for (int i = 0; i < 14; ++i) {
                               names.emplace_back(1, static_cast<char>('a' + i));
                           }
                           return names;
                       }(),
                       {});
        Limits wide;
        wide.max_vertices = 14;
        std::vector<Separation> serial, parallel;
        double ts = timed([&] { serial = enumerate_separations_serial(u, 3, wide); });
        double tp = timed([&] { parallel = enumerate_separations(u, 3, wide); });
        report("enumerate (setsep 14, k=3)", ts, tp, serial == parallel);
    }

    GroundSystem g16 = grid(4, 4);
    Orientation big_orientation;
    {
        InduceResult induced = induce_from_set(g16, 4, g16.full_set());
        big_orientation = *induced.orientation;
        TangleCertificate serial, parallel;
        double ts = timed([&] { serial = is_tangle_serial(g16, big_orientation); });
        double tp = timed([&] { parallel = is_tangle(g16, big_orientation); });
        bool equal = serial.ok == parallel.ok && serial.witness == parallel.witness;
        report("cover scan (grid 4x4, k=4)", ts, tp, equal);
    }

    {
        WeightFunction ones;
        ones.values.assign(16, Int(1));
        VerifyResult serial, parallel;
        double ts = timed([&] { serial = verify_decider_serial(g16, big_orientation, ones); });
        double tp = timed([&] { parallel = verify_decider(g16, big_orientation, ones); });
        bool equal = serial.ok == parallel.ok && serial.checked == parallel.checked;
        report("verify (grid 4x4, k=4)", ts, tp, equal);
    }

    {
        // Flip one pair so no deciding set exists and both scans run in full.
        Orientation o = *induce_from_set(g16, 2, g16.full_set()).orientation;
        Separation target{VertexSet{1}, g16.full_set()};
        for (Separation& s : o.chosen) {
            if (s == target) {
                s = inverse(s);
            }
        }
        std::sort(o.chosen.begin(), o.chosen.end());
        Search01Result serial, parallel;
        double ts = timed([&] { serial = search_01_decider_serial(g16, o); });
        double tp = timed([&] { parallel = search_01_decider(g16, o); });
        bool equal = serial.found == parallel.found && serial.x == parallel.x;
        report("search01 (grid 4x4, k=2)", ts, tp, equal);
    }

    {
        std::mt19937 rng(5);
        RatMatrix k(12, 12);
        for (std::size_t i = 0; i < 12; ++i) {
            for (std::size_t j = i + 1; j < 12; ++j) {
                k(i, j) = Rational(static_cast<long long>(rng() % 201) - 100,
                                   static_cast<long long>(rng() % 100) + 1);
                k(j, i) = -k(i, j);
            }
        }
        TuckerSolution serial, parallel;
        double ts = timed([&] { serial = tucker_solve_serial(k); });
        double tp = timed([&] { parallel = tucker_solve(k); });
        report("tucker_solve (n=12)", ts, tp, serial.x == parallel.x);
    }

    return 0;
}
