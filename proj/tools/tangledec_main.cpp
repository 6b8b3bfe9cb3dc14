#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tangledec/decider.hpp"
#include "tangledec/json_io.hpp"
#include "tangledec/oracle.hpp"
#include "tangledec/sepsys.hpp"
#include "tangledec/tangles.hpp"

namespace {

using namespace tangledec;

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

GroundSystem load_ground_system(const std::string& path) {
    return ground_system_from_json(load_json_file(path));
}

Orientation load_orientation(const GroundSystem& g, const std::string& path, int k,
                             const Limits& limits) {
    return orientation_from_tangle_json(g, load_json_file(path), k, limits);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthesizes and checks integer vertex weights that decide graph "
                 "tangles (and set-separation profiles) by total weight: a separation "
                 "(A,B) of order < k is in the tangle iff w(A) < w(B). All arithmetic "
                 "is exact."};
    app.require_subcommand(1);

    Limits limits;
    app.add_option("--max-vertices", limits.max_vertices,
                   "Enumeration cap on the number of vertices")
        ->capture_default_str()
        ->check(CLI::Range(0, kMaxVertexBits));

    std::string graph_path, tangle_path, weights_path, out_path;
    int k = 0;
    bool count_only = false;
    bool profile = false;
    long long limit_value = 0;
    std::vector<std::string> set_names;
    std::function<int()> run;

    auto add_k = [&k](CLI::App* cmd) {
        cmd->add_option("--k", k, "Orient separations of order < k")
            ->required()
            ->check(CLI::NonNegativeNumber);
    };

    auto* sep_cmd = app.add_subcommand("separations",
                                       "List all oriented separations of order < k");
    sep_cmd->add_option("graph", graph_path, "Ground system JSON file")->required();
    add_k(sep_cmd);
    sep_cmd->add_flag("--count-only", count_only, "Print only the count");
    sep_cmd->callback([&] {
        run = [&]() {
            GroundSystem g = load_ground_system(graph_path);
            auto seps = enumerate_separations(g, k, limits);
            Json j;
            j["count"] = seps.size();
            if (!count_only) {
                Json list = Json::array();
                for (const Separation& s : seps) {
                    list.push_back(separation_to_json(g, s));
                }
                j["separations"] = std::move(list);
            }
            print(j);
            return 0;
        };
    });

    auto* tangles_cmd = app.add_subcommand("tangles", "Enumerate all k-tangles");
    tangles_cmd->add_option("graph", graph_path, "Ground system JSON file")->required();
    add_k(tangles_cmd);
    auto* limit_opt = tangles_cmd->add_option("--limit", limit_value,
                                              "Stop after this many tangles")
                          ->check(CLI::PositiveNumber);
    tangles_cmd->callback([&] {
        run = [&]() {
            GroundSystem g = load_ground_system(graph_path);
            std::optional<long long> limit;
            if (limit_opt->count() > 0) {
                limit = limit_value;
            }
            auto tangles = enumerate_tangles(g, k, limit, limits);
            Json list = Json::array();
            for (const Orientation& o : tangles) {
                list.push_back(orientation_to_tangle_json(g, o));
            }
            Json j;
            j["count"] = tangles.size();
            j["tangles"] = std::move(list);
            print(j);
            return 0;
        };
    });

    auto* check_cmd = app.add_subcommand("check", "Check the tangle (or profile) axioms");
    check_cmd->add_option("graph", graph_path, "Ground system JSON file")->required();
    check_cmd->add_option("tangle", tangle_path, "Tangle JSON file")->required();
    add_k(check_cmd);
    check_cmd->add_flag("--profile", profile, "Check the profile axioms instead");
    check_cmd->callback([&] {
        run = [&]() {
            GroundSystem g = load_ground_system(graph_path);
            Orientation o = load_orientation(g, tangle_path, k, limits);
            TangleCertificate cert = profile ? is_profile(g, o, limits) : is_tangle(g, o, limits);
            print(certificate_to_json(g, cert));
            return cert.ok ? 0 : 1;
        };
    });

    auto* induce_cmd =
        app.add_subcommand("induce", "Induce an orientation by majority vote");
    induce_cmd->add_option("graph", graph_path, "Ground system JSON file")->required();
    add_k(induce_cmd);
    auto* set_opt = induce_cmd->add_option("--set", set_names,
                                           "Comma-separated vertex set X (|A n X| < |B n X|)")
                        ->delimiter(',');
    auto* weights_opt = induce_cmd->add_option("--weights", weights_path,
                                               "Weights JSON file (w(A) < w(B))");
    set_opt->excludes(weights_opt);
    induce_cmd->callback([&] {
        run = [&]() {
            if (set_opt->count() == 0 && weights_opt->count() == 0) {
                std::cerr << "error: induce needs --set or --weights\n";
                return 2;
            }
            GroundSystem g = load_ground_system(graph_path);
            InduceResult res;
            if (set_opt->count() > 0) {
                res = induce_from_set(g, k, g.set_of(set_names), limits);
            } else {
                res = induce_from_weights(
                    g, k, weights_from_json(g, load_json_file(weights_path)), limits);
            }
            if (!res.ok()) {
                print(tie_report_to_json(g, res.ties));
                return 1;
            }
            print(orientation_to_tangle_json(g, *res.orientation));
            return 0;
        };
    });

    auto* decide_cmd = app.add_subcommand(
        "decide", "Synthesize integer weights deciding the tangle (or profile)");
    decide_cmd->add_option("graph", graph_path, "Ground system JSON file")->required();
    decide_cmd->add_option("tangle", tangle_path, "Tangle JSON file")->required();
    add_k(decide_cmd);
    decide_cmd->add_option("-o,--output", out_path, "Output weights JSON file")->required();
    decide_cmd->callback([&] {
        run = [&]() {
            GroundSystem g = load_ground_system(graph_path);
            Orientation o = load_orientation(g, tangle_path, k, limits);
            SynthesisResult res = synthesize_weights(g, o, limits);
            Json j = synthesis_to_json(g, res);
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 2;
            }
            out << j.dump(2) << "\n";
            print(j);
            return 0;
        };
    });

    auto* verify_cmd = app.add_subcommand(
        "verify", "Check deciderhood of a weight function over all separations");
    verify_cmd->add_option("graph", graph_path, "Ground system JSON file")->required();
    verify_cmd->add_option("tangle", tangle_path, "Tangle JSON file")->required();
    verify_cmd->add_option("weights", weights_path, "Weights JSON file")->required();
    add_k(verify_cmd);
    verify_cmd->callback([&] {
        run = [&]() {
            GroundSystem g = load_ground_system(graph_path);
            Orientation o = load_orientation(g, tangle_path, k, limits);
            WeightFunction w = weights_from_json(g, load_json_file(weights_path));
            VerifyResult res = verify_decider(g, o, w, limits);
            print(verify_result_to_json(g, res));
            return res.ok ? 0 : 1;
        };
    });

    auto* search_cmd = app.add_subcommand(
        "search01", "Exhaustively search for a vertex set deciding the tangle");
    search_cmd->add_option("graph", graph_path, "Ground system JSON file")->required();
    search_cmd->add_option("tangle", tangle_path, "Tangle JSON file")->required();
    add_k(search_cmd);
    search_cmd->callback([&] {
        run = [&]() {
            GroundSystem g = load_ground_system(graph_path);
            Orientation o = load_orientation(g, tangle_path, k, limits);
            Search01Result res = search_01_decider(g, o, limits);
            Json j;
            j["found"] = res.found;
            if (res.found) {
                j["X"] = g.names_of(res.x);
            }
            print(j);
            return res.found ? 0 : 1;
        };
    });

    auto* count_cmd = app.add_subcommand(
        "countcheck", "Cross-check the enumerator against brute force and the count law");
    count_cmd->add_option("graph", graph_path, "Ground system JSON file")->required();
    add_k(count_cmd);
    count_cmd->callback([&] {
        run = [&]() {
            GroundSystem g = load_ground_system(graph_path);
            CountLawResult res = count_law_check(g, k, limits);
            Json j;
            j["ok"] = res.ok;
            j["enumerated"] = res.enumerated;
            j["bruteforce"] = res.brute_force;
            j["formula"] = res.formula;
            print(j);
            return res.ok ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run();
    } catch (const AxiomViolation& e) {
        // A well-formed orientation that fails its axioms is a false verdict.
        try {
            GroundSystem g = load_ground_system(graph_path);
            print(certificate_to_json(g, e.certificate()));
        } catch (const Error&) {
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
