#include "tangledec/json_io.hpp"

#include <fstream>
#include <limits>

namespace tangledec {

namespace {

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

Int int_from_json(const Json& j, const std::string& what) {
    if (j.is_number_integer()) {
        return Int(j.get<std::int64_t>());
    }
    if (j.is_number_unsigned()) {
        return Int(j.get<std::uint64_t>());
    }
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw MalformedInput(what + " is not an integer: \"" + j.get<std::string>() + "\"");
        }
    }
    throw MalformedInput(what + " must be an integer (or a decimal string)");
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
    if (!j.is_array()) {
        throw MalformedInput(what + " must be an array of strings");
    }
    std::vector<std::string> out;
    for (const Json& item : j) {
        if (!item.is_string()) {
            throw MalformedInput(what + " must contain only strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

const Json& field(const Json& j, const char* key, const std::string& ctx) {
    if (!j.is_object()) {
        throw MalformedInput(ctx + " must be a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw MalformedInput(ctx + " misses the \"" + key + "\" field");
    }
    return *it;
}

} // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MalformedInput("file not found: " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw MalformedInput("malformed JSON in " + path + ": " + e.what());
    }
}

GroundSystem ground_system_from_json(const Json& j) {
    Mode mode = Mode::Graph;
    const Json& mode_field = field(j, "mode", "ground system");
    if (!mode_field.is_string()) {
        throw MalformedInput("\"mode\" must be a string");
    }
    mode = mode_from_string(mode_field.get<std::string>());

    std::vector<std::string> vertices =
        string_list(field(j, "vertices", "ground system"), "\"vertices\"");

    std::vector<std::vector<std::string>> edges;
    if (j.contains("edges")) {
        const Json& ej = j.at("edges");
        if (!ej.is_array()) {
            throw MalformedInput("\"edges\" must be an array of vertex lists");
        }
        for (const Json& edge : ej) {
            edges.push_back(string_list(edge, "edge"));
        }
    }
    return GroundSystem(mode, std::move(vertices), edges);
}

Json ground_system_to_json(const GroundSystem& g) {
    Json j;
    j["mode"] = mode_to_string(g.mode());
    j["vertices"] = g.vertex_names();
    Json edges = Json::array();
    for (VertexSet e : g.edge_masks()) {
        edges.push_back(g.names_of(e));
    }
    j["edges"] = std::move(edges);
    return j;
}

Separation separation_from_json(const GroundSystem& g, const Json& j) {
    VertexSet a = g.set_of(string_list(field(j, "A", "separation"), "\"A\""));
    VertexSet b = g.set_of(string_list(field(j, "B", "separation"), "\"B\""));
    return {a, b};
}

Json separation_to_json(const GroundSystem& g, const Separation& s) {
    Json j;
    j["A"] = g.names_of(s.a);
    j["B"] = g.names_of(s.b);
    return j;
}

Orientation orientation_from_tangle_json(const GroundSystem& g, const Json& j, int k,
                                         const Limits& limits) {
    const Json& type_field = field(j, "type", "tangle file");
    if (!type_field.is_string()) {
        throw MalformedInput("tangle \"type\" must be a string");
    }
    std::string type = type_field.get<std::string>();
    if (j.contains("k")) {
        Int file_k = int_from_json(j.at("k"), "tangle \"k\"");
        if (file_k != k) {
            throw MalformedInput("tangle file has k=" + file_k.str() +
                                 " but k=" + std::to_string(k) + " was requested");
        }
    }

    if (type == "explicit") {
        const Json& mj = field(j, "maximal", "explicit tangle file");
        if (!mj.is_array()) {
            throw MalformedInput("\"maximal\" must be an array of separations");
        }
        std::vector<Separation> maximals;
        for (const Json& sj : mj) {
            maximals.push_back(separation_from_json(g, sj));
        }
        std::vector<Separation> seps = enumerate_separations(g, k, limits);
        for (const Separation& m : maximals) {
            if (!std::binary_search(seps.begin(), seps.end(), m)) {
                throw MalformedInput("listed maximal element is not a separation of order < " +
                                     std::to_string(k));
            }
        }
        Orientation o;
        o.k = k;
        for (const Separation& s : seps) {
            for (const Separation& m : maximals) {
                if (leq(s, m)) {
                    o.chosen.push_back(s);
                    break;
                }
            }
        }
        validate_orientation(g, o, limits); // the closure must orient every pair
        return o;
    }

    InduceResult induced;
    if (type == "majority-set") {
        VertexSet x = g.set_of(string_list(field(j, "X", "majority-set tangle file"), "\"X\""));
        induced = induce_from_set(g, k, x, limits);
    } else if (type == "majority-weights") {
        induced = induce_from_weights(
            g, k, weights_from_json(g, Json{{"weights", field(j, "w", "majority-weights tangle file")}}),
            limits);
    } else {
        throw MalformedInput("unknown tangle type: \"" + type +
                             "\" (expected explicit, majority-set or majority-weights)");
    }
    if (!induced.ok()) {
        throw MalformedInput("majority vote leaves " + std::to_string(induced.ties.size()) +
                             " separation(s) tied; the file induces no orientation");
    }
    return *induced.orientation;
}

Json orientation_to_tangle_json(const GroundSystem& g, const Orientation& o) {
    Json j;
    j["k"] = o.k;
    j["type"] = "explicit";
    Json maximal = Json::array();
    for (const Separation& s : maximal_elements(o)) {
        maximal.push_back(separation_to_json(g, s));
    }
    j["maximal"] = std::move(maximal);
    return j;
}

Json tie_report_to_json(const GroundSystem& g, const std::vector<Separation>& ties) {
    Json list = Json::array();
    for (const Separation& s : ties) {
        list.push_back(separation_to_json(g, s));
    }
    return Json{{"ties", std::move(list)}};
}

WeightFunction weights_from_json(const GroundSystem& g, const Json& j) {
    const Json& wj = field(j, "weights", "weights file");
    if (!wj.is_object()) {
        throw MalformedInput("\"weights\" must map vertex names to integers");
    }
    WeightFunction w;
    w.values.assign(static_cast<std::size_t>(g.vertex_count()), Int(0));
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto it = wj.begin(); it != wj.end(); ++it) {
        int idx = g.vertex_index(it.key());
        w.values[static_cast<std::size_t>(idx)] =
            int_from_json(it.value(), "weight of \"" + it.key() + "\"");
        seen[static_cast<std::size_t>(idx)] = 1;
    }
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (!seen[static_cast<std::size_t>(i)]) {
            throw MalformedInput("weights file misses vertex \"" + g.vertex_name(i) + "\"");
        }
    }
    validate_weights(g, w);
    return w;
}

Json weights_to_json(const GroundSystem& g, const WeightFunction& w) {
    Json map = Json::object();
    for (int i = 0; i < g.vertex_count(); ++i) {
        map[g.vertex_name(i)] = int_to_json(w.values[static_cast<std::size_t>(i)]);
    }
    return Json{{"weights", std::move(map)}};
}

Json synthesis_to_json(const GroundSystem& g, const SynthesisResult& r) {
    Json j = weights_to_json(g, r.w);
    Json x = Json::array();
    for (const Rational& v : r.provenance.x) {
        x.push_back(rational_to_string(v));
    }
    Json prov;
    prov["n"] = r.provenance.n;
    prov["x"] = std::move(x);
    prov["bump_fired"] = r.provenance.bump_fired;
    prov["bump_vertex"] =
        r.provenance.bump_vertex ? Json(g.vertex_name(*r.provenance.bump_vertex)) : Json();
    j["provenance"] = std::move(prov);
    return j;
}

Json certificate_to_json(const GroundSystem& g, const TangleCertificate& cert) {
    Json j;
    j["ok"] = cert.ok;
    if (!cert.ok) {
        j["kind"] = defect_to_string(cert.kind);
        Json witness = Json::array();
        for (const Separation& s : cert.witness) {
            witness.push_back(separation_to_json(g, s));
        }
        j["witness"] = std::move(witness);
    }
    return j;
}

Json verify_result_to_json(const GroundSystem& g, const VerifyResult& r) {
    Json j;
    j["ok"] = r.ok;
    j["checked"] = r.checked;
    if (r.witness) {
        Json w = separation_to_json(g, r.witness->sep);
        w["w_A"] = int_to_json(r.witness->weight_a);
        w["w_B"] = int_to_json(r.witness->weight_b);
        w["chosen"] = r.witness->chosen;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = Json();
    }
    return j;
}

} // namespace tangledec
