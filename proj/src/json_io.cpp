#include "wbs/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace wbs {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
}

Vertex parse_vertex(const std::string& name) {
    if (name.size() < 2 || (name[0] != 't' && name[0] != 'b')) {
        throw std::invalid_argument("bad vertex name '" + name + "' (want t<i> or b<i>)");
    }
    int col;
    try {
        std::size_t used = 0;
        col = std::stoi(name.substr(1), &used);
        if (used != name.size() - 1) throw std::invalid_argument(name);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad vertex name '" + name + "'");
    }
    return {name[0] == 'b', col};
}

WalledDiagram walled_from_json(const json& j) {
    int r = j.at("r").get<int>();
    int s = j.at("s").get<int>();
    std::vector<WalledEdge> edges;
    for (const auto& e : j.at("edges")) {
        Vertex u = parse_vertex(e.at("u").get<std::string>());
        Vertex v = parse_vertex(e.at("v").get<std::string>());
        edges.emplace_back(u, v, e.at("marked").get<bool>());
    }
    return new_walled(r, s, std::move(edges));
}

KSuperDiagram k_from_json(const json& j) {
    int k = j.at("k").get<int>();
    std::vector<int> bottom_of(k > 0 ? k : 0, 0);
    std::set<int> marked;
    for (const auto& e : j.at("edges")) {
        int top = e.at("top").get<int>();
        if (top < 1 || top > k) throw std::invalid_argument("k-diagram top index out of range");
        bottom_of[top - 1] = e.at("bot").get<int>();
        if (e.at("marked").get<bool>()) marked.insert(top);
    }
    return new_k_diagram(k, std::move(bottom_of), std::move(marked));
}

}  // namespace

AnyDiagram parse_diagram(const std::string& text) {
    json j = parse_text(text);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "walled") return walled_from_json(j);
    if (kind == "k") return k_from_json(j);
    throw std::invalid_argument("unknown diagram kind '" + kind + "'");
}

WalledDiagram parse_walled(const std::string& text) {
    auto any = parse_diagram(text);
    if (auto* d = std::get_if<WalledDiagram>(&any)) return *d;
    throw std::invalid_argument("expected a walled diagram");
}

KSuperDiagram parse_k(const std::string& text) {
    auto any = parse_diagram(text);
    if (auto* d = std::get_if<KSuperDiagram>(&any)) return *d;
    throw std::invalid_argument("expected a k-superdiagram");
}

std::string element_to_json(const WalledElement& x) {
    std::string out = "{\"ambient\":{\"kind\":\"walled\",\"r\":" +
                      std::to_string(x.ambient().r) + ",\"s\":" + std::to_string(x.ambient().s) +
                      "},\"terms\":[";
    bool first = true;
    for (const auto& [d, c] : x.terms()) {
        if (!first) out += ",";
        first = false;
        out += "{\"coeff\":\"" + c.str() + "\",\"diagram\":" + d.serialize() + "}";
    }
    return out + "]}";
}

std::string element_to_json(const KElement& x) {
    std::string out =
        "{\"ambient\":{\"kind\":\"k\",\"k\":" + std::to_string(x.ambient().k) + "},\"terms\":[";
    bool first = true;
    for (const auto& [d, c] : x.terms()) {
        if (!first) out += ",";
        first = false;
        out += "{\"coeff\":\"" + c.str() + "\",\"diagram\":" + d.serialize() + "}";
    }
    return out + "]}";
}

WalledElement parse_walled_element(const std::string& text) {
    json j = parse_text(text);
    const auto& ambient = j.at("ambient");
    if (ambient.at("kind").get<std::string>() != "walled") {
        throw std::invalid_argument("expected a walled ambient");
    }
    WalledElement out(WalledAmbient{ambient.at("r").get<int>(), ambient.at("s").get<int>()});
    for (const auto& term : j.at("terms")) {
        Int coeff(term.at("coeff").get<std::string>());
        out.add_term(walled_from_json(term.at("diagram")), coeff);
    }
    return out;
}

std::string matrix_to_json(const SparseExactMatrix& m) {
    std::string out = "{\"rows\":" + std::to_string(m.n_rows()) +
                      ",\"cols\":" + std::to_string(m.n_cols()) + ",\"entries\":[";
    bool first = true;
    for (const auto& [rc, v] : m.entries()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(rc.first) + "," + std::to_string(rc.second) + ",\"" +
               to_string(v) + "\"]";
    }
    return out + "]}";
}

std::string sign_report_to_json(const SergeevSignReport& r) {
    return "{\"rho\":" + std::to_string(r.rho) + ",\"ell\":" + std::to_string(r.ell) + "}";
}

std::string sign_report_to_json(const WalledSignReport& r) {
    return "{\"c\":" + std::to_string(r.c) + ",\"ell1\":" + std::to_string(r.ell1) +
           ",\"rho1\":" + std::to_string(r.rho1) + ",\"p1\":" + std::to_string(r.p1) +
           ",\"ell2\":" + std::to_string(r.ell2) + ",\"rho2\":" + std::to_string(r.rho2) +
           ",\"p2\":" + std::to_string(r.p2) +
           ",\"loop_detected\":" + (r.loop_detected ? "true" : "false") + "}";
}

std::string checks_to_json(const std::vector<CheckEntry>& checks) {
    std::string out = "[";
    bool first = true;
    for (const auto& c : checks) {
        if (!first) out += ",";
        first = false;
        out += "{\"name\":" + json(c.name).dump() + ",\"pass\":" + (c.pass ? "true" : "false");
        if (!c.counterexample.empty()) out += ",\"counterexample\":" + c.counterexample;
        out += "}";
    }
    return out + "]";
}

std::string duality_report_to_json(const DualityReport& r) {
    std::string out = "{\"kind\":\"" + r.kind + "\",\"n\":" + std::to_string(r.n);
    if (r.kind == "mixed") {
        out += ",\"r\":" + std::to_string(r.r) + ",\"s\":" + std::to_string(r.s);
    } else {
        out += ",\"k\":" + std::to_string(r.k);
    }
    out += ",\"algebra_dim\":" + std::to_string(r.algebra_dim) +
           ",\"image_rank\":" + std::to_string(r.image_rank) +
           ",\"centralizer_dim_even\":" + std::to_string(r.centralizer_dim_even) +
           ",\"centralizer_dim_odd\":" + std::to_string(r.centralizer_dim_odd) +
           ",\"homomorphism_checked\":" + std::to_string(r.homomorphism_checked) +
           ",\"injective\":" + (r.injective ? "true" : "false") +
           ",\"surjective\":" + (r.surjective ? "true" : "false") +
           ",\"probabilistic\":" + (r.probabilistic ? "true" : "false") +
           ",\"checks\":" + checks_to_json(r.checks) + "}";
    return out;
}

std::string relation_report_to_json(const RelationCheckReport& r) {
    std::string out =
        "{\"r\":" + std::to_string(r.r) + ",\"s\":" + std::to_string(r.s) + ",\"relations\":[";
    bool first = true;
    for (const auto& rel : r.relations) {
        if (!first) out += ",";
        first = false;
        out += "{\"name\":" + json(rel.name).dump() +
               ",\"pass\":" + (rel.pass ? "true" : "false") + "}";
    }
    out += "],\"all_pass\":" + std::string(r.all_pass() ? "true" : "false") + "}";
    return out;
}

std::string basis_form_to_json(const BasisXForm& f) {
    auto int_list = [](const std::vector<int>& xs) {
        std::string out = "[";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(xs[i]);
        }
        return out + "]";
    };
    std::string pairs = "[";
    for (std::size_t i = 0; i < f.pairs.size(); ++i) {
        if (i) pairs += ",";
        pairs += "[" + std::to_string(f.pairs[i].first) + "," +
                 std::to_string(f.pairs[i].second) + "]";
    }
    pairs += "]";
    return "{\"r\":" + std::to_string(f.r) + ",\"s\":" + std::to_string(f.s) +
           ",\"P\":" + int_list(f.P) + ",\"pairs\":" + pairs +
           ",\"sigma\":" + int_list(f.sigma) + ",\"Q\":" + int_list(f.Q) + "}";
}

}  // namespace wbs
