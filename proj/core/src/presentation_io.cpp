#include "dold/presentation_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dold {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("presentation file is not valid JSON");
    return j;
}

}  // namespace

QuotientAlgebra presentation_from_json(const std::string& text, int default_degree_cap) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("variables") || !j.contains("relations"))
        throw ParseError("presentation JSON needs 'variables' and 'relations'");

    std::vector<GradedVariable> vars;
    for (const json& v : j.at("variables")) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_number_integer())
            throw ParseError("each variable must be a [name, degree] pair");
        vars.push_back({v[0].get<std::string>(), v[1].get<int>()});
    }

    std::vector<std::vector<std::vector<Exponent>>> relations;
    for (const json& rel : j.at("relations")) {
        if (!rel.is_array()) throw ParseError("each relation must be a list of exponent vectors");
        std::vector<std::vector<Exponent>> terms;
        for (const json& mono : rel) {
            if (!mono.is_array() || mono.size() != vars.size())
                throw ParseError("each monomial must list one exponent per variable");
            std::vector<Exponent> exps;
            for (const json& e : mono) {
                if (!e.is_number_integer() || e.get<long long>() < 0)
                    throw ParseError("exponents must be non-negative integers");
                exps.push_back(static_cast<Exponent>(e.get<long long>()));
            }
            terms.push_back(std::move(exps));
        }
        relations.push_back(std::move(terms));
    }

    int cap = default_degree_cap;
    if (j.contains("degree_cap")) {
        if (!j.at("degree_cap").is_number_integer())
            throw ParseError("degree_cap must be an integer");
        cap = j.at("degree_cap").get<int>();
    }
    return make_algebra(std::move(vars), relations, cap);
}

QuotientAlgebra presentation_from_file(const std::string& path, int default_degree_cap) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open presentation file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return presentation_from_json(buffer.str(), default_degree_cap);
}

std::string presentation_to_json(const QuotientAlgebra& algebra) {
    json j;
    json vars = json::array();
    for (const GradedVariable& v : algebra.variables()) vars.push_back({v.name, v.degree});
    j["variables"] = std::move(vars);
    json relations = json::array();
    for (const Polynomial& rel : algebra.relations()) {
        json terms = json::array();
        for (const Monomial& m : rel.terms()) terms.push_back(m.exponents());
        relations.push_back(std::move(terms));
    }
    j["relations"] = std::move(relations);
    j["degree_cap"] = algebra.degree_cap();
    return j.dump();
}

}  // namespace dold
