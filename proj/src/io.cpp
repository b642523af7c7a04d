#include "leibniz/io.hpp"

#include <map>
#include <set>
#include <utility>

#include <json.hpp>

#include "leibniz/classification.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/forms.hpp"
#include "leibniz/structure.hpp"

namespace leibniz {

using json = nlohmann::ordered_json;

AlgebraTable parse_algebra(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("top level must be an object");

    if (doc.contains("field") && doc["field"] != "rationals")
        throw parse_error("unsupported field '" + doc["field"].dump() +
                          "', expected \"rationals\"");

    if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned())
        throw parse_error("missing or malformed \"dimension\"");
    std::size_t dim = doc["dimension"].get<std::size_t>();

    if (!doc.contains("basis_names") || !doc["basis_names"].is_array())
        throw parse_error("missing or malformed \"basis_names\"");
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    for (const auto& entry : doc["basis_names"]) {
        if (!entry.is_string()) throw parse_error("basis names must be strings");
        std::string name = entry.get<std::string>();
        if (index.count(name)) throw parse_error("duplicate basis name '" + name + "'");
        index[name] = names.size();
        names.push_back(name);
    }
    if (names.size() != dim)
        throw parse_error("dimension mismatch: dimension is " + std::to_string(dim) +
                          " but " + std::to_string(names.size()) + " names are declared");

    AlgebraTable t(dim, names);
    if (!doc.contains("brackets")) return t;
    if (!doc["brackets"].is_array()) throw parse_error("\"brackets\" must be an array");

    auto resolve = [&](const json& j, const char* where) -> std::size_t {
        if (!j.is_string())
            throw parse_error(std::string(where) + " must be a basis name string");
        auto it = index.find(j.get<std::string>());
        if (it == index.end())
            throw parse_error("unknown name '" + j.get<std::string>() + "' in " + where);
        return it->second;
    };

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& entry : doc["brackets"]) {
        if (!entry.is_object() || !entry.contains("left") || !entry.contains("right") ||
            !entry.contains("result"))
            throw parse_error("each bracket needs \"left\", \"right\" and \"result\"");
        std::size_t i = resolve(entry["left"], "bracket left");
        std::size_t j = resolve(entry["right"], "bracket right");
        if (!seen.insert({i, j}).second)
            throw parse_error("duplicate bracket for pair (" + names[i] + ", " +
                              names[j] + ")");
        if (!entry["result"].is_object())
            throw parse_error("bracket result must be an object of name: rational");
        for (const auto& [key, value] : entry["result"].items()) {
            auto it = index.find(key);
            if (it == index.end())
                throw parse_error("unknown name '" + key + "' in bracket result");
            if (!value.is_string())
                throw parse_error("rational for '" + key + "' must be a string");
            try {
                t.c(i, j, it->second) = rat_from_string(value.get<std::string>());
            } catch (const parse_error& e) {
                throw parse_error("bracket [" + names[i] + ", " + names[j] + "], " +
                                  key + ": " + e.what());
            }
        }
    }
    return t;
}

std::string serialize_algebra(const AlgebraTable& t) {
    const std::size_t n = t.dim();
    json doc;
    doc["field"] = "rationals";
    doc["dimension"] = n;
    doc["basis_names"] = t.basis_names();
    doc["brackets"] = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            json result = json::object();
            for (std::size_t k = 0; k < n; ++k)
                if (t.c(i, j, k) != 0)
                    result[t.basis_names()[k]] = rat_to_string(t.c(i, j, k));
            if (!result.empty())
                doc["brackets"].push_back({{"left", t.basis_names()[i]},
                                           {"right", t.basis_names()[j]},
                                           {"result", result}});
        }
    return doc.dump(2) + "\n";
}

namespace {

json subspace_json(const Subspace& s) {
    json j;
    j["ambient_dim"] = s.ambient_dim();
    j["dim"] = s.dim();
    j["basis"] = json::array();
    for (const QVector& v : s.basis()) {
        json row = json::array();
        for (const Rat& x : v) row.push_back(rat_to_string(x));
        j["basis"].push_back(row);
    }
    return j;
}

json verdict_json(const Verdict& v, const std::vector<std::string>& names) {
    json j;
    j["holds"] = v.holds;
    if (v.witness) {
        json w = json::array();
        for (std::size_t idx : *v.witness) w.push_back(names.at(idx));
        j["witness"] = w;
    }
    return j;
}

json classification_json(const AlgebraTable& t) {
    ClassificationReport r = classify(t);
    const std::vector<std::string>& names = t.basis_names();
    json j;
    j["right_leibniz"] = verdict_json(r.right_leibniz, names);
    j["left_leibniz"] = verdict_json(r.left_leibniz, names);
    j["symmetric"] = verdict_json(r.symmetric, names);
    j["lie"] = verdict_json(r.lie, names);
    j["left_central"] = verdict_json(r.left_central, names);
    j["right_central"] = verdict_json(r.right_central, names);
    j["killing_class"] = verdict_json(r.killing_class, names);
    j["solvable"] = r.solvable;
    j["nilpotent"] = r.nilpotent;
    j["semisimple"] = r.semisimple;
    return j;
}

json series_json(const SeriesTrace& s) {
    json j;
    json dims = json::array();
    for (const Subspace& term : s.terms) dims.push_back(term.dim());
    j["term_dims"] = dims;
    j["terminates_at_zero"] = s.terminates_at_zero();
    j["stabilized"] = s.stabilized;
    return j;
}

}  // namespace

std::string build_classification(const AlgebraTable& t) {
    return classification_json(t).dump(2) + "\n";
}

std::string build_analysis(const AlgebraTable& t) {
    IdentityCheck right = is_right_leibniz(t);
    if (!right.holds) {
        const auto& w = *right.witness;
        throw precondition_error(
            "analysis requires a right Leibniz table; identity fails at (" +
            t.basis_names()[w[0]] + ", " + t.basis_names()[w[1]] + ", " +
            t.basis_names()[w[2]] + ")");
    }

    json j;
    j["algebra"] = {{"dimension", t.dim()}, {"basis_names", t.basis_names()}};
    j["classification"] = classification_json(t);
    j["ess"] = subspace_json(ess(t));
    j["radical"] = subspace_json(radical(t));
    j["nilradical"] = subspace_json(nilradical(t));
    j["rad_bracket"] = subspace_json(rad_bracket_ideal(t));

    BilinearForm k = killing_form(t);
    json km = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < t.dim(); ++jj)
            row.push_back(rat_to_string(k.entries.at(i, jj)));
        km.push_back(row);
    }
    j["killing_matrix"] = km;
    j["killing_kernel"] = subspace_json(form_kernel(k));

    MainTheoremReport mt = verify_main_theorem(t);
    j["main_theorem"] = {{"in_killing_class", mt.in_killing_class},
                         {"kernel_equals_ess", mt.kernel_equals_ess},
                         {"semisimple", mt.semisimple},
                         {"agreement", mt.agreement}};

    j["series"] = {{"derived", series_json(derived_series(t))},
                   {"lower_central", series_json(lower_central_series(t))}};
    return j.dump(2) + "\n";
}

}  // namespace leibniz
