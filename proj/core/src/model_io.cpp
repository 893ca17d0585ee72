#include "logicprob/model_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace logicprob {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const char* what) {
    try {
        if (j.is_number_integer())
            return Rational(j.get<long>());
        if (j.is_string())
            return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw model_error(std::string("bad ") + what + ": " + e.what());
    }
    throw model_error(std::string(what) + " must be a string like \"1/2\" or an integer");
}

std::size_t bits_to_row(const std::string& bits, std::size_t m) {
    if (bits.size() != m)
        throw model_error("row bits '" + bits + "' need exactly " + std::to_string(m) +
                          " characters");
    std::size_t row = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw model_error("row bits must be 0/1, got '" + bits + "'");
        row = (row << 1) | static_cast<std::size_t>(c - '0');
    }
    return row;
}

} // namespace

ProbModel load_model(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw model_error(std::string("model file is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw model_error("model file must be a JSON object");

    if (j.contains("atoms")) {
        if (!j["atoms"].is_array() || j["atoms"].empty())
            throw model_error("\"atoms\" must be a nonempty array");
        std::vector<std::pair<std::string, Rational>> atoms;
        for (const auto& entry : j["atoms"]) {
            if (!entry.is_object() || !entry.contains("name") || !entry.contains("p"))
                throw model_error("each atom needs \"name\" and \"p\"");
            atoms.emplace_back(entry["name"].get<std::string>(),
                               rational_field(entry["p"], "atom probability"));
        }
        return ProbModel::product(std::move(atoms));
    }

    if (j.contains("joint")) {
        if (!j.contains("names") || !j["names"].is_array() || j["names"].empty())
            throw model_error("a joint table needs a \"names\" array");
        std::vector<std::string> names;
        for (const auto& n : j["names"])
            names.push_back(n.get<std::string>());
        std::size_t m = names.size();
        if (m > kMaxModelAtoms)
            throw model_error("too many atoms in joint table");
        std::vector<Rational> weights(std::size_t{1} << m, Rational(0));
        if (!j["joint"].is_array())
            throw model_error("\"joint\" must be an array of rows");
        for (const auto& row : j["joint"]) {
            if (!row.is_object() || !row.contains("bits") || !row.contains("weight"))
                throw model_error("each joint row needs \"bits\" and \"weight\"");
            std::size_t idx = bits_to_row(row["bits"].get<std::string>(), m);
            weights[idx] = rational_field(row["weight"], "row weight");
        }
        return ProbModel::joint(std::move(names), std::move(weights));
    }

    throw model_error("model file needs either \"atoms\" or \"names\"+\"joint\"");
}

ProbModel load_model_file(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            throw model_error("cannot open model file: " + path);
        buf << in.rdbuf();
    }
    return load_model(buf.str());
}

std::string save_model(const ProbModel& model) {
    json j;
    if (model.is_product()) {
        json atoms = json::array();
        for (std::size_t i = 0; i < model.atom_count(); ++i)
            atoms.push_back({{"name", model.names()[i]},
                             {"p", model.atom_probs()[i].str()}});
        j["atoms"] = std::move(atoms);
    } else {
        j["names"] = model.names();
        json rows = json::array();
        for (std::size_t row = 0; row < model.outcome_count(); ++row) {
            Rational w = model.weight(row);
            if (w == Rational(0)) continue;
            std::string bits;
            for (std::size_t i = 0; i < model.atom_count(); ++i)
                bits += ProbModel::outcome_bit(row, i, model.atom_count()) ? '1' : '0';
            rows.push_back({{"bits", bits}, {"weight", w.str()}});
        }
        j["joint"] = std::move(rows);
    }
    return j.dump(2) + "\n";
}

} // namespace logicprob
