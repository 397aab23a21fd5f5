#include "hqg/gamefile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace hqg {

using nlohmann::json;

GameFile parse_game_file(const json& j) {
    if (!j.is_object()) throw InputError("game file must be a JSON object");
    if (!j.contains("players") || !j["players"].is_number_integer())
        throw InputError("game file needs an integer \"players\"");
    GameFile g;
    g.players = j["players"].get<int>();
    if (g.players != 2 && g.players != 3) throw InputError("\"players\" must be 2 or 3");
    if (j.contains("zero_sum")) {
        if (!j["zero_sum"].is_boolean()) throw InputError("\"zero_sum\" must be a boolean");
        g.zero_sum = j["zero_sum"].get<bool>();
    }
    for (const auto& [key, _] : j.items())
        if (key != "players" && key != "payoffs" && key != "zero_sum")
            throw InputError("unknown key \"" + key + "\" in game file");
    if (!j.contains("payoffs") || !j["payoffs"].is_object()) throw InputError("game file needs a \"payoffs\" object");

    const auto& labels = outcome_labels(static_cast<std::size_t>(g.players));
    for (const auto& [label, row] : j["payoffs"].items()) {
        if (std::find(labels.begin(), labels.end(), label) == labels.end())
            throw InputError("invalid outcome label \"" + label + "\" for " + std::to_string(g.players) + " players");
        if (!row.is_array() || row.size() != static_cast<std::size_t>(g.players))
            throw InputError("payoffs for \"" + label + "\" must be an array of " + std::to_string(g.players) + " reals");
        std::vector<double> v;
        for (const auto& x : row) {
            if (!x.is_number()) throw InputError("payoffs for \"" + label + "\" must be numbers");
            v.push_back(x.get<double>());
            if (!std::isfinite(v.back())) throw InputError("payoffs must be finite");
        }
        g.payoffs[label] = std::move(v);
    }
    for (const auto& label : labels)
        if (!g.payoffs.contains(label)) throw InputError("missing payoffs for outcome \"" + label + "\"");

    if (g.zero_sum) {
        for (const auto& [label, v] : g.payoffs) {
            double s = 0;
            for (double x : v) s += x;
            if (std::abs(s) > 1e-9) throw InputError("zero_sum is set but payoffs for \"" + label + "\" sum to " + std::to_string(s));
        }
    }
    return g;
}

GameFile load_game_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open game file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
    return parse_game_file(j);
}

nlohmann::ordered_json to_json(const GameFile& g) {
    nlohmann::ordered_json j;
    j["players"] = g.players;
    j["zero_sum"] = g.zero_sum;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& label : outcome_labels(static_cast<std::size_t>(g.players))) p[label] = g.payoffs.at(label);
    j["payoffs"] = p;
    return j;
}

Game3Payoffs to_game3(const GameFile& g) {
    if (g.players != 3) throw InputError("a 3-player game file is required");
    Game3Payoffs out;
    out.zero_sum = g.zero_sum;
    for (const auto& [label, v] : g.payoffs) out.set(label, {v[0], v[1], v[2]});
    return out;
}

GameFile from_game3(const Game3Payoffs& g) {
    GameFile f;
    f.players = 3;
    f.zero_sum = g.zero_sum;
    for (const auto& label : outcome_labels(3)) f.payoffs[label] = {g.at(1, label), g.at(2, label), g.at(3, label)};
    return f;
}

std::vector<double> expected_payoffs(const GameFile& g, const OutcomeDistribution& d) {
    std::vector<double> out(static_cast<std::size_t>(g.players));
    for (std::size_t k = 0; k < d.labels.size(); ++k) {
        const auto& row = g.payoffs.at(d.labels[k]);
        for (std::size_t p = 0; p < out.size(); ++p) out[p] += d.probs[k] * row[p];
    }
    return out;
}

}  // namespace hqg
