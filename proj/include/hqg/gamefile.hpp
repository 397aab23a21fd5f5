#pragma once
// JSON game files: {"players": n, "payoffs": {label: [reals]}, "zero_sum"?: bool}

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hqg/equilibria.hpp"

namespace hqg {

// malformed user input; the CLI maps it to exit status 2
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GameFile {
    int players = 3;
    std::map<std::string, std::vector<double>> payoffs;
    bool zero_sum = false;
};

GameFile parse_game_file(const nlohmann::json& j);
GameFile load_game_file(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const GameFile& g);

Game3Payoffs to_game3(const GameFile& g);
GameFile from_game3(const Game3Payoffs& g);

// expected payoff per player under an outcome distribution with matching labels
std::vector<double> expected_payoffs(const GameFile& g, const OutcomeDistribution& d);

}  // namespace hqg
