#pragma once
// Command implementations behind the hqg tool. Each returns a report and an
// exit status (0 all checks pass, 1 a check failed); bad input throws.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hqg/gamefile.hpp"
#include "hqg/report.hpp"

namespace hqg {

struct CommandResult {
    Json report;
    int status = 0;
};

struct ParsedStrategy {
    SU2Gate gate;
    double norm = 1;
    bool normalized = false;
};

// "ReA,ImA,ReB,ImB"; normalizes beyond 1e-9 and rejects beyond 1e-3
ParsedStrategy parse_strategy(const std::string& text);
std::vector<double> parse_reals(const std::string& text, std::size_t expected, const std::string& what);

struct DistributionOptions {
    std::optional<std::string> game_path;
    std::vector<std::string> strategies;
    std::string method = "both";  // octonion | quaternion | oracle | both
    double tol = 1e-10;
};

struct EquilibriumOptions {
    std::string game_path;
    std::size_t samples = 1000;
    double tol = 1e-10;
    std::uint64_t seed = 1;
    std::optional<std::string> mixed;  // "p,q,r"
};

struct VerifyOptions {
    std::string suite = "all";
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
};

struct ParrondoOptions {
    std::string game = "hd";           // hd | capital | sequence | fna
    std::string probs = "0.5,0.5,0.5,0.5";
    std::string convention = "gain-first";
    double p1 = 0.1, p2 = 0.75;
    std::optional<double> q;
    double pa = 0.5;
    double epsilon = 1.0 / 200;
    double r = 0.5;
    std::vector<std::string> angles;  // four "theta,phi,eta"
    std::vector<std::string> inputs;  // three qubits "re,im,re,im"
    double tol = 1e-12;
};

CommandResult cmd_distribution(const DistributionOptions& o);
CommandResult cmd_equilibrium(const EquilibriumOptions& o);
CommandResult cmd_verify(const VerifyOptions& o);
CommandResult cmd_parrondo(const ParrondoOptions& o);

}  // namespace hqg
