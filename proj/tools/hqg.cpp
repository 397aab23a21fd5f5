// hqg: outcome distributions, equilibria, verification suites and Parrondo games.

#include <iostream>

#include "CLI11.hpp"
#include "hqg/cli.hpp"

using namespace hqg;

int main(int argc, char** argv) {
    CLI::App app{"Hypercomplex coordinatizations of quantum games"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    DistributionOptions dopt;
    std::string game_path;
    auto* dist = app.add_subcommand("distribution", "outcome distribution for 2 or 3 SU(2) strategies");
    dist->add_option("--game", game_path, "game file (JSON) for expected payoffs");
    dist->add_option("--strategy", dopt.strategies, "ReA,ImA,ReB,ImB (repeat once per player)")->required();
    dist->add_option("--method", dopt.method, "octonion|quaternion|oracle|both");
    dist->add_option("--tol", dopt.tol, "tolerance for coordinatized vs oracle agreement");
    dist->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    EquilibriumOptions eopt;
    std::string mixed;
    auto* eq = app.add_subcommand("equilibrium", "special distribution, indifference and classical scans");
    eq->add_option("game", eopt.game_path, "3-player game file (JSON)")->required();
    eq->add_option("--samples", eopt.samples, "random pure quantum deviations per player");
    eq->add_option("--tol", eopt.tol, "indifference tolerance");
    eq->add_option("--seed", eopt.seed, "RNG seed");
    eq->add_option("--mixed", mixed, "classical mixed profile p,q,r (probabilities of the second strategy)");
    eq->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    VerifyOptions vopt;
    auto* ver = app.add_subcommand("verify", "seeded oracle-equivalence suites");
    ver->add_option("--suite", vopt.suite, "theorem1|corollary|landsburg|parrondo|all");
    ver->add_option("--samples", vopt.samples, "random samples per suite");
    ver->add_option("--seed", vopt.seed, "RNG seed");
    ver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    ParrondoOptions popt;
    double q = 0;
    auto* par = app.add_subcommand("parrondo", "classical and quantized Parrondo games");
    par->add_option("--game", popt.game, "hd|capital|sequence|fna");
    par->add_option("--p", popt.probs, "hd: p1,p2,p3,p4");
    par->add_option("--convention", popt.convention, "hd: gain-first|loss-first");
    par->add_option("--p1", popt.p1, "capital: bias when capital is a multiple of 3");
    par->add_option("--p2", popt.p2, "capital: bias otherwise");
    auto* qopt = par->add_option("--q", q, "capital: probability of playing game A in the random mixture");
    par->add_option("--pa", popt.pa, "capital: game A bias");
    par->add_option("--epsilon", popt.epsilon, "sequence: bias offset");
    par->add_option("--r", popt.r, "sequence: weight of game A");
    par->add_option("--angles", popt.angles, "fna: theta,phi,eta (repeat four times)");
    par->add_option("--input", popt.inputs, "fna: input qubit re,im,re,im (repeat three times)");
    par->add_option("--tol", popt.tol, "tolerance for quantum vs classical agreement");
    par->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        CommandResult res;
        if (*dist) {
            if (!game_path.empty()) dopt.game_path = game_path;
            res = cmd_distribution(dopt);
        } else if (*eq) {
            if (!mixed.empty()) eopt.mixed = mixed;
            res = cmd_equilibrium(eopt);
        } else if (*ver) {
            res = cmd_verify(vopt);
        } else {
            if (qopt->count() > 0) popt.q = q;
            res = cmd_parrondo(popt);
        }
        const Format f = format == "json" ? Format::json : Format::text;
        if (f == Format::text)
            for (const auto& w : res.report.value("warnings", Json::array())) std::cerr << "warning: " << w.get<std::string>() << '\n';
        std::cout << render(res.report, f);
        return res.status;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
