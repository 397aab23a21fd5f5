#pragma once
// Seeded oracle-equivalence suites shared by the CLI and the acceptance run.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hqg {

struct Metric {
    std::string name;
    double value = 0;  // a deviation unless stated otherwise
    double tol = 0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<Metric> metrics;

    bool pass() const;
};

SuiteResult verify_theorem1(std::size_t samples, std::uint64_t seed, double tol = 1e-10);
SuiteResult verify_corollary(double tol = 1e-12);
SuiteResult verify_landsburg(std::size_t samples, std::uint64_t seed, double tol = 1e-10);
SuiteResult verify_parrondo(std::size_t samples, std::uint64_t seed, double tol = 1e-12);

// suite: theorem1 | corollary | landsburg | parrondo | all
std::vector<SuiteResult> run_suites(const std::string& suite, std::size_t samples, std::uint64_t seed);

}  // namespace hqg
