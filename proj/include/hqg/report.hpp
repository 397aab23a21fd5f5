#pragma once
// Structured reports. Every measured number is an object {"value", "tol"}.

#include <string>

#include "json.hpp"

#include "hqg/verify.hpp"

namespace hqg {

using Json = nlohmann::ordered_json;

Json num(double value, double tol);
Json num_array(const double* values, std::size_t n, double tol);
template <class C>
Json num_array(const C& c, double tol) {
    return num_array(c.data(), c.size(), tol);
}
Json to_json(const Metric& m);
Json to_json(const SuiteResult& r);

enum class Format { text, json };

std::string render(const Json& report, Format f);

}  // namespace hqg
