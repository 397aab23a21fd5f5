#include "hqg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hqg {
namespace {

bool is_num(const Json& j) {
    return j.is_object() && j.size() == 2 && j.contains("value") && j.contains("tol");
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string scalar(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_float()) return fmt_double(j.get<double>());
    if (is_num(j)) {
        const std::string v = j["value"].is_number() ? fmt_double(j["value"].get<double>()) : j["value"].dump();
        return v + "  (tol " + fmt_double(j["tol"].get<double>()) + ")";
    }
    return j.dump();
}

bool is_metric(const Json& j) {
    return j.is_object() && j.contains("name") && j.contains("value") && j.contains("tol") && j.contains("pass");
}

bool is_leaf(const Json& j) { return !j.is_structured() || is_num(j); }

void text(std::ostringstream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_leaf(v)) {
                os << pad << k << ": " << scalar(v) << '\n';
            } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return is_num(x); }) &&
                       !v.empty()) {
                os << pad << k << ": [";
                for (std::size_t i = 0; i < v.size(); ++i)
                    os << (i ? ", " : "") << fmt_double(v[i]["value"].get<double>());
                os << "]  (tol " << fmt_double(v[0]["tol"].get<double>()) << ")\n";
            } else {
                os << pad << k << ":\n";
                text(os, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        if (j.empty()) os << pad << "(none)\n";
        for (const auto& v : j) {
            if (is_metric(v)) {
                os << pad << "- " << v["name"].get<std::string>() << ": " << fmt_double(v["value"].get<double>())
                   << "  (tol " << fmt_double(v["tol"].get<double>()) << ") " << (v["pass"].get<bool>() ? "PASS" : "FAIL")
                   << '\n';
            } else if (is_leaf(v)) {
                os << pad << "- " << scalar(v) << '\n';
            } else {
                os << pad << "-\n";
                text(os, v, indent + 2);
            }
        }
    } else {
        os << pad << scalar(j) << '\n';
    }
}

}  // namespace

Json num(double value, double tol) { return Json{{"value", value}, {"tol", tol}}; }

Json num_array(const double* values, std::size_t n, double tol) {
    Json a = Json::array();
    for (std::size_t k = 0; k < n; ++k) a.push_back(num(values[k], tol));
    return a;
}

Json to_json(const Metric& m) {
    return Json{{"name", m.name}, {"value", m.value}, {"tol", m.tol}, {"pass", m.pass}};
}

Json to_json(const SuiteResult& r) {
    Json j{{"suite", r.suite}, {"samples", r.samples}, {"seed", r.seed}, {"pass", r.pass()}};
    Json ms = Json::array();
    for (const auto& m : r.metrics) ms.push_back(to_json(m));
    j["metrics"] = ms;
    return j;
}

std::string render(const Json& report, Format f) {
    if (f == Format::json) return report.dump(2) + "\n";
    std::ostringstream os;
    text(os, report, 0);
    return os.str();
}

}  // namespace hqg
