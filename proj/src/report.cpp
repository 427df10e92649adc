#include "rscod/report.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace rsc {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Metric sample_metric(double sum, double sum_sq, std::uint64_t n) {
    Metric m;
    m.trials = n;
    if (n == 0) return m;
    double mean = sum / (double)n;
    double var = sum_sq / (double)n - mean * mean;
    if (var < 0) var = 0;
    m.value = mean;
    m.stderr_ = n > 1 ? std::sqrt(var / (double)n) : 0.0;
    return m;
}

Metric bernoulli_metric(std::uint64_t successes, std::uint64_t n) {
    Metric m;
    m.trials = n;
    if (n == 0) return m;
    double p = (double)successes / (double)n;
    m.value = p;
    m.stderr_ = std::sqrt(p * (1.0 - p) / (double)n);
    return m;
}

std::string SimReport::to_csv() const {
    std::ostringstream os;
    os << "metric,value,stderr,trials\n";
    for (const auto& [k, m] : metrics)
        os << k << "," << format_double(m.value) << "," << format_double(m.stderr_) << ","
           << m.trials << "\n";
    return os.str();
}

std::string SimReport::to_json() const {
    std::ostringstream os;
    // wall_time_s stays out of the serialized forms: identical (params, seed)
    // runs must produce byte-identical reports
    os << "{\n  \"name\": \"" << name << "\",\n  \"seed\": " << seed << ",\n";
    if (!params.empty()) os << "  \"params\": " << params << ",\n";
    os << "  \"metrics\": {";
    bool first = true;
    for (const auto& [k, m] : metrics) {
        if (!first) os << ",";
        first = false;
        os << "\n    \"" << k << "\": {\"value\": " << format_double(m.value)
           << ", \"stderr\": " << format_double(m.stderr_) << ", \"trials\": " << m.trials << "}";
    }
    os << "\n  }\n}\n";
    return os.str();
}

std::string SweepReport::to_csv() const {
    std::ostringstream os;
    std::set<std::string> keys;
    for (const auto& p : points)
        for (const auto& [k, m] : p.metrics) keys.insert(k);
    os << axis;
    for (const auto& k : keys) os << "," << k << "," << k << "_stderr," << k << "_trials";
    os << "\n";
    for (size_t i = 0; i < points.size(); ++i) {
        os << format_double(grid[i]);
        for (const auto& k : keys) {
            auto it = points[i].metrics.find(k);
            if (it == points[i].metrics.end())
                os << ",,,";
            else
                os << "," << format_double(it->second.value) << ","
                   << format_double(it->second.stderr_) << "," << it->second.trials;
        }
        os << "\n";
    }
    return os.str();
}

std::string SweepReport::to_json() const {
    std::ostringstream os;
    os << "{\n  \"name\": \"" << name << "\",\n  \"axis\": \"" << axis << "\",\n  \"points\": [";
    for (size_t i = 0; i < points.size(); ++i) {
        if (i) os << ",";
        os << "\n  {\"" << axis << "\": " << format_double(grid[i]) << ", \"report\": ";
        std::string j = points[i].to_json();
        // strip trailing newline
        while (!j.empty() && j.back() == '\n') j.pop_back();
        os << j << "}";
    }
    os << "\n  ]\n}\n";
    return os.str();
}

}  // namespace rsc
