#ifndef RSCOD_REPORT_HPP
#define RSCOD_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rsc {

struct Metric {
    double value = 0.0;
    double stderr_ = 0.0;   // standard error; 0 for deterministic metrics
    std::uint64_t trials = 0;
};

struct SimReport {
    std::string name;
    std::string params;  // compact parameter echo (JSON text)
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
    std::map<std::string, Metric> metrics;

    void put(const std::string& key, double value) { metrics[key] = Metric{value, 0.0, 0}; }
    void put(const std::string& key, double value, double stderr_v, std::uint64_t trials) {
        metrics[key] = Metric{value, stderr_v, trials};
    }
    double value(const std::string& key) const { return metrics.at(key).value; }
    const Metric& at(const std::string& key) const { return metrics.at(key); }

    std::string to_csv() const;
    std::string to_json() const;
};

// mean estimate of a Bernoulli/general sample with standard error
Metric sample_metric(double sum, double sum_sq, std::uint64_t n);
Metric bernoulli_metric(std::uint64_t successes, std::uint64_t n);

struct SweepReport {
    std::string name;
    std::string axis;
    std::vector<double> grid;
    std::vector<SimReport> points;

    std::string to_csv() const;
    std::string to_json() const;
};

std::string format_double(double v);

}  // namespace rsc

#endif
