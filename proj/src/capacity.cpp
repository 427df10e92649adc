#include "rscod/capacity.hpp"

#include <cmath>

namespace rsc {
namespace cap {

double h2(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

void check_distribution(const std::vector<double>& p) {
    double s = 0;
    for (double v : p) {
        if (v < 0) throw BadDistribution("negative probability");
        s += v;
    }
    if (std::fabs(s - 1.0) > 1e-12) throw BadDistribution("probabilities do not sum to 1");
}

double entropy(const std::vector<double>& p, Unit unit) {
    check_distribution(p);
    double h = 0;
    for (double v : p)
        if (v > 0) h -= v * std::log2(v);
    return unit == Unit::Bits ? h : h * std::log(2.0);
}

double mutual_information(const std::vector<std::vector<double>>& joint, Unit unit) {
    std::vector<double> flat;
    std::vector<double> px(joint.size(), 0.0), py;
    for (const auto& row : joint) {
        if (py.empty()) py.assign(row.size(), 0.0);
        for (size_t j = 0; j < row.size(); ++j) py[j] += row[j];
        for (double v : row) flat.push_back(v);
    }
    check_distribution(flat);
    for (size_t i = 0; i < joint.size(); ++i)
        for (double v : joint[i]) px[i] += v;
    double I = 0;
    for (size_t i = 0; i < joint.size(); ++i)
        for (size_t j = 0; j < py.size(); ++j) {
            double v = joint[i][j];
            if (v > 0 && px[i] > 0 && py[j] > 0) I += v * std::log2(v / (px[i] * py[j]));
        }
    if (I < 0 && I > -1e-15) I = 0;
    return unit == Unit::Bits ? I : I * std::log(2.0);
}

double q_func(double a) { return 0.5 * std::erfc(a / std::sqrt(2.0)); }

double q_func_approx(double a) { return std::exp(-a * a / 2.0); }

std::pair<double, double> tandem_error(const LinkParams& lp, bool approximate) {
    double a1 = std::sqrt(lp.eb_n0 * std::pow(lp.f, 2.0));
    double aL = std::sqrt(lp.eb_n0 * std::pow(lp.f, 2.0 * lp.L));
    if (approximate) return {q_func_approx(a1), q_func_approx(aL)};
    return {q_func(a1), q_func(aL)};
}

double link_capacity(double pe) { return 1.0 - h2(pe); }

CoopAllocation coop_allocate(const std::vector<double>& capacities) {
    size_t L = capacities.size();
    if (L == 0) throw BadParameters("need at least one capacity");
    if (capacities[0] <= 0) throw InfeasibleCapacity("C(d) must be positive");
    for (size_t i = 1; i < L; ++i)
        if (capacities[i] > capacities[i - 1] + 1e-12)
            throw BadParameters("capacities must be non-increasing in distance");
    // forward substitution of the lower-triangular system, k = 1
    CoopAllocation out;
    out.lengths.assign(L, 0.0);
    for (size_t r = 0; r < L; ++r) {
        double rhs = 1.0;
        for (size_t j = 0; j < r; ++j) rhs -= capacities[r - j] * out.lengths[j];
        if (capacities[0] == 0) throw InfeasibleCapacity("zero pivot");
        out.lengths[r] = rhs / capacities[0];
        if (out.lengths[r] < 0 && out.lengths[r] > -1e-12) out.lengths[r] = 0;
    }
    double total = 0;
    for (double v : out.lengths) total += v;
    out.c_df = capacities[0] / (double)L;
    out.c_coop = 1.0 / total;
    return out;
}

namespace {
double to_unit(double nats, Unit unit) { return unit == Unit::Nats ? nats : nats / std::log(2.0); }
}  // namespace

std::pair<double, double> sharing_rates(const LinkParams& lp, Sharing strategy,
                                        const SharingSplit& split, Unit unit) {
    double B = lp.B, P = lp.P, f = lp.f, s2 = lp.sigma2;
    double N = 2.0 * s2 * B;  // noise power over the band
    double f2 = f * f, f4 = f2 * f2;
    double a = split.alpha, abar = 1.0 - a;
    double C1 = B * std::log(1.0 + P * f2 / N);
    double C2 = B * std::log(1.0 + P * f4 / N);
    double r1 = 0, r2 = 0;
    switch (strategy) {
        case Sharing::TS:
            r1 = a * C1;
            r2 = abar * C2;
            break;
        case Sharing::FS: {
            double P1 = split.P1 >= 0 ? split.P1 : a * P;
            double P2 = P - P1;
            // noise power proportional to the allocated bandwidth share
            r1 = a * B * std::log(1.0 + P1 * f2 / (a * N));
            r2 = abar * B * std::log(1.0 + P2 * f4 / (abar * N));
            break;
        }
        case Sharing::REP:
            r1 = a * C1;
            r2 = 0.5 * a * C1;
            break;
        case Sharing::REPstar:
            r1 = a * C1;
            r2 = abar * C1 / (2.0 - C2 / C1);
            break;
        case Sharing::BC: {
            double g = split.gamma, gbar = 1.0 - g;
            r1 = B * std::log(1.0 + g * P * f2 / N);
            r2 = B * std::log(1.0 + gbar * P * f4 / (N + g * P * f4));
            break;
        }
        case Sharing::MAC: {
            double d = split.delta, dbar = 1.0 - d;
            r1 = B * std::log(1.0 + d * P * f2 / N);
            r2 = B * std::log(1.0 + dbar * P * f4 / (N + d * P * f4));
            break;
        }
    }
    return {to_unit(r1, unit), to_unit(r2, unit)};
}

double repeat_vs_ts_threshold(double f) {
    return (1.0 - 2.0 * f * f) / std::pow(f, 6.0);
}

double repeat_vs_ts_crossover(double budget) {
    double lo = 1e-3, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (repeat_vs_ts_threshold(mid) > budget)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> waterfill2(double P, double B, double alpha, double gamma2,
                                     double sigma2) {
    if (P < 0) throw BadParameters("negative power");
    double abar = 1.0 - alpha;
    if (P < 2.0 * B * (gamma2 - sigma2) * abar) return {0.0, P};
    double P1 = alpha * (P - 2.0 * B * (gamma2 - sigma2) * abar);
    double P2 = abar * (P + 2.0 * B * (gamma2 - sigma2) * alpha);
    return {P1, P2};
}

std::vector<double> waterfill_n(double P, double B, const std::vector<double>& variances,
                                const std::vector<double>& shares_in) {
    size_t n = variances.size();
    std::vector<double> shares = shares_in;
    if (shares.empty()) shares.assign(n, 1.0 / (double)n);
    if (shares.size() != n) throw BadParameters("one bandwidth share per channel");
    // bisection on the water level mu: sum_i 2 a_i B max(0, mu - s_i) = P
    double lo = 0, hi = 0;
    for (double v : variances) hi = std::max(hi, v);
    hi += P / (2.0 * B * 1e-12 + 2.0 * B) + P;  // generous upper bound
    for (int it = 0; it < 200; ++it) {
        double mu = 0.5 * (lo + hi);
        double used = 0;
        for (size_t i = 0; i < n; ++i)
            used += 2.0 * shares[i] * B * std::max(0.0, mu - variances[i]);
        if (used > P)
            hi = mu;
        else
            lo = mu;
    }
    double mu = 0.5 * (lo + hi);
    std::vector<double> powers(n);
    for (size_t i = 0; i < n; ++i) powers[i] = 2.0 * shares[i] * B * std::max(0.0, mu - variances[i]);
    return powers;
}

double waterfill_rate(double B, const std::vector<double>& variances,
                      const std::vector<double>& powers, const std::vector<double>& shares_in) {
    size_t n = variances.size();
    std::vector<double> shares = shares_in;
    if (shares.empty()) shares.assign(n, 1.0 / (double)n);
    double rate = 0;
    for (size_t i = 0; i < n; ++i)
        rate += shares[i] * B * std::log2(1.0 + powers[i] / (2.0 * shares[i] * B * variances[i]));
    return rate;
}

std::pair<double, double> degraded_broadcast(double P, double sigma2, double gamma2, double alpha,
                                             Unit unit) {
    double c1 = 0.5 * std::log(1.0 + alpha * P / sigma2);
    double c2 = 0.5 * std::log(1.0 + (1.0 - alpha) * P / (alpha * P + gamma2));
    if (unit == Unit::Bits) {
        c1 /= std::log(2.0);
        c2 /= std::log(2.0);
    }
    return {c1, c2};
}

}  // namespace cap
}  // namespace rsc
