#ifndef RSCOD_CAPACITY_HPP
#define RSCOD_CAPACITY_HPP

#include <utility>
#include <vector>

#include "rscod/errors.hpp"

namespace rsc {
namespace cap {

enum class Unit { Bits, Nats };

// binary entropy in bits; h(0) = h(1) = 0
double h2(double p);
// entropy of a distribution (bits by default)
double entropy(const std::vector<double>& p, Unit unit = Unit::Bits);
// mutual information of a joint table P(x,y), rows = x
double mutual_information(const std::vector<std::vector<double>>& joint, Unit unit = Unit::Bits);
void check_distribution(const std::vector<double>& p);

// Gaussian tail probability
double q_func(double a);
// book approximation exp(-a^2/2), used only where the worked numbers demand it
double q_func_approx(double a);

struct LinkParams {
    double eb_n0 = 0;   // linear energy ratio
    double f = 1;       // per-link amplitude attenuation
    unsigned L = 1;     // link count
    double B = 0;       // bandwidth (Hz)
    double P = 0;       // average power (W)
    double sigma2 = 0;  // noise power spectral density (W/Hz)
};

// detection error probability over one link and over L links in tandem
std::pair<double, double> tandem_error(const LinkParams& lp, bool approximate = false);
double link_capacity(double pe);  // 1 - h2(pe), bit/transmission

// cooperative rate allocation from link capacities C(d), C(2d), ..., C(Ld)
struct CoopAllocation {
    std::vector<double> lengths;  // n_i, normalized to k = 1
    double c_df;                  // decode-and-forward rate C(d)/L
    double c_coop;                // k / sum(n_i)
};
CoopAllocation coop_allocate(const std::vector<double>& capacities);

enum class Sharing { TS, FS, REP, REPstar, BC, MAC };
struct SharingSplit {
    double alpha = 0.5;  // time or bandwidth share for receiver 1
    double gamma = 0.5;  // broadcast power share for receiver 1
    double delta = 0.5;  // MAC power share for transmitter 1
    double P1 = -1;      // FS power for channel 1 (default alpha*P)
};
// rates to (R1, R2) in nat/s (or bit/s with unit flag)
std::pair<double, double> sharing_rates(const LinkParams& lp, Sharing strategy,
                                        const SharingSplit& split, Unit unit = Unit::Nats);
// repeating is worse than time-sharing when P/(sigma^2 B) exceeds this
double repeat_vs_ts_threshold(double f);
// attenuation factor above which the condition holds for the given link budget
double repeat_vs_ts_crossover(double P_over_sigma2B);

// two-channel water-filling closed form; alpha = bandwidth share of channel 1
// (noise gamma2), remainder has noise sigma2; returns (P1, P2)
std::pair<double, double> waterfill2(double P, double B, double alpha, double gamma2,
                                     double sigma2);
// n channels with bandwidth shares (default equal); returns per-channel powers
std::vector<double> waterfill_n(double P, double B, const std::vector<double>& variances,
                                const std::vector<double>& shares = {});
// sum rate of the allocation in bit/s
double waterfill_rate(double B, const std::vector<double>& variances,
                      const std::vector<double>& powers, const std::vector<double>& shares = {});

// degraded broadcast rate pair for power split alpha to the near user
std::pair<double, double> degraded_broadcast(double P, double sigma2, double gamma2, double alpha,
                                             Unit unit = Unit::Bits);

}  // namespace cap
}  // namespace rsc

#endif
