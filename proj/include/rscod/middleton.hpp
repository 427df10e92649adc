#ifndef RSCOD_MIDDLETON_HPP
#define RSCOD_MIDDLETON_HPP

#include <vector>

#include "rscod/errors.hpp"
#include "rscod/rng.hpp"

namespace rsc {
namespace cap {

// Class-A impulsive noise: state m ~ Poisson(A), noise ~ N(0, sigma_I^2 m/A + sigma_G^2)
struct MiddletonParams {
    double A = 0.01;       // impulse index
    double gamma = 0.01;   // sigma_G^2 / sigma_I^2
    double sigma_g2 = 1.0; // Gaussian background variance
    double sigma_i2() const { return sigma_g2 / gamma; }
    unsigned state_cap = 0;  // 0 -> choose smallest cap with mass >= 1 - 1e-12
};

struct MiddletonTable {
    std::vector<double> prob;      // P_m
    std::vector<double> variance;  // sigma_m^2
};

MiddletonTable middleton_states(const MiddletonParams& p);
std::vector<double> middleton_sample(const MiddletonParams& p, size_t count, std::uint64_t seed);
double middleton_pdf(const MiddletonParams& p, double x);
// numeric quadrature of the pdf over [-span, span] * max sigma (Simpson)
double middleton_pdf_integral(const MiddletonParams& p, double span = 40.0, size_t steps = 200000);

enum class StateInfo { Both, RxOnly, Neither, TxOnly };  // (+,+), (-,+), (-,-), (+,-)
struct ImpulseCapacity {
    double bits_per_second = 0;
    bool upper_bound = false;  // set for the (+,-) case
};
ImpulseCapacity impulse_capacity(StateInfo info, const MiddletonParams& p, double P, double B);

}  // namespace cap
}  // namespace rsc

#endif
