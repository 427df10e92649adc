#include "rscod/middleton.hpp"

#include <cmath>

namespace rsc {
namespace cap {

MiddletonTable middleton_states(const MiddletonParams& p) {
    if (p.A <= 0 || p.gamma <= 0) throw BadParameters("A and Gamma must be positive");
    MiddletonTable t;
    double si2 = p.sigma_i2();
    double pm = std::exp(-p.A);  // P_0
    double cum = 0;
    unsigned m = 0;
    while (true) {
        t.prob.push_back(pm);
        t.variance.push_back(si2 * (double)m / p.A + p.sigma_g2);
        cum += pm;
        if (p.state_cap != 0 && m >= p.state_cap) break;
        if (p.state_cap == 0 && cum >= 1.0 - 1e-12 && m >= 1) break;
        ++m;
        pm = pm * p.A / (double)m;
        if (m > 500) break;
    }
    return t;
}

std::vector<double> middleton_sample(const MiddletonParams& p, size_t count, std::uint64_t seed) {
    MiddletonTable t = middleton_states(p);
    // CDF inversion over the truncated state table
    std::vector<double> cdf(t.prob.size());
    double acc = 0;
    for (size_t i = 0; i < t.prob.size(); ++i) {
        acc += t.prob[i];
        cdf[i] = acc;
    }
    Xoshiro256 rng(seed);
    std::vector<double> out(count);
    for (size_t i = 0; i < count; ++i) {
        double u = rng.uniform() * acc;
        size_t m = 0;
        while (m + 1 < cdf.size() && u > cdf[m]) ++m;
        out[i] = rng.gaussian(0.0, t.variance[m]);
    }
    return out;
}

double middleton_pdf(const MiddletonParams& p, double x) {
    MiddletonTable t = middleton_states(p);
    double v = 0;
    for (size_t m = 0; m < t.prob.size(); ++m) {
        double s2 = t.variance[m];
        v += t.prob[m] * std::exp(-x * x / (2.0 * s2)) / std::sqrt(2.0 * M_PI * s2);
    }
    return v;
}

double middleton_pdf_integral(const MiddletonParams& p, double span, size_t steps) {
    MiddletonTable t = middleton_states(p);
    double smax = 0;
    for (double v : t.variance) smax = std::max(smax, std::sqrt(v));
    double L = span * smax;
    if (steps % 2) ++steps;
    double h = 2.0 * L / (double)steps;
    double sum = middleton_pdf(p, -L) + middleton_pdf(p, L);
    for (size_t i = 1; i < steps; ++i) {
        double x = -L + h * (double)i;
        sum += middleton_pdf(p, x) * (i % 2 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

namespace {
double hg_ratio_log2(double num, double den) { return std::log2(num / den); }
}  // namespace

ImpulseCapacity impulse_capacity(StateInfo info, const MiddletonParams& p, double P, double B) {
    double sg2 = p.sigma_g2;
    double si2 = p.sigma_i2();
    double A = p.A;
    double psd = P / (2.0 * B);
    ImpulseCapacity out;
    switch (info) {
        case StateInfo::Both:
        case StateInfo::TxOnly: {
            double c;
            if (psd >= (1.0 - A) / A * si2) {
                c = B * hg_ratio_log2(psd + sg2 + si2, sg2) +
                    A * B * hg_ratio_log2(sg2, sg2 + si2 / A);
            } else {
                c = (1.0 - A) * B * hg_ratio_log2(P / (2.0 * B * (1.0 - A)) + sg2, sg2);
            }
            out.bits_per_second = c;
            out.upper_bound = (info == StateInfo::TxOnly);
            break;
        }
        case StateInfo::RxOnly: {
            out.bits_per_second = (1.0 - A) * B * hg_ratio_log2(psd + sg2, sg2) +
                                  A * B * hg_ratio_log2(psd + sg2 + si2 / A, sg2 + si2 / A);
            break;
        }
        case StateInfo::Neither: {
            out.bits_per_second = B * hg_ratio_log2(psd + sg2 + si2, sg2 + si2);
            break;
        }
    }
    return out;
}

}  // namespace cap
}  // namespace rsc
