#include "rscod/access.hpp"

#include <algorithm>
#include <cmath>

#include <chrono>

#include "rscod/packet.hpp"
#include "rscod/parallel.hpp"
#include "rscod/rng.hpp"

namespace rsc {
namespace access {

double aloha(const AccessParams& pa) {
    return pa.p * (double)pa.T * std::pow(1.0 - pa.p, (double)pa.T - 1.0);
}

SimReport aloha_sim(const AccessParams& pa, std::uint64_t slots, std::uint64_t seed) {
    if (slots < 1) throw BadParameters("need at least one slot");
    SimReport rep;
    rep.name = "aloha";
    rep.seed = seed;
    auto t0__ = std::chrono::steady_clock::now();
    rep.params = "{\"T\": " + std::to_string(pa.T) + ", \"p\": " + format_double(pa.p) + ", \"slots\": " + std::to_string(slots) + "}";
    // fixed chunking keeps the result independent of the worker count
    const std::uint64_t chunks = std::min<std::uint64_t>(slots, 64);
    std::uint64_t success = 0;
    parallel_jobs<std::uint64_t>(
        chunks,
        [&](std::uint64_t c) {
            std::uint64_t local_slots = slots / chunks + (c < slots % chunks ? 1 : 0);
            Xoshiro256 rng(hash_seed(seed, c));
            std::uint64_t hits = 0;
            for (std::uint64_t s = 0; s < local_slots; ++s) {
                unsigned tx = 0;
                for (unsigned u = 0; u < pa.T && tx < 2; ++u)
                    if (rng.bernoulli(pa.p)) ++tx;
                if (tx == 1) ++hits;
            }
            return hits;
        },
        [&](std::uint64_t hits) { success += hits; });
    rep.metrics["eta"] = bernoulli_metric(success, slots);
    rep.put("eta_formula", aloha(pa));
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0__).count();
    return rep;
}

double row_collision_probability(const AccessParams& pa) {
    return 1.0 - std::pow(1.0 - 1.0 / (double)pa.Z, (double)pa.T - 1.0);
}

double expected_collisions(const AccessParams& pa, unsigned n) {
    return (double)n * row_collision_probability(pa);
}

double array_access_efficiency(const AccessParams& pa) {
    return (double)pa.T / (double)pa.Z *
           std::pow(((double)pa.Z - 1.0) / (double)pa.Z, (double)pa.T - 1.0);
}

SimReport array_access_sim(const AccessParams& pa, const RsCode& code, unsigned N,
                           std::uint64_t blocks, std::uint64_t seed) {
    const GaloisField& f = code.field();
    unsigned n = code.n(), k = code.k(), Z = pa.Z, T = pa.T;
    SimReport rep;
    rep.name = "array-access";
    rep.seed = seed;
    auto t0__ = std::chrono::steady_clock::now();
    rep.params = "{\"Z\": " + std::to_string(Z) + ", \"T\": " + std::to_string(T) + ", \"n\": " + std::to_string(n) + ", \"k\": " + std::to_string(k) + ", \"N\": " + std::to_string(N) + ", \"blocks\": " + std::to_string(blocks) + "}";
    struct Tally {
        std::uint64_t user_success = 0, user_total = 0;
        std::uint64_t rows_collided = 0, rows_total = 0;
        std::uint64_t eligible = 0, eligible_success = 0;  // corrupted < n-k-1
    };
    Tally sum;
    const std::uint64_t chunks = std::min<std::uint64_t>(blocks, 64);
    parallel_jobs<Tally>(
        chunks,
        [&](std::uint64_t chunk) {
            Tally tally;
            auto& user_success = tally.user_success;
            auto& user_total = tally.user_total;
            auto& rows_collided = tally.rows_collided;
            auto& rows_total = tally.rows_total;
            auto& eligible = tally.eligible;
            auto& eligible_success = tally.eligible_success;
            std::uint64_t lo = chunk * blocks / chunks, hi = (chunk + 1) * blocks / chunks;
            for (std::uint64_t b = lo; b < hi; ++b) {
                Xoshiro256 rng(hash_seed(seed, b));
                // per-user signatures: channel choice per row
                std::vector<std::vector<unsigned>> sig(T, std::vector<unsigned>(n));
                for (auto& s : sig)
                    for (auto& v : s) v = (unsigned)rng.below(Z);
                // per-user information arrays and code arrays
                std::vector<std::vector<Vec>> info(T, std::vector<Vec>(N, Vec(k)));
                std::vector<packet::CodeArray> arrays(T);
                for (unsigned u = 0; u < T; ++u) {
                    arrays[u].rows.assign(n, Vec(N, 0));
                    arrays[u].row_status.assign(n, packet::RowStatus::Unknown);
                    for (unsigned s = 0; s < N; ++s) {
                        for (auto& v : info[u][s]) v = (Label)rng.below(f.q());
                        Vec cw = code.encode_matrix(info[u][s]);
                        for (unsigned i = 0; i < n; ++i) arrays[u].rows[i][s] = cw[i];
                    }
                }
                // collisions: same channel, same row interval
                for (unsigned u = 0; u < T; ++u) {
                    unsigned corrupted = 0;
                    for (unsigned i = 0; i < n; ++i) {
                        bool collided = false;
                        for (unsigned v = 0; v < T; ++v)
                            if (v != u && sig[v][i] == sig[u][i]) collided = true;
                        ++rows_total;
                        if (collided) {
                            ++rows_collided;
                            ++corrupted;
                            // a collision is received as a random row
                            for (unsigned s = 0; s < N; ++s)
                                arrays[u].rows[i][s] = (Label)rng.below(f.q());
                        }
                    }
                    ++user_total;
                    bool ok = false;
                    try {
                        auto block = packet::mk_decode(arrays[u], code);
                        ok = true;
                        for (unsigned s = 0; s < N && ok; ++s)
                            for (unsigned i = 0; i < k; ++i)
                                if (block.packets[i][s] != info[u][s][i]) ok = false;
                    } catch (const Error&) {
                        ok = false;
                    }
                    if (ok) ++user_success;
                    if (corrupted < n - k - 1) {
                        ++eligible;
                        if (ok) ++eligible_success;
                    }
                }
            }
            return tally;
        },
        [&](const Tally& t) {
            sum.user_success += t.user_success;
            sum.user_total += t.user_total;
            sum.rows_collided += t.rows_collided;
            sum.rows_total += t.rows_total;
            sum.eligible += t.eligible;
            sum.eligible_success += t.eligible_success;
        });
    rep.metrics["row_collision_rate"] = bernoulli_metric(sum.rows_collided, sum.rows_total);
    rep.metrics["user_success"] = bernoulli_metric(sum.user_success, sum.user_total);
    rep.metrics["success_given_eligible"] = bernoulli_metric(sum.eligible_success, sum.eligible);
    double phat = (double)sum.rows_collided / (double)sum.rows_total;
    rep.put("eta_measured", (double)T / (double)pa.Z * (1.0 - phat));
    rep.put("eta_formula", array_access_efficiency(pa));
    rep.put("goodput",
            (double)sum.user_success * k / ((double)blocks * (double)pa.Z * (double)n));
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0__).count();
    return rep;
}

double or_channel_rate(unsigned T, double p) {
    auto h = [](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    };
    double pT = std::pow(p, (double)T);
    double pT1 = std::pow(p, (double)T - 1.0);
    return (double)T * (h(pT) - p * h(pT1));
}

double or_channel_rate(unsigned M, unsigned T, double p) {
    if (M == 2) return or_channel_rate(T, p);
    return or_mary_rate(M, T, p);
}

double or_mary_rate(unsigned M, unsigned T, double prob0) {
    if (M < 2 || M > 16) throw BadParameters("M in 2..16 for the exact evaluator");
    // input distribution: prob0 on symbol 0, (1-prob0)/(M-1) on each other symbol
    std::vector<double> q(M, (1.0 - prob0) / (double)(M - 1));
    q[0] = prob0;
    // distribution of the set S of symbols sent by T-1 interferers:
    // P(S subset of B) = q(B)^(T-1); P(S = B) by inclusion-exclusion
    unsigned full = (1u << M);
    std::vector<double> qsum(full, 0.0);
    for (unsigned mask = 0; mask < full; ++mask) {
        double s = 0;
        for (unsigned i = 0; i < M; ++i)
            if (mask >> i & 1) s += q[i];
        qsum[mask] = s;
    }
    std::vector<double> pset(full, 0.0);
    for (unsigned mask = 0; mask < full; ++mask) {
        // subset-sum inclusion-exclusion over submasks
        double total = 0;
        unsigned sub = mask;
        while (true) {
            int bits_removed = __builtin_popcount(mask ^ sub);
            double term = std::pow(qsum[sub], (double)T - 1.0);
            total += (bits_removed % 2 ? -term : term);
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
        pset[mask] = total;
    }
    // Y = S union {X}; I(X;Y) = H(Y) - H(Y|X)
    std::vector<double> py(full, 0.0);
    double hyx = 0;
    for (unsigned x = 0; x < M; ++x) {
        std::vector<double> pyx(full, 0.0);
        for (unsigned mask = 0; mask < full; ++mask) {
            if (pset[mask] <= 0) continue;
            pyx[mask | (1u << x)] += pset[mask];
        }
        double h = 0;
        for (double v : pyx)
            if (v > 1e-300) h -= v * std::log2(v);
        hyx += q[x] * h;
        for (unsigned m2 = 0; m2 < full; ++m2) py[m2] += q[x] * pyx[m2];
    }
    double hy = 0;
    for (double v : py)
        if (v > 1e-300) hy -= v * std::log2(v);
    return (double)T * (hy - hyx);
}

namespace {

// golden-section refinement after a coarse grid scan
template <typename F>
std::pair<double, double> maximize(F f, double lo, double hi, int grid_points) {
    double best_x = lo, best_v = f(lo);
    for (int i = 1; i <= grid_points; ++i) {
        double x = lo + (hi - lo) * (double)i / (double)grid_points;
        double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    double a = std::max(lo, best_x - (hi - lo) / grid_points);
    double b = std::min(hi, best_x + (hi - lo) / grid_points);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-9) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    double x = 0.5 * (a + b);
    return {x, f(x)};
}

}  // namespace

OrOptimum or_optimal(unsigned M, unsigned T) {
    if (M == 2) {
        auto [p, rate] = maximize([T](double p) { return or_channel_rate(T, p); }, 0.0, 1.0, 1000);
        return {p, rate};
    }
    // Theorem distribution: 1 - (M-1)ln2/T on the common symbol
    double prob0 = 1.0 - (double)(M - 1) * std::log(2.0) / (double)T;
    if (prob0 < 0) prob0 = 0;
    return {prob0, or_mary_rate(M, T, prob0)};
}

double signature_error_bound(unsigned M, double T, unsigned L, SignatureScheme scheme) {
    if (L < 1) throw BadParameters("L >= 1");
    if (scheme == SignatureScheme::Symmetric) {
        double base = 1.0 - std::pow(1.0 - 1.0 / (double)M, T - 1.0);
        return (double)(M - 1) * std::pow(base, (double)L);
    }
    double p = (double)(M - 1) * std::log(2.0) / T;  // transmit-other probability
    double pt = p * T - 1.0;
    if (pt < 0) pt = 0;
    double base = 1.0 - std::pow(1.0 - 1.0 / (double)(M - 1), pt);
    return (double)(M - 1) * std::pow(base, (double)L);
}

double signature_rate(unsigned M, double T, unsigned L, SignatureScheme scheme) {
    if (scheme == SignatureScheme::Symmetric)
        return T * std::log2((double)M) / ((double)L * (double)M);
    double p = (double)(M - 1) * std::log(2.0) / T;
    auto h = [](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    };
    return T * (h(p) + p * std::log2((double)(M - 1))) / ((double)L * (double)M);
}

SimReport signature_sim(unsigned M, unsigned T, unsigned L, SignatureScheme scheme,
                        std::uint64_t trials, std::uint64_t seed) {
    SimReport rep;
    rep.name = "signature-sim";
    rep.seed = seed;
    auto t0__ = std::chrono::steady_clock::now();
    rep.params = "{\"M\": " + std::to_string(M) + ", \"T\": " + std::to_string(T) + ", \"L\": " + std::to_string(L) + ", \"trials\": " + std::to_string(trials) + "}";
    std::uint64_t errors = 0;
    double p_other = (double)(M - 1) * std::log(2.0) / (double)T;  // asymmetric scheme
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        Xoshiro256 rng(hash_seed(seed, trial));
        // user 0 signature set: M random signatures (symmetric); asymmetric:
        // the common-symbol signature is reserved for the first message and
        // the others avoid the common symbol
        std::vector<std::vector<unsigned>> sigs(M, std::vector<unsigned>(L));
        for (unsigned m = 0; m < M; ++m)
            for (unsigned s = 0; s < L; ++s) {
                if (scheme == SignatureScheme::Symmetric)
                    sigs[m][s] = (unsigned)rng.below(M);
                else
                    sigs[m][s] = m == 0 ? 0 : (unsigned)(1 + rng.below(M - 1));
            }
        unsigned sent;
        if (scheme == SignatureScheme::Symmetric) {
            sent = (unsigned)rng.below(M);
        } else {
            sent = rng.bernoulli(1.0 - p_other) ? 0u : (unsigned)(1 + rng.below(M - 1));
        }
        // the bounded error event: the T-1 other users together generate one
        // of the M-1 other valid signatures in L slots
        std::vector<std::vector<bool>> present(L, std::vector<bool>(M, false));
        for (unsigned u = 1; u < T; ++u) {
            if (scheme == SignatureScheme::Symmetric) {
                for (unsigned s = 0; s < L; ++s) present[s][rng.below(M)] = true;
            } else {
                bool common = rng.bernoulli(1.0 - p_other);
                for (unsigned s = 0; s < L; ++s)
                    present[s][common ? 0 : (unsigned)(1 + rng.below(M - 1))] = true;
            }
        }
        bool error = false;
        for (unsigned m = 0; m < M && !error; ++m) {
            if (m == sent) continue;
            bool covered = true;
            for (unsigned s = 0; s < L && covered; ++s)
                if (!present[s][sigs[m][s]]) covered = false;
            if (covered) error = true;
        }
        if (error) ++errors;
    }
    rep.metrics["pe"] = bernoulli_metric(errors, trials);
    rep.put("pe_bound", signature_error_bound(M, T, L, scheme));
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0__).count();
    return rep;
}

Titlebaum titlebaum(unsigned M, unsigned L) {
    if (L == 0) L = M;
    if (L > M) throw BadParameters("shortened length L must be <= M");
    Titlebaum out;
    out.M = M;
    out.L = L;
    // second row of the extended encoding matrix: (0, 1, a, a^2, ...)
    Vec row2(M);
    std::vector<Label> addsub;  // field add for labels
    if (is_prime(M)) {
        for (unsigned j = 0; j < M; ++j) row2[j] = (Label)(j % M);
        // integer residues: row2 = (0, 1, 2, ..., M-1)
        for (unsigned t = 1; t < M; ++t) {
            Vec sig(L);
            for (unsigned j = 0; j < L; ++j) sig[j] = (Label)((t * row2[j]) % M);
            out.signatures.push_back(sig);
        }
    } else {
        // prime powers via GF(2^m)
        unsigned m = 0;
        while ((1u << m) < M) ++m;
        if ((1u << m) != M) throw BadParameters("M must be prime or a power of two");
        GaloisField f = GaloisField::binary_default(m);
        row2[0] = 0;
        for (unsigned j = 1; j < M; ++j) row2[j] = f.alpha_pow(j - 1);
        for (unsigned t = 1; t < M; ++t) {
            Vec sig(L);
            for (unsigned j = 0; j < L; ++j) sig[j] = f.mul((Label)t, row2[j]);
            out.signatures.push_back(sig);
        }
    }
    return out;
}

Vec Titlebaum::modulated(unsigned user, unsigned message) const {
    Vec sig = signature(user);
    if (is_prime(M)) {
        for (auto& v : sig) v = (Label)((v + message) % M);
    } else {
        unsigned m = 0;
        while ((1u << m) < M) ++m;
        GaloisField f = GaloisField::binary_default(m);
        for (auto& v : sig) v = f.add(v, (Label)message);
    }
    return sig;
}

TitlebaumDecode titlebaum_decode(const Titlebaum& code, unsigned user,
                                 const std::vector<std::set<Label>>& observed) {
    unsigned best_m = 0, best_score = 0;
    bool tie = false;
    for (unsigned msg = 0; msg < code.M; ++msg) {
        Vec w = code.modulated(user, msg);
        unsigned score = 0;
        for (unsigned s = 0; s < code.L; ++s)
            if (observed[s].count(w[s])) ++score;
        if (score > best_score || msg == 0) {
            best_score = score;
            best_m = msg;
            tie = false;
        } else if (score == best_score) {
            tie = true;
        }
    }
    return {best_m, tie};
}

double titlebaum_pe_bound(unsigned M, unsigned T, unsigned L) {
    if (T < 1 || L < 1) throw BadParameters("T, L >= 1");
    if (T - 1 < L) return 0.0;
    double binom = 1.0;
    for (unsigned i = 0; i < L; ++i) binom *= (double)(T - 1 - i) / (double)(i + 1);
    double lfact = 1.0;
    for (unsigned i = 2; i <= L; ++i) lfact *= (double)i;
    return (double)(M - 1) * std::pow(1.0 / (double)M, (double)L) * binom * lfact;
}

SimReport titlebaum_sim(unsigned M, unsigned T, unsigned L, std::uint64_t trials,
                        std::uint64_t seed) {
    if (T > M - 1) throw BadParameters("at most M-1 users");
    Titlebaum code = titlebaum(M, L ? L : M);
    L = code.L;
    SimReport rep;
    rep.name = "titlebaum";
    rep.seed = seed;
    auto t0__ = std::chrono::steady_clock::now();
    rep.params = "{\"M\": " + std::to_string(M) + ", \"T\": " + std::to_string(T) + ", \"L\": " + std::to_string(L) + ", \"trials\": " + std::to_string(trials) + "}";
    std::uint64_t errors = 0;
    const std::uint64_t chunks = std::min<std::uint64_t>(trials, 64);
    parallel_jobs<std::uint64_t>(
        chunks,
        [&](std::uint64_t c) {
            std::uint64_t lo = c * trials / chunks, hi = (c + 1) * trials / chunks;
            std::uint64_t local = 0;
            for (std::uint64_t trial = lo; trial < hi; ++trial) {
                Xoshiro256 rng(hash_seed(seed, trial));
                std::vector<unsigned> msg(T);
                for (auto& m : msg) m = (unsigned)rng.below(M);
                std::vector<std::set<Label>> observed(L);
                for (unsigned u = 0; u < T; ++u) {
                    Vec w = code.modulated(u + 1, msg[u]);
                    for (unsigned s = 0; s < L; ++s) observed[s].insert(w[s]);
                }
                // ties break toward the lowest message index; an error is
                // counted only when the true message loses
                auto dec = titlebaum_decode(code, 1, observed);
                if (dec.message != msg[0]) ++local;
            }
            return local;
        },
        [&](std::uint64_t local) { errors += local; });
    rep.metrics["pe"] = bernoulli_metric(errors, trials);
    rep.put("pe_bound", titlebaum_pe_bound(M, T, L));
    rep.put("eta", (double)T * std::log2((double)M) / ((double)L * (double)M));
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0__).count();
    return rep;
}

namespace {

// component-wise union cover test: does the union of `chosen` cover `v`?
bool covers(const std::vector<Vec>& words, const std::vector<size_t>& chosen, const Vec& v) {
    for (size_t pos = 0; pos < v.size(); ++pos) {
        bool found = false;
        for (size_t c : chosen)
            if (words[c][pos] == v[pos]) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool sic_check(const SicCode& code) {
    size_t U = code.words.size();
    unsigned T = std::min<unsigned>(code.T, (unsigned)U - 1);
    // feasibility: C(U,T) * U within the enumeration cap
    double work = (double)U;
    for (unsigned i = 0; i < T; ++i) work *= (double)(U - i) / (double)(i + 1);
    if (work > 1e8) throw TooLarge("C(U,T)*U exceeds the enumeration cap");
    std::vector<size_t> idx(T);
    for (unsigned i = 0; i < T; ++i) idx[i] = i;
    while (true) {
        for (size_t v = 0; v < U; ++v) {
            if (std::find(idx.begin(), idx.end(), v) != idx.end()) continue;
            if (covers(code.words, idx, code.words[v])) return false;
        }
        // next T-combination
        size_t i = T;
        bool done = true;
        while (i > 0) {
            --i;
            if (idx[i] + (T - i) < U) {
                ++idx[i];
                for (size_t j = i + 1; j < T; ++j) idx[j] = idx[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return true;
}

SicCode sic_rs_symbols(unsigned q, unsigned k, unsigned n) {
    unsigned m = 0;
    while ((1u << m) < q) ++m;
    if ((1u << m) != q) throw BadParameters("q must be a power of two here");
    GaloisField f = GaloisField::binary_default(m);
    if (n == 0) n = q - 1;
    RsCode code(f, n, k, n == q - 1 ? RsVariant::Standard : RsVariant::Shortened);
    if (k >= 2 && !((double)(k - 1) * 1 < n)) throw BadParameters("need T >= 1");
    SicCode out;
    out.q = q;
    out.n = n;
    out.T = k > 1 ? (n - 1) / (k - 1) : n;  // largest T with T < n/(k-1)
    if (k > 1 && out.T * (k - 1) >= n) --out.T;
    out.U = 1;
    for (unsigned i = 0; i < k; ++i) out.U *= q;
    Vec x(k, 0);
    while (true) {
        out.words.push_back(code.encode_matrix(x));
        unsigned pos = 0;
        while (pos < k) {
            x[pos] = (Label)((x[pos] + 1) % q);
            if (x[pos] != 0) break;
            ++pos;
        }
        if (pos == k) break;
    }
    return out;
}

SicCode sic_from_rs(unsigned q, unsigned k, unsigned n) {
    SicCode symbols = sic_rs_symbols(q, k, n);
    // map each symbol to a weight-1 binary word of length q
    SicCode out;
    out.U = symbols.U;
    out.q = 2;
    out.n = symbols.n * q;
    out.T = symbols.T;
    for (const auto& w : symbols.words) {
        Vec b(out.n, 0);
        for (size_t i = 0; i < w.size(); ++i) b[i * q + w[i]] = 1;
        out.words.push_back(b);
    }
    return out;
}

SicCode sic_compose(const SicCode& inner, const SicCode& outer) {
    if (outer.q > inner.U) throw BadParameters("outer alphabet exceeds inner codebook");
    SicCode out;
    out.U = outer.U;
    out.n = inner.n * outer.n;
    out.q = inner.q;
    out.T = std::min(inner.T, outer.T);
    for (const auto& w : outer.words) {
        Vec comp;
        comp.reserve(out.n);
        for (Label s : w) {
            const Vec& rep = inner.words.at(s);
            comp.insert(comp.end(), rep.begin(), rep.end());
        }
        out.words.push_back(comp);
    }
    return out;
}

SicCode sic_single_position(unsigned n, unsigned q, unsigned T) {
    SicCode out;
    out.U = n * (q - 1);
    out.n = n;
    out.q = q;
    out.T = T;
    for (unsigned v = 1; v < q; ++v)
        for (unsigned pos = 0; pos < n; ++pos) {
            Vec w(n, 0);
            w[pos] = (Label)v;
            out.words.push_back(w);
        }
    return out;
}

Vec XorAccess::signature(unsigned user) const {
    if (user >= code.n()) throw BadParameters("user index exceeds the population");
    return code.H_T().row(user);
}

Vec XorAccess::channel_output(const std::vector<std::pair<unsigned, Label>>& active) const {
    const GaloisField& f = code.field();
    Vec z(code.n() - code.k(), 0);
    for (auto [user, t] : active) {
        if (t == 0) throw BadParameters("information symbols must be nonzero");
        Vec s = signature(user);
        for (size_t i = 0; i < z.size(); ++i) z[i] = f.add(z[i], f.mul(t, s[i]));
    }
    return z;
}

DecodeResult XorAccess::decode(const Vec& z) const { return code.decode_syndrome(z); }

double xor_rate_asymptote(double c) {
    double e = std::exp(-2.0 * c);
    return c * e * std::log2((1.0 + e) / (1.0 - e));
}

}  // namespace access
}  // namespace rsc
