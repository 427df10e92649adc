#include "rscod/constrained.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rsc {
namespace constrained {

AvoidanceConfig::AvoidanceConfig(const RsCode& c, unsigned kappa_, unsigned r_, std::set<Label> a)
    : code(&c), kappa(kappa_), r(r_), avoid(std::move(a)) {
    if (kappa + r != c.k()) throw BadParameters("kappa + r must equal k");
}

bool AvoidanceConfig::feasible() const {
    if (avoid.empty()) return true;
    double lhs = (double)(code->n() - (kappa + r));
    double rhs = (double)(code->field().q() - avoid.size()) / (double)avoid.size();
    return lhs < rhs;
}

AvoidResult avoid_encode(const AvoidanceConfig& cfg, const Vec& info) {
    const RsCode& code = *cfg.code;
    const GaloisField& f = code.field();
    if (info.size() != cfg.kappa) throw BadParameters("info length must be kappa");
    for (Label v : info)
        if (cfg.avoid.count(v)) throw BadParameters("information symbols must avoid A");
    // lexicographic search over control words from (alphabet \ A)^r
    std::vector<Label> alphabet;
    for (unsigned v = 0; v < f.q(); ++v)
        if (!cfg.avoid.count((Label)v)) alphabet.push_back((Label)v);
    std::vector<size_t> odo(cfg.r, 0);
    while (true) {
        Vec x(code.k());
        std::copy(info.begin(), info.end(), x.begin());
        Vec control(cfg.r);
        for (unsigned i = 0; i < cfg.r; ++i) {
            control[i] = alphabet[odo[i]];
            x[cfg.kappa + i] = control[i];
        }
        Vec cw = vec_mat(f, x, code.G_sys());
        bool clean = true;
        for (Label v : cw)
            if (cfg.avoid.count(v)) {
                clean = false;
                break;
            }
        if (clean) return {cw, control};
        // next control word, most significant digit last
        size_t pos = cfg.r;
        while (pos > 0) {
            --pos;
            if (++odo[pos] < alphabet.size()) break;
            odo[pos] = 0;
            if (pos == 0) throw NoControlWord("no control word eliminates the forbidden symbols");
        }
        if (cfg.r == 0) throw NoControlWord("no control symbols available");
    }
}

Vec avoid_decode(const AvoidanceConfig& cfg, const Vec& codeword) {
    return Vec(codeword.begin(), codeword.begin() + cfg.kappa);
}

namespace {

struct Run {
    int symbol;
    unsigned length;
};

Run leading_run(const std::vector<int>& w) {
    Run r{w.front(), 1};
    for (size_t i = 1; i < w.size() && w[i] == r.symbol; ++i) ++r.length;
    return r;
}

Run trailing_run(const std::vector<int>& w) {
    Run r{w.back(), 1};
    for (size_t i = w.size() - 1; i-- > 0 && w[i] == r.symbol;) ++r.length;
    return r;
}

// interior runs of a word (neither touching the front nor the back)
unsigned min_interior_run(const std::vector<int>& w) {
    unsigned best = (unsigned)w.size();
    size_t i = 0;
    std::vector<std::pair<int, unsigned>> runs;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        runs.push_back({w[i], (unsigned)(j - i)});
        i = j;
    }
    for (size_t r = 1; r + 1 < runs.size(); ++r) best = std::min(best, runs[r].second);
    return best;
}

bool junction_legal(const Run& trail, const Run& lead, unsigned d) {
    if (trail.symbol == lead.symbol) return trail.length + lead.length >= d + 1;
    return trail.length >= d + 1 && lead.length >= d + 1;
}

}  // namespace

RllCode rll_table_7_1() {
    RllCode c;
    c.d = 1;
    c.length = 5;
    c.d_min = 1;
    c.words = {
        {{0, 0, 0, 1, 1}},
        {{0, 0, 1, 1, 1}},
        {{1, 1, 0, 0, 0}},
        {{1, 1, 1, 0, 0}},
        {{0, 0, 0, 0, 1}, {0, 0, 1, 1, 0}},
        {{1, 1, 1, 1, 0}, {1, 1, 0, 0, 1}},
        {{0, 1, 1, 1, 1}, {1, 0, 0, 1, 1}},
        {{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}},
    };
    return c;
}

RllCode rll_generate(unsigned length, unsigned d, unsigned d_min_target) {
    if (length > 20) throw TooLarge("generator limited to short blocks");
    RllCode c;
    c.d = d;
    c.length = length;
    c.d_min = d_min_target;
    // words whose every run (including boundaries) is at least d+1 can be
    // concatenated freely
    std::vector<std::vector<int>> pool;
    for (unsigned w = 0; w < (1u << length); ++w) {
        std::vector<int> bits(length);
        for (unsigned i = 0; i < length; ++i) bits[i] = (w >> i) & 1;
        unsigned run = 1, shortest = length;
        for (unsigned i = 1; i < length; ++i) {
            if (bits[i] == bits[i - 1]) {
                ++run;
            } else {
                shortest = std::min(shortest, run);
                run = 1;
            }
        }
        shortest = std::min(shortest, run);
        if (shortest >= d + 1) pool.push_back(bits);
    }
    for (const auto& cand : pool) {
        bool ok = true;
        for (const auto& kept : c.words) {
            unsigned dist = 0;
            for (unsigned i = 0; i < length; ++i)
                if (kept[0][i] != cand[i]) ++dist;
            if (dist < d_min_target) {
                ok = false;
                break;
            }
        }
        if (ok) c.words.push_back({cand});
    }
    return c;
}

std::vector<int> rll_encode(const RllCode& code, const std::vector<unsigned>& messages) {
    std::vector<int> stream;
    bool have_state = false;
    Run state{0, 0};
    for (size_t idx = 0; idx < messages.size(); ++idx) {
        const auto& alts = code.words.at(messages[idx]);
        const std::vector<int>* chosen = nullptr;
        for (const auto& alt : alts) {
            if (have_state && !junction_legal(state, leading_run(alt), code.d)) continue;
            // one-symbol look-ahead: the next message must keep a legal option
            if (idx + 1 < messages.size() && alts.size() > 1) {
                bool follow = false;
                for (const auto& nxt : code.words.at(messages[idx + 1]))
                    if (junction_legal(trailing_run(alt), leading_run(nxt), code.d)) follow = true;
                if (!follow) continue;
            }
            chosen = &alt;
            break;
        }
        if (!chosen) throw ConstraintViolation("no alternative satisfies the run constraint");
        stream.insert(stream.end(), chosen->begin(), chosen->end());
        state = trailing_run(*chosen);
        have_state = true;
    }
    return stream;
}

std::vector<unsigned> rll_decode_hard(const RllCode& code, const std::vector<int>& stream) {
    if (stream.size() % code.length) throw ConstraintViolation("stream length mismatch");
    std::vector<unsigned> out;
    for (size_t off = 0; off < stream.size(); off += code.length) {
        std::vector<int> block(stream.begin() + off, stream.begin() + off + code.length);
        bool found = false;
        for (unsigned msg = 0; msg < code.words.size() && !found; ++msg)
            for (const auto& alt : code.words[msg])
                if (alt == block) {
                    out.push_back(msg);
                    found = true;
                    break;
                }
        if (!found) throw ConstraintViolation("block is not a code word");
    }
    return out;
}

std::vector<unsigned> rll_decode_soft(const RllCode& code, const std::vector<double>& soft) {
    if (soft.size() % code.length) throw BadParameters("soft length mismatch");
    std::vector<unsigned> out;
    for (size_t off = 0; off < soft.size(); off += code.length) {
        double best = -1e300;
        unsigned best_msg = 0;
        for (unsigned msg = 0; msg < code.words.size(); ++msg)
            for (const auto& alt : code.words[msg]) {
                double s = 0;
                for (unsigned i = 0; i < code.length; ++i)
                    s += soft[off + i] * (alt[i] ? 1.0 : -1.0);
                if (s > best) {
                    best = s;
                    best_msg = msg;
                }
            }
        out.push_back(best_msg);
    }
    return out;
}

unsigned min_run_length(const std::vector<int>& stream) {
    return min_interior_run(stream);
}

double rll_rs_rate_product(double rs_rate, double rll_rate, unsigned d) {
    return rs_rate * rll_rate * (double)(d + 1);
}

namespace {

std::vector<Vec> span_codewords(const GaloisField& f, const std::vector<Vec>& basis) {
    size_t k = basis.size();
    size_t n = basis.empty() ? 0 : basis[0].size();
    std::vector<Vec> out;
    Vec x(k, 0);
    while (true) {
        Vec cw(n, 0);
        for (size_t i = 0; i < k; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(x[i], basis[i][j]));
        }
        out.push_back(cw);
        size_t pos = 0;
        while (pos < k) {
            x[pos] = (Label)((x[pos] + 1) % f.q());
            if (x[pos] != 0) break;
            ++pos;
        }
        if (pos == k) break;
    }
    return out;
}

unsigned span_min_weight(const GaloisField& f, const std::vector<Vec>& basis) {
    unsigned best = basis.empty() ? 0 : (unsigned)basis[0].size() + 1;
    for (const auto& cw : span_codewords(f, basis)) {
        unsigned w = 0;
        for (Label v : cw)
            if (v) ++w;
        if (w > 0) best = std::min(best, w);
    }
    return best;
}

// dimension-(k-1) subspace bases of the span, via functional kernels
std::vector<std::vector<Vec>> subspace_bases(const GaloisField& f, const std::vector<Vec>& basis) {
    size_t k = basis.size();
    std::vector<std::vector<Vec>> out;
    // functionals phi over F_q^k, first nonzero coefficient normalized to 1
    Vec phi(k, 0);
    while (true) {
        size_t pos = 0;
        while (pos < k) {
            phi[pos] = (Label)((phi[pos] + 1) % f.q());
            if (phi[pos] != 0) break;
            ++pos;
        }
        if (pos == k) break;
        size_t lead = 0;
        while (lead < k && phi[lead] == 0) ++lead;
        if (phi[lead] != 1) continue;
        // kernel basis in info space: unit vectors off the lead plus
        // corrections
        std::vector<Vec> kb;
        for (size_t i = 0; i < k; ++i) {
            if (i == lead) continue;
            Vec v(k, 0);
            v[i] = 1;
            v[lead] = f.neg(phi[i]);
            kb.push_back(v);
        }
        std::vector<Vec> sub;
        for (const auto& v : kb) {
            Vec cw(basis[0].size(), 0);
            for (size_t i = 0; i < k; ++i) {
                if (v[i] == 0) continue;
                for (size_t j = 0; j < cw.size(); ++j)
                    cw[j] = f.add(cw[j], f.mul(v[i], basis[i][j]));
            }
            sub.push_back(cw);
        }
        out.push_back(sub);
    }
    return out;
}

void odp_del_dfs(const GaloisField& f, const std::vector<Vec>& basis,
                 std::vector<unsigned>& current, std::vector<unsigned>& best) {
    current.push_back(span_min_weight(f, basis));
    if (basis.size() == 1) {
        // profiles compare lexicographically from the full code downward
        if (best.empty() || current > best) best = current;
        current.pop_back();
        return;
    }
    // explore only distance-maximizing subcodes at each level
    auto subs = subspace_bases(f, basis);
    unsigned top = 0;
    std::vector<unsigned> dist(subs.size());
    for (size_t i = 0; i < subs.size(); ++i) {
        dist[i] = span_min_weight(f, subs[i]);
        top = std::max(top, dist[i]);
    }
    for (size_t i = 0; i < subs.size(); ++i)
        if (dist[i] == top) odp_del_dfs(f, subs[i], current, best);
    current.pop_back();
}

std::string span_key(const GaloisField& f, const std::vector<Vec>& basis) {
    Mat m(basis.size(), basis[0].size());
    for (size_t i = 0; i < basis.size(); ++i) m.set_row(i, basis[i]);
    rref(f, m);
    std::string key;
    for (Label v : m.a) {
        key += (char)('0' + (v & 15));
        key += (char)('0' + (v >> 4));
    }
    return key;
}

void odp_ext_dfs(const GaloisField& f, const std::vector<Vec>& all, unsigned k,
                 std::vector<Vec>& chain, std::vector<unsigned>& current,
                 std::vector<unsigned>& best) {
    if (chain.size() == k) {
        if (best.empty() || current > best) best = current;
        return;
    }
    // group extension candidates by the resulting span
    std::set<std::string> seen;
    unsigned top = 0;
    std::vector<std::pair<Vec, unsigned>> options;
    for (const auto& cand : all) {
        std::vector<Vec> trial = chain;
        trial.push_back(cand);
        Mat m((unsigned)trial.size(), (unsigned)cand.size());
        for (size_t i = 0; i < trial.size(); ++i) m.set_row(i, trial[i]);
        if (mat_rank(f, m) != trial.size()) continue;
        std::string key = span_key(f, trial);
        if (!seen.insert(key).second) continue;
        unsigned d = span_min_weight(f, trial);
        top = std::max(top, d);
        options.push_back({cand, d});
    }
    for (const auto& [cand, d] : options) {
        if (d != top) continue;
        chain.push_back(cand);
        current.push_back(d);
        odp_ext_dfs(f, all, k, chain, current, best);
        current.pop_back();
        chain.pop_back();
    }
}

}  // namespace

std::vector<unsigned> odp(const GaloisField& f, const Mat& G, OdpDirection dir, OdpMode mode) {
    size_t k = G.rows;
    double space = 1;
    for (size_t i = 0; i < k; ++i) space *= f.q();
    if (space > 4096.0 && mode == OdpMode::Exhaustive)
        throw TooLarge("exhaustive profile search limited to small codes");
    std::vector<Vec> rows;
    for (size_t i = 0; i < k; ++i) rows.push_back(G.row(i));

    if (dir == OdpDirection::Deletion) {
        if (mode == OdpMode::Greedy) {
            // the profile of the given encoding matrix, last row deleted first
            std::vector<unsigned> prof;
            std::vector<Vec> basis = rows;
            while (!basis.empty()) {
                prof.push_back(span_min_weight(f, basis));
                basis.pop_back();
            }
            return prof;
        }
        std::vector<unsigned> best, current;
        odp_del_dfs(f, rows, current, best);
        return best;
    }

    // extension: grow from a maximum-weight codeword, each step adding the
    // vector that maximizes the sub-code distance
    auto all = span_codewords(f, rows);
    if (mode == OdpMode::Exhaustive) {
        std::vector<Vec> chain;
        std::vector<unsigned> current, best;
        odp_ext_dfs(f, all, (unsigned)k, chain, current, best);
        return best;
    }
    std::vector<unsigned> prof;
    std::vector<Vec> chain;
    // delta_1: maximum codeword weight
    unsigned bestw = 0;
    Vec start;
    for (const auto& cw : all) {
        unsigned w = 0;
        for (Label v : cw)
            if (v) ++w;
        if (w > bestw) {
            bestw = w;
            start = cw;
        }
    }
    chain.push_back(start);
    prof.push_back(bestw);
    while (chain.size() < k) {
        unsigned bestd = 0;
        Vec pick;
        for (const auto& cand : all) {
            // skip vectors already in the span
            std::vector<Vec> trial = chain;
            trial.push_back(cand);
            Mat m((unsigned)trial.size(), (unsigned)cand.size());
            for (size_t i = 0; i < trial.size(); ++i) m.set_row(i, trial[i]);
            if (mat_rank(f, m) != trial.size()) continue;
            unsigned d = span_min_weight(f, trial);
            if (d > bestd) {
                bestd = d;
                pick = cand;
            }
        }
        chain.push_back(pick);
        prof.push_back(bestd);
    }
    return prof;
}

SameWeightCode::SameWeightCode(const GaloisField& f, unsigned n, unsigned k)
    : f_(f), base_(f, n, k), offset_(n) {
    for (unsigned j = 0; j < n; ++j) offset_[j] = f.alpha_pow((long long)k * j);
}

Vec SameWeightCode::encode(const Vec& info) const {
    return vec_add(f_, base_.encode_matrix(info), offset_);
}

SameWeightCode::Decode SameWeightCode::decode(const Vec& received) const {
    Vec shifted = vec_sub(f_, received, offset_);
    auto res = base_.decode_errors(shifted);
    if (!res.ok()) return {false, {}};
    return {true, res.info};
}

SameWeightCode::Decode SameWeightCode::decode_with_erasures(
    const Vec& received, const std::vector<size_t>& erasures) const {
    Vec shifted = vec_sub(f_, received, offset_);
    auto res = base_.decode_erasures(shifted, erasures);
    if (!res.ok()) return {false, {}};
    return {true, res.info};
}

unsigned SameWeightCode::max_same_symbol() const {
    unsigned k = base_.k(), n = base_.n();
    double space = 1;
    for (unsigned i = 0; i < k; ++i) space *= f_.q();
    if (space > 1e6) throw TooLarge("exhaustive scan limited to small codes");
    Vec x(k, 0);
    unsigned worst = 0;
    while (true) {
        Vec w = encode(x);
        std::vector<unsigned> count(f_.q(), 0);
        for (Label v : w) worst = std::max(worst, ++count[v]);
        unsigned pos = 0;
        while (pos < k) {
            x[pos] = (Label)((x[pos] + 1) % f_.q());
            if (x[pos] != 0) break;
            ++pos;
        }
        if (pos == k) break;
    }
    (void)n;
    return worst;
}

}  // namespace constrained
}  // namespace rsc
