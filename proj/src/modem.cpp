#include "rscod/modem.hpp"

#include <algorithm>
#include <cmath>

#include "rscod/capacity.hpp"

namespace rsc {
namespace modem {

double AwgnChannel::p_bsc() const { return cap::q_func(amp_ / std::sqrt(sigma2_)); }

Bits hard_decision(const Soft& soft) {
    Bits b(soft.size());
    for (size_t i = 0; i < soft.size(); ++i) b[i] = soft[i] >= 0.0 ? 1 : 0;
    return b;
}

Bits spc_soft_decode(const Soft& soft) {
    Bits b = hard_decision(soft);
    int parity = 0;
    for (int v : b) parity ^= v;
    if (parity) {
        size_t weakest = 0;
        for (size_t i = 1; i < soft.size(); ++i)
            if (std::fabs(soft[i]) < std::fabs(soft[weakest])) weakest = i;
        b[weakest] ^= 1;
    }
    return b;
}

double coding_gain_db(unsigned d_min, unsigned k, unsigned n) {
    return 10.0 * std::log10((double)d_min * (double)k / (double)n);
}

double union_bound(unsigned k, unsigned d_min, double rate, double eb_n0) {
    return std::pow(2.0, (double)k) * cap::q_func(std::sqrt((double)d_min * rate * eb_n0));
}

Bits label_to_bits(Label v, unsigned m) {
    Bits b(m);
    for (unsigned i = 0; i < m; ++i) b[i] = (v >> i) & 1;
    return b;
}

Label bits_to_label(const Bits& bits) {
    Label v = 0;
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v |= (Label)(1u << i);
    return v;
}

double RsSpcSymbolCodec::rate() const {
    unsigned m = code_.field().m();
    return (double)code_.k() / code_.n() * (double)m / (double)(m + 1);
}

Bits RsSpcSymbolCodec::encode(const Vec& info) const {
    unsigned m = code_.field().m();
    Vec cw = code_.encode_systematic(info);
    Bits out;
    out.reserve(cw.size() * (m + 1));
    for (Label s : cw) {
        Bits sb = label_to_bits(s, m);
        int parity = 0;
        for (int b : sb) parity ^= b;
        out.insert(out.end(), sb.begin(), sb.end());
        out.push_back(parity);  // even parity over m+1 bits
    }
    return out;
}

RsSpcSymbolCodec::Result RsSpcSymbolCodec::decode(const Soft& soft) const {
    unsigned m = code_.field().m();
    unsigned n = code_.n();
    if (soft.size() != (size_t)n * (m + 1)) throw BadParameters("soft length mismatch");
    Vec symbols(n);
    for (unsigned j = 0; j < n; ++j) {
        Soft sym(soft.begin() + (size_t)j * (m + 1), soft.begin() + (size_t)(j + 1) * (m + 1));
        Bits b = spc_soft_decode(sym);
        b.resize(m);  // strip the parity bit
        symbols[j] = bits_to_label(b);
    }
    auto res = code_.decode_errors(symbols);
    Result out;
    out.symbols = symbols;
    out.ok = res.ok();
    if (res.ok()) {
        out.info.assign(res.codeword.begin(), res.codeword.begin() + code_.k());
    } else {
        out.info.assign(symbols.begin(), symbols.begin() + code_.k());
    }
    return out;
}

double BlockRsSpcCodec::rate() const {
    return (double)code_.k() / code_.n() * (double)(N_ - 1) / (double)N_;
}

std::vector<Bits> BlockRsSpcCodec::encode(const std::vector<Vec>& info_words) const {
    if (info_words.size() != N_ - 1) throw BadParameters("need N-1 information words");
    const GaloisField& f = code_.field();
    unsigned m = f.m();
    std::vector<Vec> rows;
    Vec parity(code_.n(), 0);
    for (const auto& x : info_words) {
        Vec cw = code_.encode_systematic(x);
        for (size_t j = 0; j < cw.size(); ++j) parity[j] = f.add(parity[j], cw[j]);
        rows.push_back(cw);
    }
    rows.push_back(parity);  // bitwise modulo-2 sum of the previous words
    std::vector<Bits> out;
    for (const auto& r : rows) {
        Bits bits;
        for (Label s : r) {
            Bits sb = label_to_bits(s, m);
            bits.insert(bits.end(), sb.begin(), sb.end());
        }
        out.push_back(bits);
    }
    return out;
}

unsigned BlockRsSpcCodec::select_repair_row(const std::vector<Soft>& soft_rows,
                                            const std::vector<Vec>& decoded, const Vec& e) const {
    const GaloisField& f = code_.field();
    unsigned m = f.m(), n = code_.n();
    auto correlation = [&](const Vec& word, unsigned row) {
        double score = 0;
        for (unsigned j = 0; j < n; ++j) {
            if (e[j] == 0) continue;
            Bits sb = label_to_bits(word[j], m);
            for (unsigned b = 0; b < m; ++b)
                score += soft_rows[row][(size_t)j * m + b] * (sb[b] ? 1.0 : -1.0);
        }
        return score;
    };
    unsigned best = 0;
    double best_score = -1e300;
    for (unsigned i = 0; i < N_; ++i) {
        Vec cand = decoded[i];
        for (unsigned j = 0; j < n; ++j) cand[j] = f.add(cand[j], e[j]);
        double gain = correlation(cand, i) - correlation(decoded[i], i);
        if (gain > best_score) {
            best_score = gain;
            best = i;
        }
    }
    return best;
}

BlockRsSpcCodec::Result BlockRsSpcCodec::decode(const std::vector<Soft>& soft_rows) const {
    const GaloisField& f = code_.field();
    unsigned m = f.m(), n = code_.n(), k = code_.k();
    size_t bits_per_row = (size_t)n * m;
    if (soft_rows.size() != N_) throw BadParameters("need N soft rows");
    for (const auto& r : soft_rows)
        if (r.size() != bits_per_row) throw BadParameters("row length mismatch");

    // step 1: column-wise SPC soft decision
    std::vector<Bits> hard(N_, Bits(bits_per_row));
    for (size_t b = 0; b < bits_per_row; ++b) {
        Soft col(N_);
        for (unsigned i = 0; i < N_; ++i) col[i] = soft_rows[i][b];
        Bits dec = spc_soft_decode(col);
        for (unsigned i = 0; i < N_; ++i) hard[i][b] = dec[i];
    }

    auto row_symbols = [&](const Bits& bits) {
        Vec s(n);
        for (unsigned j = 0; j < n; ++j) {
            Bits sb(bits.begin() + (size_t)j * m, bits.begin() + (size_t)(j + 1) * m);
            s[j] = bits_to_label(sb);
        }
        return s;
    };
    std::vector<Vec> decoded(N_);
    std::vector<bool> flagged(N_, false);
    for (unsigned i = 0; i < N_; ++i) {
        Vec r = row_symbols(hard[i]);
        auto res = code_.decode_errors(r);
        if (res.ok()) {
            decoded[i] = res.codeword;
        } else {
            decoded[i] = r;
            flagged[i] = true;
        }
    }

    Result out;
    out.ok = false;
    out.stopped = false;
    out.iterations = 0;
    for (unsigned pass = 0; pass < 3; ++pass) {
        out.iterations = pass;
        unsigned flags = (unsigned)std::count(flagged.begin(), flagged.end(), true);
        if (flags == 0) {
            Vec e(n, 0);
            for (unsigned i = 0; i < N_; ++i)
                for (unsigned j = 0; j < n; ++j) e[j] = f.add(e[j], decoded[i][j]);
            bool zero = std::all_of(e.begin(), e.end(), [](Label v) { return v == 0; });
            if (!zero) {
                // one silently miscorrected row: pick the one whose correction
                // maximizes the likelihood over the nonzero coordinates of E
                unsigned best = select_repair_row(soft_rows, decoded, e);
                for (unsigned j = 0; j < n; ++j)
                    decoded[best][j] = f.add(decoded[best][j], e[j]);
            }
            out.ok = true;
            break;
        }
        if (flags == 1) {
            unsigned fi = 0;
            for (unsigned i = 0; i < N_; ++i)
                if (flagged[i]) fi = i;
            Vec repair(n, 0);
            for (unsigned i = 0; i < N_; ++i) {
                if (i == fi) continue;
                for (unsigned j = 0; j < n; ++j) repair[j] = f.add(repair[j], decoded[i][j]);
            }
            decoded[fi] = repair;
            flagged[fi] = false;
            out.ok = true;
            break;
        }
        // more than one flag: redo the column SPC restricted to the flagged
        // rows, whose column parity is fixed by the clean rows
        std::vector<unsigned> fidx;
        for (unsigned i = 0; i < N_; ++i)
            if (flagged[i]) fidx.push_back(i);
        std::vector<Bits> clean_bits(N_);
        for (unsigned i = 0; i < N_; ++i)
            if (!flagged[i]) {
                Bits bits;
                for (Label s : decoded[i]) {
                    Bits sb = label_to_bits(s, m);
                    bits.insert(bits.end(), sb.begin(), sb.end());
                }
                clean_bits[i] = bits;
            }
        for (size_t b = 0; b < bits_per_row; ++b) {
            int want = 0;  // required parity of the flagged rows at this column
            for (unsigned i = 0; i < N_; ++i)
                if (!flagged[i]) want ^= clean_bits[i][b];
            int have = 0;
            for (unsigned i : fidx) have ^= (soft_rows[i][b] >= 0.0 ? 1 : 0);
            for (unsigned i : fidx) hard[i][b] = soft_rows[i][b] >= 0.0 ? 1 : 0;
            if (have != want) {
                unsigned weakest = fidx[0];
                for (unsigned i : fidx)
                    if (std::fabs(soft_rows[i][b]) < std::fabs(soft_rows[weakest][b])) weakest = i;
                hard[weakest][b] ^= 1;
            }
        }
        unsigned new_flags = 0;
        for (unsigned i : fidx) {
            Vec r = row_symbols(hard[i]);
            auto res = code_.decode_errors(r);
            if (res.ok()) {
                decoded[i] = res.codeword;
                flagged[i] = false;
            } else {
                decoded[i] = r;
                ++new_flags;
            }
        }
        if (new_flags >= flags) {  // no progress: stop decoding
            out.stopped = true;
            break;
        }
    }
    out.info.clear();
    for (unsigned i = 0; i + 1 < N_; ++i)
        out.info.emplace_back(decoded[i].begin(), decoded[i].begin() + k);
    return out;
}

std::vector<std::vector<double>> ideal_envelopes(const Vec& word, unsigned M, double es) {
    std::vector<std::vector<double>> e(M, std::vector<double>(word.size(), 0.0));
    for (size_t t = 0; t < word.size(); ++t) e[word[t]][t] = std::sqrt(es);
    return e;
}

DetectionMatrix mfsk_detect(const std::vector<std::vector<double>>& energies, double es,
                            double threshold_offset) {
    DetectionMatrix m;
    m.M = (unsigned)energies.size();
    m.n = (unsigned)energies[0].size();
    double threshold = 0.5 * std::sqrt(es) + threshold_offset;
    m.cell.assign(m.M, std::vector<bool>(m.n, false));
    for (unsigned f = 0; f < m.M; ++f)
        for (unsigned t = 0; t < m.n; ++t) m.cell[f][t] = energies[f][t] > threshold;
    return m;
}

DetectionMatrix apply_disturbance(DetectionMatrix m, Disturbance kind, unsigned index,
                                  unsigned index2) {
    switch (kind) {
        case Disturbance::Narrowband:
            for (unsigned t = 0; t < m.n; ++t) m.cell.at(index)[t] = true;
            break;
        case Disturbance::Impulse:
            for (unsigned f = 0; f < m.M; ++f) m.cell[f].at(index) = true;
            break;
        case Disturbance::Fade:
            for (unsigned t = 0; t < m.n; ++t) m.cell.at(index)[t] = false;
            break;
        case Disturbance::BackgroundInsert:
            m.cell.at(index).at(index2) = true;
            break;
        case Disturbance::BackgroundDelete:
            m.cell.at(index).at(index2) = false;
            break;
    }
    return m;
}

double perm_bound(unsigned M, unsigned d) {
    if (M > 20) throw TooLarge("M too large for exact factorials");
    double v = 1;
    for (unsigned i = 2; i <= M; ++i) v *= i;
    for (unsigned i = 2; i <= d - 1; ++i) v /= i;
    return v;
}

PermutationCode perm_code(unsigned M, PermSource source, unsigned d_min) {
    PermutationCode out;
    out.M = M;
    if (source == PermSource::RsDerived) {
        unsigned m = 0;
        while ((1u << m) < M) ++m;
        if ((1u << m) != M) throw BadParameters("rs_derived needs M = 2^m");
        GaloisField f = GaloisField::binary_default(m);
        Vec row2(M);
        row2[0] = 0;
        for (unsigned j = 1; j < M; ++j) row2[j] = f.alpha_pow(j - 1);
        for (unsigned y = 1; y < M; ++y)
            for (unsigned x = 0; x < M; ++x) {
                Vec w(M);
                for (unsigned j = 0; j < M; ++j) w[j] = f.add((Label)x, f.mul((Label)y, row2[j]));
                out.codewords.push_back(w);
            }
        out.d_min = M - 1;
        return out;
    }
    // shipped table codebooks, symbols stored 0..M-1
    auto from = [&](std::vector<Vec> words, unsigned d) {
        for (auto& w : words)
            for (auto& v : w) --v;
        out.codewords = words;
        out.d_min = d;
        return out;
    };
    if (M == 3 && d_min == 2)
        return from({{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}, 2);
    if (M == 3 && d_min == 3) return from({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}, 3);
    if (M == 4 && d_min == 3)
        return from({{1, 2, 3, 4},
                     {1, 3, 4, 2},
                     {2, 1, 4, 3},
                     {2, 4, 3, 1},
                     {3, 1, 2, 4},
                     {3, 4, 1, 2},
                     {4, 2, 1, 3},
                     {4, 3, 2, 1},
                     {1, 4, 2, 3},
                     {2, 3, 1, 4},
                     {3, 2, 4, 1},
                     {4, 1, 3, 2}},
                    3);
    if (M == 4 && d_min == 4)
        return from({{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}}, 4);
    throw BadParameters("no shipped table for these parameters");
}

namespace {

unsigned perm_hamming(const Vec& a, const Vec& b) {
    unsigned d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

struct PermSearch {
    std::vector<Vec> verts;
    std::vector<std::vector<bool>> adj;
    unsigned best = 0;
    unsigned bound = 0;

    void dfs(std::vector<unsigned>& clique, std::vector<unsigned>& cands) {
        if ((unsigned)clique.size() > best) best = (unsigned)clique.size();
        if (best >= bound) return;  // the counting bound cannot be exceeded
        if (clique.size() + cands.size() <= best) return;
        for (size_t i = 0; i < cands.size(); ++i) {
            if (clique.size() + (cands.size() - i) <= best) return;
            unsigned v = cands[i];
            std::vector<unsigned> next;
            for (size_t j = i + 1; j < cands.size(); ++j)
                if (adj[v][cands[j]]) next.push_back(cands[j]);
            clique.push_back(v);
            dfs(clique, next);
            clique.pop_back();
            if (best >= bound) return;
        }
    }
};

}  // namespace

unsigned perm_search_max(unsigned M, unsigned d) {
    if (M > 6) throw TooLarge("exhaustive search limited to M <= 6");
    PermSearch ps;
    ps.bound = (unsigned)perm_bound(M, d);
    Vec base(M);
    for (unsigned i = 0; i < M; ++i) base[i] = (Label)i;
    Vec p = base;
    do {
        ps.verts.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    size_t V = ps.verts.size();
    ps.adj.assign(V, std::vector<bool>(V, false));
    for (size_t a = 0; a < V; ++a)
        for (size_t b = a + 1; b < V; ++b)
            if (perm_hamming(ps.verts[a], ps.verts[b]) >= d) ps.adj[a][b] = ps.adj[b][a] = true;
    // every maximum code can be translated to contain the identity
    std::vector<unsigned> clique{0};
    std::vector<unsigned> cands;
    for (size_t v = 1; v < V; ++v)
        if (ps.adj[0][v]) cands.push_back((unsigned)v);
    ps.best = 1;
    ps.dfs(clique, cands);
    return ps.best;
}

PermDecode perm_decode(const PermutationCode& code, const DetectionMatrix& matrix) {
    unsigned best = 0, best_score = 0;
    bool tie = false;
    for (unsigned idx = 0; idx < code.codewords.size(); ++idx) {
        const Vec& w = code.codewords[idx];
        unsigned score = 0;
        for (unsigned t = 0; t < matrix.n; ++t)
            if (matrix.cell[w[t]][t]) ++score;
        if (idx == 0 || score > best_score) {
            best_score = score;
            best = idx;
            tie = false;
        } else if (score == best_score) {
            tie = true;
        }
    }
    return {best, tie};
}

SimReport ber_sim(BerScheme scheme, double eb_n0_db, std::uint64_t min_bits, std::uint64_t seed,
                  unsigned spc_n, unsigned rs_m, unsigned rs_k, unsigned block_N) {
    double eb_n0 = std::pow(10.0, eb_n0_db / 10.0);
    SimReport rep;
    rep.name = "ber";
    rep.seed = seed;
    std::uint64_t bit_errors = 0, bits_total = 0;
    std::uint64_t block = 0;
    GaloisField f = GaloisField::binary_default(rs_m);
    unsigned n = f.q() - 1;
    RsCode code(f, n, rs_k);
    double rate = 1.0;
    switch (scheme) {
        case BerScheme::Uncoded: rate = 1.0; break;
        case BerScheme::Spc: rate = (double)(spc_n - 1) / spc_n; break;
        case BerScheme::RsHard: rate = (double)rs_k / n; break;
        case BerScheme::RsSpcA: rate = (double)rs_k / n * rs_m / (rs_m + 1.0); break;
        case BerScheme::RsSpcB: rate = (double)rs_k / n * (block_N - 1.0) / block_N; break;
    }
    double amp = std::sqrt(2.0 * rate * eb_n0);  // sigma^2 = 1
    while (bits_total < min_bits) {
        AwgnChannel ch(amp, 1.0, hash_seed(seed, block));
        Xoshiro256 rng(hash_seed(seed ^ 0x5eedULL, block));
        ++block;
        switch (scheme) {
            case BerScheme::Uncoded: {
                Bits tx(1024);
                for (auto& b : tx) b = (int)rng.below(2);
                Bits rx = hard_decision(ch.transmit(tx));
                for (size_t i = 0; i < tx.size(); ++i)
                    if (tx[i] != rx[i]) ++bit_errors;
                bits_total += tx.size();
                break;
            }
            case BerScheme::Spc: {
                Bits info(spc_n - 1);
                for (auto& b : info) b = (int)rng.below(2);
                Bits tx = info;
                int parity = 0;
                for (int b : info) parity ^= b;
                tx.push_back(parity);
                Bits rx = spc_soft_decode(ch.transmit(tx));
                for (size_t i = 0; i + 1 < tx.size(); ++i)
                    if (info[i] != rx[i]) ++bit_errors;
                bits_total += info.size();
                break;
            }
            case BerScheme::RsHard: {
                Vec info(rs_k);
                for (auto& v : info) v = (Label)rng.below(f.q());
                Vec cw = code.encode_systematic(info);
                Bits tx;
                for (Label s : cw) {
                    Bits sb = label_to_bits(s, rs_m);
                    tx.insert(tx.end(), sb.begin(), sb.end());
                }
                Bits rx = hard_decision(ch.transmit(tx));
                Vec symbols(n);
                for (unsigned j = 0; j < n; ++j) {
                    Bits sb(rx.begin() + (size_t)j * rs_m, rx.begin() + (size_t)(j + 1) * rs_m);
                    symbols[j] = bits_to_label(sb);
                }
                auto res = code.decode_errors(symbols);
                const Vec& out = res.ok() ? res.codeword : symbols;
                for (unsigned j = 0; j < rs_k; ++j) {
                    Label diff = f.sub(out[j], info[j]);
                    Bits db = label_to_bits(diff, rs_m);
                    for (int b : db) bit_errors += b;
                }
                bits_total += (std::uint64_t)rs_k * rs_m;
                break;
            }
            case BerScheme::RsSpcA: {
                RsSpcSymbolCodec codec(code);
                Vec info(rs_k);
                for (auto& v : info) v = (Label)rng.below(f.q());
                Bits tx = codec.encode(info);
                auto res = codec.decode(ch.transmit(tx));
                for (unsigned j = 0; j < rs_k; ++j) {
                    Label diff = f.sub(res.info[j], info[j]);
                    Bits db = label_to_bits(diff, rs_m);
                    for (int b : db) bit_errors += b;
                }
                bits_total += (std::uint64_t)rs_k * rs_m;
                break;
            }
            case BerScheme::RsSpcB: {
                BlockRsSpcCodec codec(code, block_N);
                std::vector<Vec> info(block_N - 1, Vec(rs_k));
                for (auto& w : info)
                    for (auto& v : w) v = (Label)rng.below(f.q());
                auto rows = codec.encode(info);
                std::vector<Soft> soft;
                for (const auto& r : rows) soft.push_back(ch.transmit(r));
                auto res = codec.decode(soft);
                for (unsigned i = 0; i + 1 < block_N; ++i)
                    for (unsigned j = 0; j < rs_k; ++j) {
                        Label diff = f.sub(res.info[i][j], info[i][j]);
                        Bits db = label_to_bits(diff, rs_m);
                        for (int b : db) bit_errors += b;
                    }
                bits_total += (std::uint64_t)(block_N - 1) * rs_k * rs_m;
                break;
            }
        }
    }
    rep.metrics["ber"] = bernoulli_metric(bit_errors, bits_total);
    rep.put("eb_n0_db", eb_n0_db);
    rep.put("rate", rate);
    return rep;
}

}  // namespace modem
}  // namespace rsc
