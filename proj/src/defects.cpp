#include "rscod/defects.hpp"

#include <algorithm>
#include <cmath>

namespace rsc {
namespace defects {

unsigned defect_count(const DefectVector& d) {
    unsigned c = 0;
    for (Cell v : d)
        if (v != Cell::Free) ++c;
    return c;
}

bool compatible(const std::vector<int>& word, const DefectVector& d) {
    for (size_t i = 0; i < word.size(); ++i) {
        if (d[i] == Cell::Stuck0 && word[i] != 0) return false;
        if (d[i] == Cell::Stuck1 && word[i] != 1) return false;
    }
    return true;
}

std::vector<int> one_defect_write(const std::vector<int>& info, const DefectVector& d) {
    if (d.size() != info.size() + 1) throw BadParameters("need n = info bits + 1");
    std::vector<int> plain(1, 0), flipped(1, 1);
    plain.insert(plain.end(), info.begin(), info.end());
    for (int b : info) flipped.push_back(b ^ 1);
    if (compatible(plain, d)) return plain;
    if (compatible(flipped, d)) return flipped;
    throw Unmatchable("more than one defect");
}

std::vector<int> one_defect_read(const std::vector<int>& stored) {
    std::vector<int> info(stored.begin() + 1, stored.end());
    if (stored[0])
        for (auto& b : info) b ^= 1;
    return info;
}

std::vector<int> parity_write(int bit, const DefectVector& d) {
    std::vector<int> word(d.size(), 0);
    int free_pos = -1;
    int parity = 0;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == Cell::Free) {
            free_pos = (int)i;
        } else {
            word[i] = d[i] == Cell::Stuck1 ? 1 : 0;
            parity ^= word[i];
        }
    }
    if (free_pos < 0) {
        if (parity != bit) throw Unmatchable("no free cell left for the parity bit");
        return word;
    }
    word[(size_t)free_pos] = parity ^ bit;
    return word;
}

int parity_read(const std::vector<int>& stored) {
    int p = 0;
    for (int b : stored) p ^= b;
    return p;
}

TwoDefectCode build_two_defect_matrix(unsigned alpha) {
    if (alpha < 2 || alpha > 6) throw BadParameters("alpha in 2..6");
    TwoDefectCode code;
    code.alpha = alpha;
    if (alpha == 3) {
        // the worked 6 x 10 matrix, shipped verbatim
        code.rows = 6;
        code.cols = 10;
        code.prefix = 3;
        int C[6][10] = {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
                        {0, 1, 0, 1, 0, 1, 1, 0, 1, 1}, {1, 1, 0, 0, 1, 0, 1, 1, 0, 1},
                        {1, 0, 1, 1, 0, 0, 1, 1, 1, 0}, {1, 1, 1, 1, 1, 1, 0, 0, 0, 0}};
        code.C.assign(6, std::vector<int>(10));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 10; ++j) code.C[i][j] = C[i][j];
        return code;
    }
    unsigned len = 2 * alpha - 1;
    // columns: all weight-alpha vectors of length 2 alpha - 1; a zero row on top
    std::vector<std::vector<int>> cols;
    for (unsigned w = 0; w < (1u << len); ++w) {
        if ((unsigned)__builtin_popcount(w) != alpha) continue;
        std::vector<int> col(len + 1, 0);
        for (unsigned i = 0; i < len; ++i) col[1 + i] = (w >> i) & 1;
        cols.push_back(col);
    }
    code.rows = 2 * alpha;
    code.cols = (unsigned)cols.size();
    unsigned prefix = 0;
    while ((1u << prefix) < code.rows) ++prefix;
    code.prefix = prefix;
    // pick prefix columns that make all rows distinct and move them in front
    std::vector<size_t> chosen;
    std::vector<size_t> stack(prefix, 0);
    auto rows_distinct = [&](const std::vector<size_t>& sel) {
        std::vector<unsigned> sig(code.rows, 0);
        for (unsigned r = 0; r < code.rows; ++r)
            for (size_t i = 0; i < sel.size(); ++i) sig[r] |= (unsigned)cols[sel[i]][r] << i;
        std::sort(sig.begin(), sig.end());
        return std::adjacent_find(sig.begin(), sig.end()) == sig.end();
    };
    // search prefix-sized column subsets
    std::vector<size_t> idx(prefix);
    for (unsigned i = 0; i < prefix; ++i) idx[i] = i;
    bool found = false;
    while (true) {
        if (rows_distinct(idx)) {
            chosen = idx;
            found = true;
            break;
        }
        unsigned i = prefix;
        bool done = true;
        while (i > 0) {
            --i;
            if (idx[i] + (prefix - i) < cols.size()) {
                ++idx[i];
                for (unsigned j = i + 1; j < prefix; ++j) idx[j] = idx[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    if (!found) throw BadParameters("no identifying prefix exists");
    (void)stack;
    std::vector<size_t> order = chosen;
    for (size_t c = 0; c < cols.size(); ++c)
        if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) order.push_back(c);
    code.C.assign(code.rows, std::vector<int>(code.cols));
    for (unsigned r = 0; r < code.rows; ++r)
        for (size_t j = 0; j < order.size(); ++j) code.C[r][j] = cols[order[j]][r];
    return code;
}

std::vector<int> two_defect_write(const TwoDefectCode& code, const std::vector<int>& info,
                                  const DefectVector& d) {
    if (info.size() != code.cols - code.prefix) throw BadParameters("info length mismatch");
    if (d.size() != code.cols) throw BadParameters("defect vector length mismatch");
    if (defect_count(d) > 2) throw Unmatchable("more than two defects");
    std::vector<int> x(code.cols, 0);
    std::copy(info.begin(), info.end(), x.begin() + code.prefix);
    for (unsigned r = 0; r < code.rows; ++r) {
        std::vector<int> word(code.cols);
        for (unsigned j = 0; j < code.cols; ++j) word[j] = x[j] ^ code.C[r][j];
        if (compatible(word, d)) return word;
    }
    throw Unmatchable("no row matches the defect pair");
}

std::vector<int> two_defect_read(const TwoDefectCode& code, const std::vector<int>& stored) {
    for (unsigned r = 0; r < code.rows; ++r) {
        bool match = true;
        for (unsigned j = 0; j < code.prefix && match; ++j)
            if (code.C[r][j] != stored[j]) match = false;
        if (!match) continue;
        std::vector<int> info(code.cols - code.prefix);
        for (unsigned j = code.prefix; j < code.cols; ++j)
            info[j - code.prefix] = stored[j] ^ code.C[r][j];
        return info;
    }
    throw BadParameters("prefix identifies no matrix row");
}

KtBounds kt_bound(unsigned n, unsigned k, unsigned t) {
    if (k + t > n) throw BadParameters("need n - k - t >= 0");
    long double ln_cnt = lgammal((long double)n + 1) - lgammal((long double)t + 1) -
                         lgammal((long double)(n - t) + 1);
    long double ln_patterns = ln_cnt + (long double)t * std::log(2.0L);
    KtBounds out;
    unsigned e = n - k - t;
    if (e >= 1020) {
        out.log_f_bound = -1e300;  // the 2^(n-k-t) term dwarfs everything
    } else {
        out.log_f_bound = (double)(-std::pow(2.0L, (long double)e) + ln_patterns);
    }
    if (ln_patterns <= 1.0L)
        out.r_bound = 1.0 - (double)t / n;  // t = 0 limit
    else
        out.r_bound = 1.0 - (double)t / n - (double)(log2l(ln_patterns) / (long double)n);
    return out;
}

LinearMatcher::LinearMatcher(const GaloisField& f, const Mat& top, unsigned capability)
    : f_(f), top_(top), capability_(capability) {
    for (size_t i = 0; i < top.rows; ++i)
        for (size_t j = 0; j < top.rows; ++j)
            if (top(i, j) != (i == j ? 1 : 0))
                throw BadParameters("top block must be systematic [I | *]");
}

std::vector<int> LinearMatcher::write(const std::vector<int>& info, const DefectVector& d) const {
    size_t nk = top_.rows, n = top_.cols;
    if (info.size() != n - nk) throw BadParameters("info length mismatch");
    if (d.size() != n) throw BadParameters("defect vector length mismatch");
    if (defect_count(d) > capability_) throw Unmatchable("defect count exceeds capability");
    // base word m = (0^{n-k}, info); constraints (c T)_j = d_j - m_j
    std::vector<size_t> cols;
    Vec rhs;
    for (size_t j = 0; j < n; ++j) {
        if (d[j] == Cell::Free) continue;
        Label dj = d[j] == Cell::Stuck1 ? 1 : 0;
        Label mj = j < nk ? 0 : (Label)info[j - nk];
        cols.push_back(j);
        rhs.push_back(f_.sub(dj, mj));
    }
    // solve the row vector c with c A = rhs via the transposed system
    Mat at = top_.columns(cols).transposed();  // |cols| x nk
    Mat augt(at.rows, at.cols + 1);
    for (size_t i = 0; i < at.rows; ++i) {
        for (size_t j = 0; j < at.cols; ++j) augt(i, j) = at(i, j);
        augt(i, at.cols) = rhs[i];
    }
    auto piv = rref(f_, augt);
    Vec c(nk, 0);
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == at.cols) throw Unmatchable("inconsistent defect constraints");
        c[piv[r]] = augt(r, at.cols);
    }
    std::vector<int> stored(n);
    Vec ct = vec_mat(f_, c, top_);
    for (size_t j = 0; j < n; ++j) {
        Label mj = j < nk ? 0 : (Label)info[j - nk];
        stored[j] = (int)f_.add(ct[j], mj);
    }
    return stored;
}

std::vector<int> LinearMatcher::read(const std::vector<int>& stored) const {
    size_t nk = top_.rows, n = top_.cols;
    Vec c(nk);
    for (size_t i = 0; i < nk; ++i) c[i] = (Label)stored[i];
    Vec ct = vec_mat(f_, c, top_);
    std::vector<int> info(n - nk);
    for (size_t j = nk; j < n; ++j) info[j - nk] = (int)f_.sub((Label)stored[j], ct[j]);
    return info;
}

CombinedMatcher::CombinedMatcher(const GaloisField& f, const Mat& G, unsigned mask_rows,
                                 unsigned t_errors)
    : f_(f), G_(G), mask_rows_(mask_rows), t_errors_(t_errors) {
    if (mask_rows >= G.rows) throw BadParameters("need information rows");
    double space = 1;
    for (size_t i = 0; i < G.rows; ++i) space *= f.q();
    if (space > 65536.0) throw TooLarge("bounded-distance table limited to small codes");
    // enumerate all codewords for nearest-codeword reading
    size_t kk = G.rows;
    Vec x(kk, 0);
    while (true) {
        Vec cw = vec_mat(f_, x, G_);
        std::vector<int> w(cw.begin(), cw.end());
        codewords_.push_back(w);
        size_t pos = 0;
        while (pos < kk) {
            x[pos] = (Label)((x[pos] + 1) % f.q());
            if (x[pos] != 0) break;
            ++pos;
        }
        if (pos == kk) break;
    }
}

unsigned CombinedMatcher::capability() const {
    // largest t such that every t columns of the mask block are independent
    Mat top(mask_rows_, G_.cols);
    for (unsigned i = 0; i < mask_rows_; ++i)
        for (size_t j = 0; j < G_.cols; ++j) top(i, j) = G_(i, j);
    unsigned t = 0;
    for (unsigned probe = 1; probe <= mask_rows_; ++probe) {
        // check all probe-subsets
        std::vector<size_t> idx(probe);
        for (unsigned i = 0; i < probe; ++i) idx[i] = i;
        bool all_ok = true;
        while (all_ok) {
            if (mat_rank(f_, top.columns(idx)) != probe) all_ok = false;
            size_t i = probe;
            bool done = true;
            while (i > 0) {
                --i;
                if (idx[i] + (probe - i) < G_.cols) {
                    ++idx[i];
                    for (size_t j = i + 1; j < probe; ++j) idx[j] = idx[j - 1] + 1;
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
        if (all_ok)
            t = probe;
        else
            break;
    }
    return t;
}

std::vector<int> CombinedMatcher::write(const std::vector<int>& info, const DefectVector& d) const {
    size_t n = G_.cols;
    if (info.size() != G_.rows - mask_rows_) throw BadParameters("info length mismatch");
    Vec x(G_.rows, 0);
    for (size_t i = 0; i < info.size(); ++i) x[mask_rows_ + i] = (Label)info[i];
    Vec base = vec_mat(f_, x, G_);
    std::vector<size_t> cols;
    Vec rhs;
    for (size_t j = 0; j < n; ++j) {
        if (d[j] == Cell::Free) continue;
        Label dj = d[j] == Cell::Stuck1 ? 1 : 0;
        cols.push_back(j);
        rhs.push_back(f_.sub(dj, base[j]));
    }
    Mat top(mask_rows_, n);
    for (unsigned i = 0; i < mask_rows_; ++i)
        for (size_t j = 0; j < n; ++j) top(i, j) = G_(i, j);
    Mat at = top.columns(cols).transposed();
    Mat augt(at.rows, at.cols + 1);
    for (size_t i = 0; i < at.rows; ++i) {
        for (size_t j = 0; j < at.cols; ++j) augt(i, j) = at(i, j);
        augt(i, at.cols) = rhs[i];
    }
    auto piv = rref(f_, augt);
    Vec c(mask_rows_, 0);
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == at.cols) throw Unmatchable("inconsistent defect constraints");
        c[piv[r]] = augt(r, at.cols);
    }
    Vec mask = vec_mat(f_, c, top);
    std::vector<int> stored(n);
    for (size_t j = 0; j < n; ++j) stored[j] = (int)f_.add(base[j], mask[j]);
    return stored;
}

std::vector<int> CombinedMatcher::read(const std::vector<int>& stored) const {
    // correct random errors first: nearest codeword within t_errors
    const std::vector<int>* best = nullptr;
    unsigned best_d = t_errors_ + 1;
    for (const auto& cw : codewords_) {
        unsigned dist = 0;
        for (size_t j = 0; j < cw.size(); ++j)
            if (cw[j] != stored[j]) ++dist;
        if (dist < best_d) {
            best_d = dist;
            best = &cw;
        }
    }
    if (!best) throw BadParameters("no codeword within the error radius");
    // strip the mask: solve (c, x) from the codeword
    Vec cw((*best).begin(), (*best).end());
    Mat gt = G_.transposed();  // n x rows
    Mat augt(gt.rows, gt.cols + 1);
    for (size_t i = 0; i < gt.rows; ++i) {
        for (size_t j = 0; j < gt.cols; ++j) augt(i, j) = gt(i, j);
        augt(i, gt.cols) = cw[i];
    }
    auto piv = rref(f_, augt);
    Vec full(G_.rows, 0);
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == gt.cols) throw BadParameters("word outside the code");
        full[piv[r]] = augt(r, gt.cols);
    }
    std::vector<int> info(G_.rows - mask_rows_);
    for (size_t i = 0; i < info.size(); ++i) info[i] = (int)full[mask_rows_ + i];
    return info;
}

RsSymbolMatcher::RsSymbolMatcher(const GaloisField& f, unsigned n, unsigned k, unsigned delta)
    : f_(f), n_(n), k_(k), delta_(delta), code_(f, n, n - delta) {
    if (delta >= k) throw BadParameters("need delta < k");
}

Vec RsSymbolMatcher::write(const Vec& info, const SymbolDefects& d) const {
    if (info.size() != k_ - delta_) throw BadParameters("info length mismatch");
    if (d.size() != n_) throw BadParameters("defect vector length mismatch");
    unsigned count = 0;
    for (int v : d)
        if (v >= 0) ++count;
    if (count > n_ - k_) throw Unmatchable("defect count exceeds n - k");
    // full information vector (c^{n-k}, x^{k-delta}); constraints on c
    Vec x(n_ - delta_, 0);
    for (size_t i = 0; i < info.size(); ++i) x[(n_ - k_) + i] = info[i];
    Vec base = code_.encode_matrix(x);
    std::vector<size_t> cols;
    Vec rhs;
    for (size_t j = 0; j < n_; ++j) {
        if (d[j] < 0) continue;
        cols.push_back(j);
        rhs.push_back(f_.sub((Label)d[j], base[j]));
    }
    Mat top(n_ - k_, n_);
    for (unsigned i = 0; i < n_ - k_; ++i)
        for (unsigned j = 0; j < n_; ++j) top(i, j) = code_.G()(i, j);
    Mat at = top.columns(cols).transposed();
    Mat augt(at.rows, at.cols + 1);
    for (size_t i = 0; i < at.rows; ++i) {
        for (size_t j = 0; j < at.cols; ++j) augt(i, j) = at(i, j);
        augt(i, at.cols) = rhs[i];
    }
    auto piv = rref(f_, augt);
    Vec c(n_ - k_, 0);
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == at.cols) throw Unmatchable("inconsistent defect constraints");
        c[piv[r]] = augt(r, at.cols);
    }
    Vec full = x;
    for (unsigned i = 0; i < n_ - k_; ++i) full[i] = c[i];
    return code_.encode_matrix(full);
}

RsSymbolMatcher::Read RsSymbolMatcher::read(const Vec& stored) const {
    Read out{false, {}};
    if (delta_ == 0) {
        // no redundancy for random errors: invert the encoding directly
        Vec full = code_.info_from_codeword(stored);
        out.ok = code_.is_codeword(stored);
        if (!out.ok) return out;
        out.info.assign(full.begin() + (n_ - k_), full.end());
        return out;
    }
    auto res = code_.decode_errors(stored);
    if (!res.ok()) return out;
    out.ok = true;
    out.info.assign(res.info.begin() + (n_ - k_), res.info.end());
    return out;
}

double wom_total_rate(double p) {
    double h = 0;
    if (p > 0 && p < 1) h = -p * std::log2(p) - (1 - p) * std::log2(1 - p);
    return h + (1.0 - p);
}

std::uint64_t wom_first_write_cardinality(unsigned n, unsigned max_weight) {
    std::uint64_t total = 0;
    for (unsigned w = 0; w <= max_weight; ++w) {
        std::uint64_t c = 1;
        for (unsigned i = 0; i < w; ++i) c = c * (n - i) / (i + 1);
        total += c;
    }
    return total;
}

namespace {

std::uint64_t binom_u64(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t c = 1;
    for (unsigned i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

}  // namespace

std::vector<int> wom_first_write(unsigned n, unsigned max_weight, std::uint64_t message) {
    if (message >= wom_first_write_cardinality(n, max_weight))
        throw CapacityExceeded("message index exceeds the first-write cardinality");
    // split off the weight class, then unrank within it (lexicographic)
    unsigned w = 0;
    while (message >= binom_u64(n, w)) {
        message -= binom_u64(n, w);
        ++w;
    }
    std::vector<int> holes(n, 0);
    unsigned pos = 0, remaining = w;
    while (remaining > 0) {
        std::uint64_t without = binom_u64(n - pos - 1, remaining - 1);
        if (message < without) {
            holes[pos] = 1;
            --remaining;
        } else {
            message -= without;
        }
        ++pos;
    }
    return holes;
}

std::uint64_t wom_first_read(const std::vector<int>& holes, unsigned max_weight) {
    unsigned n = (unsigned)holes.size();
    unsigned w = 0;
    for (int b : holes) w += (unsigned)b;
    if (w > max_weight) throw CapacityExceeded("weight exceeds the first-write limit");
    std::uint64_t base = 0;
    for (unsigned i = 0; i < w; ++i) base += binom_u64(n, i);
    std::uint64_t rank = 0;
    unsigned remaining = w;
    for (unsigned pos = 0; pos < n && remaining > 0; ++pos) {
        if (holes[pos]) {
            --remaining;
        } else {
            rank += binom_u64(n - pos - 1, remaining - 1);
        }
    }
    return base + rank;
}

WomSession wom_two_write(unsigned n, unsigned max_weight, std::uint64_t m1,
                         const std::vector<int>& m2_bits, const LinearMatcher& matcher) {
    if (matcher.n() != n) throw BadParameters("matcher length mismatch");
    if (matcher.capability() < max_weight) throw CapacityExceeded("matcher too weak for p n holes");
    WomSession s;
    s.after_first = wom_first_write(n, max_weight, m1);
    s.bits_first = std::log2((double)wom_first_write_cardinality(n, max_weight));
    // existing holes are Stuck1 cells for the second write
    DefectVector d(n, Cell::Free);
    for (unsigned i = 0; i < n; ++i)
        if (s.after_first[i]) d[i] = Cell::Stuck1;
    s.after_second = matcher.write(m2_bits, d);
    s.bits_second = (double)matcher.info_bits();
    return s;
}

}  // namespace defects
}  // namespace rsc
