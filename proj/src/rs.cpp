#include "rscod/rs.hpp"

#include <algorithm>
#include <cassert>

namespace rsc {

int poly_deg(const Vec& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Vec poly_trim(Vec p) {
    p.resize((size_t)(poly_deg(p) + 1));
    return p;
}

Vec poly_add(const GaloisField& f, const Vec& a, const Vec& b) {
    Vec c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        Label x = i < a.size() ? a[i] : 0;
        Label y = i < b.size() ? b[i] : 0;
        c[i] = f.add(x, y);
    }
    return poly_trim(c);
}

Vec poly_mul(const GaloisField& f, const Vec& a, const Vec& b) {
    if (poly_deg(a) < 0 || poly_deg(b) < 0) return {};
    Vec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    }
    return poly_trim(c);
}

std::pair<Vec, Vec> poly_divmod(const GaloisField& f, Vec num, const Vec& den) {
    int dd = poly_deg(den);
    assert(dd >= 0);
    int dn = poly_deg(num);
    if (dn < dd) return {Vec{}, poly_trim(num)};
    Vec q((size_t)(dn - dd + 1), 0);
    Label lead_inv = f.inv(den[(size_t)dd]);
    for (int i = dn; i >= dd; --i) {
        if (num[(size_t)i] == 0) continue;
        Label c = f.mul(num[(size_t)i], lead_inv);
        q[(size_t)(i - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            num[(size_t)(i - dd + j)] = f.sub(num[(size_t)(i - dd + j)], f.mul(c, den[(size_t)j]));
    }
    return {poly_trim(q), poly_trim(num)};
}

Label poly_eval(const GaloisField& f, const Vec& p, Label x) {
    Label acc = 0;
    for (int i = poly_deg(p); i >= 0; --i) acc = f.add(f.mul(acc, x), p[(size_t)i]);
    return acc;
}

Vec poly_derivative(const GaloisField& f, const Vec& p) {
    if (p.size() <= 1) return {};
    Vec d(p.size() - 1, 0);
    for (size_t i = 1; i < p.size(); ++i) {
        Label c = 0;  // i * p[i] in the prime subfield
        for (unsigned r = 0; r < i % (f.kind() == GaloisField::Kind::Prime ? f.q() : 2u); ++r)
            c = f.add(c, p[i]);
        d[i - 1] = c;
    }
    return poly_trim(d);
}

RsCode::RsCode(const GaloisField& f, unsigned n, unsigned k, RsVariant variant, unsigned first_row)
    : f_(f), n_(n), k_(k), variant_(variant), first_row_(first_row) {
    if (k < 1 || k > n) throw BadParameters("require 1 <= k <= n");
    switch (variant) {
        case RsVariant::Standard:
            if (n != f.q() - 1) throw BadParameters("standard variant requires n = q-1");
            build_standard();
            break;
        case RsVariant::Shortened: {
            if (n >= f.q() - 1) throw BadParameters("shortened variant requires n < q-1");
            if (first_row != 0) throw BadParameters("shortened variant uses first_row = 0");
            drop_ = f.q() - 1 - n;
            full_ = std::make_unique<RsCode>(f, f.q() - 1, k + drop_, RsVariant::Standard, 0);
            // rows/columns drop_.. of the full systematic matrix
            G_ = Mat(k, n);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < n; ++j) G_(i, j) = full_->G_sys()(drop_ + i, drop_ + j);
            Gsys_ = G_;
            HT_ = Mat(n, n - k);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n - k; ++j) HT_(i, j) = full_->H_T()(drop_ + i, j);
            break;
        }
        case RsVariant::Extended:
            if (n != f.q()) throw BadParameters("extended variant requires n = q");
            if (first_row != 0) throw BadParameters("extended variant uses first_row = 0");
            build_extended();
            break;
    }
}

void RsCode::build_standard() {
    G_ = Mat(k_, n_);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            G_(i, j) = f_.alpha_pow((long long)(first_row_ + i) * j);
    Gsys_ = G_;
    rref(f_, Gsys_);
    // syndrome evaluation exponents: all s in 1..n with (n-s) mod n outside the
    // row window [first_row, first_row+k-1]
    syndrome_exps_.clear();
    for (unsigned s = 1; s <= n_; ++s) {
        unsigned row = (n_ - s) % n_;
        bool in_window = false;
        for (unsigned i = 0; i < k_; ++i)
            if ((first_row_ + i) % n_ == row) in_window = true;
        if (!in_window) syndrome_exps_.push_back(s % n_);
    }
    assert(syndrome_exps_.size() == n_ - k_);
    HT_ = Mat(n_, n_ - k_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_ - k_; ++j)
            HT_(i, j) = f_.alpha_pow((long long)i * syndrome_exps_[j]);
}

void RsCode::build_extended() {
    // evaluation points: 0, 1, alpha, alpha^2, ...
    G_ = Mat(k_, n_);
    for (unsigned i = 0; i < k_; ++i) {
        G_(i, 0) = (i == 0) ? 1 : 0;
        for (unsigned j = 1; j < n_; ++j) G_(i, j) = f_.alpha_pow((long long)i * (j - 1));
    }
    Gsys_ = G_;
    rref(f_, Gsys_);
    HT_ = right_kernel(f_, G_).transposed();
}

Vec RsCode::g_poly() const {
    if (variant_ != RsVariant::Standard || first_row_ != 0)
        throw BadParameters("generator polynomial defined for the standard window only");
    Vec g{1};
    for (unsigned s = 1; s <= n_ - k_; ++s) g = poly_mul(f_, g, Vec{f_.alpha_pow(s), 1});
    return g;
}

Vec RsCode::encode_matrix(const Vec& info) const {
    if (info.size() != k_) throw BadParameters("info length must be k");
    return vec_mat(f_, info, G_);
}

Vec RsCode::encode_systematic(const Vec& info) const {
    if (info.size() != k_) throw BadParameters("info length must be k");
    return vec_mat(f_, info, Gsys_);
}

Vec RsCode::encode(const Vec& info) const {
    if (variant_ == RsVariant::Standard && first_row_ == 0) {
        if (info.size() != k_) throw BadParameters("info length must be k");
        Vec c = poly_mul(f_, info, g_poly());
        c.resize(n_, 0);
        return c;
    }
    return encode_matrix(info);
}

Vec RsCode::encode_systematic_poly(const Vec& info) const {
    if (info.size() != k_) throw BadParameters("info length must be k");
    Vec shifted(n_, 0);
    for (unsigned i = 0; i < k_; ++i) shifted[n_ - k_ + i] = info[i];
    auto [q, r] = poly_divmod(f_, shifted, g_poly());
    (void)q;
    Vec c = shifted;
    for (int i = 0; i <= poly_deg(r); ++i) c[(size_t)i] = f_.add(c[(size_t)i], r[(size_t)i]);
    return c;
}

Vec RsCode::syndrome(const Vec& received) const {
    if (received.size() != n_) throw BadParameters("received length must be n");
    if (variant_ == RsVariant::Shortened) {
        Vec padded(f_.q() - 1, 0);
        std::copy(received.begin(), received.end(), padded.begin() + drop_);
        return full_->syndrome(padded);
    }
    if (variant_ == RsVariant::Standard) {
        Vec s(n_ - k_);
        for (unsigned j = 0; j < n_ - k_; ++j)
            s[j] = poly_eval(f_, received, f_.alpha_pow(syndrome_exps_[j]));
        return s;
    }
    return vec_mat(f_, received, HT_);
}

bool RsCode::is_codeword(const Vec& word) const {
    Vec s = syndrome(word);
    return std::all_of(s.begin(), s.end(), [](Label v) { return v == 0; });
}

Vec RsCode::info_from_codeword(const Vec& codeword) const {
    std::vector<size_t> cols(k_);
    for (unsigned i = 0; i < k_; ++i) cols[i] = i;
    Vec b(k_);
    for (unsigned i = 0; i < k_; ++i) b[i] = codeword[i];
    auto x = solve_left(f_, G_.columns(cols), b);
    if (!x) throw BadParameters("leading k columns unexpectedly singular");
    return *x;
}

namespace {

// Euclid's algorithm on (X^nk, S(X)); iterates while deg(remainder) >= stop_deg.
// Returns {locator-multiplier v, remainder} with v*S = remainder mod X^nk.
std::pair<Vec, Vec> key_equation_euclid(const GaloisField& f, const Vec& syn, unsigned nk,
                                        unsigned stop_deg) {
    Vec r_prev(nk + 1, 0);
    r_prev[nk] = 1;
    Vec r_cur = poly_trim(syn);
    Vec v_prev{}, v_cur{1};
    while (poly_deg(r_cur) >= (int)stop_deg) {
        auto [q, rem] = poly_divmod(f, r_prev, r_cur);
        Vec v_next = poly_add(f, v_prev, poly_mul(f, q, v_cur));  // char-2 safe: add == sub
        // general fields need v_prev - q*v_cur
        if (f.characteristic() != 2) {
            Vec qv = poly_mul(f, q, v_cur);
            for (auto& c : qv) c = f.neg(c);
            v_next = poly_add(f, v_prev, qv);
        }
        r_prev = r_cur;
        r_cur = rem;
        v_prev = v_cur;
        v_cur = v_next;
        if (poly_deg(r_cur) < 0) break;
    }
    return {v_cur, r_cur};
}

}  // namespace

DecodeResult RsCode::decode_syndrome(const Vec& syn) const {
    if (variant_ != RsVariant::Standard || first_row_ != 0)
        throw BadParameters("syndrome decoding requires the standard row window");
    DecodeResult res;
    unsigned nk = n_ - k_;
    if (syn.size() != nk) throw BadParameters("syndrome length must be n-k");
    if (poly_deg(syn) < 0) {
        res.status = DecodeResult::Status::Corrected;
        return res;
    }
    unsigned t = nk / 2;
    auto [L, W] = key_equation_euclid(f_, syn, nk, t);
    if (L.empty() || L[0] == 0) return res;
    Label norm = f_.inv(L[0]);
    for (auto& c : L) c = f_.mul(norm, c);
    for (auto& c : W) c = f_.mul(norm, c);
    int e = poly_deg(L);
    if (e <= 0 || e > (int)t) return res;
    Vec Lp = poly_derivative(f_, L);
    std::vector<size_t> pos;
    Vec vals;
    for (unsigned i = 0; i < n_; ++i) {
        Label x = f_.alpha_pow(-(long long)i);
        if (poly_eval(f_, L, x) != 0) continue;
        Label denom = poly_eval(f_, Lp, x);
        if (denom == 0) return res;
        Label val = f_.div(poly_eval(f_, W, x), denom);
        if (f_.characteristic() != 2) val = f_.neg(val);
        if (val == 0) return res;
        pos.push_back(i);
        vals.push_back(val);
    }
    if ((int)pos.size() != e) return res;
    res.status = DecodeResult::Status::Corrected;
    res.error_positions = pos;
    res.error_values = vals;
    return res;
}

DecodeResult RsCode::finish_from_codeword(const Vec& received, const Vec& corrected) const {
    DecodeResult res;
    if (!is_codeword(corrected)) return res;
    res.status = DecodeResult::Status::Corrected;
    res.codeword = corrected;
    res.info = info_from_codeword(corrected);
    for (size_t p = 0; p < received.size(); ++p)
        if (received[p] != corrected[p]) {
            res.error_positions.push_back(p);
            res.error_values.push_back(f_.sub(received[p], corrected[p]));
        }
    return res;
}

DecodeResult RsCode::finish_from_errors(const Vec& received, const std::vector<size_t>& pos,
                                        const Vec& vals) const {
    DecodeResult res;
    Vec corrected = received;
    for (size_t i = 0; i < pos.size(); ++i)
        corrected[pos[i]] = f_.sub(corrected[pos[i]], vals[i]);
    if (!is_codeword(corrected)) return res;  // silent-miscorrection guard
    res.status = DecodeResult::Status::Corrected;
    res.codeword = corrected;
    res.info = info_from_codeword(corrected);
    res.error_positions = pos;
    res.error_values = vals;
    return res;
}

DecodeResult RsCode::decode_errors(const Vec& received) const {
    if (received.size() != n_) throw BadParameters("received length must be n");
    if (variant_ == RsVariant::Shortened) {
        Vec padded(f_.q() - 1, 0);
        std::copy(received.begin(), received.end(), padded.begin() + drop_);
        DecodeResult full = full_->decode_errors(padded);
        DecodeResult res;
        if (!full.ok()) return res;
        for (size_t p : full.error_positions)
            if (p < drop_) return res;  // error located in the known-zero prefix
        std::vector<size_t> pos;
        for (size_t p : full.error_positions) pos.push_back(p - drop_);
        return finish_from_errors(received, pos, full.error_values);
    }
    if (variant_ != RsVariant::Standard || first_row_ != 0)
        throw BadParameters("algebraic error decoding requires the standard row window");
    DecodeResult syn_res = decode_syndrome(syndrome(received));
    if (!syn_res.ok()) return DecodeResult{};
    return finish_from_errors(received, syn_res.error_positions, syn_res.error_values);
}

DecodeResult RsCode::decode_erasures(const Vec& received, const std::vector<size_t>& erasures) const {
    if (received.size() != n_) throw BadParameters("received length must be n");
    if (erasures.size() > (size_t)(d_min() - 1))
        throw TooManyErasures("more than d_min - 1 erasures");
    DecodeResult res;
    std::vector<bool> erased(n_, false);
    for (size_t e : erasures) erased.at(e) = true;
    std::vector<size_t> keep;
    for (size_t j = 0; j < n_; ++j)
        if (!erased[j]) keep.push_back(j);
    // any k non-erased columns of G have rank k
    std::vector<size_t> cols(keep.begin(), keep.begin() + k_);
    Vec b(k_);
    for (unsigned i = 0; i < k_; ++i) b[i] = received[cols[i]];
    auto x = solve_left(f_, G_.columns(cols), b);
    if (!x) return res;
    Vec cw = encode_matrix(*x);
    for (size_t j : keep)
        if (cw[j] != received[j]) return res;  // non-erasure corruption present
    res.status = DecodeResult::Status::Corrected;
    res.codeword = cw;
    res.info = *x;
    for (size_t e : erasures)
        if (cw[e] != received[e]) {
            res.error_positions.push_back(e);
            res.error_values.push_back(f_.sub(received[e], cw[e]));
        }
    return res;
}

DecodeResult RsCode::decode_errors_and_erasures(const Vec& received,
                                                const std::vector<size_t>& erasures) const {
    if (received.size() != n_) throw BadParameters("received length must be n");
    if (erasures.size() > (size_t)(d_min() - 1))
        throw TooManyErasures("more than d_min - 1 erasures");
    if (erasures.empty()) return decode_errors(received);
    if (variant_ == RsVariant::Shortened) {
        Vec padded(f_.q() - 1, 0);
        std::copy(received.begin(), received.end(), padded.begin() + drop_);
        std::vector<size_t> shifted;
        for (size_t e : erasures) shifted.push_back(e + drop_);
        DecodeResult full = full_->decode_errors_and_erasures(padded, shifted);
        DecodeResult res;
        if (!full.ok()) return res;
        for (size_t p = 0; p < drop_; ++p)
            if (full.codeword[p] != 0) return res;  // prefix must stay zero
        Vec cropped(full.codeword.begin() + drop_, full.codeword.end());
        return finish_from_codeword(received, cropped);
    }
    if (variant_ != RsVariant::Standard || first_row_ != 0)
        throw BadParameters("algebraic decoding requires the standard row window");

    unsigned nk = n_ - k_;
    unsigned E = (unsigned)erasures.size();
    Vec work = received;
    for (size_t e : erasures) work[e] = 0;
    Vec syn = syndrome(work);

    // erasure locator and modified syndrome
    Vec gamma{1};
    for (size_t e : erasures) gamma = poly_mul(f_, gamma, Vec{1, f_.alpha_pow((long long)e)});
    // note (1 - X a^e) == (1 + X a^e) in characteristic 2
    if (f_.characteristic() != 2) {
        gamma = {1};
        for (size_t e : erasures)
            gamma = poly_mul(f_, gamma, Vec{1, f_.neg(f_.alpha_pow((long long)e))});
    }
    Vec modified = poly_mul(f_, gamma, syn);
    if (modified.size() > nk) modified.resize(nk);

    DecodeResult res;
    unsigned stop = (nk + E) / 2;
    Vec L{1}, W = poly_trim(modified);
    if (poly_deg(modified) >= 0) {
        auto [Lx, Wx] = key_equation_euclid(f_, modified, nk, stop);
        L = Lx;
        W = Wx;
        if (L.empty() || L[0] == 0) return res;
        Label norm = f_.inv(L[0]);
        for (auto& c : L) c = f_.mul(norm, c);
        for (auto& c : W) c = f_.mul(norm, c);
    } else {
        W = {};
    }
    int e_cnt = poly_deg(L);
    if (e_cnt < 0 || 2 * e_cnt + (int)E > (int)nk) return res;

    Vec psi = poly_mul(f_, L, gamma);
    Vec psi_d = poly_derivative(f_, psi);
    std::vector<size_t> pos;
    Vec vals;
    std::vector<bool> is_erasure(n_, false);
    for (size_t e : erasures) is_erasure[e] = true;
    size_t err_roots = 0;
    for (unsigned i = 0; i < n_; ++i) {
        Label x = f_.alpha_pow(-(long long)i);
        if (poly_eval(f_, psi, x) != 0) continue;
        Label denom = poly_eval(f_, psi_d, x);
        if (denom == 0) return res;
        Label val = f_.div(poly_eval(f_, W, x), denom);
        if (f_.characteristic() != 2) val = f_.neg(val);
        if (!is_erasure[i]) {
            if (val == 0) return res;
            ++err_roots;
        }
        if (val != 0) {
            pos.push_back(i);
            vals.push_back(val);
        }
    }
    if ((int)err_roots != e_cnt) return res;
    DecodeResult inner = finish_from_errors(work, pos, vals);
    if (!inner.ok()) return res;
    return finish_from_codeword(received, inner.codeword);
}

Mat RsCode::semi_systematic(unsigned u) const {
    if (u < 1 || u > k_) throw BadParameters("require 1 <= u <= k");
    Mat m = G_;
    // step 1: systematic identity on the first u columns using the top u rows
    for (unsigned col = 0; col < u; ++col) {
        unsigned p = col;
        while (p < u && m(p, col) == 0) ++p;
        if (p == u) throw BadParameters("leading minor singular");  // cannot happen for RS
        if (p != col)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m(col, j), m(p, j));
        Label s = f_.inv(m(col, col));
        for (size_t j = 0; j < m.cols; ++j) m(col, j) = f_.mul(s, m(col, j));
        for (unsigned i = 0; i < u; ++i) {
            if (i == col || m(i, col) == 0) continue;
            Label t = m(i, col);
            for (size_t j = 0; j < m.cols; ++j) m(i, j) = f_.sub(m(i, j), f_.mul(t, m(col, j)));
        }
    }
    // clear the first u columns of the bottom rows
    for (unsigned i = u; i < k_; ++i)
        for (unsigned col = 0; col < u; ++col) {
            Label t = m(i, col);
            if (t == 0) continue;
            for (size_t j = 0; j < m.cols; ++j) m(i, j) = f_.sub(m(i, j), f_.mul(t, m(col, j)));
        }
    // step 2: [I_v | W] on the bottom block, bottom rows only
    for (unsigned col = u; col < k_; ++col) {
        unsigned row = u + (col - u);
        unsigned p = row;
        while (p < k_ && m(p, col) == 0) ++p;
        if (p == k_) throw BadParameters("bottom block singular");  // cannot happen for RS
        if (p != row)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m(row, j), m(p, j));
        Label s = f_.inv(m(row, col));
        for (size_t j = 0; j < m.cols; ++j) m(row, j) = f_.mul(s, m(row, j));
        for (unsigned i = u; i < k_; ++i) {
            if (i == row || m(i, col) == 0) continue;
            Label t = m(i, col);
            for (size_t j = 0; j < m.cols; ++j) m(i, j) = f_.sub(m(i, j), f_.mul(t, m(row, j)));
        }
    }
    return m;
}

unsigned min_distance_bruteforce(const GaloisField& f, const Mat& G) {
    size_t k = G.rows, n = G.cols;
    double total = 1;
    for (size_t i = 0; i < k; ++i) total *= f.q();
    if (total > double(1 << 20)) throw TooLarge("q^k exceeds 2^20");
    Vec x(k, 0), cw(n, 0);
    unsigned best = (unsigned)n + 1;
    // odometer with incremental codeword update
    while (true) {
        size_t pos = 0;
        while (pos < k) {
            Label old = x[pos];
            Label next = (Label)((old + 1) % f.q());
            x[pos] = next;
            // cw += (next - old) * row(pos)
            Label delta = f.sub(next, old);
            for (size_t j = 0; j < n; ++j)
                cw[j] = f.add(cw[j], f.mul(delta, G(pos, j)));
            if (next != 0) break;
            ++pos;
        }
        if (pos == k) break;  // wrapped to all-zero
        unsigned w = 0;
        for (size_t j = 0; j < n; ++j)
            if (cw[j] != 0) ++w;
        if (w > 0 && w < best) best = w;
    }
    return best;
}

unsigned RsCode::min_distance_bruteforce() const { return rsc::min_distance_bruteforce(f_, G_); }

}  // namespace rsc
