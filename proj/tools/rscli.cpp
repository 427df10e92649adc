#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rscod/access.hpp"
#include "rscod/biometric.hpp"
#include "rscod/capacity.hpp"
#include "rscod/constrained.hpp"
#include "rscod/defects.hpp"
#include "rscod/middleton.hpp"
#include "rscod/modem.hpp"
#include "rscod/packet.hpp"
#include "rscod/rs.hpp"
#include "rscod/wiretap.hpp"

using json = nlohmann::json;
using namespace rsc;

namespace {

struct Output {
    std::string path;
    std::string format = "csv";
    void emit(const std::string& csv, const std::string& js) const {
        const std::string& text = format == "json" ? js : csv;
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path);
            if (!f) throw ConfigError("cannot open output file " + path);
            f << text;
        }
    }
    void emit_report(const SimReport& rep) const { emit(rep.to_csv(), rep.to_json()); }
    void emit_sweep(const SweepReport& rep) const { emit(rep.to_csv(), rep.to_json()); }
};

json load_json(const std::string& arg) {
    if (arg.empty()) throw ConfigError("--json parameter document or file required");
    try {
        // literal documents are accepted directly, otherwise treat as a path
        if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
        std::ifstream f(arg);
        if (!f) throw ConfigError("cannot open " + arg);
        json j;
        f >> j;
        return j;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad JSON: ") + e.what());
    }
}

GaloisField field_from(const json& j) {
    // "p" doubles as an error probability elsewhere, so "m" wins when present
    if (!j.contains("m") && j.contains("p"))
        return GaloisField::prime(j.at("p").get<unsigned>());
    unsigned m = j.at("m").get<unsigned>();
    if (j.contains("poly")) {
        unsigned poly = j.at("poly").is_string()
                            ? parse_poly_mask(j.at("poly").get<std::string>())
                            : j.at("poly").get<unsigned>();
        return GaloisField::binary(m, poly);
    }
    return GaloisField::binary_default(m);
}

RsVariant variant_from(const std::string& s) {
    if (s == "standard") return RsVariant::Standard;
    if (s == "shortened") return RsVariant::Shortened;
    if (s == "extended") return RsVariant::Extended;
    throw ConfigError("unknown variant " + s);
}

RsCode code_from(const json& j) {
    GaloisField f = field_from(j);
    unsigned n = j.at("n").get<unsigned>();
    unsigned k = j.at("k").get<unsigned>();
    RsVariant v = variant_from(j.value("variant", n == f.q() - 1 ? "standard"
                                                : n == f.q()       ? "extended"
                                                                   : "shortened"));
    unsigned first_row = j.value("first_row", 0u);
    return RsCode(f, n, k, v, first_row);
}

Vec parse_word(const std::string& text) {
    Vec out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back((Label)std::stoul(tok, nullptr, 0));
    }
    return out;
}

Vec vec_from(const json& j) {
    Vec out;
    for (auto& v : j) out.push_back(v.get<Label>());
    return out;
}

std::string word_to_string(const Vec& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

// symbol lists inside CSV fields use ';' so the column layout stays intact
std::string word_to_csv(const Vec& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(w[i]);
    }
    return s;
}

std::vector<double> parse_grid(const std::string& text) {
    double a, b, step;
    char c1, c2;
    std::stringstream ss(text);
    if (!(ss >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
        throw ConfigError("grid must be a:b:step");
    std::vector<double> grid;
    for (double v = a; v <= b + 1e-12; v += step) grid.push_back(v);
    return grid;
}

// CSV symbol matrix: one row per line, comma-separated integer labels
std::vector<Vec> load_csv_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open " + path);
    std::vector<Vec> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        rows.push_back(parse_word(line));
    }
    if (rows.empty()) throw ConfigError("empty matrix in " + path);
    return rows;
}

defects::DefectVector parse_defect_cells(const std::string& text) {
    defects::DefectVector d;
    auto push_tok = [&](const std::string& tok) {
        if (tok == "F" || tok == "f" || tok == "." || tok == "?")
            d.push_back(defects::Cell::Free);
        else if (tok == "S0" || tok == "0")
            d.push_back(defects::Cell::Stuck0);
        else if (tok == "S1" || tok == "1")
            d.push_back(defects::Cell::Stuck1);
        else
            throw ConfigError("defect tokens are F/./?, S0/0, S1/1");
    };
    if (text.find(',') == std::string::npos) {
        for (char c : text) push_tok(std::string(1, c));
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) push_tok(tok);
    }
    return d;
}

// ------------------------------------------------------------------ handlers

int gf_table(const GaloisField& f, const Output& out) {
    std::ostringstream csv;
    csv << "power,polynomial,tuple,inverse\n";
    json rows = json::array();
    for (unsigned i = 1; i <= f.q() - 1; ++i) {
        Label v = f.alpha_pow(i);
        std::string power = "a^" + std::to_string(i);
        std::string invs = "a^" + std::to_string((f.q() - 1 - i) % (f.q() - 1));
        std::string polys = f.label_to_poly_string(v);
        std::string tuple = f.kind() == GaloisField::Kind::Binary ? f.label_to_tuple_string(v)
                                                                  : std::to_string(v);
        csv << power << "," << polys << "," << tuple << "," << invs << "\n";
        rows.push_back({{"power", power},
                        {"label", v},
                        {"polynomial", polys},
                        {"tuple", tuple},
                        {"inverse", invs}});
    }
    out.emit(csv.str(), json{{"table", rows}}.dump(2) + "\n");
    return 0;
}

int rs_run(const std::string& action, const RsCode& code, const std::string& mode, const Vec& word,
           const std::vector<size_t>& erasures, const Output& out) {
    std::ostringstream csv;
    json js;
    int rc = 0;
    if (action == "encode") {
        if (word.size() != code.k()) throw ConfigError("--word must carry k info symbols");
        Vec cw;
        if (mode == "poly")
            cw = code.encode(word);
        else if (mode == "matrix")
            cw = code.encode_matrix(word);
        else if (mode == "systematic")
            cw = code.encode_systematic(word);
        else if (mode == "systematic-poly")
            cw = code.encode_systematic_poly(word);
        else
            throw ConfigError("unknown encode mode " + mode);
        csv << "codeword\n" << word_to_string(cw) << "\n";
        js = {{"codeword", cw}};
    } else {
        if (word.size() != code.n()) throw ConfigError("--word must carry n symbols");
        DecodeResult res = erasures.empty() ? code.decode_errors(word)
                                            : code.decode_errors_and_erasures(word, erasures);
        csv << "status,codeword,info,error_positions,error_values\n";
        if (res.ok()) {
            Vec pos(res.error_positions.begin(), res.error_positions.end());
            csv << "corrected," << word_to_csv(res.codeword) << "," << word_to_csv(res.info)
                << "," << word_to_csv(pos) << "," << word_to_csv(res.error_values) << "\n";
            js = {{"status", "corrected"},
                  {"codeword", res.codeword},
                  {"info", res.info},
                  {"error_positions", res.error_positions},
                  {"error_values", res.error_values}};
        } else {
            csv << "failure,,,,\n";
            js = {{"status", "failure"}};
            rc = 3;
        }
    }
    out.emit(csv.str(), js.dump(2) + "\n");
    return rc;
}

struct PacketCsv {
    std::string g_path;         // combination matrix
    std::string matrix_path;    // received words / array rows
    std::string ids;            // comma-separated identifiers (recover)
};

int packets_run(const std::string& action, const json& j, const PacketCsv& csvin,
                const Output& out) {
    GaloisField f = field_from(j);
    std::ostringstream csv;
    json js;
    if (action == "combine") {
        auto grows = j.at("G");
        Mat G(grows.size(), grows[0].size());
        for (size_t i = 0; i < grows.size(); ++i) G.set_row(i, vec_from(grows[i]));
        std::vector<Vec> packets;
        for (auto& p : j.at("packets")) packets.push_back(vec_from(p));
        auto q = packet::combine(f, packets, G);
        csv << "word\n";
        json arr = json::array();
        for (const auto& w : q) {
            csv << word_to_string(w) << "\n";
            arr.push_back(w);
        }
        js = {{"words", arr}};
    } else if (action == "recover") {
        std::vector<Vec> grows_v;
        if (!csvin.g_path.empty()) {
            grows_v = load_csv_matrix(csvin.g_path);
        } else {
            for (auto& r : j.at("G")) grows_v.push_back(vec_from(r));
        }
        Mat G(grows_v.size(), grows_v[0].size());
        for (size_t i = 0; i < grows_v.size(); ++i) G.set_row(i, grows_v[i]);
        std::vector<Vec> rx;
        if (!csvin.matrix_path.empty()) {
            rx = load_csv_matrix(csvin.matrix_path);
        } else {
            for (auto& p : j.at("received")) rx.push_back(vec_from(p));
        }
        std::vector<unsigned> ids;
        if (!csvin.ids.empty()) {
            for (Label v : parse_word(csvin.ids)) ids.push_back(v);
        } else {
            ids = j.at("ids").get<std::vector<unsigned>>();
        }
        auto block = packet::recover(f, rx, ids, G);
        csv << "packet\n";
        json arr = json::array();
        for (const auto& p : block.packets) {
            csv << word_to_string(p) << "\n";
            arr.push_back(p);
        }
        js = {{"packets", arr}};
    } else {  // mk-decode
        RsCode code = code_from(j);
        packet::CodeArray arr;
        if (!csvin.matrix_path.empty()) {
            arr.rows = load_csv_matrix(csvin.matrix_path);
        } else {
            for (auto& r : j.at("rows")) arr.rows.push_back(vec_from(r));
        }
        arr.row_status.assign(arr.rows.size(), packet::RowStatus::Unknown);
        auto block = packet::mk_decode(arr, code);
        csv << "packet\n";
        json parr = json::array();
        for (const auto& p : block.packets) {
            csv << word_to_string(p) << "\n";
            parr.push_back(p);
        }
        js = {{"packets", parr}};
    }
    out.emit(csv.str(), js.dump(2) + "\n");
    return 0;
}

int sim_aloha(const json& j, std::uint64_t seed, const std::string& sweep, const Output& out) {
    std::uint64_t slots = j.value("slots", 100000ULL);
    if (!sweep.empty()) {
        unsigned T = j.value("T", 64u);
        SweepReport rep;
        rep.name = "aloha";
        rep.axis = "G";
        for (double g : parse_grid(sweep)) {
            access::AccessParams p;
            p.T = T;
            p.p = g / (double)T;
            if (p.p > 1.0) throw ConfigError("G exceeds T");
            rep.grid.push_back(g);
            rep.points.push_back(access::aloha_sim(p, slots, seed));
        }
        out.emit_sweep(rep);
        return 0;
    }
    access::AccessParams p;
    p.T = j.at("T").get<unsigned>();
    p.p = j.at("p").get<double>();
    out.emit_report(access::aloha_sim(p, slots, seed));
    return 0;
}

int sim_array_access(const json& j, std::uint64_t seed, const Output& out) {
    access::AccessParams p;
    p.Z = j.at("Z").get<unsigned>();
    p.T = j.at("T").get<unsigned>();
    RsCode code = code_from(j);
    unsigned N = j.value("N", 16u);
    std::uint64_t blocks = j.value("blocks", 1000ULL);
    out.emit_report(access::array_access_sim(p, code, N, blocks, seed));
    return 0;
}

int sim_titlebaum(const json& j, std::uint64_t seed, const Output& out) {
    unsigned M = j.at("M").get<unsigned>();
    unsigned T = j.at("T").get<unsigned>();
    unsigned L = j.value("L", M);
    std::uint64_t trials = j.value("trials", 100000ULL);
    if (j.value("sweep_eta", false)) {
        SweepReport rep;
        rep.name = "titlebaum";
        rep.axis = "T";
        for (unsigned t = 2; t <= std::min(M - 1, T); ++t) {
            rep.grid.push_back((double)t);
            rep.points.push_back(access::titlebaum_sim(M, t, L, trials, seed));
        }
        out.emit_sweep(rep);
        return 0;
    }
    out.emit_report(access::titlebaum_sim(M, T, L, trials, seed));
    return 0;
}

int sim_xor_access(const json& j, const Output& out) {
    GaloisField f = field_from(j);
    unsigned U = j.at("U").get<unsigned>();
    unsigned k = j.at("k").get<unsigned>();
    access::XorAccess xa(f, U, k);
    std::vector<std::pair<unsigned, Label>> active;
    for (auto& a : j.at("active"))
        active.push_back({a.at(0).get<unsigned>(), a.at(1).get<Label>()});
    Vec z = xa.channel_output(active);
    auto dec = xa.decode(z);
    std::ostringstream csv;
    csv << "status,users,values,eta_asymptote\n";
    json js;
    int rc = 0;
    double eta = access::xor_rate_asymptote(0.1999);
    if (dec.ok()) {
        Vec users(dec.error_positions.begin(), dec.error_positions.end());
        csv << "decoded," << word_to_csv(users) << "," << word_to_csv(dec.error_values)
            << "," << format_double(eta) << "\n";
        js = {{"status", "decoded"},
              {"users", dec.error_positions},
              {"values", dec.error_values},
              {"eta_asymptote", eta}};
    } else {
        csv << "failure,,," << format_double(eta) << "\n";
        js = {{"status", "failure"}, {"eta_asymptote", eta}};
        rc = 3;
    }
    out.emit(csv.str(), js.dump(2) + "\n");
    return rc;
}

modem::BerScheme ber_scheme_from(const std::string& s) {
    if (s == "uncoded") return modem::BerScheme::Uncoded;
    if (s == "spc") return modem::BerScheme::Spc;
    if (s == "rs-hard") return modem::BerScheme::RsHard;
    if (s == "rs-spc-A" || s == "rs-spc-a") return modem::BerScheme::RsSpcA;
    if (s == "rs-spc-B" || s == "rs-spc-b") return modem::BerScheme::RsSpcB;
    throw ConfigError("unknown scheme " + s);
}

int sim_ber(const std::string& scheme, const std::string& grid, std::uint64_t bits,
            std::uint64_t seed, const Output& out) {
    SweepReport rep;
    rep.name = "ber";
    rep.axis = "eb_n0_db";
    for (double snr : parse_grid(grid)) {
        rep.grid.push_back(snr);
        rep.points.push_back(modem::ber_sim(ber_scheme_from(scheme), snr, bits, seed));
    }
    out.emit_sweep(rep);
    return 0;
}

int sim_wiretap(const std::string& scheme, const json& j, std::uint64_t seed, const Output& out) {
    if (scheme == "spc") {
        unsigned n = j.at("n").get<unsigned>();
        double p = j.at("p").get<double>();
        out.emit_report(wiretap::spc_secret_sim(n, p, j.value("trials", 100000ULL), seed));
        return 0;
    }
    if (scheme == "hamming") {
        wiretap::HammingSecret hs;
        double p = j.at("p").get<double>();
        SimReport rep;
        rep.name = "wiretap-hamming";
        rep.seed = seed;
        auto A = hs.weight_distribution();
        rep.put("A0", A[0]);
        rep.put("A3", A[3]);
        rep.put("A4", A[4]);
        rep.put("A7", A[7]);
        rep.put("attacker_error", hs.attacker_error(p));
        out.emit_report(rep);
        return 0;
    }
    if (scheme == "rs-noiseless" || scheme == "rs-noisy") {
        RsCode code = code_from(j);
        const GaloisField& f = code.field();
        SimReport rep;
        rep.name = "wiretap-" + scheme;
        rep.seed = seed;
        double p = j.value("p", 0.0), q = j.value("q", 0.5);
        std::uint64_t trials = j.value("trials", 10000ULL);
        rep.put("secrecy_capacity", wiretap::secrecy_capacity(p, q));
        std::uint64_t attacker_wrong = 0, legal_ok = 0;
        if (scheme == "rs-noiseless") {
            wiretap::RsSecretNoiseless sch(code);
            for (std::uint64_t t = 0; t < trials; ++t) {
                Xoshiro256 rng(hash_seed(seed, t));
                Vec msg(code.k()), sec(code.n() - code.k());
                for (auto& v : msg) v = (Label)rng.below(f.q());
                for (auto& v : sec) v = (Label)rng.below(f.q());
                Vec x = sch.encode(msg, sec);
                auto [m2, s2] = sch.legal_decode(x);
                if (m2 == msg && s2 == sec) ++legal_ok;
                Vec z = x;  // wiretap observation with symbol error rate q
                for (auto& v : z)
                    if (rng.bernoulli(q)) v = f.add(v, (Label)(1 + rng.below(f.q() - 1)));
                if (sch.attacker_estimate(z) != sec) ++attacker_wrong;
            }
        } else {
            unsigned u = j.at("u").get<unsigned>();
            wiretap::RsSecretNoisy sch(code, u);
            rep.put("u", u);
            rep.put("v", sch.v());
            unsigned tmax = code.t_max();
            for (std::uint64_t t = 0; t < trials; ++t) {
                Xoshiro256 rng(hash_seed(seed, t));
                Vec msg(sch.u()), sec(sch.v());
                for (auto& v : msg) v = (Label)rng.below(f.q());
                for (auto& v : sec) v = (Label)rng.below(f.q());
                Vec x = sch.encode(msg, sec);
                // main channel: at most t_max symbol errors keep the legal
                // receiver inside the decoding radius
                Vec y = x;
                unsigned injected = 0;
                for (size_t i = 0; i < y.size() && injected < tmax; ++i)
                    if (rng.bernoulli(p)) {
                        y[i] = f.add(y[i], (Label)(1 + rng.below(f.q() - 1)));
                        ++injected;
                    }
                auto legal = sch.legal_decode(y);
                if (legal.ok && legal.msg == msg && legal.secret == sec) ++legal_ok;
                Vec z = x;
                for (auto& v : z)
                    if (rng.bernoulli(q)) v = f.add(v, (Label)(1 + rng.below(f.q() - 1)));
                if (sch.attacker_estimate(z) != sec) ++attacker_wrong;
            }
        }
        rep.metrics["legal_success"] = bernoulli_metric(legal_ok, trials);
        rep.metrics["attacker_error"] = bernoulli_metric(attacker_wrong, trials);
        out.emit_report(rep);
        return 0;
    }
    if (scheme == "type2") {
        RsCode code = code_from(j);
        SweepReport rep;
        rep.name = "wiretap-type2";
        rep.axis = "mu";
        for (unsigned mu = 0; mu <= code.n(); ++mu) {
            auto eq = wiretap::wiretap2_equivocation(code, mu);
            SimReport point;
            point.name = "equivocation";
            point.put("symbols", eq.symbols);
            point.put("exact", eq.exact ? 1.0 : 0.0);
            rep.grid.push_back((double)mu);
            rep.points.push_back(point);
        }
        out.emit_sweep(rep);
        return 0;
    }
    throw ConfigError("unknown wiretap scheme " + scheme);
}

bio::Scheme bio_scheme_from(const std::string& s) {
    if (s == "syndrome") return bio::Scheme::Syndrome;
    if (s == "jw") return bio::Scheme::JW;
    if (s == "jw-t") return bio::Scheme::JWFixedT;
    if (s == "js") return bio::Scheme::JS;
    if (s == "js-dodis") return bio::Scheme::JSDodis;
    throw ConfigError("unknown vault scheme " + s);
}

int sim_far_frr(const json& j, std::uint64_t seed, const Output& out) {
    RsCode code = code_from(j);
    bio::Scheme scheme = bio_scheme_from(j.at("scheme").get<std::string>());
    unsigned t = j.value("t", 0u);
    double p = j.value("p", 0.05);
    std::uint64_t trials = j.value("trials", 10000ULL);
    auto far = bio::far_sim(scheme, code, t, trials, seed);
    auto frr = bio::frr_sim(scheme, code, t, p, trials, seed ^ 0x5a5a);
    SimReport rep;
    rep.name = "far-frr";
    rep.seed = seed;
    rep.metrics["far"] = far.at("far");
    rep.metrics["frr"] = frr.at("frr");
    auto formulas =
        bio::far_frr_formulas(scheme, code.n(), code.k(), t, code.field().q(), p);
    rep.put("far_bound", formulas.far);
    rep.put("frr_bound", formulas.frr);
    out.emit_report(rep);
    return 0;
}

int vault_run(const std::string& action, const std::string& scheme_name, const json& j,
              std::uint64_t seed, const Output& out) {
    RsCode code = code_from(j);
    bio::Scheme scheme = bio_scheme_from(scheme_name);
    if (action == "enroll") {
        bio::VaultRecord rec;
        if (scheme == bio::Scheme::Syndrome) {
            Vec b = vec_from(j.at("biometric"));
            rec.scheme = scheme;
            rec.n = code.n();
            rec.k = code.k();
            rec.payload = bio::syndrome_enroll(b, code);
        } else if (scheme == bio::Scheme::JW) {
            rec = bio::jw_enroll(vec_from(j.at("biometric")), code, seed);
        } else if (scheme == bio::Scheme::JWFixedT) {
            rec = bio::jw_fixed_t_enroll(vec_from(j.at("properties")), code, seed);
        } else if (scheme == bio::Scheme::JS) {
            rec = bio::js_enroll(vec_from(j.at("properties")), code, seed);
        } else {
            rec = bio::js_improved_enroll(vec_from(j.at("properties")), code.k(), code, seed);
        }
        json js = {{"scheme", scheme_name}, {"n", rec.n},       {"k", rec.k},
                   {"t", rec.t},            {"payload", rec.payload}, {"hash", rec.hash}};
        std::ostringstream csv;
        csv << "payload,hash\n" << word_to_csv(rec.payload) << "," << rec.hash << "\n";
        out.emit(csv.str(), js.dump(2) + "\n");
        return 0;
    }
    // auth
    json r = j.at("record");
    bio::VaultRecord rec;
    rec.scheme = scheme;
    rec.n = r.value("n", code.n());
    rec.k = r.value("k", code.k());
    rec.t = r.value("t", 0u);
    rec.payload = vec_from(r.at("payload"));
    rec.hash = r.value("hash", "");
    bio::AuthResult res{false, {}};
    if (scheme == bio::Scheme::Syndrome) {
        auto rc = bio::syndrome_reconstruct(vec_from(j.at("presented")), rec.payload, code);
        res.accepted = rc.ok;
        res.secret = rc.biometric;
    } else if (scheme == bio::Scheme::JW) {
        res = bio::jw_auth(rec, vec_from(j.at("presented")), code);
    } else if (scheme == bio::Scheme::JWFixedT) {
        res = bio::jw_fixed_t_auth(rec, vec_from(j.at("presented")), code);
    } else if (scheme == bio::Scheme::JS) {
        res = bio::js_auth(rec, vec_from(j.at("presented")), code);
    } else {
        res = bio::js_improved_auth(rec, vec_from(j.at("presented")), code);
    }
    std::ostringstream csv;
    csv << "result,secret\n"
        << (res.accepted ? "accept" : "reject") << "," << word_to_csv(res.secret) << "\n";
    json js = {{"result", res.accepted ? "accept" : "reject"}, {"secret", res.secret}};
    out.emit(csv.str(), js.dump(2) + "\n");
    return res.accepted ? 0 : 3;
}

int eval_capacity(const std::string& model, const json& j, const Output& out) {
    SimReport rep;
    rep.name = "capacity-" + model;
    if (model == "tandem") {
        cap::LinkParams lp;
        lp.eb_n0 = j.at("eb_n0").get<double>();
        lp.f = j.at("f").get<double>();
        lp.L = j.value("L", 2u);
        auto [p1, pl] = cap::tandem_error(lp, j.value("approximate", false));
        rep.put("p1", p1);
        rep.put("pL", pl);
        rep.put("C_d", cap::link_capacity(p1));
        rep.put("C_Ld", cap::link_capacity(pl));
    } else if (model == "coop") {
        auto caps = j.at("capacities").get<std::vector<double>>();
        auto alloc = cap::coop_allocate(caps);
        rep.put("c_df", alloc.c_df);
        rep.put("c_coop", alloc.c_coop);
        for (size_t i = 0; i < alloc.lengths.size(); ++i)
            rep.put("n" + std::to_string(i + 1), alloc.lengths[i]);
    } else if (model == "sharing" || model == "broadcast" || model == "mac") {
        cap::LinkParams lp;
        lp.B = j.at("B").get<double>();
        lp.P = j.at("P").get<double>();
        lp.f = j.at("f").get<double>();
        lp.sigma2 = j.at("sigma2").get<double>();
        cap::SharingSplit split;
        split.alpha = j.value("alpha", 0.5);
        split.gamma = j.value("gamma", 0.5);
        split.delta = j.value("delta", 0.5);
        cap::Unit unit = j.value("unit", std::string("nats")) == "bits" ? cap::Unit::Bits
                                                                        : cap::Unit::Nats;
        auto strategy = model == "broadcast" ? cap::Sharing::BC
                        : model == "mac"     ? cap::Sharing::MAC
                                             : cap::Sharing::TS;
        if (j.contains("strategy")) {
            std::string s = j.at("strategy").get<std::string>();
            strategy = s == "ts"    ? cap::Sharing::TS
                       : s == "fs"  ? cap::Sharing::FS
                       : s == "rep" ? cap::Sharing::REP
                       : s == "rep*" ? cap::Sharing::REPstar
                       : s == "bc"  ? cap::Sharing::BC
                                    : cap::Sharing::MAC;
        }
        auto [r1, r2] = cap::sharing_rates(lp, strategy, split, unit);
        rep.put("R1", r1);
        rep.put("R2", r2);
    } else if (model == "impulse") {
        cap::MiddletonParams mp;
        mp.A = j.at("A").get<double>();
        mp.gamma = j.at("gamma").get<double>();
        mp.sigma_g2 = j.value("sigma_g2", 1.0);
        double P = j.at("P").get<double>(), B = j.at("B").get<double>();
        rep.put("C_pp", cap::impulse_capacity(cap::StateInfo::Both, mp, P, B).bits_per_second);
        rep.put("C_mp", cap::impulse_capacity(cap::StateInfo::RxOnly, mp, P, B).bits_per_second);
        rep.put("C_mm", cap::impulse_capacity(cap::StateInfo::Neither, mp, P, B).bits_per_second);
        auto pm = cap::impulse_capacity(cap::StateInfo::TxOnly, mp, P, B);
        rep.put("C_pm_upper_bound", pm.bits_per_second);
    } else if (model == "waterfill") {
        double P = j.at("P").get<double>(), B = j.at("B").get<double>();
        auto vars = j.at("variances").get<std::vector<double>>();
        std::vector<double> shares;
        if (j.contains("shares")) shares = j.at("shares").get<std::vector<double>>();
        auto powers = cap::waterfill_n(P, B, vars, shares);
        for (size_t i = 0; i < powers.size(); ++i)
            rep.put("P" + std::to_string(i + 1), powers[i]);
        rep.put("rate_bits", cap::waterfill_rate(B, vars, powers, shares));
    } else {
        throw ConfigError("unknown capacity model " + model);
    }
    out.emit_report(rep);
    return 0;
}

int noise_middleton(const json& j, std::uint64_t count, std::uint64_t seed, const Output& out) {
    cap::MiddletonParams mp;
    mp.A = j.value("A", 0.01);
    mp.gamma = j.value("gamma", 0.01);
    mp.sigma_g2 = j.value("sigma_g2", 1.0);
    auto samples = cap::middleton_sample(mp, count, seed);
    std::ostringstream csv;
    for (double v : samples) csv << format_double(v) << "\n";
    json js = {{"samples", samples}};
    out.emit(csv.str(), js.dump() + "\n");
    return 0;
}

int constrained_run(const std::string& action, const json& j, const Output& out) {
    using namespace constrained;
    std::ostringstream csv;
    json js;
    if (action == "avoid") {
        RsCode code = code_from(j);
        std::set<Label> avoid;
        for (auto& v : j.at("avoid")) avoid.insert(v.get<Label>());
        AvoidanceConfig cfg(code, j.at("kappa").get<unsigned>(), j.at("r").get<unsigned>(), avoid);
        if (j.contains("info")) {
            auto res = avoid_encode(cfg, vec_from(j.at("info")));
            csv << "codeword,control\n"
                << word_to_csv(res.codeword) << "," << word_to_csv(res.control) << "\n";
            js = {{"codeword", res.codeword}, {"control", res.control}};
        } else {
            auto info = avoid_decode(cfg, vec_from(j.at("codeword")));
            csv << "info\n" << word_to_string(info) << "\n";
            js = {{"info", info}};
        }
    } else if (action == "rll") {
        RllCode code = rll_table_7_1();
        if (j.contains("messages")) {
            auto msgs = j.at("messages").get<std::vector<unsigned>>();
            auto stream = rll_encode(code, msgs);
            std::string bits;
            for (int b : stream) bits += char('0' + b);
            csv << "stream\n" << bits << "\n";
            js = {{"stream", bits}};
        } else {
            std::string bits = j.at("stream").get<std::string>();
            std::vector<int> stream;
            for (char c : bits) stream.push_back(c - '0');
            auto msgs = rll_decode_hard(code, stream);
            csv << "messages\n";
            for (size_t i = 0; i < msgs.size(); ++i) csv << (i ? "," : "") << msgs[i];
            csv << "\n";
            js = {{"messages", msgs}};
        }
    } else if (action == "odp") {
        GaloisField f = field_from(j);
        Mat G(0, 0);
        if (j.contains("G")) {
            auto rows = j.at("G");
            G = Mat(rows.size(), rows[0].size());
            for (size_t i = 0; i < rows.size(); ++i) G.set_row(i, vec_from(rows[i]));
        } else {
            RsCode code = code_from(j);
            G = code.G();
        }
        auto dir = j.value("direction", std::string("deletion")) == "extension"
                       ? OdpDirection::Extension
                       : OdpDirection::Deletion;
        auto mode = j.value("mode", std::string("greedy")) == "exhaustive" ? OdpMode::Exhaustive
                                                                           : OdpMode::Greedy;
        auto prof = odp(f, G, dir, mode);
        csv << "profile\n";
        for (size_t i = 0; i < prof.size(); ++i) csv << (i ? "," : "") << prof[i];
        csv << "\n";
        js = {{"profile", prof}};
    } else if (action == "same-weight") {
        GaloisField f = field_from(j);
        SameWeightCode code(f, j.at("n").get<unsigned>(), j.at("k").get<unsigned>());
        if (j.contains("info")) {
            Vec cw = code.encode(vec_from(j.at("info")));
            csv << "codeword\n" << word_to_string(cw) << "\n";
            js = {{"codeword", cw}};
        } else {
            auto res = code.decode(vec_from(j.at("received")));
            if (!res.ok) {
                out.emit("status\nfailure\n", "{\"status\": \"failure\"}\n");
                return 3;
            }
            csv << "info\n" << word_to_string(res.info) << "\n";
            js = {{"info", res.info}};
        }
    } else {
        throw ConfigError("unknown constrained action " + action);
    }
    out.emit(csv.str(), js.dump(2) + "\n");
    return 0;
}

int defects_run(const std::string& action, const std::string& variant, const json& j,
                const Output& out) {
    using namespace defects;
    std::ostringstream csv;
    json js;
    auto ints = [&](const json& a) {
        std::vector<int> v;
        for (auto& x : a) v.push_back(x.get<int>());
        return v;
    };
    auto bits_to_string = [](const std::vector<int>& v) {
        std::string s;
        for (int b : v) s += char('0' + b);
        return s;
    };
    if (action == "sweep") {
        if (variant == "kt") {
            unsigned n = j.at("n").get<unsigned>();
            unsigned k = j.at("k").get<unsigned>();
            SweepReport rep;
            rep.name = "kt-bound";
            rep.axis = "t";
            for (unsigned t = 0; t + k <= n; t += std::max(1u, (n - k) / 16)) {
                auto b = kt_bound(n, k, t);
                SimReport point;
                point.put("log_f_bound", b.log_f_bound);
                point.put("r_bound", b.r_bound);
                rep.grid.push_back((double)t);
                rep.points.push_back(point);
            }
            out.emit_sweep(rep);
            return 0;
        }
        // wom rate sweep over p
        SweepReport rep;
        rep.name = "wom-rate";
        rep.axis = "p";
        for (double p = 0.0; p <= 1.0 + 1e-12; p += 0.05) {
            SimReport point;
            point.put("total_rate", wom_total_rate(p));
            rep.grid.push_back(p);
            rep.points.push_back(point);
        }
        out.emit_sweep(rep);
        return 0;
    }
    if (variant == "one") {
        if (action == "write") {
            auto stored =
                one_defect_write(ints(j.at("info")), parse_defect_cells(j.at("defects")));
            csv << "stored\n" << bits_to_string(stored) << "\n";
            js = {{"stored", bits_to_string(stored)}};
        } else {
            auto info = one_defect_read(ints(j.at("stored")));
            csv << "info\n" << bits_to_string(info) << "\n";
            js = {{"info", bits_to_string(info)}};
        }
    } else if (variant == "parity") {
        if (action == "write") {
            auto stored = parity_write(j.at("bit").get<int>(), parse_defect_cells(j.at("defects")));
            csv << "stored\n" << bits_to_string(stored) << "\n";
            js = {{"stored", bits_to_string(stored)}};
        } else {
            int bit = parity_read(ints(j.at("stored")));
            csv << "bit\n" << bit << "\n";
            js = {{"bit", bit}};
        }
    } else if (variant == "two") {
        auto code = build_two_defect_matrix(j.value("alpha", 3u));
        if (action == "write") {
            auto stored =
                two_defect_write(code, ints(j.at("info")), parse_defect_cells(j.at("defects")));
            csv << "stored\n" << bits_to_string(stored) << "\n";
            js = {{"stored", bits_to_string(stored)}};
        } else {
            auto info = two_defect_read(code, ints(j.at("stored")));
            csv << "info\n" << bits_to_string(info) << "\n";
            js = {{"info", bits_to_string(info)}};
        }
    } else if (variant == "rs-symbol") {
        GaloisField f = field_from(j);
        RsSymbolMatcher m(f, j.at("n").get<unsigned>(), j.at("k").get<unsigned>(),
                          j.value("delta", 0u));
        if (action == "write") {
            SymbolDefects d(j.at("n").get<unsigned>(), -1);
            for (auto& cell : j.at("defects"))
                d[cell.at(0).get<size_t>()] = cell.at(1).get<int>();
            Vec stored = m.write(vec_from(j.at("info")), d);
            csv << "stored\n" << word_to_string(stored) << "\n";
            js = {{"stored", stored}};
        } else {
            auto r = m.read(vec_from(j.at("stored")));
            if (!r.ok) {
                out.emit("status\nfailure\n", "{\"status\": \"failure\"}\n");
                return 3;
            }
            csv << "info\n" << word_to_string(r.info) << "\n";
            js = {{"info", r.info}};
        }
    } else {
        throw ConfigError("unknown defects variant " + variant);
    }
    out.emit(csv.str(), js.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field and Reed-Solomon coding toolbox"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::uint64_t seed = 1;
    std::string json_path;
    app.add_option("--out", out.path, "output file (default stdout)");
    app.add_option("--format", out.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", seed, "master seed");
    app.add_option("--json", json_path, "JSON parameter document or file");

    // gf
    auto* gf = app.add_subcommand("gf", "Galois field tables");
    gf->fallthrough();
    auto* gft = gf->add_subcommand("table", "print the field element table as CSV");
    gft->fallthrough();
    unsigned gf_m = 3, gf_p = 0;
    std::string gf_poly;
    gft->add_option("--m", gf_m, "extension degree");
    gft->add_option("--p", gf_p, "prime modulus");
    gft->add_option("--poly", gf_poly, "minimal polynomial (0b1011 or 1+X+X^3)");

    // rs
    auto* rs = app.add_subcommand("rs", "Reed-Solomon encode/decode");
    rs->fallthrough();
    std::string rs_action, rs_mode = "poly", rs_variant = "standard", rs_word, rs_erasures,
                rs_poly;
    unsigned rs_m = 3, rs_n = 7, rs_k = 5, rs_first = 0;
    rs->add_option("action", rs_action, "encode|decode")->required();
    rs->add_option("--m", rs_m, "extension degree");
    rs->add_option("--poly", rs_poly, "minimal polynomial");
    rs->add_option("--n", rs_n, "code length");
    rs->add_option("--k", rs_k, "dimension");
    rs->add_option("--variant", rs_variant, "standard|shortened|extended");
    rs->add_option("--first-row", rs_first, "generator row window start");
    rs->add_option("--mode", rs_mode, "poly|matrix|systematic|systematic-poly");
    rs->add_option("--word", rs_word, "comma-separated symbol labels")->required();
    rs->add_option("--erasures", rs_erasures, "comma-separated erased positions");

    // packets
    auto* packets = app.add_subcommand("packets", "packet-level coding");
    packets->fallthrough();
    std::string packets_action;
    PacketCsv packets_csv;
    packets->add_option("action", packets_action, "combine|recover|mk-decode")->required();
    packets->add_option("--g-matrix", packets_csv.g_path, "combination matrix CSV");
    packets->add_option("--matrix", packets_csv.matrix_path, "received rows CSV");
    packets->add_option("--ids", packets_csv.ids, "received word identifiers");

    // sim
    auto* sim = app.add_subcommand("sim", "Monte-Carlo simulators");
    sim->fallthrough();
    std::string sim_kind, sim_sweep, sim_scheme, sim_grid = "2:8:2";
    std::uint64_t sim_bits = 200000;
    sim->add_option("kind", sim_kind, "aloha|array-access|titlebaum|xor-access|ber|wiretap|far-frr")
        ->required();
    sim->add_option("--sweep-g", sim_sweep, "aloha load grid a:b:step");
    sim->add_option("--scheme", sim_scheme, "scheme name for ber/wiretap");
    sim->add_option("--snr-grid", sim_grid, "Eb/N0 dB grid a:b:step");
    sim->add_option("--bits", sim_bits, "minimum simulated bits per point");

    // eval
    auto* eval = app.add_subcommand("eval", "closed-form evaluators");
    eval->fallthrough();
    auto* evalcap = eval->add_subcommand("capacity", "link/broadcast/impulse/waterfill models");
    evalcap->fallthrough();
    std::string eval_model;
    evalcap->add_option("--model", eval_model, "tandem|coop|sharing|broadcast|mac|impulse|waterfill")
        ->required();

    // noise
    auto* noise = app.add_subcommand("noise", "noise sample generators");
    noise->fallthrough();
    auto* middleton = noise->add_subcommand("middleton", "Class-A noise samples, one per line");
    middleton->fallthrough();
    std::uint64_t noise_count = 1000;
    middleton->add_option("--count", noise_count, "sample count");

    // constrained
    auto* cons = app.add_subcommand("constrained", "constrained coding tools");
    cons->fallthrough();
    std::string cons_action;
    cons->add_option("action", cons_action, "avoid|rll|odp|same-weight")->required();

    // defects
    auto* def = app.add_subcommand("defects", "defect-matching codes");
    def->fallthrough();
    std::string def_action, def_variant = "one";
    def->add_option("action", def_action, "write|read|sweep")->required();
    def->add_option("--variant", def_variant, "one|parity|two|rs-symbol|kt|wom");

    // vault
    auto* vault = app.add_subcommand("vault", "biometric vault schemes");
    vault->fallthrough();
    std::string vault_action, vault_scheme;
    vault->add_option("action", vault_action, "enroll|auth")->required();
    vault->add_option("--scheme", vault_scheme, "syndrome|jw|jw-t|js|js-dodis")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gft->parsed()) {
            GaloisField f = gf_p ? GaloisField::prime(gf_p)
                                 : (gf_poly.empty() ? GaloisField::binary_default(gf_m)
                                                    : GaloisField::binary(gf_m, parse_poly_mask(gf_poly)));
            return gf_table(f, out);
        }
        if (rs->parsed()) {
            GaloisField f = rs_poly.empty() ? GaloisField::binary_default(rs_m)
                                            : GaloisField::binary(rs_m, parse_poly_mask(rs_poly));
            RsCode code(f, rs_n, rs_k, variant_from(rs_variant), rs_first);
            Vec word = parse_word(rs_word);
            std::vector<size_t> erasures;
            for (Label e : parse_word(rs_erasures)) erasures.push_back(e);
            if (rs_action != "encode" && rs_action != "decode")
                throw ConfigError("action must be encode or decode");
            return rs_run(rs_action, code, rs_mode, word, erasures, out);
        }
        if (packets->parsed())
            return packets_run(packets_action, load_json(json_path), packets_csv, out);
        if (sim->parsed()) {
            if (sim_kind == "aloha") return sim_aloha(load_json(json_path), seed, sim_sweep, out);
            if (sim_kind == "array-access")
                return sim_array_access(load_json(json_path), seed, out);
            if (sim_kind == "titlebaum") return sim_titlebaum(load_json(json_path), seed, out);
            if (sim_kind == "xor-access") return sim_xor_access(load_json(json_path), out);
            if (sim_kind == "ber") {
                if (sim_scheme.empty()) throw ConfigError("--scheme required for ber");
                return sim_ber(sim_scheme, sim_grid, sim_bits, seed, out);
            }
            if (sim_kind == "wiretap") {
                if (sim_scheme.empty()) throw ConfigError("--scheme required for wiretap");
                return sim_wiretap(sim_scheme, load_json(json_path), seed, out);
            }
            if (sim_kind == "far-frr") return sim_far_frr(load_json(json_path), seed, out);
            throw ConfigError("unknown simulator " + sim_kind);
        }
        if (evalcap->parsed()) return eval_capacity(eval_model, load_json(json_path), out);
        if (middleton->parsed())
            return noise_middleton(json_path.empty() ? json::object() : load_json(json_path),
                                   noise_count, seed, out);
        if (cons->parsed()) return constrained_run(cons_action, load_json(json_path), out);
        if (def->parsed())
            return defects_run(def_action, def_variant, load_json(json_path), out);
        if (vault->parsed())
            return vault_run(vault_action, vault_scheme, load_json(json_path), seed, out);
        throw ConfigError("no subcommand given");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const BadParameters& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
