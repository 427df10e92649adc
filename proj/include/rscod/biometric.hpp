#ifndef RSCOD_BIOMETRIC_HPP
#define RSCOD_BIOMETRIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rscod/report.hpp"
#include "rscod/rs.hpp"

namespace rsc {
namespace bio {

// template of n symbols (full-vector mode) or t distinct nonzero labels
// (property-set mode; label b points at position log_alpha(b))
struct Template {
    enum class Mode { FullVector, PropertySet };
    Mode mode = Mode::FullVector;
    Vec symbols;
};

enum class Scheme { Syndrome, JW, JWFixedT, JS, JSDodis };

struct VaultRecord {
    Scheme scheme;
    unsigned n = 0, k = 0, t = 0;
    Vec payload;       // syndrome | masked word | altered codeword | Q coefficients
    std::string hash;  // sha-256 of the secret vector, hex
};

// --- syndrome reconstruction -------------------------------------------------
Vec syndrome_enroll(const Vec& biometric, const RsCode& code);
struct Reconstruct {
    bool ok;
    Vec biometric;
};
Reconstruct syndrome_reconstruct(const Vec& noisy, const Vec& stored_syndrome, const RsCode& code);

// --- Juels-Wattenberg (full-length) -------------------------------------------
VaultRecord jw_enroll(const Vec& biometric, const RsCode& code, std::uint64_t seed);
struct AuthResult {
    bool accepted;
    Vec secret;  // recovered P^k on Accept
};
AuthResult jw_auth(const VaultRecord& record, const Vec& noisy, const RsCode& code);

// --- Juels-Wattenberg with t fixed properties ---------------------------------
// biometric = t distinct nonzero labels; non-pointed positions are randomized
VaultRecord jw_fixed_t_enroll(const Vec& properties, const RsCode& code, std::uint64_t seed);
AuthResult jw_fixed_t_auth(const VaultRecord& record, const Vec& properties, const RsCode& code);

// --- Juels-Sudan ----------------------------------------------------------------
VaultRecord js_enroll(const Vec& properties, const RsCode& code, std::uint64_t seed);
AuthResult js_auth(const VaultRecord& record, const Vec& properties, const RsCode& code);

// --- Dodis improved variant: store Q(X) = P(X) + prod (X - b_i) ----------------
VaultRecord js_improved_enroll(const Vec& properties, unsigned k, const RsCode& code,
                               std::uint64_t seed);
AuthResult js_improved_auth(const VaultRecord& record, const Vec& properties, const RsCode& code);

// --- closed-form performance ----------------------------------------------------
struct FarFrr {
    double far = 0;
    double frr = 0;
    double guess_lower = 0;
    double guess_upper = 0;
};
// p: per-symbol error probability; max_pb: largest template prior (guess bound)
FarFrr far_frr_formulas(Scheme scheme, unsigned n, unsigned k, unsigned t, unsigned q, double p,
                        double max_pb = 1.0);
double binomial(unsigned n, unsigned k);

// Monte-Carlo FAR harness with uniformly random impostor templates
SimReport far_sim(Scheme scheme, const RsCode& code, unsigned t, std::uint64_t trials,
                  std::uint64_t seed);
// Monte-Carlo FRR harness at symbol error probability p
SimReport frr_sim(Scheme scheme, const RsCode& code, unsigned t, double p, std::uint64_t trials,
                  std::uint64_t seed);

}  // namespace bio
}  // namespace rsc

#endif
