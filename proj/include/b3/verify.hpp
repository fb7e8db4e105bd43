#pragma once

#include <functional>

#include "b3/liftings.hpp"
#include "b3/tensor.hpp"

namespace b3 {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Line-oriented verification report: one `CHECK <id> PASS|FAIL <detail>`
/// row per item, plus a JSON rendering with per-check timing.
struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    /// Times the body and records its (pass, detail) result; exceptions
    /// become FAIL rows carrying the message.
    void run(const std::string& id, const std::function<std::pair<bool, std::string>()>& body);
    void merge(VerifyReport o);
    std::string lines() const;
    std::string json() const;
};

/// For every rewrite rule of the lifting system, checks that the coproduct
/// of both sides agrees in the tensor square of the quotient and that the
/// counits match.  An empty-failure report certifies the relation ideal is
/// a Hopf ideal, i.e. that the quotient is a Hopf algebra.
VerifyReport verify_hopf_ideal(const Datum& d, const MuFamily& mu);

/// Checks the coproduct collapse of y_alpha^N: the N-th-power sum formula
/// over the untruncated system, then skew-primitivity of the deformation
/// correction nu_alpha over the partially truncated lifting.
VerifyReport verify_power_coproduct(Root alpha, const Datum& d, const MuFamily& mu);

/// Ids accepted by verify_claim_relations, one per root vector whose
/// coproduct power needs a nontrivial tensor-term analysis.
std::vector<std::string> claim_ids();

/// Rebuilds the named tensor-square elements of one coproduct analysis and
/// checks the displayed commutation identities and power conclusions.
VerifyReport verify_claim_relations(const std::string& claim, const Datum& d);

/// Checks the closed commutation / power formulas in the untruncated
/// system at exponent n (exchange identities, b2/b3 multinomial forms, the
/// (y32 - xi2 y3 y2) expansion), including the special N-th-power forms
/// when n = N.
VerifyReport verify_power_formulas(unsigned n, const Datum& d);

/// m(S (x) id)Delta = eta eps = m(id (x) S)Delta on generators, group-likes
/// and random low-degree monomials.
VerifyReport antipode_check(const Datum& d, const MuFamily& mu);

/// beta1^N + beta2^N = 2(1+q33)^{-N}; also records whether the variant
/// exponent -2 happens to agree (it should not for N > 2).
VerifyReport beta_adjudication(const Datum& d);

/// Property tests: coassociativity, counit laws, algebra-map property of
/// Delta and the antipode identities on random monomials of filtration
/// degree <= 4.
VerifyReport hopf_axiom_samples(const Datum& d, const MuFamily& mu, unsigned samples,
                                unsigned seed);

/// Named bundles: all | deg1..deg5 | claims | powers | hopf-ideal |
/// antipode, at tier "fast" (N = 3) or "faithful" (N = 7), over the
/// canonical datum with symbolic mu.
VerifyReport run_suite(const std::string& suite, const std::string& tier);

/// Same bundles over an arbitrary datum.  With heavy_tier the "all" bundle
/// keeps only the filtration <= 3 power coproducts plus the Hopf-ideal,
/// antipode and beta items; otherwise it also runs deg4/deg5, the claim
/// analyses, the power formulas and the random-sample axioms.
VerifyReport run_suite(const std::string& suite, const Datum& d, const MuFamily& mu,
                       bool heavy_tier);

}  // namespace b3
