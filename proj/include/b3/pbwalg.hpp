#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "b3/datum.hpp"
#include "b3/muscalar.hpp"

namespace b3 {

/// Exponent vector of a sorted monomial, indexed by PBW position
/// (0 = leftmost factor y3, 8 = rightmost factor y1).
using PbwExp = std::array<std::uint16_t, kNumRoots>;

std::array<int, 3> pbw_degree(const PbwExp& e);  // Z^3-degree
long pbw_filtration(const PbwExp& e);            // sum of height * exponent

/// Sorted monomial y3^{e0} yt32^{e1} ... y1^{e8} * grp.
struct PbwMonomial {
    PbwExp exp{};
    GroupElement grp;

    friend bool operator==(const PbwMonomial& a, const PbwMonomial& b) {
        return a.exp == b.exp && a.grp == b.grp;
    }
    std::array<int, 3> degree() const { return pbw_degree(exp); }
    long filtration() const { return pbw_filtration(exp); }
    bool is_group_like() const;
    std::string str() const;
    size_t hash() const;
};

/// Filtration degree, then exponent tuple, then group part.
struct PbwMonomialLess {
    bool operator()(const PbwMonomial& a, const PbwMonomial& b) const;
};

/// Element of the algebra: sparse sum of PBW monomials with MuScalar
/// coefficients.  Always stored in normal form with no zero coefficients;
/// the ordering of terms is the monomial order, so equal elements have
/// identical term vectors.
class AlgElement {
  public:
    using Term = std::pair<PbwMonomial, MuScalar>;

    AlgElement() = default;
    static AlgElement term(PbwMonomial m, MuScalar c);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    MuScalar coeff(const PbwMonomial& m) const;

    /// Z^3-degree if every monomial (ignoring group parts) has the same
    /// one; throws InvalidArgument otherwise.
    std::array<int, 3> homogeneous_degree() const;
    long max_filtration() const;

    friend bool operator==(const AlgElement& a, const AlgElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

    AlgElement operator-() const;
    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    AlgElement& operator*=(const MuScalar& c);
    AlgElement& operator*=(const CycScalar& c);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(AlgElement a, const MuScalar& c) { return a *= c; }
    friend AlgElement operator*(AlgElement a, const CycScalar& c) { return a *= c; }
    friend AlgElement operator*(const MuScalar& c, AlgElement a) { return a *= c; }
    friend AlgElement operator*(const CycScalar& c, AlgElement a) { return a *= c; }

    std::string str() const;
    size_t hash() const;

  private:
    friend class RewriteSystem;
    std::vector<Term> terms_;  // sorted by PbwMonomialLess
};

enum class PowerMode {
    none,     // Serre relations only; exponents unbounded
    nichols,  // y_alpha^N -> 0
    lifting,  // y_alpha^N -> u_alpha(mu), installed via set_power_tail
};

struct OverlapIssue {
    std::string overlap;     // the ambiguous word, e.g. "y1*y2*y3"
    std::string difference;  // normal form of resolution A minus resolution B
};

/// Straightening rewrite system over a fixed datum.  Rules:
///   (i)  group parts move right: g * y_alpha = chi_alpha(g) y_alpha g;
///   (ii) out-of-order pair y_B y_A -> q(A,B)^{-1} (y_A y_B - T_{A,B}),
///        tails T from the braided-commutator table;
///   (iii) power rules y_alpha^N -> tail when enabled.
/// Termination order: filtration degree, then letter sequence lex; pair
/// rules keep filtration and strictly drop the lex component, power rules
/// drop filtration (lifting tails live in the group algebra).
class RewriteSystem {
  public:
    struct TailTerm {
        CycScalar coeff;
        std::vector<Root> word;
    };

    RewriteSystem(Datum d, PowerMode mode);

    const Datum& datum() const { return datum_; }
    PowerMode mode() const { return mode_; }
    unsigned N() const { return datum_.N; }

    /// Install the right side of y_r^N (lifting mode).  Tails must have
    /// strictly smaller filtration than N * height(r).
    void set_power_tail(Root r, AlgElement u);
    const AlgElement& power_tail(Root r) const;

    /// Restrict power rules to roots of height < cutoff.  Used to truncate
    /// only the lower strata while probing an element of a given level.
    void set_power_cutoff(int cutoff) { power_cutoff_ = cutoff; }
    bool power_rule_active(Root r) const;

    void set_step_budget(unsigned long b) { step_budget_ = b; }
    unsigned long step_budget() const { return step_budget_; }

    // -- element constructors -------------------------------------------
    AlgElement zero() const { return {}; }
    AlgElement one() const;
    AlgElement scalar(MuScalar c) const;
    AlgElement gen(Root r) const;
    AlgElement group_term(const GroupElement& g) const;

    // -- algebra --------------------------------------------------------
    AlgElement multiply(const AlgElement& a, const AlgElement& b) const;
    AlgElement power(const AlgElement& a, unsigned n) const;
    /// [a,b]_c = a b - q(deg a, deg b) b a; both arguments must be
    /// Z^3-homogeneous.
    AlgElement commutator(const AlgElement& a, const AlgElement& b) const;
    /// Straighten a word of generators (letters left to right) carrying a
    /// coefficient and a trailing group part.
    AlgElement normalize_word(const std::vector<Root>& letters, const MuScalar& coeff,
                              const GroupElement& grp) const;
    /// Re-normalize an element termwise (idempotent on normal forms).
    AlgElement normalize(const AlgElement& e) const;

    /// Resolve every overlap ambiguity both ways and report differences.
    std::vector<OverlapIssue> check_local_confluence() const;

    /// Number of normal-form monomials of filtration degree d, group part
    /// ignored (exponents bounded by N-1 unless mode is none).
    unsigned long long graded_dimension(unsigned d) const;

    /// Test hook: scale one pair-rule tail to fake a transcription error.
    void scale_tail_for_test(Root a, Root b, const CycScalar& factor);

    /// Tail T_{A,B} = [y_A, y_B]_c of the sorted pair (a before b in the
    /// factor order); empty vector = pure q-commutation.
    const std::vector<TailTerm>& tail(Root a, Root b) const;

  private:
    struct Word {
        std::vector<Root> w;
        GroupElement grp;
        MuScalar coeff;
    };

    void add_tail(Root a, Root b, std::vector<TailTerm> t);
    CycScalar chi_of_degree(const std::array<int, 3>& deg, const GroupElement& g) const;
    void straighten(std::vector<Word> work, std::map<PbwMonomial, MuScalar, PbwMonomialLess>& acc) const;
    AlgElement collect(std::map<PbwMonomial, MuScalar, PbwMonomialLess>& acc) const;
    std::vector<Word> swap_step(const Word& ww, size_t i) const;
    std::vector<Word> power_step(const Word& ww, size_t i, Root r) const;
    const AlgElement& mono_product(const PbwExp& a, const PbwExp& b) const;

    Datum datum_;
    PowerMode mode_;
    int power_cutoff_ = 1 << 20;
    unsigned long step_budget_;
    std::array<AlgElement, kNumRoots> power_tail_;
    // tails_[pos(B)][pos(A)] for pos(B) > pos(A); empty = pure q-commutation
    std::array<std::array<std::vector<TailTerm>, kNumRoots>, kNumRoots> tails_;

    struct ExpPairHash {
        size_t operator()(const std::pair<PbwExp, PbwExp>& p) const;
    };
    mutable std::unordered_map<std::pair<PbwExp, PbwExp>, AlgElement, ExpPairHash> product_cache_;
    // behind a pointer so the system stays movable
    mutable std::unique_ptr<std::mutex> cache_mutex_ = std::make_unique<std::mutex>();
};

}  // namespace b3
