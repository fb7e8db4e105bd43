#pragma once

#include <map>
#include <vector>

#include "b3/datum.hpp"

namespace b3 {

/// Word in the free generators x1,x2,x3 (letters 0,1,2).
using FreeWord = std::vector<int>;
/// Sparse element of the free algebra; words in lex order, no zero coeffs.
using FreeElement = std::map<FreeWord, CycScalar>;

FreeElement free_word(FreeWord w, CycScalar c = CycScalar(1));
FreeElement free_add(FreeElement a, const FreeElement& b);
FreeElement free_scale(FreeElement a, const CycScalar& c);

/// Brute-force model of the quotient of the free algebra by the two-sided
/// ideal of quantum Serre relations, computed degree block by degree block
/// with exact row echelon over the cyclotomic field.  Entirely independent
/// of the straightening engine: raw words and dense linear algebra only.
class FreeOracle {
  public:
    explicit FreeOracle(Datum d, unsigned degree_budget = 8);

    const Datum& datum() const { return datum_; }

    FreeElement mul(const FreeElement& a, const FreeElement& b) const;
    /// Braided adjoint ad_c(x_i) applied to a Z^3-homogeneous element.
    FreeElement ad(int i, const FreeElement& u) const;
    /// ad_c(x_i)^{1-a_ij}(x_j); for a13 = 0 this is the degree-2 relation
    /// x1 x3 - q13 x3 x1.
    FreeElement serre_relation(int i, int j) const;
    /// [u,v]_c for Z^3-homogeneous u,v.
    FreeElement commutator(const FreeElement& u, const FreeElement& v) const;
    /// Root vector expanded into x-words via the defining commutators.
    FreeElement root_vector(Root r) const;

    /// Dimension of the quotient in total degree d.
    unsigned long long dimension(unsigned d);
    /// Residual of e modulo the relation span (empty iff e = 0 in the
    /// quotient); e may mix degrees up to the budget.
    FreeElement reduce(const FreeElement& e);
    bool is_zero_in_quotient(const FreeElement& e) { return reduce(e).empty(); }

  private:
    struct Block {
        std::vector<FreeWord> words;                // lex sorted
        std::map<FreeWord, size_t> index;
        std::vector<std::vector<CycScalar>> rows;   // reduced row echelon
        std::vector<size_t> pivots;
    };

    std::array<int, 3> multidegree(const FreeWord& w) const;
    std::array<int, 3> element_degree(const FreeElement& e) const;
    const std::vector<FreeWord>& words_of(const std::array<int, 3>& md);
    Block& block(const std::array<int, 3>& md);
    void insert_row(Block& blk, std::vector<CycScalar> row);

    Datum datum_;
    unsigned degree_budget_;
    std::vector<FreeElement> relations_;
    std::map<std::array<int, 3>, std::vector<FreeWord>> word_cache_;
    std::map<std::array<int, 3>, Block> blocks_;
};

class RewriteSystem;

/// Left-minus-right of [y_A, y_B]_c = T_{A,B} for all 36 factor-order
/// pairs, with the tails taken from the rewrite system's rule data and
/// everything expanded into x-words.  Each must reduce to zero; a
/// transcribed-wrong tail shows up as a nonzero residual.
std::vector<std::pair<std::string, FreeElement>> commutation_identities(const FreeOracle& o,
                                                                        const RewriteSystem& rs);

}  // namespace b3
