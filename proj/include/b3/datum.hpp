#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "b3/cyclo.hpp"
#include "b3/roots.hpp"

namespace b3 {

/// Finite abelian group given by invariant factors m1 | m2 | ... | mr.
class AbelianGroup {
  public:
    explicit AbelianGroup(std::vector<unsigned> invariant_factors);

    size_t rank() const { return factors_.size(); }
    unsigned factor(size_t i) const { return factors_[i]; }
    const std::vector<unsigned>& factors() const { return factors_; }
    unsigned long long order() const;
    unsigned exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  private:
    std::vector<unsigned> factors_;
};

/// Element of an AbelianGroup: componentwise reduced exponent vector.
struct GroupElement {
    std::vector<std::uint32_t> e;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.e == b.e; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return a.e != b.e; }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.e < b.e; }
    bool is_identity() const;
    std::string str() const;  // "g[e1,...,er]"
};

GroupElement group_identity(const AbelianGroup& G);
GroupElement group_element(const AbelianGroup& G, const std::vector<long>& exps);
GroupElement group_mul(const AbelianGroup& G, const GroupElement& a, const GroupElement& b);
GroupElement group_pow(const AbelianGroup& G, const GroupElement& a, long k);
GroupElement group_inv(const AbelianGroup& G, const GroupElement& a);

/// Character of an AbelianGroup, represented by a dual exponent vector:
/// chi(g) = zeta_M^{sum_i c_i e_i (M/m_i)}.  Evaluation is modular
/// arithmetic; the group is never enumerated.
struct Character {
    std::vector<std::uint32_t> c;

    friend bool operator==(const Character& a, const Character& b) { return a.c == b.c; }
};

Character character(const AbelianGroup& G, const std::vector<long>& exps);
Character char_mul(const AbelianGroup& G, const Character& a, const Character& b);
Character char_pow(const AbelianGroup& G, const Character& a, long k);
bool char_is_trivial(const Character& a);

// ---------------------------------------------------------------------------
// Extended index set {1,2,3,3~,2~} with total order 1 < 2 < 3 < 3~ < 2~.
// ---------------------------------------------------------------------------

enum class ExtIndex : int { i1 = 1, i2 = 2, i3 = 3, i3t = 4, i2t = 5 };

/// [j]: drop the tilde ([3~]=3, [2~]=2, identity on 1..3).
int extended_index(ExtIndex j);

/// Cartan matrix of type B3 (a_32 = -2).
constexpr std::array<std::array<int, 3>, 3> kCartanB3 = {{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}};

/// Cartan datum of type B3 over a finite abelian group.
struct Datum {
    AbelianGroup group;
    std::array<GroupElement, 3> g;
    std::array<Character, 3> chi;
    unsigned N = 0;                          // ord(q33), odd
    std::array<std::array<long, 3>, 3> E{};  // q_ij = zeta_N^{E_ij}
    std::shared_ptr<CycField> field;         // Q(zeta_M), M = lcm(N, exponent)

    /// q_ij for i,j in 1..3.
    const CycScalar& q(int i, int j) const;
    const CycScalar& q33() const { return q(3, 3); }
    /// q_kl for extended indices.
    const CycScalar& q_ext(ExtIndex k, ExtIndex l) const;

    CycScalar chi_eval(const Character& ch, const GroupElement& x) const;

    /// Braiding scalar prod q_ij^{u_i v_j} for two Z^3-degrees.
    const CycScalar& braid(const std::array<int, 3>& u, const std::array<int, 3>& v) const;

    GroupElement root_g(Root r) const;
    Character root_chi(Root r) const;

    /// mask[alpha] is true when mu_alpha may be nonzero
    /// (g_alpha^N != 1 and chi_alpha^N = trivial).
    std::array<bool, kNumRoots> mu_mask() const;
};

struct ValidationIssue {
    std::string check;   // short id, e.g. "cartan(1,2)"
    std::string detail;  // human-readable description of the violation
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
    std::string str() const;
};

ValidationReport validate_datum(const Datum& d);

/// One standard solution of the Cartan condition: Gamma = (Z_{N^2})^3,
/// g_i the unit vectors, E = [[2,-1,0],[-1,2,-1],[0,-1,1]],
/// chi_j(g_i) = zeta_{N^2}^{N E_ij}.  Every g_alpha^N != 1 and
/// chi_alpha^N is trivial, so every mu_alpha may be nonzero.
Datum canonical_datum(unsigned N);

/// (g_alpha, chi_alpha) for a positive root.
std::pair<GroupElement, Character> root_group_data(Root alpha, const Datum& d);

/// q_{ba,dc} = prod over the index rectangle a<=i<=b, c<=j<=d.
CycScalar q_block(ExtIndex b, ExtIndex a, ExtIndex d, ExtIndex c, const Datum& dat);

}  // namespace b3
