#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "b3/cyclo.hpp"
#include "b3/roots.hpp"

namespace b3 {

/// Exponent vector of a monomial in the nine commuting mu indeterminates,
/// indexed by canonical Root order.
using MuExp = std::array<std::uint8_t, kNumRoots>;

/// Polynomial in mu_alpha (alpha in Phi+) with CycScalar coefficients.
/// The zero polynomial has an empty term set; terms are kept sorted by
/// total degree, then lexicographically on the exponent vector.
class MuScalar {
  public:
    struct Term {
        MuExp exp;
        CycScalar coeff;
    };

    MuScalar() = default;
    MuScalar(long n) { *this = MuScalar(CycScalar(n)); }
    explicit MuScalar(CycScalar c);
    static MuScalar indeterminate(Root r);
    static MuScalar monomial(MuExp e, CycScalar c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial.
    CycScalar constant_part() const;
    const std::vector<Term>& terms() const { return terms_; }

    friend bool operator==(const MuScalar& a, const MuScalar& b);
    friend bool operator!=(const MuScalar& a, const MuScalar& b) { return !(a == b); }

    MuScalar operator-() const;
    MuScalar& operator+=(const MuScalar& o);
    MuScalar& operator-=(const MuScalar& o);
    MuScalar& operator*=(const MuScalar& o);
    MuScalar& operator*=(const CycScalar& c);
    friend MuScalar operator+(MuScalar a, const MuScalar& b) { return a += b; }
    friend MuScalar operator-(MuScalar a, const MuScalar& b) { return a -= b; }
    friend MuScalar operator*(MuScalar a, const MuScalar& b) { return a *= b; }
    friend MuScalar operator*(MuScalar a, const CycScalar& b) { return a *= b; }
    friend MuScalar operator*(const CycScalar& a, MuScalar b) { return b *= a; }

    /// Substitute mu_alpha -> values[alpha].
    CycScalar specialize(const std::array<CycScalar, kNumRoots>& values) const;

    /// Deterministic rendering, e.g. "mu[a3]^2*mu[a32]" with scalar
    /// coefficients printed as reduced zeta-polynomials.
    std::string str() const;

    size_t hash() const;

  private:
    static bool exp_less(const MuExp& a, const MuExp& b);
    void normalize();
    std::vector<Term> terms_;
};

}  // namespace b3
