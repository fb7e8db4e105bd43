#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "b3/errors.hpp"

namespace b3 {

class CycScalar;

/// The cyclotomic field Q(zeta_M) for a fixed conductor M, represented as
/// Q[x]/Phi_M(x).  One field object is fixed per session (M = lcm(N,
/// exponent(Gamma))) and every root of unity is embedded as a power of
/// zeta_M, so there is a single reduction polynomial and no coercion
/// between ambient fields.
class CycField {
  public:
    explicit CycField(unsigned conductor);

    unsigned conductor() const { return m_; }
    unsigned degree() const { return static_cast<unsigned>(phi_.size()) - 1; }

    /// Monic minimal polynomial Phi_M, low-to-high integer coefficients.
    const std::vector<mpz_class>& modulus() const { return phi_; }

    /// zeta_M^k in canonical form (k taken mod M).
    const CycScalar& zeta(long k) const;

    /// zeta_n^k for n | M, embedded as zeta_M^{k M/n}.
    const CycScalar& root_of_unity(unsigned n, long k) const;

    /// Reduce a dense coefficient vector mod Phi_M and trim trailing zeros.
    void reduce(std::vector<mpq_class>& c) const;

  private:
    unsigned m_;
    std::vector<mpz_class> phi_;
    std::vector<CycScalar> zeta_pow_;  // zeta_M^0 .. zeta_M^{M-1}
};

/// Element of Q(zeta_M): canonical representative of degree < deg Phi_M with
/// fully reduced rational coefficients.  Two scalars are equal iff their
/// canonical representations are identical.  Immutable in spirit: all
/// operations return new values; freely shareable between threads.
class CycScalar {
  public:
    CycScalar() = default;  // zero (field-agnostic)
    CycScalar(long n) : c_(n == 0 ? 0 : 1, mpq_class(n)) {
        if (n == 0) c_.clear();
    }
    explicit CycScalar(const mpq_class& r) {
        if (r != 0) c_.assign(1, r);
    }
    CycScalar(const CycField* field, std::vector<mpq_class> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_rational() const { return c_.size() <= 1; }
    mpq_class rational_part() const { return c_.empty() ? mpq_class(0) : c_[0]; }

    const CycField* field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    friend bool operator==(const CycScalar& a, const CycScalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    CycScalar inv() const;
    CycScalar pow(long e) const;

    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inv(); }

    /// Deterministic rendering as a reduced zeta-polynomial, e.g.
    /// "1 - 1/2*q^3" where q stands for zeta_M.
    std::string str() const;

    size_t hash() const;

  private:
    friend class CycField;
    const CycField* field_ = nullptr;
    std::vector<mpq_class> c_;  // c_[k] * zeta^k, trailing zeros trimmed

    static const CycField* join(const CycScalar& a, const CycScalar& b);
};

// ---------------------------------------------------------------------------
// q-combinatorics.
//
// (0)_q := 1, (n)_q := sum_{s<n} q^s, (n)_q! := prod_{s<=n} (s)_q.
// Binomials and multinomials at a root of unity are computed through the
// Pascal recurrence binom(n,k)_q = binom(n-1,k-1)_q + q^k binom(n-1,k)_q,
// never as a quotient of factorials: the quotient divides by zero exactly
// where the vanishing arguments live.
// ---------------------------------------------------------------------------

CycScalar q_number(unsigned long n, const CycScalar& q);
CycScalar q_factorial(unsigned long n, const CycScalar& q);
CycScalar q_binomial(unsigned long n, unsigned long k, const CycScalar& q);

/// (n; parts)_q; throws InvalidArgument unless the parts sum to n.
CycScalar q_multinomial(unsigned long n, const std::vector<unsigned long>& parts,
                        const CycScalar& q);

/// xi_i = 1 - q33^{-i}.
CycScalar xi(unsigned long i, const CycScalar& q33);

struct BetaScalars {
    CycScalar beta1;  // 1/(1+q33)
    CycScalar beta2;  // q33/(1+q33)
    CycScalar beta;   // beta1*beta2*xi_2
};

/// Throws DivisionByZero when 1 + q33 = 0 (excluded: N odd).
BetaScalars beta_scalars(const CycScalar& q33);

// ---------------------------------------------------------------------------
// Z[q]: dense integer polynomials in an indeterminate q.  Used for the
// generic (unspecialized) Gaussian-binomial identities and as the
// independent polynomial route the Pascal evaluation is checked against.
// ---------------------------------------------------------------------------

class QPoly {
  public:
    QPoly() = default;
    QPoly(long n) : c_(n == 0 ? 0 : 1, mpz_class(n)) {
        if (n == 0) c_.clear();
    }
    static QPoly monomial(unsigned deg, long coeff = 1);

    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }

    /// Exact division; throws InvalidArgument if the division is not exact.
    QPoly divide_exact(const QPoly& d) const;

    CycScalar eval(const CycScalar& q) const;

    std::string str() const;

  private:
    void trim();
    std::vector<mpz_class> c_;
};

QPoly gauss_number(unsigned long n);                          // (n)_q over Z[q]
QPoly gauss_factorial(unsigned long n);                       // (n)_q!
QPoly gauss_binomial_pascal(unsigned long n, unsigned long k);  // Pascal route
QPoly gauss_binomial_quotient(unsigned long n, unsigned long k);  // factorial route
QPoly gauss_multinomial(unsigned long n, const std::vector<unsigned long>& parts);

}  // namespace b3
