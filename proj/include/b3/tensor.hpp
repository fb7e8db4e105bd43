#pragma once

#include <optional>

#include "b3/pbwalg.hpp"

namespace b3 {

struct TensorKey {
    PbwMonomial l, r;
    friend bool operator==(const TensorKey& a, const TensorKey& b) {
        return a.l == b.l && a.r == b.r;
    }
};

struct TensorKeyLess {
    bool operator()(const TensorKey& a, const TensorKey& b) const {
        PbwMonomialLess less;
        if (less(a.l, b.l)) return true;
        if (less(b.l, a.l)) return false;
        return less(a.r, b.r);
    }
};

/// Element of the tensor square: sparse sum of m (x) m' with MuScalar
/// coefficients, both legs in normal form.
class TensorElement {
  public:
    using TermMap = std::map<TensorKey, MuScalar, TensorKeyLess>;

    TensorElement() = default;
    static TensorElement term(PbwMonomial l, PbwMonomial r, MuScalar c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add(TensorKey k, const MuScalar& c);

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const MuScalar& c);
    TensorElement& operator*=(const CycScalar& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const MuScalar& c) { return a *= c; }
    friend TensorElement operator*(TensorElement a, const CycScalar& c) { return a *= c; }
    friend TensorElement operator*(const MuScalar& c, TensorElement a) { return a *= c; }
    friend TensorElement operator*(const CycScalar& c, TensorElement a) { return a *= c; }

    std::string str() const;

  private:
    TermMap terms_;
};

/// Three-legged analogue, used for the coassociativity check.
class Tensor3Element {
  public:
    struct Key {
        PbwMonomial a, b, c;
        friend bool operator==(const Key& x, const Key& y) {
            return x.a == y.a && x.b == y.b && x.c == y.c;
        }
    };
    struct KeyLess {
        bool operator()(const Key& x, const Key& y) const {
            PbwMonomialLess less;
            if (less(x.a, y.a)) return true;
            if (less(y.a, x.a)) return false;
            if (less(x.b, y.b)) return true;
            if (less(y.b, x.b)) return false;
            return less(x.c, y.c);
        }
    };

    bool is_zero() const { return terms_.empty(); }
    void add(Key k, const MuScalar& c);
    friend bool operator==(const Tensor3Element& a, const Tensor3Element& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<Key, MuScalar, KeyLess> terms_;
};

/// Tensor square of the algebra defined by a rewrite system, together with
/// the coproduct, counit and antipode of the bosonization.  Multiplication
/// is componentwise: both legs already live in the (ordinary) Hopf algebra,
/// so no braided twist appears; crossing scalars arise only from the group
/// straightening inside each leg.
class TensorAlgebra {
  public:
    explicit TensorAlgebra(const RewriteSystem& rs) : rs_(&rs) {}

    const RewriteSystem& system() const { return *rs_; }

    TensorElement tensor(const AlgElement& a, const AlgElement& b) const;
    TensorElement one() const;
    TensorElement multiply(const TensorElement& a, const TensorElement& b) const;
    TensorElement power(const TensorElement& a, unsigned n) const;

    /// Algebra-map extension of Delta(y_i) = y_i (x) 1 + g_i (x) y_i,
    /// Delta(g) = g (x) g; root-vector images derived from the defining
    /// commutators and cached.
    TensorElement coproduct(const AlgElement& e) const;

    /// Returns g iff Delta(e) = e (x) 1 + g (x) e exactly.
    std::optional<GroupElement> is_skew_primitive(const AlgElement& e) const;

    MuScalar counit(const AlgElement& e) const;

    /// Anti-automorphism with S(g) = g^{-1}, S(y_i) = -g_i^{-1} y_i.
    AlgElement antipode(const AlgElement& e) const;

    // (Delta (x) id) resp. (id (x) Delta) applied to a tensor element.
    Tensor3Element delta_left(const TensorElement& t) const;
    Tensor3Element delta_right(const TensorElement& t) const;

  private:
    const TensorElement& delta_gen(Root r) const;
    const TensorElement& delta_gen_pow(Root r, unsigned k) const;
    const AlgElement& antipode_gen(Root r) const;

    const RewriteSystem* rs_;
    mutable std::array<std::optional<TensorElement>, kNumRoots> delta_gen_;
    mutable std::map<std::pair<int, unsigned>, TensorElement> delta_pow_;
    mutable std::array<std::optional<AlgElement>, kNumRoots> s_gen_;
};

}  // namespace b3
