#include "b3/cyclo.hpp"

#include <algorithm>
#include <sstream>

namespace b3 {

namespace {

// Exact division of integer polynomials (monic divisor), low-to-high.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num,
                                    const std::vector<mpz_class>& den) {
    const size_t dd = den.size() - 1;
    std::vector<mpz_class> quot(num.size() - dd, 0);
    for (size_t i = num.size(); i-- > dd;) {
        mpz_class c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return quot;
}

std::vector<mpz_class> cyclotomic_poly(unsigned m) {
    // Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d
    std::vector<mpz_class> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = divide_monic(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

void trim_q(std::vector<mpq_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

CycField::CycField(unsigned conductor) : m_(conductor) {
    if (conductor == 0) throw InvalidArgument("conductor must be positive");
    phi_ = cyclotomic_poly(conductor);
    zeta_pow_.resize(m_);
    for (unsigned k = 0; k < m_; ++k) {
        std::vector<mpq_class> c(k + 1, 0);
        c[k] = 1;
        zeta_pow_[k] = CycScalar(this, std::move(c));
    }
}

const CycScalar& CycField::zeta(long k) const {
    long r = k % static_cast<long>(m_);
    if (r < 0) r += m_;
    return zeta_pow_[static_cast<size_t>(r)];
}

const CycScalar& CycField::root_of_unity(unsigned n, long k) const {
    if (n == 0 || m_ % n != 0)
        throw InvalidArgument("root order " + std::to_string(n) +
                              " does not divide conductor " + std::to_string(m_));
    return zeta(k * static_cast<long>(m_ / n));
}

void CycField::reduce(std::vector<mpq_class>& c) const {
    const size_t deg = degree();
    for (size_t i = c.size(); i-- > deg;) {
        mpq_class coeff = c[i];
        if (coeff == 0) continue;
        c[i] = 0;
        // x^i = x^{i-deg} * (x^deg - Phi) since Phi is monic
        for (size_t j = 0; j < deg; ++j) {
            if (phi_[j] != 0) c[i - deg + j] -= coeff * phi_[j];
        }
    }
    if (c.size() > deg) c.resize(deg);
    trim_q(c);
}

CycScalar::CycScalar(const CycField* field, std::vector<mpq_class> coeffs)
    : field_(field), c_(std::move(coeffs)) {
    if (field_)
        field_->reduce(c_);
    else
        trim_q(c_);
}

const CycField* CycScalar::join(const CycScalar& a, const CycScalar& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_ &&
        a.field_->conductor() != b.field_->conductor())
        throw InvalidArgument("scalars from different cyclotomic fields");
    return a.field_ ? a.field_ : b.field_;
}

CycScalar CycScalar::operator-() const {
    CycScalar r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    field_ = join(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim_q(c_);
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
    field_ = join(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim_q(c_);
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    field_ = join(*this, o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    // Fast paths for rational factors, by far the most common case.
    if (o.c_.size() == 1) {
        for (auto& x : c_) x *= o.c_[0];
        return *this;
    }
    if (c_.size() == 1) {
        mpq_class f = c_[0];
        c_ = o.c_;
        for (auto& x : c_) x *= f;
        return *this;
    }
    std::vector<mpq_class> prod(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(prod);
    if (field_)
        field_->reduce(c_);
    else
        trim_q(c_);
    return *this;
}

CycScalar CycScalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (c_.size() == 1) {
        CycScalar r(*this);
        r.c_[0] = mpq_class(1) / r.c_[0];
        return r;
    }
    // Extended Euclid in Q[x] against Phi_M: find u with a*u + Phi*v = 1.
    std::vector<mpq_class> r0, r1 = c_, u0, u1 = {mpq_class(1)};
    for (const auto& z : field_->modulus()) r0.emplace_back(z);
    u0.clear();  // u for Phi is 0
    while (true) {
        trim_q(r1);
        if (r1.empty()) throw DivisionByZero("not invertible mod Phi_M");
        if (r1.size() == 1) {
            for (auto& x : u1) x /= r1[0];
            CycScalar res;
            res.field_ = field_;
            res.c_ = std::move(u1);
            field_->reduce(res.c_);
            return res;
        }
        // r0 = q*r1 + r; u_new = u0 - q*u1
        std::vector<mpq_class> rem = r0;
        const size_t dn = r1.size() - 1;  // divisor degree
        std::vector<mpq_class> q(rem.size() > dn ? rem.size() - dn : 0, 0);
        for (size_t i = rem.size(); i-- > dn;) {
            mpq_class c = rem[i] / r1[dn];
            if (c == 0) continue;
            size_t shift = i - dn;
            q[shift] = c;
            for (size_t j = 0; j <= dn; ++j) rem[shift + j] -= c * r1[j];
        }
        trim_q(rem);
        // u_next = u0 - q*u1
        std::vector<mpq_class> un = u0;
        if (!q.empty() && !u1.empty()) {
            un.resize(std::max(un.size(), q.size() + u1.size() - 1), 0);
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < u1.size(); ++j) un[i + j] -= q[i] * u1[j];
            }
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(un);
    }
}

CycScalar CycScalar::pow(long e) const {
    if (e == 0) return CycScalar(1);
    if (e < 0) return inv().pow(-e);
    CycScalar base(*this), acc(1);
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string CycScalar::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        mpq_class v = c_[k];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (k == 0) {
            os << v;
        } else {
            if (v != 1) os << v << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

size_t CycScalar::hash() const {
    size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& x : c_) {
        size_t hn = mpz_fdiv_ui(x.get_num_mpz_t(), 0xfffffffbUL);
        size_t hd = mpz_fdiv_ui(x.get_den_mpz_t(), 0xfffffffbUL);
        h ^= (hn * 1000003u + hd) + 0x9e3779b9u + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------------------

CycScalar q_number(unsigned long n, const CycScalar& q) {
    if (n == 0) return CycScalar(1);  // (0)_q := 1
    CycScalar sum(0), p(1);
    for (unsigned long s = 0; s < n; ++s) {
        sum += p;
        p *= q;
    }
    return sum;
}

CycScalar q_factorial(unsigned long n, const CycScalar& q) {
    CycScalar prod(1);
    for (unsigned long s = 1; s <= n; ++s) prod *= q_number(s, q);
    return prod;
}

CycScalar q_binomial(unsigned long n, unsigned long k, const CycScalar& q) {
    if (k > n) return CycScalar(0);
    // row-by-row Pascal with q^k weights
    std::vector<CycScalar> row(n + 1);
    row[0] = CycScalar(1);
    for (unsigned long r = 1; r <= n; ++r) {
        CycScalar qpow(1);
        std::vector<CycScalar> next(n + 1);
        next[0] = CycScalar(1);
        for (unsigned long j = 1; j <= r; ++j) {
            qpow *= q;  // q^j
            next[j] = row[j - 1] + qpow * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

CycScalar q_multinomial(unsigned long n, const std::vector<unsigned long>& parts,
                        const CycScalar& q) {
    unsigned long sum = 0;
    for (auto p : parts) sum += p;
    if (sum != n) throw InvalidArgument("multinomial parts do not sum to n");
    CycScalar prod(1);
    unsigned long acc = 0;
    for (auto p : parts) {
        acc += p;
        prod *= q_binomial(acc, p, q);
    }
    return prod;
}

CycScalar xi(unsigned long i, const CycScalar& q33) {
    return CycScalar(1) - q33.pow(-static_cast<long>(i));
}

BetaScalars beta_scalars(const CycScalar& q33) {
    CycScalar denom = CycScalar(1) + q33;
    if (denom.is_zero()) throw DivisionByZero("beta scalars undefined: 1 + q33 = 0");
    BetaScalars b;
    b.beta1 = denom.inv();
    b.beta2 = q33 * b.beta1;
    b.beta = b.beta1 * b.beta2 * xi(2, q33);
    return b;
}

// ---------------------------------------------------------------------------

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(unsigned deg, long coeff) {
    QPoly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, 0);
        p.c_[deg] = coeff;
    }
    return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<mpz_class> prod(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(prod);
    return *this;
}

QPoly QPoly::divide_exact(const QPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<mpz_class> rem = c_;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() < d.c_.size()) {
        if (rem.empty()) return QPoly();
        throw InvalidArgument("polynomial division not exact");
    }
    std::vector<mpz_class> quot(rem.size() - d.c_.size() + 1, 0);
    for (size_t i = rem.size(); i-- > d.c_.size() - 1;) {
        if (rem[i] == 0) continue;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(),
                    d.c_.back().get_mpz_t());
        if (r != 0) throw InvalidArgument("polynomial division not exact");
        size_t shift = i - (d.c_.size() - 1);
        quot[shift] = q;
        for (size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] -= q * d.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw InvalidArgument("polynomial division not exact");
    QPoly res;
    res.c_ = std::move(quot);
    res.trim();
    return res;
}

CycScalar QPoly::eval(const CycScalar& q) const {
    CycScalar acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= q;
        acc += CycScalar(mpq_class(c_[i]));
    }
    return acc;
}

std::string QPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        mpz_class v = c_[k];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (k == 0)
            os << v;
        else {
            if (v != 1) os << v << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

QPoly gauss_number(unsigned long n) {
    QPoly p;
    for (unsigned long s = 0; s < n; ++s) p += QPoly::monomial(static_cast<unsigned>(s));
    if (n == 0) p = QPoly(1);
    return p;
}

QPoly gauss_factorial(unsigned long n) {
    QPoly prod(1);
    for (unsigned long s = 1; s <= n; ++s) prod *= gauss_number(s);
    return prod;
}

QPoly gauss_binomial_pascal(unsigned long n, unsigned long k) {
    if (k > n) return QPoly();
    std::vector<QPoly> row(n + 1);
    row[0] = QPoly(1);
    for (unsigned long r = 1; r <= n; ++r) {
        std::vector<QPoly> next(n + 1);
        next[0] = QPoly(1);
        for (unsigned long j = 1; j <= r; ++j)
            next[j] = row[j - 1] + QPoly::monomial(static_cast<unsigned>(j)) * row[j];
        row = std::move(next);
    }
    return row[k];
}

QPoly gauss_binomial_quotient(unsigned long n, unsigned long k) {
    if (k > n) return QPoly();
    return gauss_factorial(n).divide_exact(gauss_factorial(k) * gauss_factorial(n - k));
}

QPoly gauss_multinomial(unsigned long n, const std::vector<unsigned long>& parts) {
    unsigned long sum = 0;
    for (auto p : parts) sum += p;
    if (sum != n) throw InvalidArgument("multinomial parts do not sum to n");
    QPoly prod(1);
    unsigned long acc = 0;
    for (auto p : parts) {
        acc += p;
        prod *= gauss_binomial_pascal(acc, p);
    }
    return prod;
}

}  // namespace b3
