#include "b3/muscalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace b3 {

namespace {
int total_degree(const MuExp& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}
}  // namespace

bool MuScalar::exp_less(const MuExp& a, const MuExp& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

MuScalar::MuScalar(CycScalar c) {
    if (!c.is_zero()) terms_.push_back({MuExp{}, std::move(c)});
}

MuScalar MuScalar::indeterminate(Root r) {
    MuExp e{};
    e[static_cast<size_t>(r)] = 1;
    return monomial(e, CycScalar(1));
}

MuScalar MuScalar::monomial(MuExp e, CycScalar c) {
    MuScalar m;
    if (!c.is_zero()) m.terms_.push_back({e, std::move(c)});
    return m;
}

bool MuScalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
}

CycScalar MuScalar::constant_part() const {
    if (!terms_.empty() && total_degree(terms_[0].exp) == 0) return terms_[0].coeff;
    return CycScalar(0);
}

bool operator==(const MuScalar& a, const MuScalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

MuScalar MuScalar::operator-() const {
    MuScalar r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

void MuScalar::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return exp_less(a.exp, b.exp); });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

MuScalar& MuScalar::operator+=(const MuScalar& o) {
    // merge two sorted term lists
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && exp_less(terms_[i].exp, o.terms_[j].exp))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || exp_less(o.terms_[j].exp, terms_[i].exp)) {
            out.push_back(o.terms_[j++]);
        } else {
            CycScalar c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) out.push_back({terms_[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MuScalar& MuScalar::operator-=(const MuScalar& o) {
    return *this += -o;
}

MuScalar& MuScalar::operator*=(const MuScalar& o) {
    if (terms_.empty() || o.terms_.empty()) {
        terms_.clear();
        return *this;
    }
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            MuExp e;
            for (int k = 0; k < kNumRoots; ++k)
                e[k] = static_cast<std::uint8_t>(a.exp[k] + b.exp[k]);
            prod.push_back({e, a.coeff * b.coeff});
        }
    }
    terms_ = std::move(prod);
    normalize();
    return *this;
}

MuScalar& MuScalar::operator*=(const CycScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

CycScalar MuScalar::specialize(const std::array<CycScalar, kNumRoots>& values) const {
    CycScalar acc(0);
    for (const auto& t : terms_) {
        CycScalar v = t.coeff;
        for (int k = 0; k < kNumRoots; ++k)
            if (t.exp[k]) v *= values[k].pow(t.exp[k]);
        acc += v;
    }
    return acc;
}

std::string MuScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.str();
        bool neg = false;
        if (total_degree(t.exp) > 0 && t.coeff.is_rational()) {
            mpq_class r = t.coeff.rational_part();
            if (r < 0) {
                neg = true;
                c = CycScalar(mpq_class(-r)).str();
            }
        }
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool printed_coeff = false;
        if (total_degree(t.exp) == 0 || c != "1") {
            if (c.find(' ') != std::string::npos || (!t.coeff.is_rational() && total_degree(t.exp) > 0))
                os << "(" << c << ")";
            else
                os << c;
            printed_coeff = true;
        }
        for (int k = 0; k < kNumRoots; ++k) {
            if (!t.exp[k]) continue;
            if (printed_coeff) os << "*";
            os << "mu[" << root_info(static_cast<Root>(k)).name << "]";
            if (t.exp[k] > 1) os << "^" << int(t.exp[k]);
            printed_coeff = true;
        }
    }
    return os.str();
}

size_t MuScalar::hash() const {
    size_t h = 0x51ed270bULL;
    for (const auto& t : terms_) {
        size_t he = 0;
        for (auto e : t.exp) he = he * 31 + e;
        h ^= (he * 1000003u) ^ t.coeff.hash();
        h = h * 0x100000001b3ULL;
    }
    return h;
}

}  // namespace b3
