#include "b3/tensor.hpp"

#include "b3/errors.hpp"

namespace b3 {

TensorElement TensorElement::term(PbwMonomial l, PbwMonomial r, MuScalar c) {
    TensorElement t;
    t.add({std::move(l), std::move(r)}, c);
    return t;
}

void TensorElement::add(TensorKey k, const MuScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator-() const {
    TensorElement t = *this;
    for (auto& [k, c] : t.terms_) c = -c;
    return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const MuScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    // multiplying by a mu polynomial cannot cancel terms
    return *this;
}

TensorElement& TensorElement::operator*=(const CycScalar& c) {
    if (c.is_zero()) terms_.clear();
    else
        for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + k.l.str() + " (x) " + k.r.str();
    }
    return out;
}

void Tensor3Element::add(Key k, const MuScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorAlgebra::tensor(const AlgElement& a, const AlgElement& b) const {
    TensorElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add({ma, mb}, ca * cb);
    return out;
}

TensorElement TensorAlgebra::one() const {
    PbwMonomial id{{}, group_identity(rs_->datum().group)};
    return TensorElement::term(id, id, MuScalar(1));
}

TensorElement TensorAlgebra::multiply(const TensorElement& a, const TensorElement& b) const {
    TensorElement out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            AlgElement left = rs_->multiply(AlgElement::term(ka.l, MuScalar(1)),
                                            AlgElement::term(kb.l, MuScalar(1)));
            AlgElement right = rs_->multiply(AlgElement::term(ka.r, MuScalar(1)),
                                             AlgElement::term(kb.r, MuScalar(1)));
            MuScalar c = ca * cb;
            for (const auto& [lm, lc] : left.terms())
                for (const auto& [rm, rc] : right.terms()) out.add({lm, rm}, c * lc * rc);
        }
    }
    return out;
}

TensorElement TensorAlgebra::power(const TensorElement& a, unsigned n) const {
    TensorElement out = one();
    for (unsigned i = 0; i < n; ++i) out = multiply(out, a);
    return out;
}

const TensorElement& TensorAlgebra::delta_gen(Root r) const {
    auto& slot = delta_gen_[static_cast<size_t>(r)];
    if (slot) return *slot;

    const Datum& d = rs_->datum();
    auto single = [&](Root x) {
        PbwExp e{};
        e[root_info(x).pbw_pos] = 1;
        return PbwMonomial{e, group_identity(d.group)};
    };
    auto commutator_pair = [&](Root a, Root b) {
        const TensorElement &da = delta_gen(a), &db = delta_gen(b);
        const CycScalar& q = d.braid(root_info(a).degree, root_info(b).degree);
        return multiply(da, db) - q * multiply(db, da);
    };

    switch (r) {
        case Root::a1:
        case Root::a2:
        case Root::a3: {
            PbwMonomial y = single(r);
            PbwMonomial id{{}, group_identity(d.group)};
            PbwMonomial g{{}, d.root_g(r)};
            slot = TensorElement::term(y, id, MuScalar(1)) + TensorElement::term(g, y, MuScalar(1));
            break;
        }
        case Root::a21: slot = commutator_pair(Root::a2, Root::a1); break;
        case Root::a32: slot = commutator_pair(Root::a3, Root::a2); break;
        case Root::a31: slot = commutator_pair(Root::a3, Root::a21); break;
        case Root::at32: slot = commutator_pair(Root::a3, Root::a32); break;
        case Root::at31: slot = commutator_pair(Root::a3, Root::a31); break;
        case Root::at21: slot = commutator_pair(Root::a2, Root::at31); break;
    }
    return *slot;
}

const TensorElement& TensorAlgebra::delta_gen_pow(Root r, unsigned k) const {
    auto key = std::make_pair(static_cast<int>(r), k);
    auto it = delta_pow_.find(key);
    if (it != delta_pow_.end()) return it->second;
    TensorElement p = k == 0 ? one() : multiply(delta_gen_pow(r, k - 1), delta_gen(r));
    return delta_pow_.emplace(std::move(key), std::move(p)).first->second;
}

TensorElement TensorAlgebra::coproduct(const AlgElement& e) const {
    TensorElement out;
    for (const auto& [m, c] : e.terms()) {
        TensorElement t = one();
        for (int pos = 0; pos < kNumRoots; ++pos) {
            if (!m.exp[pos]) continue;
            t = multiply(t, delta_gen_pow(root_at_pbw_pos(pos), m.exp[pos]));
        }
        if (!m.grp.is_identity()) {
            PbwMonomial g{{}, m.grp};
            t = multiply(t, TensorElement::term(g, g, MuScalar(1)));
        }
        out += c * t;
    }
    return out;
}

std::optional<GroupElement> TensorAlgebra::is_skew_primitive(const AlgElement& e) const {
    if (e.is_zero()) return std::nullopt;
    PbwMonomial id{{}, group_identity(rs_->datum().group)};
    TensorElement rest = coproduct(e) - tensor(e, AlgElement::term(id, MuScalar(1)));
    if (rest.is_zero()) return std::nullopt;
    const PbwMonomial& lead = rest.terms().begin()->first.l;
    if (!lead.is_group_like()) return std::nullopt;
    GroupElement g = lead.grp;
    PbwMonomial gm{{}, g};
    if (rest == tensor(AlgElement::term(gm, MuScalar(1)), e)) return g;
    return std::nullopt;
}

MuScalar TensorAlgebra::counit(const AlgElement& e) const {
    MuScalar s;
    for (const auto& [m, c] : e.terms())
        if (m.exp == PbwExp{}) s += c;
    return s;
}

const AlgElement& TensorAlgebra::antipode_gen(Root r) const {
    auto& slot = s_gen_[static_cast<size_t>(r)];
    if (slot) return *slot;

    const Datum& d = rs_->datum();
    auto commutator_pair = [&](Root a, Root b) {
        const AlgElement &sa = antipode_gen(a), &sb = antipode_gen(b);
        const CycScalar& q = d.braid(root_info(a).degree, root_info(b).degree);
        return rs_->multiply(sb, sa) - q * rs_->multiply(sa, sb);
    };

    switch (r) {
        case Root::a1:
        case Root::a2:
        case Root::a3:
            slot = -rs_->multiply(rs_->group_term(group_inv(d.group, d.root_g(r))), rs_->gen(r));
            break;
        case Root::a21: slot = commutator_pair(Root::a2, Root::a1); break;
        case Root::a32: slot = commutator_pair(Root::a3, Root::a2); break;
        case Root::a31: slot = commutator_pair(Root::a3, Root::a21); break;
        case Root::at32: slot = commutator_pair(Root::a3, Root::a32); break;
        case Root::at31: slot = commutator_pair(Root::a3, Root::a31); break;
        case Root::at21: slot = commutator_pair(Root::a2, Root::at31); break;
    }
    return *slot;
}

AlgElement TensorAlgebra::antipode(const AlgElement& e) const {
    const Datum& d = rs_->datum();
    AlgElement out;
    for (const auto& [m, c] : e.terms()) {
        // S reverses products: group inverse first, then the factors in
        // reverse PBW order
        AlgElement t = rs_->group_term(group_inv(d.group, m.grp));
        for (int pos = kNumRoots - 1; pos >= 0; --pos)
            for (unsigned k = 0; k < m.exp[pos]; ++k)
                t = rs_->multiply(t, antipode_gen(root_at_pbw_pos(pos)));
        out += c * t;
    }
    return out;
}

Tensor3Element TensorAlgebra::delta_left(const TensorElement& t) const {
    Tensor3Element out;
    for (const auto& [k, c] : t.terms()) {
        TensorElement dl = coproduct(AlgElement::term(k.l, MuScalar(1)));
        for (const auto& [k2, c2] : dl.terms()) out.add({k2.l, k2.r, k.r}, c * c2);
    }
    return out;
}

Tensor3Element TensorAlgebra::delta_right(const TensorElement& t) const {
    Tensor3Element out;
    for (const auto& [k, c] : t.terms()) {
        TensorElement dr = coproduct(AlgElement::term(k.r, MuScalar(1)));
        for (const auto& [k2, c2] : dr.terms()) out.add({k.l, k2.l, k2.r}, c * c2);
    }
    return out;
}

}  // namespace b3
