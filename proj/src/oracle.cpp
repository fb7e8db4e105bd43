#include "b3/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "b3/pbwalg.hpp"

namespace b3 {

FreeElement free_word(FreeWord w, CycScalar c) {
    FreeElement e;
    if (!c.is_zero()) e.emplace(std::move(w), std::move(c));
    return e;
}

FreeElement free_add(FreeElement a, const FreeElement& b) {
    for (const auto& [w, c] : b) {
        auto [it, inserted] = a.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

FreeElement free_scale(FreeElement a, const CycScalar& c) {
    if (c.is_zero()) return {};
    for (auto& [w, v] : a) v *= c;
    return a;
}

FreeOracle::FreeOracle(Datum d, unsigned degree_budget)
    : datum_(std::move(d)), degree_budget_(degree_budget) {
    ValidationReport rep = validate_datum(datum_);
    if (!rep.valid()) throw InvalidArgument("invalid datum: " + rep.str());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) relations_.push_back(serre_relation(i, j));
}

FreeElement FreeOracle::mul(const FreeElement& a, const FreeElement& b) const {
    FreeElement out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            FreeWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            CycScalar c = ca * cb;
            auto [it, inserted] = out.try_emplace(std::move(w), std::move(c));
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

std::array<int, 3> FreeOracle::multidegree(const FreeWord& w) const {
    std::array<int, 3> md{};
    for (int l : w) ++md[l];
    return md;
}

std::array<int, 3> FreeOracle::element_degree(const FreeElement& e) const {
    if (e.empty()) return {0, 0, 0};
    std::array<int, 3> md = multidegree(e.begin()->first);
    for (const auto& [w, c] : e)
        if (multidegree(w) != md) throw InvalidArgument("free element is not homogeneous");
    return md;
}

FreeElement FreeOracle::ad(int i, const FreeElement& u) const {
    std::array<int, 3> ei{};
    ei[i] = 1;
    const CycScalar& q = datum_.braid(ei, element_degree(u));
    FreeElement xi = free_word({i});
    return free_add(mul(xi, u), free_scale(mul(u, xi), -q));
}

FreeElement FreeOracle::serre_relation(int i, int j) const {
    FreeElement r = free_word({j});
    int reps = 1 - kCartanB3[i][j];
    for (int k = 0; k < reps; ++k) r = ad(i, r);
    return r;
}

FreeElement FreeOracle::commutator(const FreeElement& u, const FreeElement& v) const {
    const CycScalar& q = datum_.braid(element_degree(u), element_degree(v));
    return free_add(mul(u, v), free_scale(mul(v, u), -q));
}

FreeElement FreeOracle::root_vector(Root r) const {
    switch (r) {
        case Root::a1: return free_word({0});
        case Root::a2: return free_word({1});
        case Root::a3: return free_word({2});
        case Root::a21: return commutator(free_word({1}), free_word({0}));
        case Root::a32: return commutator(free_word({2}), free_word({1}));
        case Root::a31: return commutator(free_word({2}), root_vector(Root::a21));
        case Root::at32: return commutator(free_word({2}), root_vector(Root::a32));
        case Root::at31: return commutator(free_word({2}), root_vector(Root::a31));
        case Root::at21: return commutator(free_word({1}), root_vector(Root::at31));
    }
    throw InvalidArgument("bad root");
}

const std::vector<FreeWord>& FreeOracle::words_of(const std::array<int, 3>& md) {
    auto it = word_cache_.find(md);
    if (it != word_cache_.end()) return it->second;
    std::vector<FreeWord> out;
    FreeWord cur;
    std::array<int, 3> left = md;
    // lex enumeration by recursion
    auto rec = [&](auto&& self) -> void {
        if (left == std::array<int, 3>{0, 0, 0}) {
            out.push_back(cur);
            return;
        }
        for (int l = 0; l < 3; ++l) {
            if (!left[l]) continue;
            --left[l];
            cur.push_back(l);
            self(self);
            cur.pop_back();
            ++left[l];
        }
    };
    rec(rec);
    return word_cache_.emplace(md, std::move(out)).first->second;
}

void FreeOracle::insert_row(Block& blk, std::vector<CycScalar> row) {
    // forward-reduce against existing pivots
    for (size_t r = 0; r < blk.rows.size(); ++r) {
        const CycScalar& c = row[blk.pivots[r]];
        if (c.is_zero()) continue;
        CycScalar f = c;  // pivot entries are 1
        for (size_t k = 0; k < row.size(); ++k)
            if (!blk.rows[r][k].is_zero()) row[k] -= f * blk.rows[r][k];
    }
    size_t piv = row.size();
    for (size_t k = 0; k < row.size(); ++k) {
        if (!row[k].is_zero()) {
            piv = k;
            break;
        }
    }
    if (piv == row.size()) return;
    CycScalar inv = row[piv].inv();
    for (auto& v : row) v *= inv;
    // back-substitute to keep earlier rows fully reduced
    for (size_t r = 0; r < blk.rows.size(); ++r) {
        const CycScalar& c = blk.rows[r][piv];
        if (c.is_zero()) continue;
        CycScalar f = c;
        for (size_t k = 0; k < row.size(); ++k)
            if (!row[k].is_zero()) blk.rows[r][k] -= f * row[k];
    }
    // keep rows ordered by pivot column
    size_t at = 0;
    while (at < blk.pivots.size() && blk.pivots[at] < piv) ++at;
    blk.rows.insert(blk.rows.begin() + at, std::move(row));
    blk.pivots.insert(blk.pivots.begin() + at, piv);
}

FreeOracle::Block& FreeOracle::block(const std::array<int, 3>& md) {
    auto it = blocks_.find(md);
    if (it != blocks_.end()) return it->second;
    unsigned total = md[0] + md[1] + md[2];
    if (total > degree_budget_) throw DegreeBudgetExceeded("oracle degree budget exceeded");

    Block blk;
    blk.words = words_of(md);
    for (size_t k = 0; k < blk.words.size(); ++k) blk.index.emplace(blk.words[k], k);

    for (const FreeElement& rel : relations_) {
        std::array<int, 3> rd = multidegree(rel.begin()->first);
        std::array<int, 3> s;
        bool fits = true;
        for (int k = 0; k < 3; ++k) {
            s[k] = md[k] - rd[k];
            if (s[k] < 0) fits = false;
        }
        if (!fits) continue;
        // all splits s = deg(u) + deg(v)
        for (int u0 = 0; u0 <= s[0]; ++u0) {
            for (int u1 = 0; u1 <= s[1]; ++u1) {
                for (int u2 = 0; u2 <= s[2]; ++u2) {
                    std::array<int, 3> ud = {u0, u1, u2};
                    std::array<int, 3> vd = {s[0] - u0, s[1] - u1, s[2] - u2};
                    for (const FreeWord& uw : words_of(ud)) {
                        for (const FreeWord& vw : words_of(vd)) {
                            std::vector<CycScalar> row(blk.words.size());
                            for (const auto& [rw, rc] : rel) {
                                FreeWord w = uw;
                                w.insert(w.end(), rw.begin(), rw.end());
                                w.insert(w.end(), vw.begin(), vw.end());
                                row[blk.index.at(w)] += rc;
                            }
                            insert_row(blk, std::move(row));
                        }
                    }
                }
            }
        }
    }
    return blocks_.emplace(md, std::move(blk)).first->second;
}

unsigned long long FreeOracle::dimension(unsigned d) {
    unsigned long long dim = 0;
    for (int d1 = 0; d1 <= static_cast<int>(d); ++d1) {
        for (int d2 = 0; d2 + d1 <= static_cast<int>(d); ++d2) {
            std::array<int, 3> md = {d1, d2, static_cast<int>(d) - d1 - d2};
            Block& blk = block(md);
            dim += blk.words.size() - blk.rows.size();
        }
    }
    return dim;
}

FreeElement FreeOracle::reduce(const FreeElement& e) {
    // split into multidegree blocks
    std::map<std::array<int, 3>, FreeElement> parts;
    for (const auto& [w, c] : e) parts[multidegree(w)].emplace(w, c);

    FreeElement residual;
    for (auto& [md, part] : parts) {
        Block& blk = block(md);
        std::vector<CycScalar> v(blk.words.size());
        for (const auto& [w, c] : part) v[blk.index.at(w)] = c;
        for (size_t r = 0; r < blk.rows.size(); ++r) {
            const CycScalar& c = v[blk.pivots[r]];
            if (c.is_zero()) continue;
            CycScalar f = c;
            for (size_t k = 0; k < v.size(); ++k)
                if (!blk.rows[r][k].is_zero()) v[k] -= f * blk.rows[r][k];
        }
        for (size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) residual.emplace(blk.words[k], v[k]);
    }
    return residual;
}

std::vector<std::pair<std::string, FreeElement>> commutation_identities(const FreeOracle& o,
                                                                        const RewriteSystem& rs) {
    std::vector<std::pair<std::string, FreeElement>> out;
    for (int pa = 0; pa < kNumRoots; ++pa) {
        for (int pb = pa + 1; pb < kNumRoots; ++pb) {
            Root a = root_at_pbw_pos(pa), b = root_at_pbw_pos(pb);
            // pairs above total degree 6 all q-commute and exceed the
            // oracle's tractable block sizes
            if (root_info(a).height + root_info(b).height > 6) continue;
            FreeElement lhs = o.commutator(o.root_vector(a), o.root_vector(b));
            for (const auto& t : rs.tail(a, b)) {
                FreeElement prod = free_word({});
                for (Root r : t.word) prod = o.mul(prod, o.root_vector(r));
                lhs = free_add(std::move(lhs), free_scale(std::move(prod), -t.coeff));
            }
            std::string name = std::string("[") + root_info(a).gen_name + "," +
                               root_info(b).gen_name + "]_c";
            out.emplace_back(std::move(name), std::move(lhs));
        }
    }
    return out;
}

}  // namespace b3
