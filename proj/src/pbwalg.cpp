#include "b3/pbwalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace b3 {

namespace {

std::vector<Root> expand_letters(const PbwExp& e) {
    std::vector<Root> out;
    for (int p = 0; p < kNumRoots; ++p) {
        Root r = root_at_pbw_pos(p);
        for (int k = 0; k < e[p]; ++k) out.push_back(r);
    }
    return out;
}

std::string word_str(const std::vector<Root>& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += root_info(w[i]).gen_name;
    }
    return s;
}

unsigned long default_step_budget() {
    if (const char* env = std::getenv("B3_STEP_BUDGET")) {
        unsigned long v = std::strtoul(env, nullptr, 10);
        if (v > 0) return v;
    }
    return 10'000'000UL;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomials and elements.
// ---------------------------------------------------------------------------

std::array<int, 3> pbw_degree(const PbwExp& e) {
    std::array<int, 3> d{};
    for (int p = 0; p < kNumRoots; ++p) {
        const auto& rd = root_info(root_at_pbw_pos(p)).degree;
        for (int i = 0; i < 3; ++i) d[i] += e[p] * rd[i];
    }
    return d;
}

long pbw_filtration(const PbwExp& e) {
    long f = 0;
    for (int p = 0; p < kNumRoots; ++p) f += static_cast<long>(e[p]) * root_info(root_at_pbw_pos(p)).height;
    return f;
}

bool PbwMonomial::is_group_like() const {
    for (auto v : exp)
        if (v) return false;
    return true;
}

std::string PbwMonomial::str() const {
    std::ostringstream os;
    bool any = false;
    for (int p = 0; p < kNumRoots; ++p) {
        if (!exp[p]) continue;
        if (any) os << "*";
        os << root_info(root_at_pbw_pos(p)).gen_name;
        if (exp[p] > 1) os << "^" << exp[p];
        any = true;
    }
    if (!grp.is_identity()) {
        if (any) os << "*";
        os << grp.str();
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

size_t PbwMonomial::hash() const {
    size_t h = 0xcbf29ce484222325ULL;
    for (auto v : exp) h = (h ^ v) * 0x100000001b3ULL;
    for (auto v : grp.e) h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

bool PbwMonomialLess::operator()(const PbwMonomial& a, const PbwMonomial& b) const {
    long fa = a.filtration(), fb = b.filtration();
    if (fa != fb) return fa < fb;
    if (a.exp != b.exp) return a.exp < b.exp;
    return a.grp < b.grp;
}

AlgElement AlgElement::term(PbwMonomial m, MuScalar c) {
    AlgElement e;
    if (!c.is_zero()) e.terms_.push_back({std::move(m), std::move(c)});
    return e;
}

MuScalar AlgElement::coeff(const PbwMonomial& m) const {
    PbwMonomialLess less;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [&](const Term& t, const PbwMonomial& k) { return less(t.first, k); });
    if (it != terms_.end() && it->first == m) return it->second;
    return MuScalar();
}

std::array<int, 3> AlgElement::homogeneous_degree() const {
    if (terms_.empty()) return {0, 0, 0};
    std::array<int, 3> d = terms_[0].first.degree();
    for (const auto& t : terms_)
        if (t.first.degree() != d) throw InvalidArgument("element is not Z^3-homogeneous");
    return d;
}

long AlgElement::max_filtration() const {
    long m = 0;
    for (const auto& t : terms_) m = std::max(m, t.first.filtration());
    return m;
}

AlgElement AlgElement::operator-() const {
    AlgElement r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    PbwMonomialLess less;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && less(terms_[i].first, o.terms_[j].first))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || less(o.terms_[j].first, terms_[i].first)) {
            out.push_back(o.terms_[j++]);
        } else {
            MuScalar c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) out.push_back({terms_[i].first, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    return *this += -o;
}

AlgElement& AlgElement::operator*=(const MuScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
    return *this;
}

AlgElement& AlgElement::operator*=(const CycScalar& c) {
    return *this *= MuScalar(c);
}

std::string AlgElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string c = t.second.str();
        bool triv = t.first.exp == PbwExp{} && t.first.grp.is_identity();
        if (c == "1" && !triv) {
            os << t.first.str();
        } else {
            if (c.find(' ') != std::string::npos || c.find('+') != std::string::npos)
                os << "(" << c << ")";
            else
                os << c;
            if (!triv) os << "*" << t.first.str();
        }
    }
    return os.str();
}

size_t AlgElement::hash() const {
    size_t h = 0x2545f4914f6cdd1dULL;
    for (const auto& t : terms_) {
        h ^= t.first.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= t.second.hash();
    }
    return h;
}

// ---------------------------------------------------------------------------
// Rewrite system construction.
// ---------------------------------------------------------------------------

void RewriteSystem::add_tail(Root a, Root b, std::vector<TailTerm> t) {
    int pa = root_info(a).pbw_pos, pb = root_info(b).pbw_pos;
    if (pa >= pb) throw InvalidArgument("tail pair must be given in factor order");
    tails_[pb][pa] = std::move(t);
}

RewriteSystem::RewriteSystem(Datum d, PowerMode mode)
    : datum_(std::move(d)), mode_(mode), step_budget_(default_step_budget()) {
    ValidationReport rep = validate_datum(datum_);
    if (!rep.valid()) throw InvalidArgument("invalid datum: " + rep.str());

    auto deg = [](Root r) { return root_info(r).degree; };
    auto Q = [&](Root x, Root y) { return datum_.braid(deg(x), deg(y)); };
    const CycScalar& q33 = datum_.q33();
    CycScalar x1 = xi(1, q33), x2 = xi(2, q33);
    using R = Root;

    // Tails T_{A,B} = [y_A, y_B]_c for the sorted pair (A before B in the
    // factor order).  Six come from the root-vector definitions, the rest
    // from the commutation table; every unlisted pair q-commutes.
    add_tail(R::a3, R::a2, {{CycScalar(1), {R::a32}}});
    add_tail(R::a2, R::a1, {{CycScalar(1), {R::a21}}});
    add_tail(R::a3, R::a21, {{CycScalar(1), {R::a31}}});
    add_tail(R::a3, R::a32, {{CycScalar(1), {R::at32}}});
    add_tail(R::a3, R::a31, {{CycScalar(1), {R::at31}}});
    add_tail(R::a2, R::at31, {{CycScalar(1), {R::at21}}});
    add_tail(R::a32, R::a1, {{CycScalar(1), {R::a31}}});
    add_tail(R::at32, R::a2, {{Q(R::a32, R::a2) * x1, {R::a32, R::a32}}});
    add_tail(R::at32, R::a1, {{CycScalar(1), {R::at31}}});
    add_tail(R::a32, R::a21, {{Q(R::a32, R::a2) * x2, {R::a2, R::a31}}});
    add_tail(R::a32, R::a31, {{Q(R::a32, R::a2) * x2, {R::a2, R::at31}},
                              {-Q(R::a32, R::a2), {R::at21}}});
    add_tail(R::at31, R::a21, {{Q(R::a31, R::a21) * x1, {R::a31, R::a31}}});
    add_tail(R::at21, R::a1, {{Q(R::a2, R::at21) * x2, {R::at31, R::a21}},
                              {-Q(R::a31, R::a1) * Q(R::a2, R::a32) * x1, {R::a31, R::a31}}});
    add_tail(R::at32, R::a31, {{Q(R::at32, R::a32) * x2, {R::a32, R::at31}}});
    add_tail(R::at32, R::a21, {{Q(R::a32, R::a2) * x2, {R::a32, R::a31}},
                               {-Q(R::at32, R::a2) * q33 * x1 * x2, {R::a2, R::at31}},
                               {Q(R::at32, R::a2) * q33, {R::at21}}});
}

void RewriteSystem::set_power_tail(Root r, AlgElement u) {
    if (mode_ != PowerMode::lifting) throw InvalidArgument("power tails only apply in lifting mode");
    long bound = static_cast<long>(datum_.N) * root_info(r).height;
    if (u.max_filtration() >= bound)
        throw InvalidArgument("power tail must drop filtration degree");
    power_tail_[static_cast<size_t>(r)] = std::move(u);
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    product_cache_.clear();
}

const AlgElement& RewriteSystem::power_tail(Root r) const {
    return power_tail_[static_cast<size_t>(r)];
}

bool RewriteSystem::power_rule_active(Root r) const {
    return mode_ != PowerMode::none && root_info(r).height < power_cutoff_;
}

const std::vector<RewriteSystem::TailTerm>& RewriteSystem::tail(Root a, Root b) const {
    int pa = root_info(a).pbw_pos, pb = root_info(b).pbw_pos;
    if (pa >= pb) throw InvalidArgument("tail pair must be given in factor order");
    return tails_[pb][pa];
}

void RewriteSystem::scale_tail_for_test(Root a, Root b, const CycScalar& factor) {
    int pa = root_info(a).pbw_pos, pb = root_info(b).pbw_pos;
    if (pa > pb) std::swap(pa, pb);
    for (auto& t : tails_[pb][pa]) t.coeff *= factor;
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    product_cache_.clear();
}

// ---------------------------------------------------------------------------
// Element constructors.
// ---------------------------------------------------------------------------

AlgElement RewriteSystem::one() const {
    return AlgElement::term(PbwMonomial{{}, group_identity(datum_.group)}, MuScalar(1));
}

AlgElement RewriteSystem::scalar(MuScalar c) const {
    return AlgElement::term(PbwMonomial{{}, group_identity(datum_.group)}, std::move(c));
}

AlgElement RewriteSystem::gen(Root r) const {
    PbwExp e{};
    e[root_info(r).pbw_pos] = 1;
    return AlgElement::term(PbwMonomial{e, group_identity(datum_.group)}, MuScalar(1));
}

AlgElement RewriteSystem::group_term(const GroupElement& g) const {
    return AlgElement::term(PbwMonomial{{}, g}, MuScalar(1));
}

// ---------------------------------------------------------------------------
// Straightening.
// ---------------------------------------------------------------------------

CycScalar RewriteSystem::chi_of_degree(const std::array<int, 3>& deg, const GroupElement& g) const {
    Character ch = character(datum_.group, std::vector<long>(datum_.group.rank(), 0));
    for (int i = 0; i < 3; ++i)
        if (deg[i]) ch = char_mul(datum_.group, ch, char_pow(datum_.group, datum_.chi[i], deg[i]));
    return datum_.chi_eval(ch, g);
}

std::vector<RewriteSystem::Word> RewriteSystem::swap_step(const Word& ww, size_t i) const {
    Root B = ww.w[i], A = ww.w[i + 1];
    const CycScalar qinv = datum_.braid(root_info(A).degree, root_info(B).degree).inv();
    std::vector<Word> out;

    Word swapped{ww.w, ww.grp, ww.coeff * qinv};
    std::swap(swapped.w[i], swapped.w[i + 1]);
    out.push_back(std::move(swapped));

    for (const auto& t : tails_[root_info(B).pbw_pos][root_info(A).pbw_pos]) {
        Word tw;
        tw.w.reserve(ww.w.size() - 2 + t.word.size());
        tw.w.assign(ww.w.begin(), ww.w.begin() + i);
        tw.w.insert(tw.w.end(), t.word.begin(), t.word.end());
        tw.w.insert(tw.w.end(), ww.w.begin() + i + 2, ww.w.end());
        tw.grp = ww.grp;
        tw.coeff = ww.coeff * (-(qinv * t.coeff));
        out.push_back(std::move(tw));
    }
    return out;
}

std::vector<RewriteSystem::Word> RewriteSystem::power_step(const Word& ww, size_t i, Root r) const {
    const unsigned N = datum_.N;
    std::array<int, 3> suffix_deg{};
    for (size_t k = i + N; k < ww.w.size(); ++k) {
        const auto& rd = root_info(ww.w[k]).degree;
        for (int j = 0; j < 3; ++j) suffix_deg[j] += rd[j];
    }
    std::vector<Word> out;
    for (const auto& [tm, tc] : power_tail_[static_cast<size_t>(r)].terms()) {
        Word nw;
        std::vector<Root> mid = expand_letters(tm.exp);
        nw.w.reserve(ww.w.size() - N + mid.size());
        nw.w.assign(ww.w.begin(), ww.w.begin() + i);
        nw.w.insert(nw.w.end(), mid.begin(), mid.end());
        nw.w.insert(nw.w.end(), ww.w.begin() + i + N, ww.w.end());
        nw.grp = group_mul(datum_.group, ww.grp, tm.grp);
        nw.coeff = ww.coeff * tc * chi_of_degree(suffix_deg, tm.grp);
        out.push_back(std::move(nw));
    }
    return out;
}

void RewriteSystem::straighten(std::vector<Word> work,
                               std::map<PbwMonomial, MuScalar, PbwMonomialLess>& acc) const {
    unsigned long steps = 0;
    const unsigned N = datum_.N;
    while (!work.empty()) {
        Word ww = std::move(work.back());
        work.pop_back();
        if (ww.coeff.is_zero()) continue;

        // first adjacent inversion
        size_t inv = ww.w.size();
        for (size_t i = 0; i + 1 < ww.w.size(); ++i) {
            if (root_info(ww.w[i]).pbw_pos > root_info(ww.w[i + 1]).pbw_pos) {
                inv = i;
                break;
            }
        }
        if (inv < ww.w.size()) {
            if (++steps > step_budget_) throw StepBudgetExceeded("straightening step budget exceeded");
            for (auto& nw : swap_step(ww, inv)) work.push_back(std::move(nw));
            continue;
        }

        // sorted: truncate the first run of N equal letters with an active rule
        size_t run_at = ww.w.size();
        Root run_root = Root::a1;
        if (mode_ != PowerMode::none) {
            size_t i = 0;
            while (i < ww.w.size()) {
                size_t j = i;
                while (j < ww.w.size() && ww.w[j] == ww.w[i]) ++j;
                if (j - i >= N && power_rule_active(ww.w[i])) {
                    run_at = i;
                    run_root = ww.w[i];
                    break;
                }
                i = j;
            }
        }
        if (run_at < ww.w.size()) {
            if (++steps > step_budget_) throw StepBudgetExceeded("straightening step budget exceeded");
            for (auto& nw : power_step(ww, run_at, run_root)) work.push_back(std::move(nw));
            continue;
        }

        PbwMonomial m{{}, ww.grp};
        for (Root r : ww.w) ++m.exp[root_info(r).pbw_pos];
        auto [it, inserted] = acc.try_emplace(std::move(m), ww.coeff);
        if (!inserted) it->second += ww.coeff;
    }
}

AlgElement RewriteSystem::collect(std::map<PbwMonomial, MuScalar, PbwMonomialLess>& acc) const {
    AlgElement out;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.terms_.push_back({m, std::move(c)});
    return out;
}

AlgElement RewriteSystem::normalize_word(const std::vector<Root>& letters, const MuScalar& coeff,
                                         const GroupElement& grp) const {
    std::map<PbwMonomial, MuScalar, PbwMonomialLess> acc;
    straighten({Word{letters, grp, coeff}}, acc);
    return collect(acc);
}

AlgElement RewriteSystem::normalize(const AlgElement& e) const {
    std::map<PbwMonomial, MuScalar, PbwMonomialLess> acc;
    std::vector<Word> work;
    for (const auto& [m, c] : e.terms()) work.push_back({expand_letters(m.exp), m.grp, c});
    straighten(std::move(work), acc);
    return collect(acc);
}

// ---------------------------------------------------------------------------
// Multiplication.
// ---------------------------------------------------------------------------

size_t RewriteSystem::ExpPairHash::operator()(const std::pair<PbwExp, PbwExp>& p) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (auto v : p.first) h = (h ^ v) * 0x100000001b3ULL;
    h = (h ^ 0xff) * 0x100000001b3ULL;
    for (auto v : p.second) h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

const AlgElement& RewriteSystem::mono_product(const PbwExp& a, const PbwExp& b) const {
    auto key = std::make_pair(a, b);
    {
        std::lock_guard<std::mutex> lock(*cache_mutex_);
        auto it = product_cache_.find(key);
        if (it != product_cache_.end()) return it->second;
    }
    std::vector<Root> letters = expand_letters(a);
    std::vector<Root> rb = expand_letters(b);
    letters.insert(letters.end(), rb.begin(), rb.end());
    AlgElement p = normalize_word(letters, MuScalar(1), group_identity(datum_.group));
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    return product_cache_.emplace(std::move(key), std::move(p)).first->second;
}

AlgElement RewriteSystem::multiply(const AlgElement& a, const AlgElement& b) const {
    std::map<PbwMonomial, MuScalar, PbwMonomialLess> acc;
    for (const auto& [m1, c1] : a.terms()) {
        for (const auto& [m2, c2] : b.terms()) {
            // m1 g1 * m2 g2 = chi_{deg m2}(g1) * (m1 m2) g1 g2
            CycScalar cross = chi_of_degree(pbw_degree(m2.exp), m1.grp);
            MuScalar c = c1 * c2;
            c *= cross;
            if (c.is_zero()) continue;
            GroupElement g12 = group_mul(datum_.group, m1.grp, m2.grp);
            const AlgElement& prod = mono_product(m1.exp, m2.exp);
            for (const auto& [pm, pc] : prod.terms()) {
                PbwMonomial m{pm.exp, group_mul(datum_.group, pm.grp, g12)};
                MuScalar v = c * pc;
                if (v.is_zero()) continue;
                auto [it, inserted] = acc.try_emplace(std::move(m), std::move(v));
                if (!inserted) it->second += v;
            }
        }
    }
    return collect(acc);
}

AlgElement RewriteSystem::power(const AlgElement& a, unsigned n) const {
    AlgElement r = one();
    for (unsigned i = 0; i < n; ++i) r = multiply(r, a);
    return r;
}

AlgElement RewriteSystem::commutator(const AlgElement& a, const AlgElement& b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    const CycScalar& q = datum_.braid(a.homogeneous_degree(), b.homogeneous_degree());
    return multiply(a, b) - q * multiply(b, a);
}

// ---------------------------------------------------------------------------
// Local confluence.
// ---------------------------------------------------------------------------

std::vector<OverlapIssue> RewriteSystem::check_local_confluence() const {
    std::vector<OverlapIssue> issues;
    const unsigned N = datum_.N;

    auto resolve = [&](std::vector<Word> words) {
        std::map<PbwMonomial, MuScalar, PbwMonomialLess> acc;
        straighten(std::move(words), acc);
        return collect(acc);
    };
    auto compare = [&](const std::vector<Root>& w, AlgElement lhs, AlgElement rhs) {
        if (lhs != rhs) issues.push_back({word_str(w), (lhs - rhs).str()});
    };

    GroupElement id = group_identity(datum_.group);

    // pair/pair overlaps: strictly descending triples
    for (int pc = 2; pc < kNumRoots; ++pc) {
        for (int pb = 1; pb < pc; ++pb) {
            for (int pa = 0; pa < pb; ++pa) {
                std::vector<Root> w = {root_at_pbw_pos(pc), root_at_pbw_pos(pb), root_at_pbw_pos(pa)};
                Word ww{w, id, MuScalar(1)};
                compare(w, resolve(swap_step(ww, 0)), resolve(swap_step(ww, 1)));
            }
        }
    }

    if (mode_ == PowerMode::none) return issues;

    for (Root r : all_roots()) {
        if (!power_rule_active(r)) continue;
        int pr = root_info(r).pbw_pos;
        for (Root s : all_roots()) {
            if (s == r) continue;
            int ps = root_info(s).pbw_pos;
            if (ps > pr) {
                // y_s * y_r^N: swap the front pair vs truncate the run
                std::vector<Root> w(N + 1, r);
                w[0] = s;
                Word ww{w, id, MuScalar(1)};
                compare(w, resolve(swap_step(ww, 0)), resolve(power_step(ww, 1, r)));
            } else {
                // y_r^N * y_s
                std::vector<Root> w(N + 1, r);
                w[N] = s;
                Word ww{w, id, MuScalar(1)};
                compare(w, resolve(swap_step(ww, N - 1)), resolve(power_step(ww, 0, r)));
            }
        }
        // y_r^{N+1}: truncate the left run vs the right run
        std::vector<Root> w(N + 1, r);
        Word ww{w, id, MuScalar(1)};
        compare(w, resolve(power_step(ww, 0, r)), resolve(power_step(ww, 1, r)));
    }
    return issues;
}

// ---------------------------------------------------------------------------

unsigned long long RewriteSystem::graded_dimension(unsigned d) const {
    std::vector<unsigned long long> dp(d + 1, 0);
    dp[0] = 1;
    for (Root r : all_roots()) {
        int h = root_info(r).height;
        unsigned emax = power_rule_active(r) ? datum_.N - 1 : d / h;
        std::vector<unsigned long long> next(d + 1, 0);
        for (unsigned t = 0; t <= d; ++t) {
            if (!dp[t]) continue;
            for (unsigned e = 0; e <= emax && t + e * h <= d; ++e) next[t + e * h] += dp[t];
        }
        dp = std::move(next);
    }
    return dp[d];
}

}  // namespace b3
