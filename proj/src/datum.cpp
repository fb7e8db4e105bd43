#include "b3/datum.hpp"

#include <numeric>
#include <sstream>

namespace b3 {

// ---------------------------------------------------------------------------
// Root bookkeeping.
// ---------------------------------------------------------------------------

namespace {

// Indexed by Root enum value.
constexpr std::array<RootInfo, kNumRoots> kRootTable = {{
    {"a1", "y1", {1, 0, 0}, 1, 8},
    {"a2", "y2", {0, 1, 0}, 1, 3},
    {"a3", "y3", {0, 0, 1}, 1, 0},
    {"a21", "y21", {1, 1, 0}, 2, 7},
    {"a32", "y32", {0, 1, 1}, 2, 2},
    {"a31", "y31", {1, 1, 1}, 3, 6},
    {"at32", "yt32", {0, 1, 2}, 3, 1},
    {"at31", "yt31", {1, 1, 2}, 4, 5},
    {"at21", "yt21", {1, 2, 2}, 5, 4},
}};

constexpr std::array<Root, kNumRoots> make_pbw_order() {
    std::array<Root, kNumRoots> order{};
    for (int i = 0; i < kNumRoots; ++i) order[kRootTable[i].pbw_pos] = static_cast<Root>(i);
    return order;
}

constexpr std::array<Root, kNumRoots> kPbwOrder = make_pbw_order();

}  // namespace

const RootInfo& root_info(Root r) {
    return kRootTable[static_cast<size_t>(r)];
}

Root root_at_pbw_pos(int pos) {
    if (pos < 0 || pos >= kNumRoots) throw InvalidArgument("pbw position out of range");
    return kPbwOrder[pos];
}

std::optional<Root> root_by_name(std::string_view name) {
    for (int i = 0; i < kNumRoots; ++i)
        if (name == kRootTable[i].name) return static_cast<Root>(i);
    return std::nullopt;
}

std::optional<Root> root_by_gen_name(std::string_view name) {
    for (int i = 0; i < kNumRoots; ++i)
        if (name == kRootTable[i].gen_name) return static_cast<Root>(i);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Abelian groups and characters.
// ---------------------------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<unsigned> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw InvalidArgument("invariant factor must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw InvalidArgument("invariant factors must form a divisibility chain");
    }
}

unsigned long long AbelianGroup::order() const {
    unsigned long long n = 1;
    for (unsigned m : factors_) n *= m;
    return n;
}

bool GroupElement::is_identity() const {
    for (auto v : e)
        if (v) return false;
    return true;
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "g[";
    for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "]";
    return os.str();
}

GroupElement group_identity(const AbelianGroup& G) {
    return GroupElement{std::vector<std::uint32_t>(G.rank(), 0)};
}

namespace {
std::uint32_t mod_reduce(long long v, unsigned m) {
    long long r = v % static_cast<long long>(m);
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
}
}  // namespace

GroupElement group_element(const AbelianGroup& G, const std::vector<long>& exps) {
    if (exps.size() != G.rank()) throw InvalidArgument("group element rank mismatch");
    GroupElement g{std::vector<std::uint32_t>(G.rank())};
    for (size_t i = 0; i < exps.size(); ++i) g.e[i] = mod_reduce(exps[i], G.factor(i));
    return g;
}

GroupElement group_mul(const AbelianGroup& G, const GroupElement& a, const GroupElement& b) {
    GroupElement r{std::vector<std::uint32_t>(G.rank())};
    for (size_t i = 0; i < r.e.size(); ++i)
        r.e[i] = mod_reduce(static_cast<long long>(a.e[i]) + b.e[i], G.factor(i));
    return r;
}

GroupElement group_pow(const AbelianGroup& G, const GroupElement& a, long k) {
    GroupElement r{std::vector<std::uint32_t>(G.rank())};
    for (size_t i = 0; i < r.e.size(); ++i)
        r.e[i] = mod_reduce(static_cast<long long>(a.e[i]) * k, G.factor(i));
    return r;
}

GroupElement group_inv(const AbelianGroup& G, const GroupElement& a) {
    return group_pow(G, a, -1);
}

Character character(const AbelianGroup& G, const std::vector<long>& exps) {
    if (exps.size() != G.rank()) throw InvalidArgument("character rank mismatch");
    Character c{std::vector<std::uint32_t>(G.rank())};
    for (size_t i = 0; i < exps.size(); ++i) c.c[i] = mod_reduce(exps[i], G.factor(i));
    return c;
}

Character char_mul(const AbelianGroup& G, const Character& a, const Character& b) {
    Character r{std::vector<std::uint32_t>(G.rank())};
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = mod_reduce(static_cast<long long>(a.c[i]) + b.c[i], G.factor(i));
    return r;
}

Character char_pow(const AbelianGroup& G, const Character& a, long k) {
    Character r{std::vector<std::uint32_t>(G.rank())};
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = mod_reduce(static_cast<long long>(a.c[i]) * k, G.factor(i));
    return r;
}

bool char_is_trivial(const Character& a) {
    for (auto v : a.c)
        if (v) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Datum.
// ---------------------------------------------------------------------------

int extended_index(ExtIndex j) {
    switch (j) {
        case ExtIndex::i1: return 1;
        case ExtIndex::i2: return 2;
        case ExtIndex::i3: return 3;
        case ExtIndex::i3t: return 3;
        case ExtIndex::i2t: return 2;
    }
    throw InvalidArgument("bad extended index");
}

const CycScalar& Datum::q(int i, int j) const {
    return field->root_of_unity(N, E[i - 1][j - 1]);
}

const CycScalar& Datum::q_ext(ExtIndex k, ExtIndex l) const {
    return q(extended_index(k), extended_index(l));
}

CycScalar Datum::chi_eval(const Character& ch, const GroupElement& x) const {
    const unsigned M = field->conductor();
    long long e = 0;
    for (size_t i = 0; i < ch.c.size(); ++i) {
        // chi is well defined: c_i e_i (M/m_i) mod M depends only on e_i mod m_i.
        long long step = static_cast<long long>(M / group.factor(i));
        e = (e + static_cast<long long>(ch.c[i]) % M * (x.e[i] % M) % M * step) % M;
    }
    return field->zeta(e);
}

const CycScalar& Datum::braid(const std::array<int, 3>& u, const std::array<int, 3>& v) const {
    long long e = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e += static_cast<long long>(u[i]) * v[j] * E[i][j];
    return field->root_of_unity(N, static_cast<long>(e % static_cast<long long>(N)));
}

GroupElement Datum::root_g(Root r) const {
    const auto& d = root_info(r).degree;
    GroupElement out = group_identity(group);
    for (int i = 0; i < 3; ++i)
        if (d[i]) out = group_mul(group, out, group_pow(group, g[i], d[i]));
    return out;
}

Character Datum::root_chi(Root r) const {
    const auto& d = root_info(r).degree;
    Character out = character(group, std::vector<long>(group.rank(), 0));
    for (int i = 0; i < 3; ++i)
        if (d[i]) out = char_mul(group, out, char_pow(group, chi[i], d[i]));
    return out;
}

std::array<bool, kNumRoots> Datum::mu_mask() const {
    std::array<bool, kNumRoots> mask{};
    for (Root r : all_roots()) {
        GroupElement gN = group_pow(group, root_g(r), static_cast<long>(N));
        Character cN = char_pow(group, root_chi(r), static_cast<long>(N));
        mask[static_cast<size_t>(r)] = !gN.is_identity() && char_is_trivial(cN);
    }
    return mask;
}

std::string ValidationReport::str() const {
    if (valid()) return "valid";
    std::ostringstream os;
    for (size_t i = 0; i < issues.size(); ++i)
        os << (i ? "; " : "") << issues[i].check << ": " << issues[i].detail;
    return os.str();
}

ValidationReport validate_datum(const Datum& d) {
    ValidationReport rep;
    auto fail = [&rep](std::string check, std::string detail) {
        rep.issues.push_back({std::move(check), std::move(detail)});
    };

    const unsigned N = d.N;
    if (N < 3 || N % 2 == 0) {
        fail("order", "N must be odd and >= 3");
        return rep;
    }
    if (!d.field) {
        fail("field", "missing scalar field");
        return rep;
    }
    unsigned want = std::lcm(N, d.group.exponent());
    if (d.field->conductor() % want != 0)
        fail("field", "conductor does not embed zeta_N and the group characters");
    for (int i = 0; i < 3; ++i) {
        if (d.g[i].e.size() != d.group.rank()) {
            fail("rank", "g" + std::to_string(i + 1) + " has wrong rank");
            return rep;
        }
        if (d.chi[i].c.size() != d.group.rank()) {
            fail("rank", "chi" + std::to_string(i + 1) + " has wrong rank");
            return rep;
        }
    }

    auto modN = [N](long v) { return mod_reduce(v, N); };

    // ord(q33) = N exactly.
    if (std::gcd(modN(d.E[2][2]), N) != 1)
        fail("ord(q33)", "chi3(g3) must be a primitive N-th root of unity");

    // Diagonal pattern q11 = q22 = q33^2.
    if (modN(d.E[0][0]) != modN(2 * d.E[2][2]))
        fail("diag(1)", "q11 != q33^2");
    if (modN(d.E[1][1]) != modN(2 * d.E[2][2]))
        fail("diag(2)", "q22 != q33^2");

    // Cartan condition q_ij q_ji = q_ii^{a_ij}, both orientations of each pair.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            long lhs = d.E[i][j] + d.E[j][i];
            long rhs = static_cast<long>(kCartanB3[i][j]) * d.E[i][i];
            if (modN(lhs) != modN(rhs))
                fail("cartan(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                     "q_ij*q_ji != q_ii^a_ij");
        }
    }

    // chi and E must describe the same braiding matrix.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (d.chi_eval(d.chi[j], d.g[i]) != d.field->root_of_unity(N, d.E[i][j]))
                fail("braiding(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                     "chi_j(g_i) != q_ij");

    return rep;
}

Datum canonical_datum(unsigned N) {
    if (N < 3 || N % 2 == 0) throw InvalidArgument("N must be odd and >= 3");
    const unsigned M = N * N;
    std::array<std::array<long, 3>, 3> E = {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 1}}};
    AbelianGroup G({M, M, M});
    Datum d{G,
            {group_element(G, {1, 0, 0}), group_element(G, {0, 1, 0}), group_element(G, {0, 0, 1})},
            {},
            N,
            E,
            std::make_shared<CycField>(M)};
    for (int j = 0; j < 3; ++j) {
        std::vector<long> c(3);
        for (int i = 0; i < 3; ++i) c[i] = static_cast<long>(N) * E[i][j];
        d.chi[j] = character(G, c);
    }
    return d;
}

std::pair<GroupElement, Character> root_group_data(Root alpha, const Datum& d) {
    return {d.root_g(alpha), d.root_chi(alpha)};
}

CycScalar q_block(ExtIndex b, ExtIndex a, ExtIndex d, ExtIndex c, const Datum& dat) {
    if (static_cast<int>(a) > static_cast<int>(b) || static_cast<int>(c) > static_cast<int>(d))
        throw InvalidArgument("empty q-block range");
    CycScalar out(1);
    for (int i = static_cast<int>(a); i <= static_cast<int>(b); ++i)
        for (int j = static_cast<int>(c); j <= static_cast<int>(d); ++j)
            out *= dat.q_ext(static_cast<ExtIndex>(i), static_cast<ExtIndex>(j));
    return out;
}

}  // namespace b3
