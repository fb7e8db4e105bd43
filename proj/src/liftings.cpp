#include "b3/liftings.hpp"

#include "b3/errors.hpp"

namespace b3 {

namespace {

size_t idx(Root r) { return static_cast<size_t>(r); }

// g_beta^N - 1, the group-algebra building block of every u_alpha.
AlgElement group_diff(const Datum& d, Root beta) {
    PbwMonomial gterm{{}, group_pow(d.group, d.root_g(beta), d.N)};
    PbwMonomial one{{}, group_identity(d.group)};
    return AlgElement::term(gterm, MuScalar(1)) - AlgElement::term(one, MuScalar(1));
}

struct XiPowers {
    CycScalar xi1N;
    CycScalar xi2N;
};

XiPowers xi_powers(const Datum& d) {
    return {xi(1, d.q33()).pow(d.N), xi(2, d.q33()).pow(d.N)};
}

}  // namespace

MuFamily MuFamily::symbolic(const Datum& d) {
    MuFamily f;
    auto mask = d.mu_mask();
    for (Root r : all_roots())
        if (mask[idx(r)]) f.mu_[idx(r)] = MuScalar::indeterminate(r);
    return f;
}

MuFamily MuFamily::zero() { return {}; }

MuFamily MuFamily::constants(const Datum& d, const std::array<CycScalar, kNumRoots>& values) {
    MuFamily f;
    auto mask = d.mu_mask();
    for (Root r : all_roots()) {
        if (values[idx(r)].is_zero()) continue;
        if (!mask[idx(r)])
            throw InvalidArgument(std::string("mu[") + root_info(r).name +
                                  "] must vanish for this datum");
        f.mu_[idx(r)] = MuScalar(values[idx(r)]);
    }
    return f;
}

LambdaScalars lambda_scalars(const Datum& d, const MuFamily& mu) {
    auto [xi1N, xi2N] = xi_powers(d);
    const MuScalar &m2 = mu[Root::a2], &m3 = mu[Root::a3], &m32 = mu[Root::a32],
                   &mt32 = mu[Root::at32];
    LambdaScalars l;
    l.lt31 = xi2N * m2;
    l.l31 = CycScalar(2) * xi1N * (xi2N * m2 * m3 - m32);
    l.l21 = xi2N * (xi1N * xi2N * m2 * m3 * m3 - CycScalar(2) * xi1N * m3 * m32 + mt32);
    l.l1 = xi2N * (xi2N * m2 * mt32 - xi1N * m32 * m32);
    return l;
}

AlgElement braided_commutator(const AlgElement& a, const AlgElement& b, const RewriteSystem& rs) {
    return rs.commutator(a, b);
}

AlgElement u_alpha(Root alpha, const MuFamily& mu, const Datum& d) {
    auto [xi1N, xi2N] = xi_powers(d);
    auto A = [&](Root beta) { return group_diff(d, beta); };
    const MuScalar &m1 = mu[Root::a1], &m2 = mu[Root::a2], &m3 = mu[Root::a3],
                   &m21 = mu[Root::a21], &m32 = mu[Root::a32], &m31 = mu[Root::a31],
                   &mt32 = mu[Root::at32], &mt31 = mu[Root::at31], &mt21 = mu[Root::at21];
    const CycScalar two(2);

    switch (alpha) {
        case Root::a1: return m1 * A(Root::a1);
        case Root::a2: return m2 * A(Root::a2);
        case Root::a3: return m3 * A(Root::a3);
        case Root::a21:
            return m21 * A(Root::a21) - xi2N * m2 * m1 * A(Root::a1);
        case Root::a32:
            return m32 * A(Root::a32) - xi2N * m3 * m2 * A(Root::a2);
        case Root::a31:
            return m31 * A(Root::a31) - xi2N * m3 * m21 * A(Root::a21) -
                   xi2N * (m32 - xi2N * m3 * m2) * m1 * A(Root::a1);
        case Root::at32:
            return mt32 * A(Root::at32) - two * xi1N * m3 * m32 * A(Root::a32) +
                   xi1N * xi2N * m3 * m3 * m2 * A(Root::a2);
        case Root::at31:
            return mt31 * A(Root::at31) - two * xi1N * m3 * m31 * A(Root::a31) +
                   xi1N * xi2N * m3 * m3 * m21 * A(Root::a21) -
                   xi2N * (xi1N * xi2N * m3 * m3 * m2 - two * xi1N * m3 * m32 + mt32) * m1 *
                       A(Root::a1);
        case Root::at21:
            return mt21 * A(Root::at21) - xi2N * m2 * mt31 * A(Root::at31) +
                   two * xi1N * m32 * m31 * A(Root::a31) - xi2N * mt32 * m21 * A(Root::a21) +
                   xi2N * (xi2N * m2 * mt32 - xi1N * m32 * m32) * m1 * A(Root::a1);
    }
    throw InvalidArgument("bad root");
}

std::vector<RecursionIssue> expand_recursion_check(const Datum& d) {
    MuFamily mu = MuFamily::symbolic(d);
    auto [xi1N, xi2N] = xi_powers(d);
    auto A = [&](Root beta) { return group_diff(d, beta); };
    const MuScalar &m1 = mu[Root::a1], &m2 = mu[Root::a2], &m3 = mu[Root::a3],
                   &mt32 = mu[Root::at32], &m32 = mu[Root::a32], &mt21 = mu[Root::at21];
    const CycScalar two(2);
    LambdaScalars l = lambda_scalars(d, mu);

    // The recursive relations, expanded bottom-up: each right side refers
    // only to strictly lower roots, already in expanded form.
    std::array<AlgElement, kNumRoots> rec;
    auto R = [&](Root r) -> AlgElement& { return rec[idx(r)]; };
    for (Root r : {Root::a1, Root::a2, Root::a3}) R(r) = mu[r] * A(r);
    R(Root::a21) = mu[Root::a21] * A(Root::a21) - xi2N * m2 * R(Root::a1);
    R(Root::a32) = mu[Root::a32] * A(Root::a32) - xi2N * m3 * R(Root::a2);
    R(Root::a31) = mu[Root::a31] * A(Root::a31) - xi2N * m3 * R(Root::a21) -
                   xi2N * m32 * R(Root::a1);
    R(Root::at32) = mt32 * A(Root::at32) - two * xi1N * m3 * R(Root::a32) -
                    xi1N * xi2N * m3 * m3 * R(Root::a2);
    R(Root::at31) = mu[Root::at31] * A(Root::at31) - two * xi1N * m3 * R(Root::a31) -
                    xi1N * xi2N * m3 * m3 * R(Root::a21) - xi2N * mt32 * R(Root::a1);
    R(Root::at21) = mt21 * A(Root::at21) - l.lt31 * R(Root::at31) - l.l31 * R(Root::a31) -
                    l.l21 * R(Root::a21) - l.l1 * R(Root::a1);

    std::vector<RecursionIssue> issues;
    for (Root r : all_roots()) {
        AlgElement diff = R(r) - u_alpha(r, mu, d);
        if (!diff.is_zero())
            issues.push_back({root_info(r).name, "residual " + diff.str()});
    }
    return issues;
}

RewriteSystem build_lifting(const Datum& d, const MuFamily& mu) {
    RewriteSystem rs(d, PowerMode::lifting);
    for (Root r : all_roots()) rs.set_power_tail(r, u_alpha(r, mu, d));
    return rs;
}

}  // namespace b3
