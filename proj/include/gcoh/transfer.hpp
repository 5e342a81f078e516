#pragma once

#include <vector>

#include "gcoh/cochain.hpp"

namespace gcoh {

// Context for the transfer maps between adjacent levels k+1 -> k of a chain:
// N is the kernel of the projection, s a section with s(1) = 1.
struct AWContext {
    const GroupChain* chain = nullptr;
    int k = 0;  // target level; source level is k+1
    std::vector<int> kernel;   // N inside level k+1
    std::vector<int> section;  // lift of each level-k element, section[0] = 0

    const FiniteGroup& upper() const { return chain->at(k + 1); }
    const FiniteGroup& lower() const { return chain->at(k); }
    int proj(int x) const { return chain->reduce(x, k + 1, k); }
};

inline AWContext make_aw_context(const GroupChain& chain, int k) {
    AWContext c;
    c.chain = &chain;
    c.k = k;
    const Homo& p = chain.proj[k];
    c.kernel = p.kernel();
    c.section.assign(chain.at(k).order(), -1);
    for (int x = 0; x < chain.at(k + 1).order(); ++x)
        if (c.section[p(x)] < 0) c.section[p(x)] = x;
    c.section[0] = 0;
    return c;
}

// AW^1(beta)(s) = prod_n beta(n s~) / beta(n), written additively. Defined for
// any coefficient module; no action is used. The lift table defaults to the
// context section and the result is independent of it.
inline Cochain aw1(const Cochain& beta, const AWContext& ctx,
                   const std::vector<int>* lifts = nullptr) {
    if (beta.degree() != 1 || beta.arg_levels[0] != ctx.k + 1)
        throw group_error("aw1: need a 1-cochain at the upper level");
    const std::vector<int>& lift = lifts ? *lifts : ctx.section;
    Cochain out = Cochain::zero(*beta.chain, {ctx.k}, *beta.coeffs, beta.act_level);
    const AbGroup& base = beta.coeffs->base;
    const FiniteGroup& gu = ctx.upper();
    for (int s = 0; s < ctx.lower().order(); ++s) {
        RVec acc = base.zero();
        for (int n : ctx.kernel) {
            acc = base.add(acc, beta.at({gu.mul(n, lift[s])}));
            acc = base.sub(acc, beta.at({n}));
        }
        out.at_mut({s}) = acc;
    }
    return out;
}

// AW^2(alpha)(s, t) = prod_n alpha(s, n t~) / alpha(s, n); first slot of any
// level >= k+1, second slot at level k+1.
inline Cochain aw2(const Cochain& alpha, const AWContext& ctx,
                   const std::vector<int>* lifts = nullptr) {
    if (alpha.degree() != 2 || alpha.arg_levels[1] != ctx.k + 1)
        throw group_error("aw2: need a 2-argument cochain with second slot at the upper level");
    const std::vector<int>& lift = lifts ? *lifts : ctx.section;
    std::vector<int> levels = {alpha.arg_levels[0], ctx.k};
    Cochain out = Cochain::zero(*alpha.chain, levels, *alpha.coeffs, alpha.act_level);
    const AbGroup& base = alpha.coeffs->base;
    const FiniteGroup& gu = ctx.upper();
    out.for_each_cell([&](const std::vector<int>& args) {
        int sg = args[0], t = args[1];
        RVec acc = base.zero();
        for (int n : ctx.kernel) {
            acc = base.add(acc, alpha.at({sg, gu.mul(n, lift[t])}));
            acc = base.sub(acc, alpha.at({sg, n}));
        }
        out.at_mut(args) = acc;
    });
    return out;
}

// Classical Akizuki-Witt transfer of an honest 2-cocycle at the upper level:
//   (s, t) |-> prod_n  n(a(s(s), s(t))) * a(n, s(s)s(t)) / a(n, s(st)).
inline Cochain aw_tilde(const Cochain& alpha, const AWContext& ctx) {
    if (alpha.degree() != 2 || alpha.arg_levels[0] != ctx.k + 1 ||
        alpha.arg_levels[1] != ctx.k + 1)
        throw group_error("aw_tilde: need an honest 2-cochain at the upper level");
    if (!is_cocycle(alpha)) throw not_a_cocycle("aw_tilde: input is not a 2-cocycle");
    Cochain out = Cochain::zero(*alpha.chain, {ctx.k, ctx.k}, *alpha.coeffs, alpha.act_level);
    const AbGroup& base = alpha.coeffs->base;
    const FiniteGroup& gu = ctx.upper();
    const FiniteGroup& gl = ctx.lower();
    out.for_each_cell([&](const std::vector<int>& args) {
        int s = ctx.section[args[0]], t = ctx.section[args[1]];
        int st = ctx.section[gl.mul(args[0], args[1])];
        RVec acc = base.zero();
        for (int n : ctx.kernel) {
            acc = base.add(acc, alpha.act_by(n, ctx.k + 1, alpha.at({s, t})));
            acc = base.add(acc, alpha.at({n, gu.mul(s, t)}));
            acc = base.sub(acc, alpha.at({n, st}));
        }
        out.at_mut(args) = acc;
    });
    return out;
}

// Values of aw_tilde / aw2 of honest cocycles should be N-invariant; handy
// check used by tests.
inline bool values_invariant_under(const Cochain& c, const std::vector<int>& elems, int level) {
    bool ok = true;
    c.for_each_cell([&](const std::vector<int>& args) {
        if (!ok) return;
        const RVec& v = c.at(args);
        for (int n : elems)
            if (!c.coeffs->base.eq(c.act_by(n, level, v), v)) { ok = false; return; }
    });
    return ok;
}

// Good-cocycle normalization: returns (beta, alpha') with alpha' = alpha + d(beta)
// and alpha'(n, s(t)) = 0 for all n in N and t at the lower level.
struct GoodCocycle {
    Cochain beta;
    Cochain normalized;
};

inline GoodCocycle normalize_good_cocycle(const Cochain& alpha, const AWContext& ctx) {
    if (alpha.degree() != 2 || alpha.arg_levels[0] != ctx.k + 1 ||
        alpha.arg_levels[1] != ctx.k + 1)
        throw group_error("normalize_good_cocycle: honest upper-level 2-cochain required");
    if (!is_cocycle(alpha)) throw not_a_cocycle("normalize_good_cocycle: not a cocycle");
    const AbGroup& base = alpha.coeffs->base;
    const FiniteGroup& gu = ctx.upper();

    Cochain work = alpha;
    Cochain beta_total = Cochain::zero(*alpha.chain, {ctx.k + 1}, *alpha.coeffs, alpha.act_level);
    // first normalize so that alpha(s,1) = alpha(1,s) = 0, via the constant
    // 1-cochain with value -alpha(1,1)
    if (!base.is_zero(alpha.at({0, 0}))) {
        Cochain b0 = beta_total;
        RVec c = base.neg(alpha.at({0, 0}));
        for (int x = 0; x < gu.order(); ++x) b0.at_mut({x}) = c;
        beta_total = beta_total + b0;
        work = work + differential(b0);
    }
    // then kill alpha(n, s(t)) by choosing beta on the products n s(t)
    Cochain b1 = Cochain::zero(*alpha.chain, {ctx.k + 1}, *alpha.coeffs, alpha.act_level);
    for (int n : ctx.kernel) {
        for (int t = 0; t < ctx.lower().order(); ++t) {
            int x = gu.mul(n, ctx.section[t]);
            b1.at_mut({x}) = work.at({n, ctx.section[t]});
        }
    }
    beta_total = beta_total + b1;
    work = work + differential(b1);

    GoodCocycle out{std::move(beta_total), std::move(work)};
    for (int n : ctx.kernel)
        for (int t = 0; t < ctx.lower().order(); ++t)
            if (!base.is_zero(out.normalized.at({n, ctx.section[t]})))
                throw group_error("normalize_good_cocycle: postcondition failed");
    return out;
}

// Preimage of a normalized lower-level 1-cochain under AW^1, supported on the
// canonical restricted subset: beta vanishes on N and on n s(t) for n != 1.
inline Cochain aw1_preimage(const Cochain& target, const AWContext& ctx) {
    if (target.degree() != 1 || target.arg_levels[0] != ctx.k)
        throw group_error("aw1_preimage: need a lower-level 1-cochain");
    if (!target.coeffs->base.is_zero(target.at({0})))
        throw group_error("aw1_preimage: target must vanish at the identity");
    Cochain beta = Cochain::zero(*target.chain, {ctx.k + 1}, *target.coeffs, target.act_level);
    for (int t = 1; t < ctx.lower().order(); ++t) beta.at_mut({ctx.section[t]}) = target.at({t});
    return beta;
}

// Preimage of a normalized (first slot arbitrary, target(s,1) = 0) cochain
// under AW^2 on the restricted subset alpha(s, n) = 0, alpha(s, n s(t)) = 0
// unless n = 1.
inline Cochain aw2_preimage(const Cochain& target, const AWContext& ctx) {
    if (target.degree() != 2 || target.arg_levels[1] != ctx.k)
        throw group_error("aw2_preimage: need second slot at the lower level");
    const AbGroup& base = target.coeffs->base;
    for (int s = 0; s < target.chain->at(target.arg_levels[0]).order(); ++s)
        if (!base.is_zero(target.at({s, 0})))
            throw group_error("aw2_preimage: target(s, 1) must vanish");
    std::vector<int> levels = {target.arg_levels[0], ctx.k + 1};
    Cochain alpha = Cochain::zero(*target.chain, levels, *target.coeffs, target.act_level);
    for (int s = 0; s < target.chain->at(target.arg_levels[0]).order(); ++s)
        for (int t = 1; t < ctx.lower().order(); ++t)
            alpha.at_mut({s, ctx.section[t]}) = target.at({s, t});
    return alpha;
}

// Descend within a cohomology class: find alpha'' = alpha + d(beta) with
// AW^2(alpha'') equal to the given lower cocycle exactly. Throws
// group_error("no descent") when the classes differ.
inline Cochain surjaw_descend(const Cochain& alpha, const Cochain& alpha_low,
                              const AWContext& ctx) {
    if (!is_cocycle(alpha)) throw not_a_cocycle("surjaw_descend: alpha not a cocycle");
    if (!is_cocycle(alpha_low)) throw not_a_cocycle("surjaw_descend: alpha_N not a cocycle");
    if (!alpha_low.coeffs->base.is_zero(alpha_low.at({0, 0})))
        throw group_error("surjaw_descend: alpha_N(1,1) must vanish");
    // defect = alpha_N - AW^2(alpha) as a (k+1, k) cochain
    Cochain aw = aw2(alpha.inflate_first(ctx.k + 1), ctx);
    Cochain low_mixed = alpha_low.inflate_first(ctx.k + 1);
    Cochain defect = low_mixed - aw;
    auto gamma = solve_coboundary(defect);
    if (!gamma) throw group_error("surjaw_descend: no descent (classes differ)");
    Cochain beta = aw1_preimage(*gamma, ctx);
    Cochain fixed = alpha + differential(beta);
    Cochain check = aw2(fixed.inflate_first(ctx.k + 1), ctx);
    if (!(check == low_mixed)) throw group_error("surjaw_descend: postcondition failed");
    return fixed;
}

// The three equivalent conditions on a 2-cochain alpha over a single group
// (first slot at level k+1 inflated from itself): returns the triple
// (factors through the quotient in the first argument when transferred,
//  vanishing on kernel first arguments, norm landing in invariants).
struct AwPredicates {
    bool factors;
    bool kernel_trivial;
    bool norm_invariant;
};

inline AwPredicates aw_predicates(const Cochain& alpha, const AWContext& ctx) {
    Cochain t = aw2(alpha.degree() == 2 && alpha.arg_levels[0] == ctx.k + 1
                        ? alpha
                        : alpha.inflate_first(ctx.k + 1),
                    ctx);
    AwPredicates out{};
    out.factors = t.first_arg_factors_through(ctx.k);
    out.kernel_trivial = true;
    for (int n : ctx.kernel)
        for (int s = 0; s < ctx.lower().order(); ++s)
            if (!t.coeffs->base.is_zero(t.at({n, s}))) out.kernel_trivial = false;
    out.norm_invariant = true;
    const FiniteGroup& gu = ctx.upper();
    for (int s = 0; s < gu.order(); ++s) {
        RVec sum = alpha.coeffs->base.zero();
        for (int n : ctx.kernel) sum = alpha.coeffs->base.add(sum, alpha.at({n, s}));
        for (int n : ctx.kernel)
            if (!alpha.coeffs->base.eq(alpha.act_by(n, ctx.k + 1, sum), sum))
                out.norm_invariant = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Explicit transfer along an induction: the maps sending H-cochains to
// G-cochains valued in the induced module, on coset representatives R
// (1 in R). H sits in G through incl.
// ---------------------------------------------------------------------------
struct EsContext {
    const FiniteGroup* g = nullptr;
    const FiniteGroup* h = nullptr;
    Homo incl;              // H -> G
    std::vector<int> reps;  // left coset representatives, reps[0] = 0

    std::vector<int> g_to_h;   // index in H of a G element, or -1
    // decomposition s = r1 h1 r2^{-1}: given s and the index of r1, produce
    // (h1, index of r2)
    std::pair<int, int> decomp(int s, int r1_idx) const {
        int r1 = reps[r1_idx];
        for (size_t j = 0; j < reps.size(); ++j) {
            int y = g->mul(g->mul(g->inv(r1), s), reps[j]);
            int hi = g_to_h[y];
            if (hi >= 0) return {hi, static_cast<int>(j)};
        }
        throw group_error("es: representatives do not cover G/H");
    }
};

inline EsContext make_es_context(const FiniteGroup& g, const FiniteGroup& h, const Homo& incl,
                                 std::vector<int> reps) {
    EsContext c;
    c.g = &g;
    c.h = &h;
    c.incl = incl;
    c.reps = std::move(reps);
    if (c.reps.empty() || c.reps[0] != 0) throw group_error("es: reps must start with 1");
    c.g_to_h.assign(g.order(), -1);
    for (int x = 0; x < h.order(); ++x) c.g_to_h[incl(x)] = x;
    return c;
}

// es2: Z^2(H, A) -> Z^2(G, ind_H^G A) by
//   ES(c)(r1 h1 r2^{-1}, r2 h2 r3^{-1})(h3 r1^{-1}) = h3(c(h1, h2)).
// Coordinates of the induced module are a_r = f(r^{-1}).
inline Cochain es2(const Cochain& c, const EsContext& ctx, const GroupChain& g_chain,
                   const GModule& induced) {
    if (c.degree() != 2) throw group_error("es2: degree-2 cochain over H required");
    int d = c.coeffs->dim();
    Cochain out = Cochain::zero(g_chain, {0, 0}, induced, 0);
    int nr = static_cast<int>(ctx.reps.size());
    out.for_each_cell([&](const std::vector<int>& args) {
        RVec v = induced.base.zero();
        for (int r = 0; r < nr; ++r) {
            auto [h1, r2] = ctx.decomp(args[0], r);
            auto [h2, r3] = ctx.decomp(args[1], r2);
            (void)r3;
            const RVec& cv = c.at({h1, h2});
            for (int i = 0; i < d; ++i) v[r * d + i] = cv[i];
        }
        induced.base.reduce(v);
        out.at_mut(args) = v;
    });
    return out;
}

inline Cochain es1(const Cochain& c, const EsContext& ctx, const GroupChain& g_chain,
                   const GModule& induced) {
    if (c.degree() != 1) throw group_error("es1: degree-1 cochain over H required");
    int d = c.coeffs->dim();
    Cochain out = Cochain::zero(g_chain, {0}, induced, 0);
    int nr = static_cast<int>(ctx.reps.size());
    out.for_each_cell([&](const std::vector<int>& args) {
        RVec v = induced.base.zero();
        for (int r = 0; r < nr; ++r) {
            auto [h1, r2] = ctx.decomp(args[0], r);
            (void)r2;
            const RVec& cv = c.at({h1});
            for (int i = 0; i < d; ++i) v[r * d + i] = cv[i];
        }
        induced.base.reduce(v);
        out.at_mut(args) = v;
    });
    return out;
}

}  // namespace gcoh
