#pragma once

#include <vector>

#include "gcoh/cochain.hpp"
#include "gcoh/lattice.hpp"

namespace gcoh {

// Tensor module Y (x) D on the basis of Y (or of Ybar when use_ybar) with
// D-coordinates per basis vector. The action is the Kronecker product of the
// lattice action with the coefficient action; both must be over the same
// group.
inline GModule tensor_module(const Lattice& lat, const GModule& d, bool use_ybar = false) {
    if (lat.group != d.group) throw group_error("tensor_module: group mismatch");
    GModule m;
    m.group = d.group;
    int r = lat.rank;
    int dd = d.dim();
    for (int i = 0; i < r; ++i) {
        m.base.kinds.insert(m.base.kinds.end(), d.base.kinds.begin(), d.base.kinds.end());
        m.base.mods.insert(m.base.mods.end(), d.base.mods.begin(), d.base.mods.end());
    }
    m.base.den_bound = d.base.den_bound;
    m.act.assign(d.group->order(), IMat(r * dd, std::vector<long long>(r * dd, 0)));
    for (int g = 0; g < d.group->order(); ++g) {
        IMat y = use_ybar ? lat.act_ybar(g) : lat.act[g];
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (y[i][j] == 0) continue;
                for (int a = 0; a < dd; ++a)
                    for (int b = 0; b < dd; ++b)
                        if (d.act[g][a][b] != 0)
                            m.act[g][i * dd + a][j * dd + b] =
                                checked_mul(y[i][j], d.act[g][a][b]);
            }
    }
    return m;
}

// Unbalanced cup product against a norm-killed, degree-zero lattice-valued
// place function Lambda: pair the last argument of the cochain away,
//   (c cup Lambda)(s_1,...,s_n) =
//       sum_{t in G} sum_w  c(s_1,...,s_n,t)(w) (x) (s_1...s_n t . Lambda)(w).
// The cochain takes values in Maps(places, D) and the result in Y (x) D
// (or Ybar (x) D when use_ybar; Lambda must then have integral Ybar
// coordinates).
struct CupContext {
    const GSet* places = nullptr;   // level-k place set, same group as below
    const GModule* inner = nullptr; // D
    const Lattice* lat = nullptr;   // over the level-k group
    const GModule* tensor = nullptr;
    bool use_ybar = false;
    int level = 0;                  // chain level of the last argument
};

inline Cochain cup_last(const Cochain& c, const PlaceFunction& lambda, const CupContext& ctx,
                        bool require_conditions = true) {
    const GroupChain& ch = *c.chain;
    int n1 = c.degree();
    if (n1 < 1) throw group_error("cup_last: cochain degree must be >= 1");
    if (c.arg_levels.back() != ctx.level) throw group_error("cup_last: last level mismatch");
    const FiniteGroup& gk = ch.at(ctx.level);
    if (ctx.places->group != &gk || ctx.lat->group != &gk)
        throw group_error("cup_last: places/lattice must live at the cup level");
    if (c.coeffs->dim() != ctx.places->size * ctx.inner->dim())
        throw group_error("cup_last: cochain values are not Maps(places, D)");
    if (require_conditions) {
        if (!lambda.degree_zero()) throw group_error("cup_last: Lambda not degree zero");
        if (!lambda.norm_killed()) throw group_error("cup_last: Lambda not norm killed");
    }

    int r = ctx.lat->rank;
    int dd = ctx.inner->dim();
    std::vector<int> out_levels(c.arg_levels.begin(), c.arg_levels.end() - 1);
    Cochain out = Cochain::zero(ch, out_levels, *ctx.tensor, ctx.level);

    out.for_each_cell([&](const std::vector<int>& args) {
        // prefix product reduced to the cup level
        int prefix = 0;
        for (size_t i = 0; i < args.size(); ++i)
            prefix = gk.mul(prefix, ch.reduce(args[i], out.arg_levels[i], ctx.level));
        RVec acc = ctx.tensor->base.zero();
        std::vector<int> full(args);
        full.push_back(0);
        for (int t = 0; t < gk.order(); ++t) {
            full.back() = t;
            const RVec& val = c.at(full);
            PlaceFunction moved = lambda.acted(gk.mul(prefix, t));
            for (int w = 0; w < ctx.places->size; ++w) {
                RVec lc = moved.value[w];
                if (ctx.use_ybar) {
                    auto yc = ctx.lat->ybar_coords(lc);
                    if (!yc) throw group_error("cup_last: Lambda value not in Ybar");
                    lc = *yc;
                }
                for (int i = 0; i < r; ++i) {
                    if (lc[i].is_zero()) continue;
                    if (!lc[i].is_integer())
                        throw group_error("cup_last: non-integral lattice coordinate");
                    long long m = lc[i].num();
                    for (int a = 0; a < dd; ++a) {
                        const Rat& x = val[w * dd + a];
                        if (!x.is_zero()) acc[i * dd + a] += Rat(m) * x;
                    }
                }
            }
        }
        ctx.tensor->base.reduce(acc);
        out.at_mut(args) = acc;
    });
    return out;
}

// Degree conventions from the place-indexed calculus: cup21 pairs a
// (mixed) 2-cochain down to a 1-cochain, cup10 pairs a 1-cochain down to a
// 0-cochain (a point of the torus).
inline Cochain cup21(const Cochain& alpha, const PlaceFunction& lambda, const CupContext& ctx,
                     bool require_conditions = true) {
    if (alpha.degree() != 2) throw group_error("cup21: need a 2-argument cochain");
    return cup_last(alpha, lambda, ctx, require_conditions);
}

inline Cochain cup10(const Cochain& beta, const PlaceFunction& lambda, const CupContext& ctx,
                     bool require_conditions = true) {
    if (beta.degree() != 1) throw group_error("cup10: need a 1-argument cochain");
    return cup_last(beta, lambda, ctx, require_conditions);
}

// Torsion pairing of a place-indexed N-torsion cochain with a degree-zero
// family of dual weight vectors. Values of the cochain restricted to the
// listed places must be N-torsion, with pairwise differences in the
// distinguished scalar torsion copy whose coordinate index is mu_coord
// (all other coordinates of the difference vanish). The weights describe
// homomorphisms into (1/N)Z/Z on an abstract cell space of dimension m:
//   out_cell = sum_w (N * mu_part(x(w) - x(w0))) * weight(w)  (mod N).
// If anchored is false the values themselves must be pure scalar torsion and
// are paired directly.
struct TorsionDualFamily {
    std::vector<int> places;                     // outer places paired over
    std::vector<std::vector<long long>> weight;  // per listed place, dim m
    int m = 0;
    long long modulus = 1;  // N
};

inline std::vector<long long> pair_torsion_value(const RVec& maps_value, int inner_dim,
                                                 int mu_coord, const TorsionDualFamily& dual,
                                                 bool anchored) {
    long long n = dual.modulus;
    std::vector<long long> out(dual.m, 0);
    auto mu_int = [&](const Rat& x) {
        Rat j = Rat(n) * x.mod1();
        if (!j.is_integer()) throw group_error("torsion pairing: value is not N-torsion");
        return ((j.num() % n) + n) % n;
    };
    std::optional<std::vector<Rat>> anchor;
    for (size_t pi = 0; pi < dual.places.size(); ++pi) {
        int w = dual.places[pi];
        std::vector<Rat> block(maps_value.begin() + w * inner_dim,
                               maps_value.begin() + (w + 1) * inner_dim);
        long long scalar;
        if (anchored) {
            if (!anchor) anchor = block;
            // stored coordinates are reduced, so ambient equality off the mu
            // copy is exact coordinate equality
            for (int a = 0; a < inner_dim; ++a)
                if (a != mu_coord && block[a] != (*anchor)[a])
                    throw group_error("torsion pairing: ratio condition violated off mu copy");
            scalar = mu_int((block[mu_coord] - (*anchor)[mu_coord]).mod1());
        } else {
            for (int a = 0; a < inner_dim; ++a)
                if (a != mu_coord && !block[a].is_zero())
                    throw group_error("torsion pairing: value not in the scalar torsion copy");
            scalar = mu_int(block[mu_coord]);
        }
        for (int j = 0; j < dual.m; ++j)
            out[j] = (out[j] + scalar * dual.weight[pi][j]) % n;
    }
    for (long long& v : out) v = ((v % n) + n) % n;
    return out;
}

}  // namespace gcoh
