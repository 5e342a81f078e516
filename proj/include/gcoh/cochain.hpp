#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gcoh/module.hpp"
#include "gcoh/rng.hpp"

namespace gcoh {

// A chain of finite groups G_0 <- G_1 <- ... <- G_K connected by surjections
// (level 0 is the coarsest quotient, level K the finest and plays the role of
// the ambient full group). Cochain arguments carry a level; multiplying or
// acting across levels reduces along the projections.
struct GroupChain {
    std::vector<const FiniteGroup*> groups;
    std::vector<Homo> proj;  // proj[k] : groups[k+1] -> groups[k]

    int top() const { return static_cast<int>(groups.size()) - 1; }
    const FiniteGroup& at(int level) const { return *groups[level]; }

    int reduce(int x, int from, int to) const {
        while (from > to) { x = proj[from - 1](x); --from; }
        return x;
    }

    void validate() const {
        for (size_t k = 0; k + 1 < groups.size(); ++k) {
            if (proj[k].src != groups[k + 1] || proj[k].dst != groups[k])
                throw group_error("chain: projection endpoints wrong");
            if (!proj[k].is_homomorphism() || !proj[k].is_surjective())
                throw group_error("chain: projection not a surjective homomorphism");
        }
    }
};

inline GroupChain single_group_chain(const FiniteGroup& g) {
    GroupChain c;
    c.groups = {&g};
    return c;
}

// Inhomogeneous cochain with per-argument levels (non-increasing from the
// first argument). The coefficient module lives over chain.groups[act_level];
// any argument of level >= act_level acts through reduction.
class Cochain {
public:
    const GroupChain* chain = nullptr;
    std::vector<int> arg_levels;  // degree = arg_levels.size(), levels non-increasing
    const GModule* coeffs = nullptr;
    int act_level = 0;
    std::vector<RVec> values;  // dense, mixed-radix over argument groups

    int degree() const { return static_cast<int>(arg_levels.size()); }

    static Cochain zero(const GroupChain& chain, std::vector<int> arg_levels,
                        const GModule& coeffs, int act_level) {
        Cochain c;
        c.chain = &chain;
        c.arg_levels = std::move(arg_levels);
        c.coeffs = &coeffs;
        c.act_level = act_level;
        for (size_t i = 0; i + 1 < c.arg_levels.size(); ++i)
            if (c.arg_levels[i] < c.arg_levels[i + 1])
                throw group_error("cochain: argument levels must be non-increasing");
        c.values.assign(c.cells(), coeffs.base.zero());
        return c;
    }

    long long cells() const {
        long long n = 1;
        for (int l : arg_levels) n *= chain->at(l).order();
        return n;
    }

    long long index(const std::vector<int>& args) const {
        long long idx = 0;
        for (size_t i = 0; i < args.size(); ++i) idx = idx * chain->at(arg_levels[i]).order() + args[i];
        return idx;
    }

    // args[i] given at level arg_given[i] >= arg_levels[i]; reduced as needed.
    RVec eval(const std::vector<int>& args, const std::vector<int>& arg_given) const {
        std::vector<int> red(args.size());
        for (size_t i = 0; i < args.size(); ++i)
            red[i] = chain->reduce(args[i], arg_given[i], arg_levels[i]);
        return values[index(red)];
    }
    const RVec& at(const std::vector<int>& args) const { return values[index(args)]; }
    RVec& at_mut(const std::vector<int>& args) { return values[index(args)]; }

    RVec act_by(int g, int g_level, const RVec& v) const {
        return coeffs->apply(chain->reduce(g, g_level, act_level), v);
    }

    void for_each_cell(const std::function<void(const std::vector<int>&)>& fn) const {
        std::vector<int> args(degree(), 0);
        long long n = cells();
        for (long long i = 0; i < n; ++i) {
            long long rem = i;
            for (int d = degree() - 1; d >= 0; --d) {
                args[d] = static_cast<int>(rem % chain->at(arg_levels[d]).order());
                rem /= chain->at(arg_levels[d]).order();
            }
            fn(args);
        }
    }

    bool same_shape(const Cochain& o) const {
        return chain == o.chain && arg_levels == o.arg_levels && coeffs == o.coeffs &&
               act_level == o.act_level;
    }

    Cochain operator+(const Cochain& o) const {
        if (!same_shape(o)) throw group_error("cochain add: shape mismatch");
        Cochain r = *this;
        for (size_t i = 0; i < values.size(); ++i) r.values[i] = coeffs->base.add(r.values[i], o.values[i]);
        return r;
    }
    Cochain operator-(const Cochain& o) const {
        if (!same_shape(o)) throw group_error("cochain sub: shape mismatch");
        Cochain r = *this;
        for (size_t i = 0; i < values.size(); ++i) r.values[i] = coeffs->base.sub(r.values[i], o.values[i]);
        return r;
    }
    Cochain scaled(long long c) const {
        Cochain r = *this;
        for (RVec& v : r.values) v = coeffs->base.smul(c, v);
        return r;
    }
    bool operator==(const Cochain& o) const {
        if (!same_shape(o)) return false;
        for (size_t i = 0; i < values.size(); ++i)
            if (!coeffs->base.eq(values[i], o.values[i])) return false;
        return true;
    }
    bool is_zero() const {
        for (const RVec& v : values)
            if (!coeffs->base.is_zero(v)) return false;
        return true;
    }

    // Reinterpret with the leading argument inflated to a higher level.
    Cochain inflate_first(int new_level) const {
        if (degree() == 0) throw group_error("inflate_first on 0-cochain");
        if (new_level < arg_levels[0]) throw group_error("inflate_first: level must increase");
        if (new_level == arg_levels[0]) return *this;
        std::vector<int> nl = arg_levels;
        nl[0] = new_level;
        Cochain r = zero(*chain, nl, *coeffs, act_level);
        r.for_each_cell([&](const std::vector<int>& args) {
            std::vector<int> src = args;
            src[0] = chain->reduce(args[0], new_level, arg_levels[0]);
            r.at_mut(args) = at(src);
        });
        return r;
    }

    // Whether the leading argument factors through the given lower level.
    bool first_arg_factors_through(int level) const {
        if (degree() == 0 || level >= arg_levels[0]) return true;
        bool ok = true;
        for_each_cell([&](const std::vector<int>& args) {
            if (!ok) return;
            // compare against the cell whose first argument has the same image
            std::vector<int> other = args;
            int img = chain->reduce(args[0], arg_levels[0], level);
            for (int y = 0; y < chain->at(arg_levels[0]).order(); ++y) {
                if (chain->reduce(y, arg_levels[0], level) == img) { other[0] = y; break; }
            }
            if (!coeffs->base.eq(at(args), at(other))) ok = false;
        });
        return ok;
    }
};

// Differential. For degree 0 the result is a 1-cochain at act_level; for
// higher degrees the leading slot widens to max(act_level, first level).
inline Cochain differential(const Cochain& x) {
    const GroupChain& ch = *x.chain;
    int d = x.degree();
    std::vector<int> levels;
    if (d == 0) {
        levels = {x.act_level};
    } else {
        levels.assign(1, std::max(x.act_level, x.arg_levels[0]));
        for (int l : x.arg_levels) levels.push_back(l);
    }
    Cochain out = Cochain::zero(ch, levels, *x.coeffs, x.act_level);
    const AbGroup& base = x.coeffs->base;

    out.for_each_cell([&](const std::vector<int>& g) {
        // g has d+1 entries at out.arg_levels
        RVec acc = base.zero();
        // term 0: g1 . x(g2, ..., g_{d+1})
        {
            std::vector<int> rest(g.begin() + 1, g.end());
            std::vector<int> rest_levels(out.arg_levels.begin() + 1, out.arg_levels.end());
            RVec v = x.eval(rest, rest_levels);
            acc = base.add(acc, x.act_by(g[0], out.arg_levels[0], v));
        }
        // middle terms
        int sign = -1;
        for (int i = 1; i <= d; ++i) {
            std::vector<int> args;
            std::vector<int> given;
            for (int j = 0; j < i - 1; ++j) { args.push_back(g[j]); given.push_back(out.arg_levels[j]); }
            int lv = x.arg_levels[i - 1];  // slot i of x (0-based i-1)
            int a = ch.reduce(g[i - 1], out.arg_levels[i - 1], lv);
            int b = ch.reduce(g[i], out.arg_levels[i], lv);
            args.push_back(ch.at(lv).mul(a, b));
            given.push_back(lv);
            for (size_t j = i + 1; j < g.size(); ++j) { args.push_back(g[j]); given.push_back(out.arg_levels[j]); }
            RVec v = x.eval(args, given);
            acc = (sign > 0) ? base.add(acc, v) : base.sub(acc, v);
            sign = -sign;
        }
        // last term: (-1)^{d+1} x(g1, ..., g_d)
        {
            std::vector<int> args(g.begin(), g.end() - 1);
            std::vector<int> given(out.arg_levels.begin(), out.arg_levels.end() - 1);
            RVec v = x.eval(args, given);
            acc = (sign > 0) ? base.add(acc, v) : base.sub(acc, v);
        }
        out.at_mut(g) = acc;
    });
    return out;
}

inline bool is_cocycle(const Cochain& x) { return differential(x).is_zero(); }

// Normalized random cochain: zero whenever any argument is the identity.
inline Cochain random_cochain(const GroupChain& chain, std::vector<int> levels,
                              const GModule& coeffs, int act_level, Rng& rng,
                              bool normalized = true) {
    Cochain c = Cochain::zero(chain, std::move(levels), coeffs, act_level);
    c.for_each_cell([&](const std::vector<int>& args) {
        if (normalized)
            for (int a : args)
                if (a == 0) return;
        RVec v(coeffs.base.dim(), Rat(0));
        for (int i = 0; i < coeffs.base.dim(); ++i) {
            switch (coeffs.base.kinds[i]) {
                case CoordKind::FreeZ: v[i] = Rat(rng.uniform(-3, 3)); break;
                case CoordKind::TorZ: v[i] = Rat(rng.uniform(0, static_cast<int>(coeffs.base.mods[i]) - 1)); break;
                case CoordKind::FreeQ: v[i] = Rat(rng.uniform(-6, 6), rng.uniform(1, 3)); break;
                case CoordKind::TorQ: v[i] = Rat(rng.uniform(0, 11), rng.uniform(1, 6)).mod1(); break;
            }
        }
        coeffs.base.reduce(v);
        c.at_mut(args) = v;
    });
    return c;
}

struct not_a_cocycle : group_error {
    explicit not_a_cocycle(const std::string& w) : group_error(w) {}
};

// Solve d(beta) = z for beta one degree lower, exactly, via Smith normal form
// over the coordinate blocks. Returns nullopt when no solution exists; throws
// not_a_cocycle when z is not closed (degree 1 and 2 only).
inline std::optional<Cochain> solve_coboundary(const Cochain& z) {
    if (z.degree() < 1 || z.degree() > 2) throw group_error("solve_coboundary: degree must be 1 or 2");
    if (!is_cocycle(z)) throw not_a_cocycle("solve_coboundary: input is not a cocycle");

    std::vector<int> beta_levels(z.arg_levels.begin() + 1, z.arg_levels.end());
    Cochain beta = Cochain::zero(*z.chain, beta_levels, *z.coeffs, z.act_level);
    // shape compatibility: d(beta) must have exactly z's levels
    {
        Cochain probe = differential(beta);
        if (probe.arg_levels != z.arg_levels)
            throw group_error("solve_coboundary: level shape not a coboundary shape");
    }

    const AbGroup& base = z.coeffs->base;
    int dim = base.dim();
    long long bcells = beta.cells();
    long long zcells = z.cells();

    // group coordinates by kind; require the action matrices not to mix kinds
    std::vector<std::vector<int>> blocks(4);
    for (int i = 0; i < dim; ++i) blocks[static_cast<int>(base.kinds[i])].push_back(i);
    for (const IMat& m : z.coeffs->act)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (m[i][j] != 0 && base.kinds[i] != base.kinds[j])
                    throw group_error("solve_coboundary: kind-mixing action unsupported");

    // Build, for each kind block, the linear system over the beta unknowns.
    // Equations come from expressing d(beta) cell by cell.
    // d(beta)(g) = sum of +/- beta(cells) plus action term g1 . beta(...).
    struct Term { long long bcell; int g; int sign; };  // g acts through act matrix
    std::vector<std::vector<Term>> rows(zcells);
    {
        std::vector<int> g(z.degree(), 0);
        for (long long zi = 0; zi < zcells; ++zi) {
            long long rem = zi;
            for (int d = z.degree() - 1; d >= 0; --d) {
                g[d] = static_cast<int>(rem % z.chain->at(z.arg_levels[d]).order());
                rem /= z.chain->at(z.arg_levels[d]).order();
            }
            std::vector<Term>& row = rows[zi];
            auto beta_index = [&](const std::vector<int>& args, const std::vector<int>& given) {
                std::vector<int> red(args.size());
                for (size_t i = 0; i < args.size(); ++i)
                    red[i] = z.chain->reduce(args[i], given[i], beta.arg_levels[i]);
                return beta.index(red);
            };
            int d = beta.degree();
            // term 0 with action by g[0]
            {
                std::vector<int> rest(g.begin() + 1, g.end());
                std::vector<int> lv(z.arg_levels.begin() + 1, z.arg_levels.end());
                row.push_back({beta_index(rest, lv),
                               z.chain->reduce(g[0], z.arg_levels[0], z.act_level), +1});
            }
            int sign = -1;
            for (int i = 1; i <= d; ++i) {
                std::vector<int> args, given;
                for (int j = 0; j < i - 1; ++j) { args.push_back(g[j]); given.push_back(z.arg_levels[j]); }
                int lv = beta.arg_levels[i - 1];
                int a = z.chain->reduce(g[i - 1], z.arg_levels[i - 1], lv);
                int b = z.chain->reduce(g[i], z.arg_levels[i], lv);
                args.push_back(z.chain->at(lv).mul(a, b));
                given.push_back(lv);
                for (size_t j = i + 1; j < g.size(); ++j) { args.push_back(g[j]); given.push_back(z.arg_levels[j]); }
                row.push_back({beta_index(args, given), 0, sign});
                sign = -sign;
            }
            {
                std::vector<int> args(g.begin(), g.end() - 1);
                std::vector<int> given(z.arg_levels.begin(), z.arg_levels.end() - 1);
                row.push_back({beta_index(args, given), 0, sign});
            }
        }
    }

    for (int kind = 0; kind < 4; ++kind) {
        const std::vector<int>& coords = blocks[kind];
        if (coords.empty()) continue;
        int bd = static_cast<int>(coords.size());
        // local index of each global coordinate
        std::vector<int> local(dim, -1);
        for (int i = 0; i < bd; ++i) local[coords[i]] = i;

        long long modulus = 0;
        if (kind == static_cast<int>(CoordKind::TorZ)) {
            modulus = base.mods[coords[0]];
            for (int c : coords)
                if (base.mods[c] != modulus)
                    throw group_error("solve_coboundary: mixed torsion moduli unsupported");
        }

        IMat a(zcells * bd, std::vector<long long>(bcells * bd, 0));
        RVec b(zcells * bd, Rat(0));
        for (long long zi = 0; zi < zcells; ++zi) {
            for (int ci = 0; ci < bd; ++ci) b[zi * bd + ci] = z.values[zi][coords[ci]];
            for (const Term& t : rows[zi]) {
                if (t.g == 0 && t.sign != 0) {
                    for (int ci = 0; ci < bd; ++ci)
                        a[zi * bd + ci][t.bcell * bd + ci] =
                            checked_add(a[zi * bd + ci][t.bcell * bd + ci], t.sign);
                } else {
                    const IMat& m = z.coeffs->act[t.g];
                    for (int ci = 0; ci < bd; ++ci)
                        for (int cj = 0; cj < bd; ++cj) {
                            long long e = m[coords[ci]][coords[cj]];
                            if (e != 0)
                                a[zi * bd + ci][t.bcell * bd + cj] = checked_add(
                                    a[zi * bd + ci][t.bcell * bd + cj], checked_mul(t.sign, e));
                        }
                }
            }
        }
        SolveDomain dom;
        switch (static_cast<CoordKind>(kind)) {
            case CoordKind::FreeZ: dom = SolveDomain::Integers; break;
            case CoordKind::TorZ: dom = SolveDomain::IntegersModN; break;
            case CoordKind::FreeQ: dom = SolveDomain::Rationals; break;
            case CoordKind::TorQ: dom = SolveDomain::RationalsMod1; break;
            default: dom = SolveDomain::Integers; break;
        }
        auto sol = solve_linear(a, b, dom, modulus);
        if (!sol) return std::nullopt;
        for (long long bi = 0; bi < bcells; ++bi)
            for (int ci = 0; ci < bd; ++ci) beta.values[bi][coords[ci]] = (*sol)[bi * bd + ci];
    }
    for (RVec& v : beta.values) base.reduce(v);
    // paranoia: the assembled solution must reproduce z
    if (!(differential(beta) == z)) return std::nullopt;
    return beta;
}

}  // namespace gcoh
