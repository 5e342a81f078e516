#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gcoh/gset.hpp"
#include "gcoh/group.hpp"
#include "gcoh/rational.hpp"
#include "gcoh/smith.hpp"

namespace gcoh {

// Per-coordinate ambient of a module element.
//   FreeZ   : integer coordinate
//   TorZ    : integer coordinate mod d (stored reduced into [0, d))
//   FreeQ   : rational coordinate
//   TorQ    : rational coordinate mod 1 (stored reduced into [0, 1))
enum class CoordKind { FreeZ, TorZ, FreeQ, TorQ };

// Finitely presented abelian-group-with-divisible-parts: a fixed list of
// coordinate kinds. Elements are rational vectors reduced coordinatewise.
struct AbGroup {
    std::vector<CoordKind> kinds;
    std::vector<long long> mods;            // modulus for TorZ coordinates, 1 otherwise
    std::optional<long long> den_bound;     // hard guard on denominators

    int dim() const { return static_cast<int>(kinds.size()); }

    static AbGroup free_z(int r) {
        AbGroup a;
        a.kinds.assign(r, CoordKind::FreeZ);
        a.mods.assign(r, 1);
        return a;
    }
    static AbGroup torsion(const std::vector<long long>& ds) {
        AbGroup a;
        for (long long d : ds) {
            if (d < 2) throw group_error("torsion modulus must be >= 2");
            a.kinds.push_back(CoordKind::TorZ);
            a.mods.push_back(d);
        }
        return a;
    }
    static AbGroup rationals(int r) {
        AbGroup a;
        a.kinds.assign(r, CoordKind::FreeQ);
        a.mods.assign(r, 1);
        return a;
    }
    static AbGroup circles(int r) {  // (Q/Z)^r
        AbGroup a;
        a.kinds.assign(r, CoordKind::TorQ);
        a.mods.assign(r, 1);
        return a;
    }
    static AbGroup direct_sum(const AbGroup& x, const AbGroup& y) {
        AbGroup a = x;
        a.kinds.insert(a.kinds.end(), y.kinds.begin(), y.kinds.end());
        a.mods.insert(a.mods.end(), y.mods.begin(), y.mods.end());
        if (y.den_bound && (!a.den_bound || *y.den_bound < *a.den_bound)) a.den_bound = y.den_bound;
        return a;
    }

    void reduce(RVec& v) const {
        if (static_cast<int>(v.size()) != dim()) throw group_error("element dimension mismatch");
        for (int i = 0; i < dim(); ++i) {
            switch (kinds[i]) {
                case CoordKind::FreeZ:
                    if (!v[i].is_integer()) throw group_error("non-integer value in Z coordinate");
                    break;
                case CoordKind::TorZ:
                    if (!v[i].is_integer()) throw group_error("non-integer value in Z/d coordinate");
                    v[i] = v[i].mod_int(mods[i]);
                    break;
                case CoordKind::FreeQ:
                    break;
                case CoordKind::TorQ:
                    v[i] = v[i].mod1();
                    break;
            }
            if (den_bound && v[i].den() > *den_bound)
                throw overflow_error("coordinate denominator exceeds ambient bound");
        }
    }

    RVec zero() const { return RVec(dim(), Rat(0)); }

    RVec add(RVec a, const RVec& b) const {
        for (int i = 0; i < dim(); ++i) a[i] += b[i];
        reduce(a);
        return a;
    }
    RVec sub(RVec a, const RVec& b) const {
        for (int i = 0; i < dim(); ++i) a[i] -= b[i];
        reduce(a);
        return a;
    }
    RVec neg(RVec a) const {
        for (int i = 0; i < dim(); ++i) a[i] = -a[i];
        reduce(a);
        return a;
    }
    RVec smul(long long c, RVec a) const {
        for (int i = 0; i < dim(); ++i) a[i] *= Rat(c);
        reduce(a);
        return a;
    }
    bool eq(const RVec& a, const RVec& b) const {
        for (int i = 0; i < dim(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
    bool is_zero(const RVec& a) const {
        for (const Rat& x : a)
            if (!x.is_zero()) return false;
        return true;
    }
};

// An integer matrix is kind-compatible when every nonzero entry maps a source
// coordinate into a target coordinate whose ambient can absorb it.
// Torsion sources may only feed torsion targets with compatible modulus.
inline bool kinds_compatible(CoordKind src, long long src_mod, CoordKind dst, long long dst_mod) {
    switch (src) {
        case CoordKind::FreeZ: return true;  // Z maps anywhere
        case CoordKind::FreeQ: return dst == CoordKind::FreeQ || dst == CoordKind::TorQ;
        case CoordKind::TorZ:
            return (dst == CoordKind::TorZ && dst_mod % src_mod == 0) || dst == CoordKind::TorQ;
        case CoordKind::TorQ: return dst == CoordKind::TorQ;
    }
    return false;
}

// Module with an action of a finite group by integer matrices.
struct GModule {
    AbGroup base;
    const FiniteGroup* group = nullptr;
    std::vector<IMat> act;  // one matrix per group element, act[0] = identity

    int dim() const { return base.dim(); }

    RVec apply(int g, const RVec& v) const {
        RVec w = mat_apply_rat(act[g], v);
        base.reduce(w);
        return w;
    }

    void validate() const {
        int n = group->order();
        if (static_cast<int>(act.size()) != n) throw group_error("module: missing action matrices");
        for (int g = 0; g < n; ++g) {
            if (static_cast<int>(act[g].size()) != dim()) throw group_error("module: bad matrix shape");
            for (int i = 0; i < dim(); ++i) {
                if (static_cast<int>(act[g][i].size()) != dim())
                    throw group_error("module: bad matrix shape");
                for (int j = 0; j < dim(); ++j)
                    if (act[g][i][j] != 0 &&
                        !kinds_compatible(base.kinds[j], base.mods[j], base.kinds[i], base.mods[i]))
                        throw group_error("module: action matrix mixes incompatible coordinates");
            }
        }
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (act[0][i][j] != (i == j ? 1 : 0))
                    throw group_error("module: identity does not act trivially");
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                IMat gh = mat_mul(act[g], act[h]);
                const IMat& ref = act[group->mul(g, h)];
                // equality of the induced maps; for torsion targets compare mod d
                for (int i = 0; i < dim(); ++i)
                    for (int j = 0; j < dim(); ++j) {
                        long long a = gh[i][j], b = ref[i][j];
                        if (base.kinds[i] == CoordKind::TorZ) {
                            long long d = base.mods[i];
                            if (((a - b) % d + d) % d != 0) throw group_error("module: action not a homomorphism");
                        } else if (a != b) {
                            throw group_error("module: action not a homomorphism");
                        }
                    }
            }
    }
};

inline GModule trivial_module(const FiniteGroup& g, AbGroup base) {
    GModule m;
    m.base = std::move(base);
    m.group = &g;
    m.act.assign(g.order(), identity_mat(m.base.dim()));
    return m;
}

// Maps(X, A) with the twisted permutation action (s.f)(x) = s(f(s^{-1} x)).
// Coordinates are blocks of A indexed by the points of X.
inline GModule maps_module(const GSet& x, const GModule& a) {
    if (x.group != a.group) throw group_error("maps_module: group mismatch");
    GModule m;
    m.group = a.group;
    int d = a.dim();
    for (int p = 0; p < x.size; ++p) {
        m.base.kinds.insert(m.base.kinds.end(), a.base.kinds.begin(), a.base.kinds.end());
        m.base.mods.insert(m.base.mods.end(), a.base.mods.begin(), a.base.mods.end());
    }
    m.base.den_bound = a.base.den_bound;
    int nd = m.base.dim();
    m.act.assign(a.group->order(), IMat(nd, std::vector<long long>(nd, 0)));
    for (int g = 0; g < a.group->order(); ++g) {
        int ginv = a.group->inv(g);
        for (int p = 0; p < x.size; ++p) {
            int src = x.act(ginv, p);  // block feeding block p
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    m.act[g][p * d + i][src * d + j] = a.act[g][i][j];
        }
    }
    return m;
}

// Restriction of a module to a subgroup (via an inclusion-style homomorphism).
inline GModule restrict_module(const GModule& a, const FiniteGroup& h, const Homo& incl) {
    GModule m;
    m.base = a.base;
    m.group = &h;
    m.act.resize(h.order());
    for (int g = 0; g < h.order(); ++g) m.act[g] = a.act[incl(g)];
    return m;
}

// Module pulled back along a surjection pi : G -> Q from a Q-module.
inline GModule inflate_module(const GModule& a, const FiniteGroup& g, const Homo& pi) {
    GModule m;
    m.base = a.base;
    m.group = &g;
    m.act.resize(g.order());
    for (int x = 0; x < g.order(); ++x) m.act[x] = a.act[pi(x)];
    return m;
}

// Induced module ind_H^G(A) = { f : G -> A | f(hg) = h f(g) }, realized on
// the basis indexed by left-coset representatives R (1 in R): coordinates
// (a_r)_r with a_r = f(r^{-1}). The copy of A supported on H sits at r = 1.
struct InducedModule {
    GModule mod;
    std::vector<int> reps;        // R
    const FiniteGroup* sub = nullptr;
    Homo incl;                    // H -> G
};

inline InducedModule induced_module(const FiniteGroup& g, const FiniteGroup& h, const Homo& incl,
                                    const GModule& a_over_h, const std::vector<int>& reps) {
    if (a_over_h.group != &h) throw group_error("induced_module: module not over H");
    std::vector<int> h_img(h.order());
    for (int i = 0; i < h.order(); ++i) h_img[i] = incl(i);
    auto in_h = [&](int x) {
        for (int i = 0; i < h.order(); ++i)
            if (h_img[i] == x) return i;
        return -1;
    };
    if (reps.empty() || reps[0] != 0) throw group_error("induced_module: reps must start with 1");
    int nr = static_cast<int>(reps.size());
    int d = a_over_h.dim();

    InducedModule out;
    out.reps = reps;
    out.sub = &h;
    out.incl = incl;
    GModule& m = out.mod;
    m.group = &g;
    for (int r = 0; r < nr; ++r) {
        m.base.kinds.insert(m.base.kinds.end(), a_over_h.base.kinds.begin(), a_over_h.base.kinds.end());
        m.base.mods.insert(m.base.mods.end(), a_over_h.base.mods.begin(), a_over_h.base.mods.end());
    }
    m.base.den_bound = a_over_h.base.den_bound;
    int nd = m.base.dim();
    m.act.assign(g.order(), IMat(nd, std::vector<long long>(nd, 0)));
    // (g1 . f)(g2) = f(g2 g1); coordinates a'_r = (g1.f)(r^{-1}) = f(r^{-1} g1).
    // Decompose r^{-1} g1 = h . r'^{-1}: a'_r = h(a_{r'}).
    for (int g1 = 0; g1 < g.order(); ++g1) {
        for (int r = 0; r < nr; ++r) {
            int x = g.mul(g.inv(reps[r]), g1);
            // find r' in reps and h in H with x = incl(h) * reps[r']^{-1}
            int rp = -1, hh = -1;
            for (int cand = 0; cand < nr; ++cand) {
                int y = g.mul(x, reps[cand]);  // should be incl(h)
                int hi = in_h(y);
                if (hi >= 0) { rp = cand; hh = hi; break; }
            }
            if (rp < 0) throw group_error("induced_module: reps do not cover G/H");
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    m.act[g1][r * d + i][rp * d + j] = a_over_h.act[hh][i][j];
        }
    }
    return out;
}

// The isomorphism ind_H^G(A) -> Maps(G/H, A) for A a G-module,
// f |-> (g x0 |-> g . f(g^{-1})). On coordinates: place r.x0 receives r(a_r).
inline IMat induced_to_maps_matrix(const InducedModule& ind, const GModule& a_over_g,
                                   const GSet& cosets) {
    int nr = static_cast<int>(ind.reps.size());
    int d = a_over_g.dim();
    if (cosets.size != nr) throw group_error("induced_to_maps: coset space size mismatch");
    IMat m(nr * d, std::vector<long long>(nr * d, 0));
    for (int r = 0; r < nr; ++r) {
        int place = cosets.act(ind.reps[r], 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m[place * d + i][r * d + j] = a_over_g.act[ind.reps[r]][i][j];
    }
    return m;
}

}  // namespace gcoh
