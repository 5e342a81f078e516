#pragma once

#include <optional>
#include <vector>

#include "gcoh/gset.hpp"
#include "gcoh/module.hpp"

namespace gcoh {

// Cocharacter-style lattice Y with a group action by integer matrices, and an
// optional overlattice Ybar >= Y with exponent dividing ybar_den. Elements of
// Ybar are stored as rational coordinates in the Y basis; the Ybar basis is
// given explicitly as ybar_num[i] / ybar_den in Y coordinates.
struct Lattice {
    int rank = 0;
    const FiniteGroup* group = nullptr;
    std::vector<IMat> act;  // in the Y basis

    long long ybar_den = 1;
    IMat ybar_num;  // ybar basis rows (scaled by ybar_den); empty means Ybar = Y

    bool has_ybar() const { return ybar_den > 1; }

    RVec apply(int g, const RVec& v) const { return mat_apply_rat(act[g], v); }

    bool in_y(const RVec& v) const {
        for (const Rat& c : v)
            if (!c.is_integer()) return false;
        return true;
    }

    // coordinates of v (Y coords) with respect to the Ybar basis
    std::optional<RVec> ybar_coords(const RVec& v) const {
        if (!has_ybar()) return in_y(v) ? std::optional<RVec>(v) : std::nullopt;
        // solve c * (ybar_num / ybar_den) = v, i.e. ybar_num^T c = ybar_den * v
        IMat a(rank, std::vector<long long>(rank, 0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) a[i][j] = ybar_num[j][i];
        RVec b(rank, Rat(0));
        for (int i = 0; i < rank; ++i) b[i] = v[i] * Rat(ybar_den);
        auto sol = solve_linear(a, b, SolveDomain::Rationals);
        if (!sol) return std::nullopt;
        for (const Rat& c : *sol)
            if (!c.is_integer()) return std::nullopt;
        return sol;
    }

    bool in_ybar(const RVec& v) const { return ybar_coords(v).has_value(); }

    // v given by integer Ybar coordinates, expressed in Y coordinates
    RVec from_ybar_coords(const RVec& c) const {
        if (!has_ybar()) return c;
        RVec v(rank, Rat(0));
        for (int j = 0; j < rank; ++j)
            for (int i = 0; i < rank; ++i) v[i] += c[j] * Rat(ybar_num[j][i], ybar_den);
        return v;
    }

    // integer action matrix in the Ybar basis
    IMat act_ybar(int g) const {
        if (!has_ybar()) return act[g];
        IMat m(rank, std::vector<long long>(rank, 0));
        for (int j = 0; j < rank; ++j) {
            RVec row(rank, Rat(0));
            for (int i = 0; i < rank; ++i) row[i] = Rat(ybar_num[j][i], ybar_den);
            auto c = ybar_coords(apply(g, row));
            if (!c) throw group_error("lattice: Ybar not stable under the action");
            for (int i = 0; i < rank; ++i) {
                if (!(*c)[i].is_integer()) throw group_error("lattice: Ybar action not integral");
                m[j][i] = (*c)[i].num();
            }
        }
        // transpose into column-action convention
        IMat t(rank, std::vector<long long>(rank, 0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) t[i][j] = m[j][i];
        return t;
    }

    void validate() const {
        for (int g = 0; g < group->order(); ++g) {
            IMat prod = mat_mul(act[g], act[group->inv(g)]);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j)
                    if (prod[i][j] != (i == j ? 1 : 0))
                        throw group_error("lattice: action matrix not invertible over Z");
        }
        if (has_ybar()) {
            if (static_cast<int>(ybar_num.size()) != rank)
                throw group_error("lattice: Ybar basis must have full rank");
            // Y <= Ybar
            for (int i = 0; i < rank; ++i) {
                RVec e(rank, Rat(0));
                e[i] = Rat(1);
                if (!in_ybar(e)) throw group_error("lattice: Y not contained in Ybar");
            }
            // N * Ybar <= Y and stability
            for (int j = 0; j < rank; ++j) {
                RVec row(rank, Rat(0));
                for (int i = 0; i < rank; ++i) row[i] = Rat(ybar_num[j][i], ybar_den);
                RVec nrow(rank, Rat(0));
                for (int i = 0; i < rank; ++i) nrow[i] = row[i] * Rat(ybar_den);
                if (!in_y(nrow)) throw group_error("lattice: den * Ybar not inside Y");
                for (int g = 0; g < group->order(); ++g)
                    if (!in_ybar(apply(g, row))) throw group_error("lattice: Ybar not stable");
            }
        }
    }

    GModule as_module() const {
        GModule m;
        m.base = AbGroup::free_z(rank);
        m.group = group;
        m.act = act;
        return m;
    }
};

inline Lattice rank_one_lattice(const FiniteGroup& g, const std::vector<long long>& signs,
                                long long over_den = 1) {
    Lattice l;
    l.rank = 1;
    l.group = &g;
    l.act.resize(g.order());
    for (int x = 0; x < g.order(); ++x) l.act[x] = IMat{{signs[x]}};
    l.ybar_den = over_den;
    if (over_den > 1) l.ybar_num = IMat{{1}};
    l.validate();
    return l;
}

// Place-indexed lattice-valued function (the Lambda objects). Values are
// rational coordinates in the Y basis; dotted lists the distinguished orbit
// representatives.
struct PlaceFunction {
    const Lattice* lattice = nullptr;
    const GSet* places = nullptr;
    std::vector<RVec> value;

    RVec at(int w) const { return value[w]; }

    static PlaceFunction zero(const Lattice& l, const GSet& p) {
        PlaceFunction f;
        f.lattice = &l;
        f.places = &p;
        f.value.assign(p.size, RVec(l.rank, Rat(0)));
        return f;
    }

    bool degree_zero() const {
        RVec s(lattice->rank, Rat(0));
        for (const RVec& v : value)
            for (int i = 0; i < lattice->rank; ++i) s[i] += v[i];
        for (const Rat& c : s)
            if (!c.is_zero()) return false;
        return true;
    }

    // (tau . Lambda)(w) = tau(Lambda(tau^{-1} w))
    PlaceFunction acted(int tau) const {
        PlaceFunction out = *this;
        int ti = places->group->inv(tau);
        for (int w = 0; w < places->size; ++w)
            out.value[w] = lattice->apply(tau, value[places->act(ti, w)]);
        return out;
    }

    PlaceFunction plus(const PlaceFunction& o) const {
        PlaceFunction out = *this;
        for (int w = 0; w < places->size; ++w)
            for (int i = 0; i < lattice->rank; ++i) out.value[w][i] += o.value[w][i];
        return out;
    }

    bool norm_killed() const {
        std::vector<RVec> sum(places->size, RVec(lattice->rank, Rat(0)));
        for (int tau = 0; tau < places->group->order(); ++tau) {
            PlaceFunction t = acted(tau);
            for (int w = 0; w < places->size; ++w)
                for (int i = 0; i < lattice->rank; ++i) sum[w][i] += t.value[w][i];
        }
        for (const RVec& v : sum)
            for (const Rat& c : v)
                if (!c.is_zero()) return false;
        return true;
    }

    bool dotted_support_ok(const std::vector<int>& dotted) const {
        std::vector<char> is_dotted(places->size, 0);
        for (int w : dotted) is_dotted[w] = 1;
        for (int w = 0; w < places->size; ++w) {
            if (is_dotted[w]) {
                if (!lattice->in_ybar(value[w])) return false;
            } else {
                if (!lattice->in_y(value[w])) return false;
            }
        }
        return true;
    }

    PlaceFunction scaled(long long c) const {
        PlaceFunction out = *this;
        for (RVec& v : out.value)
            for (Rat& x : v) x *= Rat(c);
        return out;
    }

    bool is_zero() const {
        for (const RVec& v : value)
            for (const Rat& x : v)
                if (!x.is_zero()) return false;
        return true;
    }
};

}  // namespace gcoh
