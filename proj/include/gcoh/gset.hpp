#pragma once

#include <vector>

#include "gcoh/group.hpp"

namespace gcoh {

// Finite left G-set given by an action table.
struct GSet {
    const FiniteGroup* group = nullptr;
    int size = 0;
    std::vector<int> act_table;  // act_table[g * size + x]

    int act(int g, int x) const { return act_table[g * size + x]; }

    void validate() const {
        int n = group->order();
        for (int x = 0; x < size; ++x)
            if (act(0, x) != x) throw group_error("gset: identity does not fix points");
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                for (int x = 0; x < size; ++x)
                    if (act(group->mul(g, h), x) != act(g, act(h, x)))
                        throw group_error("gset: action not compatible with multiplication");
    }

    std::vector<int> orbit(int x) const {
        std::vector<char> seen(size, 0);
        std::vector<int> out;
        for (int g = 0; g < group->order(); ++g) {
            int y = act(g, x);
            if (!seen[y]) { seen[y] = 1; out.push_back(y); }
        }
        return out;
    }

    std::vector<int> stabilizer(int x) const {
        std::vector<int> st;
        for (int g = 0; g < group->order(); ++g)
            if (act(g, x) == x) st.push_back(g);
        return st;
    }
};

// Left action of G on left cosets of H: g . (aH) = (ga)H. Point 0 is the
// coset H itself.
inline GSet coset_gset(const FiniteGroup& g, const std::vector<int>& h) {
    std::vector<int> reps = g.coset_reps_left(h);
    int m = static_cast<int>(reps.size());
    std::vector<int> coset_of(g.order(), -1);
    for (int i = 0; i < m; ++i)
        for (int x : h) coset_of[g.mul(reps[i], x)] = i;
    GSet s;
    s.group = &g;
    s.size = m;
    s.act_table.assign(g.order() * m, 0);
    for (int a = 0; a < g.order(); ++a)
        for (int i = 0; i < m; ++i) s.act_table[a * m + i] = coset_of[g.mul(a, reps[i])];
    s.validate();
    return s;
}

inline GSet trivial_gset(const FiniteGroup& g, int size) {
    GSet s;
    s.group = &g;
    s.size = size;
    s.act_table.assign(g.order() * size, 0);
    for (int a = 0; a < g.order(); ++a)
        for (int x = 0; x < size; ++x) s.act_table[a * size + x] = x;
    return s;
}

inline GSet regular_gset(const FiniteGroup& g) { return coset_gset(g, {0}); }

inline GSet disjoint_union(const GSet& a, const GSet& b) {
    if (a.group != b.group) throw group_error("gset union: different groups");
    GSet s;
    s.group = a.group;
    s.size = a.size + b.size;
    s.act_table.assign(a.group->order() * s.size, 0);
    for (int g = 0; g < a.group->order(); ++g) {
        for (int x = 0; x < a.size; ++x) s.act_table[g * s.size + x] = a.act(g, x);
        for (int x = 0; x < b.size; ++x) s.act_table[g * s.size + a.size + x] = a.size + b.act(g, x);
    }
    return s;
}

}  // namespace gcoh
