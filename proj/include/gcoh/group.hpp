#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcoh {

struct group_error : std::runtime_error {
    explicit group_error(const std::string& w) : std::runtime_error(w) {}
};

// Finite group given by its full multiplication table. Elements are indices
// 0..order-1 and the identity is always index 0. Construction validates all
// group laws exhaustively; groups in this library stay small (order <= 48).
class FiniteGroup {
public:
    FiniteGroup() = default;

    static FiniteGroup from_table(std::vector<std::vector<int>> table) {
        FiniteGroup g;
        g.n_ = static_cast<int>(table.size());
        if (g.n_ == 0) throw group_error("empty multiplication table");
        g.mul_.assign(g.n_ * g.n_, 0);
        for (int i = 0; i < g.n_; ++i) {
            if (static_cast<int>(table[i].size()) != g.n_)
                throw group_error("ragged multiplication table");
            for (int j = 0; j < g.n_; ++j) {
                int v = table[i][j];
                if (v < 0 || v >= g.n_) throw group_error("table entry out of range");
                g.mul_[i * g.n_ + j] = v;
            }
        }
        g.validate();
        g.compute_inverses();
        return g;
    }

    static FiniteGroup cyclic(int n) {
        if (n <= 0) throw group_error("cyclic group order must be positive");
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        return from_table(std::move(t));
    }

    // Dihedral group of order 2n: elements r^i (0..n-1) and f r^i (n..2n-1),
    // with relations r^n = 1, f^2 = 1, f r f = r^{-1}.
    static FiniteGroup dihedral(int n) {
        if (n <= 0) throw group_error("dihedral parameter must be positive");
        int order = 2 * n;
        auto idx = [&](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
        std::vector<std::vector<int>> t(order, std::vector<int>(order));
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b) {
                int fa = a / n, ra = a % n, fb = b / n, rb = b % n;
                // (f^fa r^ra)(f^fb r^rb) = f^(fa+fb) r^(ra' + rb), ra' = ra or -ra
                int ra2 = fb ? -ra : ra;
                t[a][b] = idx((fa + fb) % 2, ra2 + rb);
            }
        return from_table(std::move(t));
    }

    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
        int n = a.order() * b.order();
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        auto idx = [&](int x, int y) { return x * b.order() + y; };
        for (int x1 = 0; x1 < a.order(); ++x1)
            for (int y1 = 0; y1 < b.order(); ++y1)
                for (int x2 = 0; x2 < a.order(); ++x2)
                    for (int y2 = 0; y2 < b.order(); ++y2)
                        t[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        return from_table(std::move(t));
    }

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return 0; }

    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

    int element_order(int a) const {
        int x = a, k = 1;
        while (x != 0) { x = mul(x, a); ++k; }
        return k;
    }

    bool is_subgroup(const std::vector<int>& h) const {
        if (h.empty()) return false;
        std::set<int> s(h.begin(), h.end());
        if (!s.count(0)) return false;
        for (int a : h)
            for (int b : h)
                if (!s.count(mul(a, b))) return false;
        return true;
    }

    bool is_normal(const std::vector<int>& h) const {
        if (!is_subgroup(h)) return false;
        std::set<int> s(h.begin(), h.end());
        for (int g = 0; g < n_; ++g)
            for (int x : h)
                if (!s.count(conj(g, x))) return false;
        return true;
    }

    std::vector<int> subgroup_generated(std::vector<int> gens) const {
        std::set<int> s{0};
        std::vector<int> stack{0};
        for (int g : gens)
            if (!s.count(g)) { s.insert(g); stack.push_back(g); }
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : std::set<int>(s)) {
                for (int c : {mul(a, b), mul(b, a), inv(a)}) {
                    if (!s.count(c)) { s.insert(c); stack.push_back(c); }
                }
            }
        }
        return std::vector<int>(s.begin(), s.end());
    }

    // All subgroups, found as closures of generating sets of size <= 3.
    // Complete for the orders used here (<= 24).
    std::vector<std::vector<int>> all_subgroups() const {
        std::set<std::vector<int>> found;
        found.insert({0});
        for (int a = 0; a < n_; ++a) {
            found.insert(subgroup_generated({a}));
            for (int b = a; b < n_; ++b) {
                found.insert(subgroup_generated({a, b}));
                if (n_ <= 16)
                    for (int c = b; c < n_; ++c) found.insert(subgroup_generated({a, b, c}));
            }
        }
        return std::vector<std::vector<int>>(found.begin(), found.end());
    }

    // Left-coset representatives for H, least element index per coset, with
    // the identity first (its coset is H itself).
    std::vector<int> coset_reps_left(const std::vector<int>& h) const {
        if (!is_subgroup(h)) throw group_error("coset_reps: not a subgroup");
        std::vector<int> reps;
        std::vector<char> seen(n_, 0);
        for (int g = 0; g < n_; ++g) {
            if (seen[g]) continue;
            reps.push_back(g);
            for (int x : h) seen[mul(g, x)] = 1;
        }
        // identity's coset is found at g=0 first, so reps[0] == 0 already
        return reps;
    }

    std::vector<int> coset_reps_right(const std::vector<int>& h) const {
        if (!is_subgroup(h)) throw group_error("coset_reps: not a subgroup");
        std::vector<int> reps;
        std::vector<char> seen(n_, 0);
        for (int g = 0; g < n_; ++g) {
            if (seen[g]) continue;
            reps.push_back(g);
            for (int x : h) seen[mul(x, g)] = 1;
        }
        return reps;
    }

private:
    void validate() const {
        // identity at index 0
        for (int a = 0; a < n_; ++a)
            if (mul(0, a) != a || mul(a, 0) != a)
                throw group_error("index 0 is not a two-sided identity");
        // inverses
        for (int a = 0; a < n_; ++a) {
            bool has = false;
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == 0 && mul(b, a) == 0) { has = true; break; }
            if (!has) throw group_error("element without inverse");
        }
        // associativity, exhaustive
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw group_error("multiplication table is not associative");
    }

    int n_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;

public:
    void compute_inverses() {
        inv_.assign(n_, 0);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == 0) { inv_[a] = b; break; }
    }
};

// Total map between groups, stored as an image table; checked homomorphism.
struct Homo {
    const FiniteGroup* src = nullptr;
    const FiniteGroup* dst = nullptr;
    std::vector<int> img;

    int operator()(int x) const { return img[x]; }

    bool is_homomorphism() const {
        for (int a = 0; a < src->order(); ++a)
            for (int b = 0; b < src->order(); ++b)
                if (img[src->mul(a, b)] != dst->mul(img[a], img[b])) return false;
        return true;
    }
    bool is_surjective() const {
        std::set<int> s(img.begin(), img.end());
        return static_cast<int>(s.size()) == dst->order();
    }
    std::vector<int> kernel() const {
        std::vector<int> k;
        for (int a = 0; a < src->order(); ++a)
            if (img[a] == 0) k.push_back(a);
        return k;
    }
};

// Quotient of G by a normal subgroup N: the quotient group, the projection,
// and the canonical section (least element index in each coset, except that
// the identity coset always maps to the identity).
struct QuotientDatum {
    const FiniteGroup* parent = nullptr;
    std::vector<int> normal;
    FiniteGroup quotient;
    std::vector<int> proj;     // parent index -> quotient index
    std::vector<int> section;  // quotient index -> parent index, section[0] == 0
};

inline QuotientDatum make_quotient(const FiniteGroup& g, const std::vector<int>& n) {
    if (!g.is_normal(n)) throw group_error("quotient: subgroup is not normal");
    QuotientDatum q;
    q.parent = &g;
    q.normal = n;
    // enumerate left cosets gN; identity coset first
    std::vector<int> coset_of(g.order(), -1);
    std::vector<int> reps;
    for (int a = 0; a < g.order(); ++a) {
        if (coset_of[a] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int x : n) coset_of[g.mul(a, x)] = id;
    }
    int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = coset_of[g.mul(reps[i], reps[j])];
    q.quotient = FiniteGroup::from_table(std::move(t));
    q.proj = coset_of;
    q.section = reps;
    q.section[0] = 0;  // s(1) = 1 always
    return q;
}

enum class GroupKind { Cyclic, Dihedral, Product, Table };

}  // namespace gcoh
