#pragma once

#include "hecke/cyclotomic.hpp"
#include "hecke/errors.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace hecke {

/// Finite group as a multiplication table; element 0 is the identity.
struct FiniteGroup {
    size_t n = 0;
    std::vector<std::vector<size_t>> table;

    size_t mult(size_t a, size_t b) const { return table[a][b]; }

    size_t inverse(size_t a) const
    {
        for (size_t b = 0; b < n; ++b)
            if (table[a][b] == 0)
                return b;
        throw InvalidInput("element without inverse");
    }

    size_t order_of(size_t a) const
    {
        size_t acc = a, k = 1;
        while (acc != 0) {
            acc = table[acc][a];
            ++k;
        }
        return k;
    }

    size_t power(size_t a, size_t e) const
    {
        size_t acc = 0;
        for (size_t i = 0; i < e; ++i)
            acc = table[acc][a];
        return acc;
    }

    void validate() const
    {
        if (table.size() != n)
            throw InvalidInput("group table has wrong number of rows");
        for (const auto &row : table) {
            if (row.size() != n)
                throw InvalidInput("group table has wrong row length");
            for (size_t v : row)
                if (v >= n)
                    throw InvalidInput("group table entry out of range");
        }
        for (size_t a = 0; a < n; ++a)
            if (table[0][a] != a || table[a][0] != a)
                throw InvalidInput("element 0 is not an identity");
        for (size_t a = 0; a < n; ++a) {
            bool has_inverse = false;
            for (size_t b = 0; b < n; ++b)
                has_inverse = has_inverse || table[a][b] == 0;
            if (!has_inverse)
                throw InvalidInput("missing inverse");
        }
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c)
                    if (table[table[a][b]][c] != table[a][table[b][c]])
                        throw InvalidInput("multiplication table not associative");
    }

    /// Greedy small generating set.
    std::vector<size_t> generators() const
    {
        std::vector<size_t> gens;
        std::vector<bool> seen(n, false);
        seen[0] = true;
        size_t covered = 1;
        while (covered < n) {
            size_t pick = 0;
            for (size_t a = 1; a < n; ++a)
                if (!seen[a]) {
                    pick = a;
                    break;
                }
            gens.push_back(pick);
            // close
            std::vector<size_t> frontier{0};
            std::vector<bool> reach(n, false);
            reach[0] = true;
            for (size_t head = 0; head < frontier.size(); ++head)
                for (size_t g : gens) {
                    size_t nx = table[frontier[head]][g];
                    if (!reach[nx]) {
                        reach[nx] = true;
                        frontier.push_back(nx);
                    }
                }
            covered = 0;
            for (size_t a = 0; a < n; ++a) {
                seen[a] = reach[a];
                covered += reach[a] ? 1 : 0;
            }
        }
        return gens;
    }

    bool is_subgroup(const std::vector<size_t> &elems) const
    {
        if (elems.empty() || elems[0] != 0)
            return false;
        std::vector<bool> in(n, false);
        for (size_t e : elems)
            in[e] = true;
        for (size_t a : elems)
            for (size_t b : elems)
                if (!in[table[a][b]])
                    return false;
        return true;
    }

    bool is_normal(const std::vector<size_t> &elems) const
    {
        std::vector<bool> in(n, false);
        for (size_t e : elems)
            in[e] = true;
        for (size_t g = 0; g < n; ++g) {
            size_t ginv = inverse(g);
            for (size_t h : elems)
                if (!in[table[table[g][h]][ginv]])
                    return false;
        }
        return true;
    }

    // --- constructors for common groups (tests, suite, CLI demos) ---

    static FiniteGroup cyclic(size_t k)
    {
        FiniteGroup g;
        g.n = k;
        g.table.assign(k, std::vector<size_t>(k));
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b)
                g.table[a][b] = (a + b) % k;
        return g;
    }

    static FiniteGroup product(const FiniteGroup &x, const FiniteGroup &y)
    {
        FiniteGroup g;
        g.n = x.n * y.n;
        g.table.assign(g.n, std::vector<size_t>(g.n));
        for (size_t a = 0; a < g.n; ++a)
            for (size_t b = 0; b < g.n; ++b) {
                size_t ax = a % x.n, ay = a / x.n;
                size_t bx = b % x.n, by = b / x.n;
                g.table[a][b] = x.table[ax][bx] + x.n * y.table[ay][by];
            }
        return g;
    }

    /// Symmetric group on m letters (m! elements, identity first).
    static FiniteGroup symmetric(size_t m)
    {
        std::vector<std::vector<size_t>> perms;
        std::vector<size_t> base(m);
        for (size_t i = 0; i < m; ++i)
            base[i] = i;
        std::vector<size_t> p = base;
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        // identity is the first permutation in lexicographic order already
        FiniteGroup g;
        g.n = perms.size();
        g.table.assign(g.n, std::vector<size_t>(g.n));
        auto index_of = [&perms](const std::vector<size_t> &q) {
            return std::lower_bound(perms.begin(), perms.end(), q) - perms.begin();
        };
        for (size_t a = 0; a < g.n; ++a)
            for (size_t b = 0; b < g.n; ++b) {
                std::vector<size_t> comp(m);
                for (size_t i = 0; i < m; ++i)
                    comp[i] = perms[a][perms[b][i]];
                g.table[a][b] = index_of(comp);
            }
        return g;
    }

    /// Dihedral group of order 2k: rotations r^j then reflections r^j s.
    static FiniteGroup dihedral(size_t k)
    {
        FiniteGroup g;
        g.n = 2 * k;
        g.table.assign(g.n, std::vector<size_t>(g.n));
        auto enc = [k](size_t rot, size_t flip) { return rot + k * flip; };
        for (size_t a = 0; a < g.n; ++a)
            for (size_t b = 0; b < g.n; ++b) {
                size_t ra = a % k, fa = a / k;
                size_t rb = b % k, fb = b / k;
                // (r^ra s^fa)(r^rb s^fb): s r = r^{-1} s
                size_t rot = fa == 0 ? (ra + rb) % k : (ra + k - rb % k) % k;
                g.table[a][b] = enc(rot, fa ^ fb);
            }
        return g;
    }

    /// Quaternion group of order 8: 1, i, j, k, -1, -i, -j, -k.
    static FiniteGroup quaternion()
    {
        // encode q = s * u with s in {+,-} (0,1) and u in {1,i,j,k} (0..3)
        auto mul = [](size_t a, size_t b, size_t &sign) {
            // multiplication table of {1,i,j,k} with sign tracking
            static const int tab[4][4][2] = {
                {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
                {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
                {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
            };
            sign = tab[a][b][1];
            return static_cast<size_t>(tab[a][b][0]);
        };
        FiniteGroup g;
        g.n = 8;
        g.table.assign(8, std::vector<size_t>(8));
        for (size_t a = 0; a < 8; ++a)
            for (size_t b = 0; b < 8; ++b) {
                size_t sa = a / 4, ua = a % 4;
                size_t sb = b / 4, ub = b % 4;
                size_t sprod;
                size_t u = mul(ua, ub, sprod);
                g.table[a][b] = u + 4 * ((sa + sb + sprod) % 2);
            }
        return g;
    }
};

/// 2-cocycle on a finite group with values in Q(zeta_m)^x.
struct CocycleTable {
    FiniteGroup group;
    CycFieldPtr field;
    std::vector<Cyc> values; // row-major n x n

    const Cyc &value(size_t a, size_t b) const { return values[a * group.n + b]; }
    Cyc &value(size_t a, size_t b) { return values[a * group.n + b]; }

    static CocycleTable trivial(FiniteGroup g, CycFieldPtr field = nullptr)
    {
        CocycleTable t;
        if (!field)
            field = make_cyc_field(4);
        t.field = field;
        t.values.assign(g.n * g.n, Cyc(1));
        t.group = std::move(g);
        return t;
    }

    bool validate(std::string *reason = nullptr) const
    {
        size_t n = group.n;
        if (values.size() != n * n) {
            if (reason)
                *reason = "value table has wrong size";
            return false;
        }
        for (const auto &v : values)
            if (v.is_zero()) {
                if (reason)
                    *reason = "cocycle value is zero";
                return false;
            }
        for (size_t g = 0; g < n; ++g)
            if (!(value(0, g) == Cyc(1)) || !(value(g, 0) == Cyc(1))) {
                if (reason)
                    *reason = "cocycle not normalized at the identity";
                return false;
            }
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c) {
                    // (a,b)(ab,c) = (b,c)(a,bc)
                    Cyc lhs = value(a, b) * value(group.mult(a, b), c);
                    Cyc rhs = value(b, c) * value(a, group.mult(b, c));
                    if (!(lhs == rhs)) {
                        if (reason)
                            *reason = "cocycle identity fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")";
                        return false;
                    }
                }
        return true;
    }

    CocycleTable inverse() const
    {
        CocycleTable t = *this;
        for (auto &v : t.values)
            v = Cyc(1) / v;
        return t;
    }

    /// Restriction to a subgroup (given by ambient indices, identity first);
    /// the result is indexed by the subgroup's own labels.
    CocycleTable restrict(const std::vector<size_t> &elems) const
    {
        if (!group.is_subgroup(elems))
            throw InvalidInput("restriction set is not a subgroup");
        std::map<size_t, size_t> local;
        for (size_t i = 0; i < elems.size(); ++i)
            local[elems[i]] = i;
        CocycleTable t;
        t.field = field;
        t.group.n = elems.size();
        t.group.table.assign(elems.size(), std::vector<size_t>(elems.size()));
        t.values.assign(elems.size() * elems.size(), Cyc(1));
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j) {
                t.group.table[i][j] = local.at(group.mult(elems[i], elems[j]));
                t.value(i, j) = value(elems[i], elems[j]);
            }
        return t;
    }
};

/// Formal sum over the twisted group algebra basis N_g.
using TwistedSum = std::map<size_t, Cyc>;

inline void sum_add(TwistedSum &x, size_t g, const Cyc &c)
{
    if (c.is_zero())
        return;
    auto it = x.find(g);
    if (it == x.end()) {
        x[g] = c;
    } else {
        it->second += c;
        if (it->second.is_zero())
            x.erase(it);
    }
}

inline TwistedSum twisted_multiply(const CocycleTable &t, const TwistedSum &x, const TwistedSum &y)
{
    TwistedSum out;
    for (const auto &[g, cg] : x)
        for (const auto &[h, ch] : y)
            sum_add(out, t.group.mult(g, h), cg * ch * t.value(g, h));
    return out;
}

} // namespace hecke
