#pragma once

#include "hecke/cocycle.hpp"
#include "hecke/errors.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/root_datum.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hecke {

/// Normal-form element sum_w N_w p_w(xi, r): group part left, polynomial right.
struct HeckeElement {
    std::map<size_t, Poly> terms;

    bool is_zero() const { return terms.empty(); }

    void add(size_t w, const Poly &p)
    {
        if (p.is_zero())
            return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms[w] = p;
        } else {
            it->second += p;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }

    friend HeckeElement operator+(const HeckeElement &a, const HeckeElement &b)
    {
        HeckeElement r = a;
        for (const auto &[w, p] : b.terms)
            r.add(w, p);
        return r;
    }
    friend HeckeElement operator-(const HeckeElement &a, const HeckeElement &b)
    {
        HeckeElement r = a;
        for (const auto &[w, p] : b.terms)
            r.add(w, -p);
        return r;
    }
    HeckeElement operator-() const
    {
        HeckeElement r;
        for (const auto &[w, p] : terms)
            r.terms[w] = -p;
        return r;
    }
    friend bool operator==(const HeckeElement &a, const HeckeElement &b) { return a.terms == b.terms; }
    friend bool operator!=(const HeckeElement &a, const HeckeElement &b) { return !(a == b); }

    unsigned xi_degree() const
    {
        unsigned d = 0;
        for (const auto &[w, p] : terms)
            d = std::max(d, p.xi_degree());
        return d;
    }
    unsigned r_degree() const
    {
        unsigned d = 0;
        for (const auto &[w, p] : terms)
            d = std::max(d, p.r_degree());
        return d;
    }
};

/// The twisted graded Hecke algebra H(t, W, c r, cocycle). Immutable; all
/// element operations are pure functions on normal forms.
class HeckeAlgebra {
public:
    static HeckeAlgebra build(RootDatum datum, std::vector<GaussianRational> c_values,
                              std::optional<CocycleTable> cocycle = std::nullopt,
                              size_t weyl_bound = 100000)
    {
        HeckeAlgebra alg;
        datum.validate();
        alg.datum_ = std::move(datum);
        alg.weyl_ = WeylGroup::build(alg.datum_, weyl_bound);

        size_t s = alg.datum_.simple.size();
        if (c_values.size() == 1 && s > 1)
            c_values.assign(s, c_values[0]);
        if (c_values.size() != s)
            throw InvalidInput("need one c parameter per simple root");
        alg.c_ = std::move(c_values);
        // c_i = c_j whenever s_i and s_j are conjugate in W
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < s; ++j) {
                if (alg.c_[i] == alg.c_[j])
                    continue;
                size_t si = alg.weyl_.simple_element(i);
                size_t sj = alg.weyl_.simple_element(j);
                for (size_t w = 0; w < alg.weyl_.order(); ++w)
                    if (alg.weyl_.mult(alg.weyl_.mult(w, si), alg.weyl_.inverse(w)) == sj)
                        throw InvalidInput("c values differ on W-conjugate simple reflections");
            }
        alg.standard_c_ = true;
        for (const auto &c : alg.c_)
            if (!c.is_real() || denominator(c.re()) != 1 || c.re() < 2)
                alg.standard_c_ = false;

        size_t rn = alg.weyl_.r_order();
        if (cocycle) {
            if (cocycle->group.n != rn)
                throw InvalidInput("cocycle table size does not match the R-group order");
            for (size_t i = 0; i < rn; ++i)
                for (size_t j = 0; j < rn; ++j)
                    if (cocycle->group.table[i][j] != alg.weyl_.r_mult(i, j))
                        throw InvalidInput("cocycle group table does not match the R-group law");
            std::string why;
            if (!cocycle->validate(&why))
                throw InvalidInput("invalid cocycle: " + why);
            alg.cocycle_ = std::move(*cocycle);
        } else {
            FiniteGroup rgroup;
            rgroup.n = rn;
            rgroup.table.assign(rn, std::vector<size_t>(rn));
            for (size_t i = 0; i < rn; ++i)
                for (size_t j = 0; j < rn; ++j)
                    rgroup.table[i][j] = alg.weyl_.r_mult(i, j);
            alg.cocycle_ = CocycleTable::trivial(std::move(rgroup));
        }
        alg.cocycle_q_.assign(rn * rn, GaussianRational(1));
        for (size_t i = 0; i < rn; ++i)
            for (size_t j = 0; j < rn; ++j) {
                auto g = alg.cocycle_.value(i, j).to_gaussian();
                if (!g)
                    throw FieldTooSmall("Hecke-level cocycle values must lie in Q(i)");
                alg.cocycle_q_[i * rn + j] = *g;
            }

        // substitution tables: ^w xi_k = sum_j (M_w^{-1})_{kj} xi_j
        size_t n = alg.datum_.rank;
        alg.subs_.resize(alg.weyl_.order());
        for (size_t w = 0; w < alg.weyl_.order(); ++w) {
            const QMatrix &minv = alg.weyl_.inverse_matrix(w);
            alg.subs_[w].assign(n, std::vector<GaussianRational>(n, GaussianRational(0)));
            for (size_t k = 0; k < n; ++k)
                for (size_t j = 0; j < n; ++j)
                    alg.subs_[w][k][j] = GaussianRational(minv(k, j));
        }
        // simple roots as linear polynomials
        for (size_t pos = 0; pos < s; ++pos) {
            GVec coeffs;
            for (const auto &q : alg.datum_.roots[alg.datum_.simple[pos]])
                coeffs.emplace_back(q);
            alg.alpha_.push_back(Poly::linear(coeffs));
        }
        return alg;
    }

    const RootDatum &datum() const { return datum_; }
    const WeylGroup &weyl() const { return weyl_; }
    const CocycleTable &cocycle() const { return cocycle_; }
    const std::vector<GaussianRational> &c_values() const { return c_; }
    bool has_standard_c() const { return standard_c_; }
    size_t rank() const { return datum_.rank; }

    const GaussianRational &cocycle_value(size_t r1, size_t r2) const
    {
        return cocycle_q_[r1 * weyl_.r_order() + r2];
    }

    const Poly &simple_root_poly(size_t pos) const { return alpha_[pos]; }

    // --- element constructors ---

    HeckeElement unit() const { return from_poly(Poly(rank(), GaussianRational(1))); }
    HeckeElement from_poly(const Poly &p) const
    {
        HeckeElement e;
        e.add(weyl_.identity(), p);
        return e;
    }
    HeckeElement group_element(size_t w) const
    {
        HeckeElement e;
        e.add(w, Poly(rank(), GaussianRational(1)));
        return e;
    }
    HeckeElement xi(size_t k) const { return from_poly(Poly::variable(rank(), k)); }
    HeckeElement r_element() const { return from_poly(Poly::r_var(rank())); }
    HeckeElement ns(size_t pos) const { return group_element(weyl_.simple_element(pos)); }
    HeckeElement ngamma(size_t r) const { return group_element(weyl_.ext_element(r)); }

    // --- polynomial-level operations ---

    Poly act(size_t w, const Poly &p) const
    {
        if (w == weyl_.identity())
            return p;
        return p.substitute_linear(subs_[w]);
    }

    /// Demazure operator (p - s_i p) / alpha_i for a simple position.
    Poly demazure(size_t pos, const Poly &p) const
    {
        Poly num = p - act(weyl_.simple_element(pos), p);
        try {
            return num.divide_by_linear(alpha_[pos]);
        } catch (const std::domain_error &e) {
            throw InternalDivisionFailure(e.what());
        }
    }

    /// p * N_v in normal form: map from group element to polynomial.
    std::map<size_t, Poly> poly_across(const Poly &p, size_t v) const
    {
        std::map<size_t, Poly> state;
        state[weyl_.identity()] = p;
        const auto &letters = weyl_.w0_word(weyl_.w0_part(v));
        for (size_t pos : letters) {
            std::map<size_t, Poly> next;
            size_t s_elt = weyl_.simple_element(pos);
            for (const auto &[u, f] : state) {
                // f N_s = N_s (^s f) + c r * Demazure(f)
                Poly sf = act(s_elt, f);
                size_t us = weyl_.mult(u, s_elt);
                auto it = next.find(us);
                if (it == next.end()) {
                    if (!sf.is_zero())
                        next[us] = sf;
                } else {
                    it->second += sf;
                    if (it->second.is_zero())
                        next.erase(it);
                }
                Poly df = demazure(pos, f);
                if (!df.is_zero()) {
                    df = (c_[pos] * df) * Poly::r_var(rank());
                    auto jt = next.find(u);
                    if (jt == next.end()) {
                        next[u] = df;
                    } else {
                        jt->second += df;
                        if (jt->second.is_zero())
                            next.erase(jt);
                    }
                }
            }
            state = std::move(next);
        }
        size_t r = weyl_.r_part(v);
        if (r != 0) {
            std::map<size_t, Poly> out;
            size_t relt = weyl_.ext_element(r);
            for (const auto &[u, f] : state) {
                // f N_gamma = N_gamma (^{gamma^{-1}} f); no correction terms
                Poly g = act(weyl_.inverse(relt), f);
                out[weyl_.mult(u, relt)] = std::move(g);
            }
            return out;
        }
        return state;
    }

    HeckeElement multiply(const HeckeElement &a, const HeckeElement &b) const
    {
        HeckeElement out;
        for (const auto &[w, p] : a.terms)
            for (const auto &[v, q] : b.terms) {
                auto across = poly_across(p, v);
                for (const auto &[x, px] : across) {
                    GaussianRational scalar = cocycle_value(weyl_.r_part(w), weyl_.r_part(x));
                    size_t y = weyl_.mult(w, x);
                    Poly prod = px * q;
                    if (!(scalar.is_one()))
                        prod = scalar * prod;
                    out.add(y, prod);
                }
            }
        return out;
    }

    /// The partner algebra over the inverse cocycle (target of *).
    HeckeAlgebra star_partner() const
    {
        HeckeAlgebra alg = *this;
        alg.cocycle_ = cocycle_.inverse();
        size_t rn = weyl_.r_order();
        for (size_t i = 0; i < rn; ++i)
            for (size_t j = 0; j < rn; ++j)
                alg.cocycle_q_[i * rn + j] = GaussianRational(1) / cocycle_q_[i * rn + j];
        return alg;
    }

    /// Anti-isomorphism onto the inverse-cocycle algebra: identity on
    /// polynomials, N_w -> (N_w)^{-1}.
    HeckeElement star(const HeckeElement &a) const
    {
        HeckeElement out;
        for (const auto &[w, p] : a.terms) {
            size_t winv = weyl_.inverse(w);
            // in the target algebra (N_w)^{-1} = cocycle(w, w^{-1}) N_{w^{-1}}
            GaussianRational scalar = cocycle_value(weyl_.r_part(w), weyl_.r_part(winv));
            for (const auto &[x, px] : poly_across(p, winv))
                out.add(x, scalar * px);
        }
        return out;
    }

    /// Iwahori-Matsumoto involution: N_w -> sign(w) N_w, xi -> -xi, r -> r.
    HeckeElement iwahori_matsumoto(const HeckeElement &a) const
    {
        HeckeElement out;
        for (const auto &[w, p] : a.terms) {
            Poly q = p.negate_xi();
            if (weyl_.sign(w) < 0)
                q = GaussianRational(-1) * q;
            out.add(w, q);
        }
        return out;
    }

    std::vector<HeckeElement> algebra_generators() const
    {
        std::vector<HeckeElement> gens;
        for (size_t pos = 0; pos < datum_.simple.size(); ++pos)
            gens.push_back(ns(pos));
        for (size_t r = 1; r < weyl_.r_order(); ++r)
            gens.push_back(ngamma(r));
        for (size_t k = 0; k < rank(); ++k)
            gens.push_back(xi(k));
        return gens;
    }

    bool is_central(const HeckeElement &a) const
    {
        for (const auto &g : algebra_generators())
            if (multiply(g, a) != multiply(a, g))
                return false;
        return true;
    }

    /// Basis of the degree-d W-invariant polynomials, via symmetrization.
    std::vector<Poly> invariant_polynomials(unsigned degree, unsigned degree_bound = 16) const
    {
        if (degree > degree_bound)
            throw BoundExceeded("invariant degree exceeds bound");
        // enumerate monomials of xi-degree exactly `degree`
        std::vector<Monomial> monos;
        Monomial cur{std::vector<unsigned>(rank(), 0), 0};
        enumerate_monomials(degree, 0, cur, monos);
        std::vector<Poly> sym;
        for (const auto &m : monos) {
            Poly p(rank());
            p.add_term(m, GaussianRational(1));
            Poly acc(rank());
            for (size_t w = 0; w < weyl_.order(); ++w)
                acc += act(w, p);
            if (!acc.is_zero())
                sym.push_back(acc);
        }
        // extract a canonical basis: coefficients matrix over monomials
        if (sym.empty())
            return {};
        std::vector<Monomial> cols = monos;
        GMatrix m(sym.size(), cols.size());
        for (size_t i = 0; i < sym.size(); ++i)
            for (const auto &[mono, coeff] : sym[i].terms()) {
                for (size_t j = 0; j < cols.size(); ++j)
                    if (cols[j] == mono) {
                        m(i, j) = coeff;
                        break;
                    }
            }
        auto pivots = m.rref();
        std::vector<Poly> basis;
        for (size_t rrow = 0; rrow < pivots.size(); ++rrow) {
            Poly p(rank());
            for (size_t j = 0; j < cols.size(); ++j)
                p.add_term(cols[j], m(rrow, j));
            basis.push_back(std::move(p));
        }
        return basis;
    }

private:
    RootDatum datum_;
    WeylGroup weyl_;
    std::vector<GaussianRational> c_;
    CocycleTable cocycle_;
    std::vector<GaussianRational> cocycle_q_;
    std::vector<std::vector<std::vector<GaussianRational>>> subs_;
    std::vector<Poly> alpha_;
    bool standard_c_ = true;

    void enumerate_monomials(unsigned remaining, size_t var, Monomial &cur,
                             std::vector<Monomial> &out) const
    {
        if (var == rank()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            cur.xi[var] = e;
            enumerate_monomials(remaining - e, var + 1, cur, out);
        }
        cur.xi[var] = 0;
    }
};

/// Standard parabolic subalgebra data: the subalgebra, the embedding of its
/// Weyl group into the ambient one, and coset bookkeeping for induction.
struct ParabolicEmbedding {
    HeckeAlgebra sub;
    std::vector<size_t> simple_map;     // sub simple position -> ambient simple position
    std::vector<size_t> element_map;    // sub W index -> ambient W index
    std::vector<size_t> coset_reps;     // ambient W indices, canonical minimal
    std::vector<size_t> coset_of;       // ambient W index -> position in coset_reps
    std::vector<size_t> sub_part;       // ambient W index -> sub W index with w = rep * sub

    HeckeElement embed(const HeckeElement &e) const
    {
        HeckeElement out;
        for (const auto &[w, p] : e.terms)
            out.add(element_map[w], p);
        return out;
    }
};

inline ParabolicEmbedding parabolic_subalgebra(const HeckeAlgebra &alg, const RootDatum &levi,
                                               bool include_r_stabilizer = true)
{
    const RootDatum &amb = alg.datum();
    if (levi.rank != amb.rank)
        throw LeviNotStandard("levi must live on the same torus");
    ParabolicEmbedding out;
    // levi simple roots must be ambient simple roots
    std::vector<GaussianRational> sub_c;
    for (size_t pos = 0; pos < levi.simple.size(); ++pos) {
        const QVec &alpha = levi.roots[levi.simple[pos]];
        bool found = false;
        for (size_t apos = 0; apos < amb.simple.size(); ++apos)
            if (amb.roots[amb.simple[apos]] == alpha) {
                out.simple_map.push_back(apos);
                sub_c.push_back(alg.c_values()[apos]);
                found = true;
                break;
            }
        if (!found)
            throw LeviNotStandard("levi simple root is not an ambient simple root");
    }
    // all levi roots must be ambient roots
    for (const auto &alpha : levi.roots)
        if (!amb.root_index(alpha))
            throw LeviNotStandard("levi root is not an ambient root");

    // R-elements stabilizing the levi root set
    RootDatum sub_datum = levi;
    std::vector<size_t> kept_r{0};
    if (include_r_stabilizer) {
        for (size_t r = 1; r < alg.weyl().r_order(); ++r) {
            QMatrix m = alg.weyl().matrix(alg.weyl().ext_element(r));
            bool stable = true;
            for (const auto &alpha : levi.roots)
                stable = stable && levi.root_index(amb.act_covector(m, alpha)).has_value();
            if (stable)
                kept_r.push_back(r);
        }
        sub_datum.ext.clear();
        for (size_t idx = 1; idx < kept_r.size(); ++idx)
            sub_datum.ext.push_back(alg.weyl().matrix(alg.weyl().ext_element(kept_r[idx])));
    } else {
        sub_datum.ext.clear();
    }
    sub_datum.complement = amb.complement;
    sub_datum.validate();

    // Enumerate the sub Weyl group once to learn its R-ordering, then build
    // the restricted cocycle in exactly that order.
    WeylGroup ws_probe = WeylGroup::build(sub_datum);
    const WeylGroup &wa = alg.weyl();
    std::vector<size_t> sub_to_amb_r(ws_probe.r_order());
    for (size_t rp = 0; rp < ws_probe.r_order(); ++rp) {
        QMatrix m = ws_probe.matrix(ws_probe.ext_element(rp));
        bool found = false;
        for (size_t r = 0; r < wa.r_order(); ++r)
            if (wa.matrix(wa.ext_element(r)) == m) {
                sub_to_amb_r[rp] = r;
                found = true;
                break;
            }
        if (!found)
            throw LeviNotStandard("R-stabilizer element not found in the ambient R-group");
    }
    CocycleTable sub_cocycle;
    sub_cocycle.field = alg.cocycle().field;
    sub_cocycle.group.n = ws_probe.r_order();
    sub_cocycle.group.table.assign(sub_cocycle.group.n, std::vector<size_t>(sub_cocycle.group.n));
    sub_cocycle.values.assign(sub_cocycle.group.n * sub_cocycle.group.n, Cyc(1));
    for (size_t i = 0; i < sub_cocycle.group.n; ++i)
        for (size_t j = 0; j < sub_cocycle.group.n; ++j) {
            sub_cocycle.group.table[i][j] = ws_probe.r_mult(i, j);
            sub_cocycle.value(i, j) = alg.cocycle().value(sub_to_amb_r[i], sub_to_amb_r[j]);
        }
    out.sub = HeckeAlgebra::build(sub_datum, sub_c, sub_cocycle);

    // embedding of W_sub into W_amb
    const WeylGroup &ws = out.sub.weyl();
    out.element_map.resize(ws.order());
    for (size_t a = 0; a < ws.order(); ++a) {
        size_t img = wa.identity();
        for (size_t pos : ws.w0_word(ws.w0_part(a)))
            img = wa.mult(img, wa.simple_element(out.simple_map[pos]));
        size_t rp = ws.r_part(a);
        img = wa.mult(img, wa.ext_element(sub_to_amb_r[rp]));
        out.element_map[a] = img;
    }
    // left cosets w (embedded W_sub): canonical representative = smallest index
    size_t N = wa.order();
    out.coset_of.assign(N, SIZE_MAX);
    out.sub_part.assign(N, 0);
    for (size_t w = 0; w < N; ++w) {
        if (out.coset_of[w] != SIZE_MAX)
            continue;
        size_t rep = w;
        size_t rep_pos = out.coset_reps.size();
        out.coset_reps.push_back(rep);
        for (size_t q = 0; q < ws.order(); ++q) {
            size_t elt = wa.mult(rep, out.element_map[q]);
            if (out.coset_of[elt] != SIZE_MAX)
                throw std::logic_error("coset decomposition collision");
            out.coset_of[elt] = rep_pos;
            out.sub_part[elt] = q;
        }
    }
    return out;
}

} // namespace hecke
