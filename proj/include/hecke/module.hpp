#pragma once

#include "hecke/hecke_algebra.hpp"
#include "hecke/roots.hpp"
#include "hecke/twisted_rep.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

/// Finite-dimensional module: matrices for every generator plus the scalar by
/// which the central variable r acts.
struct FinDimModule {
    std::shared_ptr<const HeckeAlgebra> alg;
    size_t dim = 0;
    std::vector<GMatrix> s_mats;  // per simple position
    std::vector<GMatrix> r_mats;  // per R-element (index 0 = identity matrix)
    std::vector<GMatrix> xi_mats; // per coordinate of t
    GaussianRational r_value;

    const HeckeAlgebra &algebra() const { return *alg; }

    /// Matrix of the basis element N_w (product along the canonical word).
    GMatrix group_action(size_t w) const
    {
        const WeylGroup &wg = alg->weyl();
        GMatrix m = GMatrix::identity(dim);
        for (size_t pos : wg.w0_word(wg.w0_part(w)))
            m = m * s_mats[pos];
        size_t r = wg.r_part(w);
        if (r != 0)
            m = m * r_mats[r];
        return m;
    }

    /// Matrix of an arbitrary normal-form element.
    GMatrix act(const HeckeElement &e) const
    {
        GMatrix total(dim, dim);
        for (const auto &[w, p] : e.terms)
            total = total + group_action(w) * p.eval_matrix(xi_mats, r_value, dim);
        return total;
    }

    /// Trace of N_w for every w: the restriction character to C[W, cocycle].
    std::vector<GaussianRational> group_character() const
    {
        std::vector<GaussianRational> chi;
        for (size_t w = 0; w < alg->weyl().order(); ++w)
            chi.push_back(group_action(w).trace());
        return chi;
    }
};

struct ModuleCheckReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Verifies every defining relation of the presentation as exact matrix
/// identities, with r replaced by the module's r_value.
inline ModuleCheckReport check_module(const FinDimModule &m)
{
    ModuleCheckReport rep;
    const HeckeAlgebra &alg = m.algebra();
    const WeylGroup &wg = alg.weyl();
    size_t s = alg.datum().simple.size();
    size_t rn = wg.r_order();
    size_t n = alg.rank();
    auto id = GMatrix::identity(m.dim);

    if (m.s_mats.size() != s || m.r_mats.size() != rn || m.xi_mats.size() != n) {
        rep.violations.push_back("generator matrix lists have wrong lengths");
        return rep;
    }
    for (const auto &mm : m.s_mats)
        if (mm.rows() != m.dim || mm.cols() != m.dim)
            rep.violations.push_back("simple-reflection matrix with wrong shape");
    for (const auto &mm : m.r_mats)
        if (mm.rows() != m.dim || mm.cols() != m.dim)
            rep.violations.push_back("R-generator matrix with wrong shape");
    for (const auto &mm : m.xi_mats)
        if (mm.rows() != m.dim || mm.cols() != m.dim)
            rep.violations.push_back("xi matrix with wrong shape");
    if (!rep.ok())
        return rep;
    if (!(m.r_mats[0] == id))
        rep.violations.push_back("R-identity must act as the identity");

    // Coxeter relations: (s_i s_j)^{m_ij} = e, including s_i^2 = e
    for (size_t i = 0; i < s; ++i)
        for (size_t j = i; j < s; ++j) {
            size_t si = wg.simple_element(i), sj = wg.simple_element(j);
            size_t prod = wg.mult(si, sj);
            size_t order = 1, acc = prod;
            while (acc != wg.identity()) {
                acc = wg.mult(acc, prod);
                ++order;
            }
            GMatrix mm = (m.s_mats[i] * m.s_mats[j]).pow(order);
            if (!(mm == id))
                rep.violations.push_back("Coxeter relation fails for (s" + std::to_string(i + 1) +
                                         ", s" + std::to_string(j + 1) + ")");
        }
    // twisted R-relations
    for (size_t a = 0; a < rn; ++a)
        for (size_t b = 0; b < rn; ++b) {
            GMatrix lhs = m.r_mats[a] * m.r_mats[b];
            GMatrix rhs = alg.cocycle_value(a, b) * m.r_mats[wg.r_mult(a, b)];
            if (!(lhs == rhs)) {
                rep.violations.push_back("cocycle relation fails for R-pair (" + std::to_string(a) +
                                         "," + std::to_string(b) + ")");
            }
        }
    // R conjugates simple reflections
    for (size_t r = 1; r < rn; ++r) {
        auto rinv = m.r_mats[r].inverse();
        if (!rinv) {
            rep.violations.push_back("R-generator not invertible");
            continue;
        }
        for (size_t i = 0; i < s; ++i) {
            GMatrix lhs = m.r_mats[r] * m.s_mats[i] * (*rinv);
            if (!(lhs == m.s_mats[wg.conj_simple(r, i)]))
                rep.violations.push_back("R-conjugation of s" + std::to_string(i + 1) + " fails");
        }
    }
    // commuting xi
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (!(m.xi_mats[a] * m.xi_mats[b] == m.xi_mats[b] * m.xi_mats[a]))
                rep.violations.push_back("xi matrices do not commute");

    auto eval_linear = [&](const std::vector<std::vector<GaussianRational>> &rows, size_t k) {
        GMatrix out(m.dim, m.dim);
        for (size_t j = 0; j < n; ++j)
            if (!rows[k][j].is_zero())
                out = out + rows[k][j] * m.xi_mats[j];
        return out;
    };
    // cross relation on degree-1 generators:
    // s_i xi - (s_i xi) s_i = c_i r <xi, alpha_i^vee>
    for (size_t i = 0; i < s; ++i) {
        size_t si = wg.simple_element(i);
        const QMatrix &minv = wg.inverse_matrix(si);
        std::vector<std::vector<GaussianRational>> rows(n, std::vector<GaussianRational>(n));
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j)
                rows[k][j] = GaussianRational(minv(k, j));
        const QVec &coroot = alg.datum().coroots[alg.datum().simple[i]];
        for (size_t k = 0; k < n; ++k) {
            GMatrix lhs = m.s_mats[i] * m.xi_mats[k] - eval_linear(rows, k) * m.s_mats[i];
            GaussianRational scalar = alg.c_values()[i] * m.r_value * GaussianRational(coroot[k]);
            GMatrix rhs = scalar * id;
            if (!(lhs == rhs))
                rep.violations.push_back("braid cross-relation fails for s" + std::to_string(i + 1) +
                                         " and xi" + std::to_string(k + 1));
        }
    }
    // R-letters twist xi without corrections
    for (size_t r = 1; r < rn; ++r) {
        size_t relt = wg.ext_element(r);
        const QMatrix &minv = wg.inverse_matrix(relt);
        std::vector<std::vector<GaussianRational>> rows(n, std::vector<GaussianRational>(n));
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j)
                rows[k][j] = GaussianRational(minv(k, j));
        auto rinv = m.r_mats[r].inverse();
        if (!rinv)
            continue;
        for (size_t k = 0; k < n; ++k) {
            GMatrix lhs = m.r_mats[r] * m.xi_mats[k] * (*rinv);
            if (!(lhs == eval_linear(rows, k)))
                rep.violations.push_back("R-twist of xi" + std::to_string(k + 1) + " fails");
        }
    }
    return rep;
}

/// Weight table: generalized weights with multiplicities.
struct WeightTable {
    std::vector<std::pair<GVec, size_t>> entries;

    size_t total_multiplicity() const
    {
        size_t t = 0;
        for (const auto &[x, mult] : entries)
            t += mult;
        return t;
    }
};

inline bool gvec_less(const GVec &a, const GVec &b)
{
    for (size_t k = 0; k < a.size(); ++k) {
        int c = cmp(a[k], b[k]);
        if (c != 0)
            return c < 0;
    }
    return false;
}

/// Simultaneous generalized eigendecomposition of the commuting xi matrices.
inline WeightTable weights(const FinDimModule &m)
{
    size_t n = m.algebra().rank();
    using Space = std::pair<std::vector<std::vector<GaussianRational>>, GVec>;
    std::vector<Space> spaces;
    {
        std::vector<std::vector<GaussianRational>> full;
        for (size_t i = 0; i < m.dim; ++i) {
            std::vector<GaussianRational> e(m.dim, GaussianRational(0));
            e[i] = GaussianRational(1);
            full.push_back(std::move(e));
        }
        spaces.push_back({full, {}});
    }
    for (size_t k = 0; k < n; ++k) {
        std::vector<Space> next;
        for (auto &[basis, partial] : spaces) {
            GMatrix op = restrict_operator(m.xi_mats[k], basis);
            bool complete = false;
            auto roots = gaussian_roots_with_multiplicity(op.charpoly(), &complete);
            if (!complete)
                throw IrrationalWeights("characteristic polynomial of xi" + std::to_string(k + 1) +
                                        " does not split over Q(i)");
            for (const auto &[lambda, mult] : roots) {
                GMatrix shifted = op;
                for (size_t i = 0; i < shifted.rows(); ++i)
                    shifted(i, i) -= lambda;
                auto ker = shifted.pow(basis.size()).kernel();
                if (ker.empty())
                    continue;
                std::vector<std::vector<GaussianRational>> sub;
                for (const auto &coef : ker) {
                    std::vector<GaussianRational> v(basis[0].size(), GaussianRational(0));
                    for (size_t c = 0; c < basis.size(); ++c)
                        if (!coef[c].is_zero())
                            for (size_t j = 0; j < v.size(); ++j)
                                v[j] += coef[c] * basis[c][j];
                    sub.push_back(std::move(v));
                }
                GVec ext = partial;
                ext.push_back(lambda);
                next.push_back({echelon_span(sub), std::move(ext)});
            }
        }
        spaces = std::move(next);
    }
    WeightTable table;
    for (const auto &[basis, weight] : spaces)
        if (!basis.empty())
            table.entries.push_back({weight, basis.size()});
    std::sort(table.entries.begin(), table.entries.end(),
              [](const auto &a, const auto &b) { return gvec_less(a.first, b.first); });
    if (table.total_multiplicity() != m.dim)
        throw IrrationalWeights("weight multiplicities do not add up to the dimension");
    return table;
}

/// Central character: the W-orbit of any weight plus the value of r, when the
/// invariant generators act by scalars.
struct CentralCharacter {
    bool decisive = false;
    GVec orbit_rep;          // lexicographically minimal orbit element
    GaussianRational r_value;
    std::string reason;      // set when indecisive
};

inline GVec orbit_min(const WeylGroup &wg, const GVec &x)
{
    GVec best = x;
    for (size_t w = 0; w < wg.order(); ++w) {
        GVec y = wg.act(w, x);
        if (gvec_less(y, best))
            best = y;
    }
    return best;
}

inline CentralCharacter central_character(const FinDimModule &m, unsigned max_degree = 6)
{
    CentralCharacter out;
    out.r_value = m.r_value;
    const HeckeAlgebra &alg = m.algebra();
    for (unsigned d = 1; d <= max_degree; ++d)
        for (const auto &p : alg.invariant_polynomials(d)) {
            GMatrix v = p.eval_matrix(m.xi_mats, m.r_value, m.dim);
            if (!v.is_scalar()) {
                out.reason = "invariant of degree " + std::to_string(d) + " acts non-scalarly";
                return out;
            }
        }
    WeightTable wt;
    try {
        wt = weights(m);
    } catch (const IrrationalWeights &e) {
        out.reason = e.what();
        return out;
    }
    if (wt.entries.empty()) {
        out.reason = "module has no weights";
        return out;
    }
    // all weights must lie in a single W-orbit for the orbit to be well-defined
    GVec rep = orbit_min(alg.weyl(), wt.entries[0].first);
    for (const auto &[x, mult] : wt.entries)
        if (orbit_min(alg.weyl(), x) != rep) {
            out.reason = "weights span several W-orbits";
            return out;
        }
    out.decisive = true;
    out.orbit_rep = rep;
    return out;
}

struct ClassifyFlags {
    bool tempered = false;
    bool anti_tempered = false;
    bool discrete = false;
    bool anti_discrete = false;
    bool essentially_discrete = false;
    bool essentially_anti_discrete = false;
};

namespace detail {

struct ConeCoords {
    QVec simple;     // coefficients on the simple coroots
    QVec complement; // coefficients on the declared central complement
};

inline ConeCoords cone_coords(const RootDatum &datum, const QVec &re)
{
    size_t s = datum.simple.size();
    size_t c = datum.complement.size();
    QMatrix sys(datum.rank, s + c);
    for (size_t j = 0; j < s; ++j)
        for (size_t i = 0; i < datum.rank; ++i)
            sys(i, j) = datum.coroots[datum.simple[j]][i];
    for (size_t j = 0; j < c; ++j)
        for (size_t i = 0; i < datum.rank; ++i)
            sys(i, s + j) = datum.complement[j][i];
    auto sol = sys.solve(re);
    if (sol) {
        QVec check(datum.rank, Rational(0));
        for (size_t j = 0; j < s + c; ++j)
            for (size_t i = 0; i < datum.rank; ++i)
                check[i] += (*sol)[j] * sys(i, j);
        if (check != re)
            sol.reset();
    }
    if (!sol)
        throw NotInSpan("weight outside coroot span plus declared complement");
    ConeCoords out;
    out.simple.assign(sol->begin(), sol->begin() + s);
    out.complement.assign(sol->begin() + s, sol->end());
    return out;
}

} // namespace detail

/// Tempered/discrete predicates on the real parts of the weights; the
/// essentially-discrete variants test the restriction to the coroot span.
inline ClassifyFlags classify(const FinDimModule &m)
{
    const RootDatum &datum = m.algebra().datum();
    WeightTable wt = weights(m);
    bool spans = datum.coroots_span_t();
    ClassifyFlags f;
    f.tempered = f.anti_tempered = true;
    f.discrete = f.anti_discrete = spans;
    f.essentially_discrete = f.essentially_anti_discrete = true;
    for (const auto &[x, mult] : wt.entries) {
        auto coords = detail::cone_coords(datum, real_part(x));
        bool complement_zero = true;
        for (const auto &v : coords.complement)
            complement_zero = complement_zero && v == 0;
        bool all_nonpos = true, all_neg = true, all_nonneg = true, all_pos = true;
        for (const auto &v : coords.simple) {
            all_nonpos = all_nonpos && v <= 0;
            all_neg = all_neg && v < 0;
            all_nonneg = all_nonneg && v >= 0;
            all_pos = all_pos && v > 0;
        }
        f.tempered = f.tempered && all_nonpos && complement_zero;
        f.anti_tempered = f.anti_tempered && all_nonneg && complement_zero;
        f.discrete = f.discrete && all_neg && complement_zero;
        f.anti_discrete = f.anti_discrete && all_pos && complement_zero;
        f.essentially_discrete = f.essentially_discrete && all_neg;
        f.essentially_anti_discrete = f.essentially_anti_discrete && all_pos;
    }
    return f;
}

/// Pullback along the Iwahori-Matsumoto involution: weights negate, the
/// tempered and discrete flags trade places with their anti-variants.
inline FinDimModule im_pullback(const FinDimModule &m)
{
    FinDimModule out = m;
    for (auto &mm : out.s_mats)
        mm = -mm;
    for (auto &mm : out.xi_mats)
        mm = -mm;
    return out;
}

/// H ⊗_{H_Q} V on the basis {N_w ⊗ v} over canonical coset representatives.
inline FinDimModule induce_module(const HeckeAlgebra &alg, const ParabolicEmbedding &emb,
                                  const FinDimModule &sub_module)
{
    const WeylGroup &wg = alg.weyl();
    const WeylGroup &ws = emb.sub.weyl();
    size_t blocks = emb.coset_reps.size();
    size_t d = sub_module.dim;
    FinDimModule out;
    out.alg = std::make_shared<const HeckeAlgebra>(alg);
    out.dim = blocks * d;
    out.r_value = sub_module.r_value;

    auto sub_act = [&](size_t q, const Poly &p) {
        // action of N_q * p on the submodule (q a sub W index)
        GMatrix mat = sub_module.group_action(q);
        return mat * p.eval_matrix(sub_module.xi_mats, sub_module.r_value, d);
    };

    auto generator_matrix = [&](const HeckeElement &gen) {
        GMatrix big(out.dim, out.dim);
        for (size_t bi = 0; bi < blocks; ++bi) {
            HeckeElement prod = alg.multiply(gen, alg.group_element(emb.coset_reps[bi]));
            for (const auto &[y, p] : prod.terms) {
                size_t bj = emb.coset_of[y];
                size_t q = emb.sub_part[y];
                // N_y = scalar^{-1} N_rep N_q' with scalar = cocycle(rep, q')
                size_t rep = emb.coset_reps[bj];
                size_t qa = emb.element_map[q];
                GaussianRational scalar =
                    alg.cocycle_value(wg.r_part(rep), wg.r_part(qa));
                GMatrix block = (GaussianRational(1) / scalar) * sub_act(q, p);
                for (size_t r2 = 0; r2 < d; ++r2)
                    for (size_t c2 = 0; c2 < d; ++c2)
                        big(bj * d + r2, bi * d + c2) += block(r2, c2);
            }
        }
        return big;
    };

    for (size_t pos = 0; pos < alg.datum().simple.size(); ++pos)
        out.s_mats.push_back(generator_matrix(alg.ns(pos)));
    for (size_t r = 0; r < wg.r_order(); ++r)
        out.r_mats.push_back(r == 0 ? GMatrix::identity(out.dim)
                                    : generator_matrix(alg.ngamma(r)));
    for (size_t k = 0; k < alg.rank(); ++k)
        out.xi_mats.push_back(generator_matrix(alg.xi(k)));
    return out;
}

// ---------------------------------------------------------------------------
// The r = 0 construction and the twisted extended quotient.
// ---------------------------------------------------------------------------

/// Isotropy group of a point, its pulled-back cocycle, and element labels.
struct IsotropyData {
    std::vector<size_t> elements; // ambient W indices, ascending (identity first)
    CocycleTable table;           // local group with the restricted cocycle
};

inline IsotropyData isotropy_data(const HeckeAlgebra &alg, const GVec &x)
{
    const WeylGroup &wg = alg.weyl();
    IsotropyData out;
    for (size_t w = 0; w < wg.order(); ++w)
        if (wg.act(w, x) == x)
            out.elements.push_back(w);
    size_t h = out.elements.size();
    std::map<size_t, size_t> local;
    for (size_t i = 0; i < h; ++i)
        local[out.elements[i]] = i;
    out.table.field = alg.cocycle().field;
    out.table.group.n = h;
    out.table.group.table.assign(h, std::vector<size_t>(h));
    out.table.values.assign(h * h, Cyc(1));
    for (size_t i = 0; i < h; ++i)
        for (size_t j = 0; j < h; ++j) {
            size_t prod = wg.mult(out.elements[i], out.elements[j]);
            auto it = local.find(prod);
            if (it == local.end())
                throw std::logic_error("isotropy set not closed");
            out.table.group.table[i][j] = it->second;
            out.table.value(i, j) =
                alg.cocycle().value(wg.r_part(out.elements[i]), wg.r_part(out.elements[j]));
        }
    return out;
}

/// Induced module C_{sigma0} ⊗ V_pi from (W)_{sigma0} ⋉ S(t*) at r = 0.
/// pi must be a twisted representation for the isotropy cocycle of sigma0.
inline FinDimModule build_irr_r0(const HeckeAlgebra &alg, const GVec &sigma0,
                                 const IsotropyData &iso, const TwistedRep &pi)
{
    const WeylGroup &wg = alg.weyl();
    if (pi.table.group.table != iso.table.group.table)
        throw StabilizerMismatch("pi is not a representation of the isotropy group of sigma0");
    for (size_t i = 0; i < iso.table.group.n; ++i)
        for (size_t j = 0; j < iso.table.group.n; ++j)
            if (!(pi.table.value(i, j) == iso.table.value(i, j)))
                throw StabilizerMismatch("pi's cocycle differs from the restricted cocycle");

    // convert pi's matrices to Q(i)
    std::vector<GMatrix> pi_mats;
    for (const auto &mm : pi.mats) {
        GMatrix g(pi.dim, pi.dim);
        for (size_t i = 0; i < pi.dim; ++i)
            for (size_t j = 0; j < pi.dim; ++j) {
                auto v = mm(i, j).to_gaussian();
                if (!v)
                    throw FieldTooSmall("pi has entries outside Q(i)");
                g(i, j) = *v;
            }
        pi_mats.push_back(std::move(g));
    }

    std::map<size_t, size_t> local;
    for (size_t i = 0; i < iso.elements.size(); ++i)
        local[iso.elements[i]] = i;

    // left cosets w (W)_x with canonical minimal representatives
    std::vector<size_t> reps;
    std::vector<size_t> coset_of(wg.order(), SIZE_MAX), part_of(wg.order(), 0);
    for (size_t w = 0; w < wg.order(); ++w) {
        if (coset_of[w] != SIZE_MAX)
            continue;
        size_t idx = reps.size();
        reps.push_back(w);
        for (size_t i = 0; i < iso.elements.size(); ++i) {
            size_t elt = wg.mult(w, iso.elements[i]);
            coset_of[elt] = idx;
            part_of[elt] = i;
        }
    }
    size_t blocks = reps.size();
    size_t d = pi.dim;

    FinDimModule out;
    out.alg = std::make_shared<const HeckeAlgebra>(alg);
    out.dim = blocks * d;
    out.r_value = GaussianRational(0);

    auto gen_matrix = [&](size_t g) {
        GMatrix big(out.dim, out.dim);
        for (size_t bi = 0; bi < blocks; ++bi) {
            size_t target = wg.mult(g, reps[bi]);
            size_t bj = coset_of[target];
            size_t h = part_of[target]; // local index in the isotropy group
            // N_g N_rep = cocycle(g, rep) N_{g rep};
            // N_{g rep} = cocycle(rep', h)^{-1} N_{rep'} N_h
            GaussianRational scalar =
                alg.cocycle_value(wg.r_part(g), wg.r_part(reps[bi]));
            GaussianRational denom =
                alg.cocycle_value(wg.r_part(reps[bj]), wg.r_part(iso.elements[h]));
            GMatrix block = (scalar / denom) * pi_mats[h];
            for (size_t r2 = 0; r2 < d; ++r2)
                for (size_t c2 = 0; c2 < d; ++c2)
                    big(bj * d + r2, bi * d + c2) += block(r2, c2);
        }
        return big;
    };

    for (size_t pos = 0; pos < alg.datum().simple.size(); ++pos)
        out.s_mats.push_back(gen_matrix(wg.simple_element(pos)));
    for (size_t r = 0; r < wg.r_order(); ++r)
        out.r_mats.push_back(r == 0 ? GMatrix::identity(out.dim) : gen_matrix(wg.ext_element(r)));
    for (size_t k = 0; k < alg.rank(); ++k) {
        GMatrix big(out.dim, out.dim);
        for (size_t bi = 0; bi < blocks; ++bi) {
            GVec w_sigma = wg.act(reps[bi], sigma0);
            for (size_t a = 0; a < d; ++a)
                big(bi * d + a, bi * d + a) = w_sigma[k];
        }
        out.xi_mats.push_back(big);
    }
    return out;
}

/// Commutant dimension of the module (1 = irreducible for semisimple input).
inline size_t commutant_dimension(const FinDimModule &m)
{
    std::vector<GMatrix> gens;
    for (const auto &g : m.s_mats)
        gens.push_back(g);
    for (size_t r = 1; r < m.r_mats.size(); ++r)
        gens.push_back(m.r_mats[r]);
    for (const auto &g : m.xi_mats)
        gens.push_back(g);
    size_t d = m.dim;
    if (gens.empty())
        return d * d;
    GMatrix sys(gens.size() * d * d, d * d);
    size_t row = 0;
    for (const auto &g : gens)
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j, ++row)
                for (size_t k = 0; k < d; ++k) {
                    sys(row, i * d + k) += g(k, j);
                    sys(row, k * d + j) -= g(i, k);
                }
    return sys.kernel().size();
}

/// Exact isomorphism test; complete for modules with commutant dimension 1.
inline bool modules_isomorphic(const FinDimModule &a, const FinDimModule &b)
{
    if (a.dim != b.dim || !(a.r_value == b.r_value))
        return false;
    if (a.group_character() != b.group_character())
        return false;
    try {
        WeightTable wa = weights(a), wb = weights(b);
        if (wa.entries.size() != wb.entries.size())
            return false;
        for (size_t k = 0; k < wa.entries.size(); ++k)
            if (wa.entries[k].first != wb.entries[k].first ||
                wa.entries[k].second != wb.entries[k].second)
                return false;
    } catch (const IrrationalWeights &) {
        // fall through to the intertwiner solve
    }
    std::vector<GMatrix> ga, gb;
    auto collect = [](const FinDimModule &m, std::vector<GMatrix> &out) {
        for (const auto &g : m.s_mats)
            out.push_back(g);
        for (size_t r = 1; r < m.r_mats.size(); ++r)
            out.push_back(m.r_mats[r]);
        for (const auto &g : m.xi_mats)
            out.push_back(g);
    };
    collect(a, ga);
    collect(b, gb);
    size_t d = a.dim;
    GMatrix sys(ga.size() * d * d, d * d);
    size_t row = 0;
    for (size_t t = 0; t < ga.size(); ++t)
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j, ++row) {
                for (size_t k = 0; k < d; ++k)
                    sys(row, i * d + k) += ga[t](k, j);
                for (size_t k = 0; k < d; ++k)
                    sys(row, k * d + j) -= gb[t](i, k);
            }
    auto ker = sys.kernel();
    std::vector<GMatrix> cands;
    for (const auto &v : ker) {
        GMatrix x(d, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
                x(i, j) = v[i * d + j];
        cands.push_back(std::move(x));
    }
    size_t base = cands.size();
    for (size_t i = 0; i < base; ++i)
        for (size_t j = i + 1; j < base; ++j)
            cands.push_back(cands[i] + cands[j]);
    for (const auto &x : cands)
        if (x.inverse())
            return true;
    return false;
}

/// One point of the twisted extended quotient: orbit representative, isotropy
/// group, and the projective irreducibles of its twisted algebra.
struct ExtQuotPoint {
    GVec base_point;                  // lexicographically minimal orbit element
    std::vector<size_t> isotropy;     // ambient W indices
    size_t fiber_size = 0;
    std::vector<TwistedRep> fiber;    // irreducibles of C[(W)_x, cocycle]
};

inline std::vector<ExtQuotPoint> extended_quotient(const HeckeAlgebra &alg,
                                                   const std::vector<GVec> &points,
                                                   size_t group_bound = 64)
{
    std::vector<ExtQuotPoint> out;
    std::vector<GVec> seen;
    for (const auto &x : points) {
        GVec rep = orbit_min(alg.weyl(), x);
        bool dup = false;
        for (const auto &s : seen)
            dup = dup || (s == rep);
        if (dup)
            continue;
        seen.push_back(rep);
        ExtQuotPoint pt;
        pt.base_point = rep;
        IsotropyData iso = isotropy_data(alg, rep);
        pt.isotropy = iso.elements;
        pt.fiber = irreducible_reps(iso.table, group_bound);
        pt.fiber_size = pt.fiber.size();
        out.push_back(std::move(pt));
    }
    std::sort(out.begin(), out.end(),
              [](const ExtQuotPoint &a, const ExtQuotPoint &b) { return gvec_less(a.base_point, b.base_point); });
    return out;
}

/// Langlands recipe: Levi from the real part of the leading weight, strict
/// negativity certificate on the complement roots, and the twisted central
/// character data.
struct LanglandsData {
    GVec leading_weight;
    RootDatum levi;
    std::vector<QVec> complement_roots; // roots of R_u(P Q°)
    GaussianRational r_value;
    CentralCharacter central;           // of the module, when supplied
    GVec im_twisted_rep;                // negated orbit representative
};

inline LanglandsData langlands_data(const HeckeAlgebra &alg, const WeightTable &wt,
                                    const GaussianRational &r_value)
{
    if (wt.entries.empty())
        throw InvalidInput("empty weight table");
    const RootDatum &datum = alg.datum();
    // leading weight: minimal real part in dominance order, lexicographic ties
    auto dominated = [&](const QVec &x, const QVec &y) {
        // x <= y iff y - x is a nonnegative combination of simple coroots
        QVec diff(datum.rank);
        for (size_t i = 0; i < datum.rank; ++i)
            diff[i] = y[i] - x[i];
        try {
            auto coords = detail::cone_coords(datum, diff);
            for (const auto &v : coords.complement)
                if (v != 0)
                    return false;
            for (const auto &v : coords.simple)
                if (v < 0)
                    return false;
            return true;
        } catch (const NotInSpan &) {
            return false;
        }
    };
    std::vector<GVec> cands;
    for (const auto &[x, mult] : wt.entries)
        cands.push_back(x);
    std::vector<GVec> minimal;
    for (const auto &x : cands) {
        bool is_min = true;
        QVec rx = real_part(x);
        for (const auto &y : cands) {
            QVec ry = real_part(y);
            if (ry != rx && dominated(ry, rx))
                is_min = false;
        }
        if (is_min)
            minimal.push_back(x);
    }
    GVec leading = minimal[0];
    for (const auto &x : minimal)
        if (gvec_less(x, leading))
            leading = x;
    LanglandsData out;
    out.leading_weight = leading;
    out.r_value = r_value;
    GVec re_sigma0;
    for (const auto &z : leading)
        re_sigma0.emplace_back(z.re());
    out.levi = levi_subsystem(datum, re_sigma0, true);
    for (size_t k : datum.positive_roots()) {
        if (out.levi.root_index(datum.roots[k]))
            continue;
        out.complement_roots.push_back(datum.roots[k]);
        Rational v = pair(datum.roots[k], re_sigma0).re();
        if (v > 0) {
            std::string root_str;
            for (const auto &q : datum.roots[k])
                root_str += (root_str.empty() ? "" : ",") + to_string(q);
            throw PositivityFailure("Re(sigma0) is not negative on the complement root [" +
                                    root_str + "]");
        }
        if (v == 0)
            throw std::logic_error("complement root vanishing on Re(sigma0)");
    }
    GVec orbit = orbit_min(alg.weyl(), leading);
    GVec negated;
    for (const auto &z : orbit)
        negated.push_back(-z);
    out.im_twisted_rep = orbit_min(alg.weyl(), negated);
    return out;
}

} // namespace hecke
