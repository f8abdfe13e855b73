#pragma once

#include "hecke/cocycle.hpp"
#include "hecke/cyclotomic.hpp"
#include "hecke/errors.hpp"
#include "hecke/matrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

using CMatrix = Matrix<Cyc>;

/// Projective representation: pi(g)pi(h) = cocycle(g,h) pi(gh).
struct TwistedRep {
    CocycleTable table;
    size_t dim = 0;
    std::vector<CMatrix> mats; // one matrix per group element

    bool validate(std::string *reason = nullptr) const
    {
        size_t n = table.group.n;
        if (mats.size() != n) {
            if (reason)
                *reason = "wrong number of matrices";
            return false;
        }
        if (!(mats[0] == CMatrix::identity(dim))) {
            if (reason)
                *reason = "identity does not act as the identity matrix";
            return false;
        }
        for (size_t g = 0; g < n; ++g)
            for (size_t h = 0; h < n; ++h) {
                CMatrix lhs = mats[g] * mats[h];
                CMatrix rhs = table.value(g, h) * mats[table.group.mult(g, h)];
                if (!(lhs == rhs)) {
                    if (reason)
                        *reason = "projective relation fails at (" + std::to_string(g) + "," +
                                  std::to_string(h) + ")";
                    return false;
                }
            }
        return true;
    }

    std::vector<Cyc> character() const
    {
        std::vector<Cyc> chi;
        chi.reserve(mats.size());
        for (const auto &m : mats)
            chi.push_back(m.trace());
        return chi;
    }

    /// Dimension of the commutant End(pi).
    size_t commutant_dimension() const
    {
        auto gens = table.group.generators();
        if (gens.empty())
            return dim * dim;
        size_t d = dim;
        Matrix<Cyc> sys(gens.size() * d * d, d * d);
        size_t row = 0;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const CMatrix &m = mats[gens[gi]];
            // X m - m X = 0
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j, ++row)
                    for (size_t k = 0; k < d; ++k) {
                        sys(row, i * d + k) += m(k, j);
                        sys(row, k * d + j) -= m(i, k);
                    }
        }
        return sys.kernel().size();
    }
};

/// Intertwiner space Hom(a, b) = {X : X a(g) = b(g) X}; both over the same table.
inline std::vector<CMatrix> intertwiners(const TwistedRep &a, const TwistedRep &b)
{
    auto gens = a.table.group.generators();
    size_t da = a.dim, db = b.dim;
    if (gens.empty()) {
        std::vector<CMatrix> all;
        for (size_t i = 0; i < db; ++i)
            for (size_t j = 0; j < da; ++j) {
                CMatrix e(db, da);
                e(i, j) = Cyc(1);
                all.push_back(e);
            }
        return all;
    }
    Matrix<Cyc> sys(gens.size() * db * da, db * da);
    size_t row = 0;
    for (size_t g : gens) {
        const CMatrix &ma = a.mats[g];
        const CMatrix &mb = b.mats[g];
        // X ma - mb X = 0,  X is db x da
        for (size_t i = 0; i < db; ++i)
            for (size_t j = 0; j < da; ++j, ++row) {
                for (size_t k = 0; k < da; ++k)
                    sys(row, i * da + k) += ma(k, j);
                for (size_t k = 0; k < db; ++k)
                    sys(row, k * da + j) -= mb(i, k);
            }
    }
    std::vector<CMatrix> out;
    for (const auto &v : sys.kernel()) {
        CMatrix x(db, da);
        for (size_t i = 0; i < db; ++i)
            for (size_t j = 0; j < da; ++j)
                x(i, j) = v[i * da + j];
        out.push_back(std::move(x));
    }
    return out;
}

inline bool isomorphic(const TwistedRep &a, const TwistedRep &b)
{
    if (a.dim != b.dim)
        return false;
    if (a.character() != b.character())
        return false;
    for (const auto &x : intertwiners(a, b))
        if (x.inverse())
            return true;
    return false;
}

/// tau^*(N_g) lambda = lambda ∘ tau(N_g^{-1}); a representation over the
/// inverse cocycle.
inline TwistedRep dual_rep(const CocycleTable &table, const TwistedRep &rep)
{
    TwistedRep out;
    out.table = table.inverse();
    out.dim = rep.dim;
    out.mats.resize(rep.mats.size());
    for (size_t g = 0; g < table.group.n; ++g) {
        size_t ginv = table.group.inverse(g);
        // N_g^{-1} = value(g, g^{-1})^{-1} N_{g^{-1}} in C[Gamma, cocycle]
        Cyc scale = Cyc(1) / table.value(g, ginv);
        out.mats[g] = (scale * rep.mats[ginv]).transpose();
    }
    return out;
}

namespace detail {

/// Submodule of the regular module, rows echelonized in K^n coordinates.
struct Piece {
    std::vector<std::vector<Cyc>> basis;
    size_t dim() const { return basis.size(); }
};

inline std::vector<Cyc> mat_apply(const CMatrix &m, const std::vector<Cyc> &v)
{
    return m.apply(v);
}

/// Positive rational k-th root, if one exists.
inline std::optional<Rational> rational_kth_root(const Rational &q, size_t k)
{
    if (q <= 0)
        return std::nullopt;
    auto int_root = [](const Int &v, size_t k) -> std::optional<Int> {
        if (v == 1)
            return Int(1);
        Int lo = 1, hi = v;
        while (lo <= hi) {
            Int mid = (lo + hi) / 2;
            Int p = 1;
            for (size_t i = 0; i < k; ++i)
                p *= mid;
            if (p == v)
                return mid;
            if (p < v)
                lo = mid + 1;
            else
                hi = mid - 1;
        }
        return std::nullopt;
    };
    auto num = int_root(numerator(q), k);
    auto den = int_root(denominator(q), k);
    if (!num || !den)
        return std::nullopt;
    return Rational(*num, *den);
}

} // namespace detail

/// Complete list of pairwise non-isomorphic irreducibles of C[Gamma, cocycle]
/// over Q(zeta_m). Splitting uses exact generalized eigenspaces; when an
/// eigenvalue lies outside the candidate family Q(i)·mu_m the configured field
/// cannot be verified adequate and FieldTooSmall is raised.
inline std::vector<TwistedRep> irreducible_reps(const CocycleTable &table, size_t bound = 64)
{
    std::string reason;
    if (!table.validate(&reason))
        throw InvalidInput("invalid cocycle table: " + reason);
    size_t n = table.group.n;
    if (n > bound)
        throw BoundExceeded("group order " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    const CycFieldPtr &field = table.field;

    // left and right regular actions
    std::vector<CMatrix> lmats(n, CMatrix(n, n)), rmats(n, CMatrix(n, n));
    for (size_t g = 0; g < n; ++g)
        for (size_t h = 0; h < n; ++h) {
            lmats[g](table.group.mult(g, h), h) += table.value(g, h);
            rmats[g](table.group.mult(h, g), h) += table.value(h, g);
        }
    auto gens = table.group.generators();

    std::vector<detail::Piece> done, queue;
    {
        detail::Piece full;
        for (size_t i = 0; i < n; ++i) {
            std::vector<Cyc> e(n, Cyc(0));
            e[i] = Cyc(1);
            full.basis.push_back(std::move(e));
        }
        queue.push_back(std::move(full));
    }

    // eigenvalue candidates of the right multiplication by N_g:
    // xi^k = c where N_g^k = c N_e
    auto right_candidates = [&](size_t g) {
        std::vector<Cyc> cands;
        size_t k = table.group.order_of(g);
        Cyc c(1);
        size_t acc = g;
        for (size_t j = 1; j < k; ++j) {
            c *= table.value(acc, g);
            acc = table.group.mult(acc, g);
        }
        for (unsigned j = 0; j < field->m; ++j) {
            Cyc u = Cyc::zeta(field, j);
            // pure root of unity candidates
            Cyc p(1);
            for (size_t i = 0; i < k; ++i)
                p *= u;
            if (p == c) {
                cands.push_back(u);
                continue;
            }
            // scaled: c / u^k rational and a k-th power
            Cyc ratio = c / p;
            if (ratio.is_rational()) {
                auto rad = detail::rational_kth_root(ratio.rational_value(), k);
                if (rad)
                    cands.push_back(Cyc(*rad) * u);
            }
        }
        // dedupe
        std::vector<Cyc> out;
        for (const auto &c2 : cands) {
            bool seen = false;
            for (const auto &o : out)
                seen = seen || (o == c2);
            if (!seen)
                out.push_back(c2);
        }
        return out;
    };

    auto process = [&](detail::Piece piece, auto &&self) -> void {
        size_t d = piece.dim();
        if (d == 0)
            return;
        // Pass A: refine through generalized eigenspaces of right multiplications
        for (size_t g = 1; g < n; ++g) {
            auto cands = right_candidates(g);
            // build (R_g - xi)^n restricted to the piece's span: rows are images
            std::vector<detail::Piece> parts;
            size_t total = 0;
            for (const auto &xi : cands) {
                // R_g has finite order up to a scalar, hence is diagonalizable:
                // plain kernels give the full eigenspace decomposition.
                CMatrix shifted = rmats[g];
                for (size_t i = 0; i < n; ++i)
                    shifted(i, i) -= xi;
                CMatrix sys(n, d);
                for (size_t c = 0; c < d; ++c) {
                    auto img = detail::mat_apply(shifted, piece.basis[c]);
                    for (size_t r2 = 0; r2 < n; ++r2)
                        sys(r2, c) = img[r2];
                }
                auto ker = sys.kernel();
                if (ker.empty())
                    continue;
                detail::Piece part;
                for (const auto &coef : ker) {
                    std::vector<Cyc> v(n, Cyc(0));
                    for (size_t c = 0; c < d; ++c)
                        if (!(coef[c] == Cyc(0)))
                            for (size_t j = 0; j < n; ++j)
                                v[j] += coef[c] * piece.basis[c][j];
                    part.basis.push_back(std::move(v));
                }
                part.basis = echelon_span(part.basis);
                total += part.dim();
                parts.push_back(std::move(part));
            }
            if (total == d && parts.size() >= 2) {
                for (auto &p : parts)
                    self(std::move(p), self);
                return;
            }
        }
        // Pass B: endomorphism-algebra splitting
        std::vector<CMatrix> restricted;
        for (size_t g : gens)
            restricted.push_back(restrict_operator(lmats[g], piece.basis));
        // solve for the commutant of the restricted generators
        size_t rows = std::max<size_t>(1, restricted.size()) * d * d;
        CMatrix sys(rows, d * d);
        size_t row = 0;
        for (const auto &m : restricted) {
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j, ++row)
                    for (size_t k = 0; k < d; ++k) {
                        sys(row, i * d + k) += m(k, j);
                        sys(row, k * d + j) -= m(i, k);
                    }
        }
        auto endo = sys.kernel();
        if (endo.size() <= 1) {
            done.push_back(std::move(piece));
            return;
        }
        // try endomorphism basis elements plus pairwise sums
        std::vector<CMatrix> trials;
        for (const auto &v : endo) {
            CMatrix e(d, d);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    e(i, j) = v[i * d + j];
            trials.push_back(std::move(e));
        }
        size_t base = trials.size();
        for (size_t a = 0; a < base; ++a)
            for (size_t b = a + 1; b < base; ++b)
                trials.push_back(trials[a] + trials[b]);
        for (const auto &e : trials) {
            if (e.is_scalar())
                continue;
            auto cp = e.charpoly();
            for (const auto &lambda : cyclotomic_eigen_candidates(cp, field)) {
                CMatrix shifted = e;
                for (size_t i = 0; i < d; ++i)
                    shifted(i, i) -= lambda;
                CMatrix power = shifted.pow(d);
                auto ker = power.kernel();
                if (ker.empty() || ker.size() == d)
                    continue;
                // Fitting: piece = ker(power) ⊕ im(power), both submodules
                detail::Piece p1, p2;
                for (const auto &coef : ker) {
                    std::vector<Cyc> v(n, Cyc(0));
                    for (size_t c = 0; c < d; ++c)
                        if (!(coef[c] == Cyc(0)))
                            for (size_t j = 0; j < n; ++j)
                                v[j] += coef[c] * piece.basis[c][j];
                    p1.basis.push_back(std::move(v));
                }
                std::vector<std::vector<Cyc>> image;
                for (size_t c = 0; c < d; ++c) {
                    std::vector<Cyc> col(d, Cyc(0));
                    for (size_t r2 = 0; r2 < d; ++r2)
                        col[r2] = power(r2, c);
                    std::vector<Cyc> v(n, Cyc(0));
                    for (size_t r2 = 0; r2 < d; ++r2)
                        if (!(col[r2] == Cyc(0)))
                            for (size_t j = 0; j < n; ++j)
                                v[j] += col[r2] * piece.basis[r2][j];
                    image.push_back(std::move(v));
                }
                p2.basis = echelon_span(image);
                p1.basis = echelon_span(p1.basis);
                if (p1.dim() + p2.dim() != d)
                    continue;
                self(std::move(p1), self);
                self(std::move(p2), self);
                return;
            }
        }
        throw FieldTooSmall("cannot split a reducible block over Q(zeta_" +
                            std::to_string(field->m) + "); raise the cyclotomic order");
    };

    while (!queue.empty()) {
        detail::Piece p = std::move(queue.back());
        queue.pop_back();
        process(std::move(p), process);
    }

    // assemble representations and dedupe by character
    std::vector<TwistedRep> reps;
    for (const auto &piece : done) {
        TwistedRep rep;
        rep.table = table;
        rep.dim = piece.dim();
        rep.mats.reserve(n);
        for (size_t g = 0; g < n; ++g)
            rep.mats.push_back(restrict_operator(lmats[g], piece.basis));
        bool dup = false;
        for (const auto &seen : reps)
            dup = dup || (seen.dim == rep.dim && seen.character() == rep.character());
        if (!dup)
            reps.push_back(std::move(rep));
    }
    std::sort(reps.begin(), reps.end(), [](const TwistedRep &a, const TwistedRep &b) {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        auto ca = a.character(), cb = b.character();
        for (size_t k = 0; k < ca.size(); ++k) {
            if (ca[k] == cb[k])
                continue;
            return ca[k].str() < cb[k].str();
        }
        return false;
    });
    size_t sum = 0;
    for (const auto &r : reps)
        sum += r.dim * r.dim;
    if (sum != n)
        throw std::logic_error("irreducible decomposition incomplete: sum of squares = " +
                               std::to_string(sum) + " vs " + std::to_string(n));
    return reps;
}

// ---------------------------------------------------------------------------
// Clifford theory: stabilizers, obstruction cocycle, tau ⋉ rho°.
// ---------------------------------------------------------------------------

struct CliffordContext {
    FiniteGroup ambient;
    std::vector<size_t> normal_elems;  // ambient indices, identity first
    std::vector<size_t> stabilizer;    // ambient indices of Stab(rho0), sorted
    std::vector<size_t> coset_reps;    // representatives of Stab/N
    FiniteGroup quotient;              // group structure on coset_reps
    CocycleTable kappa;                // obstruction cocycle on the quotient
    std::vector<CMatrix> intertwiner;  // I^gamma for each coset rep
};

namespace detail {

inline std::optional<CMatrix> solve_intertwiner(const FiniteGroup &ambient,
                                                const std::vector<size_t> &normal_elems,
                                                const TwistedRep &rho0, size_t g)
{
    // I rho0(g^{-1} n g) = rho0(n) I for all n in N
    size_t d = rho0.dim;
    size_t ginv = ambient.inverse(g);
    std::map<size_t, size_t> local;
    for (size_t i = 0; i < normal_elems.size(); ++i)
        local[normal_elems[i]] = i;
    CMatrix sys(normal_elems.size() * d * d, d * d);
    size_t row = 0;
    for (size_t li = 0; li < normal_elems.size(); ++li) {
        size_t n_amb = normal_elems[li];
        size_t conj = ambient.mult(ambient.mult(ginv, n_amb), g);
        auto it = local.find(conj);
        if (it == local.end())
            return std::nullopt; // not normal along this element
        const CMatrix &a = rho0.mats[it->second]; // rho0(g^{-1} n g)
        const CMatrix &b = rho0.mats[li];         // rho0(n)
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j, ++row) {
                for (size_t k = 0; k < d; ++k)
                    sys(row, i * d + k) += a(k, j);
                for (size_t k = 0; k < d; ++k)
                    sys(row, k * d + j) -= b(i, k);
            }
    }
    auto ker = sys.kernel();
    if (ker.empty())
        return std::nullopt;
    if (ker.size() > 1)
        throw NonIrreducible("rho0 must be irreducible for Clifford induction");
    CMatrix x(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            x(i, j) = ker[0][i * d + j];
    // normalize: first nonzero entry (row-major) becomes 1
    for (size_t i = 0; i < d * d; ++i) {
        Cyc v = x(i / d, i % d);
        if (!(v == Cyc(0))) {
            Cyc inv = Cyc(1) / v;
            for (size_t a2 = 0; a2 < d; ++a2)
                for (size_t b2 = 0; b2 < d; ++b2)
                    x(a2, b2) = inv * x(a2, b2);
            break;
        }
    }
    if (!x.inverse())
        return std::nullopt;
    return x;
}

} // namespace detail

/// Stabilizer, quotient and obstruction cocycle of rho0 (eq. "I^gamma" data).
inline CliffordContext clifford_context(const FiniteGroup &ambient,
                                        const std::vector<size_t> &normal_elems,
                                        const TwistedRep &rho0)
{
    CliffordContext ctx;
    ctx.ambient = ambient;
    ctx.normal_elems = normal_elems;
    if (!ambient.is_subgroup(normal_elems) || !ambient.is_normal(normal_elems))
        throw StabilizerMismatch("N must be a normal subgroup given with identity first");
    if (rho0.table.group.n != normal_elems.size())
        throw StabilizerMismatch("rho0 is not a representation of N");
    std::string why;
    if (!rho0.validate(&why))
        throw InvalidInput("rho0 invalid: " + why);

    std::vector<bool> in_n(ambient.n, false);
    for (size_t e : normal_elems)
        in_n[e] = true;

    // stabilizer of the isomorphism class of rho0
    std::vector<std::optional<CMatrix>> solved(ambient.n);
    for (size_t g = 0; g < ambient.n; ++g) {
        auto x = detail::solve_intertwiner(ambient, normal_elems, rho0, g);
        if (x) {
            ctx.stabilizer.push_back(g);
            solved[g] = std::move(x);
        }
    }
    if (!ambient.is_subgroup(ctx.stabilizer))
        throw std::logic_error("stabilizer failed to be a subgroup");

    // coset representatives of Stab / N: smallest ambient index per coset
    std::vector<bool> claimed(ambient.n, false);
    for (size_t s : ctx.stabilizer) {
        if (claimed[s])
            continue;
        ctx.coset_reps.push_back(s);
        for (size_t e : normal_elems)
            claimed[ambient.mult(s, e)] = true;
    }
    size_t q = ctx.coset_reps.size();
    auto coset_of = [&](size_t g) -> size_t {
        for (size_t i = 0; i < q; ++i) {
            size_t repinv = ambient.inverse(ctx.coset_reps[i]);
            if (in_n[ambient.mult(repinv, g)])
                return i;
        }
        throw std::logic_error("element outside its own coset decomposition");
    };
    ctx.quotient.n = q;
    ctx.quotient.table.assign(q, std::vector<size_t>(q));
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j)
            ctx.quotient.table[i][j] = coset_of(ambient.mult(ctx.coset_reps[i], ctx.coset_reps[j]));
    ctx.quotient.validate();

    // I^gamma for coset representatives; I^{gamma z} = I^gamma rho0(z)
    std::map<size_t, size_t> local;
    for (size_t i = 0; i < normal_elems.size(); ++i)
        local[normal_elems[i]] = i;
    ctx.intertwiner.resize(q);
    for (size_t i = 0; i < q; ++i)
        ctx.intertwiner[i] = *solved[ctx.coset_reps[i]];
    // force I^e = id
    ctx.intertwiner[coset_of(0)] = CMatrix::identity(rho0.dim);

    // kappa(gamma, gamma'): I^{gamma gamma'} = kappa * I^gamma I^{gamma'},
    // where gamma gamma' = rep(gamma gamma') * z
    ctx.kappa.field = rho0.table.field;
    ctx.kappa.group = ctx.quotient;
    ctx.kappa.values.assign(q * q, Cyc(1));
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j) {
            size_t prod = ambient.mult(ctx.coset_reps[i], ctx.coset_reps[j]);
            size_t k = ctx.quotient.table[i][j];
            size_t z = ambient.mult(ambient.inverse(ctx.coset_reps[k]), prod);
            CMatrix lhs = ctx.intertwiner[k] * rho0.mats[local.at(z)];
            CMatrix rhs = ctx.intertwiner[i] * ctx.intertwiner[j];
            // lhs = kappa * rhs entrywise
            Cyc kappa_val(0);
            bool found = false;
            for (size_t a2 = 0; a2 < rho0.dim && !found; ++a2)
                for (size_t b2 = 0; b2 < rho0.dim && !found; ++b2)
                    if (!(rhs(a2, b2) == Cyc(0))) {
                        kappa_val = lhs(a2, b2) / rhs(a2, b2);
                        found = true;
                    }
            if (!found || !(lhs == kappa_val * rhs))
                throw std::logic_error("intertwiners are not projectively multiplicative");
            ctx.kappa.value(i, j) = kappa_val;
        }
    std::string reason;
    if (!ctx.kappa.validate(&reason))
        throw std::logic_error("obstruction table is not a cocycle: " + reason);
    return ctx;
}

/// tau ⋉ rho0: induced representation of the ambient group whose restriction
/// to N contains rho0 with multiplicity dim(tau). tau must be a projective
/// representation of the stabilizer quotient for the computed kappa.
inline TwistedRep clifford_induce(const CliffordContext &ctx, const TwistedRep &rho0,
                                  const TwistedRep &tau)
{
    const FiniteGroup &amb = ctx.ambient;
    if (tau.table.group.table != ctx.quotient.table)
        throw StabilizerMismatch("tau is not a representation of the stabilizer quotient");
    // tau's cocycle must match the computed obstruction
    for (size_t i = 0; i < ctx.quotient.n; ++i)
        for (size_t j = 0; j < ctx.quotient.n; ++j)
            if (!(tau.table.value(i, j) == ctx.kappa.value(i, j)))
                throw StabilizerMismatch("tau's cocycle does not match the obstruction cocycle");
    std::string why;
    if (!tau.validate(&why))
        throw InvalidInput("tau invalid: " + why);

    std::map<size_t, size_t> local;
    for (size_t i = 0; i < ctx.normal_elems.size(); ++i)
        local[ctx.normal_elems[i]] = i;
    std::vector<bool> in_n(amb.n, false);
    for (size_t e : ctx.normal_elems)
        in_n[e] = true;
    std::vector<bool> in_s(amb.n, false);
    for (size_t e : ctx.stabilizer)
        in_s[e] = true;

    // representation of the stabilizer S on V_tau ⊗ V_rho0
    size_t dt = tau.dim, dr = rho0.dim;
    auto pi_s = [&](size_t s) -> CMatrix {
        // s = rep(coset) * z
        size_t ci = 0;
        bool found = false;
        for (size_t i = 0; i < ctx.coset_reps.size() && !found; ++i) {
            size_t z = amb.mult(amb.inverse(ctx.coset_reps[i]), s);
            if (in_n[z]) {
                ci = i;
                found = true;
            }
        }
        if (!found)
            throw std::logic_error("stabilizer element without coset");
        size_t z = amb.mult(amb.inverse(ctx.coset_reps[ci]), s);
        CMatrix right = ctx.intertwiner[ci] * rho0.mats[local.at(z)];
        CMatrix out(dt * dr, dt * dr);
        const CMatrix &left = tau.mats[ci];
        for (size_t a = 0; a < dt; ++a)
            for (size_t b = 0; b < dt; ++b)
                if (!(left(a, b) == Cyc(0)))
                    for (size_t c = 0; c < dr; ++c)
                        for (size_t d = 0; d < dr; ++d)
                            out(a * dr + c, b * dr + d) = left(a, b) * right(c, d);
        return out;
    };

    // transversal of S in the ambient group: smallest index per left coset gS
    std::vector<size_t> transversal;
    std::vector<bool> covered(amb.n, false);
    for (size_t g = 0; g < amb.n; ++g) {
        if (covered[g])
            continue;
        transversal.push_back(g);
        for (size_t s : ctx.stabilizer)
            covered[amb.mult(g, s)] = true;
    }
    size_t blocks = transversal.size();
    size_t dim = blocks * dt * dr;

    TwistedRep out;
    out.table = CocycleTable::trivial(amb, rho0.table.field);
    out.dim = dim;
    out.mats.assign(amb.n, CMatrix(dim, dim));
    for (size_t g = 0; g < amb.n; ++g) {
        CMatrix m(dim, dim);
        for (size_t bi = 0; bi < blocks; ++bi) {
            size_t gt = amb.mult(g, transversal[bi]);
            // find target block bj with gt = transversal[bj] * s
            size_t bj = 0;
            bool found = false;
            for (size_t j = 0; j < blocks && !found; ++j) {
                size_t s = amb.mult(amb.inverse(transversal[j]), gt);
                if (in_s[s]) {
                    bj = j;
                    found = true;
                }
            }
            size_t s = amb.mult(amb.inverse(transversal[bj]), gt);
            CMatrix block = pi_s(s);
            for (size_t r2 = 0; r2 < dt * dr; ++r2)
                for (size_t c2 = 0; c2 < dt * dr; ++c2)
                    m(bj * dt * dr + r2, bi * dt * dr + c2) = block(r2, c2);
        }
        out.mats[g] = std::move(m);
    }
    std::string reason;
    if (!out.validate(&reason))
        throw std::logic_error("induced representation fails validation: " + reason);
    if (out.commutant_dimension() != 1)
        throw NonIrreducible("induced representation has commutant dimension > 1");
    return out;
}

/// Multiplicity of rho0 inside the restriction of rep to N (Frobenius check).
inline size_t restriction_multiplicity(const CliffordContext &ctx, const TwistedRep &rho0,
                                       const TwistedRep &rep)
{
    // restriction of rep to N as a rep of the local group of N
    TwistedRep res;
    res.table = rho0.table;
    res.dim = rep.dim;
    for (size_t i = 0; i < ctx.normal_elems.size(); ++i)
        res.mats.push_back(rep.mats[ctx.normal_elems[i]]);
    return intertwiners(rho0, res).size();
}

} // namespace hecke
