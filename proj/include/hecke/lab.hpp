#pragma once

#include "hecke/errors.hpp"
#include "hecke/matrix.hpp"
#include "hecke/roots.hpp"
#include "hecke/upoly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke::lab {

inline GMatrix bracket(const GMatrix &a, const GMatrix &b)
{
    return a * b - b * a;
}

inline bool is_nilpotent(const GMatrix &y)
{
    return y.pow(y.rows()).is_zero();
}

/// Exact Jordan decomposition x = x_S + x_N via interpolation against the
/// generalized eigenvalues; requires the spectrum to lie in Q(i).
inline std::pair<GMatrix, GMatrix> jordan_decomposition(const GMatrix &x)
{
    size_t n = x.rows();
    bool complete = false;
    auto roots = gaussian_roots_with_multiplicity(x.charpoly(), &complete);
    if (!complete)
        throw IrrationalSpectrum("characteristic polynomial does not split over Q(i)");
    // CRT: p = lambda_i mod (t - lambda_i)^{m_i}
    std::vector<GaussianRational> p;            // current interpolant
    std::vector<GaussianRational> modulus{GaussianRational(1)};
    for (const auto &[lambda, mult] : roots) {
        std::vector<GaussianRational> q{-lambda, GaussianRational(1)}; // t - lambda
        std::vector<GaussianRational> qi{GaussianRational(1)};
        for (int e = 0; e < mult; ++e)
            qi = upoly_mul(qi, q);
        // delta = (lambda - p) * modulus^{-1} mod qi
        std::vector<GaussianRational> s, t;
        auto g = upoly_ext_gcd(modulus, qi, s, t);
        if (upoly_deg(g) != 0)
            throw std::logic_error("moduli not coprime in Jordan interpolation");
        auto target = upoly_sub(std::vector<GaussianRational>{lambda}, p);
        auto delta = upoly_mod(upoly_mul(target, s), qi);
        p = upoly_add(p, upoly_mul(modulus, delta));
        modulus = upoly_mul(modulus, qi);
        p = upoly_mod(p, modulus);
    }
    GMatrix xs(n, n);
    GMatrix power = GMatrix::identity(n);
    for (size_t k = 0; k < p.size(); ++k) {
        if (!p[k].is_zero())
            xs = xs + p[k] * power;
        power = power * x;
    }
    GMatrix xn = x - xs;
    if (!bracket(xs, xn).is_zero() || !is_nilpotent(xn))
        throw std::logic_error("Jordan decomposition failed to verify");
    return {xs, xn};
}

/// Nilpotent with an sl2-triple and a block Levi structure.
struct Sl2Context {
    GMatrix y, h, f;
    std::vector<size_t> levi_blocks; // ordered composition of n
    size_t n = 0;

    void validate() const
    {
        GaussianRational two(2);
        if (!(bracket(h, y) == two * y))
            throw NotCompatible("[h,y] != 2y");
        if (!(bracket(h, f) == -(two * f)))
            throw NotCompatible("[h,f] != -2f");
        if (!(bracket(y, f) == h))
            throw NotCompatible("[y,f] != h");
        size_t total = 0;
        for (size_t b : levi_blocks)
            total += b;
        if (total != n)
            throw InvalidInput("levi blocks do not sum to n");
    }
};

inline std::vector<size_t> block_of_index(const std::vector<size_t> &blocks)
{
    std::vector<size_t> owner;
    for (size_t b = 0; b < blocks.size(); ++b)
        for (size_t k = 0; k < blocks[b]; ++k)
            owner.push_back(b);
    return owner;
}

inline bool is_block_diagonal(const GMatrix &m, const std::vector<size_t> &blocks)
{
    auto owner = block_of_index(blocks);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (owner[i] != owner[j] && !m(i, j).is_zero())
                return false;
    return true;
}

namespace detail {

/// Jordan chains of a nilpotent matrix: returns the chains as lists of
/// vectors ordered deepest first (u_1 = y^{k-1} v, ..., u_k = v).
inline std::vector<std::vector<std::vector<GaussianRational>>> jordan_chains(const GMatrix &y)
{
    size_t n = y.rows();
    // kernel filtration
    std::vector<std::vector<std::vector<GaussianRational>>> kernels; // K_1, K_2, ...
    {
        GMatrix p = y;
        while (true) {
            auto k = p.kernel();
            kernels.push_back(echelon_span(k));
            if (kernels.back().size() == n)
                break;
            if (kernels.size() > n)
                throw NotNilpotent("matrix is not nilpotent");
            p = p * y;
        }
    }
    size_t q = kernels.size();
    std::vector<std::vector<std::vector<GaussianRational>>> chains;
    std::vector<std::vector<GaussianRational>> produced; // all chain vectors so far
    for (size_t j = q; j >= 1; --j) {
        // tops at height j: vectors of K_j independent of K_{j-1} + produced
        std::vector<std::vector<GaussianRational>> obstruction = produced;
        if (j >= 2)
            for (const auto &v : kernels[j - 2])
                obstruction.push_back(v);
        auto obstruction_ech = echelon_span(obstruction);
        for (const auto &v : kernels[j - 1]) {
            auto test = obstruction_ech;
            test.push_back(v);
            if (echelon_span(test).size() == obstruction_ech.size())
                continue; // dependent
            // new chain with top v
            std::vector<std::vector<GaussianRational>> chain;
            std::vector<GaussianRational> cur = v;
            chain.push_back(cur);
            for (size_t e = 1; e < j; ++e) {
                cur = y.apply(cur);
                chain.push_back(cur);
            }
            std::reverse(chain.begin(), chain.end()); // deepest first
            for (const auto &vec : chain) {
                produced.push_back(vec);
                obstruction_ech.push_back(vec);
            }
            obstruction_ech = echelon_span(obstruction_ech);
            chains.push_back(std::move(chain));
        }
        if (j == 1)
            break;
    }
    size_t total = 0;
    for (const auto &c : chains)
        total += c.size();
    if (total != n)
        throw std::logic_error("Jordan chain construction incomplete");
    return chains;
}

inline Sl2Context jm_full(const GMatrix &y)
{
    size_t n = y.rows();
    if (!is_nilpotent(y))
        throw NotNilpotent("Jacobson-Morozov needs a nilpotent input");
    auto chains = jordan_chains(y);
    // basis matrix B: columns are chain vectors, deepest first per chain
    GMatrix b(n, n);
    size_t col = 0;
    std::vector<std::pair<size_t, size_t>> slot; // (chain, position) per column
    for (size_t c = 0; c < chains.size(); ++c)
        for (size_t t = 0; t < chains[c].size(); ++t, ++col) {
            for (size_t i = 0; i < n; ++i)
                b(i, col) = chains[c][t][i];
            slot.push_back({c, t});
        }
    GMatrix hj(n, n), fj(n, n);
    col = 0;
    for (size_t c = 0; c < chains.size(); ++c) {
        size_t k = chains[c].size();
        for (size_t t = 1; t <= k; ++t, ++col) {
            // weight of u_t is k + 1 - 2t
            hj(col, col) = GaussianRational(Rational(static_cast<long>(k) + 1 - 2 * static_cast<long>(t)));
            // f u_t = t (k - t) u_{t+1}
            if (t < k)
                fj(col + 1, col) = GaussianRational(Rational(static_cast<long>(t) * (static_cast<long>(k) - static_cast<long>(t))));
        }
    }
    auto binv = b.inverse();
    if (!binv)
        throw std::logic_error("Jordan basis is singular");
    Sl2Context ctx;
    ctx.n = n;
    ctx.y = y;
    ctx.h = b * hj * (*binv);
    ctx.f = b * fj * (*binv);
    ctx.levi_blocks = {n};
    ctx.validate();
    return ctx;
}

} // namespace detail

/// Exact sl2-triple through a nilpotent y; when a block Levi is given, y must
/// be block diagonal and the triple is built inside the blocks.
inline Sl2Context jacobson_morozov(const GMatrix &y,
                                   std::optional<std::vector<size_t>> within = std::nullopt)
{
    size_t n = y.rows();
    if (!within) {
        return detail::jm_full(y);
    }
    const auto &blocks = *within;
    size_t total = 0;
    for (size_t b : blocks)
        total += b;
    if (total != n)
        throw InvalidInput("levi blocks do not sum to the matrix size");
    if (!is_block_diagonal(y, blocks))
        throw NotCompatible("y is not contained in the block Levi");
    Sl2Context ctx;
    ctx.n = n;
    ctx.y = y;
    ctx.h = GMatrix(n, n);
    ctx.f = GMatrix(n, n);
    size_t offset = 0;
    for (size_t b : blocks) {
        GMatrix sub(b, b);
        for (size_t i = 0; i < b; ++i)
            for (size_t j = 0; j < b; ++j)
                sub(i, j) = y(offset + i, offset + j);
        Sl2Context part = detail::jm_full(sub);
        for (size_t i = 0; i < b; ++i)
            for (size_t j = 0; j < b; ++j) {
                ctx.h(offset + i, offset + j) = part.h(i, j);
                ctx.f(offset + i, offset + j) = part.f(i, j);
            }
        offset += b;
    }
    ctx.levi_blocks = blocks;
    ctx.validate();
    return ctx;
}

/// sigma0 = sigma - r h; requires [sigma, y] = 2 r y.
inline GMatrix sigma0_of(const GMatrix &sigma, const GaussianRational &r, const Sl2Context &ctx)
{
    GaussianRational two(2);
    if (!(bracket(sigma, ctx.y) == (two * r) * ctx.y))
        throw NotCompatible("[sigma, y] != 2 r y");
    GMatrix sigma0 = sigma - r * ctx.h;
    if (!bracket(sigma0, ctx.y).is_zero())
        throw std::logic_error("sigma0 fails to commute with y");
    return sigma0;
}

/// Inverse of sigma0_of: sigma = sigma0 + r h.
inline GMatrix sigma_of(const GMatrix &sigma0, const GaussianRational &r, const Sl2Context &ctx)
{
    if (!bracket(sigma0, ctx.y).is_zero())
        throw NotCompatible("[sigma0, y] != 0");
    return sigma0 + r * ctx.h;
}

/// The parameter c >= 2 with ad(v)^{c-2} != 0 and ad(v)^{c-1} = 0 on the given
/// root-space sum.
inline int c_parameter(const GMatrix &v, const std::vector<GMatrix> &subspace)
{
    if (subspace.empty())
        throw InvalidInput("empty root-space basis");
    size_t n = v.rows();
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto &m : subspace)
        rows.push_back(m.data());
    auto basis = echelon_span(rows);
    if (basis.empty())
        throw InvalidInput("root-space basis spans zero");
    // ad(v) as an operator on flattened matrices
    GMatrix advf(n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // ad(v) E_ij = sum_k v_ki E_kj - sum_l v_jl E_il
            for (size_t k = 0; k < n; ++k)
                if (!v(k, i).is_zero())
                    advf(k * n + j, i * n + j) += v(k, i);
            for (size_t l = 0; l < n; ++l)
                if (!v(j, l).is_zero())
                    advf(i * n + l, i * n + j) -= v(j, l);
        }
    GMatrix t(basis.size(), basis.size());
    try {
        t = restrict_operator(advf, basis);
    } catch (const std::logic_error &) {
        throw Unstable("root-space sum is not ad(v)-stable");
    }
    GMatrix power = GMatrix::identity(basis.size());
    for (size_t k = 0; k <= basis.size(); ++k) {
        if (power.is_zero())
            return static_cast<int>(k) + 1; // c - 2 = k - 1
        power = power * t;
    }
    throw Unstable("ad(v) is not nilpotent on the root-space sum");
}

enum class Ambient { gl, sl };

/// Fast path of the distinguished test: equality of the 0- and 2-graded pieces
/// of the ambient algebra under the sl2-grading of y.
inline bool is_distinguished_fast(const GMatrix &y, Ambient ambient)
{
    if (!is_nilpotent(y))
        throw NotNilpotent("distinguished test needs a nilpotent input");
    size_t n = y.rows();
    Sl2Context ctx = detail::jm_full(y);
    // ad(h) on gl_n
    GMatrix adh(n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k)
                if (!ctx.h(k, i).is_zero())
                    adh(k * n + j, i * n + j) += ctx.h(k, i);
            for (size_t l = 0; l < n; ++l)
                if (!ctx.h(j, l).is_zero())
                    adh(i * n + l, i * n + j) -= ctx.h(j, l);
        }
    size_t dim0 = adh.kernel().size();
    GMatrix shifted = adh;
    for (size_t d = 0; d < n * n; ++d)
        shifted(d, d) -= GaussianRational(2);
    size_t dim2 = shifted.kernel().size();
    if (ambient == Ambient::sl)
        dim0 -= 1; // the identity spans the trace direction inside g_0
    return dim0 == dim2;
}

/// Jordan type (partition) of a nilpotent matrix from the kernel filtration.
inline std::vector<size_t> jordan_type(const GMatrix &y)
{
    size_t n = y.rows();
    std::vector<size_t> kdims;
    GMatrix p = y;
    while (true) {
        kdims.push_back(p.kernel().size());
        if (kdims.back() == n)
            break;
        if (kdims.size() > n)
            throw NotNilpotent("matrix is not nilpotent");
        p = p * y;
    }
    // blocks of size >= j: kdims[j-1] - kdims[j-2]
    std::vector<size_t> at_least;
    for (size_t j = 0; j < kdims.size(); ++j)
        at_least.push_back(kdims[j] - (j == 0 ? 0 : kdims[j - 1]));
    std::vector<size_t> partition;
    for (size_t size = at_least.size(); size >= 1; --size) {
        size_t count = at_least[size - 1] - (size < at_least.size() ? at_least[size] : 0);
        for (size_t c = 0; c < count; ++c)
            partition.push_back(size);
        if (size == 1)
            break;
    }
    std::sort(partition.rbegin(), partition.rend());
    return partition;
}

/// Brute-force oracle: a nilpotent is distinguished when its centralizer
/// contains no nonzero semisimple element. In gl_n the identity matrix always
/// is one, so nothing is distinguished there. In sl_n the criterion reduces to
/// containment in a proper block Levi, enumerated over groupings of the Jordan
/// blocks.
inline bool is_distinguished_oracle(const GMatrix &y, Ambient ambient, size_t bound = 6)
{
    if (y.rows() > bound)
        throw BoundExceeded("oracle restricted to n <= " + std::to_string(bound));
    if (!is_nilpotent(y))
        throw NotNilpotent("distinguished test needs a nilpotent input");
    if (ambient == Ambient::gl)
        return false;
    auto partition = jordan_type(y);
    // y lies in a proper Levi iff the multiset of Jordan blocks splits into
    // two nonempty groups (the groups then feed the Levi's diagonal blocks)
    return partition.size() < 2;
}

// ---------------------------------------------------------------------------
// The epsilon function on the cokernel of ad(y).
// ---------------------------------------------------------------------------

namespace detail {

/// Basis indices (i, j) of the strictly-upper block part u_Q.
inline std::vector<std::pair<size_t, size_t>> nilradical_indices(const std::vector<size_t> &blocks)
{
    auto owner = block_of_index(blocks);
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < owner.size(); ++i)
        for (size_t j = 0; j < owner.size(); ++j)
            if (owner[i] < owner[j])
                out.push_back({i, j});
    return out;
}

/// Matrix of ad(a) on u_Q in the E_ij basis; requires ad(a)(u_Q) ⊆ u_Q.
inline GMatrix ad_on_nilradical(const GMatrix &a, const std::vector<size_t> &blocks)
{
    auto idx = nilradical_indices(blocks);
    std::map<std::pair<size_t, size_t>, size_t> pos;
    for (size_t k = 0; k < idx.size(); ++k)
        pos[idx[k]] = k;
    size_t n = a.rows();
    auto owner = block_of_index(blocks);
    GMatrix out(idx.size(), idx.size());
    (void)owner;
    for (size_t c = 0; c < idx.size(); ++c) {
        auto [i, j] = idx[c];
        // ad(a) E_ij = sum_k a_ki E_kj - sum_l a_jl E_il
        for (size_t k = 0; k < n; ++k) {
            if (a(k, i).is_zero())
                continue;
            auto it = pos.find({k, j});
            if (it == pos.end())
                throw NotCompatible("operator does not preserve the nilradical");
            out(it->second, c) += a(k, i);
        }
        for (size_t l = 0; l < n; ++l) {
            if (a(j, l).is_zero())
                continue;
            auto it = pos.find({i, l});
            if (it == pos.end())
                throw NotCompatible("operator does not preserve the nilradical");
            out(it->second, c) -= a(j, l);
        }
    }
    return out;
}

struct CokernelData {
    std::vector<std::vector<GaussianRational>> image_ech; // echelonized image rows
    std::vector<size_t> pivots;                           // pivot coordinates
    std::vector<size_t> free_coords;                      // cokernel representatives
};

inline CokernelData cokernel_of(const GMatrix &a)
{
    CokernelData out;
    std::vector<std::vector<GaussianRational>> cols;
    for (size_t c = 0; c < a.cols(); ++c) {
        std::vector<GaussianRational> v(a.rows());
        for (size_t r = 0; r < a.rows(); ++r)
            v[r] = a(r, c);
        cols.push_back(std::move(v));
    }
    out.image_ech = echelon_span(cols);
    std::vector<bool> is_pivot(a.rows(), false);
    for (const auto &row : out.image_ech) {
        size_t p = 0;
        while (p < row.size() && row[p].is_zero())
            ++p;
        out.pivots.push_back(p);
        is_pivot[p] = true;
    }
    for (size_t k = 0; k < a.rows(); ++k)
        if (!is_pivot[k])
            out.free_coords.push_back(k);
    return out;
}

/// Reduce v modulo the echelonized image; returns the free-coordinate part.
inline std::vector<GaussianRational> reduce_mod_image(const CokernelData &ck,
                                                      std::vector<GaussianRational> v)
{
    for (size_t r = 0; r < ck.image_ech.size(); ++r) {
        const auto &row = ck.image_ech[r];
        size_t p = ck.pivots[r];
        if (!v[p].is_zero()) {
            GaussianRational c = v[p];
            for (size_t j = 0; j < v.size(); ++j)
                v[j] -= c * row[j];
        }
    }
    std::vector<GaussianRational> out;
    for (size_t k : ck.free_coords)
        out.push_back(v[k]);
    return out;
}

} // namespace detail

/// epsilon(sigma, r) = det(ad(sigma) - 2r on coker(ad(y): u_Q -> u_Q)).
inline GaussianRational epsilon_direct(const Sl2Context &ctx, const GMatrix &sigma,
                                       const GaussianRational &r)
{
    GaussianRational two(2);
    if (!(bracket(sigma, ctx.y) == (two * r) * ctx.y))
        throw NotCompatible("[sigma, y] != 2 r y");
    if (!is_block_diagonal(ctx.y, ctx.levi_blocks))
        throw NotCompatible("y is not contained in the Levi blocks");
    GMatrix ady = detail::ad_on_nilradical(ctx.y, ctx.levi_blocks);
    GMatrix ads = detail::ad_on_nilradical(sigma, ctx.levi_blocks); // throws if not preserved
    auto ck = detail::cokernel_of(ady);
    size_t d = ck.free_coords.size();
    if (d == 0)
        return GaussianRational(1); // empty determinant
    GMatrix induced(d, d);
    for (size_t c = 0; c < d; ++c) {
        std::vector<GaussianRational> e(ady.rows(), GaussianRational(0));
        e[ck.free_coords[c]] = GaussianRational(1);
        auto img = ads.apply(e);
        img[ck.free_coords[c]] -= two * r; // (ad(sigma) - 2r) e
        // note: subtracting 2r on the coordinate of e itself implements -2r*e
        auto red = detail::reduce_mod_image(ck, img);
        for (size_t rr = 0; rr < d; ++rr)
            induced(rr, c) = red[rr];
    }
    return induced.det();
}

struct EpsilonFactor {
    GaussianRational lambda; // sigma0-eigenvalue on the isotypic piece
    unsigned sym_n = 0;      // Sym^n label
    size_t mult = 0;         // multiplicity
};

struct EpsilonFactorization {
    std::vector<EpsilonFactor> factors;
    size_t u_dim = 0;

    GaussianRational evaluate(const GaussianRational &r) const
    {
        GaussianRational out(1);
        for (const auto &f : factors) {
            GaussianRational base = f.lambda - GaussianRational(Rational(static_cast<long>(f.sym_n) + 2)) * r;
            for (size_t k = 0; k < f.mult; ++k)
                out *= base;
        }
        return out;
    }

    size_t dimension_check() const
    {
        size_t total = 0;
        for (const auto &f : factors)
            total += f.mult * (f.sym_n + 1);
        return total;
    }
};

/// Simultaneous decomposition of u_Q by sigma0-eigenvalue and sl2-isotype;
/// evaluation at any r equals epsilon_direct(ctx, sigma0 + r h, r).
inline EpsilonFactorization epsilon_factorized(const Sl2Context &ctx, const GMatrix &sigma0)
{
    if (!bracket(sigma0, ctx.y).is_zero() || !bracket(sigma0, ctx.h).is_zero() ||
        !bracket(sigma0, ctx.f).is_zero())
        throw NotCompatible("sigma0 must commute with the whole sl2-triple");
    GMatrix s = detail::ad_on_nilradical(sigma0, ctx.levi_blocks);
    GMatrix hop = detail::ad_on_nilradical(ctx.h, ctx.levi_blocks);
    size_t u = s.rows();
    EpsilonFactorization out;
    out.u_dim = u;
    if (u == 0)
        return out;
    bool complete = false;
    auto eig = gaussian_roots_with_multiplicity(s.charpoly(), &complete);
    if (!complete)
        throw IrrationalSpectrum("sigma0 has non-Gaussian-rational eigenvalues on u_Q");
    long span = 2 * static_cast<long>(ctx.n);
    for (const auto &[lambda, mult] : eig) {
        // generalized eigenspace of sigma0
        GMatrix shifted = s;
        for (size_t i = 0; i < u; ++i)
            shifted(i, i) -= lambda;
        auto basis = echelon_span(shifted.pow(u).kernel());
        if (basis.empty())
            continue;
        GMatrix hr = restrict_operator(hop, basis);
        // weight-space dimensions of the semisimple h-action
        std::map<long, size_t> wdim;
        for (long k = -span; k <= span; ++k) {
            GMatrix hs = hr;
            for (size_t i = 0; i < hs.rows(); ++i)
                hs(i, i) -= GaussianRational(Rational(k));
            size_t d = hs.kernel().size();
            if (d > 0)
                wdim[k] = d;
        }
        size_t covered = 0;
        for (long k = 0; k <= span; ++k) {
            size_t dk = wdim.count(k) ? wdim[k] : 0;
            size_t dk2 = wdim.count(k + 2) ? wdim[k + 2] : 0;
            if (dk > dk2) {
                EpsilonFactor f;
                f.lambda = lambda;
                f.sym_n = static_cast<unsigned>(k);
                f.mult = dk - dk2;
                covered += f.mult * (f.sym_n + 1);
                out.factors.push_back(f);
            }
        }
        if (covered != basis.size())
            throw std::logic_error("sl2 isotype decomposition does not fill the eigenspace");
    }
    if (out.dimension_check() != u)
        throw std::logic_error("epsilon factorization dimension mismatch");
    std::sort(out.factors.begin(), out.factors.end(), [](const EpsilonFactor &a, const EpsilonFactor &b) {
        int c = cmp(a.lambda, b.lambda);
        if (c != 0)
            return c < 0;
        return a.sym_n < b.sym_n;
    });
    return out;
}

enum class EpsilonVerdict { NonzeroCase1, NonzeroCase2, NonzeroCase3, Zero, Unknown };

inline std::string to_string(EpsilonVerdict v)
{
    switch (v) {
    case EpsilonVerdict::NonzeroCase1: return "Nonzero(case1)";
    case EpsilonVerdict::NonzeroCase2: return "Nonzero(case2)";
    case EpsilonVerdict::NonzeroCase3: return "Nonzero(case3)";
    case EpsilonVerdict::Zero: return "Zero";
    case EpsilonVerdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

/// Sign-case certificate: the three hypotheses under which epsilon cannot
/// vanish, applied to a sigma0 central in the Levi.
inline EpsilonVerdict epsilon_certificate(const Sl2Context &ctx, const GMatrix &sigma0,
                                          const GaussianRational &r)
{
    // sigma0 must be central in the Levi: block-scalar
    auto owner = block_of_index(ctx.levi_blocks);
    std::vector<GaussianRational> scalars(ctx.levi_blocks.size(), GaussianRational(0));
    {
        size_t idx = 0;
        for (size_t b = 0; b < ctx.levi_blocks.size(); ++b) {
            scalars[b] = sigma0(idx, idx);
            idx += ctx.levi_blocks[b];
        }
    }
    for (size_t i = 0; i < ctx.n; ++i)
        for (size_t j = 0; j < ctx.n; ++j) {
            GaussianRational expect = (i == j) ? scalars[owner[i]] : GaussianRational(0);
            if (!(sigma0(i, j) == expect))
                throw NotCompatible("sigma0 must be central in the block Levi");
        }
    bool nonneg = true, nonpos = true, strict_pos = true, strict_neg = true;
    for (size_t b1 = 0; b1 < scalars.size(); ++b1)
        for (size_t b2 = b1 + 1; b2 < scalars.size(); ++b2) {
            Rational v = (scalars[b1] - scalars[b2]).re();
            nonneg = nonneg && v >= 0;
            strict_pos = strict_pos && v > 0;
            nonpos = nonpos && v <= 0;
            strict_neg = strict_neg && v < 0;
        }
    Rational rr = r.re();
    if (rr > 0 && nonpos)
        return EpsilonVerdict::NonzeroCase1;
    if (rr < 0 && nonneg)
        return EpsilonVerdict::NonzeroCase2;
    if (rr == 0 && (strict_pos || strict_neg))
        return EpsilonVerdict::NonzeroCase3;
    GaussianRational value = epsilon_direct(ctx, sigma_of(sigma0, r, ctx), r);
    return value.is_zero() ? EpsilonVerdict::Zero : EpsilonVerdict::Unknown;
}

} // namespace hecke::lab
