#pragma once

#include "hecke/errors.hpp"
#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

using QVec = std::vector<Rational>;
using GVec = std::vector<GaussianRational>;

inline GVec to_gaussian_vec(const QVec &v)
{
    GVec out;
    out.reserve(v.size());
    for (const auto &q : v)
        out.emplace_back(q);
    return out;
}

inline QVec real_part(const GVec &v)
{
    QVec out;
    out.reserve(v.size());
    for (const auto &z : v)
        out.push_back(z.re());
    return out;
}

/// Pairing of a covector with a vector.
inline Rational pair(const QVec &covec, const QVec &vec)
{
    Rational acc = 0;
    for (size_t k = 0; k < covec.size(); ++k)
        acc += covec[k] * vec[k];
    return acc;
}

inline GaussianRational pair(const QVec &covec, const GVec &vec)
{
    GaussianRational acc(0);
    for (size_t k = 0; k < covec.size(); ++k)
        acc += GaussianRational(covec[k]) * vec[k];
    return acc;
}

/// Root system data: roots are covectors on t, coroots vectors in t.
/// `ext` holds the matrices of the diagram-automorphism group acting on t.
struct RootDatum {
    size_t rank = 0;
    std::vector<QVec> roots;
    std::vector<QVec> coroots;
    std::vector<size_t> simple;       // indices into roots
    std::vector<QMatrix> ext;         // generators of the extension group R
    std::vector<QVec> complement;     // central complement basis (may be empty)

    QMatrix reflection_matrix(size_t root_idx) const
    {
        QMatrix m = QMatrix::identity(rank);
        const QVec &alpha = roots[root_idx];
        const QVec &cov = coroots[root_idx];
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j)
                m(i, j) -= cov[i] * alpha[j];
        return m;
    }

    std::optional<size_t> root_index(const QVec &alpha) const
    {
        for (size_t k = 0; k < roots.size(); ++k)
            if (roots[k] == alpha)
                return k;
        return std::nullopt;
    }

    bool is_positive_root(size_t idx) const { return positive_mask_.at(idx); }

    std::vector<size_t> positive_roots() const
    {
        std::vector<size_t> out;
        for (size_t k = 0; k < roots.size(); ++k)
            if (positive_mask_[k])
                out.push_back(k);
        return out;
    }

    /// Coefficients of a covector in the simple-root basis, if it lies in their span.
    std::optional<QVec> simple_root_coefficients(const QVec &alpha) const
    {
        QMatrix sys(rank, simple.size());
        for (size_t j = 0; j < simple.size(); ++j)
            for (size_t i = 0; i < rank; ++i)
                sys(i, j) = roots[simple[j]][i];
        auto sol = sys.solve(alpha);
        if (!sol)
            return std::nullopt;
        // verify (solve() only guarantees consistency when the system is solvable)
        QVec check(rank, Rational(0));
        for (size_t j = 0; j < simple.size(); ++j)
            for (size_t i = 0; i < rank; ++i)
                check[i] += (*sol)[j] * roots[simple[j]][i];
        if (check != alpha)
            return std::nullopt;
        return *sol;
    }

    /// Default complement: orthogonal complement of the coroot span (standard
    /// inner product), used when the user declares nothing.
    void ensure_complement()
    {
        if (!complement.empty() || coroots.empty())
            return;
        QMatrix m(coroots.size(), rank);
        for (size_t i = 0; i < coroots.size(); ++i)
            for (size_t j = 0; j < rank; ++j)
                m(i, j) = coroots[i][j];
        complement = m.kernel();
    }

    bool coroots_span_t() const
    {
        if (coroots.empty())
            return rank == 0;
        QMatrix m(coroots.size(), rank);
        for (size_t i = 0; i < coroots.size(); ++i)
            for (size_t j = 0; j < rank; ++j)
                m(i, j) = coroots[i][j];
        return m.rank() == rank;
    }

    void validate()
    {
        if (roots.size() != coroots.size())
            throw InvalidInput("roots and coroots must be in bijection");
        for (size_t k = 0; k < roots.size(); ++k) {
            bool zero = true;
            for (const auto &c : roots[k])
                zero = zero && c == 0;
            if (zero)
                throw InvalidInput("zero root at index " + std::to_string(k));
            if (pair(roots[k], coroots[k]) != 2)
                throw InvalidInput("pairing <coroot, root> != 2 at index " + std::to_string(k));
        }
        for (size_t i : simple)
            if (i >= roots.size())
                throw InvalidInput("simple index out of range");
        compute_positive_mask();
        // simple reflections permute the root set
        for (size_t pos = 0; pos < simple.size(); ++pos) {
            QMatrix s = reflection_matrix(simple[pos]);
            for (size_t k = 0; k < roots.size(); ++k) {
                if (!root_index(act_covector(s, roots[k])))
                    throw InvalidInput("simple reflection does not permute roots");
            }
        }
        // ext generators permute the positive roots
        for (const QMatrix &g : ext) {
            if (g.rows() != rank || g.cols() != rank)
                throw InvalidInput("ext generator has wrong shape");
            if (!g.inverse())
                throw InvalidInput("ext generator not invertible");
            for (size_t k = 0; k < roots.size(); ++k) {
                auto img = root_index(act_covector(g, roots[k]));
                if (!img)
                    throw InvalidInput("ext generator does not permute roots");
                if (positive_mask_[k] != positive_mask_[*img])
                    throw InvalidInput("ext generator does not preserve the positive system");
            }
        }
        ensure_complement();
    }

    /// Action of a matrix m on a covector alpha: alpha . m^{-1}. For
    /// reflections m^{-1} = m; callers pass the inverse when needed.
    static QVec act_covector_with_inverse(const QMatrix &m_inv, const QVec &alpha)
    {
        QVec out(m_inv.cols(), Rational(0));
        for (size_t j = 0; j < m_inv.cols(); ++j)
            for (size_t i = 0; i < m_inv.rows(); ++i)
                out[j] += alpha[i] * m_inv(i, j);
        return out;
    }

    QVec act_covector(const QMatrix &m, const QVec &alpha) const
    {
        auto inv = m.inverse();
        if (!inv)
            throw InvalidInput("singular matrix acting on covector");
        return act_covector_with_inverse(*inv, alpha);
    }

private:
    std::vector<bool> positive_mask_;

    void compute_positive_mask()
    {
        positive_mask_.assign(roots.size(), false);
        for (size_t k = 0; k < roots.size(); ++k) {
            auto coeffs = simple_root_coefficients(roots[k]);
            if (!coeffs)
                throw InvalidInput("root outside the span of the simple roots");
            bool nonneg = true, nonpos = true;
            for (const auto &c : *coeffs) {
                nonneg = nonneg && c >= 0;
                nonpos = nonpos && c <= 0;
            }
            if (!nonneg && !nonpos)
                throw InvalidInput("root neither positive nor negative");
            positive_mask_[k] = nonneg;
        }
    }
};

/// Canonical word: simple-reflection letters (positions in the simple list)
/// for the W°-part followed by the index of the R-part.
struct WeylWord {
    std::vector<size_t> letters; // simple positions
    size_t r_index = 0;          // element of R
    QMatrix matrix;
};

/// Enumerated W = W° ⋊ R with canonical words and exact matrices.
class WeylGroup {
public:
    static WeylGroup build(const RootDatum &datum, size_t bound = 100000)
    {
        WeylGroup w;
        w.rank_ = datum.rank;
        // enumerate W° by BFS over simple reflections (shortest-lex canonical words)
        std::vector<QMatrix> gens;
        for (size_t pos = 0; pos < datum.simple.size(); ++pos)
            gens.push_back(datum.reflection_matrix(datum.simple[pos]));
        w.simple_count_ = gens.size();
        bfs(datum.rank, gens, bound, w.w0_mats_, w.w0_words_, w.w0_index_);
        // enumerate R by BFS over ext generators
        bfs(datum.rank, datum.ext, bound, w.r_mats_, w.r_words_, w.r_index_);
        if (w.w0_mats_.size() * w.r_mats_.size() > bound)
            throw BoundExceeded("Weyl group order exceeds bound");
        // R-conjugation permutations of the simple reflections
        w.conj_.assign(w.r_mats_.size(), std::vector<size_t>(w.simple_count_));
        for (size_t r = 0; r < w.r_mats_.size(); ++r) {
            auto rinv = w.r_mats_[r].inverse();
            for (size_t pos = 0; pos < w.simple_count_; ++pos) {
                QMatrix conj = w.r_mats_[r] * gens[pos] * (*rinv);
                bool found = false;
                for (size_t q = 0; q < w.simple_count_; ++q) {
                    if (conj == gens[q]) {
                        w.conj_[r][pos] = q;
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw InvalidInput("ext generators do not normalize the simple reflections");
            }
        }
        w.build_inverse_tables();
        return w;
    }

    size_t order() const { return w0_mats_.size() * r_mats_.size(); }
    size_t w0_order() const { return w0_mats_.size(); }
    size_t r_order() const { return r_mats_.size(); }
    size_t simple_count() const { return simple_count_; }
    size_t rank() const { return rank_; }

    size_t identity() const { return 0; }
    size_t from_parts(size_t u, size_t r) const { return u + w0_mats_.size() * r; }
    size_t w0_part(size_t a) const { return a % w0_mats_.size(); }
    size_t r_part(size_t a) const { return a / w0_mats_.size(); }

    size_t simple_element(size_t pos) const { return simple_elt_[pos]; }
    size_t ext_element(size_t r) const { return from_parts(0, r); }

    /// Group law on the pair representation.
    size_t mult(size_t a, size_t b) const
    {
        size_t ua = w0_part(a), ra = r_part(a);
        size_t ub = w0_part(b), rb = r_part(b);
        // (ua, ra)(ub, rb) = (ua * ra ub ra^{-1}, ra rb)
        size_t conj_ub = conj_w0(ra, ub);
        size_t u = w0_mult(ua, conj_ub);
        size_t r = r_mult(ra, rb);
        return from_parts(u, r);
    }

    size_t inverse(size_t a) const { return inverse_[a]; }

    int sign(size_t a) const { return w0_words_[w0_part(a)].size() % 2 == 0 ? 1 : -1; }
    size_t length(size_t a) const { return w0_words_[w0_part(a)].size(); }

    QMatrix matrix(size_t a) const { return w0_mats_[w0_part(a)] * r_mats_[r_part(a)]; }
    const QMatrix &inverse_matrix(size_t a) const { return inv_mats_[a]; }

    WeylWord word(size_t a) const
    {
        WeylWord ww;
        ww.letters = w0_words_[w0_part(a)];
        ww.r_index = r_part(a);
        ww.matrix = matrix(a);
        return ww;
    }
    const std::vector<size_t> &w0_word(size_t u) const { return w0_words_[u]; }
    const std::vector<size_t> &r_word(size_t r) const { return r_words_[r]; }

    GVec act(size_t a, const GVec &x) const
    {
        QMatrix m = matrix(a);
        GVec out(rank_, GaussianRational(0));
        for (size_t i = 0; i < rank_; ++i)
            for (size_t j = 0; j < rank_; ++j)
                if (m(i, j) != 0)
                    out[i] += GaussianRational(m(i, j)) * x[j];
        return out;
    }

    size_t conj_simple(size_t r, size_t pos) const { return conj_[r][pos]; }

    size_t w0_mult(size_t a, size_t b) const
    {
        auto it = w0_index_.find(key(w0_mats_[a] * w0_mats_[b]));
        if (it == w0_index_.end())
            throw std::logic_error("W° not closed under multiplication");
        return it->second;
    }
    size_t r_mult(size_t a, size_t b) const
    {
        auto it = r_index_.find(key(r_mats_[a] * r_mats_[b]));
        if (it == r_index_.end())
            throw std::logic_error("R not closed under multiplication");
        return it->second;
    }

    /// Conjugation r u r^{-1} in W°, computed by relabeling the canonical word.
    size_t conj_w0(size_t r, size_t u) const
    {
        if (r == 0)
            return u;
        size_t acc = 0;
        for (size_t letter : w0_words_[u])
            acc = w0_mult(acc, simple_w0_[conj_[r][letter]]);
        return acc;
    }

    size_t simple_w0(size_t pos) const { return simple_w0_[pos]; }

private:
    size_t rank_ = 0;
    size_t simple_count_ = 0;
    std::vector<QMatrix> w0_mats_, r_mats_;
    std::vector<std::vector<size_t>> w0_words_, r_words_;
    std::map<std::vector<Rational>, size_t> w0_index_, r_index_;
    std::vector<std::vector<size_t>> conj_;
    std::vector<size_t> inverse_;
    std::vector<QMatrix> inv_mats_;
    std::vector<size_t> simple_w0_;  // index of s_pos in W°
    std::vector<size_t> simple_elt_; // index of s_pos in W

    static std::vector<Rational> key(const QMatrix &m) { return m.data(); }

    static void bfs(size_t rank, const std::vector<QMatrix> &gens, size_t bound,
                    std::vector<QMatrix> &mats, std::vector<std::vector<size_t>> &words,
                    std::map<std::vector<Rational>, size_t> &index)
    {
        QMatrix id = QMatrix::identity(rank);
        mats.clear();
        words.clear();
        index.clear();
        mats.push_back(id);
        words.push_back({});
        index[key(id)] = 0;
        for (size_t head = 0; head < mats.size(); ++head) {
            for (size_t g = 0; g < gens.size(); ++g) {
                QMatrix next = mats[head] * gens[g];
                auto k = key(next);
                if (index.count(k))
                    continue;
                if (mats.size() >= bound)
                    throw BoundExceeded("group closure exceeds configured bound");
                index[k] = mats.size();
                mats.push_back(next);
                auto w = words[head];
                w.push_back(g);
                words.push_back(std::move(w));
            }
        }
    }

    void build_inverse_tables()
    {
        simple_w0_.resize(simple_count_);
        simple_elt_.resize(simple_count_);
        for (size_t pos = 0; pos < simple_count_; ++pos) {
            // the word [pos] appears at BFS level 1
            bool found = false;
            for (size_t u = 0; u < w0_words_.size(); ++u)
                if (w0_words_[u].size() == 1 && w0_words_[u][0] == pos) {
                    simple_w0_[pos] = u;
                    simple_elt_[pos] = from_parts(u, 0);
                    found = true;
                    break;
                }
            if (!found)
                throw std::logic_error("missing simple reflection in enumeration");
        }
        inverse_.resize(order());
        inv_mats_.resize(order());
        for (size_t a = 0; a < order(); ++a) {
            size_t ua = w0_part(a), ra = r_part(a);
            // (u, r)^{-1} = (r^{-1} u^{-1} r, r^{-1})
            size_t rinv = 0;
            for (size_t r = 0; r < r_mats_.size(); ++r)
                if (r_mult(ra, r) == 0) {
                    rinv = r;
                    break;
                }
            size_t uinv = 0;
            for (size_t u = 0; u < w0_mats_.size(); ++u)
                if (w0_mult(ua, u) == 0) {
                    uinv = u;
                    break;
                }
            inverse_[a] = from_parts(conj_w0(rinv, uinv), rinv);
            inv_mats_[a] = *matrix(a).inverse();
        }
    }
};

enum class ConeKind { t_plus, t_minus, t_minusminus, dual_plus };

inline ConeKind cone_kind_from_string(const std::string &s)
{
    if (s == "t_plus") return ConeKind::t_plus;
    if (s == "t_minus") return ConeKind::t_minus;
    if (s == "t_minusminus") return ConeKind::t_minusminus;
    if (s == "dual_plus") return ConeKind::dual_plus;
    throw InvalidInput("unknown cone kind: " + s);
}

/// Membership of Re(x) in the chosen cone. For dual_plus the coordinates of x
/// are read as a covector.
inline bool cone_membership(const RootDatum &datum, const GVec &x, ConeKind kind)
{
    QVec re = real_part(x);
    auto positive = datum.positive_roots();
    switch (kind) {
    case ConeKind::t_plus: {
        for (size_t k : positive)
            if (pair(datum.roots[k], re) < 0)
                return false;
        return true;
    }
    case ConeKind::dual_plus: {
        for (size_t k : positive) {
            Rational acc = 0;
            for (size_t j = 0; j < datum.rank; ++j)
                acc += re[j] * datum.coroots[k][j];
            if (acc < 0)
                return false;
        }
        return true;
    }
    case ConeKind::t_minus:
    case ConeKind::t_minusminus: {
        if (kind == ConeKind::t_minusminus && !datum.coroots_span_t())
            return false; // the interior is empty unless the coroots span
        // decompose re = sum c_i alpha_i^vee + complement part
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
            // verify exactly
            QVec check(datum.rank, Rational(0));
            for (size_t j = 0; j < s + c; ++j)
                for (size_t i = 0; i < datum.rank; ++i)
                    check[i] += (*sol)[j] * sys(i, j);
            if (check != re)
                sol.reset();
        }
        if (!sol)
            throw NotInSpan("vector outside coroot span plus declared complement");
        for (size_t j = 0; j < s; ++j) {
            if (kind == ConeKind::t_minus && (*sol)[j] > 0)
                return false;
            if (kind == ConeKind::t_minusminus && (*sol)[j] >= 0)
                return false;
        }
        for (size_t j = 0; j < c; ++j)
            if ((*sol)[s + j] != 0)
                return false;
        return true;
    }
    }
    return false;
}

/// Sub-datum of the roots vanishing on sigma0 (or on Re(sigma0)).
inline RootDatum levi_subsystem(const RootDatum &datum, const GVec &sigma0, bool use_real_part = false)
{
    RootDatum sub;
    sub.rank = datum.rank;
    sub.complement = datum.complement;
    std::vector<size_t> kept;
    for (size_t k = 0; k < datum.roots.size(); ++k) {
        GaussianRational v = pair(datum.roots[k], sigma0);
        bool vanishes = use_real_part ? (v.re() == 0) : v.is_zero();
        if (vanishes) {
            kept.push_back(k);
            sub.roots.push_back(datum.roots[k]);
            sub.coroots.push_back(datum.coroots[k]);
        }
    }
    // simple roots of the subsystem: positive roots (in the ambient order)
    // that are not sums of two positive subsystem roots
    std::vector<size_t> sub_positive;
    for (size_t idx = 0; idx < kept.size(); ++idx)
        if (datum.is_positive_root(kept[idx]))
            sub_positive.push_back(idx);
    for (size_t idx : sub_positive) {
        bool decomposable = false;
        for (size_t a : sub_positive) {
            if (decomposable)
                break;
            for (size_t b : sub_positive) {
                QVec sum(datum.rank);
                for (size_t i = 0; i < datum.rank; ++i)
                    sum[i] = sub.roots[a][i] + sub.roots[b][i];
                if (sum == sub.roots[idx]) {
                    decomposable = true;
                    break;
                }
            }
        }
        if (!decomposable)
            sub.simple.push_back(idx);
    }
    sub.validate();
    return sub;
}

/// Re(alpha(x)) >= 0 (or > 0 when strict) for every ambient positive root not
/// in the Levi. These are the roots of the unipotent radical of P Q°.
inline bool parabolic_positivity(const RootDatum &datum, const GVec &x, const RootDatum &levi, bool strict)
{
    for (size_t k : datum.positive_roots()) {
        if (levi.root_index(datum.roots[k]))
            continue;
        Rational v = pair(datum.roots[k], x).re();
        if (strict ? (v <= 0) : (v < 0))
            return false;
    }
    return true;
}

// --- standard data used across tests, the suite and the CLI ---------------

/// Builds the full root/coroot lists from simple data by reflection closure.
inline RootDatum datum_from_simples(size_t rank,
                                    std::vector<QVec> simple_roots,
                                    std::vector<QVec> simple_coroots,
                                    std::vector<QMatrix> ext = {},
                                    std::vector<QVec> complement = {})
{
    RootDatum d;
    d.rank = rank;
    d.ext = std::move(ext);
    d.complement = std::move(complement);
    std::vector<std::pair<QVec, QVec>> all;
    for (size_t i = 0; i < simple_roots.size(); ++i)
        all.push_back({simple_roots[i], simple_coroots[i]});
    auto find = [&all](const QVec &alpha) {
        for (size_t k = 0; k < all.size(); ++k)
            if (all[k].first == alpha)
                return std::optional<size_t>(k);
        return std::optional<size_t>();
    };
    for (size_t head = 0; head < all.size(); ++head) {
        for (size_t i = 0; i < simple_roots.size(); ++i) {
            const QVec &ai = simple_roots[i];
            const QVec &aiv = simple_coroots[i];
            // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, coroot accordingly
            auto [beta, betav] = all[head];
            Rational coeff = pair(beta, aiv);
            QVec img(beta.size()), imgv(betav.size());
            for (size_t k = 0; k < beta.size(); ++k)
                img[k] = beta[k] - coeff * ai[k];
            Rational coeffv = pair(ai, betav);
            for (size_t k = 0; k < betav.size(); ++k)
                imgv[k] = betav[k] - coeffv * aiv[k];
            if (!find(img))
                all.push_back({img, imgv});
        }
    }
    for (auto &[alpha, alphav] : all) {
        d.roots.push_back(alpha);
        d.coroots.push_back(alphav);
    }
    for (size_t i = 0; i < simple_roots.size(); ++i)
        d.simple.push_back(*find(simple_roots[i]));
    d.validate();
    return d;
}

inline RootDatum standard_datum(const std::string &name)
{
    auto q = [](int n) { return Rational(n); };
    if (name == "A1")
        return datum_from_simples(1, {{q(2)}}, {{q(1)}});
    if (name == "A2")
        return datum_from_simples(2, {{q(2), q(-1)}, {q(-1), q(2)}}, {{q(1), q(0)}, {q(0), q(1)}});
    if (name == "B2")
        return datum_from_simples(2, {{q(2), q(-2)}, {q(-1), q(2)}}, {{q(1), q(0)}, {q(0), q(1)}});
    if (name == "G2")
        return datum_from_simples(2, {{q(2), q(-1)}, {q(-3), q(2)}}, {{q(1), q(0)}, {q(0), q(1)}});
    if (name == "A1xA1")
        return datum_from_simples(2, {{q(2), q(0)}, {q(0), q(2)}}, {{q(1), q(0)}, {q(0), q(1)}});
    if (name == "A1xA1.swap") {
        QMatrix swap(2, 2);
        swap(0, 1) = 1;
        swap(1, 0) = 1;
        return datum_from_simples(2, {{q(2), q(0)}, {q(0), q(2)}}, {{q(1), q(0)}, {q(0), q(1)}}, {swap});
    }
    if (name.rfind("gl", 0) == 0) {
        size_t n = std::stoul(name.substr(2));
        if (n < 2)
            throw InvalidInput("gl datum needs n >= 2");
        std::vector<QVec> sr, sc;
        for (size_t i = 0; i + 1 < n; ++i) {
            QVec alpha(n, Rational(0));
            alpha[i] = 1;
            alpha[i + 1] = -1;
            sr.push_back(alpha);
            sc.push_back(alpha); // e_i - e_{i+1} on both sides
        }
        QVec center(n, Rational(1));
        return datum_from_simples(n, sr, sc, {}, {center});
    }
    throw InvalidInput("unknown standard datum: " + name);
}

} // namespace hecke
