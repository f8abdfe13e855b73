#pragma once

#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// Exponent vector for xi_1..xi_n (coordinates of t*) followed by r.
struct Monomial {
    std::vector<unsigned> xi;
    unsigned r = 0;

    unsigned degree() const
    {
        unsigned d = r;
        for (unsigned e : xi)
            d += e;
        return d;
    }
    unsigned xi_degree() const
    {
        unsigned d = 0;
        for (unsigned e : xi)
            d += e;
        return d;
    }

    friend bool operator==(const Monomial &a, const Monomial &b)
    {
        return a.r == b.r && a.xi == b.xi;
    }
};

// Graded-lex: total degree first, then exponents left to right, r last.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const
    {
        unsigned da = a.degree(), db = b.degree();
        if (da != db)
            return da > db;
        if (a.xi != b.xi)
            return a.xi > b.xi;
        return a.r > b.r;
    }
};

/// Sparse polynomial in S(t*) ⊗ C[r] with Q(i) coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(size_t nvars) : nvars_(nvars) {}
    Poly(size_t nvars, const GaussianRational &c) : nvars_(nvars)
    {
        if (!c.is_zero())
            terms_[Monomial{std::vector<unsigned>(nvars, 0), 0}] = c;
    }

    static Poly variable(size_t nvars, size_t k)
    {
        Poly p(nvars);
        Monomial m{std::vector<unsigned>(nvars, 0), 0};
        m.xi[k] = 1;
        p.terms_[m] = GaussianRational(1);
        return p;
    }
    static Poly r_var(size_t nvars)
    {
        Poly p(nvars);
        p.terms_[Monomial{std::vector<unsigned>(nvars, 0), 1}] = GaussianRational(1);
        return p;
    }
    /// Linear form sum c_k xi_k.
    static Poly linear(const std::vector<GaussianRational> &coeffs)
    {
        Poly p(coeffs.size());
        for (size_t k = 0; k < coeffs.size(); ++k)
            if (!coeffs[k].is_zero()) {
                Monomial m{std::vector<unsigned>(coeffs.size(), 0), 0};
                m.xi[k] = 1;
                p.terms_[m] = coeffs[k];
            }
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, GaussianRational, MonomialOrder> &terms() const { return terms_; }

    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto &[m, c] : terms_)
            d = std::max(d, m.degree());
        return d;
    }
    unsigned xi_degree() const
    {
        unsigned d = 0;
        for (const auto &[m, c] : terms_)
            d = std::max(d, m.xi_degree());
        return d;
    }
    unsigned r_degree() const
    {
        unsigned d = 0;
        for (const auto &[m, c] : terms_)
            d = std::max(d, m.r);
        return d;
    }

    void add_term(const Monomial &m, const GaussianRational &c)
    {
        if (c.is_zero())
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly &a, const Poly &b)
    {
        Poly r = a;
        for (const auto &[m, c] : b.terms_)
            r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly &a, const Poly &b)
    {
        Poly r = a;
        for (const auto &[m, c] : b.terms_)
            r.add_term(m, -c);
        return r;
    }
    Poly operator-() const
    {
        Poly r(nvars_);
        for (const auto &[m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        Poly r(std::max(a.nvars_, b.nvars_));
        for (const auto &[ma, ca] : a.terms_)
            for (const auto &[mb, cb] : b.terms_) {
                Monomial m;
                m.xi.resize(r.nvars_, 0);
                for (size_t k = 0; k < ma.xi.size(); ++k)
                    m.xi[k] += ma.xi[k];
                for (size_t k = 0; k < mb.xi.size(); ++k)
                    m.xi[k] += mb.xi[k];
                m.r = ma.r + mb.r;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const GaussianRational &c, const Poly &a)
    {
        Poly r(a.nvars_);
        if (c.is_zero())
            return r;
        for (const auto &[m, cc] : a.terms_)
            r.terms_[m] = c * cc;
        return r;
    }
    Poly &operator+=(const Poly &b) { return *this = *this + b; }
    Poly &operator-=(const Poly &b) { return *this = *this - b; }
    Poly &operator*=(const Poly &b) { return *this = *this * b; }

    friend bool operator==(const Poly &a, const Poly &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    /// Substitute xi_k -> linear combination sub[k] of the xi variables; r is fixed.
    Poly substitute_linear(const std::vector<std::vector<GaussianRational>> &sub) const
    {
        Poly out(nvars_);
        for (const auto &[m, c] : terms_) {
            Poly term(nvars_, c);
            for (size_t k = 0; k < m.xi.size(); ++k) {
                if (m.xi[k] == 0)
                    continue;
                Poly lin = Poly::linear(sub[k]);
                for (unsigned e = 0; e < m.xi[k]; ++e)
                    term *= lin;
            }
            if (m.r > 0) {
                Monomial rm{std::vector<unsigned>(nvars_, 0), m.r};
                Poly rp(nvars_);
                rp.terms_[rm] = GaussianRational(1);
                term *= rp;
            }
            out += term;
        }
        return out;
    }

    /// Negate every xi variable (the Iwahori-Matsumoto substitution on S(t*)).
    Poly negate_xi() const
    {
        Poly out(nvars_);
        for (const auto &[m, c] : terms_) {
            GaussianRational cc = (m.xi_degree() % 2 == 0) ? c : -c;
            out.terms_[m] = cc;
        }
        return out;
    }

    /// Evaluate at xi = x (vector over Q(i)) and r = rv.
    GaussianRational eval(const std::vector<GaussianRational> &x, const GaussianRational &rv) const
    {
        GaussianRational total(0);
        for (const auto &[m, c] : terms_) {
            GaussianRational v = c;
            for (size_t k = 0; k < m.xi.size(); ++k)
                for (unsigned e = 0; e < m.xi[k]; ++e)
                    v *= x[k];
            for (unsigned e = 0; e < m.r; ++e)
                v *= rv;
            total += v;
        }
        return total;
    }

    /// Evaluate on commuting matrices (xi_k -> mats[k], r -> rv * I).
    GMatrix eval_matrix(const std::vector<GMatrix> &mats, const GaussianRational &rv, size_t dim) const
    {
        GMatrix total(dim, dim);
        for (const auto &[m, c] : terms_) {
            GMatrix v = c * GMatrix::identity(dim);
            for (size_t k = 0; k < m.xi.size(); ++k)
                for (unsigned e = 0; e < m.xi[k]; ++e)
                    v = v * mats[k];
            GaussianRational rc(1);
            for (unsigned e = 0; e < m.r; ++e)
                rc *= rv;
            total = total + rc * v;
        }
        return total;
    }

    /// Exact division by a homogeneous linear form in the xi variables.
    /// Returns the quotient; throws if the division is not exact.
    Poly divide_by_linear(const Poly &lin) const
    {
        if (lin.terms_.empty())
            throw std::domain_error("division by zero polynomial");
        for (const auto &[m, c] : lin.terms_)
            if (m.degree() != 1 || m.r != 0)
                throw std::domain_error("divisor must be linear in the xi variables");
        Poly rem = *this;
        Poly quot(nvars_);
        const auto &[lm, lc] = *lin.terms_.begin();
        while (!rem.terms_.empty()) {
            const auto &[tm, tc] = *rem.terms_.begin();
            // leading monomial of rem must be divisible by lm (a single variable power)
            size_t var = 0;
            while (var < lm.xi.size() && lm.xi[var] == 0)
                ++var;
            if (var >= tm.xi.size() || tm.xi[var] == 0)
                throw std::domain_error("inexact division in Demazure operator");
            Monomial qm = tm;
            qm.xi[var] -= 1;
            GaussianRational qc = tc / lc;
            quot.add_term(qm, qc);
            Poly piece(nvars_);
            piece.terms_[qm] = qc;
            rem -= piece * lin;
        }
        return quot;
    }

private:
    size_t nvars_ = 0;
    std::map<Monomial, GaussianRational, MonomialOrder> terms_;
};

inline std::string monomial_key(const Monomial &m)
{
    std::string out;
    for (size_t k = 0; k < m.xi.size(); ++k) {
        if (m.xi[k] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "x" + std::to_string(k + 1);
        if (m.xi[k] > 1)
            out += "^" + std::to_string(m.xi[k]);
    }
    if (m.r > 0) {
        if (!out.empty())
            out += "*";
        out += "r";
        if (m.r > 1)
            out += "^" + std::to_string(m.r);
    }
    return out.empty() ? "1" : out;
}

inline Monomial parse_monomial_key(const std::string &key, size_t nvars)
{
    Monomial m{std::vector<unsigned>(nvars, 0), 0};
    if (key == "1" || key.empty())
        return m;
    size_t pos = 0;
    while (pos < key.size()) {
        size_t star = key.find('*', pos);
        std::string fac = key.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        pos = (star == std::string::npos) ? key.size() : star + 1;
        unsigned exp = 1;
        auto caret = fac.find('^');
        if (caret != std::string::npos) {
            exp = static_cast<unsigned>(std::stoul(fac.substr(caret + 1)));
            fac = fac.substr(0, caret);
        }
        if (fac == "r") {
            m.r += exp;
        } else if (!fac.empty() && fac[0] == 'x') {
            size_t idx = std::stoul(fac.substr(1));
            if (idx == 0 || idx > nvars)
                throw std::invalid_argument("variable index out of range: " + fac);
            m.xi[idx - 1] += exp;
        } else {
            throw std::invalid_argument("bad monomial factor: " + fac);
        }
    }
    return m;
}

inline std::string to_string(const Poly &p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto &[m, c] : p.terms()) {
        if (!out.empty())
            out += " + ";
        out += "(" + to_string(c) + ")";
        std::string key = monomial_key(m);
        if (key != "1")
            out += "*" + key;
    }
    return out;
}

} // namespace hecke
