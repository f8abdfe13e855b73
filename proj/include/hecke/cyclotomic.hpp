#pragma once

#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"
#include "hecke/roots.hpp"
#include "hecke/upoly.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// Shared data of the field Q(zeta_m). The order m is kept divisible by 4 so
/// that i = zeta^(m/4) is always available and Q(i) embeds.
struct CycField {
    unsigned m;
    std::vector<Rational> cyclotomic; // Phi_m, ascending coefficients
    size_t degree;                    // phi(m)

    static std::vector<Rational> phi_poly(unsigned m, std::map<unsigned, std::vector<Rational>> &memo)
    {
        auto it = memo.find(m);
        if (it != memo.end())
            return it->second;
        // x^m - 1 divided by the product of Phi_d for proper divisors d
        std::vector<Rational> num(m + 1, Rational(0));
        num[0] = -1;
        num[m] = 1;
        std::vector<Rational> den{Rational(1)};
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0)
                den = upoly_mul(den, phi_poly(d, memo));
        auto [q, rem] = upoly_divmod(num, den);
        if (!rem.empty())
            throw std::logic_error("cyclotomic polynomial division failed");
        memo[m] = q;
        return q;
    }

    explicit CycField(unsigned order) : m(order)
    {
        if (m == 0)
            throw std::invalid_argument("cyclotomic order must be positive");
        std::map<unsigned, std::vector<Rational>> memo;
        cyclotomic = phi_poly(m, memo);
        degree = cyclotomic.size() - 1;
    }
};

using CycFieldPtr = std::shared_ptr<const CycField>;

inline CycFieldPtr make_cyc_field(unsigned m)
{
    unsigned order = std::lcm(m, 4u);
    return std::make_shared<const CycField>(order);
}

/// Element of Q(zeta_m). An element without an attached field is a plain
/// rational, so that generic code (Matrix<Cyc>) can construct 0 and 1.
class Cyc {
public:
    Cyc() = default;
    Cyc(int n) : rational_(n) {}
    Cyc(Rational q) : rational_(std::move(q)) {}
    Cyc(CycFieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
    {
        reduce();
    }

    static Cyc zeta(const CycFieldPtr &field, unsigned power)
    {
        std::vector<Rational> c(power % field->m + 1, Rational(0));
        c.back() = 1;
        return Cyc(field, std::move(c));
    }
    static Cyc from_rational(const CycFieldPtr &field, const Rational &q)
    {
        return Cyc(field, {q});
    }
    static Cyc from_gaussian(const CycFieldPtr &field, const GaussianRational &z)
    {
        Cyc i = zeta(field, field->m / 4);
        return from_rational(field, z.re()) + Cyc(z.im()) * i;
    }

    bool has_field() const { return field_ != nullptr; }
    const CycFieldPtr &field() const { return field_; }

    bool is_zero() const
    {
        if (!field_)
            return rational_ == 0;
        return coeffs_.empty();
    }
    bool is_rational() const
    {
        if (!field_)
            return true;
        for (size_t k = 1; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0)
                return false;
        return true;
    }
    Rational rational_value() const
    {
        if (!field_)
            return rational_;
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    /// Coordinates in the power basis 1, zeta, ..., zeta^(deg-1).
    std::vector<Rational> coords(size_t degree) const
    {
        std::vector<Rational> out(degree, Rational(0));
        if (!field_) {
            if (degree > 0)
                out[0] = rational_;
            return out;
        }
        for (size_t k = 0; k < coeffs_.size() && k < degree; ++k)
            out[k] = coeffs_[k];
        return out;
    }

    friend Cyc operator+(const Cyc &x, const Cyc &y)
    {
        auto [f, a, b] = align(x, y);
        if (!f)
            return Cyc(x.rational_ + y.rational_);
        return Cyc(f, upoly_add(a, b));
    }
    friend Cyc operator-(const Cyc &x, const Cyc &y)
    {
        auto [f, a, b] = align(x, y);
        if (!f)
            return Cyc(x.rational_ - y.rational_);
        return Cyc(f, upoly_sub(a, b));
    }
    Cyc operator-() const
    {
        if (!field_)
            return Cyc(-rational_);
        return Cyc(field_, upoly_scale(Rational(-1), coeffs_));
    }
    friend Cyc operator*(const Cyc &x, const Cyc &y)
    {
        auto [f, a, b] = align(x, y);
        if (!f)
            return Cyc(x.rational_ * y.rational_);
        return Cyc(f, upoly_mul(a, b));
    }
    friend Cyc operator/(const Cyc &x, const Cyc &y)
    {
        if (y.is_zero())
            throw std::domain_error("division by zero in cyclotomic field");
        auto [f, a, b] = align(x, y);
        if (!f)
            return Cyc(x.rational_ / y.rational_);
        std::vector<Rational> s, t;
        auto g = upoly_ext_gcd(b, f->cyclotomic, s, t);
        if (upoly_deg(g) != 0)
            throw std::logic_error("non-invertible element in cyclotomic field");
        return Cyc(f, upoly_mul(a, s));
    }
    Cyc &operator+=(const Cyc &y) { return *this = *this + y; }
    Cyc &operator-=(const Cyc &y) { return *this = *this - y; }
    Cyc &operator*=(const Cyc &y) { return *this = *this * y; }
    Cyc &operator/=(const Cyc &y) { return *this = *this / y; }

    friend bool operator==(const Cyc &x, const Cyc &y)
    {
        auto [f, a, b] = align(x, y);
        if (!f)
            return x.rational_ == y.rational_;
        return a == b;
    }
    friend bool operator!=(const Cyc &x, const Cyc &y) { return !(x == y); }

    /// Galois map zeta -> zeta^j (j coprime to m).
    Cyc galois(unsigned j) const
    {
        if (!field_)
            return *this;
        std::vector<Rational> out;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0)
                continue;
            size_t e = (k * j) % field_->m;
            if (out.size() <= e)
                out.resize(e + 1, Rational(0));
            out[e] += coeffs_[k];
        }
        return Cyc(field_, std::move(out));
    }
    /// Complex conjugation.
    Cyc conj() const
    {
        if (!field_)
            return *this;
        return galois(field_->m - 1);
    }

    std::optional<GaussianRational> to_gaussian() const
    {
        if (!field_)
            return GaussianRational(rational_);
        size_t deg = field_->degree;
        Cyc i = zeta(field_, field_->m / 4);
        auto ic = i.coords(deg);
        auto zc = coords(deg);
        // solve z = a*1 + b*i over Q
        Matrix<Rational> sys(deg, 2);
        std::vector<Rational> rhs(deg);
        for (size_t k = 0; k < deg; ++k) {
            sys(k, 0) = (k == 0) ? Rational(1) : Rational(0);
            sys(k, 1) = ic[k];
            rhs[k] = zc[k];
        }
        auto sol = sys.solve(rhs);
        if (!sol)
            return std::nullopt;
        GaussianRational cand((*sol)[0], (*sol)[1]);
        if (*this == from_gaussian(field_, cand))
            return cand;
        return std::nullopt;
    }

    std::string str() const
    {
        if (is_zero())
            return "0";
        if (!field_)
            return to_string(rational_);
        std::string out;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0)
                continue;
            std::string piece;
            if (k == 0) {
                piece = to_string(coeffs_[k]);
            } else {
                if (coeffs_[k] == -1)
                    piece = "-";
                else if (coeffs_[k] != 1)
                    piece = to_string(coeffs_[k]) + "*";
                piece += "z";
                if (k > 1)
                    piece += "^" + std::to_string(k);
            }
            if (!out.empty() && piece[0] != '-')
                out += "+";
            out += piece;
        }
        return out;
    }

private:
    void reduce()
    {
        coeffs_ = upoly_mod(coeffs_, field_->cyclotomic);
    }

    static std::tuple<CycFieldPtr, std::vector<Rational>, std::vector<Rational>>
    align(const Cyc &x, const Cyc &y)
    {
        CycFieldPtr f = x.field_ ? x.field_ : y.field_;
        if (x.field_ && y.field_ && x.field_->m != y.field_->m)
            throw std::invalid_argument("cyclotomic field mismatch");
        if (!f)
            return {nullptr, {}, {}};
        auto lift = [&](const Cyc &v) -> std::vector<Rational> {
            if (v.field_)
                return v.coeffs_;
            if (v.rational_ == 0)
                return {};
            return {v.rational_};
        };
        return {f, lift(x), lift(y)};
    }

    CycFieldPtr field_;
    std::vector<Rational> coeffs_; // used when field_ is set
    Rational rational_{0};         // used when field_ is null
};

/// All roots of unity in Q(zeta_m) (m is even by construction): zeta^j.
inline std::vector<Cyc> roots_of_unity(const CycFieldPtr &field)
{
    std::vector<Cyc> out;
    for (unsigned j = 0; j < field->m; ++j)
        out.push_back(Cyc::zeta(field, j));
    return out;
}

/// Roots in Q(i) of a polynomial with coefficients in Q(zeta_m), via the norm
/// down to Q(i)[t] and the rational-root theorem over Z[i].
inline std::vector<Cyc> cyclotomic_roots_in_qi(const std::vector<Cyc> &poly, const CycFieldPtr &field)
{
    std::vector<Cyc> p = poly;
    upoly_trim(p);
    if (p.size() <= 1)
        return {};
    // norm to Q(i): product over the Galois group of K/Q(i), i.e. zeta -> zeta^j
    // with j = 1 mod 4.
    std::vector<Cyc> norm{Cyc(1)};
    for (unsigned j = 1; j < field->m; j += 4) {
        if (std::gcd(j, field->m) != 1)
            continue;
        std::vector<Cyc> conj_poly;
        for (const auto &c : p)
            conj_poly.push_back(c.galois(j));
        norm = upoly_mul(norm, conj_poly);
    }
    std::vector<GaussianRational> qpoly;
    for (const auto &c : norm) {
        auto g = c.to_gaussian();
        if (!g)
            throw std::logic_error("norm polynomial not over Q(i)");
        qpoly.push_back(*g);
    }
    std::vector<Cyc> out;
    for (const auto &root : gaussian_roots(qpoly)) {
        Cyc cand = Cyc::from_gaussian(field, root);
        if (upoly_eval(p, cand).is_zero())
            out.push_back(cand);
    }
    return out;
}

/// Candidate eigenvalues of the form q*eta with q in Q(i) and eta a root of
/// unity; complete for the desk-scale corpus, callers must treat a miss as
/// "field too small" rather than as proof of no eigenvalue.
inline std::vector<Cyc> cyclotomic_eigen_candidates(const std::vector<Cyc> &poly, const CycFieldPtr &field)
{
    std::vector<Cyc> p = poly;
    upoly_trim(p);
    std::vector<Cyc> out;
    if (p.size() <= 1)
        return out;
    auto push_unique = [&out](const Cyc &v) {
        for (const auto &w : out)
            if (w == v)
                return;
        out.push_back(v);
    };
    for (unsigned j = 0; j < field->m; ++j) {
        Cyc eta = Cyc::zeta(field, j);
        std::vector<Cyc> scaled;
        Cyc pow(1);
        for (size_t k = 0; k < p.size(); ++k) {
            scaled.push_back(p[k] * pow);
            pow *= eta;
        }
        for (const auto &q : cyclotomic_roots_in_qi(scaled, field))
            push_unique(q * eta);
    }
    return out;
}

} // namespace hecke
