#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hecke {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational &q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p", "-p", "+p", "p/q".
inline Rational parse_rational(const std::string &raw)
{
    std::string s = (!raw.empty() && raw[0] == '+') ? raw.substr(1) : raw;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error &) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

// Total order helper usable as a tie-break everywhere we need canonical output.
inline int cmp(const Rational &a, const Rational &b)
{
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(int n) : re_(n) {}
    GaussianRational(long n) : re_(n) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    GaussianRational operator-() const { return {-re_, -im_}; }
    friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b)
    {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational &a, const GaussianRational &b)
    {
        Rational n = b.norm();
        if (n == 0)
            throw std::domain_error("division by zero in Q(i)");
        GaussianRational p = a * b.conj();
        return {p.re_ / n, p.im_ / n};
    }
    GaussianRational &operator+=(const GaussianRational &b) { return *this = *this + b; }
    GaussianRational &operator-=(const GaussianRational &b) { return *this = *this - b; }
    GaussianRational &operator*=(const GaussianRational &b) { return *this = *this * b; }
    GaussianRational &operator/=(const GaussianRational &b) { return *this = *this / b; }

    GaussianRational inv() const { return GaussianRational(1) / *this; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational &a, const GaussianRational &b) { return !(a == b); }

    // Lexicographic (re, im); not compatible with arithmetic, used only for
    // deterministic ordering of reports and weight tables.
    friend bool operator<(const GaussianRational &a, const GaussianRational &b)
    {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline std::string to_string(const GaussianRational &z)
{
    if (z.is_zero())
        return "0";
    std::string out;
    if (z.re() != 0)
        out += to_string(z.re());
    if (z.im() != 0) {
        if (!out.empty() && z.im() > 0)
            out += "+";
        if (z.im() == -1)
            out += "-";
        else if (z.im() != 1)
            out += to_string(z.im());
        out += "i";
    }
    return out;
}

// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i"; rational parts may carry "/".
inline GaussianRational parse_gaussian(const std::string &raw)
{
    std::string s;
    for (char c : raw)
        if (!isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw std::invalid_argument("empty Q(i) literal");

    auto parse_part = [](std::string p) -> Rational {
        if (p.empty() || p == "+") return Rational(1);
        if (p == "-") return Rational(-1);
        return parse_rational(p);
    };
    if (s.back() == 'i' || s.back() == 'I') {
        std::string body = s.substr(0, s.size() - 1);
        // Split off a real part if one precedes the imaginary term.
        for (size_t k = body.size(); k-- > 1;) {
            char c = body[k - 1];
            char cc = body[k];
            if ((cc == '+' || cc == '-') && c != '/' && c != '+' && c != '-' && !isdigit(static_cast<unsigned char>(c)))
                continue;
            if ((cc == '+' || cc == '-') && isdigit(static_cast<unsigned char>(c))) {
                return {parse_rational(body.substr(0, k)), parse_part(body.substr(k))};
            }
        }
        return {Rational(0), parse_part(body)};
    }
    return {parse_rational(s), Rational(0)};
}

inline int cmp(const GaussianRational &a, const GaussianRational &b)
{
    int c = cmp(a.re(), b.re());
    if (c != 0) return c;
    return cmp(a.im(), b.im());
}

} // namespace hecke
