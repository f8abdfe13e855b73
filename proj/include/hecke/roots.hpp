#pragma once

#include "hecke/rational.hpp"
#include "hecke/upoly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace hecke {

// ---------------------------------------------------------------------------
// Integer factorization (Miller-Rabin + Pollard rho), enough for the desk-scale
// constant terms that show up in characteristic polynomials.
// ---------------------------------------------------------------------------

inline Int mod_mul(const Int &a, const Int &b, const Int &m) { return (a * b) % m; }

inline Int mod_pow(Int base, Int exp, const Int &m)
{
    Int result = 1;
    base %= m;
    if (base < 0)
        base += m;
    while (exp > 0) {
        if ((exp & 1) != 0)
            result = mod_mul(result, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline bool is_probable_prime(const Int &n)
{
    if (n < 2)
        return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

inline Int pollard_rho(const Int &n)
{
    if (n % 2 == 0)
        return 2;
    for (Int c = 1; ; ++c) {
        Int x = 2, y = 2, d = 1;
        auto f = [&](const Int &v) { return (mod_mul(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Int diff = x > y ? x - y : y - x;
            if (diff == 0)
                break;
            d = gcd(diff, n);
        }
        if (d != 1 && d != n)
            return d;
    }
}

/// Prime factorization of |n|, n != 0, as prime -> exponent.
inline std::map<Int, int> factor_integer(Int n)
{
    std::map<Int, int> out;
    if (n < 0)
        n = -n;
    if (n <= 1)
        return out;
    std::vector<Int> stack{n};
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (m == 1)
            continue;
        if (is_probable_prime(m)) {
            out[m] += 1;
            continue;
        }
        // strip small primes first
        bool split = false;
        for (int p : {2, 3, 5, 7, 11, 13}) {
            if (m % p == 0) {
                stack.push_back(p);
                stack.push_back(m / p);
                split = true;
                break;
            }
        }
        if (split)
            continue;
        Int d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return out;
}

/// All positive divisors of |n| (n != 0).
inline std::vector<Int> divisors(const Int &n)
{
    auto fac = factor_integer(n);
    std::vector<Int> divs{1};
    for (const auto &[p, e] : fac) {
        size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// ---------------------------------------------------------------------------
// Rational roots of a polynomial with rational coefficients.
// ---------------------------------------------------------------------------

inline std::vector<Rational> rational_roots(const std::vector<Rational> &poly)
{
    std::vector<Rational> p = poly;
    upoly_trim(p);
    std::vector<Rational> roots;
    if (p.empty() || p.size() == 1)
        return roots;
    // strip powers of x
    size_t shift = 0;
    while (shift < p.size() && p[shift] == 0)
        ++shift;
    if (shift > 0) {
        roots.push_back(Rational(0));
        p.erase(p.begin(), p.begin() + shift);
    }
    if (p.size() <= 1)
        return roots;
    // clear denominators
    Int den = 1;
    for (const auto &c : p)
        den = lcm(den, denominator(c));
    std::vector<Int> ip;
    for (const auto &c : p)
        ip.push_back(numerator(c) * (den / denominator(c)));
    Int a0 = ip.front(), an = ip.back();
    for (const Int &num : divisors(a0)) {
        for (const Int &q : divisors(an)) {
            for (int sign : {1, -1}) {
                Rational cand(sign * num, q);
                if (upoly_eval(p, cand) == 0) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Gaussian integers: enough structure to enumerate divisors, which gives the
// rational-root theorem over Q(i).
// ---------------------------------------------------------------------------

struct Zi {
    Int a, b; // a + b i
    friend Zi operator+(const Zi &x, const Zi &y) { return {x.a + y.a, x.b + y.b}; }
    friend Zi operator-(const Zi &x, const Zi &y) { return {x.a - y.a, x.b - y.b}; }
    friend Zi operator*(const Zi &x, const Zi &y)
    {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const Zi &x, const Zi &y) { return x.a == y.a && x.b == y.b; }
    Int norm() const { return a * a + b * b; }
    bool is_zero() const { return a == 0 && b == 0; }
};

inline Int round_div(const Int &num, const Int &den)
{
    // nearest integer to num/den
    Int two_num = 2 * num;
    Int q = two_num / den;
    // adjust toward nearest
    Int r = q / 2;
    std::vector<Int> cands{r - 1, r, r + 1};
    Int best = r;
    Int best_err = abs(num - best * den);
    for (const Int &c : cands) {
        Int err = abs(num - c * den);
        if (err < best_err) {
            best = c;
            best_err = err;
        }
    }
    return best;
}

inline Zi zi_divmod(const Zi &x, const Zi &y, Zi &rem)
{
    Int n = y.norm();
    Zi conj{y.a, -y.b};
    Zi num = x * conj;
    Zi q{round_div(num.a, n), round_div(num.b, n)};
    rem = x - q * y;
    return q;
}

inline Zi zi_gcd(Zi x, Zi y)
{
    while (!y.is_zero()) {
        Zi r;
        zi_divmod(x, y, r);
        x = y;
        y = r;
    }
    return x;
}

/// Gaussian primes above a rational prime p.
inline std::vector<Zi> gaussian_primes_above(const Int &p)
{
    if (p == 2)
        return {Zi{1, 1}};
    if (p % 4 == 3)
        return {Zi{p, 0}};
    // p = 1 mod 4: find x with x^2 = -1 mod p, then split
    Int x = 0;
    for (Int a = 2; ; ++a) {
        Int cand = mod_pow(a, (p - 1) / 4, p);
        if (mod_mul(cand, cand, p) == p - 1) {
            x = cand;
            break;
        }
    }
    Zi g = zi_gcd(Zi{p, 0}, Zi{x, 1});
    Zi conj{g.a, -g.b};
    return {g, conj};
}

/// All divisors of z up to units (z != 0).
inline std::vector<Zi> zi_divisors(const Zi &z)
{
    std::vector<std::pair<Zi, int>> primes; // gaussian prime powers in z
    Zi rest = z;
    for (const auto &[p, e] : factor_integer(z.norm())) {
        for (const Zi &gp : gaussian_primes_above(p)) {
            int count = 0;
            while (true) {
                Zi rem;
                Zi q = zi_divmod(rest, gp, rem);
                if (!rem.is_zero())
                    break;
                rest = q;
                ++count;
            }
            if (count > 0)
                primes.push_back({gp, count});
        }
    }
    std::vector<Zi> divs{Zi{1, 0}};
    for (const auto &[gp, e] : primes) {
        size_t base = divs.size();
        Zi pk{1, 0};
        for (int k = 1; k <= e; ++k) {
            pk = pk * gp;
            for (size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// ---------------------------------------------------------------------------
// Roots in Q(i) of a polynomial with Q(i) coefficients.
// ---------------------------------------------------------------------------

inline std::vector<GaussianRational> gaussian_roots(const std::vector<GaussianRational> &poly)
{
    std::vector<GaussianRational> p = poly;
    upoly_trim(p);
    std::vector<GaussianRational> roots;
    if (p.size() <= 1)
        return roots;
    size_t shift = 0;
    while (shift < p.size() && p[shift].is_zero())
        ++shift;
    if (shift > 0) {
        roots.push_back(GaussianRational(0));
        p.erase(p.begin(), p.begin() + shift);
    }
    if (p.size() <= 1)
        return roots;

    // clear denominators: coefficients in Z[i]
    Int den = 1;
    for (const auto &c : p) {
        den = lcm(den, denominator(c.re()));
        den = lcm(den, denominator(c.im()));
    }
    std::vector<Zi> ip;
    for (const auto &c : p) {
        Rational re = c.re() * den, im = c.im() * den;
        ip.push_back(Zi{numerator(re), numerator(im)});
    }
    const Zi units[4] = {Zi{1, 0}, Zi{-1, 0}, Zi{0, 1}, Zi{0, -1}};
    auto nums = zi_divisors(ip.front());
    auto dens = zi_divisors(ip.back());
    for (const Zi &num : nums) {
        for (const Zi &q : dens) {
            Int qn = q.norm();
            // candidate (num * conj(q)) / norm(q), up to units
            Zi base = num * Zi{q.a, -q.b};
            for (const Zi &u : units) {
                Zi top = base * u;
                GaussianRational cand(Rational(top.a, qn), Rational(top.b, qn));
                if (upoly_eval(p, cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Roots with multiplicities. `complete` is set when the multiplicities sum to
/// the degree, i.e. the polynomial splits over Q(i).
inline std::vector<std::pair<GaussianRational, int>>
gaussian_roots_with_multiplicity(std::vector<GaussianRational> p, bool *complete = nullptr)
{
    upoly_trim(p);
    std::vector<std::pair<GaussianRational, int>> out;
    if (p.size() <= 1) {
        if (complete)
            *complete = true;
        return out;
    }
    int deg = upoly_deg(p);
    for (const auto &root : gaussian_roots(p)) {
        int mult = 0;
        std::vector<GaussianRational> q = p;
        while (upoly_deg(q) >= 1 && upoly_eval(q, root).is_zero()) {
            q = upoly_deflate(q, root);
            ++mult;
        }
        out.push_back({root, mult});
    }
    int total = 0;
    for (const auto &[root, mult] : out)
        total += mult;
    if (complete)
        *complete = (total == deg);
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    return out;
}

} // namespace hecke
