#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

namespace hecke {

// Univariate polynomials as coefficient vectors, ascending degree.
// Trailing zeros are trimmed; the zero polynomial is the empty vector.

template <typename F>
void upoly_trim(std::vector<F> &p)
{
    while (!p.empty() && p.back() == F(0))
        p.pop_back();
}

template <typename F>
int upoly_deg(const std::vector<F> &p)
{
    return static_cast<int>(p.size()) - 1;
}

template <typename F>
std::vector<F> upoly_add(std::vector<F> a, const std::vector<F> &b)
{
    if (a.size() < b.size())
        a.resize(b.size(), F(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    upoly_trim(a);
    return a;
}

template <typename F>
std::vector<F> upoly_sub(std::vector<F> a, const std::vector<F> &b)
{
    if (a.size() < b.size())
        a.resize(b.size(), F(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    upoly_trim(a);
    return a;
}

template <typename F>
std::vector<F> upoly_mul(const std::vector<F> &a, const std::vector<F> &b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<F> r(a.size() + b.size() - 1, F(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == F(0))
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    upoly_trim(r);
    return r;
}

template <typename F>
std::vector<F> upoly_scale(const F &c, std::vector<F> p)
{
    for (auto &v : p)
        v = c * v;
    upoly_trim(p);
    return p;
}

/// Returns {quotient, remainder} for division by a nonzero polynomial.
template <typename F>
std::pair<std::vector<F>, std::vector<F>> upoly_divmod(std::vector<F> a, const std::vector<F> &b)
{
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    std::vector<F> q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, F(0));
    F lead_inv = F(1) / b.back();
    while (a.size() >= b.size()) {
        F c = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        // force exact cancellation of the leading term
        a.pop_back();
        upoly_trim(a);
    }
    upoly_trim(q);
    return {q, a};
}

template <typename F>
std::vector<F> upoly_mod(const std::vector<F> &a, const std::vector<F> &b)
{
    return upoly_divmod(a, b).second;
}

template <typename F>
std::vector<F> upoly_monic(std::vector<F> p)
{
    if (p.empty())
        return p;
    F inv = F(1) / p.back();
    for (auto &c : p)
        c = inv * c;
    return p;
}

template <typename F>
std::vector<F> upoly_gcd(std::vector<F> a, std::vector<F> b)
{
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        auto r = upoly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(a);
}

/// Extended gcd: returns g with g = s*a + t*b.
template <typename F>
std::vector<F> upoly_ext_gcd(std::vector<F> a, std::vector<F> b, std::vector<F> &s, std::vector<F> &t)
{
    std::vector<F> s0{F(1)}, s1, t0, t1{F(1)};
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        auto [q, r] = upoly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = upoly_sub(s0, upoly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = upoly_sub(t0, upoly_mul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.empty()) {
        F inv = F(1) / a.back();
        a = upoly_scale(inv, a);
        s0 = upoly_scale(inv, s0);
        t0 = upoly_scale(inv, t0);
    }
    s = std::move(s0);
    t = std::move(t0);
    return a;
}

template <typename F>
F upoly_eval(const std::vector<F> &p, const F &x)
{
    F acc(0);
    for (size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

template <typename F>
std::vector<F> upoly_derivative(const std::vector<F> &p)
{
    std::vector<F> d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(F(static_cast<int>(i)) * p[i]);
    upoly_trim(d);
    return d;
}

/// Deflate a known root: p / (x - root); asserts exactness.
template <typename F>
std::vector<F> upoly_deflate(const std::vector<F> &p, const F &root)
{
    std::vector<F> div{-root, F(1)};
    auto [q, rem] = upoly_divmod(p, div);
    if (!rem.empty())
        throw std::domain_error("deflation by non-root");
    return q;
}

} // namespace hecke
