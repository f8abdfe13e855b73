#pragma once

#include "hecke/errors.hpp"
#include "hecke/rational.hpp"

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>

namespace hecke {

/// Deterministic splitmix64 stream; stable across platforms so seeded reports
/// are byte-identical.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next()
    {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    uint64_t below(uint64_t n)
    {
        if (n == 0)
            return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v = next();
        while (v >= limit)
            v = next();
        return v % n;
    }

    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }

    Rational small_rational(long span = 3, long max_den = 2)
    {
        long num = range(-span, span);
        long den = range(1, max_den);
        return Rational(num, den);
    }

    GaussianRational small_gaussian(long span = 3, bool allow_imag = true)
    {
        Rational re = small_rational(span);
        Rational im = allow_imag && below(2) == 0 ? small_rational(span) : Rational(0);
        return {re, im};
    }

private:
    uint64_t state_;
};

/// Session-wide bounds and reproducibility knobs.
struct SessionConfig {
    unsigned cyclotomic_m = 12;
    size_t group_bound = 64;
    unsigned degree_bound = 16;
    size_t weyl_bound = 100000;
    uint64_t seed = 42;
    std::string format = "json"; // or "pretty"

    /// HECKE_BOUNDS="cyclotomic=24,group=48,degree=10,weyl=50000"
    void apply_env()
    {
        const char *env = std::getenv("HECKE_BOUNDS");
        if (!env)
            return;
        std::stringstream ss(env);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw InvalidInput("HECKE_BOUNDS entries must look like key=value");
            std::string key = item.substr(0, eq);
            unsigned long long value = std::stoull(item.substr(eq + 1));
            if (key == "cyclotomic")
                cyclotomic_m = static_cast<unsigned>(value);
            else if (key == "group")
                group_bound = value;
            else if (key == "degree")
                degree_bound = static_cast<unsigned>(value);
            else if (key == "weyl")
                weyl_bound = value;
            else
                throw InvalidInput("unknown HECKE_BOUNDS key: " + key);
        }
    }
};

} // namespace hecke
