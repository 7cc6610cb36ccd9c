#pragma once

#include <cstdint>
#include <random>

#include "ogdegen/rational.hpp"

namespace ogdegen {

/// splitmix64 step, used to derive independent seeds deterministically.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(base ^ (a * 0x9e3779b97f4a7c15ULL)) ^ b);
}

/// Deterministic PRNG.  mt19937_64 output is fixed by the standard and draws
/// below avoid std::uniform_int_distribution, so sequences are identical
/// across platforms and library versions.
class Prng {
  public:
    explicit Prng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-enough integer in [lo, hi] via modulo (bias immaterial here).
    long int_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

    long nonzero_int_in(long lo, long hi) {
        long v = 0;
        do {
            v = int_in(lo, hi);
        } while (v == 0);
        return v;
    }

    /// Plus-entry draw: uniform integer in [-99, 99] \ {0}, as a rational.
    Rational plus_entry() { return Rational(nonzero_int_in(-99, 99)); }

    /// Random rational with numerator in [lo, hi] and denominator in [1, dmax].
    Rational rational(long lo, long hi, long dmax) {
        return Rational(Integer(int_in(lo, hi)), Integer(int_in(1, dmax)));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace ogdegen
