#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "av/rational.hpp"

namespace av {

/// Deterministic RNG. All derived draws go through next() so that streams are
/// reproducible across platforms and standard library versions.
class DetRng {
  public:
    explicit DetRng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [lo, hi]. Uses a plain modulo reduction; the
    /// tiny bias is irrelevant here and the output is platform-stable.
    int64_t int_in(int64_t lo, int64_t hi) {
        uint64_t span = (uint64_t)(hi - lo + 1);
        return lo + (int64_t)(next() % span);
    }

    bool coin() { return (next() & 1u) != 0; }

    /// Pick an element of a non-empty vector.
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[(size_t)int_in(0, (int64_t)v.size() - 1)];
    }

    /// Derive an independent child stream (stable function of parent state).
    DetRng child() { return DetRng(next() ^ 0x9e3779b97f4a7c15ull); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace av
