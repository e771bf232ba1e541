#ifndef SPINORLAB_RNG_HPP
#define SPINORLAB_RNG_HPP

#include <cstdint>

namespace spinorlab {

/// splitmix64 stream; self-contained so seeded runs are byte-identical across
/// platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough integer in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Derived independent stream; used to keep per-trial results independent
    /// of evaluation order.
    Rng fork(std::uint64_t salt) const {
        Rng r(s_ ^ (salt + 0x9e3779b97f4a7c15ULL) * 0xff51afd7ed558ccdULL);
        r.next();
        return r;
    }

  private:
    std::uint64_t s_;
};

}  // namespace spinorlab

#endif
