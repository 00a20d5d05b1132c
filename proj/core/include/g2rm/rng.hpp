#ifndef G2RM_RNG_HPP
#define G2RM_RNG_HPP

#include <array>
#include <cstdint>
#include <cstring>

namespace g2rm {

// Seeded ChaCha20-based generator.  Deterministic across platforms; the
// stream quality matters for the curve search, and a fixed seed reproduces
// every run exactly.
class ChaChaRng {
 public:
  explicit ChaChaRng(std::uint64_t seed) {
    static constexpr std::uint32_t kSigma[4] = {0x61707865u, 0x3320646eu, 0x79622d32u,
                                                0x6b206574u};
    for (int i = 0; i < 4; ++i) state_[i] = kSigma[i];
    // Key schedule: expand the 64-bit seed with splitmix64.
    std::uint64_t z = seed;
    for (int i = 0; i < 4; ++i) {
      std::uint64_t w = splitmix(z);
      state_[4 + 2 * i] = static_cast<std::uint32_t>(w);
      state_[5 + 2 * i] = static_cast<std::uint32_t>(w >> 32);
    }
    state_[12] = 0;  // block counter
    state_[13] = 0;
    state_[14] = 0x0;
    state_[15] = 0x0;
    pos_ = 16;
  }

  std::uint32_t next_u32() {
    if (pos_ >= 16) refill();
    return block_[pos_++];
  }

  std::uint64_t next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
      std::uint64_t v = next_u64();
      if (v < limit) return v % n;
    }
  }

  bool next_bool() { return (next_u32() & 1u) != 0; }

  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next_u64(); }

 private:
  static std::uint64_t splitmix(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static std::uint32_t rotl(std::uint32_t v, int c) { return (v << c) | (v >> (32 - c)); }

  static void quarter(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d) {
    a += b; d ^= a; d = rotl(d, 16);
    c += d; b ^= c; b = rotl(b, 12);
    a += b; d ^= a; d = rotl(d, 8);
    c += d; b ^= c; b = rotl(b, 7);
  }

  void refill() {
    std::array<std::uint32_t, 16> x = state_;
    for (int round = 0; round < 10; ++round) {
      quarter(x[0], x[4], x[8], x[12]);
      quarter(x[1], x[5], x[9], x[13]);
      quarter(x[2], x[6], x[10], x[14]);
      quarter(x[3], x[7], x[11], x[15]);
      quarter(x[0], x[5], x[10], x[15]);
      quarter(x[1], x[6], x[11], x[12]);
      quarter(x[2], x[7], x[8], x[13]);
      quarter(x[3], x[4], x[9], x[14]);
    }
    for (int i = 0; i < 16; ++i) block_[i] = x[i] + state_[i];
    if (++state_[12] == 0) ++state_[13];
    pos_ = 0;
  }

  std::array<std::uint32_t, 16> state_{};
  std::array<std::uint32_t, 16> block_{};
  int pos_;
};

}  // namespace g2rm

#endif  // G2RM_RNG_HPP
