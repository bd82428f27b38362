#pragma once

#include <cstdint>

namespace randomplay {

/// Philox4x32-10 counter-based generator (Salmon et al., SC 2011). One
/// stream per (seed, stream) pair: the key is the 64-bit seed, the high
/// counter words are the stream id, and the low words count blocks within
/// the stream. Streams for distinct game indices are independent, so a
/// batch of games produces identical draws no matter how the games are
/// scheduled across threads.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t stream) {
    key_[0] = static_cast<std::uint32_t>(seed);
    key_[1] = static_cast<std::uint32_t>(seed >> 32);
    counter_[0] = 0;
    counter_[1] = 0;
    counter_[2] = static_cast<std::uint32_t>(stream);
    counter_[3] = static_cast<std::uint32_t>(stream >> 32);
  }

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return buffer_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
  }

  /// Uniform draw from [0, n) without modulo bias (rejection from the top).
  /// Requires n >= 1.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

 private:
  static constexpr std::uint32_t kMultA = 0xD2511F53;
  static constexpr std::uint32_t kMultB = 0xCD9E8D57;
  static constexpr std::uint32_t kWeylA = 0x9E3779B9;
  static constexpr std::uint32_t kWeylB = 0xBB67AE85;

  static void round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
    const std::uint64_t product0 = static_cast<std::uint64_t>(kMultA) * ctr[0];
    const std::uint64_t product1 = static_cast<std::uint64_t>(kMultB) * ctr[2];
    const std::uint32_t lo0 = static_cast<std::uint32_t>(product0);
    const std::uint32_t hi0 = static_cast<std::uint32_t>(product0 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(product1);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(product1 >> 32);
    const std::uint32_t next[4] = {hi1 ^ ctr[1] ^ key[0], lo1,
                                   hi0 ^ ctr[3] ^ key[1], lo0};
    ctr[0] = next[0];
    ctr[1] = next[1];
    ctr[2] = next[2];
    ctr[3] = next[3];
  }

  void refill() {
    std::uint32_t ctr[4] = {counter_[0], counter_[1], counter_[2], counter_[3]};
    std::uint32_t key[2] = {key_[0], key_[1]};
    for (int r = 0; r < 10; ++r) {
      if (r != 0) {
        key[0] += kWeylA;
        key[1] += kWeylB;
      }
      round(ctr, key);
    }
    buffer_[0] = ctr[0];
    buffer_[1] = ctr[1];
    buffer_[2] = ctr[2];
    buffer_[3] = ctr[3];
    pos_ = 0;
    if (++counter_[0] == 0) ++counter_[1];  // block index; stream words fixed
  }

  std::uint32_t counter_[4];
  std::uint32_t key_[2];
  std::uint32_t buffer_[4] = {};
  int pos_ = 4;
};

}  // namespace randomplay
