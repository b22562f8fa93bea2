#pragma once

// Counter-based random number generation (Philox4x64-10). Every consumer of
// randomness owns a RandomStream keyed by (master_seed, stream_id); streams
// with distinct ids are independent, so replicates can run on any number of
// threads with identical results.

#include <array>
#include <cmath>
#include <cstdint>

namespace gcl {

inline constexpr double kTwoPi = 6.2831853071795864769;

namespace detail {
inline void mulhilo64(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}
}  // namespace detail

/// Philox 4x64 block cipher, 10 rounds. Output sequence is bit-identical to
/// the reference implementation (verified against frozen test vectors).
struct Philox4x64 {
  static constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ull;
  static constexpr std::uint64_t kM1 = 0xCA5A826395121157ull;
  static constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73Bull;

  static std::array<std::uint64_t, 4> block(std::array<std::uint64_t, 2> key,
                                            std::array<std::uint64_t, 4> ctr) {
    for (int r = 0; r < 10; ++r) {
      if (r) {
        key[0] += kW0;
        key[1] += kW1;
      }
      std::uint64_t hi0, lo0, hi1, lo1;
      detail::mulhilo64(kM0, ctr[0], hi0, lo0);
      detail::mulhilo64(kM1, ctr[2], hi1, lo1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

/// One independent substream: key = (master_seed, stream_id), 256-bit counter.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : key_{master_seed, stream_id} {}

  std::uint64_t next_u64() {
    if (pos_ == 4) {
      bump();
      buf_ = Philox4x64::block(key_, ctr_);
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  /// Uniform on [0,1), 53-bit resolution.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0,1]; safe as a log argument.
  double next_uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (fixed consumption: two words per pair).
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(next_uniform_pos()));
    const double th = kTwoPi * next_uniform();
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

 private:
  void bump() {
    if (++ctr_[0] == 0)
      if (++ctr_[1] == 0)
        if (++ctr_[2] == 0) ++ctr_[3];
  }

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> ctr_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> buf_{};
  int pos_ = 4;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace gcl
