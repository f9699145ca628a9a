#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace cgolab {

/// Counter-based random stream. Every Monte-Carlo cell derives its own
/// stream from (seed, label, index), so serial and parallel sweeps draw
/// identical numbers. The raw generator is mt19937_64 (output sequence is
/// pinned by the standard); uniform/normal conversions are done here rather
/// than with std distributions, which are implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key), gen_(key) {}

  /// Child stream for a labelled sub-task; independent of draw order here.
  RngStream derive(std::string_view label, std::uint64_t index) const;

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (pairs cached).
  double normal();

  /// Standard complex normal: re and im each N(0, 1).
  std::complex<double> cnormal() {
    double a = normal();
    double b = normal();
    return {a, b};
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_ = 0;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// FNV-1a over bytes; used for stream derivation and config hashing.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ull);

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

}  // namespace cgolab
