// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace linesift {

// Derives an independent stream seed from one root seed and a stream name.
// Every component that needs randomness pulls a named stream from the single
// run seed, so components can be re-run in isolation with identical draws.
std::uint64_t derive_stream_seed(std::uint64_t root, std::string_view stream);

// mt19937_64 plus hand-rolled draw helpers. The standard distributions are
// implementation-defined, so all sampling goes through these to keep outputs
// bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng stream(std::uint64_t root, std::string_view name) {
    return Rng(derive_stream_seed(root, name));
  }

  std::uint64_t next_u64() { return engine_(); }

  // uniform integer in [0, n), rejection-sampled
  std::uint64_t below(std::uint64_t n);

  // uniform integer in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // uniform double in [0, 1)
  double real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return real() < p; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  // Fisher-Yates, in place
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace linesift
