#include "parsearch/busy_wait.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

namespace parsearch {
namespace {

inline std::uint64_t spin_batch(std::uint64_t x, std::uint64_t iters) {
  for (std::uint64_t i = 0; i < iters; ++i) {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
  }
  return x;
}

volatile std::uint64_t g_spin_sink = 0x2545f4914f6cdd1dull;

double calibrate_iters_per_ms() {
  using clock = std::chrono::steady_clock;
  double best = 0;
  std::uint64_t iters = 1ull << 16;
  std::uint64_t x = g_spin_sink;
  int good_samples = 0;
  for (int round = 0; round < 48; ++round) {
    const auto t0 = clock::now();
    x = spin_batch(x, iters);
    const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    if (ms >= 8.0) {
      // Keep the fastest observed rate: slower samples were preempted.
      best = std::max(best, static_cast<double>(iters) / ms);
      if (++good_samples >= 3) break;
    } else {
      iters *= 2;
    }
  }
  g_spin_sink = x;
  return best > 0 ? best : 1e6;
}

}  // namespace

void busy_wait_ms(double ms) {
  if (ms <= 0) return;
  static const double iters_per_ms = calibrate_iters_per_ms();
  g_spin_sink = spin_batch(g_spin_sink, static_cast<std::uint64_t>(ms * iters_per_ms));
}

}  // namespace parsearch
