#include "feynkit/mc.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace feynkit {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr std::uint64_t kChunkSize = 1u << 16;

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& s : s_) s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_gaussian_;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_gaussian_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

std::uint64_t Rng::mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (0x632be59bd9b4e019ULL + b);
  return splitmix64(s);
}

IntegralEstimate run_monte_carlo(const McConfig& cfg,
                                 const std::function<double(Rng&)>& sample) {
  if (cfg.samples == 0) throw std::invalid_argument("run_monte_carlo: zero sample budget");

  double sum = 0.0, sumsq = 0.0;
  if (cfg.deterministic || cfg.samples <= kChunkSize) {
    Rng rng(cfg.seed);
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
      const double v = sample(rng);
      sum += v;
      sumsq += v * v;
    }
  } else {
    const std::uint64_t nchunks = (cfg.samples + kChunkSize - 1) / kChunkSize;
    std::vector<double> csum(nchunks, 0.0), csumsq(nchunks, 0.0);
    const unsigned nthreads = std::max(1u, cfg.threads);

    auto work = [&](unsigned tid) {
      for (std::uint64_t c = tid; c < nchunks; c += nthreads) {
        Rng rng(Rng::mix(cfg.seed, c));
        const std::uint64_t begin = c * kChunkSize;
        const std::uint64_t end = std::min(begin + kChunkSize, cfg.samples);
        double s = 0.0, s2 = 0.0;
        for (std::uint64_t i = begin; i < end; ++i) {
          const double v = sample(rng);
          s += v;
          s2 += v * v;
        }
        csum[c] = s;
        csumsq[c] = s2;
      }
    };
    if (nthreads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nthreads);
      for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (std::uint64_t c = 0; c < nchunks; ++c) {
      sum += csum[c];
      sumsq += csumsq[c];
    }
  }

  const double n = static_cast<double>(cfg.samples);
  IntegralEstimate est;
  est.value = sum / n;
  est.samples = cfg.samples;
  est.seed = cfg.seed;
  if (cfg.samples > 1) {
    double var = (sumsq - n * est.value * est.value) / (n - 1.0);
    if (var < 0.0) var = 0.0;
    est.std_error = std::max(std::sqrt(var / n), std::numeric_limits<double>::min());
  }
  return est;
}

}  // namespace feynkit
