#include "tasim/harness/lower_bound.hpp"

#include <stdexcept>

#include "tasim/sim/coins.hpp"
#include "tasim/sim/engine.hpp"
#include "tasim/tas/instance.hpp"

namespace tasim::harness {

namespace {

void check_t(std::uint32_t t) {
  if (t < 1 || t > 8) throw std::out_of_range("t must be in 1..8");
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::uint64_t sigma_size(std::uint32_t t) {
  check_t(t);
  std::uint64_t total = 2;
  for (std::uint32_t k = t + 1; k <= 2 * t - 1; ++k) total += 2 * choose(k, t);
  return total;
}

std::vector<std::vector<Pid>> enum_sigma(std::uint32_t t) {
  check_t(t);
  std::vector<std::vector<Pid>> out;
  for (std::uint32_t k = t; k <= 2 * t - 1; ++k) {
    for (Pid owner = 0; owner < 2; ++owner) {
      // Masks over k pair positions with exactly t bits set for `owner`.
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != t) continue;
        std::vector<Pid> s;
        s.reserve(2 * k);
        for (std::uint32_t i = 0; i < k; ++i) {
          const Pid p = (mask >> i) & 1 ? owner : 1 - owner;
          s.push_back(p);
          s.push_back(p);
        }
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

bool in_sigma(const std::vector<Pid>& s, std::uint32_t t) {
  if (s.size() % 2 != 0) return false;
  const auto k = s.size() / 2;
  if (k < t || k > 2 * t - 1) return false;
  std::uint32_t count[2] = {0, 0};
  for (std::size_t i = 0; i < k; ++i) {
    if (s[2 * i] != s[2 * i + 1] || s[2 * i] > 1) return false;
    ++count[s[2 * i]];
  }
  return count[0] == t || count[1] == t;
}

bool reaches_t(const std::vector<Pid>& schedule, const std::vector<CoinWord>& w0,
               const std::vector<CoinWord>& w1, std::uint32_t t, const std::string& algorithm) {
  auto inst = tas::make_instance(algorithm, 2);
  const auto machines = inst->machines(2);
  const auto e = sim::replay(schedule, {w0, w1}, machines, inst->bank());
  for (const auto& p : e.processes)
    if (p.shared_steps >= t) return true;
  return false;
}

bool verify_exists_schedule(const std::vector<CoinWord>& w0, const std::vector<CoinWord>& w1,
                            std::uint32_t t, const std::string& algorithm) {
  if (w0.size() < t || w1.size() < t) throw std::invalid_argument("coin vectors shorter than t");
  for (const auto& s : enum_sigma(t))
    if (reaches_t(s, w0, w1, t, algorithm)) return true;
  return false;
}

LowerBoundReport lower_bound(std::uint32_t t, std::uint64_t samples, std::uint64_t seed,
                             const std::string& algorithm) {
  const auto family = enum_sigma(t);
  LowerBoundReport r;
  r.t = t;
  r.samples = samples;
  r.sigma_size = family.size();
  std::vector<std::uint64_t> hits(family.size(), 0);
  std::uint64_t exists = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<CoinWord> w0(t), w1(t);
    for (std::uint32_t i = 0; i < t; ++i) {
      w0[i] = sim::hash_key(seed, s, 0, i);
      w1[i] = sim::hash_key(seed, s, 1, i);
    }
    bool any = false;
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (reaches_t(family[j], w0, w1, t, algorithm)) {
        ++hits[j];
        any = true;
      }
    }
    exists += any;
  }
  std::size_t best = 0;
  for (std::size_t j = 1; j < family.size(); ++j)
    if (hits[j] > hits[best]) best = j;
  const double denom = samples ? static_cast<double>(samples) : 1.0;
  r.exists_rate = static_cast<double>(exists) / denom;
  r.best_probability = static_cast<double>(hits[best]) / denom;
  r.best_schedule = family[best];
  return r;
}

}  // namespace tasim::harness
