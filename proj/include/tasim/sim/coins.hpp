#pragma once

#include <stdexcept>
#include <vector>

#include "tasim/sim/types.hpp"

namespace tasim::sim {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based hash of a key tuple; each component is folded in with a
// distinct odd multiplier so permuted tuples differ.
constexpr std::uint64_t hash_key(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0,
                                 std::uint64_t d = 0) {
  std::uint64_t h = splitmix64(a);
  h = splitmix64(h ^ (b * 0xd6e8feb86659fd93ULL));
  h = splitmix64(h ^ (c * 0xa0761d6478bd642fULL));
  h = splitmix64(h ^ (d * 0xe7037ed1a0b428dbULL));
  return h;
}

class CoinSource {
 public:
  virtual ~CoinSource() = default;
  // `ordinal` counts the coin steps of `pid`, from 0.
  virtual CoinWord draw(Pid pid, std::uint64_t ordinal) = 0;
};

// word = hash_key(seed, trial, pid, ordinal); independent of scheduling.
class SplitCoins final : public CoinSource {
 public:
  SplitCoins(std::uint64_t seed, std::uint64_t trial) : seed_(seed), trial_(trial) {}
  CoinWord draw(Pid pid, std::uint64_t ordinal) override {
    return hash_key(seed_, trial_, pid, ordinal);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t trial_;
};

class CoinVectorExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VectorCoins final : public CoinSource {
 public:
  explicit VectorCoins(std::vector<std::vector<CoinWord>> words) : words_(std::move(words)) {}
  CoinWord draw(Pid pid, std::uint64_t ordinal) override;

 private:
  std::vector<std::vector<CoinWord>> words_;
};

}  // namespace tasim::sim
