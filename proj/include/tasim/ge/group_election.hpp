#pragma once

#include <vector>

#include "tasim/sim/journal.hpp"
#include "tasim/sim/register_bank.hpp"
#include "tasim/sim/task.hpp"

namespace tasim::ge {

using sim::Journal;
using sim::Proc;
using sim::RegisterBank;
using sim::Task;

class GroupElection {
 public:
  virtual ~GroupElection() = default;
  // true: elected.
  virtual Task<bool> elect(Proc& p) = 0;
  virtual std::uint32_t register_count() const = 0;
};

// Each caller picks a level x with Pr(x=i) = 2^-i for i < ell and
// Pr(x=ell) = 2^-(ell-1), writes R[x] and is elected iff R[x+1] is unset.
class LocOblElection final : public GroupElection {
 public:
  LocOblElection(RegisterBank& bank, Journal& journal, std::uint32_t n);

  Task<bool> elect(Proc& p) override;
  std::uint32_t register_count() const override { return ell_ + 1; }

  std::uint32_t ell() const { return ell_; }
  RegisterId base() const { return base_; }  // R[1]

  // ceil(log2 n), at least 1.
  static std::uint32_t ell_for(std::uint32_t n);
  // Inverse CDF: the level is the first i < ell whose threshold
  // 2^64 - 2^(64-i) exceeds the word, else ell.
  static std::uint32_t level(CoinWord w, std::uint32_t ell);
  static double probability(std::uint32_t i, std::uint32_t ell);

 private:
  Journal* journal_;
  sim::ObjectId id_;
  std::uint32_t ell_;
  RegisterId base_;
  std::vector<CoinWord> thresholds_;
};

// Backward sifting over Up[1..ell], forward sifting over Down[ell-1..1].
// At register i a caller writes with probability q_i = 2^-(1.5^(i-1)),
// otherwise reads and loses on seeing 1.
class RwOblElection final : public GroupElection {
 public:
  RwOblElection(RegisterBank& bank, Journal& journal, std::uint32_t n);

  Task<bool> elect(Proc& p) override;
  std::uint32_t register_count() const override { return 2 * ell_ - 1; }

  std::uint32_t ell() const { return ell_; }

  // ceil(ln(log2 n) / ln 1.5), 1 for n < 4.
  static std::uint32_t ell_for(std::uint32_t n);
  static double q(std::uint32_t i);
  static bool heads(CoinWord w, double q);

 private:
  Journal* journal_;
  sim::ObjectId id_;
  std::uint32_t ell_;
  RegisterId up_;    // Up[1]
  RegisterId down_;  // Down[1]
  std::vector<double> q_;
};

// Everyone is elected without touching shared memory.
class TrivialElection final : public GroupElection {
 public:
  Task<bool> elect(Proc& p) override;
  std::uint32_t register_count() const override { return 0; }
};

}  // namespace tasim::ge
