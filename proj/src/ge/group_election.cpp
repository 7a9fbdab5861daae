#include "tasim/ge/group_election.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace tasim::ge {

using sim::ObjectKind;

std::uint32_t LocOblElection::ell_for(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n <= 2) return 1;
  return static_cast<std::uint32_t>(std::bit_width(n - 1));
}

std::uint32_t LocOblElection::level(CoinWord w, std::uint32_t ell) {
  for (std::uint32_t i = 1; i < ell && i < 64; ++i) {
    const CoinWord threshold = ~CoinWord{0} - ((CoinWord{1} << (64 - i)) - 1);
    if (w < threshold) return i;
  }
  return ell;
}

double LocOblElection::probability(std::uint32_t i, std::uint32_t ell) {
  if (i == 0 || i > ell) return 0.0;
  if (i < ell) return std::ldexp(1.0, -static_cast<int>(i));
  return std::ldexp(1.0, -static_cast<int>(ell) + 1);
}

LocOblElection::LocOblElection(RegisterBank& bank, Journal& journal, std::uint32_t n)
    : journal_(&journal),
      id_(journal.add_object(ObjectKind::ge_locobl, ell_for(n))),
      ell_(ell_for(n)),
      base_(bank.allocate("ge-locobl.R", ell_ + 1, 0)) {}

Task<bool> LocOblElection::elect(Proc& p) {
  const auto rec = p.open(*journal_, id_);
  const CoinWord w = co_await p.coin();
  const std::uint32_t x = level(w, ell_);
  journal_->set_aux(rec, x);
  co_await p.write(base_ + (x - 1), 1);
  const Value above = co_await p.read(base_ + x);
  const bool won = above == 0;
  journal_->end(rec, p.last_step(), won ? Outcome::win : Outcome::lose);
  co_return won;
}

std::uint32_t RwOblElection::ell_for(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n < 4) return 1;
  const double v = std::log(std::log2(static_cast<double>(n))) / std::log(1.5);
  return static_cast<std::uint32_t>(std::ceil(v - 1e-12));
}

double RwOblElection::q(std::uint32_t i) { return std::exp2(-std::pow(1.5, double(i) - 1.0)); }

bool RwOblElection::heads(CoinWord w, double q) {
  return static_cast<double>(w >> 11) * 0x1p-53 < q;
}

RwOblElection::RwOblElection(RegisterBank& bank, Journal& journal, std::uint32_t n)
    : journal_(&journal),
      id_(journal.add_object(ObjectKind::ge_rwobl, ell_for(n))),
      ell_(ell_for(n)),
      up_(bank.allocate("ge-rwobl.Up", ell_, 0)),
      down_(bank.allocate("ge-rwobl.Down", ell_ - 1, 0)) {
  for (std::uint32_t i = 1; i <= ell_; ++i) q_.push_back(q(i));
}

Task<bool> RwOblElection::elect(Proc& p) {
  const auto rec = p.open(*journal_, id_);
  const auto lose = [&] { journal_->end(rec, p.last_step(), Outcome::lose); };
  std::uint32_t i = 0;
  for (;;) {
    ++i;
    const CoinWord w = co_await p.coin();
    if (heads(w, q_[i - 1])) {
      co_await p.write(up_ + (i - 1), 1);
      if (i == ell_) break;
    } else {
      const Value v = co_await p.read(up_ + (i - 1));
      if (v == 1) {
        lose();
        co_return false;
      }
      break;
    }
  }
  journal_->set_aux(rec, i);
  while (i > 1) {
    --i;
    const CoinWord w = co_await p.coin();
    if (heads(w, q_[i - 1])) {
      co_await p.write(down_ + (i - 1), 1);
    } else {
      const Value v = co_await p.read(down_ + (i - 1));
      if (v == 1) {
        lose();
        co_return false;
      }
    }
  }
  journal_->end(rec, p.last_step(), Outcome::win);
  co_return true;
}

Task<bool> TrivialElection::elect(Proc&) { co_return true; }

}  // namespace tasim::ge
