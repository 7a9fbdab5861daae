#include "tasim/sim/task.hpp"

#include <stdexcept>

#include "tasim/sim/coins.hpp"

namespace tasim::sim {

CoinWord derive_word(CoinWord w, std::uint64_t n) { return splitmix64(w + n * 0x632be59bd9b4e019ULL); }

CoroutineMachine::CoroutineMachine(Pid pid, const Body& body) : proc_(pid), root_(body(proc_)) {
  resume(root_.handle());
}

void CoroutineMachine::resume(std::coroutine_handle<> h) {
  h.resume();
  auto root = root_.handle();
  if (root.done()) {
    done_ = true;
    if (root.promise().error) std::rethrow_exception(root.promise().error);
    outcome_ = *root.promise().result;
  }
}

PendingAction CoroutineMachine::peek() const {
  if (done_) throw std::logic_error("peek on a finished machine");
  if (need_coin_) return PendingAction{ActionKind::coin, 0, 0};
  return proc_.request_;
}

void CoroutineMachine::apply_coin(CoinWord w) {
  if (done_ || !need_coin_) throw std::logic_error("coin step out of turn");
  need_coin_ = false;
  std::uint64_t extra = 0;
  while (!done_ && proc_.request_.kind == ActionKind::coin) {
    proc_.coin_ = extra == 0 ? w : derive_word(w, extra);
    ++extra;
    resume(proc_.resume_);
  }
}

void CoroutineMachine::apply_shared(Value v, StepIndex index) {
  if (done_ || need_coin_ || proc_.request_.kind == ActionKind::coin)
    throw std::logic_error("shared step out of turn");
  proc_.value_ = v;
  proc_.last_step_ = index;
  for (auto [j, id] : proc_.awaiting_inv_) j->set_inv(id, index);
  proc_.awaiting_inv_.clear();
  resume(proc_.resume_);
  need_coin_ = !done_;
}

}  // namespace tasim::sim
