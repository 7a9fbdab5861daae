#pragma once

#include <coroutine>
#include <exception>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tasim/sim/journal.hpp"
#include "tasim/sim/step_machine.hpp"

namespace tasim::sim {

// Lazily started coroutine returning T. Awaiting it runs the body until
// it either finishes or suspends on a Proc step.
template <class T>
class [[nodiscard]] Task {
 public:
  struct promise_type;
  using handle_type = std::coroutine_handle<promise_type>;

  struct promise_type {
    std::optional<T> result;
    std::exception_ptr error;
    std::coroutine_handle<> continuation = std::noop_coroutine();

    Task get_return_object() { return Task{handle_type::from_promise(*this)}; }
    std::suspend_always initial_suspend() noexcept { return {}; }

    struct FinalAwaiter {
      bool await_ready() noexcept { return false; }
      std::coroutine_handle<> await_suspend(handle_type h) noexcept {
        return h.promise().continuation;
      }
      void await_resume() noexcept {}
    };
    FinalAwaiter final_suspend() noexcept { return {}; }

    void return_value(T v) { result = std::move(v); }
    void unhandled_exception() { error = std::current_exception(); }
  };

  Task(Task&& o) noexcept : h_(std::exchange(o.h_, {})) {}
  Task& operator=(Task&& o) noexcept {
    if (this != &o) {
      if (h_) h_.destroy();
      h_ = std::exchange(o.h_, {});
    }
    return *this;
  }
  Task(const Task&) = delete;
  Task& operator=(const Task&) = delete;
  ~Task() {
    if (h_) h_.destroy();
  }

  bool await_ready() const noexcept { return false; }
  std::coroutine_handle<> await_suspend(std::coroutine_handle<> caller) noexcept {
    h_.promise().continuation = caller;
    return h_;
  }
  T await_resume() {
    if (h_.promise().error) std::rethrow_exception(h_.promise().error);
    return std::move(*h_.promise().result);
  }

  handle_type handle() const { return h_; }

 private:
  explicit Task(handle_type h) : h_(h) {}
  handle_type h_;
};

class CoroutineMachine;

// The process context seen by protocol code. Each co_await on read, write
// or coin is one simulator step.
class Proc {
 public:
  struct Flags {
    bool in_split = false;  // inside a split() that has taken a shared step
    bool stopped = false;   // some split() returned stop
  };

  explicit Proc(Pid pid) : pid_(pid) {}
  Proc(const Proc&) = delete;
  Proc& operator=(const Proc&) = delete;

  Pid pid() const { return pid_; }
  // Index of the most recent shared step applied to this process.
  StepIndex last_step() const { return last_step_; }
  Flags& flags() { return flags_; }
  const Flags& flags() const { return flags_; }

  struct SharedAwaiter {
    Proc* p;
    PendingAction action;
    bool await_ready() const noexcept { return false; }
    void await_suspend(std::coroutine_handle<> h) noexcept {
      p->request_ = action;
      p->resume_ = h;
    }
    Value await_resume() const noexcept { return p->value_; }
  };

  struct CoinAwaiter {
    Proc* p;
    bool await_ready() const noexcept { return false; }
    void await_suspend(std::coroutine_handle<> h) noexcept {
      p->request_ = PendingAction{ActionKind::coin, 0, 0};
      p->resume_ = h;
    }
    CoinWord await_resume() const noexcept { return p->coin_; }
  };

  // Opens a journal record whose inv is the index of this process's next
  // shared step.
  Journal::RecordId open(Journal& j, ObjectId obj) {
    const auto id = j.begin(obj, pid_, kNoStep);
    awaiting_inv_.push_back({&j, id});
    return id;
  }

  SharedAwaiter read(RegisterId r) { return {this, {ActionKind::read, r, 0}}; }
  SharedAwaiter write(RegisterId r, Value v) { return {this, {ActionKind::write, r, v}}; }
  CoinAwaiter coin() { return {this}; }

 private:
  friend class CoroutineMachine;

  Pid pid_;
  StepIndex last_step_ = kNoStep;
  PendingAction request_{};
  std::coroutine_handle<> resume_;
  Value value_ = 0;
  CoinWord coin_ = 0;
  Flags flags_;
  std::vector<std::pair<Journal*, Journal::RecordId>> awaiting_inv_;
};

// Wraps a protocol coroutine into a StepMachine and enforces the
// coin/shared alternation: every shared step is preceded by exactly one
// coin step. Where the protocol does not flip, the coin step is a dummy.
// If the protocol asks for several coins in a row, only the first uses
// the engine's word; the rest are derived from it.
class CoroutineMachine final : public StepMachine {
 public:
  using Body = std::function<Task<Outcome>(Proc&)>;

  CoroutineMachine(Pid pid, const Body& body);
  CoroutineMachine(const CoroutineMachine&) = delete;
  CoroutineMachine& operator=(const CoroutineMachine&) = delete;

  PendingAction peek() const override;
  void apply_coin(CoinWord w) override;
  void apply_shared(Value v, StepIndex index) override;
  bool finished() const override { return done_; }
  Outcome outcome() const override { return outcome_; }

  Proc& proc() { return proc_; }
  const Proc& proc() const { return proc_; }

 private:
  void resume(std::coroutine_handle<> h);

  Proc proc_;
  Task<Outcome> root_;
  bool need_coin_ = true;
  bool done_ = false;
  Outcome outcome_ = Outcome::none;
};

CoinWord derive_word(CoinWord w, std::uint64_t n);

}  // namespace tasim::sim
