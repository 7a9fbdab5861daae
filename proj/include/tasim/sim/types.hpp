#pragma once

#include <cstdint>
#include <string_view>

namespace tasim {

using Pid = std::uint32_t;
using RegisterId = std::uint32_t;
using Value = std::int64_t;
using CoinWord = std::uint64_t;
// 1-based step ordinal; 0 means "no step yet".
using StepIndex = std::uint64_t;

inline constexpr StepIndex kNoStep = 0;

enum class Outcome : std::uint8_t {
  none,
  zero,
  one,
  win,
  lose,
  stop,
  left,
  right,
  fall_off,
  pass,
  deflect,
};

std::string_view to_string(Outcome o);

enum class ActionKind : std::uint8_t { coin, read, write };

struct PendingAction {
  ActionKind kind = ActionKind::coin;
  RegisterId reg = 0;
  Value value = 0;  // write only

  friend bool operator==(const PendingAction&, const PendingAction&) = default;
};

}  // namespace tasim
