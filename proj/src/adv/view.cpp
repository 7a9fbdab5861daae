#include "tasim/adv/view.hpp"

#include <stdexcept>
#include <string>

namespace tasim::adv {

std::string_view to_string(AdversaryClass c) {
  switch (c) {
    case AdversaryClass::oblivious: return "oblivious";
    case AdversaryClass::location_oblivious: return "location-oblivious";
    case AdversaryClass::rw_oblivious: return "rw-oblivious";
    case AdversaryClass::strong_adaptive: return "strong-adaptive";
  }
  return "?";
}

MaskedAction mask_action(const PendingAction& a, AdversaryClass c) {
  MaskedAction m;
  if (a.kind == ActionKind::coin) {
    m.kind = MaskedAction::Kind::coin;
    return m;
  }
  const auto kind = a.kind == ActionKind::read ? MaskedAction::Kind::read : MaskedAction::Kind::write;
  switch (c) {
    case AdversaryClass::oblivious:
      throw std::logic_error("oblivious adversaries see no pending actions");
    case AdversaryClass::location_oblivious:
      m.kind = kind;
      if (a.kind == ActionKind::write) m.value = a.value;
      break;
    case AdversaryClass::rw_oblivious:
      m.kind = MaskedAction::Kind::shared;
      m.reg = a.reg;
      break;
    case AdversaryClass::strong_adaptive:
      m.kind = kind;
      m.reg = a.reg;
      if (a.kind == ActionKind::write) m.value = a.value;
      break;
  }
  return m;
}

void AdversaryView::require_adaptive(const char* what) const {
  if (cls_ == AdversaryClass::oblivious)
    throw std::logic_error(std::string("oblivious adversary may not query ") + what);
}

void AdversaryView::require_strong(const char* what) const {
  if (cls_ != AdversaryClass::strong_adaptive)
    throw std::logic_error(std::string(to_string(cls_)) + " adversary may not query " + what);
}

const std::vector<Pid>& AdversaryView::past_schedule() const {
  require_adaptive("the past schedule");
  return s_->slots;
}

const std::vector<Pid>& AdversaryView::running() const {
  require_adaptive("process status");
  return s_->running;
}

bool AdversaryView::finished(Pid p) const {
  require_adaptive("process status");
  return s_->exec.processes.at(p).status == sim::ProcessStatus::finished;
}

std::uint32_t AdversaryView::shared_steps(Pid p) const {
  require_adaptive("step counts");
  return s_->exec.processes.at(p).shared_steps;
}

std::optional<MaskedAction> AdversaryView::pending(Pid p) const {
  require_adaptive("pending actions");
  if (finished(p)) return std::nullopt;
  return mask_action((*s_->machines)[p]->peek(), cls_);
}

std::vector<CoinWord> AdversaryView::visible_coins(Pid p) const {
  require_adaptive("coins");
  const StepIndex horizon =
      cls_ == AdversaryClass::strong_adaptive ? ~StepIndex{0} : s_->last_shared.at(p);
  std::vector<CoinWord> out;
  for (const auto& e : s_->exec.events)
    if (e.pid == p && e.kind == sim::EventKind::coin && e.index < horizon) out.push_back(e.coin);
  return out;
}

const std::vector<sim::Event>& AdversaryView::events() const {
  require_strong("the full execution");
  return s_->exec.events;
}

std::optional<PendingAction> AdversaryView::full_pending(Pid p) const {
  require_strong("unmasked pending actions");
  if (s_->exec.processes.at(p).status == sim::ProcessStatus::finished) return std::nullopt;
  return (*s_->machines)[p]->peek();
}

ViewSnapshot mask_view(const sim::Execution& e,
                       std::span<const std::optional<PendingAction>> pending, AdversaryClass c) {
  ViewSnapshot v;
  v.slot_count = e.events.size() + e.noops.size();
  if (c == AdversaryClass::oblivious) return v;
  v.past_schedule = e.slots();
  const auto k = e.processes.size();
  std::vector<StepIndex> last_shared(k, kNoStep);
  for (const auto& ev : e.events)
    if (ev.kind == sim::EventKind::read || ev.kind == sim::EventKind::write)
      last_shared[ev.pid] = ev.index;
  v.visible_coins.assign(k, {});
  for (const auto& ev : e.events) {
    if (ev.kind != sim::EventKind::coin) continue;
    if (c == AdversaryClass::strong_adaptive || ev.index < last_shared[ev.pid])
      v.visible_coins[ev.pid].push_back(ev.coin);
  }
  for (const auto& a : pending)
    v.pending.push_back(a ? std::optional<MaskedAction>(mask_action(*a, c)) : std::nullopt);
  return v;
}

}  // namespace tasim::adv
