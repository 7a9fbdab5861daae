#include "tasim/adv/adversaries.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tasim/sim/coins.hpp"

namespace tasim::adv {

Schedule::Schedule(std::uint32_t k) : k_(k) {
  if (k == 0) throw std::invalid_argument("schedule needs k >= 1");
}

namespace {

class RoundRobin final : public Schedule {
 public:
  using Schedule::Schedule;
  Pid at(std::uint64_t i) const override { return static_cast<Pid>(i % k()); }
};

class Sequential final : public Schedule {
 public:
  Sequential(std::uint32_t k, std::uint64_t block) : Schedule(k), block_(block) {
    if (block == 0) throw std::invalid_argument("block must be positive");
  }
  Pid at(std::uint64_t i) const override { return static_cast<Pid>((i / block_) % k()); }

 private:
  std::uint64_t block_;
};

class RandomSchedule final : public Schedule {
 public:
  RandomSchedule(std::uint32_t k, std::uint64_t seed) : Schedule(k), seed_(seed) {}
  Pid at(std::uint64_t i) const override {
    return static_cast<Pid>(sim::hash_key(seed_, i, 0x5c4ed) % k());
  }

 private:
  std::uint64_t seed_;
};

class Cyclic final : public Schedule {
 public:
  explicit Cyclic(std::vector<Pid> pids)
      : Schedule(pids.empty() ? 0 : *std::max_element(pids.begin(), pids.end()) + 1),
        pids_(std::move(pids)) {}
  Pid at(std::uint64_t i) const override { return pids_[i % pids_.size()]; }

 private:
  std::vector<Pid> pids_;
};

// Uniform over unfinished processes; the draw is a hash of the slot index.
class RandomAdaptive final : public Adversary {
 public:
  RandomAdaptive(AdversaryClass c, std::uint64_t seed) : cls_(c), seed_(seed) {}
  AdversaryClass adversary_class() const override { return cls_; }
  std::optional<Pid> next(const AdversaryView& view) override {
    const auto& running = view.running();
    if (running.empty()) return Pid{0};
    return running[sim::hash_key(seed_, view.slot_count(), 0xada) % running.size()];
  }

 private:
  AdversaryClass cls_;
  std::uint64_t seed_;
};

class RoundRobinAdaptive final : public Adversary {
 public:
  explicit RoundRobinAdaptive(AdversaryClass c) : cls_(c) {}
  AdversaryClass adversary_class() const override { return cls_; }
  std::optional<Pid> next(const AdversaryView& view) override {
    const auto k = static_cast<Pid>(view.process_count());
    for (Pid tries = 0; tries < k; ++tries) {
      const Pid p = cursor_;
      cursor_ = (cursor_ + 1) % k;
      if (!view.finished(p)) return p;
    }
    return cursor_;
  }

 private:
  AdversaryClass cls_;
  Pid cursor_ = 0;
};

// Always runs the unfinished process with the smallest key, ties by pid.
// A process's key depends only on its own state, so after each decision
// only the process just scheduled is re-keyed.
class PriorityAdversary : public Adversary {
 public:
  explicit PriorityAdversary(AdversaryClass c) : cls_(c) {}
  AdversaryClass adversary_class() const override { return cls_; }

  std::optional<Pid> next(const AdversaryView& view) override {
    if (!init_) {
      const auto k = static_cast<Pid>(view.process_count());
      keys_.assign(k, 0);
      for (Pid p = 0; p < k; ++p) insert(view, p);
      init_ = true;
    } else if (last_) {
      order_.erase({keys_[*last_], *last_});
      insert(view, *last_);
    }
    if (order_.empty()) return Pid{0};
    last_ = order_.begin()->second;
    return last_;
  }

 protected:
  virtual std::int64_t key(const AdversaryView& view, Pid p) = 0;

 private:
  void insert(const AdversaryView& view, Pid p) {
    if (view.finished(p)) return;
    keys_[p] = key(view, p);
    order_.insert({keys_[p], p});
  }

  AdversaryClass cls_;
  bool init_ = false;
  std::optional<Pid> last_;
  std::vector<std::int64_t> keys_;
  std::set<std::pair<std::int64_t, Pid>> order_;
};

enum class Rule { laggard, writers_first, readers_first, low_register, high_register };

class RuleAdversary final : public PriorityAdversary {
 public:
  RuleAdversary(AdversaryClass c, Rule r) : PriorityAdversary(c), rule_(r) {}

 protected:
  std::int64_t key(const AdversaryView& view, Pid p) override {
    if (rule_ == Rule::laggard) return view.shared_steps(p);
    const MaskedAction a = *view.pending(p);
    using K = MaskedAction::Kind;
    constexpr std::int64_t kCoinFirst = -(std::int64_t{1} << 40);
    switch (rule_) {
      case Rule::writers_first: return a.kind == K::write ? 0 : a.kind == K::coin ? 1 : 2;
      case Rule::readers_first: return a.kind == K::read ? 0 : a.kind == K::coin ? 1 : 2;
      case Rule::low_register: return a.kind == K::coin ? kCoinFirst : std::int64_t{*a.reg};
      case Rule::high_register: return a.kind == K::coin ? kCoinFirst : -std::int64_t{*a.reg};
      case Rule::laggard: break;
    }
    return 0;
  }

 private:
  Rule rule_;
};

class AscendingIndexAttack final : public PriorityAdversary {
 public:
  explicit AscendingIndexAttack(LocOblLayout layout)
      : PriorityAdversary(AdversaryClass::strong_adaptive), layout_(layout) {}

 protected:
  std::int64_t key(const AdversaryView& view, Pid p) override {
    if (level_.size() < view.process_count()) level_.resize(view.process_count(), 0);
    const auto a = *view.full_pending(p);
    if (a.kind != ActionKind::coin) {
      if (a.reg < layout_.base || a.reg > layout_.base + layout_.ell)
        throw std::logic_error("ascending attack applies only to a location-oblivious group election");
      if (level_[p] == 0) {
        if (a.kind != ActionKind::write || a.reg == layout_.base + layout_.ell)
          throw std::logic_error("ascending attack applies only to a location-oblivious group election");
        level_[p] = a.reg - layout_.base + 1;
      }
    }
    if (level_[p] == 0) return p;
    return (std::int64_t{1} << 50) + (std::int64_t{level_[p]} << 24) + p;
  }

 private:
  LocOblLayout layout_;
  std::vector<std::uint32_t> level_;
};

const std::vector<std::pair<std::string, Rule>>& rule_names() {
  static const std::vector<std::pair<std::string, Rule>> names = {
      {"laggard", Rule::laggard},
      {"writers-first", Rule::writers_first},
      {"readers-first", Rule::readers_first},
      {"lowreg", Rule::low_register},
      {"highreg", Rule::high_register},
  };
  return names;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

std::shared_ptr<const Schedule> round_robin(std::uint32_t k) {
  return std::make_shared<RoundRobin>(k);
}
std::shared_ptr<const Schedule> sequential(std::uint32_t k, std::uint64_t block) {
  return std::make_shared<Sequential>(k, block);
}
std::shared_ptr<const Schedule> random_schedule(std::uint32_t k, std::uint64_t seed) {
  return std::make_shared<RandomSchedule>(k, seed);
}
std::shared_ptr<const Schedule> cyclic(std::vector<Pid> pids) {
  if (pids.empty()) throw std::invalid_argument("schedule must be nonempty");
  return std::make_shared<Cyclic>(std::move(pids));
}

std::vector<Pid> prefix(const Schedule& s, std::size_t len) {
  std::vector<Pid> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = s.at(i);
  return out;
}

std::unique_ptr<Adversary> oblivious_from_schedule(std::vector<Pid> schedule) {
  return std::make_unique<ObliviousAdversary>(cyclic(std::move(schedule)));
}

std::unique_ptr<Adversary> ascending_index_attack(LocOblLayout layout) {
  return std::make_unique<AscendingIndexAttack>(layout);
}

std::vector<std::string> strategies_for(AdversaryClass c) {
  switch (c) {
    case AdversaryClass::oblivious: return {"roundrobin", "random", "sequential"};
    case AdversaryClass::location_oblivious:
      return {"random", "roundrobin", "laggard", "writers-first", "readers-first"};
    case AdversaryClass::rw_oblivious:
      return {"random", "roundrobin", "laggard", "lowreg", "highreg"};
    case AdversaryClass::strong_adaptive:
      return {"random", "roundrobin", "laggard", "writers-first", "readers-first", "lowreg",
              "highreg"};
  }
  return {};
}

std::unique_ptr<Adversary> adaptive(AdversaryClass c, const std::string& strategy,
                                    std::uint64_t seed) {
  const auto allowed = strategies_for(c);
  if (c == AdversaryClass::oblivious ||
      std::find(allowed.begin(), allowed.end(), strategy) == allowed.end())
    throw std::invalid_argument("unknown " + std::string(to_string(c)) + " strategy '" + strategy +
                                "'; valid: " + join(allowed));
  if (strategy == "random") return std::make_unique<RandomAdaptive>(c, seed);
  if (strategy == "roundrobin") return std::make_unique<RoundRobinAdaptive>(c);
  for (const auto& [name, rule] : rule_names())
    if (name == strategy) return std::make_unique<RuleAdversary>(c, rule);
  throw std::invalid_argument("unknown strategy " + strategy);
}

std::vector<std::string> valid_adversary_ids() {
  std::vector<std::string> ids;
  for (const auto& s : strategies_for(AdversaryClass::oblivious)) ids.push_back("oblivious:" + s);
  for (const auto& s : strategies_for(AdversaryClass::location_oblivious))
    ids.push_back("locobl:" + s);
  for (const auto& s : strategies_for(AdversaryClass::rw_oblivious)) ids.push_back("rwobl:" + s);
  ids.push_back("strong:ascending");
  for (const auto& s : strategies_for(AdversaryClass::strong_adaptive))
    ids.push_back("strong:full:" + s);
  return ids;
}

void validate_adversary_id(const std::string& id) {
  const auto ids = valid_adversary_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw std::invalid_argument("unknown adversary '" + id + "'; valid: " + join(ids));
}

std::unique_ptr<Adversary> make_adversary(const std::string& id, const AdversaryContext& ctx) {
  validate_adversary_id(id);
  const std::uint64_t seed = sim::hash_key(ctx.seed, ctx.trial, 0xad7e);
  const auto tail = [&](std::size_t n) { return id.substr(n); };
  if (id.rfind("oblivious:", 0) == 0) {
    const auto s = tail(10);
    if (s == "roundrobin") return std::make_unique<ObliviousAdversary>(round_robin(ctx.k));
    if (s == "sequential") return std::make_unique<ObliviousAdversary>(sequential(ctx.k));
    return std::make_unique<ObliviousAdversary>(random_schedule(ctx.k, seed));
  }
  if (id.rfind("locobl:", 0) == 0) return adaptive(AdversaryClass::location_oblivious, tail(7), seed);
  if (id.rfind("rwobl:", 0) == 0) return adaptive(AdversaryClass::rw_oblivious, tail(6), seed);
  if (id == "strong:ascending") {
    if (!ctx.locobl)
      throw std::invalid_argument("strong:ascending requires the ge:locobl algorithm");
    return ascending_index_attack(*ctx.locobl);
  }
  return adaptive(AdversaryClass::strong_adaptive, tail(12), seed);
}

std::vector<std::string> expand_battery(const std::string& name) {
  if (name == "locobl" || name == "locobl:battery")
    return {"locobl:random", "locobl:laggard", "locobl:writers-first", "locobl:readers-first"};
  if (name == "rwobl" || name == "rwobl:battery")
    return {"rwobl:random", "rwobl:laggard", "rwobl:lowreg", "rwobl:highreg"};
  validate_adversary_id(name);
  return {name};
}

}  // namespace tasim::adv
