#include "tasim/tas/instance.hpp"

#include <algorithm>
#include <stdexcept>

#include "tasim/sim/task.hpp"
#include "tasim/tas/algorithms.hpp"

namespace tasim::tas {

using sim::CoroutineMachine;
using sim::Execution;
using sim::Violations;

sim::Machines Instance::machines(std::uint32_t k) {
  if (k == 0 || k > n_)
    throw std::invalid_argument("need 1 <= k <= n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n_));
  sim::Machines out;
  out.reserve(k);
  for (Pid p = 0; p < k; ++p) out.push_back(machine(p));
  return out;
}

bool linearization_proxy(const Execution& e) {
  const auto& ps = e.processes;
  std::optional<Pid> winner;
  for (Pid p = 0; p < ps.size(); ++p)
    if (ps[p].status == sim::ProcessStatus::finished && ps[p].outcome == Outcome::zero) winner = p;
  if (!winner) return true;
  const auto inv = ps[*winner].invocation;
  for (Pid p = 0; p < ps.size(); ++p) {
    if (p == *winner || ps[p].status != sim::ProcessStatus::finished) continue;
    if (ps[p].response != kNoStep && ps[p].response < inv) return false;
  }
  return true;
}

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

class GeTasInstance final : public Instance {
 public:
  GeTasInstance(std::string id, std::uint32_t n, GeKind kind, const prim::Faults& f)
      : Instance(std::move(id), n), tas_(bank(), mutable_journal(), n, kind, f) {}

  Semantics semantics() const override { return Semantics::test_and_set; }
  bool doorway_fronted() const override { return true; }
  std::unique_ptr<sim::StepMachine> machine(Pid pid) override {
    return std::make_unique<CoroutineMachine>(
        pid, [this](sim::Proc& p) { return as_outcome(tas_.tas(p)); });
  }

  std::optional<std::uint32_t> jstar() const override {
    std::uint32_t j = 0;
    for (const auto& r : journal().records())
      if (r.object == tas_.object()) j = std::max(j, r.aux);
    return j;
  }

  void audit(const Execution&, Violations& out) const override { audit_rounds(journal(), tas_, out); }

  static void audit_rounds(const sim::Journal& j, const GeTas& g, Violations& out) {
    // m[i] = processes that began round i.
    std::vector<std::uint32_t> m(g.n() + 2, 0);
    for (const auto& r : j.records()) {
      if (r.object != g.object()) continue;
      if (r.aux > g.n()) out.push_back({"getas-round-overflow", "round " + str(r.aux) + " > n"});
      for (std::uint32_t i = 1; i <= std::min(r.aux, g.n() + 1); ++i) ++m[i];
    }
    for (std::uint32_t i = 1; i + 1 < m.size(); ++i)
      if (m[i] >= 1 && m[i + 1] >= m[i])
        out.push_back({"getas-monotone", "m[" + str(i + 1) + "]=" + str(m[i + 1]) + " >= m[" +
                                             str(i) + "]=" + str(m[i])});
  }

 private:
  GeTas tas_;
};

class RatRaceInstance final : public Instance {
 public:
  RatRaceInstance(std::string id, std::uint32_t n, const prim::Faults& f)
      : Instance(std::move(id), n), race_(bank(), mutable_journal(), n, true, f) {}

  Semantics semantics() const override { return Semantics::test_and_set; }
  bool doorway_fronted() const override { return true; }
  std::unique_ptr<sim::StepMachine> machine(Pid pid) override {
    return std::make_unique<CoroutineMachine>(
        pid, [this](sim::Proc& p) { return as_outcome(race_.tas(p)); });
  }
  std::optional<std::uint32_t> max_leaf_load() const override {
    const auto& v = race_.leaf_visits();
    return *std::max_element(v.begin(), v.end());
  }
  void audit(const Execution&, Violations& out) const override {
    if (race_.backup_fell_off()) out.push_back({"backup-fall-off", "a process fell off B"});
  }
  const RatRace& race() const { return race_; }

 private:
  RatRace race_;
};

class CombInstance final : public Instance {
 public:
  CombInstance(std::string id, std::uint32_t n, GeKind inner, const prim::Faults& f)
      : Instance(std::move(id), n), comb_(bank(), mutable_journal(), n, inner, f) {}

  Semantics semantics() const override { return Semantics::test_and_set; }
  bool doorway_fronted() const override { return true; }
  std::unique_ptr<sim::StepMachine> machine(Pid pid) override { return comb_.machine(pid); }

  std::optional<std::uint32_t> jstar() const override {
    std::uint32_t j = 0;
    for (const auto& r : journal().records())
      if (r.object == comb_.inner().object()) j = std::max(j, r.aux);
    return j;
  }

  void audit(const Execution&, Violations& out) const override {
    GeTasInstance::audit_rounds(journal(), comb_.inner(), out);
    if (comb_.race().backup_fell_off()) out.push_back({"backup-fall-off", "a process fell off B"});
    const auto& callers = comb_.top_callers();
    if (callers.size() > 2)
      out.push_back({"comb-top-access", str(callers.size()) + " processes reached the final tas"});
    for (Pid p : callers)
      if (comb_.inner_result(p) != Outcome::zero && comb_.race_result(p) != Outcome::zero)
        out.push_back({"comb-top-access", "process " + str(p) + " reached the final tas without winning"});
  }

 private:
  Comb comb_;
};

class ElectionInstance final : public Instance {
 public:
  ElectionInstance(std::string id, std::uint32_t n) : Instance(std::move(id), n) {
    const auto& name = this->id();
    if (name == "ge:locobl") {
      auto ge = std::make_unique<ge::LocOblElection>(bank(), mutable_journal(), n);
      layout_ = adv::LocOblLayout{ge->base(), ge->ell()};
      ge_ = std::move(ge);
    } else if (name == "ge:rwobl") {
      ge_ = std::make_unique<ge::RwOblElection>(bank(), mutable_journal(), n);
    } else {
      ge_ = std::make_unique<ge::TrivialElection>();
    }
  }

  Semantics semantics() const override { return Semantics::group_election; }
  std::unique_ptr<sim::StepMachine> machine(Pid pid) override {
    return std::make_unique<CoroutineMachine>(pid, [this](sim::Proc& p) {
      return as_outcome(ge_->elect(p), Outcome::win, Outcome::lose);
    });
  }
  const adv::LocOblLayout* locobl_layout() const override {
    return layout_ ? &*layout_ : nullptr;
  }

 private:
  std::unique_ptr<ge::GroupElection> ge_;
  std::optional<adv::LocOblLayout> layout_;
};

// Single primitives driven directly; process p uses sim id p + 1.
class PrimitiveInstance final : public Instance {
 public:
  PrimitiveInstance(std::string id, std::uint32_t n, const prim::Faults& f)
      : Instance(std::move(id), n) {
    const auto& name = this->id();
    if (name == "prim:doorway") {
      door_.emplace(bank(), mutable_journal());
    } else if (name == "prim:splitter") {
      splitter_.emplace(bank(), mutable_journal(), f);
    } else if (name == "prim:rsplitter") {
      rsplitter_.emplace(bank(), mutable_journal());
    } else if (name == "prim:tas2") {
      if (n > 2) throw std::invalid_argument("prim:tas2 supports n <= 2");
      tas2_.emplace(bank(), mutable_journal());
    } else if (name == "prim:tas3") {
      if (n > 3) throw std::invalid_argument("prim:tas3 supports n <= 3");
      tas3_.emplace(bank(), mutable_journal());
    } else {
      path_.emplace(bank(), mutable_journal(), n, f);
    }
  }

  Semantics semantics() const override {
    return tas2_ || tas3_ ? Semantics::test_and_set : Semantics::other;
  }

  std::unique_ptr<sim::StepMachine> machine(Pid pid) override {
    const int sim_id = static_cast<int>(pid) + 1;
    return std::make_unique<CoroutineMachine>(pid, [this, sim_id](sim::Proc& p) -> sim::Task<Outcome> {
      if (door_) return as_outcome(door_->enter(p), Outcome::pass, Outcome::deflect);
      if (splitter_) return splitter_->split(p);
      if (rsplitter_) return rsplitter_->split(p);
      if (tas2_) return as_outcome(tas2_->tas(p, sim_id));
      if (tas3_) return as_outcome(tas3_->tas(p, sim_id));
      return path_->enter(p);
    });
  }

 private:
  std::optional<prim::Doorway> door_;
  std::optional<prim::Splitter> splitter_;
  std::optional<prim::RSplitter> rsplitter_;
  std::optional<prim::Tas2> tas2_;
  std::optional<prim::Tas3> tas3_;
  std::optional<EliminationPath> path_;
};

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

const std::vector<std::string>& tas_algorithms() {
  static const std::vector<std::string> ids = {"tas:ge-locobl", "tas:ge-rwobl", "tas:ratrace",
                                               "tas:comb"};
  return ids;
}

std::vector<std::string> valid_algorithm_ids() {
  std::vector<std::string> ids = tas_algorithms();
  for (const char* s : {"ge:locobl", "ge:rwobl", "ge:trivial", "prim:doorway", "prim:splitter",
                        "prim:rsplitter", "prim:tas2", "prim:tas3", "prim:elimpath"})
    ids.emplace_back(s);
  return ids;
}

void validate_algorithm_id(const std::string& id) {
  const auto ids = valid_algorithm_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw std::invalid_argument("unknown algorithm '" + id + "'; valid: " + join(ids));
}

std::unique_ptr<Instance> make_instance(const std::string& id, std::uint32_t n,
                                        const prim::Faults& faults) {
  validate_algorithm_id(id);
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (id == "tas:ge-locobl") return std::make_unique<GeTasInstance>(id, n, GeKind::locobl, faults);
  if (id == "tas:ge-rwobl") return std::make_unique<GeTasInstance>(id, n, GeKind::rwobl, faults);
  if (id == "tas:ratrace") return std::make_unique<RatRaceInstance>(id, n, faults);
  if (id == "tas:comb") return std::make_unique<CombInstance>(id, n, GeKind::locobl, faults);
  if (id.rfind("ge:", 0) == 0) return std::make_unique<ElectionInstance>(id, n);
  return std::make_unique<PrimitiveInstance>(id, n, faults);
}

}  // namespace tasim::tas
