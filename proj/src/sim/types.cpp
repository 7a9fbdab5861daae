#include "tasim/sim/journal.hpp"
#include "tasim/sim/types.hpp"

namespace tasim {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::none: return "none";
    case Outcome::zero: return "0";
    case Outcome::one: return "1";
    case Outcome::win: return "win";
    case Outcome::lose: return "lose";
    case Outcome::stop: return "stop";
    case Outcome::left: return "left";
    case Outcome::right: return "right";
    case Outcome::fall_off: return "fall-off";
    case Outcome::pass: return "pass";
    case Outcome::deflect: return "deflect";
  }
  return "?";
}

namespace sim {

std::string_view to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::doorway: return "doorway";
    case ObjectKind::splitter: return "splitter";
    case ObjectKind::rsplitter: return "rsplitter";
    case ObjectKind::tas2: return "tas2";
    case ObjectKind::tas3: return "tas3";
    case ObjectKind::ge_locobl: return "ge-locobl";
    case ObjectKind::ge_rwobl: return "ge-rwobl";
    case ObjectKind::elim_path: return "elim-path";
    case ObjectKind::ge_tas: return "ge-tas";
    case ObjectKind::ratrace: return "ratrace";
  }
  return "?";
}

}  // namespace sim
}  // namespace tasim
