#include "offsetdeg/vartable.hpp"

#include <algorithm>
#include <array>

namespace offsetdeg {

namespace {
constexpr std::array<const char*, 8> kReservedUniverse = {
    "y1", "y2", "y3", "d", "k", "x1", "x2", "t"};
}

VarTable::VarTable() {
  for (const char* n : kReservedUniverse) names_.emplace_back(n);
}

VarId VarTable::intern(const std::string& name) {
  VarId v = lookup(name);
  if (v != kMaxVars) return v;
  if (names_.size() >= kMaxVars)
    throw std::invalid_argument("variable universe is full");
  names_.push_back(name);
  return static_cast<VarId>(names_.size() - 1);
}

VarId VarTable::lookup(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return kMaxVars;
  return static_cast<VarId>(it - names_.begin());
}

bool VarTable::is_reserved(const std::string& name) {
  if (name == "u") return true;  // reserved for the offset system, unused here
  return std::any_of(kReservedUniverse.begin(), kReservedUniverse.end(),
                     [&](const char* r) { return name == r; });
}

}  // namespace offsetdeg
