#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace offsetdeg {

/// Index into the variable universe of one computation.
using VarId = std::uint32_t;

// Canonical universe prefix. User parameters (a, b, c, r, ...) follow in
// first-appearance order.
inline constexpr VarId kY1 = 0;
inline constexpr VarId kY2 = 1;
inline constexpr VarId kY3 = 2;
inline constexpr VarId kD = 3;
inline constexpr VarId kK = 4;
inline constexpr VarId kX1 = 5;
inline constexpr VarId kX2 = 6;
inline constexpr VarId kT = 7;
inline constexpr VarId kFirstParam = 8;
inline constexpr VarId kMaxVars = 64;

/// A set of variables, as a bitmask over the universe.
struct VarSet {
  std::uint64_t bits = 0;

  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<VarId> vs) {
    for (VarId v : vs) bits |= (std::uint64_t{1} << v);
  }
  constexpr bool contains(VarId v) const {
    return (bits >> v) & 1;
  }
  constexpr void insert(VarId v) { bits |= (std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits == 0; }
  constexpr VarSet operator|(VarSet o) const {
    VarSet r;
    r.bits = bits | o.bits;
    return r;
  }
  constexpr bool operator==(const VarSet&) const = default;
  std::vector<VarId> to_vector() const {
    std::vector<VarId> out;
    for (VarId v = 0; v < kMaxVars; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }
};

inline constexpr VarSet kAffineVars{kY1, kY2};
inline constexpr VarSet kProjectiveVars{kY1, kY2, kY3};
inline constexpr VarSet kAuxVars{kD, kK};
inline constexpr VarSet kOffsetVars{kX1, kX2};

/// Name <-> VarId registry for one computation. The first eight slots are
/// reserved formula variables; intern() appends user parameters.
class VarTable {
 public:
  VarTable();

  /// Id for `name`, appending it as a parameter if new. Throws
  /// std::invalid_argument when the universe is full.
  VarId intern(const std::string& name);

  /// Id of an existing name, or kMaxVars when unknown.
  VarId lookup(const std::string& name) const;

  const std::string& name(VarId v) const { return names_.at(v); }
  std::size_t size() const { return names_.size(); }

  /// True for names that may not be used as user parameters.
  static bool is_reserved(const std::string& name);

 private:
  std::vector<std::string> names_;
};

}  // namespace offsetdeg
