#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superpair/superlinear/matrix.hpp"

namespace superpair {

/// A basis tuple at which an identity failed, with both sides evaluated there.
struct Witness {
  std::vector<std::size_t> index;
  Vector lhs;
  Vector rhs;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;  // number of basis tuples evaluated
  std::vector<Witness> witnesses;
  std::string note;
};

struct Report {
  std::vector<PropertyResult> properties;

  bool passed() const;
  /// nullptr if no property has this name.
  const PropertyResult* find(const std::string& name) const;
  bool passed(const std::string& name) const;
  /// Names of the failing properties, in report order.
  std::vector<std::string> failures() const;
  void add(PropertyResult r) { properties.push_back(std::move(r)); }
  void append(const Report& other, const std::string& prefix = {});
};

struct CheckOptions {
  unsigned jobs = 1;
  bool all_witnesses = false;
};

/// An identity lhs(t) = rhs(t) to be checked at every tuple t in the box
/// [0, extents[0]) x ... x [0, extents[k-1]). `sides` must be safe to call
/// concurrently.
struct Identity {
  using Sides = std::pair<Vector, Vector>;
  std::string name;
  std::vector<std::size_t> extents;
  std::function<Sides(std::span<const std::size_t>)> sides;
};

/// Evaluates the identity on every tuple in lexicographic order. With several
/// jobs the box is split into contiguous chunks; the reported witness is always
/// the lexicographically first failure, so the result does not depend on `jobs`.
PropertyResult sweep(const Identity& identity, const CheckOptions& options = {});
Report sweep_all(const std::vector<Identity>& identities, const CheckOptions& options = {});

/// Re-evaluates an identity at a witness index and reports whether both sides
/// still equal the recorded values.
bool reproduces(const Identity& identity, const Witness& witness);

/// A property decided outside a sweep (for example a rank condition).
PropertyResult single_result(std::string name, bool passed, std::string note = {}, std::vector<Witness> witnesses = {});

}  // namespace superpair
