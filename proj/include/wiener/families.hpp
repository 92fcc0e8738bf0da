#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

// Thrown when a family instance violates a structural constraint. The
// message names the violated rule.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Arm = std::int64_t;

// T(k1,...,kt): t >= 3 pendant paths on one branching vertex. Arms are
// kept sorted non-decreasing.
struct Starlike {
  std::vector<Arm> arms;
  friend bool operator==(const Starlike&, const Starlike&) = default;
};

// T[first,last_before_gap; first_after_gap,last]: the unit arithmetic run
// first..last with the open interval (last_before_gap, first_after_gap)
// removed.
struct BrokenUnitArithmetic {
  Arm first = 0;
  Arm last_before_gap = 0;
  Arm first_after_gap = 0;
  Arm last = 0;
  friend bool operator==(const BrokenUnitArithmetic&, const BrokenUnitArithmetic&) = default;
};

// BT^(shoulder)(arms): two copies of T(arms); the branching vertex of the
// second copy is glued onto the leaf of the first copy's `shoulder` arm.
struct BiStarlikeBT {
  Arm shoulder = 0;
  std::vector<Arm> arms;
  friend bool operator==(const BiStarlikeBT&, const BiStarlikeBT&) = default;
};

// BS*(a,...,a+k): two copies of T(a,...,a+k) with centers joined by an edge
// and one pendant vertex on the first center.
struct BiStarlikeBSStar {
  Arm a = 0;
  Arm k = 0;
  friend bool operator==(const BiStarlikeBSStar&, const BiStarlikeBSStar&) = default;
};

// C3(k1; k2,k3; k4,k5): triangle with one arm on the first vertex and two on
// each of the others. Arms within a pair are sorted.
struct TriangleFiveArm {
  Arm k1 = 0, k2 = 0, k3 = 0, k4 = 0, k5 = 0;
  friend bool operator==(const TriangleFiveArm&, const TriangleFiveArm&) = default;
};

// C3(k1,k2,k3): triangle with one arm on each vertex, sorted.
struct TriangleThreeArm {
  Arm k1 = 0, k2 = 0, k3 = 0;
  friend bool operator==(const TriangleThreeArm&, const TriangleThreeArm&) = default;
};

class FamilySpec;

struct LineOf {
  std::shared_ptr<const FamilySpec> inner;
  friend bool operator==(const LineOf& x, const LineOf& y);
};

class FamilySpec {
 public:
  using Variant = std::variant<Starlike, BrokenUnitArithmetic, BiStarlikeBT, BiStarlikeBSStar,
                               TriangleFiveArm, TriangleThreeArm, LineOf>;

  // Validates and canonicalizes; throws FamilyError.
  FamilySpec(Variant v);  // NOLINT(google-explicit-constructor)

  const Variant& variant() const noexcept { return v_; }
  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&v_);
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  Variant v_;
};

FamilySpec starlike(std::vector<Arm> arms);
FamilySpec line_of(FamilySpec inner);

// T(a, a+1, ..., a+k), k >= 2.
FamilySpec unit_arithmetic(Arm a, Arm k);
// T(a, ..., a+k, (2a+k)(k+1)/2): longest arm equals the sum of the others.
FamilySpec extremal_long_arm(Arm a, Arm k);
// T[a, a+k-2; a+k, a+k+1], k >= 2.
FamilySpec broken_unit_arithmetic(Arm a, Arm k);
FamilySpec bs_star(Arm a, Arm k);
// BT^(2a+1)(a, a+1, 2a+1).
FamilySpec bt_consecutive(Arm a);
// C3(1; 1,k; 2,k).
FamilySpec triangle_five(Arm k);

// Arm multiset of a broken spec, sorted.
std::vector<Arm> broken_arms(const BrokenUnitArithmetic& b);

// Shape recognizers used by the classifier dispatch and the set dumper.
struct UnitArithmeticParams {
  Arm a = 0;
  Arm k = 0;
};
std::optional<UnitArithmeticParams> as_unit_arithmetic(const std::vector<Arm>& arms);
std::optional<UnitArithmeticParams> as_extremal(const std::vector<Arm>& arms);
std::optional<UnitArithmeticParams> as_broken_shape(const BrokenUnitArithmetic& b);

// Canonical vertex numbering: vertex 0 is the distinguished vertex (the
// branching vertex; the degree k+3 vertex of BS*; the k1-arm vertex of a
// triangle family), followed by arms in non-decreasing length, each
// numbered outward.
Graph build(const FamilySpec& spec);

// Canonical DSL text; parse_family(render(s)) == s.
std::string render(const FamilySpec& spec);

}  // namespace wiener
