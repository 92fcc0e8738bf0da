#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wiener/families.hpp"

namespace wiener {

enum class Status { kIrregular, kNotIrregular, kNoVerdict };

std::string_view to_string(Status s);

// Registered result identifiers. The layer-set ids name the closed-form
// consistency checks run by the verifier.
enum class TheoremId {
  kNone,
  kP1_2,  // no edge with n_u = n_v
  kP1_3,  // no two edges with |n_u - n_v| = 1
  kP1_5,  // k_t <= sum of the other arms
  kT1,    // T(k1,k2,k3) characterization
  kT2,    // unit arithmetic of odd order
  kC2_3,  // congruence form of the odd-order condition
  kC2_4,  // T(a,a+1,a+2) iff a odd
  kT2_5,  // T(1..l) iff l not in {r^2+1}
  kT2_6,  // non-irregular window
  kT3_1,  // broken unit arithmetic
  kL3_2,  // D_p pairwise disjoint
  kT3_3,  // extremal square avoidance
  kC3_4,  // extremal, three arms (printed sets)
  kR3,    // BT^(2a+1)(a,a+1,2a+1) remark
  kT3_5,  // BS*
  kP4_1,  // C3(1;1,k;2,k)
  kT4_2,  // L(T(a,a+1,a+2)) iff a even
  kClaimALayers,
  kDpLayers,
  kAiLayers,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view text);
// Every id accepted by the verifier, in registry order.
const std::vector<TheoremId>& registered_theorems();

enum class ExceptionalSet { kXY, kYZ, kXZ };

std::string_view to_string(ExceptionalSet s);

// Membership certificate for one of the three exceptional families of arm
// triples. `lower < upper` are the two arm distances (i,j), (j,k) or (i,k);
// `anchor` is the coordinate the family keeps free (k1 for xy and xz, k2
// for yz).
struct ExceptionalTriple {
  ExceptionalSet which = ExceptionalSet::kXY;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t p = 0;
  std::int64_t gcd = 0;
  std::int64_t anchor = 0;

  friend bool operator==(const ExceptionalTriple&, const ExceptionalTriple&) = default;
};

// The triple the closed form of `t` produces.
std::array<std::int64_t, 3> reconstruct(const ExceptionalTriple& t);

// Searches the exceptional families for (k1,k2,k3), k1 <= k2 <= k3.
std::optional<ExceptionalTriple> find_exceptional_triple(std::int64_t k1, std::int64_t k2,
                                                         std::int64_t k3);

struct ArmConditionFailure {
  std::string rule;
  friend bool operator==(const ArmConditionFailure&, const ArmConditionFailure&) = default;
};

// Two layers meeting: max of layer `layer` equals min of layer `layer + 1`
// (as offsets from the branching vertex).
struct LayerCollision {
  std::int64_t layer = 0;
  std::int64_t value = 0;
  friend bool operator==(const LayerCollision&, const LayerCollision&) = default;
};

struct SquareHit {
  std::int64_t value = 0;
  std::int64_t root = 0;
  friend bool operator==(const SquareHit&, const SquareHit&) = default;
};

struct SetIntersection {
  std::int64_t value = 0;
  friend bool operator==(const SetIntersection&, const SetIntersection&) = default;
};

// Solution p of the collision equation 2p + 1 = a.
struct LinearSolution {
  std::int64_t p = 0;
  friend bool operator==(const LinearSolution&, const LinearSolution&) = default;
};

struct FilterHit {
  std::vector<Edge> edges;
  friend bool operator==(const FilterHit&, const FilterHit&) = default;
};

using Witness = std::variant<std::monostate, ExceptionalTriple, ArmConditionFailure,
                             LayerCollision, SquareHit, SetIntersection, LinearSolution,
                             FilterHit>;

struct Verdict {
  Status status = Status::kNoVerdict;
  TheoremId source = TheoremId::kNone;
  Witness witness;

  bool has_witness() const noexcept {
    return !std::holds_alternative<std::monostate>(witness);
  }
};

// Complete characterization of three-arm starlike trees.
Verdict classify_starlike3(std::int64_t k1, std::int64_t k2, std::int64_t k3);
// T(a..a+k): irregular when the order is odd; not irregular inside the
// window 2(a-3)/3 <= k <= 2a+2 with k+2a = 2 (mod 4).
Verdict classify_unit_arithmetic(std::int64_t a, std::int64_t k);
Verdict classify_consecutive3(std::int64_t a);
Verdict classify_one_to_ell(std::int64_t ell);
Verdict classify_broken(std::int64_t a, std::int64_t k);
// NoVerdict carries the offending square as witness.
Verdict classify_extremal(std::int64_t a, std::int64_t k);
Verdict classify_bs_star(std::int64_t a, std::int64_t k);
// NoVerdict carries the smallest value of A n B as witness.
Verdict classify_triangle(std::int64_t k);
Verdict classify_line_consecutive3(std::int64_t a);
// Stated booleans for BT^(2a+1)(a,a+1,2a+1): irregular for a in {2,3,5},
// not irregular for a = 6.
Verdict classify_bt_remark(std::int64_t a);

// False when the longest arm exceeds the sum of the others (certainly not
// irregular). Arms must be sorted and positive, at least three.
bool necessary_condition(const std::vector<Arm>& arms);

// Congruence form: k = 3 (mod 4) or k + 2a = 0 (mod 4).
bool odd_order_congruence(std::int64_t a, std::int64_t k);

// Dispatches on the family shape to the strongest applicable result.
Verdict classify(const FamilySpec& spec);

}  // namespace wiener
