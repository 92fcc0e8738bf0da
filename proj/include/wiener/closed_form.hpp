#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wiener {

// Sorted integer sequence. Layer sets are strictly increasing; predicted
// transmission multisets may repeat values.
using IntSeq = std::vector<std::int64_t>;

enum class LayerFamily {
  kUnitArithmetic,  // B_p of T(a..a+k)
  kExtremal,        // D_p of T(a..a+k, (2a+k)(k+1)/2)
  kBroken,          // B*_p of T[a,a+k-2; a+k,a+k+1]
  kBsStar,          // A_i of BS*(a..a+k)
  kTriangle,        // A0, A1, B of C3(1; 1,k; 2,k)
  kLineConsecutive, // A_u, A_v, A_w of L(T(a,a+1,a+2))
};

std::string_view to_string(LayerFamily f);

// Closed-form transmissions of a structured family, expressed as offsets
// from offset_base. When base_is_vertex is set, offset_base is itself the
// transmission of the distinguished vertex.
struct LayerSets {
  LayerFamily family{};
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::optional<std::pair<std::string, std::int64_t>> constant;  // s, h or t
  std::int64_t offset_base = 0;
  bool base_is_vertex = true;
  std::map<std::int64_t, IntSeq> layers;   // indexed layers (p or i)
  std::map<std::string, IntSeq> named;     // auxiliary sets of a proof
  std::map<std::string, std::int64_t> anchors;  // closed-form single transmissions

  const IntSeq& layer(std::int64_t index) const { return layers.at(index); }
};

// 2s = (k-1)(2a+k-2) - 4 is always even.
std::int64_t unit_arithmetic_shift(std::int64_t a, std::int64_t k);
// (k+1)(a+k/2)+1.
std::int64_t unit_arithmetic_order(std::int64_t a, std::int64_t k);
// Transmission of the branching vertex of T(arms): sum of K(K+1)/2.
std::int64_t starlike_center_transmission(const std::vector<std::int64_t>& arms);

// B_p, p in [a+k]; constant s. Requires a >= 1, k >= 2.
LayerSets bp_sets(std::int64_t a, std::int64_t k);
// D_p, p in [a+k]; constant h; named "long_arm" holds {1, 4, ..., L^2}.
// Requires a >= 1, k >= 1.
LayerSets dp_sets(std::int64_t a, std::int64_t k);
// B*_p = B'_p u B''_p for p in [a+k-2], B'_{a+k-1}, then the diametral
// end points at p = a+k and a+k+1. Requires a >= 1, k >= 2.
LayerSets broken_sets(std::int64_t a, std::int64_t k);
// A_i, i in [a+k]; constant t; named "A1_extra" is the pendant singleton.
// Requires a > 1, k >= 1.
LayerSets bs_star_sets(std::int64_t a, std::int64_t k);
// A0, A1 = A0+1, A = A0 u A1, B. Requires k >= 3.
LayerSets triangle_sets(std::int64_t k);
// A_u, A_v, A_w and the base triple {2,3,4}. Requires a >= 2.
LayerSets line_graph_sets(std::int64_t a);

// Pieces of the broken-family sets. B'_p holds the first two elements of
// B_p. B''_p holds the off-diametral-path offsets ps+p(p-1)+2p(i+1),
// i in {3..r_p}.
std::map<std::int64_t, IntSeq> broken_primed(std::int64_t a, std::int64_t k);
std::map<std::int64_t, IntSeq> broken_double_primed(std::int64_t a, std::int64_t k);
// The published form {ps+p(p-1)+2(p+1)i : i in [r_p]}, kept for
// discrepancy reporting only.
std::map<std::int64_t, IntSeq> broken_double_primed_printed(std::int64_t a, std::int64_t k);

// Full transmission multiset predicted by the closed form, sorted.
IntSeq predicted_transmissions(const LayerSets& sets);

// Unit arithmetic prediction with the published Claim A offset Tr(v)+s+2.
IntSeq claim_a_printed_prediction(std::int64_t a, std::int64_t k);

// The two sets printed for T(a,a+1,2a+1):
// {p(2a-1)+p^2 : p in [a+1]} and {p(2a-1)+p^2+2p : p in [a]}.
std::pair<IntSeq, IntSeq> corollary_extremal_printed(std::int64_t a);

struct SetCollision {
  std::int64_t first_layer = 0;
  std::int64_t second_layer = 0;
  std::int64_t value = 0;
};

// First value shared by two different layers, scanning a global merge.
std::optional<SetCollision> find_layer_collision(const std::map<std::int64_t, IntSeq>& layers);

// Values present in both sorted sequences.
IntSeq intersection(const IntSeq& x, const IntSeq& y);

}  // namespace wiener
