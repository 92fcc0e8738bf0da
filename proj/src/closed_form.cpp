#include "wiener/closed_form.hpp"

#include <algorithm>
#include <iterator>

#include "wiener/families.hpp"
#include "wiener/int_math.hpp"

namespace wiener {

namespace {

void require(bool ok, const std::string& rule) {
  if (!ok) throw FamilyError(rule);
}

// Number of arms reaching distance p in T(a..a+k): k+1 for p <= a, then one
// fewer per step.
std::int64_t arms_at_distance(std::int64_t a, std::int64_t k, std::int64_t p) {
  return p <= a ? k + 1 : (k + 1) - (p - a);
}

// {p*c + p(p-1) + 2p*i : i in [count]}, the common shape of B_p and D_p.
IntSeq quadratic_layer(std::int64_t c, std::int64_t p, std::int64_t count) {
  IntSeq out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 1; i <= count; ++i) out.push_back(p * c + p * (p - 1) + 2 * p * i);
  return out;
}

std::int64_t triangular(std::int64_t x) { return x * (x + 1) / 2; }

IntSeq consecutive_arms(std::int64_t a, std::int64_t k) {
  IntSeq arms;
  for (std::int64_t j = 0; j <= k; ++j) arms.push_back(a + j);
  return arms;
}

IntSeq merged(IntSeq x, const IntSeq& y) {
  x.insert(x.end(), y.begin(), y.end());
  std::sort(x.begin(), x.end());
  return x;
}

void append_shifted(IntSeq& out, const IntSeq& values, std::int64_t shift) {
  for (std::int64_t v : values) out.push_back(v + shift);
}

}  // namespace

std::string_view to_string(LayerFamily f) {
  switch (f) {
    case LayerFamily::kUnitArithmetic: return "unit-arithmetic";
    case LayerFamily::kExtremal: return "extremal";
    case LayerFamily::kBroken: return "broken";
    case LayerFamily::kBsStar: return "bs-star";
    case LayerFamily::kTriangle: return "triangle";
    case LayerFamily::kLineConsecutive: return "line-consecutive";
  }
  return "unknown";
}

std::int64_t unit_arithmetic_shift(std::int64_t a, std::int64_t k) {
  return exact_half((k - 1) * (2 * a + k - 2) - 4);
}

std::int64_t unit_arithmetic_order(std::int64_t a, std::int64_t k) {
  return exact_half((k + 1) * (2 * a + k)) + 1;
}

std::int64_t starlike_center_transmission(const std::vector<std::int64_t>& arms) {
  std::int64_t sum = 0;
  for (std::int64_t K : arms) sum += triangular(K);
  return sum;
}

LayerSets bp_sets(std::int64_t a, std::int64_t k) {
  require(a >= 1, "B_p sets require a ≥ 1");
  require(k >= 2, "B_p sets require k ≥ 2");
  LayerSets out;
  out.family = LayerFamily::kUnitArithmetic;
  out.params = {{"a", a}, {"k", k}};
  const std::int64_t s = unit_arithmetic_shift(a, k);
  out.constant = {"s", s};
  out.offset_base = starlike_center_transmission(consecutive_arms(a, k));
  for (std::int64_t p = 1; p <= a + k; ++p) {
    out.layers[p] = quadratic_layer(s, p, arms_at_distance(a, k, p));
  }
  return out;
}

LayerSets dp_sets(std::int64_t a, std::int64_t k) {
  require(a >= 1, "D_p sets require a ≥ 1");
  require(k >= 1, "D_p sets require k ≥ 1");
  LayerSets out;
  out.family = LayerFamily::kExtremal;
  out.params = {{"a", a}, {"k", k}};
  const std::int64_t h = (k - 1) * (2 * a + k) + 2 * a - 1;
  out.constant = {"h", h};
  const std::int64_t long_arm = exact_half((2 * a + k) * (k + 1));
  IntSeq arms = consecutive_arms(a, k);
  arms.push_back(long_arm);
  out.offset_base = starlike_center_transmission(arms);
  for (std::int64_t p = 1; p <= a + k; ++p) {
    out.layers[p] = quadratic_layer(h, p, arms_at_distance(a, k, p));
  }
  IntSeq squares;
  for (std::int64_t j = 1; j <= long_arm; ++j) squares.push_back(j * j);
  out.named["long_arm"] = std::move(squares);
  out.anchors["long_arm_length"] = long_arm;
  return out;
}

std::map<std::int64_t, IntSeq> broken_primed(std::int64_t a, std::int64_t k) {
  require(a >= 1 && k >= 2, "broken sets require a ≥ 1 and k ≥ 2");
  const std::int64_t s = unit_arithmetic_shift(a, k);
  std::map<std::int64_t, IntSeq> out;
  for (std::int64_t p = 1; p <= a + k - 1; ++p) out[p] = quadratic_layer(s, p, 2);
  return out;
}

std::map<std::int64_t, IntSeq> broken_double_primed(std::int64_t a, std::int64_t k) {
  require(a >= 1 && k >= 2, "broken sets require a ≥ 1 and k ≥ 2");
  const std::int64_t s = unit_arithmetic_shift(a, k);
  std::map<std::int64_t, IntSeq> out;
  for (std::int64_t p = 1; p <= a + k - 2; ++p) {
    IntSeq layer;
    // Arm index i counts from the longest arm of T(a..a+k); i = 1, 2 are
    // the two extended arms, i >= 3 the untouched ones. Each edge toward
    // the branching vertex gains the two added leaves, hence +2p.
    for (std::int64_t i = 3; i <= arms_at_distance(a, k, p); ++i) {
      layer.push_back(p * s + p * (p - 1) + 2 * p * (i + 1));
    }
    out[p] = std::move(layer);
  }
  return out;
}

std::map<std::int64_t, IntSeq> broken_double_primed_printed(std::int64_t a, std::int64_t k) {
  require(a >= 1 && k >= 2, "broken sets require a ≥ 1 and k ≥ 2");
  const std::int64_t s = unit_arithmetic_shift(a, k);
  std::map<std::int64_t, IntSeq> out;
  for (std::int64_t p = 1; p <= a + k - 2; ++p) {
    IntSeq layer;
    for (std::int64_t i = 1; i <= arms_at_distance(a, k, p); ++i) {
      layer.push_back(p * s + p * (p - 1) + 2 * (p + 1) * i);
    }
    out[p] = std::move(layer);
  }
  return out;
}

LayerSets broken_sets(std::int64_t a, std::int64_t k) {
  require(a >= 1, "broken sets require a ≥ 1");
  require(k >= 2, "broken sets require k ≥ 2");
  LayerSets out;
  out.family = LayerFamily::kBroken;
  out.params = {{"a", a}, {"k", k}};
  const std::int64_t s = unit_arithmetic_shift(a, k);
  out.constant = {"s", s};
  IntSeq arms;
  for (std::int64_t x = a; x <= a + k - 2; ++x) arms.push_back(x);
  arms.push_back(a + k);
  arms.push_back(a + k + 1);
  out.offset_base = starlike_center_transmission(arms);

  const auto primed = broken_primed(a, k);
  const auto double_primed = broken_double_primed(a, k);
  for (std::int64_t p = 1; p <= a + k - 2; ++p) {
    out.layers[p] = merged(primed.at(p), double_primed.at(p));
  }
  out.layers[a + k - 1] = primed.at(a + k - 1);

  // Diametral end points: u0 ends the (a+k)-arm of T(a..a+k) and gains the
  // leaf u; v hangs off v0, the end of the (a+k-1)-arm.
  const std::int64_t order = unit_arithmetic_order(a, k) + 2;
  const std::int64_t m = a + k;
  const std::int64_t u0 = m * s + m * (m - 1) + 2 * m;
  const std::int64_t v0 = (m - 1) * s + (m - 1) * (m - 2) + 4 * (m - 1);
  out.layers[m] = merged({u0}, {v0 + order - 2});
  out.layers[m + 1] = {u0 + order - 2};
  out.anchors["order"] = order;
  return out;
}

LayerSets bs_star_sets(std::int64_t a, std::int64_t k) {
  require(a > 1, "A_i sets require a > 1");
  require(k >= 1, "A_i sets require k ≥ 1");
  LayerSets out;
  out.family = LayerFamily::kBsStar;
  out.params = {{"a", a}, {"k", k}};
  const std::int64_t t = k * (k - 1) / 2 + a * k + 1;
  out.constant = {"t", t};
  const IntSeq arms = consecutive_arms(a, k);
  const std::int64_t copy_order = unit_arithmetic_order(a, k);
  // The far copy sits one step further away, plus the pendant vertex.
  out.offset_base = 2 * starlike_center_transmission(arms) + copy_order + 1;
  for (std::int64_t i = 1; i <= a + k; ++i) {
    const std::int64_t top = i <= a ? k : k + a - i;
    IntSeq layer;
    for (std::int64_t j = 0; j <= top; ++j) layer.push_back(2 * i * t + i * i + 2 * i * j);
    out.layers[i] = std::move(layer);
  }
  out.named["A1_extra"] = {2 * t + 2 * (a + k) - 1};
  out.anchors["order"] = (k + 1) * (2 * a + k) + 3;
  return out;
}

LayerSets triangle_sets(std::int64_t k) {
  require(k >= 3, "C3(1;1,k;2,k) sets require k ≥ 3");
  LayerSets out;
  out.family = LayerFamily::kTriangle;
  out.params = {{"k", k}};
  out.offset_base = (k + 1) * (k + 1);
  out.base_is_vertex = false;
  IntSeq a0{k + 9, 2 * k + 11, 2 * k + 14, 3 * k + 14, 4 * k + 16};
  IntSeq a1;
  for (std::int64_t x : a0) a1.push_back(x + 1);
  IntSeq all = merged(a0, a1);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  IntSeq b;
  for (std::int64_t i = 3; i <= k + 3; ++i) b.push_back(i * i);
  out.named["A0"] = std::move(a0);
  out.named["A1"] = std::move(a1);
  out.named["A"] = std::move(all);
  out.named["B"] = std::move(b);
  const std::int64_t k1sq = (k + 1) * (k + 1);
  out.anchors["Tr(w)"] = k * k + 3 * k + 10;
  out.anchors["Tr(u)"] = k1sq + 9;
  out.anchors["Tr(v)"] = k1sq + 8;
  out.anchors["Tr(w')"] = k * k + 5 * k + 15;
  out.anchors["Tr(u')"] = k1sq + 2 * k + 14;
  out.anchors["Tr(v')"] = k1sq + 2 * k + 11;
  out.anchors["Tr(v'')"] = k1sq + 4 * k + 16;
  out.anchors["order"] = 2 * k + 7;
  return out;
}

LayerSets line_graph_sets(std::int64_t a) {
  require(a >= 2, "L(T(a,a+1,a+2)) sets require a ≥ 2");
  LayerSets out;
  out.family = LayerFamily::kLineConsecutive;
  out.params = {{"a", a}};
  out.offset_base = exact_half(a * (3 * a + 7));
  out.base_is_vertex = false;
  IntSeq au, av, aw;
  for (std::int64_t p = 1; p <= a - 1; ++p) au.push_back(p * a + (p + 2) * (p + 2));
  for (std::int64_t p = 1; p <= a; ++p) av.push_back(p * a + (p + 1) * (p + 1) + 2);
  for (std::int64_t p = 1; p <= a + 1; ++p) aw.push_back(p * a + p * p + 2);
  out.named["base"] = {2, 3, 4};
  out.named["A_u"] = std::move(au);
  out.named["A_v"] = std::move(av);
  out.named["A_w"] = std::move(aw);
  out.anchors["Tr(u)"] = out.offset_base + 4;
  out.anchors["Tr(v)"] = out.offset_base + 3;
  out.anchors["Tr(w)"] = out.offset_base + 2;
  out.anchors["order"] = 3 * a + 3;
  return out;
}

IntSeq predicted_transmissions(const LayerSets& sets) {
  IntSeq out;
  const std::int64_t base = sets.offset_base;
  if (sets.base_is_vertex) out.push_back(base);
  switch (sets.family) {
    case LayerFamily::kUnitArithmetic:
    case LayerFamily::kBroken:
      for (const auto& [p, layer] : sets.layers) append_shifted(out, layer, base);
      break;
    case LayerFamily::kExtremal:
      for (const auto& [p, layer] : sets.layers) append_shifted(out, layer, base);
      append_shifted(out, sets.named.at("long_arm"), base);
      break;
    case LayerFamily::kBsStar:
      // Near copy around the base vertex, far copy shifted by one.
      out.push_back(base + 1);
      append_shifted(out, sets.named.at("A1_extra"), base);
      for (const auto& [i, layer] : sets.layers) {
        append_shifted(out, layer, base);
        append_shifted(out, layer, base + 1);
      }
      break;
    case LayerFamily::kTriangle: {
      // P_u runs from (k+1)^2 + 9, P_v from k^2+2k+9 = (k+1)^2 - 1 + 9.
      const IntSeq& b = sets.named.at("B");
      append_shifted(out, sets.named.at("A0"), base);
      append_shifted(out, b, base);
      append_shifted(out, b, base - 1);
      break;
    }
    case LayerFamily::kLineConsecutive:
      for (const char* name : {"base", "A_u", "A_v", "A_w"}) {
        append_shifted(out, sets.named.at(name), base);
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntSeq claim_a_printed_prediction(std::int64_t a, std::int64_t k) {
  const LayerSets sets = bp_sets(a, k);
  const std::int64_t shift = sets.offset_base + sets.constant->second + 2;
  IntSeq out{sets.offset_base};
  for (const auto& [p, layer] : sets.layers) append_shifted(out, layer, shift);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<IntSeq, IntSeq> corollary_extremal_printed(std::int64_t a) {
  require(a >= 1, "requires a ≥ 1");
  IntSeq first, second;
  for (std::int64_t p = 1; p <= a + 1; ++p) first.push_back(p * (2 * a - 1) + p * p);
  for (std::int64_t p = 1; p <= a; ++p) second.push_back(p * (2 * a - 1) + p * p + 2 * p);
  return {first, second};
}

std::optional<SetCollision> find_layer_collision(const std::map<std::int64_t, IntSeq>& layers) {
  std::vector<std::pair<std::int64_t, std::int64_t>> all;  // (value, layer)
  for (const auto& [index, layer] : layers) {
    for (std::int64_t v : layer) all.emplace_back(v, index);
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].first == all[i - 1].first && all[i].second != all[i - 1].second) {
      return SetCollision{all[i - 1].second, all[i].second, all[i].first};
    }
  }
  return std::nullopt;
}

IntSeq intersection(const IntSeq& x, const IntSeq& y) {
  IntSeq out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace wiener
