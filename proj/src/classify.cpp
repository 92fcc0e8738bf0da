#include "wiener/classify.hpp"

#include <algorithm>
#include <numeric>

#include "wiener/closed_form.hpp"
#include "wiener/int_math.hpp"

namespace wiener {

namespace {

void require(bool ok, const std::string& rule) {
  if (!ok) throw FamilyError(rule);
}

struct TheoremName {
  TheoremId id;
  std::string_view name;
};

constexpr TheoremName kTheoremNames[] = {
    {TheoremId::kP1_2, "P1.2"},
    {TheoremId::kP1_3, "P1.3"},
    {TheoremId::kP1_5, "P1.5"},
    {TheoremId::kT1, "T1"},
    {TheoremId::kT2, "T2"},
    {TheoremId::kC2_3, "C2.3"},
    {TheoremId::kC2_4, "C2.4"},
    {TheoremId::kT2_5, "T2.5"},
    {TheoremId::kT2_6, "T2.6"},
    {TheoremId::kT3_1, "T3.1"},
    {TheoremId::kL3_2, "L3.2"},
    {TheoremId::kT3_3, "T3.3"},
    {TheoremId::kC3_4, "C3.4"},
    {TheoremId::kR3, "R3"},
    {TheoremId::kT3_5, "T3.5"},
    {TheoremId::kP4_1, "P4.1"},
    {TheoremId::kT4_2, "T4.2"},
    {TheoremId::kClaimALayers, "ClaimA-layers"},
    {TheoremId::kDpLayers, "Dp-layers"},
    {TheoremId::kAiLayers, "Ai-layers"},
};

Verdict verdict(Status s, TheoremId id, Witness w = {}) { return Verdict{s, id, std::move(w)}; }

// Tree-filter fallback shared by the tree families.
std::optional<Verdict> filter_verdict(const FamilySpec& spec) {
  const Graph g = build(spec);
  if (!g.is_tree()) return std::nullopt;
  const TreeFilters f = tree_filters(g);
  if (f.has_equal_split()) {
    return verdict(Status::kNotIrregular, TheoremId::kP1_2, FilterHit{{*f.equal_split}});
  }
  if (f.has_two_unit_splits()) {
    return verdict(Status::kNotIrregular, TheoremId::kP1_3,
                   FilterHit{{f.unit_split_edges[0], f.unit_split_edges[1]}});
  }
  return std::nullopt;
}

Verdict classify_starlike_arms(const FamilySpec& spec, const std::vector<Arm>& arms) {
  if (arms.size() == 3) return classify_starlike3(arms[0], arms[1], arms[2]);
  if (arms.front() == 1) {
    if (auto unit = as_unit_arithmetic(arms)) return classify_one_to_ell(unit->k + 1);
  }
  if (auto unit = as_unit_arithmetic(arms)) {
    Verdict v = classify_unit_arithmetic(unit->a, unit->k);
    if (v.status != Status::kNoVerdict) return v;
  }
  std::optional<Verdict> extremal;
  if (auto ext = as_extremal(arms)) {
    extremal = classify_extremal(ext->a, ext->k);
    if (extremal->status != Status::kNoVerdict) return *extremal;
  }
  if (!necessary_condition(arms)) {
    return verdict(Status::kNotIrregular, TheoremId::kP1_5,
                   ArmConditionFailure{"longest arm exceeds the sum of the others"});
  }
  if (auto f = filter_verdict(spec)) return *f;
  if (extremal) return *extremal;
  return verdict(Status::kNoVerdict, TheoremId::kNone);
}

struct ClassifyVisitor {
  const FamilySpec& spec;

  Verdict operator()(const Starlike& s) const { return classify_starlike_arms(spec, s.arms); }
  Verdict operator()(const BrokenUnitArithmetic& b) const {
    if (auto shape = as_broken_shape(b)) {
      Verdict v = classify_broken(shape->a, shape->k);
      if (v.status != Status::kNoVerdict) return v;
    }
    const std::vector<Arm> arms = broken_arms(b);
    if (!necessary_condition(arms)) {
      return verdict(Status::kNotIrregular, TheoremId::kP1_5,
                     ArmConditionFailure{"longest arm exceeds the sum of the others"});
    }
    if (auto f = filter_verdict(spec)) return *f;
    return verdict(Status::kNoVerdict, TheoremId::kNone);
  }
  Verdict operator()(const BiStarlikeBT& t) const {
    const Arm a = t.arms.front();
    if (t.arms == std::vector<Arm>{a, a + 1, 2 * a + 1} && t.shoulder == 2 * a + 1) {
      Verdict v = classify_bt_remark(a);
      if (v.status != Status::kNoVerdict) return v;
    }
    if (auto f = filter_verdict(spec)) return *f;
    return verdict(Status::kNoVerdict, TheoremId::kNone);
  }
  Verdict operator()(const BiStarlikeBSStar& s) const {
    Verdict v = classify_bs_star(s.a, s.k);
    if (v.status != Status::kNoVerdict) return v;
    if (auto f = filter_verdict(spec)) return *f;
    return v;
  }
  Verdict operator()(const TriangleFiveArm& t) const {
    if (t.k1 == 1 && t.k2 == 1 && t.k4 == 2 && t.k3 == t.k5 && t.k3 >= 3) {
      return classify_triangle(t.k3);
    }
    return verdict(Status::kNoVerdict, TheoremId::kNone);
  }
  Verdict operator()(const TriangleThreeArm& t) const {
    // L(T(a,a+1,a+2)) = C3(a-1,a,a+1).
    if (t.k2 == t.k1 + 1 && t.k3 == t.k1 + 2) return classify_line_consecutive3(t.k1 + 1);
    return verdict(Status::kNoVerdict, TheoremId::kNone);
  }
  Verdict operator()(const LineOf& l) const {
    if (const auto* s = l.inner->get_if<Starlike>()) {
      const auto& k = s->arms;
      if (k.size() == 3 && k[0] >= 2 && k[1] == k[0] + 1 && k[2] == k[0] + 2) {
        return classify_line_consecutive3(k[0]);
      }
    }
    return verdict(Status::kNoVerdict, TheoremId::kNone);
  }
};

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kIrregular: return "Irregular";
    case Status::kNotIrregular: return "NotIrregular";
    case Status::kNoVerdict: return "NoVerdict";
  }
  return "NoVerdict";
}

std::string_view to_string(TheoremId id) {
  for (const auto& t : kTheoremNames) {
    if (t.id == id) return t.name;
  }
  return "none";
}

std::optional<TheoremId> theorem_from_string(std::string_view text) {
  for (const auto& t : kTheoremNames) {
    if (t.name == text) return t.id;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& registered_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& t : kTheoremNames) out.push_back(t.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(ExceptionalSet s) {
  switch (s) {
    case ExceptionalSet::kXY: return "N_xy";
    case ExceptionalSet::kYZ: return "N_yz";
    case ExceptionalSet::kXZ: return "N_xz";
  }
  return "?";
}

std::array<std::int64_t, 3> reconstruct(const ExceptionalTriple& t) {
  const std::int64_t lo = t.lower, hi = t.upper, g = t.gcd, p = t.p;
  switch (t.which) {
    case ExceptionalSet::kXY:
      return {t.anchor, t.anchor + (hi - lo) * (g + p) / g, p * (lo + hi) / g};
    case ExceptionalSet::kYZ:
      return {p * (lo + hi) / g, t.anchor, t.anchor + (hi - lo) * (g + p) / g};
    case ExceptionalSet::kXZ:
      return {t.anchor, p * (lo + hi) / g, t.anchor + (hi - lo) * (g + p) / g};
  }
  return {0, 0, 0};
}

// Each family pins one coordinate to p*(lo+hi)/g, which determines p; the
// remaining coordinate and the range constraints are then checked exactly.
// Index pairs range over [1, k1+k2+k3] since every index is an arm distance.
std::optional<ExceptionalTriple> find_exceptional_triple(std::int64_t k1, std::int64_t k2,
                                                         std::int64_t k3) {
  const std::int64_t bound = k1 + k2 + k3;
  for (std::int64_t lo = 1; lo <= bound; ++lo) {
    for (std::int64_t hi = lo + 1; hi <= bound; ++hi) {
      const std::int64_t sum = lo + hi, diff = hi - lo;
      const std::int64_t g = std::gcd(sum, diff);

      // xy: (k1, k1 + (j-i)(1 + p/g), p(i+j)/g), i <= k1, (k1+j-i)g <= 2ip.
      if (lo <= k1 && (k3 * g) % sum == 0) {
        const std::int64_t p = k3 * g / sum;
        if (p >= 1 && g * (k2 - k1) == diff * (g + p) && (k1 + diff) * g <= 2 * lo * p) {
          return ExceptionalTriple{ExceptionalSet::kXY, lo, hi, p, g, k1};
        }
      }
      // yz: (p(j+k)/g, k2, k2 + (k-j)(1 + p/g)),
      //     max(j, (j+k)/g) <= k2, 1 <= p <= k2 g/(j+k).
      if (std::max(lo, sum / g) <= k2 && (k1 * g) % sum == 0) {
        const std::int64_t p = k1 * g / sum;
        if (p >= 1 && p * sum <= k2 * g && g * (k3 - k2) == diff * (g + p)) {
          return ExceptionalTriple{ExceptionalSet::kYZ, lo, hi, p, g, k2};
        }
      }
      // xz: (k1, p(i+k)/g, k1 + (k-i)(1 + p/g)), i <= k1,
      //     k1 g/(i+k) <= p <= (k1+k-i)g/(2i).
      if (lo <= k1 && (k2 * g) % sum == 0) {
        const std::int64_t p = k2 * g / sum;
        if (p >= 1 && k1 * g <= p * sum && 2 * lo * p <= (k1 + diff) * g &&
            g * (k3 - k1) == diff * (g + p)) {
          return ExceptionalTriple{ExceptionalSet::kXZ, lo, hi, p, g, k1};
        }
      }
    }
  }
  return std::nullopt;
}

Verdict classify_starlike3(std::int64_t k1, std::int64_t k2, std::int64_t k3) {
  require(k1 >= 1, "arm lengths must be ≥ 1");
  require(k1 <= k2 && k2 <= k3, "arms must be sorted: k1 ≤ k2 ≤ k3");
  if (!(k1 < k2 && k2 < k3)) {
    return verdict(Status::kNotIrregular, TheoremId::kT1,
                   ArmConditionFailure{"k1 < k2 < k3 fails"});
  }
  if (k3 > k1 + k2) {
    return verdict(Status::kNotIrregular, TheoremId::kT1,
                   ArmConditionFailure{"k3 ≤ k1 + k2 fails"});
  }
  if (auto t = find_exceptional_triple(k1, k2, k3)) {
    return verdict(Status::kNotIrregular, TheoremId::kT1, *t);
  }
  return verdict(Status::kIrregular, TheoremId::kT1);
}

bool odd_order_congruence(std::int64_t a, std::int64_t k) {
  return mod_floor(k, 4) == 3 || mod_floor(k + 2 * a, 4) == 0;
}

Verdict classify_unit_arithmetic(std::int64_t a, std::int64_t k) {
  require(a >= 1, "unit arithmetic starlike tree requires a ≥ 1");
  require(k >= 2, "unit arithmetic starlike tree requires k ≥ 2");
  if (unit_arithmetic_order(a, k) % 2 == 1) return verdict(Status::kIrregular, TheoremId::kT2);
  if (2 * (a - 3) <= 3 * k && k <= 2 * a + 2 && mod_floor(k + 2 * a, 4) == 2) {
    const std::int64_t x = (k + 2 * a - 2) / 4;
    const LayerSets b = bp_sets(a, k);
    return verdict(Status::kNotIrregular, TheoremId::kT2_6,
                   LayerCollision{x, b.layer(x).back()});
  }
  return verdict(Status::kNoVerdict, TheoremId::kT2);
}

Verdict classify_consecutive3(std::int64_t a) {
  require(a >= 1, "T(a,a+1,a+2) requires a ≥ 1");
  if (a % 2 == 1) return verdict(Status::kIrregular, TheoremId::kC2_4);
  const std::int64_t t = a / 2;
  const LayerSets b = bp_sets(a, 2);
  return verdict(Status::kNotIrregular, TheoremId::kC2_4, LayerCollision{t, b.layer(t).back()});
}

Verdict classify_one_to_ell(std::int64_t ell) {
  require(ell >= 3, "T(1,...,l) requires l ≥ 3");
  const std::int64_t r = isqrt(ell - 1);
  if (r >= 2 && r * r == ell - 1) {
    return verdict(Status::kNotIrregular, TheoremId::kT2_5, SquareHit{ell - 1, r});
  }
  return verdict(Status::kIrregular, TheoremId::kT2_5);
}

Verdict classify_broken(std::int64_t a, std::int64_t k) {
  require(a >= 1, "broken unit arithmetic starlike tree requires a ≥ 1");
  require(k >= 2, "broken unit arithmetic starlike tree requires k ≥ 2");
  if (odd_order_congruence(a, k)) return verdict(Status::kIrregular, TheoremId::kT3_1);
  return verdict(Status::kNoVerdict, TheoremId::kT3_1);
}

Verdict classify_extremal(std::int64_t a, std::int64_t k) {
  require(a >= 1 && k >= 1, "extremal starlike tree requires a ≥ 1 and k ≥ 1");
  const LayerSets d = dp_sets(a, k);
  const std::int64_t lo = k * (2 * a + k - 1) + 1;
  const std::int64_t long_arm = d.anchors.at("long_arm_length");
  const std::int64_t hi = long_arm * long_arm;
  std::optional<std::int64_t> hit;
  for (const auto& [p, layer] : d.layers) {
    for (std::int64_t v : layer) {
      if (v >= lo && v <= hi && is_perfect_square(v) && (!hit || v < *hit)) hit = v;
    }
  }
  if (hit) return verdict(Status::kNoVerdict, TheoremId::kT3_3, SquareHit{*hit, isqrt(*hit)});
  return verdict(Status::kIrregular, TheoremId::kT3_3);
}

Verdict classify_bs_star(std::int64_t a, std::int64_t k) {
  require(a >= 1 && k >= 1, "BS* requires a ≥ 1 and k ≥ 1");
  return verdict(a > 1 ? Status::kIrregular : Status::kNoVerdict, TheoremId::kT3_5);
}

Verdict classify_triangle(std::int64_t k) {
  const LayerSets sets = triangle_sets(k);
  const IntSeq common = intersection(sets.named.at("A"), sets.named.at("B"));
  if (!common.empty()) {
    return verdict(Status::kNoVerdict, TheoremId::kP4_1, SetIntersection{common.front()});
  }
  return verdict(Status::kIrregular, TheoremId::kP4_1);
}

Verdict classify_line_consecutive3(std::int64_t a) {
  require(a >= 2, "L(T(a,a+1,a+2)) requires a ≥ 2");
  if (a % 2 == 0) return verdict(Status::kIrregular, TheoremId::kT4_2);
  return verdict(Status::kNotIrregular, TheoremId::kT4_2, LinearSolution{(a - 1) / 2});
}

Verdict classify_bt_remark(std::int64_t a) {
  require(a >= 1, "BT^(2a+1)(a,a+1,2a+1) requires a ≥ 1");
  if (a == 2 || a == 3 || a == 5) return verdict(Status::kIrregular, TheoremId::kR3);
  if (a == 6) return verdict(Status::kNotIrregular, TheoremId::kR3);
  return verdict(Status::kNoVerdict, TheoremId::kR3);
}

bool necessary_condition(const std::vector<Arm>& arms) {
  const Arm longest = *std::max_element(arms.begin(), arms.end());
  const Arm total = std::accumulate(arms.begin(), arms.end(), Arm{0});
  return longest <= total - longest;
}

Verdict classify(const FamilySpec& spec) {
  return std::visit(ClassifyVisitor{spec}, spec.variant());
}

}  // namespace wiener
