#include "wiener/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "wiener/closed_form.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/int_math.hpp"
#include "wiener/json_io.hpp"

namespace wiener {

namespace {

constexpr std::size_t kMaxReportedCollisions = 8;

using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct Point {
  Params params;
  std::string key;
  std::optional<LevelSequence> tree;
  std::optional<FamilySpec> spec;

  std::int64_t get(std::string_view name) const {
    for (const auto& [k, v] : params) {
      if (k == name) return v;
    }
    throw VerifyError("missing parameter " + std::string(name));
  }
};

struct KeyDomain {
  std::string name;
  std::int64_t min = 1;
  std::int64_t max = INT64_MAX;
  std::int64_t default_lo = 1;
  std::int64_t default_hi = 1;
};

using Evaluator = std::function<PointResult(const Point&)>;

struct TheoremSpec {
  std::vector<KeyDomain> keys;
  std::vector<std::int64_t> default_values;  // overrides the default span of a single key
  std::function<bool(const Params&)> admit;  // grid filter; null admits everything
  Evaluator evaluate;
};

std::string join_key(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ',';
    out += k + '=' + std::to_string(v);
  }
  return out;
}

std::string edge_text(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

PointResult start(const Point& p, std::string instance) {
  PointResult r;
  r.key = p.key;
  r.params = p.params;
  r.instance = std::move(instance);
  return r;
}

void append_detail(PointResult& r, const std::string& text) {
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += text;
}

void attach_oracle(PointResult& r, const TransmissionProfile& prof) {
  r.oracle_irregular = prof.is_irregular;
  for (const Edge& e : prof.collisions) {
    if (r.collisions.size() == kMaxReportedCollisions) break;
    r.collisions.push_back({e.u, e.v, prof.transmissions[static_cast<std::size_t>(e.u)]});
  }
}

// Flags a finding; error-level findings dominate discrepancies.
void flag(PointResult& r, Severity s, const std::string& text) {
  r.outcome = Outcome::kMismatch;
  if (!r.severity || s == Severity::kError) r.severity = s;
  append_detail(r, text);
}

// Compares a classifier claim with the oracle. NoVerdict is a finding only
// for characterizations.
void judge(PointResult& r, Status claimed, bool characterization,
           Severity severity = Severity::kError) {
  r.claimed = claimed;
  const bool oracle = r.oracle_irregular.value_or(false);
  switch (claimed) {
    case Status::kIrregular:
      if (!oracle) flag(r, severity, "claimed Irregular, oracle found equal transmissions");
      break;
    case Status::kNotIrregular:
      if (oracle) flag(r, severity, "claimed NotIrregular, oracle found all transmissions distinct");
      break;
    case Status::kNoVerdict:
      if (characterization) {
        flag(r, Severity::kError, "characterization returned no verdict");
      } else if (r.outcome != Outcome::kMismatch) {
        r.outcome = Outcome::kNoVerdict;
      }
      break;
  }
}

std::string describe_difference(const IntSeq& predicted, const IntSeq& oracle) {
  std::ostringstream os;
  if (predicted.size() != oracle.size()) {
    os << "predicted " << predicted.size() << " transmissions, oracle has " << oracle.size();
    return os.str();
  }
  const auto [pi, oi] = std::mismatch(predicted.begin(), predicted.end(), oracle.begin());
  os << "first difference at rank " << (pi - predicted.begin()) << ": predicted " << *pi
     << ", oracle " << *oi;
  return os.str();
}

IntSeq sorted_transmissions(const TransmissionProfile& prof) {
  IntSeq out(prof.transmissions.begin(), prof.transmissions.end());
  std::sort(out.begin(), out.end());
  return out;
}

void check_master(PointResult& r, const LayerSets& sets, const TransmissionProfile& prof,
                  Severity severity = Severity::kError, const std::string& label = "closed form") {
  const IntSeq predicted = predicted_transmissions(sets);
  const IntSeq oracle = sorted_transmissions(prof);
  if (predicted != oracle) {
    flag(r, severity, label + " disagrees with oracle: " + describe_difference(predicted, oracle));
  }
}

bool has_collision_at(const TransmissionProfile& prof, Transmission value) {
  return std::any_of(prof.collisions.begin(), prof.collisions.end(), [&](const Edge& e) {
    return prof.transmissions[static_cast<std::size_t>(e.u)] == value;
  });
}

// Evaluators ---------------------------------------------------------------

PointResult eval_tree_filter(const Point& p, bool unit_splits) {
  const Graph g = tree_from_level_sequence(*p.tree);
  PointResult r = start(p, edge_text(g));
  attach_oracle(r, transmission_profile(g));
  const TreeFilters f = tree_filters(g);
  const bool fires = unit_splits ? f.has_two_unit_splits() : f.has_equal_split();
  judge(r, fires ? Status::kNotIrregular : Status::kNoVerdict, false);
  return r;
}

PointResult eval_p1_5(const Point& p) {
  PointResult r = start(p, render(*p.spec));
  attach_oracle(r, transmission_profile(build(*p.spec)));
  const bool holds = necessary_condition(p.spec->get_if<Starlike>()->arms);
  judge(r, holds ? Status::kNoVerdict : Status::kNotIrregular, false);
  return r;
}

PointResult eval_t1(const Point& p) {
  const std::int64_t k1 = p.get("k1"), k2 = p.get("k2"), k3 = p.get("k3");
  const FamilySpec spec = starlike({k1, k2, k3});
  PointResult r = start(p, render(spec));
  attach_oracle(r, transmission_profile(build(spec)));
  const Verdict v = classify_starlike3(k1, k2, k3);
  judge(r, v.status, true);
  if (const auto* t = std::get_if<ExceptionalTriple>(&v.witness)) {
    if (reconstruct(*t) != std::array<std::int64_t, 3>{k1, k2, k3}) {
      flag(r, Severity::kError, "exceptional-set witness does not reconstruct the triple");
    }
  }
  return r;
}

PointResult eval_t2(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  const FamilySpec spec = unit_arithmetic(a, k);
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  const bool odd = unit_arithmetic_order(a, k) % 2 == 1;
  judge(r, odd ? Status::kIrregular : Status::kNoVerdict, false);
  if (odd) {
    const LayerSets b = bp_sets(a, k);
    if (auto c = find_layer_collision(b.layers)) {
      flag(r, Severity::kError,
           "B_" + std::to_string(c->first_layer) + " and B_" + std::to_string(c->second_layer) +
               " share " + std::to_string(c->value));
    }
    check_master(r, b, prof);
  }
  return r;
}

PointResult eval_c2_3(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  const FamilySpec spec = unit_arithmetic(a, k);
  PointResult r = start(p, render(spec));
  attach_oracle(r, transmission_profile(build(spec)));
  const bool congruence = odd_order_congruence(a, k);
  judge(r, congruence ? Status::kIrregular : Status::kNoVerdict, false);
  if (congruence != (unit_arithmetic_order(a, k) % 2 == 1)) {
    flag(r, Severity::kError, "congruence disagrees with the parity of the order");
  }
  return r;
}

PointResult eval_c2_4(const Point& p) {
  const std::int64_t a = p.get("a");
  const FamilySpec spec = unit_arithmetic(a, 2);
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  const Verdict v = classify_consecutive3(a);
  judge(r, v.status, true);
  if (const auto* c = std::get_if<LayerCollision>(&v.witness)) {
    const Transmission value = starlike_center_transmission({a, a + 1, a + 2}) + c->value;
    if (!has_collision_at(prof, value)) {
      flag(r, Severity::kError,
           "predicted collision at transmission " + std::to_string(value) + " not found");
    }
  }
  return r;
}

PointResult eval_t2_5(const Point& p) {
  const std::int64_t ell = p.get("l");
  const FamilySpec spec = unit_arithmetic(1, ell - 1);
  PointResult r = start(p, render(spec));
  attach_oracle(r, transmission_profile(build(spec)));
  judge(r, classify_one_to_ell(ell).status, true);
  return r;
}

bool in_t2_6_window(std::int64_t a, std::int64_t k) {
  return 2 * (a - 3) <= 3 * k && k <= 2 * a + 2 && mod_floor(k + 2 * a, 4) == 2;
}

PointResult eval_t2_6(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  const FamilySpec spec = unit_arithmetic(a, k);
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  const Verdict v = classify_unit_arithmetic(a, k);
  judge(r, v.status, false);
  if (v.source != TheoremId::kT2_6) {
    flag(r, Severity::kError, "window point not handled by the window clause");
    return r;
  }
  const std::int64_t x = (k + 2 * a - 2) / 4;
  const LayerSets b = bp_sets(a, k);
  if (b.layer(x).back() != b.layer(x + 1).front()) {
    flag(r, Severity::kError,
         "max B_" + std::to_string(x) + " differs from min B_" + std::to_string(x + 1));
  } else if (!has_collision_at(prof, b.offset_base + b.layer(x).back())) {
    flag(r, Severity::kError, "layer collision not present in the oracle");
  }
  return r;
}

PointResult eval_t3_1(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  const FamilySpec spec = broken_unit_arithmetic(a, k);
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  judge(r, classify_broken(a, k).status, false);
  const LayerSets sets = broken_sets(a, k);
  check_master(r, sets, prof);

  LayerSets printed = sets;
  const auto primed = broken_primed(a, k);
  for (const auto& [q, extra] : broken_double_primed_printed(a, k)) {
    IntSeq layer = primed.count(q) ? primed.at(q) : IntSeq{};
    layer.insert(layer.end(), extra.begin(), extra.end());
    std::sort(layer.begin(), layer.end());
    printed.layers[q] = layer;
  }
  check_master(r, printed, prof, Severity::kPaperDiscrepancy, "printed B''_p");
  return r;
}

PointResult eval_l3_2(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  PointResult r = start(p, render(extremal_long_arm(a, k)));
  if (auto c = find_layer_collision(dp_sets(a, k).layers)) {
    flag(r, Severity::kError,
         "D_" + std::to_string(c->first_layer) + " and D_" + std::to_string(c->second_layer) +
             " share " + std::to_string(c->value));
  }
  return r;
}

PointResult eval_t3_3(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  const FamilySpec spec = extremal_long_arm(a, k);
  PointResult r = start(p, render(spec));
  attach_oracle(r, transmission_profile(build(spec)));
  judge(r, classify_extremal(a, k).status, false);
  return r;
}

PointResult eval_c3_4(const Point& p) {
  const std::int64_t a = p.get("a");
  const FamilySpec spec = extremal_long_arm(a, 1);
  PointResult r = start(p, render(spec));
  attach_oracle(r, transmission_profile(build(spec)));
  const auto [first, second] = corollary_extremal_printed(a);
  const std::int64_t lo = 2 * a + 1, hi = (2 * a + 1) * (2 * a + 1);
  bool square = false;
  for (const IntSeq* set : {&first, &second}) {
    for (std::int64_t d : *set) square = square || (d >= lo && d <= hi && is_perfect_square(d));
  }
  judge(r, square ? Status::kNoVerdict : Status::kIrregular, false, Severity::kPaperDiscrepancy);
  if (r.outcome == Outcome::kMismatch) {
    append_detail(r, "printed sets avoid squares in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  return r;
}

PointResult eval_r3(const Point& p) {
  const std::int64_t a = p.get("a");
  const FamilySpec spec = bt_consecutive(a);
  PointResult r = start(p, render(spec));
  attach_oracle(r, transmission_profile(build(spec)));
  judge(r, classify_bt_remark(a).status, false);
  return r;
}

PointResult eval_t3_5(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  const FamilySpec spec = bs_star(a, k);
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  judge(r, classify_bs_star(a, k).status, false);
  if (a > 1) check_master(r, bs_star_sets(a, k), prof);
  return r;
}

PointResult eval_p4_1(const Point& p) {
  const std::int64_t k = p.get("k");
  const FamilySpec spec = triangle_five(k);
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  const Verdict v = classify_triangle(k);
  judge(r, v.status, false);
  if (v.status == Status::kIrregular) check_master(r, triangle_sets(k), prof);
  return r;
}

PointResult eval_t4_2(const Point& p) {
  const std::int64_t a = p.get("a");
  const FamilySpec spec = line_of(starlike({a, a + 1, a + 2}));
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  judge(r, classify_line_consecutive3(a).status, true);
  if (a % 2 == 0) check_master(r, line_graph_sets(a), prof);
  return r;
}

PointResult eval_claim_a(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  const FamilySpec spec = unit_arithmetic(a, k);
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  check_master(r, bp_sets(a, k), prof);
  const IntSeq printed = claim_a_printed_prediction(a, k);
  const IntSeq oracle = sorted_transmissions(prof);
  if (printed != oracle) {
    flag(r, Severity::kPaperDiscrepancy,
         "offset Tr(v)+s+2 disagrees with oracle: " + describe_difference(printed, oracle));
  }
  return r;
}

PointResult eval_dp_layers(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  const FamilySpec spec = extremal_long_arm(a, k);
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  check_master(r, dp_sets(a, k), prof);
  return r;
}

PointResult eval_ai_layers(const Point& p) {
  const std::int64_t a = p.get("a"), k = p.get("k");
  const FamilySpec spec = bs_star(a, k);
  PointResult r = start(p, render(spec));
  const TransmissionProfile prof = transmission_profile(build(spec));
  attach_oracle(r, prof);
  check_master(r, bs_star_sets(a, k), prof);
  return r;
}

KeyDomain key(std::string name, std::int64_t min, std::int64_t lo, std::int64_t hi,
              std::int64_t max = INT64_MAX) {
  return KeyDomain{std::move(name), min, max, lo, hi};
}

const std::map<TheoremId, TheoremSpec>& registry() {
  static const std::map<TheoremId, TheoremSpec> table = [] {
    std::map<TheoremId, TheoremSpec> t;
    const auto ak = [](std::int64_t amin, std::int64_t kmin, std::int64_t ahi, std::int64_t khi) {
      return std::vector<KeyDomain>{key("a", amin, amin, ahi), key("k", kmin, kmin, khi)};
    };
    t[TheoremId::kP1_2] = {{key("n", 1, 1, 14, kMaxTreeOrder)}, {}, nullptr,
                           [](const Point& p) { return eval_tree_filter(p, false); }};
    t[TheoremId::kP1_3] = {{key("n", 1, 1, 14, kMaxTreeOrder)}, {}, nullptr,
                           [](const Point& p) { return eval_tree_filter(p, true); }};
    t[TheoremId::kP1_5] = {{key("n", 4, 4, 20, 60)}, {}, nullptr, eval_p1_5};
    t[TheoremId::kT1] = {{key("k1", 1, 1, 25), key("k2", 1, 1, 25), key("k3", 1, 1, 25)},
                         {},
                         [](const Params& ps) {
                           return ps[0].second <= ps[1].second && ps[1].second <= ps[2].second;
                         },
                         eval_t1};
    t[TheoremId::kT2] = {ak(1, 2, 12, 12), {}, nullptr, eval_t2};
    t[TheoremId::kC2_3] = {ak(1, 2, 12, 12), {}, nullptr, eval_c2_3};
    t[TheoremId::kC2_4] = {{key("a", 1, 1, 50)}, {}, nullptr, eval_c2_4};
    t[TheoremId::kT2_5] = {{key("l", 3, 3, 30)}, {}, nullptr, eval_t2_5};
    t[TheoremId::kT2_6] = {ak(1, 2, 12, 30), {},
                           [](const Params& ps) {
                             return in_t2_6_window(ps[0].second, ps[1].second);
                           },
                           eval_t2_6};
    t[TheoremId::kT3_1] = {ak(1, 2, 10, 10), {}, nullptr, eval_t3_1};
    t[TheoremId::kL3_2] = {ak(1, 1, 12, 12), {}, nullptr, eval_l3_2};
    t[TheoremId::kT3_3] = {ak(1, 1, 8, 8), {}, nullptr, eval_t3_3};
    t[TheoremId::kC3_4] = {{key("a", 1, 1, 10)}, {}, nullptr, eval_c3_4};
    t[TheoremId::kR3] = {{key("a", 1, 2, 6)}, {2, 3, 5, 6}, nullptr, eval_r3};
    t[TheoremId::kT3_5] = {ak(1, 1, 10, 10), {}, nullptr, eval_t3_5};
    t[TheoremId::kP4_1] = {{key("k", 3, 3, 50)}, {}, nullptr, eval_p4_1};
    t[TheoremId::kT4_2] = {{key("a", 2, 2, 50)}, {}, nullptr, eval_t4_2};
    t[TheoremId::kClaimALayers] = {ak(1, 2, 10, 10), {}, nullptr, eval_claim_a};
    t[TheoremId::kDpLayers] = {ak(1, 1, 8, 8), {}, nullptr, eval_dp_layers};
    t[TheoremId::kAiLayers] = {ak(2, 1, 10, 10), {}, nullptr, eval_ai_layers};
    return t;
  }();
  return table;
}

const TheoremSpec& lookup(TheoremId id) {
  const auto it = registry().find(id);
  if (it == registry().end()) {
    throw VerifyError("unknown theorem id " + std::string(to_string(id)));
  }
  return it->second;
}

// Resolves requested ranges against the theorem's keys, in key order.
std::vector<std::vector<std::int64_t>> resolve(const TheoremSpec& spec, const ParamRanges& ranges) {
  for (const auto& r : ranges) {
    const bool known = std::any_of(spec.keys.begin(), spec.keys.end(),
                                   [&](const KeyDomain& d) { return d.name == r.key; });
    if (!known) throw VerifyError("unknown parameter '" + r.key + "' for this theorem");
  }
  std::vector<std::vector<std::int64_t>> out;
  for (const KeyDomain& d : spec.keys) {
    std::vector<std::int64_t> values;
    const auto it = std::find_if(ranges.begin(), ranges.end(),
                                 [&](const ParamRange& r) { return r.key == d.name; });
    if (it != ranges.end()) {
      values = it->values;
    } else if (!spec.default_values.empty()) {
      values = spec.default_values;
    } else {
      for (std::int64_t v = d.default_lo; v <= d.default_hi; ++v) values.push_back(v);
    }
    for (std::int64_t v : values) {
      if (v < d.min || v > d.max) {
        std::string msg = "range infeasible: " + d.name + "=" + std::to_string(v) +
                          " outside the domain " + d.name + " >= " + std::to_string(d.min);
        if (d.max != INT64_MAX) msg += ", " + d.name + " <= " + std::to_string(d.max);
        throw VerifyError(msg);
      }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    out.push_back(std::move(values));
  }
  return out;
}

std::vector<Point> expand(TheoremId id, const TheoremSpec& spec,
                          const std::vector<std::vector<std::int64_t>>& axes) {
  std::vector<Params> grid{{}};
  for (std::size_t i = 0; i < axes.size(); ++i) {
    std::vector<Params> next;
    for (const Params& prefix : grid) {
      for (std::int64_t v : axes[i]) {
        Params ps = prefix;
        ps.emplace_back(spec.keys[i].name, v);
        next.push_back(std::move(ps));
      }
    }
    grid = std::move(next);
  }

  std::vector<Point> points;
  for (Params& ps : grid) {
    if (spec.admit && !spec.admit(ps)) continue;
    const std::int64_t n = ps.front().second;
    if (id == TheoremId::kP1_2 || id == TheoremId::kP1_3) {
      std::int64_t index = 0;
      for_each_free_tree(static_cast<int>(n), [&](const LevelSequence& seq) {
        Params with_index{{"n", n}, {"i", index++}};
        std::string key = join_key(with_index);
        points.push_back({std::move(with_index), std::move(key), seq, std::nullopt});
      });
    } else if (id == TheoremId::kP1_5) {
      std::int64_t index = 0;
      for (FamilySpec& s : enumerate_starlike(static_cast<int>(n))) {
        Params with_index{{"n", n}, {"i", index++}};
        std::string key = join_key(with_index);
        points.push_back({std::move(with_index), std::move(key), std::nullopt, std::move(s)});
      }
    } else {
      std::string key = join_key(ps);
      points.push_back({std::move(ps), std::move(key), std::nullopt, std::nullopt});
    }
  }
  if (points.empty()) throw VerifyError("range infeasible: no parameter points");
  return points;
}

std::map<std::string, PointResult> load_completed(const std::filesystem::path& path,
                                                  TheoremId id) {
  std::map<std::string, PointResult> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A record cut short by an interrupted run is recomputed.
    const Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("theorem")) continue;
    if (j["theorem"] != to_string(id)) continue;
    PointResult r = point_from_json(j);
    done.insert_or_assign(r.key, std::move(r));
  }
  return done;
}

PointResult evaluate_guarded(const Evaluator& eval, const Point& p) {
  try {
    return eval(p);
  } catch (const std::exception& e) {
    PointResult r = start(p, "");
    flag(r, Severity::kError, std::string("evaluation failed: ") + e.what());
    return r;
  }
}

}  // namespace

ParamRange parse_range(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw VerifyError("range must look like key=lo..hi or key=v1,v2,...");
  }
  ParamRange r;
  r.key = std::string(text.substr(0, eq));
  const std::string_view body = text.substr(eq + 1);
  const auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw VerifyError("range value '" + std::string(s) + "' is not an integer");
    }
    return v;
  };
  if (const auto dots = body.find(".."); dots != std::string_view::npos) {
    const std::int64_t lo = parse_int(body.substr(0, dots));
    const std::int64_t hi = parse_int(body.substr(dots + 2));
    if (lo > hi) throw VerifyError("range infeasible: " + std::string(text) + " is empty");
    if (hi - lo >= 1'000'000) throw VerifyError("range too large: " + std::string(text));
    for (std::int64_t v = lo; v <= hi; ++v) r.values.push_back(v);
  } else {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto comma = body.find(',', pos);
      const auto end = comma == std::string_view::npos ? body.size() : comma;
      r.values.push_back(parse_int(body.substr(pos, end - pos)));
      pos = end + 1;
    }
  }
  return r;
}

ParamRanges default_ranges(TheoremId id) {
  const TheoremSpec& spec = lookup(id);
  ParamRanges out;
  for (const auto& values : resolve(spec, {})) {
    out.push_back({spec.keys[out.size()].name, values});
  }
  return out;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kAgree: return "agree";
    case Outcome::kNoVerdict: return "no-verdict";
    case Outcome::kMismatch: return "mismatch";
  }
  return "?";
}

std::string_view to_string(Severity s) {
  return s == Severity::kError ? "error" : "paper-discrepancy";
}

std::optional<Outcome> outcome_from_string(std::string_view text) {
  for (Outcome o : {Outcome::kAgree, Outcome::kNoVerdict, Outcome::kMismatch}) {
    if (to_string(o) == text) return o;
  }
  return std::nullopt;
}

std::optional<Severity> severity_from_string(std::string_view text) {
  for (Severity s : {Severity::kError, Severity::kPaperDiscrepancy}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::size_t VerificationReport::errors() const {
  return static_cast<std::size_t>(std::count_if(
      mismatches.begin(), mismatches.end(),
      [](const PointResult& r) { return r.severity == Severity::kError; }));
}

std::size_t VerificationReport::discrepancies() const { return mismatches.size() - errors(); }

int VerificationReport::exit_code() const {
  if (errors() > 0) return 1;
  if (discrepancies() > 0) return 3;
  return 0;
}

VerificationReport verify(TheoremId id, const ParamRanges& ranges, const VerifyOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  const TheoremSpec& spec = lookup(id);
  const std::vector<Point> points = expand(id, spec, resolve(spec, ranges));

  std::map<std::string, PointResult> done;
  if (opts.out && std::filesystem::exists(*opts.out)) done = load_completed(*opts.out, id);

  std::vector<std::optional<PointResult>> results(points.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (auto it = done.find(points[i].key); it != done.end()) {
      results[i] = it->second;
    } else {
      pending.push_back(i);
    }
  }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t slot = next++; slot < pending.size(); slot = next++) {
      const std::size_t i = pending[slot];
      results[i] = evaluate_guarded(spec.evaluate, points[i]);
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(std::max(1u, opts.jobs), std::max<std::size_t>(pending.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  if (opts.out) {
    std::ofstream log(*opts.out, std::ios::app);
    if (!log) throw VerifyError("cannot open report file " + opts.out->string());
    for (std::size_t i : pending) log << point_json(id, *results[i]).dump() << '\n';
  }

  VerificationReport report;
  report.theorem = id;
  for (auto& r : results) {
    ++report.points;
    switch (r->outcome) {
      case Outcome::kAgree: ++report.agreements; break;
      case Outcome::kNoVerdict: ++report.no_verdict; break;
      case Outcome::kMismatch: report.mismatches.push_back(*r); break;
    }
    report.results.push_back(std::move(*r));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace wiener
