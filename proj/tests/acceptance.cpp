// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "wiener/classify.hpp"
#include "wiener/closed_form.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/verify.hpp"

using namespace wiener;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, const std::function<Result()>& body) {
  Result o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", number, title, o.detail.c_str());
  std::fflush(stdout);
}

std::string summary(const VerificationReport& r) {
  std::ostringstream os;
  os << to_string(r.theorem) << " " << r.points << " points, " << r.agreements << " agree, "
     << r.no_verdict << " no verdict, " << r.errors() << " errors, " << r.discrepancies()
     << " discrepancies";
  return os.str();
}

IntSeq oracle_sorted(const FamilySpec& spec) {
  const TransmissionProfile p = transmission_profile(build(spec));
  IntSeq out(p.transmissions.begin(), p.transmissions.end());
  std::sort(out.begin(), out.end());
  return out;
}

ParamRanges ranges(std::initializer_list<const char*> texts) {
  ParamRanges out;
  for (const char* t : texts) out.push_back(parse_range(t));
  return out;
}

}  // namespace

int main() {
  criterion(1, "three-arm characterization vs oracle", [] {
    const auto r = verify(TheoremId::kT1, ranges({"k1=1..25", "k2=1..25", "k3=1..25"}));
    return Result{r.points == 2925 && r.agreements == r.points, summary(r)};
  });

  criterion(2, "T(a,a+1,a+2) sweep", [] {
    const auto r = verify(TheoremId::kC2_4, ranges({"a=1..50"}));
    const TransmissionProfile p = transmission_profile(build(starlike({2, 3, 4})));
    const auto at25 = std::count(p.transmissions.begin(), p.transmissions.end(), 25);
    return Result{r.points == 50 && r.agreements == 50 && at25 == 2,
                   summary(r) + "; T(2,3,4) has " + std::to_string(at25) + " vertices at 25"};
  });

  criterion(3, "unit arithmetic odd order and congruence", [] {
    const auto t2 = verify(TheoremId::kT2, ranges({"a=1..12", "k=2..12"}));
    const auto c23 = verify(TheoremId::kC2_3, ranges({"a=1..12", "k=2..12"}));
    std::size_t odd = 0;
    for (const auto& p : t2.results) odd += p.claimed == Status::kIrregular;
    const bool ok = t2.mismatches.empty() && c23.mismatches.empty() && odd == t2.agreements &&
                    c23.agreements == odd;
    return Result{ok, summary(t2) + "; " + summary(c23)};
  });

  criterion(4, "T(1,...,l) sweep", [] {
    const auto r = verify(TheoremId::kT2_5, ranges({"l=3..30"}));
    std::vector<std::int64_t> not_ti;
    for (const auto& p : r.results) {
      if (p.oracle_irregular == false) not_ti.push_back(p.params[0].second);
    }
    const auto start = std::chrono::steady_clock::now();
    const Graph g = build(unit_arithmetic(1, 29));
    transmission_profile(g);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    const bool ok = r.mismatches.empty() && not_ti == std::vector<std::int64_t>{5, 10, 17, 26} &&
                    g.order() == 466 && ms < 1000;
    return Result{ok, summary(r) + "; n=" + std::to_string(g.order()) + " in " +
                           std::to_string(ms) + " ms"};
  });

  criterion(5, "non-irregular window", [] {
    const auto r = verify(TheoremId::kT2_6, ranges({"a=1..12", "k=2..30"}));
    return Result{r.points > 0 && r.agreements == r.points, summary(r)};
  });

  criterion(6, "master layer-set property", [] {
    std::size_t checked = 0, failed = 0;
    std::string first;
    const auto check = [&](const LayerSets& s, const FamilySpec& spec) {
      ++checked;
      if (predicted_transmissions(s) != oracle_sorted(spec)) {
        if (failed++ == 0) first = render(spec);
      }
    };
    for (std::int64_t a = 1; a <= 10; ++a) {
      for (std::int64_t k = 2; k <= 10; ++k) {
        if (unit_arithmetic_order(a, k) % 2 == 1) check(bp_sets(a, k), unit_arithmetic(a, k));
        if (odd_order_congruence(a, k)) check(broken_sets(a, k), broken_unit_arithmetic(a, k));
      }
      for (std::int64_t k = 1; k <= 10; ++k) {
        if (a > 1) check(bs_star_sets(a, k), bs_star(a, k));
      }
    }
    for (std::int64_t k = 3; k <= 50; ++k) {
      const LayerSets s = triangle_sets(k);
      if (intersection(s.named.at("A"), s.named.at("B")).empty()) check(s, triangle_five(k));
    }
    for (std::int64_t a = 2; a <= 50; a += 2) {
      check(line_graph_sets(a), line_of(starlike({a, a + 1, a + 2})));
    }
    return Result{failed == 0 && checked > 0,
                   std::to_string(checked) + " instances, " + std::to_string(failed) +
                       " mismatches" + (first.empty() ? "" : ", first " + first)};
  });

  criterion(7, "extremal layers and square avoidance", [] {
    const auto l32 = verify(TheoremId::kL3_2, ranges({"a=1..12", "k=1..12"}));
    const auto t33 = verify(TheoremId::kT3_3, ranges({"a=1..8", "k=1..8"}));
    return Result{l32.mismatches.empty() && t33.errors() == 0,
                   summary(l32) + "; " + summary(t33)};
  });

  criterion(8, "printed-formula discrepancies exit 3", [] {
    const auto claim = verify(TheoremId::kClaimALayers, ranges({"a=1", "k=2"}));
    const auto cor = verify(TheoremId::kC3_4, ranges({"a=2"}));
    bool at40 = false;
    for (const auto& m : cor.mismatches) {
      at40 = at40 || (m.instance == "T(2,3,5)" &&
                       std::any_of(m.collisions.begin(), m.collisions.end(),
                                   [](const CollisionWitness& c) { return c.value == 40; }));
    }
    const bool ok = claim.exit_code() == 3 && claim.mismatches.size() == 1 &&
                    claim.mismatches[0].instance == "T(1,2,3)" && cor.exit_code() == 3 && at40;
    return Result{ok, "exit codes " + std::to_string(claim.exit_code()) + " and " +
                           std::to_string(cor.exit_code()) + "; " + summary(claim) + "; " +
                           summary(cor)};
  });

  criterion(9, "bi-starlike remark booleans", [] {
    std::string detail;
    bool ok = true;
    for (const auto& [a, stated] : std::vector<std::pair<Arm, bool>>{
             {2, true}, {3, true}, {5, true}, {6, false}}) {
      const TransmissionProfile p = transmission_profile(build(bt_consecutive(a)));
      const bool match = p.is_irregular == stated;
      ok = ok && match;
      if (!detail.empty()) detail += "; ";
      detail += "a=" + std::to_string(a) + (p.is_irregular ? " TI" : " not TI");
      if (!match && !p.collisions.empty()) {
        detail += " (stated " + std::string(stated ? "TI" : "not TI") + ", transmission " +
                  std::to_string(p.transmissions[static_cast<std::size_t>(p.collisions[0].u)]) +
                  " repeats)";
      }
    }
    return Result{ok, detail};
  });

  criterion(10, "edge transmission difference property", [] {
    std::mt19937_64 rng(20240601);
    std::size_t edges = 0, bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const Vertex n = 2 + static_cast<Vertex>(rng() % 11);
      const Graph g = testing::random_connected_graph(rng, n, 0.15 + 0.05 * (i % 8));
      const TransmissionProfile p = transmission_profile(g);
      for (const Edge& e : g.edges()) {
        const EdgeSplit s = edge_split(g, e.u, e.v);
        ++edges;
        bad += p.transmissions[static_cast<std::size_t>(e.u)] -
                   p.transmissions[static_cast<std::size_t>(e.v)] !=
               s.n_v - s.n_u;
      }
    }
    return Result{bad == 0, "1000 graphs, " + std::to_string(edges) + " edges, " +
                                 std::to_string(bad) + " violations"};
  });

  criterion(11, "free-tree enumeration", [] {
    const std::vector<std::size_t> expected{2, 3, 6, 11, 23, 47, 106};
    bool ok = true;
    std::string counts;
    for (Vertex n = 4; n <= 10; ++n) {
      std::set<std::string> fast, slow;
      for (const Graph& g : free_trees(n)) fast.insert(testing::tree_code(g));
      for (const Graph& g : testing::reference_free_trees(n)) slow.insert(testing::tree_code(g));
      const std::size_t count = free_trees(n).size();
      ok = ok && fast == slow && count == fast.size() &&
           count == expected[static_cast<std::size_t>(n - 4)];
      counts += std::to_string(count) + (n < 10 ? "," : "");
    }
    const Census c = census(7);
    const std::string target = testing::tree_code(build(starlike({1, 2, 3})));
    bool listed = false;
    for (const auto& edges : c.irregular_witnesses) {
      listed = listed || testing::tree_code(Graph(7, edges)) == target;
    }
    return Result{ok && listed, "counts " + counts + "; census(7) lists T(1,2,3): " +
                                     (listed ? "yes" : "no")};
  });

  criterion(12, "necessary-condition filters", [] {
    const auto p12 = verify(TheoremId::kP1_2, ranges({"n=1..14"}));
    const auto p13 = verify(TheoremId::kP1_3, ranges({"n=1..14"}));
    const auto p15 = verify(TheoremId::kP1_5, ranges({"n=4..14"}));
    const bool ok = p12.mismatches.empty() && p13.mismatches.empty() && p15.mismatches.empty();
    return Result{ok, summary(p12) + "; " + summary(p13) + "; " + summary(p15)};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
