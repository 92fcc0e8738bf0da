// Command-line front end: compute, classify, dump-sets, search, verify, render.

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wiener/classify.hpp"
#include "wiener/closed_form.hpp"
#include "wiener/enumerate.hpp"
#include "wiener/families.hpp"
#include "wiener/family_parser.hpp"
#include "wiener/graph.hpp"
#include "wiener/json_io.hpp"
#include "wiener/verify.hpp"

namespace {

using namespace wiener;

enum class Format { kJson, kCsv, kPlain };

// Thrown for flag combinations the parser cannot express.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  Format format = Format::kJson;
  unsigned jobs = 1;

  std::string expr;
  std::optional<std::string> edge_list;
  std::optional<std::string> sets;

  int order = 0;
  std::string tree_class = "trees";
  std::optional<int> arms;
  bool ti_only = false;

  std::string theorem;
  std::vector<std::string> ranges;
  std::optional<std::string> out;
};

void require_not_csv(const Options& o, const char* command) {
  if (o.format == Format::kCsv) {
    throw UsageError(std::string("csv output is only available for verify, not ") + command);
  }
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

Graph load_edge_list(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open edge list " + path);
  return read_edge_list(in);
}

int run_compute(const Options& o) {
  require_not_csv(o, "compute");
  if (o.edge_list.has_value() == !o.expr.empty()) {
    throw UsageError("compute takes either a family expression or --edge-list");
  }
  const Graph g = o.edge_list ? load_edge_list(*o.edge_list) : build(parse_family(o.expr));
  const TransmissionProfile p = transmission_profile(g);
  if (o.format == Format::kPlain) {
    std::cout << "n " << g.order() << "\nm " << g.size() << "\nwiener " << p.wiener
              << "\ncomplexity " << p.complexity << "\nirregular "
              << (p.is_irregular ? "yes" : "no") << "\ntransmissions";
    for (Transmission t : p.transmissions) std::cout << ' ' << t;
    std::cout << '\n';
  } else {
    emit(profile_json(g, p));
  }
  return 0;
}

int run_classify(const Options& o) {
  require_not_csv(o, "classify");
  const Verdict v = classify(parse_family(o.expr));
  if (o.format == Format::kPlain) {
    std::cout << to_string(v.status) << " (" << to_string(v.source) << ")\n";
  } else {
    emit(verdict_json(v));
  }
  return 0;
}

LayerSets select_sets(const FamilySpec& spec, const std::optional<std::string>& wanted) {
  const auto want = [&](const char* name) { return !wanted || *wanted == name; };
  if (const auto* s = spec.get_if<Starlike>()) {
    if (auto u = as_unit_arithmetic(s->arms); u && want("bp")) return bp_sets(u->a, u->k);
    if (auto e = as_extremal(s->arms); e && want("dp")) return dp_sets(e->a, e->k);
  } else if (const auto* b = spec.get_if<BrokenUnitArithmetic>()) {
    if (auto shape = as_broken_shape(*b); shape && want("broken")) {
      return broken_sets(shape->a, shape->k);
    }
  } else if (const auto* bs = spec.get_if<BiStarlikeBSStar>()) {
    if (want("bs-star")) return bs_star_sets(bs->a, bs->k);
  } else if (const auto* t = spec.get_if<TriangleFiveArm>()) {
    if (t->k1 == 1 && t->k2 == 1 && t->k4 == 2 && t->k3 == t->k5 && want("triangle")) {
      return triangle_sets(t->k3);
    }
  } else if (const auto* l = spec.get_if<LineOf>()) {
    if (const auto* s = l->inner->get_if<Starlike>()) {
      const auto& k = s->arms;
      if (k.size() == 3 && k[1] == k[0] + 1 && k[2] == k[0] + 2 && want("line")) {
        return line_graph_sets(k[0]);
      }
    }
  }
  throw UsageError("no closed-form sets" + (wanted ? " of kind '" + *wanted + "'" : std::string()) +
                   " for " + render(spec));
}

int run_dump_sets(const Options& o) {
  require_not_csv(o, "dump-sets");
  const LayerSets sets = select_sets(parse_family(o.expr), o.sets);
  if (o.format == Format::kPlain) {
    std::cout << to_string(sets.family) << " offset_base " << sets.offset_base << '\n';
    for (const auto& [index, values] : sets.layers) {
      std::cout << index << ':';
      for (auto v : values) std::cout << ' ' << v;
      std::cout << '\n';
    }
  } else {
    emit(layer_sets_json(sets));
  }
  return 0;
}

int run_search(const Options& o) {
  require_not_csv(o, "search");
  if (o.tree_class == "trees") {
    if (o.arms) throw UsageError("--arms applies to --class starlike only");
    const Census c = census(o.order);
    if (o.format == Format::kPlain) {
      std::cout << "order " << c.order << "\ntrees " << c.trees << "\nirregular " << c.irregular
                << '\n';
      if (!o.ti_only) {
        for (const auto& [complexity, count] : c.complexity_histogram) {
          std::cout << "complexity " << complexity << ": " << count << '\n';
        }
      }
    } else {
      emit(census_json(c, o.ti_only));
    }
    return 0;
  }
  Json rows = Json::array();
  for (const FamilySpec& spec : enumerate_starlike(o.order, o.arms)) {
    const TransmissionProfile p = transmission_profile(build(spec));
    if (o.ti_only && !p.is_irregular) continue;
    if (o.format == Format::kPlain) {
      std::cout << render(spec) << ' ' << p.complexity << (p.is_irregular ? " TI" : "") << '\n';
    } else {
      Json row;
      row["family"] = render(spec);
      row["complexity"] = p.complexity;
      row["is_irregular"] = p.is_irregular;
      rows.push_back(row);
    }
  }
  if (o.format == Format::kJson) emit(rows);
  return 0;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

int run_verify(const Options& o) {
  const auto id = theorem_from_string(o.theorem);
  if (!id) throw UsageError("unknown theorem id '" + o.theorem + "'");
  ParamRanges ranges;
  for (const auto& r : o.ranges) ranges.push_back(parse_range(r));
  VerifyOptions vo;
  vo.jobs = o.jobs;
  if (o.out) vo.out = *o.out;
  const VerificationReport report = verify(*id, ranges, vo);

  switch (o.format) {
    case Format::kJson:
      emit(report_json(report));
      break;
    case Format::kCsv:
      std::cout << "key,instance,outcome,severity,claimed,oracle,detail\n";
      for (const auto& r : report.results) {
        std::cout << csv_field(r.key) << ',' << csv_field(r.instance) << ','
                  << to_string(r.outcome) << ','
                  << (r.severity ? to_string(*r.severity) : "") << ','
                  << (r.claimed ? to_string(*r.claimed) : "") << ','
                  << (r.oracle_irregular ? (*r.oracle_irregular ? "Irregular" : "NotIrregular")
                                         : "")
                  << ',' << csv_field(r.detail) << '\n';
      }
      break;
    case Format::kPlain:
      std::cout << to_string(report.theorem) << ": " << report.points << " points, "
                << report.agreements << " agree, " << report.no_verdict << " no verdict, "
                << report.mismatches.size() << " mismatches (" << report.errors() << " errors, "
                << report.discrepancies() << " printed-formula discrepancies), " << report.elapsed_ms
                << " ms\n";
      for (const auto& m : report.mismatches) {
        std::cout << "  " << m.key << ' ' << m.instance << " ["
                  << to_string(m.severity.value_or(Severity::kError)) << "] " << m.detail << '\n';
      }
      break;
  }
  return report.exit_code();
}

int run_render(const Options& o) {
  require_not_csv(o, "render");
  write_edge_list(std::cout, build(parse_family(o.expr)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex transmissions, Wiener complexity and transmission irregularity"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  const std::map<std::string, Format> formats{
      {"json", Format::kJson}, {"csv", Format::kCsv}, {"plain", Format::kPlain}};
  app.add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 256u));
  app.add_flag("--deterministic", "No effect; output is always deterministic");

  auto* compute = app.add_subcommand("compute", "Transmission profile of a family or edge list");
  compute->add_option("expr", o.expr, "Family expression");
  compute->add_option("--edge-list", o.edge_list, "Edge-list file, or - for stdin");

  auto* classify_cmd = app.add_subcommand("classify", "Classify a family instance");
  classify_cmd->add_option("expr", o.expr, "Family expression")->required();

  auto* dump = app.add_subcommand("dump-sets", "Closed-form layer sets of a family instance");
  dump->add_option("expr", o.expr, "Family expression")->required();
  dump->add_option("--sets", o.sets, "Set kind")
      ->check(CLI::IsMember({"bp", "dp", "broken", "bs-star", "triangle", "line"}));

  auto* search = app.add_subcommand("search", "Enumerate trees or starlike trees of one order");
  search->add_option("--order", o.order, "Number of vertices")->required();
  search->add_option("--class", o.tree_class, "trees or starlike")
      ->check(CLI::IsMember({"trees", "starlike"}))
      ->capture_default_str();
  search->add_option("--arms", o.arms, "Arm count for --class starlike");
  search->add_flag("--ti-only", o.ti_only, "Report transmission irregular instances only");

  auto* verify_cmd = app.add_subcommand("verify", "Sweep a theorem against the BFS oracle");
  verify_cmd->add_option("theorem", o.theorem, "Theorem id")->required();
  verify_cmd->add_option("--range", o.ranges, "key=lo..hi or key=v1,v2 (repeatable)");
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify_cmd->add_option("--out", o.out, "JSON Lines report; existing records are resumed");

  auto* render_cmd = app.add_subcommand("render", "Edge list of a family instance");
  render_cmd->add_option("expr", o.expr, "Family expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*compute) return run_compute(o);
    if (*classify_cmd) return run_classify(o);
    if (*dump) return run_dump_sets(o);
    if (*search) return run_search(o);
    if (*verify_cmd) return run_verify(o);
    if (*render_cmd) return run_render(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
