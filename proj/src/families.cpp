#include "wiener/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wiener {

namespace {

constexpr Arm kMaxOrder = Arm{1} << 24;

void require(bool ok, const std::string& rule) {
  if (!ok) throw FamilyError(rule);
}

void require_positive_arms(const std::vector<Arm>& arms) {
  for (Arm k : arms) require(k >= 1, "arm lengths must be ≥ 1");
}

void require_starlike_arms(const std::vector<Arm>& arms) {
  require_positive_arms(arms);
  require(arms.size() >= 3, "a starlike tree needs at least 3 arms");
}

struct Canonicalize {
  void operator()(Starlike& s) const {
    require_starlike_arms(s.arms);
    std::sort(s.arms.begin(), s.arms.end());
  }
  void operator()(BrokenUnitArithmetic& b) const {
    require(b.first >= 1, "arm lengths must be ≥ 1");
    require(b.first <= b.last_before_gap, "T[a,b;c,d] requires a ≤ b");
    require(b.first_after_gap >= b.last_before_gap + 2,
            "T[a,b;c,d] requires at least one removed length (c ≥ b+2)");
    require(b.first_after_gap <= b.last, "T[a,b;c,d] requires c ≤ d");
    require((b.last_before_gap - b.first + 1) + (b.last - b.first_after_gap + 1) >= 3,
            "a starlike tree needs at least 3 arms");
  }
  void operator()(BiStarlikeBT& t) const {
    require_starlike_arms(t.arms);
    std::sort(t.arms.begin(), t.arms.end());
    require(std::find(t.arms.begin(), t.arms.end(), t.shoulder) != t.arms.end(),
            "BT^(s)(...) requires s to be one of the arm lengths");
  }
  void operator()(BiStarlikeBSStar& s) const {
    require(s.a >= 1, "BS* requires a ≥ 1");
    require(s.k >= 1, "BS* requires at least two consecutive arm lengths (k ≥ 1)");
  }
  void operator()(TriangleFiveArm& t) const {
    require_positive_arms({t.k1, t.k2, t.k3, t.k4, t.k5});
    if (t.k2 > t.k3) std::swap(t.k2, t.k3);
    if (t.k4 > t.k5) std::swap(t.k4, t.k5);
  }
  void operator()(TriangleThreeArm& t) const {
    std::vector<Arm> arms{t.k1, t.k2, t.k3};
    require_positive_arms(arms);
    std::sort(arms.begin(), arms.end());
    t = {arms[0], arms[1], arms[2]};
  }
  void operator()(LineOf& l) const { require(l.inner != nullptr, "L(...) requires an inner family"); }
};

// Accumulates edges while numbering new vertices consecutively.
class Builder {
 public:
  Vertex add_vertex() {
    require(next_ < kMaxOrder, "family instance too large");
    return static_cast<Vertex>(next_++);
  }
  void connect(Vertex u, Vertex v) { edges_.push_back({u, v}); }
  // Pendant path of `length` new vertices hanging from `at`; returns the leaf.
  Vertex add_path(Vertex at, Arm length) {
    require(next_ + length <= kMaxOrder, "family instance too large");
    Vertex prev = at;
    for (Arm i = 0; i < length; ++i) {
      Vertex v = add_vertex();
      connect(prev, v);
      prev = v;
    }
    return prev;
  }
  // Center plus sorted arms; returns the leaf of each arm.
  std::vector<Vertex> add_star_arms(Vertex center, const std::vector<Arm>& arms) {
    std::vector<Vertex> leaves;
    for (Arm k : arms) leaves.push_back(add_path(center, k));
    return leaves;
  }
  Graph finish() const { return Graph(static_cast<Vertex>(next_), edges_); }

 private:
  Arm next_ = 0;
  std::vector<Edge> edges_;
};

std::vector<Arm> consecutive(Arm a, Arm k) {
  std::vector<Arm> arms(static_cast<std::size_t>(k + 1));
  std::iota(arms.begin(), arms.end(), a);
  return arms;
}

struct BuildVisitor {
  Graph operator()(const Starlike& s) const {
    Builder b;
    b.add_star_arms(b.add_vertex(), s.arms);
    return b.finish();
  }
  Graph operator()(const BrokenUnitArithmetic& br) const {
    return (*this)(Starlike{broken_arms(br)});
  }
  Graph operator()(const BiStarlikeBT& t) const {
    Builder b;
    const std::vector<Vertex> leaves = b.add_star_arms(b.add_vertex(), t.arms);
    const auto pos = std::find(t.arms.begin(), t.arms.end(), t.shoulder) - t.arms.begin();
    b.add_star_arms(leaves[static_cast<std::size_t>(pos)], t.arms);
    return b.finish();
  }
  Graph operator()(const BiStarlikeBSStar& s) const {
    const std::vector<Arm> arms = consecutive(s.a, s.k);
    Builder b;
    const Vertex first = b.add_vertex();
    b.add_star_arms(first, arms);
    b.connect(first, b.add_vertex());  // pendant on the first center
    const Vertex second = b.add_vertex();
    b.connect(first, second);
    b.add_star_arms(second, arms);
    return b.finish();
  }
  Graph operator()(const TriangleFiveArm& t) const {
    Builder b;
    const Vertex w = b.add_vertex(), u = b.add_vertex(), v = b.add_vertex();
    b.connect(w, u);
    b.connect(w, v);
    b.connect(u, v);
    b.add_path(w, t.k1);
    b.add_path(u, t.k2);
    b.add_path(u, t.k3);
    b.add_path(v, t.k4);
    b.add_path(v, t.k5);
    return b.finish();
  }
  Graph operator()(const TriangleThreeArm& t) const {
    Builder b;
    const Vertex x = b.add_vertex(), y = b.add_vertex(), z = b.add_vertex();
    b.connect(x, y);
    b.connect(x, z);
    b.connect(y, z);
    b.add_path(x, t.k1);
    b.add_path(y, t.k2);
    b.add_path(z, t.k3);
    return b.finish();
  }
  Graph operator()(const LineOf& l) const { return line_graph(build(*l.inner)); }
};

void render_list(std::ostream& out, const std::vector<Arm>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
}

struct RenderVisitor {
  std::ostream& out;
  void operator()(const Starlike& s) const {
    out << "T(";
    render_list(out, s.arms);
    out << ')';
  }
  void operator()(const BrokenUnitArithmetic& b) const {
    out << "T[" << b.first << ',' << b.last_before_gap << ';' << b.first_after_gap << ','
        << b.last << ']';
  }
  void operator()(const BiStarlikeBT& t) const {
    out << "BT^(" << t.shoulder << ")(";
    render_list(out, t.arms);
    out << ')';
  }
  void operator()(const BiStarlikeBSStar& s) const {
    out << "BS*(";
    render_list(out, consecutive(s.a, s.k));
    out << ')';
  }
  void operator()(const TriangleFiveArm& t) const {
    out << "C3(" << t.k1 << ';' << t.k2 << ',' << t.k3 << ';' << t.k4 << ',' << t.k5 << ')';
  }
  void operator()(const TriangleThreeArm& t) const {
    out << "C3(" << t.k1 << ',' << t.k2 << ',' << t.k3 << ')';
  }
  void operator()(const LineOf& l) const {
    out << "L(";
    std::visit(*this, l.inner->variant());
    out << ')';
  }
};

}  // namespace

bool operator==(const LineOf& x, const LineOf& y) {
  if (x.inner == y.inner) return true;
  if (!x.inner || !y.inner) return false;
  return *x.inner == *y.inner;
}

FamilySpec::FamilySpec(Variant v) : v_(std::move(v)) { std::visit(Canonicalize{}, v_); }

FamilySpec starlike(std::vector<Arm> arms) { return FamilySpec(Starlike{std::move(arms)}); }

FamilySpec line_of(FamilySpec inner) {
  return FamilySpec(LineOf{std::make_shared<const FamilySpec>(std::move(inner))});
}

FamilySpec unit_arithmetic(Arm a, Arm k) {
  require(a >= 1, "unit arithmetic starlike tree requires a ≥ 1");
  require(k >= 2, "unit arithmetic starlike tree requires k ≥ 2");
  return starlike(consecutive(a, k));
}

FamilySpec extremal_long_arm(Arm a, Arm k) {
  require(a >= 1 && k >= 1, "extremal starlike tree requires a ≥ 1 and k ≥ 1");
  std::vector<Arm> arms = consecutive(a, k);
  arms.push_back((2 * a + k) * (k + 1) / 2);
  return starlike(std::move(arms));
}

FamilySpec broken_unit_arithmetic(Arm a, Arm k) {
  require(a >= 1, "broken unit arithmetic starlike tree requires a ≥ 1");
  require(k >= 2, "broken unit arithmetic starlike tree requires k ≥ 2");
  return FamilySpec(BrokenUnitArithmetic{a, a + k - 2, a + k, a + k + 1});
}

FamilySpec bs_star(Arm a, Arm k) { return FamilySpec(BiStarlikeBSStar{a, k}); }

FamilySpec bt_consecutive(Arm a) {
  return FamilySpec(BiStarlikeBT{2 * a + 1, {a, a + 1, 2 * a + 1}});
}

FamilySpec triangle_five(Arm k) { return FamilySpec(TriangleFiveArm{1, 1, k, 2, k}); }

std::vector<Arm> broken_arms(const BrokenUnitArithmetic& b) {
  std::vector<Arm> arms;
  for (Arm x = b.first; x <= b.last_before_gap; ++x) arms.push_back(x);
  for (Arm x = b.first_after_gap; x <= b.last; ++x) arms.push_back(x);
  return arms;
}

std::optional<UnitArithmeticParams> as_unit_arithmetic(const std::vector<Arm>& arms) {
  if (arms.size() < 3) return std::nullopt;
  for (std::size_t i = 1; i < arms.size(); ++i) {
    if (arms[i] != arms[i - 1] + 1) return std::nullopt;
  }
  return UnitArithmeticParams{arms.front(), static_cast<Arm>(arms.size()) - 1};
}

std::optional<UnitArithmeticParams> as_extremal(const std::vector<Arm>& arms) {
  if (arms.size() < 3) return std::nullopt;
  const Arm a = arms.front();
  const Arm k = static_cast<Arm>(arms.size()) - 2;
  for (std::size_t i = 1; i + 1 < arms.size(); ++i) {
    if (arms[i] != arms[i - 1] + 1) return std::nullopt;
  }
  if (arms.back() != (2 * a + k) * (k + 1) / 2) return std::nullopt;
  return UnitArithmeticParams{a, k};
}

std::optional<UnitArithmeticParams> as_broken_shape(const BrokenUnitArithmetic& b) {
  const Arm a = b.first;
  const Arm k = b.last_before_gap - a + 2;
  if (k >= 2 && b.first_after_gap == a + k && b.last == a + k + 1) {
    return UnitArithmeticParams{a, k};
  }
  return std::nullopt;
}

Graph build(const FamilySpec& spec) { return std::visit(BuildVisitor{}, spec.variant()); }

std::string render(const FamilySpec& spec) {
  std::ostringstream out;
  std::visit(RenderVisitor{out}, spec.variant());
  return out.str();
}

}  // namespace wiener
