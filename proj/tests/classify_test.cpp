#include <gtest/gtest.h>

#include "wiener/classify.hpp"
#include "wiener/closed_form.hpp"
#include "wiener/family_parser.hpp"

namespace wiener {
namespace {

bool oracle_irregular(const FamilySpec& spec) {
  return transmission_profile(build(spec)).is_irregular;
}

TEST(Theorem1, Examples) {
  const Verdict v234 = classify_starlike3(2, 3, 4);
  EXPECT_EQ(v234.status, Status::kNotIrregular);
  const auto* t = std::get_if<ExceptionalTriple>(&v234.witness);
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->which, ExceptionalSet::kXZ);
  EXPECT_EQ(t->lower, 1);
  EXPECT_EQ(t->upper, 2);
  EXPECT_EQ(t->p, 1);
  EXPECT_EQ(reconstruct(*t), (std::array<std::int64_t, 3>{2, 3, 4}));

  EXPECT_EQ(classify_starlike3(3, 4, 5).status, Status::kIrregular);

  const Verdict v115 = classify_starlike3(1, 1, 5);
  EXPECT_EQ(v115.status, Status::kNotIrregular);
  EXPECT_TRUE(std::holds_alternative<ArmConditionFailure>(v115.witness));
}

TEST(Theorem1, WitnessesReconstruct) {
  for (std::int64_t k3 = 1; k3 <= 20; ++k3) {
    for (std::int64_t k2 = 1; k2 <= k3; ++k2) {
      for (std::int64_t k1 = 1; k1 <= k2; ++k1) {
        if (auto t = find_exceptional_triple(k1, k2, k3)) {
          EXPECT_EQ(reconstruct(*t), (std::array<std::int64_t, 3>{k1, k2, k3}));
        }
      }
    }
  }
}

// T(1,k2,k3) can only be irregular when k3 = k2 + 1, and not always then.
TEST(Theorem1, ShortestArmOne) {
  std::vector<std::int64_t> exceptions;
  for (std::int64_t k2 = 2; k2 <= 25; ++k2) {
    for (std::int64_t k3 = k2; k3 <= 30; ++k3) {
      const bool irregular = classify_starlike3(1, k2, k3).status == Status::kIrregular;
      EXPECT_EQ(irregular, oracle_irregular(starlike({1, k2, k3})));
      if (irregular) EXPECT_EQ(k3, k2 + 1) << "k2=" << k2;
      if (k3 == k2 + 1 && !irregular) exceptions.push_back(k2);
    }
  }
  EXPECT_EQ(exceptions, (std::vector<std::int64_t>{4, 7, 12, 17, 24}));
  EXPECT_EQ(classify_starlike3(1, 1, 2).status, Status::kNotIrregular);
}

TEST(UnitArithmetic, Examples) {
  EXPECT_EQ(classify_unit_arithmetic(1, 2).status, Status::kIrregular);
  EXPECT_EQ(classify_unit_arithmetic(2, 3).status, Status::kIrregular);

  const Verdict window = classify_unit_arithmetic(3, 4);
  EXPECT_EQ(window.status, Status::kNotIrregular);
  EXPECT_EQ(window.source, TheoremId::kT2_6);
  const auto* c = std::get_if<LayerCollision>(&window.witness);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->layer, 2);
}

TEST(UnitArithmetic, CongruenceMatchesParity) {
  for (std::int64_t a = 1; a <= 40; ++a) {
    for (std::int64_t k = 2; k <= 40; ++k) {
      EXPECT_EQ(odd_order_congruence(a, k), unit_arithmetic_order(a, k) % 2 == 1);
    }
  }
}

TEST(Consecutive3, Examples) {
  EXPECT_EQ(classify_consecutive3(1).status, Status::kIrregular);
  EXPECT_EQ(classify_consecutive3(49).status, Status::kIrregular);
  const Verdict v = classify_consecutive3(2);
  EXPECT_EQ(v.status, Status::kNotIrregular);
  const auto* c = std::get_if<LayerCollision>(&v.witness);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(starlike_center_transmission({2, 3, 4}) + c->value, 25);
}

TEST(OneToEll, Examples) {
  EXPECT_EQ(classify_one_to_ell(5).status, Status::kNotIrregular);
  EXPECT_EQ(classify_one_to_ell(10).status, Status::kNotIrregular);
  EXPECT_EQ(classify_one_to_ell(7).status, Status::kIrregular);
  EXPECT_EQ(std::get<SquareHit>(classify_one_to_ell(17).witness).root, 4);
}

TEST(Broken, Examples) {
  EXPECT_EQ(classify_broken(1, 3).status, Status::kIrregular);
  EXPECT_EQ(classify_broken(2, 4).status, Status::kIrregular);
  EXPECT_EQ(classify_broken(2, 2).status, Status::kNoVerdict);
}

TEST(Extremal, Examples) {
  const Verdict v = classify_extremal(2, 1);
  EXPECT_EQ(v.status, Status::kNoVerdict);
  EXPECT_EQ(std::get<SquareHit>(v.witness).value, 16);
}

TEST(BsStar, Examples) {
  EXPECT_EQ(classify_bs_star(2, 1).status, Status::kIrregular);
  EXPECT_EQ(classify_bs_star(1, 3).status, Status::kNoVerdict);
  EXPECT_EQ(classify_bs_star(5, 4).status, Status::kIrregular);
}

TEST(Triangle, Examples) {
  EXPECT_EQ(classify_triangle(3).status, Status::kIrregular);
  const Verdict v = classify_triangle(7);
  EXPECT_EQ(v.status, Status::kNoVerdict);
  EXPECT_EQ(std::get<SetIntersection>(v.witness).value, 16);
  EXPECT_THROW(classify_triangle(2), std::invalid_argument);
}

TEST(LineConsecutive, Examples) {
  EXPECT_EQ(classify_line_consecutive3(2).status, Status::kIrregular);
  const Verdict v = classify_line_consecutive3(3);
  EXPECT_EQ(v.status, Status::kNotIrregular);
  EXPECT_EQ(std::get<LinearSolution>(v.witness).p, 1);
}

TEST(NecessaryCondition, Examples) {
  EXPECT_FALSE(necessary_condition({1, 1, 5}));
  EXPECT_TRUE(necessary_condition({2, 3, 5}));
  EXPECT_TRUE(necessary_condition({1, 2, 3}));
}

TEST(Dispatch, PicksStrongestResult) {
  const std::vector<std::tuple<const char*, Status, TheoremId>> cases{
      {"L(T(2,3,4))", Status::kIrregular, TheoremId::kT4_2},
      {"C3(1,2,3)", Status::kIrregular, TheoremId::kT4_2},
      {"T(2,3,4)", Status::kNotIrregular, TheoremId::kT1},
      {"T(1,2,3,4,5)", Status::kNotIrregular, TheoremId::kT2_5},
      {"T(2,3,4,5)", Status::kIrregular, TheoremId::kT2},
      {"T(3,4,5,6,7)", Status::kNotIrregular, TheoremId::kT2_6},
      {"T(1,1,1,5)", Status::kNotIrregular, TheoremId::kP1_5},
      {"T[1,2;4,5]", Status::kIrregular, TheoremId::kT3_1},
      {"BS*(2,3)", Status::kIrregular, TheoremId::kT3_5},
      {"C3(1;1,3;2,3)", Status::kIrregular, TheoremId::kP4_1},
      {"BT^(13)(6,7,13)", Status::kNotIrregular, TheoremId::kR3},
  };
  for (const auto& [expr, status, source] : cases) {
    const Verdict v = classify(parse_family(expr));
    EXPECT_EQ(v.status, status) << expr;
    EXPECT_EQ(v.source, source) << expr;
  }
}

TEST(Dispatch, WitnessPresence) {
  for (const char* expr : {"T(1,2,3)", "BS*(2,3)", "L(T(2,3,4))"}) {
    EXPECT_FALSE(classify(parse_family(expr)).has_witness()) << expr;
  }
  for (const char* expr : {"T(2,3,4)", "T(1,1,5)", "L(T(3,4,5))"}) {
    EXPECT_TRUE(classify(parse_family(expr)).has_witness()) << expr;
  }
}

// Irregular implies oracle irregular; NotIrregular implies not.
TEST(Dispatch, SoundOnSmallStarlikeTrees) {
  for (Arm k3 = 1; k3 <= 7; ++k3) {
    for (Arm k2 = 1; k2 <= k3; ++k2) {
      for (Arm k1 = 1; k1 <= k2; ++k1) {
        for (Arm extra = 0; extra <= k1; ++extra) {
          std::vector<Arm> arms{k1, k2, k3};
          if (extra > 0) arms.push_back(extra);
          const FamilySpec spec = starlike(arms);
          const Verdict v = classify(spec);
          if (v.status == Status::kNoVerdict) continue;
          EXPECT_EQ(v.status == Status::kIrregular, oracle_irregular(spec)) << render(spec);
        }
      }
    }
  }
}

TEST(TheoremIds, RoundTrip) {
  EXPECT_EQ(registered_theorems().size(), 20u);
  for (TheoremId id : registered_theorems()) {
    EXPECT_EQ(theorem_from_string(to_string(id)), id);
  }
  EXPECT_FALSE(theorem_from_string("T9").has_value());
}

}  // namespace
}  // namespace wiener
