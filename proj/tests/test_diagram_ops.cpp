#include "oracles.hpp"

#include <aip/diagram_ops.hpp>
#include <aip/invariant.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace aip;

namespace {
const char* kTrefoil = "O1+ O2+ U1+ U2+";
}

TEST(Reverse, Examples) {
  EXPECT_EQ(serialize(reverse(parse_signed(kTrefoil))), "U2+ U1+ O2+ O1+");
  EXPECT_EQ(serialize(reverse(parse_signed("()"))), "()");
}

TEST(Mirror, Examples) {
  const auto k = parse_signed(kTrefoil);
  EXPECT_EQ(serialize(mirror(k)), "U1- U2- O1- O2-");
  EXPECT_EQ(affine_index_polynomial(mirror(k)).str(), "-t^-1 + 2 - t");
  EXPECT_EQ(writhe(mirror(k)), -2);
}

TEST(SwitchCrossings, Examples) {
  const auto k = parse_signed(kTrefoil);
  EXPECT_EQ(serialize(switch_crossings(k, {1})), "U1- O2+ O1- U2+");
  EXPECT_EQ(switch_crossings(k, {1, 2}), mirror(k));
  EXPECT_EQ(switch_crossings(k, {}), k);
  EXPECT_THROW(switch_crossings(k, {3}), ValidationError);
}

TEST(Virtualize, Examples) {
  const auto k = parse_signed(kTrefoil);
  EXPECT_EQ(serialize(virtualize(k, {1})), "O1- O2+ U1- U2+");
  EXPECT_EQ(virtualize(virtualize(k, {1}), {1}), k);
  EXPECT_THROW(virtualize(k, {9}), ValidationError);
}

TEST(Virtualize, ClassicalTrefoilFullyVirtualized) {
  const auto k = virtualize(parse_signed("O1+ U2+ O3+ U1+ O2+ U3+"), {1, 2, 3});
  // Recorded value: virtualizing every crossing of the classical trefoil.
  EXPECT_EQ(serialize(k), "O1- U2- O3- U1- O2- U3-");
  EXPECT_EQ(affine_index_polynomial(k).str(), "0");
}

TEST(Virtualize, SwapsFlatRolesExactlyAtChosenCrossings) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    const auto k = oracle::random_knot(rng, 1, 6);
    const std::vector<int> chosen{1};
    const auto before = forget(k);
    const auto after = forget(virtualize(k, chosen));
    for (std::size_t j = 0; j < before.components[0].size(); ++j) {
      const auto& b = before.components[0][j];
      const auto& a = after.components[0][j];
      EXPECT_EQ(a.role == b.role, b.id != 1);
    }
  }
}

TEST(Smooth, Examples) {
  EXPECT_EQ(serialize(smooth_oriented(parse_signed(kTrefoil), 1)), "O2+ ; U2+");
  EXPECT_EQ(serialize(smooth_oriented(parse_signed("O3+ U3+ O1+ O2+ U1+ U2+"), 3)), "() ; O1+ O2+ U1+ U2+");
  EXPECT_EQ(serialize(smooth_oriented(parse_signed("O1+ ; U1+"), 1)), "()");
  EXPECT_THROW(smooth_oriented(parse_signed(kTrefoil), 4), ValidationError);
}

TEST(Smooth, CountsPassagesAndComponents) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    const auto k = i % 2 ? oracle::random_knot(rng, 1, 6) : oracle::random_link(rng, 3, false);
    for (int id : crossing_ids(k)) {
      const auto s = smooth_oriented(k, id);
      EXPECT_EQ(s.passage_count() + 2, k.passage_count());
      const auto dc = static_cast<long>(s.components.size()) - static_cast<long>(k.components.size());
      EXPECT_TRUE(dc == 1 || dc == -1);
    }
  }
}

TEST(SmoothZeroWeight, KinkAugmentedTrefoil) {
  const auto k = parse_signed("O3+ U3+ O1+ O2+ U1+ U2+");
  const auto out = smooth_zero_weight(k, lambda_coloring(k));
  EXPECT_EQ(serialize(out.code), "() ; O1+ O2+ U1+ U2+");
  EXPECT_TRUE(verify_coloring(out.code, out.coloring));
  // The surviving arcs keep their labels.
  const auto before = lambda_coloring(k).labels.front();
  EXPECT_EQ(out.coloring.labels[1], (std::vector<std::int64_t>(before.begin() + 2, before.end())));
}

TEST(SmoothZeroWeight, NoZeroWeightsUnchanged) {
  const auto k = parse_signed(kTrefoil);
  const auto out = smooth_zero_weight(k, lambda_coloring(k));
  EXPECT_EQ(out.code, k);
  EXPECT_EQ(out.coloring, lambda_coloring(k));
}

TEST(SmoothZeroWeight, ClassicalTrefoilFullySmoothed) {
  const auto k = parse_signed("O1+ U2+ O3+ U1+ O2+ U3+");
  const auto out = smooth_zero_weight(k, lambda_coloring(k));
  EXPECT_EQ(out.code.passage_count(), 0u);
  EXPECT_TRUE(colorability(out.code).colorable);
  EXPECT_TRUE(verify_coloring(out.code, out.coloring));
}

TEST(SmoothZeroWeight, InvalidColoring) {
  const auto k = parse_signed(kTrefoil);
  EXPECT_THROW(smooth_zero_weight(k, ChengColoring{{{0, 0, 0, 0}}}), ValidationError);
}

TEST(Writhe, Examples) {
  EXPECT_EQ(writhe(parse_signed(kTrefoil)), 2);
  EXPECT_EQ(writhe(parse_signed("O1+ U1+")), 1);
}

TEST(Involutions, ReverseAndMirror) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto k = oracle::random_knot(rng, 0, 6);
    EXPECT_EQ(reverse(reverse(k)), k);
    EXPECT_EQ(mirror(mirror(k)), k);
    EXPECT_EQ(writhe(mirror(k)), -writhe(k));
    EXPECT_EQ(writhe(reverse(k)), writhe(k));
    EXPECT_EQ(canonicalize(reverse(canonicalize(k))), canonicalize(reverse(k)));
    EXPECT_EQ(canonicalize(mirror(canonicalize(k))), canonicalize(mirror(k)));
  }
}
