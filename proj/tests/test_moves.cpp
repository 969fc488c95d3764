#include "mutants.hpp"
#include "oracles.hpp"

#include <aip/diagram_ops.hpp>
#include <aip/invariant.hpp>
#include <aip/moves.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace aip;

namespace {

const char* kR3Seed = "O1+ O2+ U1+ O3+ U2+ U3+";

std::vector<MoveKind> all_kinds() { return {std::begin(kAllMoveKinds), std::end(kAllMoveKinds)}; }

}  // namespace

TEST(FindSites, R2DeleteAcrossSeam) {
  const auto sites = find_move_sites(parse_signed("U1- O2+ O1- U2+"), MoveKind::R2Delete);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].variant, R2Variant::Coherent);
}

TEST(FindSites, R1Delete) {
  const auto sites = find_move_sites(parse_signed("O1+ U1+ O2+ O3+ U2+ U3+"), MoveKind::R1Delete);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].positions, (std::vector<Position>{{0, 0}, {0, 1}}));
}

TEST(FindSites, R3) {
  const auto sites = find_move_sites(parse_signed(kR3Seed), MoveKind::R3);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].positions, (std::vector<Position>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}));
}

TEST(FindSites, R3NeedsPositiveCrossings) {
  EXPECT_TRUE(find_move_sites(parse_signed("O1- O2+ U1- O3+ U2+ U3+"), MoveKind::R3).empty());
}

TEST(FindSites, InsertsEnumerateGaps) {
  const auto k = parse_signed("O1+ U1+");
  EXPECT_EQ(find_move_sites(k, MoveKind::R1Insert).size(), 2u * 4u);
  EXPECT_EQ(find_move_sites(k, MoveKind::R2Insert).size(), 4u * 4u);
  EXPECT_EQ(find_move_sites(parse_signed("()"), MoveKind::R1Insert).size(), 4u);
}

TEST(ApplyMove, Examples) {
  const auto a = parse_signed("U1- O2+ O1- U2+");
  const auto r2 = apply_move(a, find_move_sites(a, MoveKind::R2Delete).at(0));
  EXPECT_EQ(serialize(r2), "()");

  const auto b = parse_signed("O1+ U1+ O2+ O3+ U2+ U3+");
  const auto r1 = apply_move(b, find_move_sites(b, MoveKind::R1Delete).at(0));
  EXPECT_EQ(serialize(canonicalize(r1)), "O1+ O2+ U1+ U2+");

  const auto c = parse_signed(kR3Seed);
  const auto r3 = apply_move(c, find_move_sites(c, MoveKind::R3).at(0));
  EXPECT_EQ(serialize(r3), "O2+ O1+ O3+ U1+ U3+ U2+");
  EXPECT_EQ(affine_index_polynomial(r3), affine_index_polynomial(c));
}

TEST(ApplyMove, StaleSite) {
  const auto c = parse_signed(kR3Seed);
  const auto site = find_move_sites(c, MoveKind::R3).at(0);
  EXPECT_THROW(apply_move(parse_signed("O1+ O2+ U1+ U2+"), site), ValidationError);
  MoveSite bogus{MoveKind::R1Insert, {{3, 0}}};
  EXPECT_THROW(apply_move(c, bogus), ValidationError);
}

TEST(ApplyMove, InsertUsesFreshIds) {
  const auto k = parse_signed("O4+ O7+ U4+ U7+");
  const auto out = apply_move(k, MoveSite{MoveKind::R1Insert, {{0, 0}}, +1});
  EXPECT_EQ(max_crossing_id(out), 8);
}

TEST(ApplyMove, R3IsAnInvolution) {
  // The rewritten code carries the mirrored pattern, which the forward-only
  // matcher does not accept, so the second swap is done by hand.
  const auto c = parse_signed(kR3Seed);
  const auto site = find_move_sites(c, MoveKind::R3).at(0);
  auto twice = apply_move(c, site);
  EXPECT_FALSE(detail::site_matches(twice, site));
  for (std::size_t k = 0; k < 6; k += 2) {
    std::swap(twice.components[0][site.positions[k].index], twice.components[0][site.positions[k + 1].index]);
  }
  EXPECT_EQ(twice, c);
}

TEST(ApplyMove, EverySitePreservesInvariants) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const auto k = oracle::random_knot(rng, 1, 5);
    const auto p = affine_index_polynomial(k);
    for (MoveKind kind : kAllMoveKinds) {
      for (const auto& site : find_move_sites(k, kind)) {
        const auto out = apply_move(k, site);
        ASSERT_TRUE(validate(out).ok()) << to_string(site);
        EXPECT_EQ(out.components.size(), k.components.size());
        EXPECT_EQ(affine_index_polynomial(out), p) << serialize(k) << " " << to_string(site);
        const int dw = writhe(out) - writhe(k);
        if (kind == MoveKind::R1Insert) EXPECT_EQ(dw, site.sign);
        if (kind == MoveKind::R2Insert || kind == MoveKind::R2Delete || kind == MoveKind::R3) EXPECT_EQ(dw, 0);
        if (kind == MoveKind::R1Delete) EXPECT_EQ(std::abs(dw), 1);
      }
    }
  }
}

TEST(ApplyMove, DeleteUndoesInsert) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    const auto k = oracle::random_knot(rng, 1, 4);
    for (MoveKind insert : {MoveKind::R1Insert, MoveKind::R2Insert}) {
      const auto sites = find_move_sites(k, insert);
      const auto& site = sites[rng() % sites.size()];
      const auto grown = apply_move(k, site);
      const int fresh = max_crossing_id(k) + 1;
      const auto del = insert == MoveKind::R1Insert ? MoveKind::R1Delete : MoveKind::R2Delete;
      bool undone = false;
      for (const auto& d : find_move_sites(grown, del)) {
        if (at(grown, d.positions[0]).id != fresh && at(grown, d.positions[1]).id != fresh) continue;
        undone = undone || canonicalize(apply_move(grown, d)) == canonicalize(k);
      }
      EXPECT_TRUE(undone) << serialize(k) << " " << to_string(site);
    }
  }
}

TEST(MoveTrace, TextRoundTrip) {
  const auto c = parse_signed(kR3Seed);
  for (MoveKind kind : kAllMoveKinds) {
    for (const auto& site : find_move_sites(c, kind)) EXPECT_EQ(parse_move_site(to_string(site)), site);
  }
  EXPECT_THROW(parse_move_site("R4 0:0"), ParseError);
  EXPECT_THROW(parse_move_site("R1_delete 0-0"), ParseError);
}

TEST(RandomWalk, ZeroStepsAndDeterminism) {
  const auto k = parse_signed("O2+ O1+ U2+ U1+");
  EXPECT_EQ(random_walk(k, 0, 5).code, canonicalize(k));
  const auto a = random_walk(k, 25, 99);
  const auto b = random_walk(k, 25, 99);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(replay(k, a.trace), a.code);
}

TEST(RandomWalk, TrefoilPolynomialSurvives) {
  const auto k = parse_signed("O1+ O2+ U1+ U2+");
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_EQ(affine_index_polynomial(random_walk(k, 20, s).code).str(), "t^-1 - 2 + t");
  }
}

TEST(RandomWalk, LinksKeepComponentCount) {
  const auto hopf = parse_signed("O1+ U2+ ; U1+ O2+");
  for (std::uint64_t s = 0; s < 10; ++s) EXPECT_EQ(random_walk(hopf, 15, s).code.components.size(), 2u);
}

TEST(Invariance, EmptySeedList) {
  const auto r = invariance_report({}, 10, 10, 1);
  EXPECT_EQ(r.checks, 0u);
  EXPECT_TRUE(r.ok());
}

TEST(Invariance, SmallRunPasses) {
  const auto r = invariance_report({parse_signed("O1+ O2+ U1+ U2+"), parse_signed(kR3Seed)}, 10, 10, 7);
  EXPECT_EQ(r.checks, 20u);
  EXPECT_TRUE(r.ok());
}

TEST(Invariance, MutantIsCaught) {
  const auto c = parse_signed(kR3Seed);
  const auto site = find_move_sites(c, MoveKind::R3).at(0);
  EXPECT_NE(affine_index_polynomial(mutant::middle_pair_r3(c, site)), affine_index_polynomial(c));

  const auto r = invariance_report({c}, 5, 40, 3, mutant::middle_pair_r3);
  ASSERT_FALSE(r.ok());
  const auto& f = r.failures.front();
  EXPECT_NE(f.before, f.after);
  EXPECT_EQ(replay(f.start, f.trace, mutant::middle_pair_r3), f.end);
}

TEST(FlatWalk, StaysFlatAndDeterministic) {
  const auto f = parse_flat("R1 R2 L1 L2");
  EXPECT_EQ(flat_random_walk(f, 10, 4), flat_random_walk(f, 10, 4));
  EXPECT_TRUE(validate(flat_random_walk(f, 10, 4)).ok());
}
