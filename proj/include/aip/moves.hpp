#pragma once

// Reidemeister moves on Gauss codes, and random walks built from them.
//
// The engine knows the oriented generating set
//   R1  insert/delete a kink (either sign, either passage order),
//   R2  insert/delete a bigon of opposite-sign crossings, with the two
//       strands running coherently or antiparallel,
//   R3  the braid-like all-positive triangle
//         (O_x O_y) ... (U_x O_z) ... (U_y U_z)
//       rewritten by swapping each of the three adjacent pairs.
// Adjacency is cyclic within a component. Virtual moves are identities on
// Gauss codes and need no representation.

#include <aip/errors.hpp>
#include <aip/gauss_code.hpp>
#include <aip/invariant.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aip {

enum class MoveKind : std::uint8_t { R1Insert, R1Delete, R2Insert, R2Delete, R3 };
enum class R2Variant : std::uint8_t { Coherent, Antiparallel };

inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert,
                                             MoveKind::R2Delete, MoveKind::R3};

inline std::string_view kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Insert: return "R1_insert";
    case MoveKind::R1Delete: return "R1_delete";
    case MoveKind::R2Insert: return "R2_insert";
    case MoveKind::R2Delete: return "R2_delete";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

/// Where and how to apply a move.
///
/// positions:
///   R1_insert  {gap}              new passages go before index `gap`
///   R1_delete  {p, p+1}
///   R2_insert  {over_gap, under_gap}
///   R2_delete  {o1, o2, u1, u2}   both pairs in traversal order
///   R3         {O_x, O_y, U_x, O_z, U_y, U_z}
struct MoveSite {
  MoveKind kind = MoveKind::R1Insert;
  std::vector<Position> positions;
  /// Sign of the kink crossing (R1) or of the first over passage (R2).
  int sign = +1;
  R2Variant variant = R2Variant::Coherent;
  /// R1 insert: over passage first.
  bool over_first = true;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// "R2_insert 0:3 1:0 eps=+ variant=coherent"
inline std::string to_string(const MoveSite& site) {
  std::string s(kind_name(site.kind));
  for (const auto& p : site.positions) s += " " + std::to_string(p.component) + ":" + std::to_string(p.index);
  if (site.kind == MoveKind::R1Insert || site.kind == MoveKind::R2Insert) {
    s += site.sign > 0 ? " eps=+" : " eps=-";
  }
  if (site.kind == MoveKind::R1Insert) s += site.over_first ? " order=OU" : " order=UO";
  if (site.kind == MoveKind::R2Insert || site.kind == MoveKind::R2Delete) {
    s += site.variant == R2Variant::Coherent ? " variant=coherent" : " variant=antiparallel";
  }
  return s;
}

inline MoveSite parse_move_site(std::string_view line) {
  auto fields = detail::split_ws(line);
  if (fields.empty()) throw ParseError("empty move line");
  MoveSite site;
  bool known = false;
  for (MoveKind k : kAllMoveKinds) {
    if (fields[0] == kind_name(k)) {
      site.kind = k;
      known = true;
    }
  }
  if (!known) throw ParseError("unknown move kind '" + std::string(fields[0]) + "'");
  for (std::size_t i = 1; i < fields.size(); ++i) {
    const auto f = fields[i];
    if (f == "eps=+") site.sign = +1;
    else if (f == "eps=-") site.sign = -1;
    else if (f == "order=OU") site.over_first = true;
    else if (f == "order=UO") site.over_first = false;
    else if (f == "variant=coherent") site.variant = R2Variant::Coherent;
    else if (f == "variant=antiparallel") site.variant = R2Variant::Antiparallel;
    else {
      const auto colon = f.find(':');
      if (colon == std::string_view::npos) throw ParseError("bad move field '" + std::string(f) + "'");
      try {
        site.positions.push_back({std::stoul(std::string(f.substr(0, colon))),
                                  std::stoul(std::string(f.substr(colon + 1)))});
      } catch (const std::exception&) {
        throw ParseError("bad move position '" + std::string(f) + "'");
      }
    }
  }
  return site;
}

namespace detail {

inline std::size_t succ(std::size_t i, std::size_t n) { return (i + 1) % n; }

inline Position next_position(const SignedGaussCode& code, Position p) {
  return {p.component, succ(p.index, code.components[p.component].size())};
}

inline std::vector<Position> all_positions(const SignedGaussCode& code) {
  std::vector<Position> out;
  for (std::size_t c = 0; c < code.components.size(); ++c)
    for (std::size_t i = 0; i < code.components[c].size(); ++i) out.push_back({c, i});
  return out;
}

inline std::vector<Position> all_gaps(const SignedGaussCode& code) {
  std::vector<Position> out;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    const std::size_t n = std::max<std::size_t>(code.components[c].size(), 1);
    for (std::size_t g = 0; g < n; ++g) out.push_back({c, g});
  }
  return out;
}

inline bool in_range(const SignedGaussCode& code, Position p) {
  return p.component < code.components.size() && p.index < code.components[p.component].size();
}

inline bool gap_in_range(const SignedGaussCode& code, Position p) {
  return p.component < code.components.size() &&
         p.index < std::max<std::size_t>(code.components[p.component].size(), 1);
}

inline Position other_passage(const std::map<int, std::vector<Position>>& where, int id, Position self) {
  const auto& ps = where.at(id);
  return ps[0] == self ? ps[1] : ps[0];
}

inline bool matches_r1_delete(const SignedGaussCode& code, const MoveSite& s) {
  if (s.positions.size() != 2 || !in_range(code, s.positions[0]) || !in_range(code, s.positions[1])) return false;
  const auto& comp = code.components[s.positions[0].component];
  return comp.size() >= 2 && s.positions[1] == next_position(code, s.positions[0]) &&
         at(code, s.positions[0]).id == at(code, s.positions[1]).id;
}

inline bool matches_r2_delete(const SignedGaussCode& code, const MoveSite& s) {
  if (s.positions.size() != 4) return false;
  for (const auto& p : s.positions)
    if (!in_range(code, p)) return false;
  const auto& o1 = at(code, s.positions[0]);
  const auto& o2 = at(code, s.positions[1]);
  const auto& u1 = at(code, s.positions[2]);
  const auto& u2 = at(code, s.positions[3]);
  if (s.positions[1] != next_position(code, s.positions[0])) return false;
  if (s.positions[3] != next_position(code, s.positions[2])) return false;
  if (o1.role != Role::Over || o2.role != Role::Over || u1.role != Role::Under || u2.role != Role::Under) return false;
  if (o1.id == o2.id || o1.sign != -o2.sign) return false;
  if (s.variant == R2Variant::Coherent) return u1.id == o1.id && u2.id == o2.id;
  return u1.id == o2.id && u2.id == o1.id;
}

inline bool matches_r3(const SignedGaussCode& code, const MoveSite& s) {
  if (s.positions.size() != 6) return false;
  for (const auto& p : s.positions)
    if (!in_range(code, p)) return false;
  for (std::size_t k = 0; k < 6; k += 2) {
    if (s.positions[k + 1] != next_position(code, s.positions[k])) return false;
  }
  const Passage* q[6];
  for (std::size_t k = 0; k < 6; ++k) {
    q[k] = &at(code, s.positions[k]);
    if (q[k]->sign != +1) return false;
  }
  const int x = q[0]->id, y = q[1]->id, z = q[3]->id;
  if (x == y || x == z || y == z) return false;
  return q[0]->role == Role::Over && q[1]->role == Role::Over &&      //
         q[2]->role == Role::Under && q[2]->id == x &&                  //
         q[3]->role == Role::Over &&                                    //
         q[4]->role == Role::Under && q[4]->id == y &&                  //
         q[5]->role == Role::Under && q[5]->id == z;
}

inline std::vector<MoveSite> r1_delete_sites(const SignedGaussCode& code) {
  std::vector<MoveSite> out;
  std::set<int> seen;
  for (const auto& p : all_positions(code)) {
    MoveSite s{MoveKind::R1Delete, {p, next_position(code, p)}};
    if (matches_r1_delete(code, s) && seen.insert(at(code, p).id).second) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<MoveSite> r2_delete_sites(const SignedGaussCode& code) {
  std::vector<MoveSite> out;
  std::set<std::pair<int, int>> seen;
  const auto where = crossing_positions(code);
  for (const auto& p : all_positions(code)) {
    const Position p2 = next_position(code, p);
    const auto& a = at(code, p);
    const auto& b = at(code, p2);
    if (a.role != Role::Over || b.role != Role::Over || a.id == b.id || a.sign != -b.sign) continue;
    const Position ua = other_passage(where, a.id, p);
    const Position ub = other_passage(where, b.id, p2);
    MoveSite s{MoveKind::R2Delete, {}};
    if (ub == next_position(code, ua)) {
      s.positions = {p, p2, ua, ub};
      s.variant = R2Variant::Coherent;
    } else if (ua == next_position(code, ub)) {
      s.positions = {p, p2, ub, ua};
      s.variant = R2Variant::Antiparallel;
    } else {
      continue;
    }
    if (seen.insert(std::minmax(a.id, b.id)).second) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<MoveSite> r3_sites(const SignedGaussCode& code) {
  std::vector<MoveSite> out;
  const auto where = crossing_positions(code);
  for (const auto& ox : all_positions(code)) {
    const Position oy = next_position(code, ox);
    const auto& x = at(code, ox);
    const auto& y = at(code, oy);
    if (x.role != Role::Over || y.role != Role::Over || x.id == y.id) continue;
    const Position ux = other_passage(where, x.id, ox);
    const Position uy = other_passage(where, y.id, oy);
    const Position oz = next_position(code, ux);
    const Position uz = next_position(code, uy);
    MoveSite s{MoveKind::R3, {ox, oy, ux, oz, uy, uz}};
    if (matches_r3(code, s)) out.push_back(std::move(s));
  }
  return out;
}

inline bool site_matches(const SignedGaussCode& code, const MoveSite& s) {
  switch (s.kind) {
    case MoveKind::R1Insert:
      return s.positions.size() == 1 && gap_in_range(code, s.positions[0]) && (s.sign == 1 || s.sign == -1);
    case MoveKind::R2Insert:
      return s.positions.size() == 2 && gap_in_range(code, s.positions[0]) && gap_in_range(code, s.positions[1]) &&
             (s.sign == 1 || s.sign == -1);
    case MoveKind::R1Delete: return matches_r1_delete(code, s);
    case MoveKind::R2Delete: return matches_r2_delete(code, s);
    case MoveKind::R3: return matches_r3(code, s);
  }
  return false;
}

}  // namespace detail

/// All sites of one kind. Insert kinds enumerate every gap with every
/// parameter choice.
inline std::vector<MoveSite> find_move_sites(const SignedGaussCode& code, MoveKind kind) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::R1Insert:
      for (const auto& g : detail::all_gaps(code))
        for (int eps : {+1, -1})
          for (bool over_first : {true, false}) out.push_back({kind, {g}, eps, R2Variant::Coherent, over_first});
      return out;
    case MoveKind::R2Insert: {
      const auto gaps = detail::all_gaps(code);
      for (const auto& g1 : gaps)
        for (const auto& g2 : gaps)
          for (int eps : {+1, -1})
            for (R2Variant v : {R2Variant::Coherent, R2Variant::Antiparallel}) out.push_back({kind, {g1, g2}, eps, v});
      return out;
    }
    case MoveKind::R1Delete: return detail::r1_delete_sites(code);
    case MoveKind::R2Delete: return detail::r2_delete_sites(code);
    case MoveKind::R3: return detail::r3_sites(code);
  }
  return out;
}

/// Source of an arc of the rewritten code in the original code.
struct ArcRef {
  std::size_t component = 0;
  std::size_t arc = 0;

  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

/// The rewritten code, and for each of its arcs the original arc whose
/// color it inherits (empty for arcs created by the move).
struct MoveResult {
  SignedGaussCode code;
  std::vector<std::vector<std::optional<ArcRef>>> arc_origin;
};

/// Applies a site found on exactly this code. Does not renumber.
inline MoveResult apply_move_traced(const SignedGaussCode& code, const MoveSite& site) {
  if (!detail::site_matches(code, site)) throw ValidationError("stale move site: " + to_string(site));

  struct Tagged {
    Passage passage;
    std::optional<std::size_t> origin;  // index in the original component
  };
  std::vector<std::vector<Tagged>> comps(code.components.size());
  for (std::size_t c = 0; c < code.components.size(); ++c)
    for (std::size_t i = 0; i < code.components[c].size(); ++i) comps[c].push_back({code.components[c][i], i});

  // Insertions, keyed by gap; removals and R3 rewrites by position.
  std::map<Position, std::vector<Passage>> inserts;
  std::set<Position> removed;
  std::map<Position, Position> r3_source;
  std::vector<std::optional<std::size_t>> empty_origin(code.components.size());

  const int fresh = max_crossing_id(code) + 1;
  switch (site.kind) {
    case MoveKind::R1Insert: {
      Passage o{fresh, Role::Over, site.sign};
      Passage u{fresh, Role::Under, site.sign};
      inserts[site.positions[0]] = site.over_first ? std::vector<Passage>{o, u} : std::vector<Passage>{u, o};
      break;
    }
    case MoveKind::R2Insert: {
      const int a = fresh, b = fresh + 1;
      std::vector<Passage> over{{a, Role::Over, site.sign}, {b, Role::Over, -site.sign}};
      std::vector<Passage> under{{a, Role::Under, site.sign}, {b, Role::Under, -site.sign}};
      if (site.variant == R2Variant::Antiparallel) std::swap(under[0], under[1]);
      auto& first = inserts[site.positions[0]];
      first.insert(first.end(), over.begin(), over.end());
      auto& second = inserts[site.positions[1]];
      second.insert(second.end(), under.begin(), under.end());
      break;
    }
    case MoveKind::R1Delete:
      removed.insert(site.positions.begin(), site.positions.end());
      empty_origin[site.positions[1].component] = site.positions[1].index;
      break;
    case MoveKind::R2Delete:
      removed.insert(site.positions.begin(), site.positions.end());
      empty_origin[site.positions[3].component] = site.positions[3].index;
      empty_origin[site.positions[1].component] = site.positions[1].index;
      break;
    case MoveKind::R3:
      for (std::size_t k = 0; k < 6; k += 2) {
        r3_source[site.positions[k]] = site.positions[k + 1];
        r3_source[site.positions[k + 1]] = site.positions[k];
      }
      break;
  }

  MoveResult result;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::size_t old_n = code.components[c].size();
    std::vector<Tagged> out;
    const std::size_t gaps = std::max<std::size_t>(old_n, 1);
    for (std::size_t g = 0; g < gaps; ++g) {
      if (auto it = inserts.find({c, g}); it != inserts.end()) {
        for (const auto& p : it->second) out.push_back({p, std::nullopt});
      }
      if (g >= old_n || removed.count({c, g})) continue;
      if (auto it = r3_source.find({c, g}); it != r3_source.end()) {
        out.push_back({at(code, it->second), it->second.index});
      } else {
        out.push_back(comps[c][g]);
      }
    }

    std::vector<Passage> passages;
    std::vector<std::optional<ArcRef>> origin;
    const std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) {
      passages.push_back(out[i].passage);
      const auto& here = out[i].origin;
      const auto& next = out[detail::succ(i, m)].origin;
      std::optional<ArcRef> ref;
      if (site.kind == MoveKind::R3) {
        // Positions are unchanged; only the arcs inside swapped pairs are new.
        const bool inner = r3_source.count({c, i}) && r3_source.at({c, i}) == Position{c, detail::succ(i, m)};
        if (!inner) ref = ArcRef{c, i};
      } else if (here) {
        ref = ArcRef{c, *here};
      } else if (next) {
        ref = ArcRef{c, (*next + old_n - 1) % old_n};
      } else if (old_n == 0 && i + 1 == m) {
        ref = ArcRef{c, 0};
      }
      origin.push_back(ref);
    }
    if (m == 0) {
      if (old_n == 0) origin.push_back(ArcRef{c, 0});
      else if (empty_origin[c]) origin.push_back(ArcRef{c, *empty_origin[c]});
      else origin.push_back(std::nullopt);
    }
    result.code.components.push_back(std::move(passages));
    result.arc_origin.push_back(std::move(origin));
  }
  return result;
}

inline SignedGaussCode apply_move(const SignedGaussCode& code, const MoveSite& site) {
  return apply_move_traced(code, site).code;
}

// ---------------------------------------------------------------------------
// Random walks

using MoveApplier = std::function<SignedGaussCode(const SignedGaussCode&, const MoveSite&)>;

/// Seed for trial `index` of a run seeded with `seed` (splitmix64 mix).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace detail {

// Uniform in [0, n) from a 64-bit engine, identical on every platform.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return static_cast<std::size_t>(x % bound);
}

inline MoveSite random_insert(const SignedGaussCode& code, MoveKind kind, std::mt19937_64& rng) {
  const auto gaps = all_gaps(code);
  MoveSite s{kind, {gaps[uniform_index(rng, gaps.size())]}};
  if (kind == MoveKind::R2Insert) s.positions.push_back(gaps[uniform_index(rng, gaps.size())]);
  s.sign = uniform_index(rng, 2) == 0 ? +1 : -1;
  if (kind == MoveKind::R1Insert) {
    s.over_first = uniform_index(rng, 2) == 0;
  } else {
    s.variant = uniform_index(rng, 2) == 0 ? R2Variant::Coherent : R2Variant::Antiparallel;
  }
  return s;
}

}  // namespace detail

struct WalkResult {
  SignedGaussCode start;  // canonical form of the input
  SignedGaussCode code;   // canonical form after the last move
  /// Each site refers to the canonical code reached before it.
  std::vector<MoveSite> trace;
};

/// Applies `steps` random moves. Each step picks a kind uniformly among
/// the allowed kinds that have a site, then a site of that kind uniformly,
/// and canonicalizes the result. Deterministic in (code, steps, seed).
inline WalkResult random_walk(const SignedGaussCode& code, std::size_t steps, std::uint64_t seed,
                              const std::vector<MoveKind>& kinds = {std::begin(kAllMoveKinds), std::end(kAllMoveKinds)},
                              const MoveApplier& applier = apply_move) {
  require_valid(code);
  std::mt19937_64 rng(seed);
  WalkResult walk;
  walk.start = canonicalize(code);
  walk.code = walk.start;
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<std::pair<MoveKind, std::vector<MoveSite>>> options;
    for (MoveKind k : kinds) {
      if (k == MoveKind::R1Insert || k == MoveKind::R2Insert) {
        options.push_back({k, {}});
      } else if (auto sites = find_move_sites(walk.code, k); !sites.empty()) {
        options.push_back({k, std::move(sites)});
      }
    }
    if (options.empty()) break;
    auto& [kind, sites] = options[detail::uniform_index(rng, options.size())];
    MoveSite site = sites.empty() ? detail::random_insert(walk.code, kind, rng)
                                  : sites[detail::uniform_index(rng, sites.size())];
    walk.code = canonicalize(applier(walk.code, site));
    walk.trace.push_back(std::move(site));
  }
  return walk;
}

/// Re-applies a recorded trace.
inline SignedGaussCode replay(const SignedGaussCode& code, const std::vector<MoveSite>& trace,
                              const MoveApplier& applier = apply_move) {
  auto current = canonicalize(code);
  for (const auto& site : trace) current = canonicalize(applier(current, site));
  return current;
}

/// Flat moves, realized by walking one resolution of the flat code and
/// forgetting the crossing data again.
inline FlatCode flat_random_walk(const FlatCode& flat, std::size_t steps, std::uint64_t seed,
                                 const std::vector<MoveKind>& kinds = {std::begin(kAllMoveKinds),
                                                                       std::end(kAllMoveKinds)}) {
  require_valid(flat);
  const auto ids = crossing_ids(flat);
  const std::uint64_t mask = ids.size() >= 64 ? derive_seed(seed, 0) : derive_seed(seed, 0) & ((1ULL << ids.size()) - 1);
  return forget(random_walk(resolve(flat, ids, mask), steps, derive_seed(seed, 1), kinds).code);
}

struct InvarianceFailure {
  std::size_t seed_index = 0;
  std::size_t trial = 0;
  SignedGaussCode start;
  SignedGaussCode end;
  LaurentPolynomial before;
  LaurentPolynomial after;
  std::vector<MoveSite> trace;
};

struct InvarianceReport {
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::vector<InvarianceFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Walks every seed knot `trials` times and checks that the polynomial
/// never changes. Trial seeds are derived from (seed, seed index, trial).
inline InvarianceReport invariance_report(const std::vector<SignedGaussCode>& seeds, std::size_t steps,
                                          std::size_t trials, std::uint64_t seed,
                                          const MoveApplier& applier = apply_move) {
  InvarianceReport report;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto before = affine_index_polynomial(seeds[i]);
    for (std::size_t t = 0; t < trials; ++t) {
      const auto walk = random_walk(seeds[i], steps, derive_seed(derive_seed(seed, i), t),
                                    {std::begin(kAllMoveKinds), std::end(kAllMoveKinds)}, applier);
      const auto after = affine_index_polynomial(walk.code);
      ++report.checks;
      if (after == before) {
        ++report.passed;
      } else {
        report.failures.push_back({i, t, walk.start, walk.code, before, after, walk.trace});
      }
    }
  }
  return report;
}

}  // namespace aip
