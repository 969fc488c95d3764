#pragma once

// Finite flat biquandles over Z/N.
//
// Two binary operations a*b (star) and a#b (sharp). At a flat crossing
// whose R passage enters with color r and whose L passage enters with
// color l, the outgoing colors are
//   out(R) = r # l      out(L) = l * r
// The integer Cheng coloring is the case a*b = a + 1, a#b = a - 1.
//
// Axioms (1 and 2 make a preflat, all three a flat biquandle):
//  1. for each a exactly one x with a#x = x, x*a = a, and exactly one y
//     with a*y = y, y#a = a;
//  2. (a#b)*(b*a) = a and (b*a)#(a#b) = b, and for each a,b exactly one
//     pair (x,y) with x = b#y, y = a#x, b = x*a, a = y*b;
//  3. (a#b)#c = (a#(c*b))#(b#c), (c*b)*a = (c*(a#b))*(b*a),
//     (b#c)*(a#(c*b)) = (b*a)#(c*(a#b)).

#include <aip/coloring.hpp>
#include <aip/errors.hpp>
#include <aip/gauss_code.hpp>
#include <aip/moves.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace aip {

inline int mod(std::int64_t x, int n) {
  const auto r = static_cast<int>(x % n);
  return r < 0 ? r + n : r;
}

inline bool is_unit(std::int64_t x, int n) { return std::gcd(static_cast<std::int64_t>(mod(x, n)), std::int64_t{n}) == 1; }

/// Multiplicative inverse mod n; x must be a unit.
inline int inverse_mod(std::int64_t x, int n) {
  const int v = mod(x, n);
  for (int y = 0; y < n; ++y)
    if (mod(static_cast<std::int64_t>(v) * y, n) == 1 % n) return y;
  throw ValidationError(std::to_string(v) + " is not a unit mod " + std::to_string(n));
}

class FiniteFlatBiquandle {
 public:
  FiniteFlatBiquandle() = default;
  FiniteFlatBiquandle(int n, std::vector<int> star, std::vector<int> sharp)
      : n_(n), star_(std::move(star)), sharp_(std::move(sharp)) {
    if (n_ < 1) throw ValidationError("carrier size must be positive");
    const auto cells = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
    if (star_.size() != cells || sharp_.size() != cells) throw ValidationError("table size must be N*N");
    for (int v : star_)
      if (v < 0 || v >= n_) throw ValidationError("star table entry out of range");
    for (int v : sharp_)
      if (v < 0 || v >= n_) throw ValidationError("sharp table entry out of range");
  }

  int size() const { return n_; }
  int star(int a, int b) const { return star_[static_cast<std::size_t>(a * n_ + b)]; }
  int sharp(int a, int b) const { return sharp_[static_cast<std::size_t>(a * n_ + b)]; }
  const std::vector<int>& star_table() const { return star_; }
  const std::vector<int>& sharp_table() const { return sharp_; }

  friend bool operator==(const FiniteFlatBiquandle&, const FiniteFlatBiquandle&) = default;

 private:
  int n_ = 0;
  std::vector<int> star_;
  std::vector<int> sharp_;
};

/// a*b = r a + s b + k,  a#b = p a + q b + l  over Z/n.
struct AffineParams {
  int n = 1;
  int r = 0, s = 0, k = 0, p = 0, q = 0, l = 0;

  AffineParams normalized() const { return {n, mod(r, n), mod(s, n), mod(k, n), mod(p, n), mod(q, n), mod(l, n)}; }

  friend auto operator<=>(const AffineParams&, const AffineParams&) = default;
};

/// "N r s k p q l"
inline std::string to_string(const AffineParams& a) {
  std::ostringstream os;
  os << a.n << ' ' << a.r << ' ' << a.s << ' ' << a.k << ' ' << a.p << ' ' << a.q << ' ' << a.l;
  return os.str();
}

inline AffineParams parse_affine_params(std::string_view line) {
  std::istringstream is{std::string(line)};
  AffineParams a;
  if (!(is >> a.n >> a.r >> a.s >> a.k >> a.p >> a.q >> a.l) || a.n < 1) {
    throw ParseError("expected 'N r s k p q l'");
  }
  std::string rest;
  if (is >> rest) throw ParseError("trailing text after affine parameters");
  return a.normalized();
}

inline FiniteFlatBiquandle make_affine(const AffineParams& params) {
  const auto a = params.normalized();
  const auto cells = static_cast<std::size_t>(a.n) * static_cast<std::size_t>(a.n);
  std::vector<int> star(cells), sharp(cells);
  for (int x = 0; x < a.n; ++x) {
    for (int y = 0; y < a.n; ++y) {
      star[static_cast<std::size_t>(x * a.n + y)] = mod(std::int64_t{a.r} * x + std::int64_t{a.s} * y + a.k, a.n);
      sharp[static_cast<std::size_t>(x * a.n + y)] = mod(std::int64_t{a.p} * x + std::int64_t{a.q} * y + a.l, a.n);
    }
  }
  return {a.n, std::move(star), std::move(sharp)};
}

/// a*b = (1-q) a - q b + k,  a#b = (1+q) a + q b - k.
inline FiniteFlatBiquandle basic_preflat(int n, int q, int k) {
  if (n < 1) throw ValidationError("carrier size must be positive");
  if (!is_unit(1 - std::int64_t{q}, n) || !is_unit(1 + std::int64_t{q}, n)) {
    throw ValidationError("basic preflat needs 1-q and 1+q to be units mod " + std::to_string(n));
  }
  return make_affine({n, 1 - q, -q, k, 1 + q, q, -k});
}

/// The general affine flat biquandle a*b = p^-1 a + k, a#b = p a - p k
/// for a unit p (so a*b = alpha a + k with alpha = p^-1).
inline AffineParams theorem_form(int n, int p, int k) {
  if (!is_unit(p, n)) throw ValidationError("theorem form needs a unit");
  return AffineParams{n, inverse_mod(p, n), 0, k, p, 0, -p * k}.normalized();
}

// ---------------------------------------------------------------------------
// Axioms

struct AxiomFailure {
  std::vector<int> elements;
  std::string what;
};

struct AxiomReport {
  std::optional<AxiomFailure> axiom1;
  std::optional<AxiomFailure> axiom2;
  std::optional<AxiomFailure> axiom3;

  bool is_preflat() const { return !axiom1 && !axiom2; }
  bool is_flat_biquandle() const { return is_preflat() && !axiom3; }
};

namespace detail {

inline std::optional<AxiomFailure> check_axiom1(const FiniteFlatBiquandle& b) {
  const int n = b.size();
  for (int a = 0; a < n; ++a) {
    int xs = 0, ys = 0;
    for (int x = 0; x < n; ++x) {
      if (b.sharp(a, x) == x && b.star(x, a) == a) ++xs;
      if (b.star(a, x) == x && b.sharp(x, a) == a) ++ys;
    }
    if (xs != 1) return AxiomFailure{{a}, std::to_string(xs) + " solutions of a#x = x, x*a = a"};
    if (ys != 1) return AxiomFailure{{a}, std::to_string(ys) + " solutions of a*y = y, y#a = a"};
  }
  return std::nullopt;
}

inline std::optional<AxiomFailure> check_axiom2_identities(const FiniteFlatBiquandle& b) {
  const int n = b.size();
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      if (b.star(b.sharp(a, c), b.star(c, a)) != a) return AxiomFailure{{a, c}, "(a#b)*(b*a) != a"};
      if (b.sharp(b.star(c, a), b.sharp(a, c)) != c) return AxiomFailure{{a, c}, "(b*a)#(a#b) != b"};
    }
  }
  return std::nullopt;
}

inline std::optional<AxiomFailure> check_axiom2_uniqueness(const FiniteFlatBiquandle& b) {
  const int n = b.size();
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      int pairs = 0;
      for (int y = 0; y < n; ++y) {
        const int x = b.sharp(c, y);
        if (y == b.sharp(a, x) && c == b.star(x, a) && a == b.star(y, c)) ++pairs;
      }
      if (pairs != 1) return AxiomFailure{{a, c}, std::to_string(pairs) + " pairs (x,y) for the reverse move"};
    }
  }
  return std::nullopt;
}

inline std::optional<AxiomFailure> check_axiom3(const FiniteFlatBiquandle& b) {
  const int n = b.size();
  for (int a = 0; a < n; ++a) {
    for (int c2 = 0; c2 < n; ++c2) {
      for (int c = 0; c < n; ++c) {
        const int bb = c2;
        if (b.sharp(b.sharp(a, bb), c) != b.sharp(b.sharp(a, b.star(c, bb)), b.sharp(bb, c))) {
          return AxiomFailure{{a, bb, c}, "(a#b)#c != (a#(c*b))#(b#c)"};
        }
        if (b.star(b.star(c, bb), a) != b.star(b.star(c, b.sharp(a, bb)), b.star(bb, a))) {
          return AxiomFailure{{a, bb, c}, "(c*b)*a != (c*(a#b))*(b*a)"};
        }
        if (b.star(b.sharp(bb, c), b.sharp(a, b.star(c, bb))) !=
            b.sharp(b.star(bb, a), b.star(c, b.sharp(a, bb)))) {
          return AxiomFailure{{a, bb, c}, "(b#c)*(a#(c*b)) != (b*a)#(c*(a#b))"};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline AxiomReport check_axioms(const FiniteFlatBiquandle& b) {
  AxiomReport report;
  report.axiom1 = detail::check_axiom1(b);
  report.axiom2 = detail::check_axiom2_identities(b);
  if (!report.axiom2) report.axiom2 = detail::check_axiom2_uniqueness(b);
  report.axiom3 = detail::check_axiom3(b);
  return report;
}

/// All affine parameter tuples over Z/n whose tables satisfy all three
/// axioms, by exhaustive scan of the n^6 tuples. Ordered by (r,s,k,p,q,l).
inline std::vector<AffineParams> search_affine(int n) {
  if (n < 2) throw ValidationError("search needs N >= 2");
  std::vector<AffineParams> out;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            for (int l = 0; l < n; ++l) {
              const AffineParams params{n, r, s, k, p, q, l};
              const auto b = make_affine(params);
              // Cheapest refutations first.
              if (detail::check_axiom2_identities(b) || detail::check_axiom1(b) || detail::check_axiom3(b) ||
                  detail::check_axiom2_uniqueness(b)) {
                continue;
              }
              out.push_back(params);
            }
  return out;
}

/// { a*b = p^-1 a + k, a#b = p a - p k : p a unit, k in Z/n }, sorted.
inline std::vector<AffineParams> closed_form_affine(int n) {
  std::vector<AffineParams> out;
  for (int p = 0; p < n; ++p) {
    if (!is_unit(p, n)) continue;
    for (int k = 0; k < n; ++k) out.push_back(theorem_form(n, p, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Checks a + b = b*a + a#b, i.e. W+ + W- = 0 with W+ = a - b*a and
/// W- = b - a#b. Returns the first failing (a, b), scanning b-major.
inline std::optional<std::pair<int, int>> weight_condition(const FiniteFlatBiquandle& bq) {
  const int n = bq.size();
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (mod(a + b, n) != mod(bq.star(b, a) + bq.sharp(a, b), n)) return std::pair{a, b};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Colorings

/// One color per arc, shaped like ChengColoring.
using BiquandleColoring = std::vector<std::vector<int>>;

namespace detail {

struct CrossingArcs {
  std::size_t r_in, l_in, r_out, l_out;
};

struct ArcLayout {
  std::vector<std::size_t> first_arc;  // per component
  std::vector<std::size_t> arc_count;
  std::size_t total = 0;
  std::vector<CrossingArcs> crossings;
};

inline ArcLayout layout(const FlatCode& flat) {
  ArcLayout lay;
  for (const auto& comp : flat.components) {
    lay.first_arc.push_back(lay.total);
    lay.arc_count.push_back(std::max<std::size_t>(comp.size(), 1));
    lay.total += lay.arc_count.back();
  }
  for (const auto& [id, pos] : crossing_positions(flat)) {
    const bool first_r = at(flat, pos[0]).role == FlatRole::R;
    const Position r = first_r ? pos[0] : pos[1];
    const Position l = first_r ? pos[1] : pos[0];
    auto arc = [&](Position p) { return lay.first_arc[p.component] + p.index; };
    auto arc_in = [&](Position p) {
      return lay.first_arc[p.component] + arc_into(p.index, flat.components[p.component].size());
    };
    lay.crossings.push_back({arc_in(r), arc_in(l), arc(r), arc(l)});
  }
  return lay;
}

inline BiquandleColoring unflatten(const ArcLayout& lay, const std::vector<int>& colors) {
  BiquandleColoring out;
  for (std::size_t c = 0; c < lay.first_arc.size(); ++c) {
    out.emplace_back(colors.begin() + static_cast<std::ptrdiff_t>(lay.first_arc[c]),
                     colors.begin() + static_cast<std::ptrdiff_t>(lay.first_arc[c] + lay.arc_count[c]));
  }
  return out;
}

inline bool satisfies(const FiniteFlatBiquandle& b, const CrossingArcs& x, const std::vector<int>& col) {
  return col[x.r_out] == b.sharp(col[x.r_in], col[x.l_in]) && col[x.l_out] == b.star(col[x.l_in], col[x.r_in]);
}

// Backtracking over per-arc domains (bitmasks over Z/N), kept consistent
// with the two ternary relations at every crossing. -1 marks an unknown arc.
class ColoringSolver {
 public:
  ColoringSolver(const FiniteFlatBiquandle& b, const ArcLayout& lay) : b_(b) {
    if (b.size() > 64) throw ValidationError("coloring enumeration supports carriers up to 64 elements");
    for (const auto& x : lay.crossings) {
      relations_.push_back({x.r_in, x.l_in, x.r_out, true});
      relations_.push_back({x.l_in, x.r_in, x.l_out, false});
    }
  }

  std::vector<std::vector<int>> solve(const std::vector<int>& colors) {
    solutions_.clear();
    const Mask full = b_.size() == 64 ? ~Mask{0} : (Mask{1} << b_.size()) - 1;
    std::vector<Mask> domains(colors.size(), full);
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (colors[i] >= 0) domains[i] = Mask{1} << colors[i];
    }
    search(std::move(domains));
    std::sort(solutions_.begin(), solutions_.end());
    return std::move(solutions_);
  }

 private:
  using Mask = std::uint64_t;

  // out = sharp(first, second) when `sharp`, else star(first, second).
  struct Relation {
    std::size_t first, second, out;
    bool sharp;
  };

  static bool has(Mask m, int v) { return (m >> v) & 1U; }

  bool revise(const Relation& r, std::vector<Mask>& d, bool& changed) const {
    Mask keep_first = 0, keep_second = 0, keep_out = 0;
    for (int x = 0; x < b_.size(); ++x) {
      if (!has(d[r.first], x)) continue;
      for (int y = 0; y < b_.size(); ++y) {
        if (!has(d[r.second], y)) continue;
        const int z = r.sharp ? b_.sharp(x, y) : b_.star(x, y);
        if (!has(d[r.out], z)) continue;
        // Arcs may coincide (kinks), so the same value must be used for each.
        if (r.first == r.second && x != y) continue;
        if (r.out == r.first && z != x) continue;
        if (r.out == r.second && z != y) continue;
        keep_first |= Mask{1} << x;
        keep_second |= Mask{1} << y;
        keep_out |= Mask{1} << z;
      }
    }
    for (auto [arc, keep] : {std::pair{r.first, keep_first}, {r.second, keep_second}, {r.out, keep_out}}) {
      const Mask next = d[arc] & keep;
      if (next != d[arc]) {
        d[arc] = next;
        changed = true;
      }
      if (next == 0) return false;
    }
    return true;
  }

  bool propagate(std::vector<Mask>& d) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : relations_)
        if (!revise(r, d, changed)) return false;
    }
    return true;
  }

  void search(std::vector<Mask> d) {
    if (!propagate(d)) return;
    std::size_t pick = d.size();
    int best = 65;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const int size = std::popcount(d[i]);
      if (size > 1 && size < best) {
        best = size;
        pick = i;
      }
    }
    if (pick == d.size()) {
      std::vector<int> col;
      for (Mask m : d) col.push_back(std::countr_zero(m));
      solutions_.push_back(std::move(col));
      return;
    }
    for (int v = 0; v < b_.size(); ++v) {
      if (!has(d[pick], v)) continue;
      auto next = d;
      next[pick] = Mask{1} << v;
      search(std::move(next));
    }
  }

  const FiniteFlatBiquandle& b_;
  std::vector<Relation> relations_;
  std::vector<std::vector<int>> solutions_;
};

}  // namespace detail

/// Reference enumeration: every one of the N^arcs assignments is tested.
/// Results in lexicographic order of the flattened arc colors.
inline std::vector<BiquandleColoring> enumerate_colorings_brute_force(const FlatCode& flat,
                                                                     const FiniteFlatBiquandle& b) {
  const auto lay = detail::layout(flat);
  const double space = std::pow(static_cast<double>(b.size()), static_cast<double>(lay.total));
  if (space > 5e7) throw ValidationError("brute-force coloring space too large");
  std::vector<BiquandleColoring> out;
  std::vector<int> col(lay.total, 0);
  while (true) {
    bool ok = true;
    for (const auto& x : lay.crossings) {
      if (!detail::satisfies(b, x, col)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(detail::unflatten(lay, col));
    std::size_t i = lay.total;
    while (i > 0) {
      --i;
      if (++col[i] < b.size()) break;
      col[i] = 0;
      if (i == 0) return out;
    }
    if (lay.total == 0) return out;
  }
}

/// Same result as the brute-force enumeration, found by propagation.
inline std::vector<BiquandleColoring> enumerate_colorings(const FlatCode& flat, const FiniteFlatBiquandle& b) {
  const auto lay = detail::layout(flat);
  detail::ColoringSolver solver(b, lay);
  std::vector<BiquandleColoring> out;
  for (const auto& col : solver.solve(std::vector<int>(lay.total, -1))) out.push_back(detail::unflatten(lay, col));
  return out;
}

inline bool verify_coloring(const FlatCode& flat, const FiniteFlatBiquandle& b, const BiquandleColoring& coloring) {
  const auto lay = detail::layout(flat);
  if (coloring.size() != lay.arc_count.size()) throw ValidationError("coloring shape does not match code");
  std::vector<int> col;
  for (std::size_t c = 0; c < coloring.size(); ++c) {
    if (coloring[c].size() != lay.arc_count[c]) throw ValidationError("coloring shape does not match code");
    for (int v : coloring[c]) {
      if (v < 0 || v >= b.size()) return false;
      col.push_back(v);
    }
  }
  for (const auto& x : lay.crossings)
    if (!detail::satisfies(b, x, col)) return false;
  return true;
}

/// A Cheng coloring reduced mod N, which colors the diagram under the
/// increment biquandle a*b = a+1, a#b = a-1.
inline BiquandleColoring reduce_mod(const ChengColoring& coloring, int n) {
  BiquandleColoring out;
  for (const auto& comp : coloring.labels) {
    std::vector<int> c;
    for (auto v : comp) c.push_back(mod(v, n));
    out.push_back(std::move(c));
  }
  return out;
}

/// Carries a coloring across a move: inherited arcs keep their colors and
/// the arcs the move created are solved for. Empty unless exactly one
/// extension exists.
inline std::optional<BiquandleColoring> transport_coloring(const MoveResult& moved, const BiquandleColoring& old,
                                                           const FiniteFlatBiquandle& b) {
  const FlatCode flat = forget(moved.code);
  const auto lay = detail::layout(flat);
  std::vector<int> col(lay.total, -1);
  for (std::size_t c = 0; c < moved.arc_origin.size(); ++c) {
    for (std::size_t i = 0; i < moved.arc_origin[c].size(); ++i) {
      if (const auto& ref = moved.arc_origin[c][i]) col[lay.first_arc[c] + i] = old.at(ref->component).at(ref->arc);
    }
  }
  detail::ColoringSolver solver(b, lay);
  auto solutions = solver.solve(std::move(col));
  if (solutions.size() != 1) return std::nullopt;
  return detail::unflatten(lay, solutions.front());
}

// ---------------------------------------------------------------------------
// Doodle pre-invariant

/// sum sgn(c) t^W(c) - wr with exponents in Z/N, as a dense coefficient
/// vector. W+ = a - b*a and W- = b - a#b, a entering on the R passage and
/// b on the L passage.
inline std::vector<std::int64_t> doodle_pre_invariant(const SignedGaussCode& code, const FiniteFlatBiquandle& bq,
                                                      const BiquandleColoring& coloring) {
  if (auto bad = weight_condition(bq)) {
    throw ValidationError("biquandle fails the weight condition at (" + std::to_string(bad->first) + "," +
                          std::to_string(bad->second) + ")");
  }
  const FlatCode flat = forget(code);
  if (!verify_coloring(flat, bq, coloring)) throw ValidationError("invalid coloring");
  const int n = bq.size();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (const auto& [id, pos] : crossing_positions(flat)) {
    const bool first_r = at(flat, pos[0]).role == FlatRole::R;
    const Position r = first_r ? pos[0] : pos[1];
    const Position l = first_r ? pos[1] : pos[0];
    auto into = [&](Position p) {
      return coloring[p.component][arc_into(p.index, flat.components[p.component].size())];
    };
    const int a = into(r);
    const int b = into(l);
    const int sign = at(code, pos[0]).sign;
    const int w = sign > 0 ? mod(a - bq.star(b, a), n) : mod(b - bq.sharp(a, b), n);
    out[static_cast<std::size_t>(w)] += sign;
    out[0] -= sign;
  }
  return out;
}

/// The pre-invariant summed over every coloring of the diagram.
inline std::vector<std::int64_t> doodle_aggregate(const SignedGaussCode& code, const FiniteFlatBiquandle& bq) {
  std::vector<std::int64_t> total(static_cast<std::size_t>(bq.size()), 0);
  for (const auto& col : enumerate_colorings(forget(code), bq)) {
    const auto v = doodle_pre_invariant(code, bq, col);
    for (std::size_t i = 0; i < v.size(); ++i) total[i] += v[i];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Table files: N, then N rows of star, a blank line, N rows of sharp.

inline std::string serialize(const FiniteFlatBiquandle& b) {
  std::ostringstream os;
  const int n = b.size();
  os << n << '\n';
  auto rows = [&](auto op) {
    for (int a = 0; a < n; ++a) {
      for (int c = 0; c < n; ++c) os << (c ? " " : "") << op(a, c);
      os << '\n';
    }
  };
  rows([&](int a, int c) { return b.star(a, c); });
  os << '\n';
  rows([&](int a, int c) { return b.sharp(a, c); });
  return os.str();
}

inline FiniteFlatBiquandle parse_biquandle(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = 0;
  if (!(is >> n) || n < 1 || n > 4096) throw ParseError("biquandle file: bad carrier size");
  const auto cells = static_cast<std::size_t>(n * n);
  std::vector<int> star(cells), sharp(cells);
  for (auto* table : {&star, &sharp}) {
    for (auto& v : *table) {
      long long x = 0;
      if (!(is >> x)) throw ParseError("biquandle file: expected " + std::to_string(2 * cells) + " entries");
      if (x < 0 || x >= n) throw ParseError("biquandle file: entry " + std::to_string(x) + " out of range");
      v = static_cast<int>(x);
    }
  }
  std::string rest;
  if (is >> rest) throw ParseError("biquandle file: trailing data");
  return {static_cast<int>(n), std::move(star), std::move(sharp)};
}

}  // namespace aip
