#pragma once

// Signed and flat Gauss codes for virtual knots and links.
//
// A virtual diagram is stored only through its classical crossings: every
// component is a cyclic sequence of passages, and each crossing is passed
// twice in the whole code. Virtual crossings leave no trace, so detour and
// purely virtual moves are identities on this representation.
//
// Text grammar:
//   signed token  O<id><+|->  or  U<id><+|->
//   flat token    L<id>       or  R<id>
//   tokens within a component are separated by spaces, components by ';',
//   and an empty (crossingless) component is written "()".

#include <aip/errors.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aip {

enum class Role : std::uint8_t { Over, Under };

/// L crosses to the left (label +1), R crosses to the right (label -1).
enum class FlatRole : std::uint8_t { L, R };

struct Passage {
  int id = 0;
  Role role = Role::Over;
  int sign = +1;

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct FlatPassage {
  int id = 0;
  FlatRole role = FlatRole::L;

  friend bool operator==(const FlatPassage&, const FlatPassage&) = default;
};

template <class P>
struct BasicCode {
  using passage_type = P;
  using component_type = std::vector<P>;

  std::vector<component_type> components;

  std::size_t passage_count() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.size();
    return n;
  }

  friend bool operator==(const BasicCode&, const BasicCode&) = default;
};

using SignedGaussCode = BasicCode<Passage>;
using FlatCode = BasicCode<FlatPassage>;

/// Location of a passage: component index and index within the component.
struct Position {
  std::size_t component = 0;
  std::size_t index = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

struct Violation {
  int crossing = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.message;
    }
    return s;
  }
};

inline constexpr char role_char(Role r) { return r == Role::Over ? 'O' : 'U'; }
inline constexpr char role_char(FlatRole r) { return r == FlatRole::L ? 'L' : 'R'; }
inline constexpr Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }
inline constexpr FlatRole opposite(FlatRole r) {
  return r == FlatRole::L ? FlatRole::R : FlatRole::L;
}

/// +1 for L, -1 for R: the label change when passing through a crossing.
inline constexpr int label_step(FlatRole r) { return r == FlatRole::L ? +1 : -1; }

/// Over at + and Under at - cross to the right; the other two to the left.
inline constexpr FlatRole flat_role(const Passage& p) {
  const bool over = p.role == Role::Over;
  return (over == (p.sign > 0)) ? FlatRole::R : FlatRole::L;
}

// ---------------------------------------------------------------------------
// Tokens

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline int parse_id(std::string_view digits, std::string_view token) {
  if (digits.empty() || digits.size() > 9) {
    throw ParseError("bad token '" + std::string(token) + "'");
  }
  int id = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("bad token '" + std::string(token) + "'");
    }
    id = id * 10 + (ch - '0');
  }
  if (id < 1) throw ParseError("crossing id must be >= 1 in '" + std::string(token) + "'");
  return id;
}

inline Passage parse_signed_token(std::string_view tok) {
  if (tok.size() < 3 || (tok.front() != 'O' && tok.front() != 'U') ||
      (tok.back() != '+' && tok.back() != '-')) {
    throw ParseError("bad token '" + std::string(tok) + "'");
  }
  Passage p;
  p.role = tok.front() == 'O' ? Role::Over : Role::Under;
  p.sign = tok.back() == '+' ? +1 : -1;
  p.id = parse_id(tok.substr(1, tok.size() - 2), tok);
  return p;
}

inline FlatPassage parse_flat_token(std::string_view tok) {
  if (tok.size() < 2 || (tok.front() != 'L' && tok.front() != 'R')) {
    throw ParseError("bad token '" + std::string(tok) + "'");
  }
  FlatPassage p;
  p.role = tok.front() == 'L' ? FlatRole::L : FlatRole::R;
  p.id = parse_id(tok.substr(1), tok);
  return p;
}

template <class P, class TokenParser>
BasicCode<P> parse_components(std::string_view text, TokenParser parse_token) {
  if (trim(text).empty()) throw ParseError("empty code");
  BasicCode<P> code;
  for (auto part : split(text, ';')) {
    part = trim(part);
    if (part.empty()) throw ParseError("empty component; write () for a crossingless component");
    std::vector<P> comp;
    if (part != "()") {
      for (auto tok : split_ws(part)) comp.push_back(parse_token(tok));
    }
    code.components.push_back(std::move(comp));
  }
  return code;
}

inline std::string token(const Passage& p) {
  return role_char(p.role) + std::to_string(p.id) + (p.sign > 0 ? "+" : "-");
}
inline std::string token(const FlatPassage& p) { return role_char(p.role) + std::to_string(p.id); }

inline Role role_of(const Passage& p) { return p.role; }
inline FlatRole role_of(const FlatPassage& p) { return p.role; }

// Canonical token order: role (O < U, L < R), then id, then + < -.
inline std::tuple<int, int, int> token_key(const Passage& p) {
  return {p.role == Role::Over ? 0 : 1, p.id, p.sign > 0 ? 0 : 1};
}
inline std::tuple<int, int, int> token_key(const FlatPassage& p) {
  return {p.role == FlatRole::L ? 0 : 1, p.id, 0};
}

template <class P>
bool component_less(const std::vector<P>& a, const std::vector<P>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const P& x, const P& y) { return token_key(x) < token_key(y); });
}

template <class P>
bool code_less(const std::vector<std::vector<P>>& a, const std::vector<std::vector<P>>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const auto& x, const auto& y) { return component_less(x, y); });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Validation

template <class P>
ValidationReport validate(const BasicCode<P>& code) {
  ValidationReport report;
  if (code.components.empty()) {
    report.violations.push_back({0, "code has no components"});
    return report;
  }
  std::map<int, std::vector<const P*>> seen;
  for (const auto& comp : code.components) {
    for (const auto& p : comp) seen[p.id].push_back(&p);
  }
  for (const auto& [id, ps] : seen) {
    const auto name = std::to_string(id);
    if (ps.size() % 2 == 1) {
      report.violations.push_back({id, "odd occurrence of " + name});
    } else if (ps.size() != 2) {
      report.violations.push_back({id, "crossing " + name + " occurs " + std::to_string(ps.size()) + " times"});
    }
    std::map<char, int> roles;
    for (const P* p : ps) ++roles[role_char(detail::role_of(*p))];
    for (const auto& [r, n] : roles) {
      if (n > 1) report.violations.push_back({id, std::string("duplicate role ") + r + " at " + name});
    }
    if constexpr (std::is_same_v<P, Passage>) {
      for (const P* p : ps) {
        if (p->sign != ps.front()->sign) {
          report.violations.push_back({id, "sign mismatch at " + name});
          break;
        }
      }
    }
  }
  return report;
}

template <class P>
void require_valid(const BasicCode<P>& code) {
  auto report = validate(code);
  if (!report.ok()) throw ValidationError(report.summary());
}

// ---------------------------------------------------------------------------
// Parsing and serialization

inline SignedGaussCode parse_signed(std::string_view text) {
  auto code = detail::parse_components<Passage>(text, detail::parse_signed_token);
  require_valid(code);
  return code;
}

inline FlatCode parse_flat(std::string_view text) {
  auto code = detail::parse_components<FlatPassage>(text, detail::parse_flat_token);
  require_valid(code);
  return code;
}

template <class P>
std::string serialize(const BasicCode<P>& code) {
  std::string out;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    if (c > 0) out += " ; ";
    const auto& comp = code.components[c];
    if (comp.empty()) {
      out += "()";
      continue;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i > 0) out += ' ';
      out += detail::token(comp[i]);
    }
  }
  return out;
}

template <class P>
std::ostream& operator<<(std::ostream& os, const BasicCode<P>& code) {
  return os << serialize(code);
}

// ---------------------------------------------------------------------------
// Queries

/// Sorted distinct crossing ids.
template <class P>
std::vector<int> crossing_ids(const BasicCode<P>& code) {
  std::set<int> ids;
  for (const auto& comp : code.components)
    for (const auto& p : comp) ids.insert(p.id);
  return {ids.begin(), ids.end()};
}

template <class P>
int max_crossing_id(const BasicCode<P>& code) {
  int m = 0;
  for (const auto& comp : code.components)
    for (const auto& p : comp) m = std::max(m, p.id);
  return m;
}

/// Both positions of each crossing, in traversal order of discovery.
template <class P>
std::map<int, std::vector<Position>> crossing_positions(const BasicCode<P>& code) {
  std::map<int, std::vector<Position>> out;
  for (std::size_t c = 0; c < code.components.size(); ++c)
    for (std::size_t i = 0; i < code.components[c].size(); ++i) out[code.components[c][i].id].push_back({c, i});
  return out;
}

template <class P>
const P& at(const BasicCode<P>& code, Position pos) {
  return code.components[pos.component][pos.index];
}

template <class P>
void require_crossings(const BasicCode<P>& code, const std::vector<int>& ids) {
  const auto known = crossing_ids(code);
  for (int id : ids) {
    if (!std::binary_search(known.begin(), known.end(), id)) {
      throw ValidationError("unknown crossing " + std::to_string(id));
    }
  }
}

// ---------------------------------------------------------------------------
// Canonical form

namespace detail {

template <class P>
struct CanonicalSearch {
  const BasicCode<P>& code;
  std::vector<std::vector<P>> best;
  bool have_best = false;

  static std::vector<P> relabel(const std::vector<P>& comp, std::size_t rot, std::map<int, int>& mapping,
                                int& next_id) {
    std::vector<P> out;
    out.reserve(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      P p = comp[(rot + i) % comp.size()];
      auto [it, inserted] = mapping.try_emplace(p.id, next_id);
      if (inserted) ++next_id;
      p.id = it->second;
      out.push_back(p);
    }
    return out;
  }

  void run(std::vector<std::size_t> remaining, std::map<int, int> mapping, int next_id,
           std::vector<std::vector<P>> prefix) {
    if (have_best && code_less(best, prefix)) return;
    if (remaining.empty()) {
      if (!have_best || code_less(prefix, best)) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    struct Candidate {
      std::size_t slot;
      std::size_t rotation;
      std::vector<P> tokens;
    };
    std::vector<Candidate> ties;
    for (std::size_t slot = 0; slot < remaining.size(); ++slot) {
      const auto& comp = code.components[remaining[slot]];
      const std::size_t rotations = std::max<std::size_t>(comp.size(), 1);
      for (std::size_t r = 0; r < rotations; ++r) {
        auto m = mapping;
        int n = next_id;
        auto tokens = relabel(comp, r, m, n);
        if (ties.empty() || component_less(tokens, ties.front().tokens)) {
          ties.clear();
          ties.push_back({slot, r, std::move(tokens)});
        } else if (!component_less(ties.front().tokens, tokens)) {
          ties.push_back({slot, r, std::move(tokens)});
        }
      }
      // Empty components are the minimum and interchangeable.
      if (comp.empty()) {
        ties.erase(ties.begin(), ties.end() - 1);
        break;
      }
    }
    for (const auto& cand : ties) {
      auto m = mapping;
      int n = next_id;
      relabel(code.components[remaining[cand.slot]], cand.rotation, m, n);
      auto rest = remaining;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(cand.slot));
      auto next_prefix = prefix;
      next_prefix.push_back(cand.tokens);
      run(std::move(rest), std::move(m), n, std::move(next_prefix));
    }
  }
};

}  // namespace detail

/// Renumbers crossings 1..n by first appearance and picks the smallest
/// token sequence over all component rotations and orderings.
template <class P>
BasicCode<P> canonicalize(const BasicCode<P>& code) {
  detail::CanonicalSearch<P> search{code, {}, false};
  std::vector<std::size_t> all(code.components.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  search.run(std::move(all), {}, 1, {});
  return BasicCode<P>{std::move(search.best)};
}

// ---------------------------------------------------------------------------
// Signed <-> flat

inline FlatCode forget(const SignedGaussCode& code) {
  FlatCode flat;
  flat.components.reserve(code.components.size());
  for (const auto& comp : code.components) {
    std::vector<FlatPassage> fc;
    fc.reserve(comp.size());
    for (const auto& p : comp) fc.push_back({p.id, flat_role(p)});
    flat.components.push_back(std::move(fc));
  }
  return flat;
}

/// The signed code over `flat` in which crossing `ids[i]` is positive iff
/// bit i of `mask` is clear. Positive: R-passage is Over. Negative:
/// L-passage is Over.
inline SignedGaussCode resolve(const FlatCode& flat, const std::vector<int>& ids, std::uint64_t mask) {
  std::map<int, int> sign_of;
  for (std::size_t i = 0; i < ids.size(); ++i) sign_of[ids[i]] = ((mask >> i) & 1U) ? -1 : +1;
  SignedGaussCode out;
  out.components.reserve(flat.components.size());
  for (const auto& comp : flat.components) {
    std::vector<Passage> sc;
    sc.reserve(comp.size());
    for (const auto& fp : comp) {
      const int sign = sign_of.at(fp.id);
      const FlatRole over_role = sign > 0 ? FlatRole::R : FlatRole::L;
      sc.push_back({fp.id, fp.role == over_role ? Role::Over : Role::Under, sign});
    }
    out.components.push_back(std::move(sc));
  }
  return out;
}

/// All 2^n signed codes whose underlying flat code is `flat`, indexed by
/// the bitmask of negative crossings (bit i = i-th smallest id).
inline std::vector<SignedGaussCode> resolutions(const FlatCode& flat) {
  const auto ids = crossing_ids(flat);
  if (ids.size() >= 63) throw ValidationError("too many crossings to enumerate resolutions");
  std::vector<SignedGaussCode> out;
  const std::uint64_t count = std::uint64_t{1} << ids.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(resolve(flat, ids, mask));
  return out;
}

}  // namespace aip
