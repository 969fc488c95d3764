#pragma once

// Crossing weights, the affine index polynomial and everything derived
// from it: link/coloring pairs, symbolic link weights, the skein
// difference, the singular-graph extension, finite-type invariants and
// flat nontriviality certificates.
//
//   P(K) = sum over crossings c of sgn(c) * (t^W(c) - 1)
//
// where W(c) is the weight selected by the crossing's sign.

#include <aip/coloring.hpp>
#include <aip/diagram_ops.hpp>
#include <aip/errors.hpp>
#include <aip/gauss_code.hpp>
#include <aip/laurent.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aip {

struct CrossingWeight {
  int id = 0;
  int sign = +1;
  std::int64_t w_plus = 0;
  std::int64_t w_minus = 0;
  /// w_plus for a positive crossing, w_minus for a negative one.
  std::int64_t weight = 0;

  friend bool operator==(const CrossingWeight&, const CrossingWeight&) = default;
};

/// Ordered by crossing id.
using WeightTable = std::vector<CrossingWeight>;

/// Weights from a valid coloring. Each weight is computed twice, from the
/// flat rule (a = label into the R passage, b = label into the L passage,
/// W+ = a - (b + 1), W- = b - (a - 1)) and as
/// label(into over) - label(into under) - sgn; the two must agree.
inline WeightTable crossing_weights(const SignedGaussCode& code, const ChengColoring& coloring) {
  const FlatCode flat = forget(code);
  if (!verify_coloring(flat, coloring)) throw ValidationError("invalid coloring");
  auto label_into = [&](Position pos) {
    const auto n = code.components[pos.component].size();
    return coloring.labels[pos.component][arc_into(pos.index, n)];
  };
  WeightTable table;
  for (const auto& [id, pos] : crossing_positions(code)) {
    const Passage& first = at(code, pos[0]);
    const bool first_is_r = flat_role(first) == FlatRole::R;
    const std::int64_t a = label_into(first_is_r ? pos[0] : pos[1]);
    const std::int64_t b = label_into(first_is_r ? pos[1] : pos[0]);

    CrossingWeight cw;
    cw.id = id;
    cw.sign = first.sign;
    cw.w_plus = a - (b + 1);
    cw.w_minus = b - (a - 1);
    cw.weight = cw.sign > 0 ? cw.w_plus : cw.w_minus;

    const bool first_is_over = first.role == Role::Over;
    const std::int64_t over_in = label_into(first_is_over ? pos[0] : pos[1]);
    const std::int64_t under_in = label_into(first_is_over ? pos[1] : pos[0]);
    if (over_in - under_in - cw.sign != cw.weight) {
      throw InternalError("weight routes disagree at crossing " + std::to_string(id));
    }
    table.push_back(cw);
  }
  return table;
}

inline WeightTable crossing_weights(const SignedGaussCode& code) {
  return crossing_weights(code, default_coloring(code));
}

/// sum sgn(c) t^W(c) - wr over a weight table.
inline LaurentPolynomial polynomial_from_weights(const WeightTable& table) {
  LaurentPolynomial p;
  for (const auto& cw : table) {
    p.add_term(cw.weight, cw.sign);
    p.add_term(0, -cw.sign);
  }
  return p;
}

/// Polynomial of a diagram paired with a coloring.
inline LaurentPolynomial link_pair_polynomial(const SignedGaussCode& code, const ChengColoring& coloring) {
  return polynomial_from_weights(crossing_weights(code, coloring));
}

inline LaurentPolynomial affine_index_polynomial(const SignedGaussCode& code) {
  return link_pair_polynomial(code, lambda_coloring(code));
}

// ---------------------------------------------------------------------------
// Symbolic link weights

/// constant + offset[plus_component] - offset[minus_component].
struct SymbolicWeight {
  int id = 0;
  int sign = +1;
  std::int64_t constant = 0;
  std::size_t plus_component = 0;
  std::size_t minus_component = 0;

  bool is_constant() const { return plus_component == minus_component; }

  std::int64_t evaluate(const std::vector<std::int64_t>& offsets) const {
    if (is_constant()) return constant;
    return constant + offsets.at(plus_component) - offsets.at(minus_component);
  }

  std::string str() const {
    std::string s = std::to_string(constant);
    if (!is_constant()) {
      s += " + off_" + std::to_string(plus_component) + " - off_" + std::to_string(minus_component);
    }
    return s;
  }

  friend bool operator==(const SymbolicWeight&, const SymbolicWeight&) = default;
};

/// Weights as affine functions of the per-component offsets. The
/// plus component is the one carrying the over passage.
inline std::vector<SymbolicWeight> symbolic_link_weights(const SignedGaussCode& code) {
  const auto base = crossing_weights(code, default_coloring(code));
  const auto positions = crossing_positions(code);
  std::vector<SymbolicWeight> out;
  for (const auto& cw : base) {
    const auto& pos = positions.at(cw.id);
    const bool first_over = at(code, pos[0]).role == Role::Over;
    const Position over = first_over ? pos[0] : pos[1];
    const Position under = first_over ? pos[1] : pos[0];
    out.push_back({cw.id, cw.sign, cw.weight, over.component, under.component});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite-type invariants

struct SignedWeight {
  int sign = +1;
  std::int64_t weight = 0;
};

/// v_n = (1/n!) * sum sgn(c) W(c)^n
inline Rational vassiliev_invariant(const std::vector<SignedWeight>& weights, unsigned n) {
  if (n == 0) throw ValidationError("vassiliev order must be >= 1");
  BigInt sum = 0;
  for (const auto& sw : weights) sum += sw.sign * boost::multiprecision::pow(BigInt(sw.weight), n);
  BigInt fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  return Rational(sum, fact);
}

inline Rational vassiliev_invariant(const WeightTable& table, unsigned n) {
  std::vector<SignedWeight> sw;
  for (const auto& cw : table) sw.push_back({cw.sign, cw.weight});
  return vassiliev_invariant(sw, n);
}

inline Rational vassiliev_invariant(const SignedGaussCode& code, unsigned n) {
  return vassiliev_invariant(crossing_weights(code), n);
}

// ---------------------------------------------------------------------------
// Skein relation and singular graphs

/// Gives crossing `id` the requested sign, keeping its flat roles.
inline SignedGaussCode with_crossing_sign(SignedGaussCode code, int id, int sign) {
  require_crossings(code, {id});
  for (auto& comp : code.components) {
    for (auto& p : comp) {
      if (p.id != id || p.sign == sign) continue;
      p.role = opposite(p.role);
      p.sign = sign;
    }
  }
  return code;
}

/// P(K with `id` positive) - P(K with `id` negative), each computed
/// from scratch.
inline LaurentPolynomial skein_difference(const SignedGaussCode& code, int id) {
  return affine_index_polynomial(with_crossing_sign(code, id, +1)) -
         affine_index_polynomial(with_crossing_sign(code, id, -1));
}

/// A knot diagram in which some crossings are 4-valent graph nodes. The
/// base code supplies the flat roles at those nodes; their over/under
/// data and signs are ignored.
struct SingularCode {
  SignedGaussCode base;
  std::vector<int> singular;
};

inline ValidationReport validate(const SingularCode& g) {
  auto report = validate(g.base);
  const auto ids = crossing_ids(g.base);
  std::set<int> seen;
  for (int id : g.singular) {
    if (!std::binary_search(ids.begin(), ids.end(), id)) {
      report.violations.push_back({id, "singular node " + std::to_string(id) + " is not a crossing"});
    }
    if (!seen.insert(id).second) {
      report.violations.push_back({id, "singular node " + std::to_string(id) + " listed twice"});
    }
  }
  return report;
}

namespace detail {

inline LaurentPolynomial expand_graph(const SignedGaussCode& code, const std::vector<int>& order, std::size_t next) {
  if (next == order.size()) return affine_index_polynomial(code);
  const int id = order[next];
  return expand_graph(with_crossing_sign(code, id, +1), order, next + 1) -
         expand_graph(with_crossing_sign(code, id, -1), order, next + 1);
}

}  // namespace detail

/// Expands each node as (positive resolution) - (negative resolution),
/// in the given node order.
inline LaurentPolynomial graph_polynomial(const SingularCode& g, const std::vector<int>& order) {
  const auto report = validate(g);
  if (!report.ok()) throw ValidationError(report.summary());
  if (std::set<int>(order.begin(), order.end()) != std::set<int>(g.singular.begin(), g.singular.end()) ||
      order.size() != g.singular.size()) {
    throw ValidationError("expansion order must list each singular node once");
  }
  return detail::expand_graph(g.base, order, 0);
}

inline LaurentPolynomial graph_polynomial(const SingularCode& g) { return graph_polynomial(g, g.singular); }

// ---------------------------------------------------------------------------
// Flat knots

struct FlatCertificate {
  bool certified = false;
  /// A resolution with zero polynomial, when one exists.
  std::optional<SignedGaussCode> witness;
  /// Polynomials of all resolutions in enumeration order, when certified.
  std::vector<LaurentPolynomial> polynomials;
};

/// Certified iff every resolution of the flat knot has a nonzero
/// polynomial, which proves the flat knot nontrivial.
inline FlatCertificate flat_nontriviality_certificate(const FlatCode& flat) {
  require_valid(flat);
  if (flat.components.size() != 1) throw ValidationError("flat certificate needs a one-component code");
  FlatCertificate cert;
  std::vector<LaurentPolynomial> polys;
  for (const auto& resolution : resolutions(flat)) {
    auto p = affine_index_polynomial(resolution);
    if (p.is_zero()) {
      cert.witness = resolution;
      return cert;
    }
    polys.push_back(std::move(p));
  }
  cert.certified = true;
  cert.polynomials = std::move(polys);
  return cert;
}

/// Canonical one-component flat codes with exactly `crossings` crossings.
inline std::vector<FlatCode> flat_knot_codes(int crossings) {
  std::set<std::string> seen;
  std::vector<FlatCode> out;
  std::vector<FlatPassage> word;
  std::map<int, FlatRole> open;
  const std::size_t length = static_cast<std::size_t>(2 * crossings);
  auto extend = [&](auto&& self, int next_id) -> void {
    if (word.size() == length) {
      auto canon = canonicalize(FlatCode{{word}});
      if (seen.insert(serialize(canon)).second) out.push_back(std::move(canon));
      return;
    }
    if (next_id <= crossings) {
      for (FlatRole r : {FlatRole::L, FlatRole::R}) {
        word.push_back({next_id, r});
        open[next_id] = r;
        self(self, next_id + 1);
        open.erase(next_id);
        word.pop_back();
      }
    }
    for (auto [id, r] : std::vector<std::pair<int, FlatRole>>(open.begin(), open.end())) {
      word.push_back({id, opposite(r)});
      open.erase(id);
      self(self, next_id);
      open[id] = r;
      word.pop_back();
    }
  };
  extend(extend, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Labeled cobordism

/// Smooths every zero-weight crossing, carrying the labels along.
inline LabeledCode smooth_zero_weight(const SignedGaussCode& code, const ChengColoring& coloring) {
  const auto table = crossing_weights(code, coloring);
  LabeledCode current{code, coloring};
  for (const auto& cw : table) {
    if (cw.weight == 0) current = smooth_labeled(current.code, current.coloring, cw.id);
  }
  return current;
}

}  // namespace aip
