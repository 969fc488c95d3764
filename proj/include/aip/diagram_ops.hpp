#pragma once

// Structural transforms on signed Gauss codes.

#include <aip/coloring.hpp>
#include <aip/errors.hpp>
#include <aip/gauss_code.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace aip {

inline int writhe(const SignedGaussCode& code) {
  int w = 0;
  for (const auto& comp : code.components)
    for (const auto& p : comp)
      if (p.role == Role::Over) w += p.sign;
  return w;
}

/// Reverses every component. Roles and signs are kept.
inline SignedGaussCode reverse(SignedGaussCode code) {
  for (auto& comp : code.components) std::reverse(comp.begin(), comp.end());
  return code;
}

inline SignedGaussCode switch_crossings(SignedGaussCode code, const std::vector<int>& ids) {
  require_crossings(code, ids);
  const std::set<int> chosen(ids.begin(), ids.end());
  for (auto& comp : code.components) {
    for (auto& p : comp) {
      if (!chosen.count(p.id)) continue;
      p.role = opposite(p.role);
      p.sign = -p.sign;
    }
  }
  return code;
}

/// Switches every crossing.
inline SignedGaussCode mirror(const SignedGaussCode& code) { return switch_crossings(code, crossing_ids(code)); }

/// Flanks each listed crossing by two virtual crossings. In a Gauss code
/// only the sign changes.
inline SignedGaussCode virtualize(SignedGaussCode code, const std::vector<int>& ids) {
  require_crossings(code, ids);
  const std::set<int> chosen(ids.begin(), ids.end());
  for (auto& comp : code.components)
    for (auto& p : comp)
      if (chosen.count(p.id)) p.sign = -p.sign;
  return code;
}

struct LabeledCode {
  SignedGaussCode code;
  ChengColoring coloring;
};

namespace detail {

struct LabeledComponent {
  std::vector<Passage> passages;
  std::vector<std::int64_t> labels;  // one per arc; a single entry when empty
};

// Cyclic slice of passages/labels strictly between `from` and `to`.
inline LabeledComponent cyclic_between(const std::vector<Passage>& comp, const std::vector<std::int64_t>& labels,
                                       std::size_t from, std::size_t to) {
  LabeledComponent out;
  const std::size_t n = comp.size();
  for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) {
    out.passages.push_back(comp[i]);
    out.labels.push_back(labels[i]);
  }
  return out;
}

inline void append(LabeledComponent& dst, const LabeledComponent& src) {
  dst.passages.insert(dst.passages.end(), src.passages.begin(), src.passages.end());
  dst.labels.insert(dst.labels.end(), src.labels.begin(), src.labels.end());
}

}  // namespace detail

/// Oriented smoothing of one crossing, carrying arc labels along. A
/// self-crossing splits its component in two; a crossing between two
/// components merges them. Labels stay valid when the crossing's weight
/// is zero.
inline LabeledCode smooth_labeled(const SignedGaussCode& code, const ChengColoring& coloring, int id) {
  require_crossings(code, {id});
  require_shape(forget(code), coloring);
  const auto pos = crossing_positions(code).at(id);
  const Position a = std::min(pos[0], pos[1]);
  const Position b = std::max(pos[0], pos[1]);

  std::vector<detail::LabeledComponent> comps;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    comps.push_back({code.components[c], coloring.labels[c]});
  }

  auto finish = [](detail::LabeledComponent& lc, std::int64_t empty_label) {
    if (lc.passages.empty()) lc.labels = {empty_label};
  };

  if (a.component == b.component) {
    const auto& src = comps[a.component];
    auto inner = detail::cyclic_between(src.passages, src.labels, a.index, b.index);
    auto outer = detail::cyclic_between(src.passages, src.labels, b.index, a.index);
    finish(inner, src.labels[a.index]);
    finish(outer, src.labels[b.index]);
    comps[a.component] = std::move(inner);
    comps.insert(comps.begin() + static_cast<std::ptrdiff_t>(a.component) + 1, std::move(outer));
  } else {
    const auto& first = comps[a.component];
    const auto& second = comps[b.component];
    auto merged = detail::cyclic_between(first.passages, first.labels, a.index, a.index);
    detail::append(merged, detail::cyclic_between(second.passages, second.labels, b.index, b.index));
    finish(merged, first.labels[a.index]);
    comps[a.component] = std::move(merged);
    comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(b.component));
  }

  LabeledCode out;
  for (auto& lc : comps) {
    out.code.components.push_back(std::move(lc.passages));
    out.coloring.labels.push_back(std::move(lc.labels));
  }
  return out;
}

inline SignedGaussCode smooth_oriented(const SignedGaussCode& code, int id) {
  ChengColoring zeros;
  for (const auto& comp : code.components) zeros.labels.emplace_back(std::max<std::size_t>(comp.size(), 1), 0);
  return smooth_labeled(code, zeros, id).code;
}

}  // namespace aip
