#pragma once

// Cheng colorings: integer arc labels that rise by one through every L
// passage and fall by one through every R passage.
//
// Arc i of a component is the segment that leaves passage i, so passage i
// is entered from arc i-1 (cyclically). A crossingless component has a
// single arc.

#include <aip/errors.hpp>
#include <aip/gauss_code.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aip {

struct ChengColoring {
  std::vector<std::vector<std::int64_t>> labels;

  friend bool operator==(const ChengColoring&, const ChengColoring&) = default;
};

struct ColorabilityReport {
  bool colorable = true;
  /// #L - #R per component.
  std::vector<std::int64_t> imbalance;
};

/// Index of the arc entering passage `index` of a component of `size` passages.
inline std::size_t arc_into(std::size_t index, std::size_t size) { return (index + size - 1) % size; }

inline ColorabilityReport colorability(const FlatCode& flat) {
  ColorabilityReport report;
  for (const auto& comp : flat.components) {
    std::int64_t balance = 0;
    for (const auto& p : comp) balance += label_step(p.role);
    report.imbalance.push_back(balance);
    if (balance != 0) report.colorable = false;
  }
  return report;
}

inline ColorabilityReport colorability(const SignedGaussCode& code) { return colorability(forget(code)); }

namespace detail {

// Labels of arcs 0..n-1 when the arc entering passage 0 carries `seam`.
inline std::vector<std::int64_t> propagate_component(const std::vector<FlatPassage>& comp, std::int64_t seam) {
  if (comp.empty()) return {seam};
  std::vector<std::int64_t> labels(comp.size());
  std::int64_t label = seam;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    label += label_step(comp[i].role);
    labels[i] = label;
  }
  return labels;
}

inline void require_colorable(const FlatCode& flat) {
  const auto report = colorability(flat);
  if (report.colorable) return;
  std::string msg = "uncolorable: component imbalances";
  for (auto b : report.imbalance) msg += " " + std::to_string(b);
  throw UncolorableError(msg);
}

}  // namespace detail

/// The canonical coloring of a knot: lambda(arc) is the signed count of
/// crossings whose first encounter, travelling on from that arc, is the
/// over passage.
inline ChengColoring lambda_coloring(const SignedGaussCode& code) {
  if (code.components.size() != 1) throw ValidationError("lambda coloring needs a one-component code");
  const auto& comp = code.components.front();
  // Travelling from the seam arc meets passages 0..n-1 in order.
  std::int64_t seam = 0;
  std::set<int> met;
  for (const auto& p : comp) {
    if (met.insert(p.id).second && p.role == Role::Over) seam += p.sign;
  }
  return {{detail::propagate_component(forget(code).components.front(), seam)}};
}

/// Colors every component from its seam arc (the arc entering passage 0).
/// A knot starts from its lambda value, a link from 0; `offsets` shift
/// each component.
inline ChengColoring propagate_coloring(const SignedGaussCode& code, const std::vector<std::int64_t>& offsets) {
  if (offsets.size() != code.components.size()) {
    throw ValidationError("expected " + std::to_string(code.components.size()) + " offsets, got " +
                          std::to_string(offsets.size()));
  }
  const FlatCode flat = forget(code);
  detail::require_colorable(flat);
  if (code.components.size() == 1) {
    auto coloring = lambda_coloring(code);
    for (auto& l : coloring.labels.front()) l += offsets.front();
    return coloring;
  }
  ChengColoring coloring;
  for (std::size_t c = 0; c < flat.components.size(); ++c) {
    coloring.labels.push_back(detail::propagate_component(flat.components[c], offsets[c]));
  }
  return coloring;
}

/// The coloring used when none is supplied: lambda for knots, zero offsets
/// for links.
inline ChengColoring default_coloring(const SignedGaussCode& code) {
  return propagate_coloring(code, std::vector<std::int64_t>(code.components.size(), 0));
}

inline void require_shape(const FlatCode& flat, const ChengColoring& coloring) {
  bool ok = coloring.labels.size() == flat.components.size();
  for (std::size_t c = 0; ok && c < flat.components.size(); ++c) {
    ok = coloring.labels[c].size() == std::max<std::size_t>(flat.components[c].size(), 1);
  }
  if (!ok) throw ValidationError("coloring shape does not match code");
}

inline bool verify_coloring(const FlatCode& flat, const ChengColoring& coloring) {
  require_shape(flat, coloring);
  for (std::size_t c = 0; c < flat.components.size(); ++c) {
    const auto& comp = flat.components[c];
    const auto& labels = coloring.labels[c];
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (labels[i] != labels[arc_into(i, comp.size())] + label_step(comp[i].role)) return false;
    }
  }
  return true;
}

inline bool verify_coloring(const SignedGaussCode& code, const ChengColoring& coloring) {
  return verify_coloring(forget(code), coloring);
}

/// "1,0,1,2 ; -1,0"
inline std::string serialize(const ChengColoring& coloring) {
  std::string out;
  for (std::size_t c = 0; c < coloring.labels.size(); ++c) {
    if (c > 0) out += " ; ";
    for (std::size_t i = 0; i < coloring.labels[c].size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(coloring.labels[c][i]);
    }
  }
  return out;
}

inline ChengColoring parse_coloring(std::string_view text) {
  ChengColoring coloring;
  for (auto part : detail::split(text, ';')) {
    std::vector<std::int64_t> labels;
    for (auto item : detail::split(detail::trim(part), ',')) {
      item = detail::trim(item);
      try {
        std::size_t used = 0;
        const std::string s(item);
        labels.push_back(std::stoll(s, &used));
        if (used != s.size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad coloring label '" + std::string(item) + "'");
      }
    }
    coloring.labels.push_back(std::move(labels));
  }
  return coloring;
}

}  // namespace aip
