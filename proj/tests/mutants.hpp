#pragma once

#include <aip/moves.hpp>

namespace mutant {

/// An R3 that swaps only the middle pair (U_x O_z) and leaves the other
/// two in place. Every other move is applied correctly.
inline aip::SignedGaussCode middle_pair_r3(const aip::SignedGaussCode& code, const aip::MoveSite& site) {
  if (site.kind != aip::MoveKind::R3) return aip::apply_move(code, site);
  auto out = code;
  auto& comps = out.components;
  std::swap(comps[site.positions[2].component][site.positions[2].index],
            comps[site.positions[3].component][site.positions[3].index]);
  return out;
}

}  // namespace mutant
