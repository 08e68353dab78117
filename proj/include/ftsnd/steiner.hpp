#pragma once

// Small Steiner systems S(t, k, v) used as fault-tolerant decoders.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ftsnd/combinatorics.hpp"
#include "ftsnd/errors.hpp"
#include "ftsnd/exact_cover.hpp"
#include "ftsnd/set_system.hpp"

namespace ftsnd {

namespace detail {

// Rotates the low `cycle` bits of mask by one position; higher bits are fixed points.
inline std::uint64_t rotate_points(std::uint64_t mask, unsigned cycle) {
  if (cycle <= 1) return mask;
  const std::uint64_t low = (std::uint64_t{1} << cycle) - 1;
  const std::uint64_t moving = mask & low;
  const std::uint64_t rotated = ((moving << 1) | (moving >> (cycle - 1))) & low;
  return (mask & ~low) | rotated;
}

inline std::vector<std::uint64_t> orbit_of(std::uint64_t mask, unsigned cycle) {
  std::vector<std::uint64_t> orbit{mask};
  for (std::uint64_t x = rotate_points(mask, cycle); x != mask; x = rotate_points(x, cycle)) orbit.push_back(x);
  return orbit;
}

/// Exact cover of the t-subsets of [v] by k-subsets, restricted to designs
/// invariant under the cyclic shift of points 1..cycle (the remaining points
/// fixed). Columns and rows are orbits, which keeps the larger cases small.
inline SetSystem steiner_by_exact_cover(unsigned t, unsigned k, unsigned v, unsigned cycle) {
  std::map<std::uint64_t, std::size_t> t_orbit_id;  // any member -> column
  std::vector<std::size_t> t_orbit_size;
  for (auto mask : subsets_colex(v, t)) {
    if (t_orbit_id.count(mask)) continue;
    const auto orb = orbit_of(mask, cycle);
    for (auto x : orb) t_orbit_id[x] = t_orbit_size.size();
    t_orbit_size.push_back(orb.size());
  }

  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::uint64_t>> row_blocks;
  std::map<std::uint64_t, bool> seen;
  const auto t_subsets_of_k = subsets_lex(k, t);
  for (auto mask : subsets_colex(v, k)) {
    if (seen.count(mask)) continue;
    const auto orb = orbit_of(mask, cycle);
    for (auto x : orb) seen[x] = true;

    std::vector<unsigned> pts;
    for (std::uint64_t b = mask; b; b &= b - 1) pts.push_back(static_cast<unsigned>(std::countr_zero(b)));
    std::map<std::size_t, std::size_t> mult;
    for (auto sub : t_subsets_of_k) {
      std::uint64_t tm = 0;
      for (std::uint64_t b = sub; b; b &= b - 1) tm |= std::uint64_t{1} << pts[std::countr_zero(b)];
      ++mult[t_orbit_id.at(tm)];
    }
    // Each t-set in orbit X is covered |orbit(B)| * mult / |X| times by the block orbit.
    bool usable = true;
    std::vector<std::size_t> cols;
    for (auto [col, c] : mult) {
      if (orb.size() * c != t_orbit_size[col]) {
        usable = false;
        break;
      }
      cols.push_back(col);
    }
    if (!usable) continue;
    rows.push_back(std::move(cols));
    row_blocks.push_back(orb);
  }

  ExactCover dlx(t_orbit_size.size(), rows);
  auto sol = dlx.solve();
  if (!sol) throw not_supported_error("exact cover found no S(" + std::to_string(t) + "," + std::to_string(k) + "," + std::to_string(v) + ")");
  std::vector<std::uint64_t> masks;
  for (auto r : *sol) masks.insert(masks.end(), row_blocks[r].begin(), row_blocks[r].end());
  std::sort(masks.begin(), masks.end());
  SetSystem out(v);
  for (auto mk : masks) out.add(Block::from_mask(v, mk));
  return canonical(out);
}

}  // namespace detail

/// S(t, k, v) for the five parameter sets (1,2,4), (2,3,7), (3,4,8),
/// (4,5,11), (5,6,12). Every result is checked with is_t_design.
inline SetSystem steiner_system(unsigned t, unsigned k, unsigned v) {
  SetSystem s;
  if (t == 1 && k == 2 && v == 4) {
    s = SetSystem::from_points(4, {{1, 2}, {3, 4}});
  } else if (t == 2 && k == 3 && v == 7) {
    // Developments of the difference set {1, 2, 4} mod 7.
    s = SetSystem(7);
    for (std::size_t i = 0; i < 7; ++i) {
      std::vector<std::size_t> pts{(i + 1) % 7 + 1, (i + 2) % 7 + 1, (i + 4) % 7 + 1};
      std::sort(pts.begin(), pts.end());
      s.add(Block::from_points(7, pts));
    }
    s = canonical(s);
  } else if (t == 3 && k == 4 && v == 8) {
    s = detail::steiner_by_exact_cover(3, 4, 8, 1);
  } else if (t == 4 && k == 5 && v == 11) {
    s = detail::steiner_by_exact_cover(4, 5, 11, 11);
  } else if (t == 5 && k == 6 && v == 12) {
    s = detail::steiner_by_exact_cover(5, 6, 12, 11);
  } else {
    throw not_supported_error("S(" + std::to_string(t) + "," + std::to_string(k) + "," + std::to_string(v) +
                              ") is not among the supported Steiner systems");
  }
  if (!is_t_design(s, DesignParams{t, v, k, 1})) {
    throw std::logic_error("generated Steiner system failed verification");
  }
  return s;
}

}  // namespace ftsnd
