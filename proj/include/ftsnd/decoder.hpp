#pragma once

// Simple nanowire decoder semantics.
//
// Nanowire i (0-based index into the block list) is controlled by the
// mesowires in block A_i. Under an activation pattern V it is addressed iff
// A_i and V are disjoint. A fabrication fault deletes one mesowire from one
// block.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ftsnd/combinatorics.hpp"
#include "ftsnd/errors.hpp"
#include "ftsnd/set_system.hpp"

namespace ftsnd {

class Decoder {
 public:
  Decoder() = default;
  explicit Decoder(SetSystem system) : system_(std::move(system)) {}

  const SetSystem& system() const { return system_; }
  std::size_t mesowires() const { return system_.order(); }
  std::size_t nanowires() const { return system_.size(); }

  friend bool operator==(const Decoder&, const Decoder&) = default;

 private:
  SetSystem system_;
};

/// Voltage-carrying mesowires.
struct ActivationPattern {
  Block active;

  static ActivationPattern of(std::size_t m, std::initializer_list<std::size_t> points) {
    return {Block::from_points(m, points)};
  }
};

/// Loss of control of `nanowire` (0-based) by `mesowire` (1-based point).
struct FaultEvent {
  std::size_t nanowire = 0;
  std::size_t mesowire = 0;

  friend auto operator<=>(const FaultEvent&, const FaultEvent&) = default;
};

inline std::vector<std::size_t> addressed(const Decoder& d, const ActivationPattern& v) {
  if (v.active.ground_size() != d.mesowires()) throw usage_error("activation pattern over the wrong ground set");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.nanowires(); ++i) {
    if (!d.system()[i].intersects(v.active)) out.push_back(i);
  }
  return out;
}

/// The pattern [m] \ A_i: the only candidate that can isolate nanowire i.
inline ActivationPattern addressing_witness(const Decoder& d, std::size_t i) {
  if (i >= d.nanowires()) throw usage_error("nanowire index " + std::to_string(i) + " out of range");
  return {d.system()[i].complement()};
}

inline bool addresses_exactly(const Decoder& d, const ActivationPattern& v, std::size_t i) {
  const auto hit = addressed(d, v);
  return hit.size() == 1 && hit.front() == i;
}

inline bool independently_addressable(const Decoder& d, std::size_t i) {
  return addresses_exactly(d, addressing_witness(d, i), i);
}

/// Tries all 2^m activation patterns (test oracle; m <= 24).
inline bool independently_addressable_exhaustive(const Decoder& d, std::size_t i) {
  if (i >= d.nanowires()) throw usage_error("nanowire index " + std::to_string(i) + " out of range");
  const std::size_t m = d.mesowires();
  if (m > 24) throw usage_error("exhaustive activation search is limited to m <= 24");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (addresses_exactly(d, {Block::from_mask(m, mask)}, i)) return true;
  }
  return false;
}

inline bool all_independently_addressable(const Decoder& d) { return is_antichain(d.system()); }

namespace detail {

inline bool witness_isolates_all(const std::vector<Block>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block v = blocks[i].complement();
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (j != i && !blocks[j].intersects(v)) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Direct per-nanowire check with the witness pattern, independent of the antichain test.
inline bool all_independently_addressable_by_witness(const Decoder& d) {
  return detail::witness_isolates_all(d.system().blocks());
}

inline Decoder apply_faults(const Decoder& d, const std::vector<FaultEvent>& faults) {
  std::vector<Block> blocks = d.system().blocks();
  for (const auto& f : faults) {
    if (f.nanowire >= blocks.size() || !blocks[f.nanowire].contains(f.mesowire)) {
      throw usage_error("fault (nanowire " + std::to_string(f.nanowire + 1) + ", mesowire " + std::to_string(f.mesowire) +
                        ") is not applicable");
    }
    blocks[f.nanowire].erase(f.mesowire);
  }
  return Decoder(SetSystem(d.mesowires(), std::move(blocks)));
}

/// |A_i ∩ V|: how many active mesowires raise the resistance of nanowire i.
inline std::size_t resistance_units(const Decoder& d, const ActivationPattern& v, std::size_t i) {
  if (i >= d.nanowires()) throw usage_error("nanowire index out of range");
  return d.system()[i].intersection_size(v.active);
}

struct BruteforceOptions {
  std::uint64_t max_fault_sets = 10'000'000;
};

/// Applies every set of at most e distinct (nanowire, mesowire) faults and
/// checks that every nanowire stays independently addressable. Exponential;
/// refuses instances with more than options.max_fault_sets fault sets.
inline bool tolerates_errors_bruteforce(const Decoder& d, std::size_t e, const BruteforceOptions& options = {}) {
  std::vector<FaultEvent> sites;
  for (std::size_t i = 0; i < d.nanowires(); ++i) {
    for (auto p : d.system()[i].points()) sites.push_back({i, p});
  }
  const std::size_t depth = std::min(e, sites.size());
  std::uint64_t total = 0;
  for (std::size_t j = 0; j <= depth; ++j) {
    const auto c = binomial(static_cast<long long>(sites.size()), static_cast<long long>(j));
    if (c > options.max_fault_sets || total > options.max_fault_sets - c) {
      throw usage_error("fault-set enumeration exceeds the cap of " + std::to_string(options.max_fault_sets));
    }
    total += c;
  }

  std::vector<Block> blocks = d.system().blocks();
  auto all_ok = [&] { return detail::witness_isolates_all(blocks); };

  // Depth-first over combinations of fault sites in index order.
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
    if (!ok) return;
    if (!all_ok()) {
      ok = false;
      return;
    }
    if (left == 0) return;
    for (std::size_t s = start; s < sites.size() && ok; ++s) {
      blocks[sites[s].nanowire].erase(sites[s].mesowire);
      self(self, s + 1, left - 1);
      blocks[sites[s].nanowire].insert(sites[s].mesowire);
    }
  };
  rec(rec, 0, depth);
  return ok;
}

/// |A \ B| >= e + 1 for every ordered pair of distinct blocks; systems with
/// fewer than two blocks qualify for every e.
inline bool is_ftsnd(const Decoder& d, std::size_t e) {
  return d.nanowires() < 2 || min_one_sided_difference(d.system()) >= e + 1;
}

}  // namespace ftsnd
