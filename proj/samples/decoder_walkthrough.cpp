// Builds the Fano-plane decoder, addresses each nanowire, then injects faults.
#include <iostream>

#include "ftsnd/ftsnd.hpp"

using namespace ftsnd;

namespace {

void show(const Decoder& d) {
  for (std::size_t i = 0; i < d.nanowires(); ++i) {
    const auto v = addressing_witness(d, i);
    std::cout << "  nanowire " << i + 1 << " block {";
    const auto pts = d.system()[i].points();
    for (std::size_t j = 0; j < pts.size(); ++j) std::cout << (j ? "," : "") << pts[j];
    std::cout << "}  V = [m] \\ A_i addresses";
    for (auto k : addressed(d, v)) std::cout << ' ' << k + 1;
    std::cout << '\n';
  }
}

}  // namespace

int main() {
  const Decoder d(steiner_system(2, 3, 7));
  std::cout << "(7," << d.nanowires() << ") decoder, min |A\\B| = " << min_one_sided_difference(d.system())
            << ", tolerates 1 fault: " << std::boolalpha << is_ftsnd(d, 1) << "\n";
  show(d);

  const auto one = apply_faults(d, {{0, d.system()[0].points().front()}});
  std::cout << "after one fault, all addressable: " << all_independently_addressable(one) << "\n";

  // Two faults on nanowire 1 can shrink its block inside another one, which
  // then loses its isolating pattern.
  for (std::size_t j = 1; j < d.nanowires(); ++j) {
    const auto common = d.system()[0].intersection_size(d.system()[j]);
    if (common != 1) continue;
    std::vector<FaultEvent> faults;
    for (auto p : d.system()[0].points()) {
      if (!d.system()[j].contains(p)) faults.push_back({0, p});
    }
    const auto two = apply_faults(d, faults);
    std::cout << "after faults on nanowire 1 at mesowires " << faults[0].mesowire << "," << faults[1].mesowire
              << ": nanowire " << j + 1 << " addressable = " << independently_addressable(two, j) << "\n";
    break;
  }
}
