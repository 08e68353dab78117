// N(m,e) for m <= 8 by exact search, printed as a small table.
#include <iostream>

#include "ftsnd/ftsnd.hpp"

using namespace ftsnd;

int main() {
  report::TableSpec spec;
  spec.m_max = 8;
  spec.e_max = 7;
  spec.cell_budget_seconds = 30;
  const auto table = report::compute_table(spec);
  std::cout << report::render_table(table, spec.format);
}
