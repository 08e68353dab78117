// Command-line front end for the ftsnd library.
//
// Exit codes: 0 success, 1 verification negative, 2 usage or input error,
// 3 a bracket where an exact value was demanded.

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ftsnd/ftsnd.hpp"

#ifndef FTSND_DATA_DIR
#define FTSND_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace ftsnd;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_bracket = 3;

struct Globals {
  std::string format = "text";
  bool quiet = false;
};

void emit(const std::string& text, const std::optional<std::string>& out_path) {
  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw usage_error("cannot write '" + *out_path + "'");
    out << text;
  } else {
    std::cout << text;
  }
}

std::vector<std::size_t> parse_points(const std::string& text) {
  std::vector<std::size_t> pts;
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  for (std::string tok; in >> tok;) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok[0] == '-') throw usage_error("bad point '" + tok + "'");
    pts.push_back(v);
  }
  return pts;
}

FaultEvent parse_fault(const std::string& text, const Decoder& d) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw usage_error("fault must be NANOWIRE:MESOWIRE, got '" + text + "'");
  const auto lhs = parse_points(text.substr(0, colon));
  const auto rhs = parse_points(text.substr(colon + 1));
  if (lhs.size() != 1 || rhs.size() != 1 || lhs[0] < 1 || lhs[0] > d.nanowires()) {
    throw usage_error("fault must be NANOWIRE:MESOWIRE with NANOWIRE in 1.." + std::to_string(d.nanowires()) + ", got '" + text + "'");
  }
  return {lhs[0] - 1, rhs[0]};
}

std::string pair_text(const BlockPair& p) {
  return "|A" + std::to_string(p.first + 1) + " \\ A" + std::to_string(p.second + 1) + "| = " + std::to_string(p.difference);
}

std::optional<bounds::CodeTable> load_code_table(const std::string& path) {
  if (path.empty()) return std::nullopt;
  try {
    return bounds::CodeTable::parse(io::read_file(path));
  } catch (const parse_error& e) {
    throw parse_error(e.line(), e.detail(), path);
  }
}

int cmd_verify(const std::string& in, std::size_t e, bool oracle) {
  const Decoder d(io::load_set_system(in));
  const auto& s = d.system();
  bool ok = is_ftsnd(d, e);
  std::cout << "order m = " << d.mesowires() << ", size n = " << d.nanowires() << ", e = " << e << "\n";
  if (oracle) {
    const bool brute = tolerates_errors_bruteforce(d, e);
    std::cout << "oracle (all fault sets of size <= " << e << "): " << (brute ? "tolerated" : "not tolerated") << "\n";
    if (brute != ok) throw std::logic_error("pairwise check and fault oracle disagree");
  }
  std::cout << "FTSND: " << (ok ? "yes" : "no") << "\n";
  if (s.size() < 2) {
    std::cout << "min one-sided difference: none (fewer than two blocks)\n";
  } else {
    std::cout << "min one-sided difference: " << min_one_sided_difference(s) << "\n";
  }
  if (!ok) std::cout << "violating pair: " << pair_text(*find_violating_pair(s, e + 1)) << " < " << e + 1 << "\n";
  return ok ? exit_ok : exit_negative;
}

int cmd_bounds(std::size_t m, std::size_t e, const std::string& table_path, const Globals& g) {
  const auto table = load_code_table(table_path);
  bounds::AggregateOptions opt;
  if (table) opt.code_table = &*table;
  const auto b = bounds::aggregate(m, e, opt);
  std::vector<std::array<std::string, 4>> rows;
  for (const auto& r : b.contributions) {
    if (r.applicable) {
      rows.push_back({r.name, bounds::to_string(r.kind), std::to_string(r.value), r.note});
    } else if (!g.quiet) {
      rows.push_back({r.name, bounds::to_string(r.kind), "n/a", r.note});
    }
  }
  if (!g.quiet) {
    const auto [lo, hi] = bounds::katona_envelope(m, e);
    for (const auto& r : {lo, hi}) {
      std::ostringstream v;
      v << std::setprecision(6) << r.real_value;
      rows.push_back({r.name, "diagnostic", v.str(), r.note});
    }
  }
  if (g.format == "tsv") {
    std::cout << "bound\tkind\tvalue\tnote\n";
    for (const auto& r : rows) std::cout << r[0] << '\t' << r[1] << '\t' << r[2] << '\t' << r[3] << "\n";
  } else {
    std::array<std::size_t, 3> width{};
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < 3; ++c) width[c] = std::max(width[c], r[c].size());
    }
    for (const auto& r : rows) {
      std::cout << std::left << std::setw(static_cast<int>(width[0])) << r[0] << "  " << std::setw(static_cast<int>(width[1])) << r[1]
                << "  " << std::right << std::setw(static_cast<int>(width[2])) << r[2] << "  " << r[3] << "\n";
    }
  }
  std::cout << "N(" << m << "," << e << ") ";
  if (b.exact) {
    std::cout << "= " << *b.exact << " (" << b.lower_source << ")\n";
  } else {
    std::cout << "in [" << b.lower << ", " << b.upper << "] (lower " << b.lower_source << ", upper " << b.upper_source << ")\n";
  }
  return exit_ok;
}

struct ConstructArgs {
  std::size_t m = 0, e = 0, n = 0, k = 0, d = 0, w = 0;
  std::string order = "lex";
  bool verify = false;
  bool json = false;
  std::optional<std::string> out;
};

int finish_construct(const SetSystem& s, const ConstructArgs& a, bool verified_ok, const std::string& what, const Globals& g) {
  if (a.verify) {
    if (!verified_ok) {
      std::cerr << "verification failed: " << what << "\n";
      return exit_negative;
    }
    if (!g.quiet) std::cerr << "verified: " << what << "\n";
  }
  const SetSystem c = canonical(s);
  emit(a.json ? io::format_set_system_json(c) : io::format_set_system(c), a.out);
  return exit_ok;
}

int cmd_search(std::size_t m, std::size_t e, std::optional<double> time_limit, std::optional<std::uint64_t> node_limit,
               bool unbounded, bool canonical_mode, const std::optional<std::string>& witness_out, const std::string& table_path,
               const Globals& g) {
  SearchBudget budget;
  budget.time_limit_seconds = time_limit;
  budget.node_limit = node_limit;
  budget.unbounded = unbounded;
  if (!unbounded && !time_limit && !node_limit) {
    budget.time_limit_seconds = report::env_cell_budget(std::getenv("FTSND_CELL_BUDGET")).value_or(600.0);
  }
  const auto table = load_code_table(table_path);
  SearchOptions opt;
  opt.canonical_first_block = canonical_mode;
  if (table) opt.code_table = &*table;
  const auto r = max_ftsnd_exact(m, e, budget, opt);
  if (witness_out) io::save_set_system(*witness_out, r.witness);
  if (r.status == SearchStatus::exact) {
    std::cout << "N(" << m << "," << e << ") = " << r.lower << " (exact)\n";
  } else {
    std::cout << "N(" << m << "," << e << ") in [" << r.lower << ", " << r.upper << "] (bracket)\n";
  }
  if (!g.quiet) {
    std::cout << "lower: " << r.lower_source << "; upper: " << r.upper_source << "\n";
    std::cout << "nodes: " << r.nodes << "; elapsed: " << r.elapsed_seconds << " s\n";
    if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  }
  return r.status == SearchStatus::exact ? exit_ok : exit_bracket;
}

int cmd_certify(const std::string& in, std::size_t e) {
  const auto s = io::load_set_system(in);
  const auto c = certify(s, e);
  if (c.valid) {
    std::cout << c.describe() << "\n";
    return exit_ok;
  }
  std::cout << "rejected: " << c.describe() << "\n";
  return exit_negative;
}

struct TableArgs {
  std::size_t m_min = 1, m_max = 16, e_min = 0, e_max = 15;
  std::optional<double> cell_budget;
  std::string andw_table;
  std::vector<std::string> certificates;
  std::optional<std::string> compare;
  bool no_shipped = false;
  bool oblivious = false;
};

int cmd_table(const TableArgs& a, const Globals& g) {
  report::TableSpec spec;
  spec.m_min = a.m_min;
  spec.m_max = a.m_max;
  spec.e_min = a.e_min;
  spec.e_max = a.e_max;
  spec.format = report::parse_format(g.format);
  spec.canonical_search = !a.oblivious;
  spec.cell_budget_seconds = a.cell_budget ? *a.cell_budget : report::env_cell_budget(std::getenv("FTSND_CELL_BUDGET")).value_or(600.0);

  std::string andw = a.andw_table;
  std::vector<std::string> certs = a.certificates;
  if (!a.no_shipped) {
    const fs::path data(FTSND_DATA_DIR);
    if (andw.empty() && fs::exists(data / "codes" / "andw.txt")) andw = (data / "codes" / "andw.txt").string();
    if (certs.empty() && fs::is_directory(data / "certificates")) certs.push_back((data / "certificates").string());
  }
  const auto table = load_code_table(andw);
  if (table) spec.code_table = &*table;
  spec.certificates = report::load_certificates(certs);

  auto progress = [&](const report::Cell& c) {
    if (g.quiet || !c.searched) return;
    std::cerr << "N(" << c.m << "," << c.e << "): " << c.text() << " after " << c.seconds << " s\n";
  };
  const auto t = report::compute_table(spec, progress);
  std::cout << report::render_table(t, spec.format);
  if (a.compare) {
    const auto ref = report::parse_reference_table(io::read_file(*a.compare));
    const auto cmp = report::compare_table(t, ref);
    std::cout << "\n" << report::render_comparison(cmp);
    if (cmp.conflicts > 0) return exit_negative;
  }
  return exit_ok;
}

int cmd_simulate(const std::string& in, const std::string& activate, std::optional<std::size_t> witness,
                 const std::vector<std::string>& fault_args) {
  const Decoder d(io::load_set_system(in));
  ActivationPattern v{Block(d.mesowires())};
  if (witness) {
    if (*witness < 1 || *witness > d.nanowires()) throw usage_error("--witness must lie in 1.." + std::to_string(d.nanowires()));
    v = addressing_witness(d, *witness - 1);
  } else {
    v = {Block::from_points(d.mesowires(), parse_points(activate))};
  }
  std::vector<FaultEvent> faults;
  for (const auto& f : fault_args) faults.push_back(parse_fault(f, d));
  const auto r = report::run_simulate(d, v, faults);
  std::cout << "activation: {";
  const auto pts = v.active.points();
  for (std::size_t i = 0; i < pts.size(); ++i) std::cout << (i ? "," : "") << pts[i];
  std::cout << "}\n" << r.render();
  return exit_ok;
}

int cmd_infobits(std::size_t e, const std::string& reference_path, const std::vector<std::string>& files, const Globals& g) {
  std::string ref_path = reference_path;
  if (ref_path.empty()) {
    const fs::path p = fs::path(FTSND_DATA_DIR) / "reference" / "infobits.txt";
    if (fs::exists(p)) ref_path = p.string();
  }
  std::vector<report::InfobitsReference> ref;
  if (!ref_path.empty()) {
    try {
      ref = report::parse_infobits_reference(io::read_file(ref_path));
    } catch (const parse_error& ex) {
      throw parse_error(ex.line(), ex.detail(), ref_path);
    }
  }
  std::vector<report::InfobitsInput> inputs;
  for (const auto& f : files) inputs.push_back({f, io::load_set_system(f)});
  const auto rows = report::run_infobits_report(e, inputs, ref);
  std::cout << report::render_infobits(rows, report::parse_format(g.format));
  for (const auto& r : rows) {
    if (!r.valid) return exit_negative;
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fault-tolerant simple nanowire decoders: verification, bounds, constructions and exact search"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
  app.add_flag("--quiet,-q", g.quiet, "Suppress informational output");

  // verify
  std::string verify_in;
  std::size_t verify_e = 0;
  bool verify_oracle = false;
  auto* verify = app.add_subcommand("verify", "Check that a set-system file is an e-fault-tolerant decoder");
  verify->add_option("--in", verify_in, "Set-system file")->required();
  verify->add_option("--e", verify_e, "Number of tolerated faults")->required();
  verify->add_flag("--oracle", verify_oracle, "Also enumerate every fault set (exponential)");

  // bounds
  std::size_t bounds_m = 0, bounds_e = 0;
  std::string bounds_table;
  auto* bnd = app.add_subcommand("bounds", "Print every bound on N(m,e) and the resulting bracket");
  bnd->add_option("--m", bounds_m, "Mesowires")->required()->check(CLI::Range(1, 64));
  bnd->add_option("--e", bounds_e, "Faults")->required();
  bnd->add_option("--andw-table", bounds_table, "File of 'n d A(n,d)' lines")->check(CLI::ExistingFile);

  // construct
  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Emit an explicit construction");
  construct->require_subcommand(1);
  construct->fallthrough();
  construct->add_flag("--verify", ca.verify, "Re-run the matching verifier before writing");
  construct->add_flag("--json", ca.json, "Write JSON instead of the text format");
  construct->add_option("--out", ca.out, "Output file (default stdout)");
  auto* c_middle = construct->add_subcommand("middle-layer", "All floor(m/2)-subsets of [m]");
  c_middle->add_option("--m", ca.m)->required()->check(CLI::Range(1, 24));
  auto* c_greedy = construct->add_subcommand("greedy", "Greedy constant-weight code with distance >= 2d");
  c_greedy->add_option("--n", ca.n)->required()->check(CLI::Range(1, 24));
  c_greedy->add_option("--d", ca.d)->required()->check(CLI::Range(1, 64));
  c_greedy->add_option("--w", ca.w)->required();
  c_greedy->add_option("--order", ca.order, "lex, colex or seed=K");
  auto* c_hadamard = construct->add_subcommand("hadamard", "Hadamard design decoder of order 4e+2");
  c_hadamard->add_option("--e", ca.e)->required();
  auto* c_complete = construct->add_subcommand("complete-uniform", "Dual of all k-subsets of [n]");
  c_complete->add_option("--n", ca.n)->required();
  c_complete->add_option("--k", ca.k)->required();
  auto* c_steiner = construct->add_subcommand("steiner", "Blocks of S(floor(m/2)-1, floor(m/2), m)");
  c_steiner->add_option("--m", ca.m)->required();
  auto* c_disjoint = construct->add_subcommand("disjoint-pair", "Two disjoint (e+1)-sets");
  c_disjoint->add_option("--m", ca.m)->required()->check(CLI::Range(1, 64));
  c_disjoint->add_option("--e", ca.e)->required();

  // search
  std::size_t search_m = 0, search_e = 0;
  std::optional<double> search_time;
  std::optional<std::uint64_t> search_nodes;
  bool search_unbounded = false, search_canonical = false;
  std::optional<std::string> search_witness;
  std::string search_table;
  auto* search = app.add_subcommand("search", "Exact N(m,e) by maximum-clique search");
  search->add_option("--m", search_m)->required()->check(CLI::Range(1, 64));
  search->add_option("--e", search_e)->required();
  search->add_option("--time-limit", search_time, "Seconds")->check(CLI::PositiveNumber);
  search->add_option("--node-limit", search_nodes, "Branch-and-bound nodes")->check(CLI::PositiveNumber);
  search->add_flag("--unbounded", search_unbounded, "Run without any limit");
  search->add_flag("--canonical-first-block", search_canonical, "Fix the first blocks to orbit representatives");
  search->add_option("--witness-out", search_witness, "Write the best family found");
  search->add_option("--andw-table", search_table, "File of 'n d A(n,d)' lines")->check(CLI::ExistingFile);

  // certify
  std::string certify_in;
  std::size_t certify_e = 0;
  auto* cert = app.add_subcommand("certify", "Certify a witness file as a lower bound on N(m,e)");
  cert->add_option("--in", certify_in)->required();
  cert->add_option("--e", certify_e)->required();

  // table
  TableArgs ta;
  auto* table = app.add_subcommand("table", "Tabulate N(m,e)");
  table->add_option("--m-min", ta.m_min)->check(CLI::Range(1, 16));
  table->add_option("--m-max", ta.m_max)->check(CLI::Range(1, 16));
  table->add_option("--e-min", ta.e_min);
  table->add_option("--e-max", ta.e_max);
  table->add_option("--cell-budget", ta.cell_budget, "Seconds of search per open cell")->check(CLI::PositiveNumber);
  table->add_option("--andw-table", ta.andw_table, "File of 'n d A(n,d)' lines")->check(CLI::ExistingFile);
  table->add_option("--certificates", ta.certificates, "Witness files or directories");
  table->add_option("--compare", ta.compare, "Reference table to compare against")->check(CLI::ExistingFile);
  table->add_flag("--no-shipped-data", ta.no_shipped, "Ignore the bundled A(n,d) table and certificates");
  table->add_flag("--oblivious", ta.oblivious, "Search without the orbit reduction");

  // simulate
  std::string sim_in, sim_activate;
  std::optional<std::size_t> sim_witness;
  std::vector<std::string> sim_faults;
  auto* sim = app.add_subcommand("simulate", "Show addressed nanowires before and after faults");
  sim->add_option("--in", sim_in)->required();
  auto* act = sim->add_option("--activate", sim_activate, "Active mesowires, e.g. \"1,4,5\"");
  sim->add_option("--witness", sim_witness, "Activate the complement of block I (1-based)")->excludes(act);
  sim->add_option("--fault", sim_faults, "NANOWIRE:MESOWIRE (1-based), repeatable");

  // infobits
  std::size_t ib_e = 0;
  std::string ib_reference;
  std::vector<std::string> ib_files;
  auto* ib = app.add_subcommand("infobits", "Information bits of certified codes against reference data");
  ib->add_option("--e", ib_e)->required();
  ib->add_option("--reference", ib_reference, "File of 'e m k' lines")->check(CLI::ExistingFile);
  ib->add_option("files", ib_files, "Set-system files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*verify) return cmd_verify(verify_in, verify_e, verify_oracle);
    if (*bnd) return cmd_bounds(bounds_m, bounds_e, bounds_table, g);
    if (*construct) {
      if (*c_middle) {
        const auto s = middle_layer(ca.m);
        return finish_construct(s, ca, is_antichain(s), "antichain", g);
      }
      if (*c_greedy) {
        const auto code = greedy_constant_weight(ca.n, ca.d, ca.w, GreedyOrder::parse(ca.order));
        bool ok = true;
        for (std::size_t i = 0; i < code.size(); ++i) {
          for (std::size_t j = i + 1; j < code.size(); ++j) ok = ok && hamming_distance(code[i], code[j]) >= 2 * ca.d;
        }
        const auto guarantee = bounds::levenshtein_lower(ca.n, ca.d, ca.w).ceil();
        ok = ok && code.size() >= guarantee;
        SetSystem s = code.empty() ? SetSystem(ca.n) : system_from_code(code);
        return finish_construct(s, ca, ok, "pairwise distance >= " + std::to_string(2 * ca.d) + ", size " + std::to_string(code.size()), g);
      }
      if (*c_hadamard) {
        const auto d = hadamard_ftsnd(ca.e);
        return finish_construct(d.system(), ca, is_ftsnd(d, ca.e), "e = " + std::to_string(ca.e), g);
      }
      if (*c_complete) {
        const auto d = complete_uniform_dual(ca.n, ca.k);
        const auto e = complete_uniform_tolerance(ca.n, ca.k);
        return finish_construct(d.system(), ca, is_ftsnd(d, e), "e = " + std::to_string(e), g);
      }
      if (*c_steiner) {
        const auto d = steiner_ftsnd(ca.m);
        const std::size_t k = ca.m / 2;
        const bool design = is_t_design(d.system(), DesignParams{k - 1, ca.m, k, 1});
        return finish_construct(d.system(), ca, design && is_ftsnd(d, 1), "Steiner system, e = 1", g);
      }
      if (*c_disjoint) {
        const auto d = disjoint_pair(ca.m, ca.e);
        return finish_construct(d.system(), ca, is_ftsnd(d, ca.e), "e = " + std::to_string(ca.e), g);
      }
    }
    if (*search) {
      return cmd_search(search_m, search_e, search_time, search_nodes, search_unbounded, search_canonical, search_witness, search_table, g);
    }
    if (*cert) return cmd_certify(certify_in, certify_e);
    if (*table) return cmd_table(ta, g);
    if (*sim) return cmd_simulate(sim_in, sim_activate, sim_witness, sim_faults);
    if (*ib) return cmd_infobits(ib_e, ib_reference, ib_files, g);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const not_supported_error& e) {
    std::cerr << "not supported: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
