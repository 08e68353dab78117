#pragma once

// Batch reports behind the command-line tool: the N(m, e) table, decoder
// simulation, and information-bit comparisons against reference data.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ftsnd/bounds.hpp"
#include "ftsnd/decoder.hpp"
#include "ftsnd/errors.hpp"
#include "ftsnd/io.hpp"
#include "ftsnd/search.hpp"
#include "ftsnd/set_system.hpp"

namespace ftsnd::report {

enum class Format { text, tsv };

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "tsv") return Format::tsv;
  throw usage_error("format must be text or tsv, got '" + std::string(s) + "'");
}

namespace detail {

// Display width of UTF-8 text (one column per code point).
inline std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  const auto w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

inline std::string join(const std::vector<std::size_t>& v, std::size_t offset = 0) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i] + offset);
  }
  return out;
}

// "n d value"-style whitespace-separated numeric rows with '#' comments.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> numeric_rows(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (!tok.empty()) rows.emplace_back(line_no, std::move(tok));
  }
  return rows;
}

inline std::uint64_t to_u64(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty() || tok[0] == '-') throw parse_error(line, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Table of N(m, e)

/// A shipped witness: its blocks certify N(order, e) >= size.
struct CertificateEntry {
  std::string path;
  std::size_t e = 0;
  SetSystem system;
};

/// The tolerance a certificate file declares in a "# e=<E>" comment line
/// before its header, if any.
inline std::optional<std::size_t> declared_e(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("# e=", 0) == 0) return static_cast<std::size_t>(detail::to_u64(line.substr(4), line_no));
    if (!line.empty() && line[0] != '#') break;
  }
  return std::nullopt;
}

/// Loads certificate files; directories contribute their *.txt files.
/// Every file must declare its tolerance. Certificates are sorted by path.
inline std::vector<CertificateEntry> load_certificates(const std::vector<std::string>& paths) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path().string());
      }
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<CertificateEntry> out;
  for (const auto& f : files) {
    std::optional<std::size_t> e;
    try {
      e = declared_e(f);
    } catch (const parse_error& err) {
      throw parse_error(err.line(), err.detail(), f);
    }
    if (!e) throw usage_error("certificate " + f + " lacks a '# e=<int>' header line");
    out.push_back({f, *e, io::load_set_system(f)});
  }
  return out;
}

struct TableSpec {
  std::size_t m_min = 1;
  std::size_t m_max = 16;
  std::size_t e_min = 0;
  std::size_t e_max = 15;
  double cell_budget_seconds = 600.0;
  Format format = Format::text;
  bool canonical_search = true;
  const bounds::CodeTable* code_table = nullptr;
  std::vector<CertificateEntry> certificates;

  void validate() const {
    if (m_min < 1 || m_min > m_max) throw usage_error("table needs 1 <= m_min <= m_max");
    if (m_max > 16) throw usage_error("table is limited to m <= 16");
    if (e_min > e_max) throw usage_error("table needs e_min <= e_max");
    if (!(cell_budget_seconds > 0.0)) throw usage_error("cell budget must be positive");
  }
};

struct Cell {
  std::size_t m = 0;
  std::size_t e = 0;
  std::uint64_t lower = 1;
  std::uint64_t upper = 1;
  std::string lower_source;
  std::string upper_source;
  bool searched = false;
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  bool exact() const { return lower == upper; }

  /// Blank for 1, the value when exact, "lo–hi" otherwise.
  std::string text() const {
    if (exact()) return lower == 1 ? std::string() : std::to_string(lower);
    return std::to_string(lower) + "–" + std::to_string(upper);
  }
};

struct Table {
  TableSpec spec;
  std::vector<Cell> cells;  // row-major over m, then e, only e < m

  const Cell* find(std::size_t m, std::size_t e) const {
    for (const auto& c : cells) {
      if (c.m == m && c.e == e) return &c;
    }
    return nullptr;
  }
};

inline std::optional<double> env_cell_budget(const char* value) {
  if (!value || !*value) return std::nullopt;
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string_view(value).size() || !(v > 0)) {
    throw usage_error(std::string("FTSND_CELL_BUDGET must be a positive number of seconds, got '") + value + "'");
  }
  return v;
}

/// Builds the table: bounds and certificates first, then a budgeted search
/// for every open cell, then closure under N(m-1, e) <= N(m, e) and
/// N(m, e+1) <= N(m, e) inside the table.
inline Table compute_table(const TableSpec& spec, const std::function<void(const Cell&)>& progress = {}) {
  spec.validate();
  for (const auto& c : spec.certificates) {
    const auto cert = certify(c.system, c.e);
    if (!cert.valid) throw usage_error("certificate " + c.path + " rejected: " + cert.describe());
  }
  Table t;
  t.spec = spec;
  for (std::size_t m = spec.m_min; m <= spec.m_max; ++m) {
    for (std::size_t e = spec.e_min; e <= spec.e_max && e < m; ++e) {
      bounds::AggregateOptions opt;
      opt.code_table = spec.code_table;
      for (const auto& c : spec.certificates) {
        if (c.system.order() <= m && c.e >= e) {
          opt.extra_lower.push_back(bounds::BoundReport::integer("certificate:" + c.path, bounds::BoundKind::lower, c.system.size()));
        }
      }
      const auto b = bounds::aggregate(m, e, opt);
      Cell cell{m, e, b.lower, b.upper, b.lower_source, b.upper_source};
      if (!b.exact) {
        SearchOptions so;
        so.canonical_first_block = spec.canonical_search;
        so.code_table = spec.code_table;
        const auto r = max_ftsnd_exact(m, e, SearchBudget::seconds(spec.cell_budget_seconds), so);
        cell.searched = true;
        cell.nodes = r.nodes;
        cell.seconds = r.elapsed_seconds;
        if (r.lower > cell.lower) {
          cell.lower = r.lower;
          cell.lower_source = r.lower_source;
        }
        if (r.upper < cell.upper) {
          cell.upper = r.upper;
          cell.upper_source = r.upper_source;
        }
      }
      if (progress) progress(cell);
      t.cells.push_back(std::move(cell));
    }
  }

  auto at = [&](std::size_t m, std::size_t e) -> Cell* { return const_cast<Cell*>(t.find(m, e)); };
  // Lower bounds flow to larger m and smaller e; upper bounds the other way.
  for (std::size_t m = spec.m_min; m <= spec.m_max; ++m) {
    for (std::size_t e = std::min(spec.e_max, m - 1) + 1; e-- > spec.e_min;) {
      Cell* c = at(m, e);
      if (!c) continue;
      for (Cell* n : {at(m - 1, e), at(m, e + 1)}) {
        if (n && n->lower > c->lower) {
          c->lower = n->lower;
          c->lower_source = "monotone from N(" + std::to_string(n->m) + "," + std::to_string(n->e) + ")";
        }
      }
    }
  }
  for (std::size_t m = spec.m_max + 1; m-- > spec.m_min;) {
    for (std::size_t e = spec.e_min; e <= spec.e_max && e < m; ++e) {
      Cell* c = at(m, e);
      for (Cell* n : {at(m + 1, e), e > 0 ? at(m, e - 1) : nullptr}) {
        if (n && n->upper < c->upper) {
          c->upper = n->upper;
          c->upper_source = "monotone from N(" + std::to_string(n->m) + "," + std::to_string(n->e) + ")";
        }
      }
    }
  }
  for (const auto& c : t.cells) {
    if (c.lower > c.upper) {
      throw std::logic_error("violated bracket at N(" + std::to_string(c.m) + "," + std::to_string(c.e) + ")");
    }
  }
  return t;
}

inline std::string render_table(const Table& t, Format format) {
  const auto& s = t.spec;
  // Columns to the right of the last non-blank cell are dropped.
  std::size_t e_hi = s.e_min;
  for (const auto& c : t.cells) {
    if (!c.text().empty()) e_hi = std::max(e_hi, c.e);
  }
  std::ostringstream out;
  if (format == Format::tsv) {
    out << "m";
    for (std::size_t e = s.e_min; e <= e_hi; ++e) out << "\te=" << e;
    out << "\n";
    for (std::size_t m = s.m_min; m <= s.m_max; ++m) {
      out << m;
      for (std::size_t e = s.e_min; e <= e_hi; ++e) {
        const Cell* c = t.find(m, e);
        out << '\t' << (c ? c->text() : std::string());
      }
      out << "\n";
    }
  } else {
    std::size_t width = 2;
    for (const auto& c : t.cells) width = std::max(width, detail::display_width(c.text()));
    out << detail::pad_left("m\\e", 4);
    for (std::size_t e = s.e_min; e <= e_hi; ++e) out << "  " << detail::pad_left(std::to_string(e), width);
    out << "\n";
    for (std::size_t m = s.m_min; m <= s.m_max; ++m) {
      std::string line = detail::pad_left(std::to_string(m), 4);
      for (std::size_t e = s.e_min; e <= e_hi; ++e) {
        const Cell* c = t.find(m, e);
        line += "  " + detail::pad_left(c ? c->text() : std::string(), width);
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
  }
  out << "\nBlank entries are 1.\n";
  for (const auto& c : t.cells) {
    if (c.exact() && c.lower == 1) continue;
    out << "N(" << c.m << "," << c.e << "): ";
    if (c.exact()) {
      out << c.lower << " [" << c.lower_source;
      if (c.upper_source != c.lower_source) out << "; upper " << c.upper_source;
      out << "]";
    } else {
      out << c.lower << " [" << c.lower_source << "] to " << c.upper << " [" << c.upper_source << "]";
    }
    if (c.searched) out << " search " << c.nodes << " nodes " << std::fixed << std::setprecision(2) << c.seconds << "s" << std::defaultfloat;
    out << "\n";
  }
  return out.str();
}

/// Published cell: exact when lower == upper.
struct ReferenceCell {
  std::size_t m = 0;
  std::size_t e = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
};

/// Rows "m e value" or "m e lower upper"; '#' starts a comment.
inline std::vector<ReferenceCell> parse_reference_table(std::string_view text) {
  std::vector<ReferenceCell> out;
  for (const auto& [line, tok] : detail::numeric_rows(text)) {
    if (tok.size() != 3 && tok.size() != 4) throw parse_error(line, "expected 'm e value' or 'm e lower upper'");
    ReferenceCell c;
    c.m = detail::to_u64(tok[0], line);
    c.e = detail::to_u64(tok[1], line);
    c.lower = detail::to_u64(tok[2], line);
    c.upper = tok.size() == 4 ? detail::to_u64(tok[3], line) : c.lower;
    if (c.lower > c.upper) throw parse_error(line, "lower exceeds upper");
    out.push_back(c);
  }
  return out;
}

struct Comparison {
  std::size_t agree = 0;       // identical bracket or value
  std::size_t tighter = 0;     // ours strictly inside the reference
  std::size_t looser = 0;      // reference strictly inside ours
  std::size_t overlapping = 0; // each tighter on one side
  std::size_t conflicts = 0;   // disjoint brackets
  std::vector<std::string> lines;
};

inline Comparison compare_table(const Table& t, const std::vector<ReferenceCell>& ref) {
  Comparison cmp;
  for (const auto& r : ref) {
    const Cell* c = t.find(r.m, r.e);
    if (!c) continue;
    std::string verdict;
    if (c->lower == r.lower && c->upper == r.upper) {
      ++cmp.agree;
      continue;
    }
    if (c->upper < r.lower || c->lower > r.upper) {
      ++cmp.conflicts;
      verdict = "CONFLICT";
    } else if (c->lower >= r.lower && c->upper <= r.upper) {
      ++cmp.tighter;
      verdict = "tighter";
    } else if (c->lower <= r.lower && c->upper >= r.upper) {
      ++cmp.looser;
      verdict = "looser";
    } else {
      ++cmp.overlapping;
      verdict = c->upper < r.upper ? "overlapping (upper tighter)" : "overlapping (lower tighter)";
    }
    auto span = [](std::uint64_t lo, std::uint64_t hi) {
      return lo == hi ? std::to_string(lo) : std::to_string(lo) + "–" + std::to_string(hi);
    };
    cmp.lines.push_back("N(" + std::to_string(r.m) + "," + std::to_string(r.e) + "): ours " + span(c->lower, c->upper) +
                        ", reference " + span(r.lower, r.upper) + " " + verdict);
  }
  return cmp;
}

inline std::string render_comparison(const Comparison& c) {
  std::ostringstream out;
  out << "comparison: " << c.agree << " agree, " << c.tighter << " tighter, " << c.looser << " looser, " << c.overlapping
      << " overlapping, " << c.conflicts
      << " conflicts\n";
  for (const auto& l : c.lines) out << "  " << l << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Simulation

struct SimulationReport {
  std::size_t nanowires = 0;
  std::vector<std::size_t> addressed_before;
  std::vector<std::size_t> addressed_after;
  std::vector<bool> addressable_before;
  std::vector<bool> addressable_after;
  std::vector<FaultEvent> faults;

  bool all_addressable_after() const {
    return std::all_of(addressable_after.begin(), addressable_after.end(), [](bool b) { return b; });
  }

  std::string render() const {
    std::ostringstream out;
    auto status = [](const std::vector<bool>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(i + 1) + (v[i] ? ":yes" : ":no");
      }
      return s;
    };
    out << "faults: ";
    if (faults.empty()) out << "none";
    for (std::size_t i = 0; i < faults.size(); ++i) {
      out << (i ? ", " : "") << "nanowire " << faults[i].nanowire + 1 << " loses mesowire " << faults[i].mesowire;
    }
    out << "\n";
    out << "addressed before faults: " << detail::join(addressed_before, 1) << "\n";
    out << "addressed after faults: " << detail::join(addressed_after, 1) << "\n";
    out << "independently addressable before: " << status(addressable_before) << "\n";
    out << "independently addressable after: " << status(addressable_after) << "\n";
    return out.str();
  }
};

inline SimulationReport run_simulate(const Decoder& d, const ActivationPattern& v, const std::vector<FaultEvent>& faults) {
  SimulationReport r;
  r.nanowires = d.nanowires();
  r.faults = faults;
  const Decoder after = apply_faults(d, faults);
  r.addressed_before = addressed(d, v);
  r.addressed_after = addressed(after, v);
  for (std::size_t i = 0; i < d.nanowires(); ++i) {
    r.addressable_before.push_back(independently_addressable(d, i));
    r.addressable_after.push_back(independently_addressable(after, i));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Information bits

/// Published information-bit count k for an e-EC/AUED code of length m.
struct InfobitsReference {
  std::size_t e = 0;
  std::size_t m = 0;
  unsigned k = 0;
};

/// Rows "e m k"; '#' starts a comment.
inline std::vector<InfobitsReference> parse_infobits_reference(std::string_view text) {
  std::vector<InfobitsReference> out;
  for (const auto& [line, tok] : detail::numeric_rows(text)) {
    if (tok.size() != 3) throw parse_error(line, "expected 'e m k'");
    out.push_back({static_cast<std::size_t>(detail::to_u64(tok[0], line)), static_cast<std::size_t>(detail::to_u64(tok[1], line)),
                   static_cast<unsigned>(detail::to_u64(tok[2], line))});
  }
  return out;
}

struct InfobitsInput {
  std::string label;
  SetSystem system;
};

struct InfobitsRow {
  std::string label;
  std::size_t e = 0;
  std::size_t m = 0;
  std::size_t size = 0;
  bool valid = false;
  unsigned k = 0;
  std::optional<unsigned> reference_k;
  std::string detail;
};

inline std::vector<InfobitsRow> run_infobits_report(std::size_t e, const std::vector<InfobitsInput>& inputs,
                                                    const std::vector<InfobitsReference>& reference) {
  std::vector<InfobitsRow> rows;
  for (const auto& in : inputs) {
    InfobitsRow r;
    r.label = in.label;
    r.e = e;
    r.m = in.system.order();
    r.size = in.system.size();
    const auto cert = certify(in.system, e);
    r.valid = cert.valid && r.size >= 1;
    if (r.valid) {
      r.k = bounds::info_bits(r.size);
      r.detail = cert.describe();
    } else {
      r.detail = r.size == 0 ? "empty system" : cert.describe();
    }
    for (const auto& ref : reference) {
      if (ref.e == e && ref.m == r.m) r.reference_k = ref.k;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::string render_infobits(const std::vector<InfobitsRow>& rows, Format format) {
  std::ostringstream out;
  const char* sep = format == Format::tsv ? "\t" : "  ";
  out << "e" << sep << "m" << sep << "size" << sep << "k" << sep << "reference_k" << sep << "status" << sep << "file\n";
  for (const auto& r : rows) {
    out << r.e << sep << r.m << sep << r.size << sep;
    if (r.valid) {
      out << r.k;
    } else {
      out << "-";
    }
    out << sep << (r.reference_k ? std::to_string(*r.reference_k) : std::string("-")) << sep;
    if (!r.valid) {
      out << "invalid (" << r.detail << ")";
    } else if (!r.reference_k) {
      out << "no reference";
    } else if (r.k == *r.reference_k) {
      out << "matches";
    } else {
      out << (r.k > *r.reference_k ? "exceeds" : "below");
    }
    out << sep << r.label << "\n";
  }
  return out.str();
}

}  // namespace ftsnd::report
