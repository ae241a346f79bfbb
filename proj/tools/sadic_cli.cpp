// sadic: command line front end for constant-length S-adic analysis.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sadic/column.hpp"
#include "sadic/errors.hpp"
#include "sadic/height.hpp"
#include "sadic/injectivize.hpp"
#include "sadic/io.hpp"
#include "sadic/language.hpp"
#include "sadic/oracle.hpp"
#include "sadic/report.hpp"
#include "sadic/spectrum.hpp"

using namespace sadic;
using nlohmann::json;

namespace {

struct Common {
  std::string file;
  std::string sequence;
  std::size_t depth = 0;
  bool json = false;
  bool raw = false;
  std::string out;
};

void add_common(CLI::App* app, Common& c, bool with_json = true) {
  app->add_option("file", c.file, "sequence file")->required()->check(CLI::ExistingFile);
  app->add_option("--sequence", c.sequence, "sequence name (default: first in file)");
  app->add_option("--depth", c.depth, "limit word prefix length (default: max(1e5, 64 top supertiles))");
  if (with_json) app->add_flag("--json", c.json, "machine-readable output");
}

DirectiveSequence load(const Common& c, const std::string& file) {
  return load_sequence_file(file).sequence(c.sequence);
}

std::size_t depth_for(const Common& c, const DirectiveSequence& ds) {
  return c.depth ? c.depth : default_depth(ds);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot write '" + c.out + "'");
  f << text;
}

std::string table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
  return out.str();
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NotTorsionFree:
    case ErrorCode::NotPrimitive:
    case ErrorCode::CertificateNotFound:
      return 2;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::NotClosed:
    case ErrorCode::NoReturn:
      return 3;
    default:
      return 1;
  }
}

int run_height(const Common& c) {
  DirectiveSequence ds = load(c, c.file);
  const std::size_t depth = depth_for(c, ds);
  HeightResult h = height(ds, depth);
  json rows = json::array();
  for (const auto& row : h.comb.table) {
    json seeds = json::array();
    for (const auto& s : row.seeds) seeds.push_back({{"letter", s.seed.letter}, {"gcd", s.gcd}, {"h", s.h}});
    rows.push_back({{"level", row.level},
                    {"h", row.h},
                    {"certified", !row.estimate_only()},
                    {"seeds_disagree", row.seeds_disagree},
                    {"seeds", seeds}});
  }
  if (c.json) {
    json j = {{"h_table", rows},
              {"h_comb", h.comb.h_comb},
              {"height", h.h},
              {"torsion_free", h.torsion_free},
              {"certificate_level", h.certificate.level},
              {"divides_cycle_lengths_minus_one", h.divides_lengths_minus_one},
              {"depth", depth}};
    emit(c, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "level table:";
  for (const auto& row : h.comb.table)
    out << " " << row.level << ":" << row.h << (row.estimate_only() ? "(estimate)" : "");
  out << "\nh_comb: " << h.comb.h_comb << "\n";
  out << "height: " << h.h << (h.torsion_free ? "" : " (combinatorial only, not torsion-free)") << "\n";
  out << "certificate: level " << h.certificate.level << ", classes";
  DirectiveSequence inj = is_letter_injective(ds) ? ds : injectivize(ds).sequence;
  const auto& alpha = inj.alphabet(h.certificate.level);
  for (const auto& cls : h.certificate.classes()) out << " {" << alpha.format(cls) << "}";
  out << "\ndepth: " << depth << "\n";
  emit(c, out.str());
  return 0;
}

int run_column(const Common& c) {
  DirectiveSequence ds = load(c, c.file);
  const ColumnMode mode = c.raw ? ColumnMode::Raw : ColumnMode::Injectivized;
  NaiveColumnNumber naive = naive_column_number(ds, mode);
  json levels = json::array();
  std::ostringstream out;
  out << "c(m):";
  for (const auto& l : naive.levels) {
    levels.push_back({{"m", l.m}, {"c", l.c}});
    out << " " << l.m << ":" << l.c;
  }
  out << "\nc_naive: " << naive.value << " (witness m=" << naive.witness.m << " n=" << naive.witness.n
      << " j=" << naive.witness.j.str() << ")\n";
  json j = {{"mode", c.raw ? "raw" : "injectivized"}, {"levels", levels}, {"c_naive", naive.value}};
  if (!c.raw) {
    try {
      ColumnNumber cn = column_number(ds, depth_for(c, ds));
      out << "c: " << cn.c << " (height " << cn.h << ")\n";
      j["c"] = cn.c;
      j["h"] = cn.h;
    } catch (const Error& e) {
      out << "c: unavailable: " << e.what() << "\n";
      j["c"] = nullptr;
    }
  }
  emit(c, c.json ? j.dump(2) + "\n" : out.str());
  return 0;
}

Word parse_word(const Alphabet& a, const std::string& text) { return a.parse(text); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral invariants of constant-length S-adic shifts"};
  app.require_subcommand(1);
  Common c;
  std::string file2;
  std::size_t level = 0, length = 0, width = 0, m = 0, n = 0;
  std::string word;
  std::vector<std::uint64_t> moduli;

  auto* analyze = app.add_subcommand("analyze", "full invariant report");
  add_common(analyze, c);
  auto* height_cmd = app.add_subcommand("height", "level heights, h_comb and a partition certificate");
  add_common(height_cmd, c);
  auto* purebase = app.add_subcommand("purebase", "write the pure base as a sequence file");
  add_common(purebase, c, false);
  purebase->add_option("-o", c.out, "output file");
  auto* inj_cmd = app.add_subcommand("injectivize", "write the letter-injective sequence");
  add_common(inj_cmd, c, false);
  inj_cmd->add_option("-o", c.out, "output file");
  auto* column = app.add_subcommand("column", "naive and true column numbers");
  add_common(column, c);
  column->add_flag("--raw", c.raw, "skip injectivization (diagnostic)");
  auto* cobham = app.add_subcommand("cobham", "length-prime obstruction between two sequences");
  add_common(cobham, c);
  cobham->add_option("file2", file2, "second sequence file")->required()->check(CLI::ExistingFile);
  auto* language = app.add_subcommand("language", "persistent words at a level");
  add_common(language, c);
  language->add_option("--level", level)->required();
  language->add_option("--length", length)->required();
  auto* desub = app.add_subcommand("desub", "count centred representations of a central window");
  add_common(desub, c);
  desub->add_option("--window", width, "window width")->required();
  desub->add_option("--level", level);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle_cmd->require_subcommand(1);
  auto* o_columns = oracle_cmd->add_subcommand("columns", "compare column cardinalities with the fast path");
  add_common(o_columns, c);
  o_columns->add_option("--m", m)->required();
  o_columns->add_option("--n", n)->required();
  auto* o_fibre = oracle_cmd->add_subcommand("fibre", "fibre count at the column witness");
  add_common(o_fibre, c);
  auto* o_residues = oracle_cmd->add_subcommand("residues", "occurrence residues of a word");
  add_common(o_residues, c);
  o_residues->add_option("--level", level);
  o_residues->add_option("--word", word)->required();
  o_residues->add_option("--d", moduli, "candidate moduli")->required()->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      DirectiveSequence ds = load(c, c.file);
      AnalysisReport r = analysis_report(ds, depth_for(c, ds));
      emit(c, c.json ? r.to_json().dump(2) + "\n" : r.to_text());
    } else if (*height_cmd) {
      return run_height(c);
    } else if (*purebase) {
      DirectiveSequence ds = load(c, c.file);
      PureBaseResult pb = pure_base(ds, depth_for(c, ds));
      std::string text = "# height " + std::to_string(pb.h) + "\n" + write_sequence_file(pb.pure, "pure");
      emit(c, text);
      if (!pb.trivial_height || !pb.torsion_free || !pb.alphabet_bound) {
        std::cerr << "warning: pure base postcondition failed\n";
        return 2;
      }
    } else if (*inj_cmd) {
      DirectiveSequence ds = load(c, c.file);
      Injectivization r = injectivize(ds);
      std::string text;
      if (!r.hypothesis_verified) text += "# unverified hypothesis: input is not torsion-free\n";
      text += write_sequence_file(r.sequence, "injective");
      emit(c, text);
    } else if (*column) {
      return run_column(c);
    } else if (*cobham) {
      DirectiveSequence a = load(c, c.file), b = load(c, file2);
      CobhamResult r = cobham_obstruction(a, b);
      json j = {{"obstruction", r.obstruction},
                {"witness", r.witness ? json(*r.witness) : json(nullptr)},
                {"reverse_obstruction", r.reverse_obstruction},
                {"reverse_witness", r.reverse_witness ? json(*r.reverse_witness) : json(nullptr)}};
      if (c.json) {
        emit(c, j.dump(2) + "\n");
      } else {
        std::string fwd = r.obstruction ? "yes, witness prime " + std::to_string(*r.witness) : "no";
        std::string rev = r.reverse_obstruction ? "yes, witness prime " + std::to_string(*r.reverse_witness) : "no";
        emit(c, table({{"first is not a factor of second", fwd}, {"second is not a factor of first", rev}}));
      }
    } else if (*language) {
      DirectiveSequence ds = load(c, c.file);
      PersistentLanguage lang = persistent_words(ds, level, length);
      const Alphabet& a = ds.alphabet(level);
      json words = json::array();
      std::ostringstream out;
      for (const Word& w : lang.words) {
        words.push_back(a.format(w));
        out << a.format(w) << "\n";
      }
      if (c.json)
        emit(c, json{{"level", level}, {"max_len", length}, {"stabilized", lang.stabilized}, {"words", words}}.dump(2) + "\n");
      else
        emit(c, out.str() + "# " + std::to_string(lang.words.size()) + " words" +
                    (lang.stabilized ? "" : ", not stabilized") + "\n");
    } else if (*desub) {
      DirectiveSequence ds = load(c, c.file);
      CentralWindow w = central_window(ds, level, (width + 1) / 2);
      std::size_t count = oracle::desubstitution_count(ds, level, w.word, w.origin);
      const Alphabet& a = ds.alphabet(level);
      Word left(w.word.begin(), w.word.begin() + static_cast<std::ptrdiff_t>(w.origin));
      Word right(w.word.begin() + static_cast<std::ptrdiff_t>(w.origin), w.word.end());
      if (c.json)
        emit(c, json{{"window", a.format(left) + " . " + a.format(right)}, {"representations", count}}.dump(2) + "\n");
      else
        emit(c, table({{"window", a.format(left) + " . " + a.format(right)},
                       {"representations", std::to_string(count)}}));
    } else if (*o_columns) {
      DirectiveSequence ds = load(c, c.file);
      const BigInt span = ds.span_length(m, n);
      std::size_t mismatches = 0, cols = 0;
      for (std::uint64_t j = 0; j < span; ++j, ++cols) {
        std::size_t slow = oracle::empirical_column_cardinality(ds, m, n, j);
        std::size_t fast = column_map(ds, m, n, j).image_size();
        if (slow != fast) ++mismatches;
      }
      emit(c, table({{"columns", std::to_string(cols)}, {"mismatches", std::to_string(mismatches)}}));
      return mismatches ? 1 : 0;
    } else if (*o_fibre) {
      DirectiveSequence ds = load(c, c.file);
      DirectiveSequence inj = is_letter_injective(ds) ? ds : injectivize(ds).sequence;
      NaiveColumnNumber naive = naive_column_number(inj, ColumnMode::Raw);
      const auto& wt = naive.witness;
      BigInt pm = inj.p(wt.m);
      std::size_t count = oracle::fibre_count(inj, {{pm, 0}, {inj.p(wt.n), wt.j * pm}}, depth_for(c, inj));
      emit(c, table({{"c_naive", std::to_string(naive.value)}, {"fibre_count", std::to_string(count)}}));
      return count == naive.value ? 0 : 1;
    } else if (*o_residues) {
      DirectiveSequence ds = load(c, c.file);
      auto res = oracle::occurrence_residues(ds, level, parse_word(ds.alphabet(level), word), depth_for(c, ds), moduli);
      std::ostringstream out;
      for (const auto& [d, s] : res) {
        out << "mod " << d << ":";
        for (auto r : s) out << " " << r;
        out << (s.size() == 1 ? "  (single residue)" : "") << "\n";
      }
      emit(c, out.str());
    }
  } catch (const ParseError& e) {
    std::cerr << c.file << ":" << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return 0;
}
