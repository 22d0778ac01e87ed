// Command-line front end: one subcommand per operation, deterministic text
// output, exit 0 on success, 1 on domain errors, 2 on usage or parse errors.

#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "boij/betti_decomposition.hpp"
#include "boij/coh_decomposition.hpp"
#include "boij/errors.hpp"
#include "boij/extension_polytope.hpp"
#include "boij/pretty.hpp"
#include "boij/pure_diagram.hpp"
#include "boij/stillman.hpp"
#include "boij/supernatural.hpp"
#include "boij/table_io.hpp"

namespace {

using namespace boij;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

Window parse_window(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("window must be lo,hi: '" + text + "'");
  try {
    std::size_t u1 = 0;
    std::size_t u2 = 0;
    std::string lo = text.substr(0, comma);
    std::string hi = text.substr(comma + 1);
    Window w{std::stoi(lo, &u1), std::stoi(hi, &u2)};
    if (u1 != lo.size() || u2 != hi.size()) throw std::invalid_argument(text);
    if (w.lo > w.hi) throw InvalidArgument("window lower end exceeds upper end: '" + text + "'");
    return w;
  } catch (const std::logic_error&) {
    throw InvalidArgument("window must be lo,hi: '" + text + "'");
  }
}

template <class T>
T expect_table(const std::string& path) {
  AnyTable t = read_table_file(path);
  if (auto* v = std::get_if<T>(&t)) return *v;
  throw InvalidArgument("'" + path + "' holds the wrong kind of table");
}

std::string join(const std::vector<Rational>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + xs[k].str();
  return s;
}

std::string diagram_line(const PureDiagram& d) {
  const auto& seq = d.sequence();
  std::ostringstream os;
  os << "diagram window=" << seq.start() << " degrees=";
  for (std::size_t k = 0; k < seq.degrees().size(); ++k) os << (k ? "," : "") << seq.degrees()[k];
  os << " values=" << join(d.values()) << "\n";
  return os.str();
}

int report_error(const Error& e) {
  std::cerr << e.code() << "\n" << e.detail() << "\n";
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidArgument*>(&e)) return kUsageError;
  return kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boij-Soederberg decompositions of Betti and cohomology tables"};
  app.require_subcommand(1, 1);

  // pure
  auto* pure = app.add_subcommand("pure", "Herzog-Kuehl pure diagram of a degree sequence");
  std::string degrees;
  int vars = 0;
  bool integral = false;
  std::string pure_format = "line";
  pure->add_option("-d,--degrees", degrees, "a:[d0,d1,...] or d0,d1,...")->required();
  pure->add_option("--vars", vars, "number of variables")->required();
  pure->add_flag("--integral", integral, "smallest integral multiple instead of first entry 1");
  pure->add_option("--format", pure_format, "line, table (exchange format) or pretty")
      ->check(CLI::IsMember({"line", "table", "pretty"}));

  // decompose / member
  auto* decompose_cmd = app.add_subcommand("decompose", "Greedy decomposition of a Betti table");
  std::string betti_path;
  bool normalized = false;
  decompose_cmd->add_option("file", betti_path, "Betti exchange file")->required();
  decompose_cmd->add_flag("--normalized", normalized, "coefficients against diagrams with first entry 1");

  auto* member = app.add_subcommand("member", "Boij-Soederberg cone membership of a Betti table");
  member->add_option("file", betti_path, "Betti exchange file")->required();

  // supernatural
  auto* super = app.add_subcommand("supernatural", "Supernatural or line-bundle cohomology table");
  int n = 0;
  std::string roots_text;
  std::string multiplier = "1";
  std::string window_text;
  std::optional<int> line_twist;
  bool super_pretty = false;
  super->add_option("-n", n, "projective space dimension")->required();
  super->add_option("-f,--roots", roots_text, "root sequence f1,...,fn");
  super->add_option("-m", multiplier, "positive rational multiplier");
  super->add_option("--window", window_text, "lo,hi");
  super->add_option("--line-bundle", line_twist, "table of O(a) instead of sigma_f");
  super->add_flag("--pretty", super_pretty, "grid layout instead of the exchange format");

  // coh-decompose
  auto* coh = app.add_subcommand("coh-decompose", "Greedy decomposition of a cohomology table");
  std::string coh_path;
  bool check_oracle = false;
  bool coh_integral = false;
  coh->add_option("file", coh_path, "cohomology exchange file")->required();
  coh->add_flag("--check-oracle", check_oracle, "cross-check against the P^1 second-difference oracle");
  coh->add_flag("--integral", coh_integral, "rescale each term to its smallest integral multiple");

  // stillman
  auto* still = app.add_subcommand("stillman", "Integral pure diagrams shaped like r forms of degree e");
  int e = 1;
  int r = 2;
  int p_max = 0;
  bool tsv = false;
  int threads = 0;
  still->add_option("-e", e, "generator degree")->required();
  still->add_option("-r", r, "number of generators")->required();
  still->add_option("--p-max", p_max, "largest family index")->required();
  still->add_flag("--tsv", tsv, "tab-separated output");
  still->add_option("--threads", threads, "OpenMP threads (0 = runtime default)");

  // ext-polytope
  auto* ext = app.add_subcommand("ext-polytope", "Cohomology tables of extensions under consecutive cancellation");
  std::string a_path;
  std::string b_path;
  bool symmetric = false;
  long long max_points = 1'000'000;
  int shift = 0;
  ext->add_option("A", a_path, "subbundle table")->required();
  ext->add_option("B", b_path, "quotient table")->required();
  ext->add_flag("--symmetric", symmetric, "restrict to Serre-symmetric patterns");
  ext->add_option("--max-points", max_points, "enumeration budget");
  ext->add_option("--shift", shift, "Serre pairing shift");
  ext->add_option("--threads", threads, "OpenMP threads (0 = runtime default)");

  // pretty / validate
  auto* pretty_cmd = app.add_subcommand("pretty", "Human-readable grid of a table file");
  std::string any_path;
  std::string cols_text;
  std::string rows_text;
  pretty_cmd->add_option("file", any_path, "exchange file")->required();
  pretty_cmd->add_option("--cols", cols_text, "lo,hi column range");
  pretty_cmd->add_option("--rows", rows_text, "lo,hi row range");

  auto* validate_cmd = app.add_subcommand("validate", "Check every table invariant");
  validate_cmd->add_option("file", any_path, "exchange file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsageError;
  }

  try {
    if (threads > 0) omp_set_num_threads(threads);

    if (pure->parsed()) {
      PureDiagram d = hk_normalized(DegreeSequence::parse(degrees, vars));
      if (integral) d = smallest_integral(d);
      if (pure_format == "table") {
        std::cout << serialize(d.to_table());
      } else if (pure_format == "pretty") {
        std::cout << pretty(d.to_table());
      } else {
        std::cout << diagram_line(d);
      }
    } else if (decompose_cmd->parsed()) {
      auto table = expect_table<BettiTable>(betti_path);
      std::cout << format_terms(
          decompose(table, normalized ? Normalization::Normalized : Normalization::SmallestIntegral));
    } else if (member->parsed()) {
      std::cout << (is_member(expect_table<BettiTable>(betti_path)) ? "yes" : "no") << "\n";
    } else if (super->parsed()) {
      CohomologyTable t = [&] {
        if (line_twist) {
          if (!roots_text.empty()) throw InvalidArgument("--line-bundle and --roots are exclusive");
          if (window_text.empty()) throw InvalidArgument("--line-bundle needs --window");
          return line_bundle(n, *line_twist, parse_window(window_text));
        }
        if (roots_text.empty()) throw InvalidArgument("either --roots or --line-bundle is required");
        RootSequence f = RootSequence::parse(roots_text);
        if (f.n() != n) throw InvalidArgument("root sequence length differs from -n");
        Window w = window_text.empty() ? minimal_window(f) : parse_window(window_text);
        return sigma(f, Rational::parse(multiplier), w);
      }();
      std::cout << (super_pretty ? pretty(t) : serialize(t));
    } else if (coh->parsed()) {
      auto table = expect_table<CohomologyTable>(coh_path);
      CohDecomposition dec = decompose_coh(table);
      if (check_oracle && table.n() == 1) {
        CohDecomposition oracle = p1_oracle(table);
        auto sorted = [](std::vector<CohTerm> ts) {
          std::sort(ts.begin(), ts.end(), [](const CohTerm& x, const CohTerm& y) { return x.roots < y.roots; });
          return ts;
        };
        if (sorted(dec.terms) != sorted(oracle.terms)) {
          throw NotInCone(0, "greedy decomposition disagrees with the P^1 oracle");
        }
      }
      if (coh_integral) {
        for (const auto& t : dec.terms) {
          Rational k = integral_multiple(t.roots, table.window());
          std::cout << "term " << t.coefficient / k << " roots=" << t.roots.str() << " scale=" << k << "\n";
        }
      } else {
        std::cout << format_terms(dec);
      }
    } else if (still->parsed()) {
      auto rows = scan(e, r, p_max);
      if (tsv) {
        std::cout << format_scan_tsv(rows);
      } else {
        for (const auto& row : rows) {
          std::cout << "p=" << row.p << " degrees=" << row.sequence.str() << " values=" << join(row.diagram.values())
                    << " integral=" << (row.integral ? "Y" : "N") << " codim=" << row.obstruction.codim << " "
                    << (row.obstruction.verdict == Realizability::NotRealizableAsCyclic ? "NotRealizableAsCyclic"
                                                                                         : "Inconclusive")
                    << "\n";
        }
      }
    } else if (ext->parsed()) {
      PolytopeOptions opts;
      opts.mode = symmetric ? PolytopeMode::SerreSymmetric : PolytopeMode::Full;
      opts.max_points = max_points;
      opts.serre_shift = shift;
      auto report = enumerate_patterns(expect_table<CohomologyTable>(a_path), expect_table<CohomologyTable>(b_path),
                                       opts);
      std::cout << format_polytope_tsv(report);
    } else if (pretty_cmd->parsed()) {
      GridRange range;
      if (!cols_text.empty()) range.columns = parse_window(cols_text);
      if (!rows_text.empty()) range.rows = parse_window(rows_text);
      std::visit([&](const auto& t) { std::cout << pretty(t, range); }, read_table_file(any_path));
    } else if (validate_cmd->parsed()) {
      ValidationReport report = std::visit([](const auto& t) { return validate(t); }, read_table_file(any_path));
      if (!report.ok()) throw InvalidTable(report.str());
      std::cout << "ok\n";
    }
  } catch (const Error& err) {
    return report_error(err);
  } catch (const std::exception& err) {
    std::cerr << "InternalError\n" << err.what() << "\n";
    return kDomainError;
  }
  return 0;
}
