#include "boij/table_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "boij/errors.hpp"

namespace boij {

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(std::move(w));
    if (line.words.empty() || line.words.front().starts_with('#')) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& word) {
  try {
    std::size_t used = 0;
    long v = std::stol(word, &used);
    if (used != word.size() || v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      throw std::invalid_argument(word);
    }
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw ParseError(line.number, "expected an integer, got '" + word + "'");
  }
}

Rational parse_rational(const Line& line, const std::string& word) {
  try {
    return Rational::parse(word);
  } catch (const InvalidArgument& e) {
    throw ParseError(line.number, e.detail());
  }
}

void expect_arity(const Line& line, std::size_t words) {
  if (line.words.size() != words) {
    throw ParseError(line.number, "'" + line.words.front() + "' expects " + std::to_string(words - 1) + " fields");
  }
}

const Line& expect_keyword(const std::vector<Line>& lines, std::size_t k, const std::string& keyword, int last_line) {
  if (k >= lines.size()) throw ParseError(last_line, "missing '" + keyword + "' line");
  if (lines[k].words.front() != keyword) {
    throw ParseError(lines[k].number, "expected '" + keyword + "', got '" + lines[k].words.front() + "'");
  }
  return lines[k];
}

Entries parse_entries(const std::vector<Line>& lines, std::size_t first) {
  Entries entries;
  for (std::size_t k = first; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.words.front() != "entry") {
      throw ParseError(line.number, "unexpected '" + line.words.front() + "'");
    }
    expect_arity(line, 4);
    Cell cell{parse_int(line, line.words[1]), parse_int(line, line.words[2])};
    Rational value = parse_rational(line, line.words[3]);
    if (!entries.emplace(cell, value).second) {
      throw ParseError(line.number, "duplicate entry (" + line.words[1] + "," + line.words[2] + ")");
    }
  }
  return entries;
}

int last_line_of(std::string_view text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
}

void check_header(const std::vector<Line>& lines, const std::string& magic, int last_line) {
  if (lines.empty()) throw ParseError(last_line, "empty input");
  const Line& h = lines.front();
  if (h.words.size() != 2 || h.words[0] + " " + h.words[1] != magic) {
    throw ParseError(h.number, "expected header '" + magic + "'");
  }
}

}  // namespace

BettiTable parse_betti(std::string_view text) {
  auto lines = tokenize(text);
  int last = last_line_of(text);
  check_header(lines, "betti-table v1", last);
  const Line& vars_line = expect_keyword(lines, 1, "vars", last);
  expect_arity(vars_line, 2);
  int vars = parse_int(vars_line, vars_line.words[1]);
  if (vars < 1) throw ParseError(vars_line.number, "vars must be positive");
  return BettiTable(vars, parse_entries(lines, 2));
}

CohomologyTable parse_cohomology(std::string_view text) {
  auto lines = tokenize(text);
  int last = last_line_of(text);
  check_header(lines, "coh-table v1", last);
  const Line& n_line = expect_keyword(lines, 1, "n", last);
  expect_arity(n_line, 2);
  int n = parse_int(n_line, n_line.words[1]);
  if (n < 1) throw ParseError(n_line.number, "n must be positive");

  const Line& w_line = expect_keyword(lines, 2, "window", last);
  expect_arity(w_line, 3);
  Window w{parse_int(w_line, w_line.words[1]), parse_int(w_line, w_line.words[2])};
  if (w.lo > w.hi) throw ParseError(w_line.number, "window lower end exceeds upper end");

  const Line& chi_line = expect_keyword(lines, 3, "chi", last);
  expect_arity(chi_line, static_cast<std::size_t>(n) + 2);
  Polynomial chi;
  for (std::size_t k = 1; k < chi_line.words.size(); ++k) chi.push_back(parse_rational(chi_line, chi_line.words[k]));

  return CohomologyTable(n, w, std::move(chi), parse_entries(lines, 4));
}

AnyTable parse_table(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(last_line_of(text), "empty input");
  const auto& head = lines.front().words.front();
  if (head == "betti-table") return parse_betti(text);
  if (head == "coh-table") return parse_cohomology(text);
  throw ParseError(lines.front().number, "unknown table header '" + head + "'");
}

AnyTable read_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

std::string serialize(const BettiTable& t) {
  std::ostringstream os;
  os << "betti-table v1\n" << "vars " << t.vars() << "\n";
  for (const auto& [cell, v] : t.entries()) os << "entry " << cell.i << " " << cell.j << " " << v << "\n";
  return os.str();
}

std::string serialize(const CohomologyTable& t) {
  std::ostringstream os;
  os << "coh-table v1\n"
     << "n " << t.n() << "\n"
     << "window " << t.window().lo << " " << t.window().hi << "\n"
     << "chi";
  for (const auto& c : t.chi()) os << " " << c;
  os << "\n";
  for (const auto& [cell, v] : t.entries()) os << "entry " << cell.i << " " << cell.j << " " << v << "\n";
  return os.str();
}

}  // namespace boij
