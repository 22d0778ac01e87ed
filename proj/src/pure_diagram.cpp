#include "boij/pure_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "boij/errors.hpp"

namespace boij {

DegreeSequence::DegreeSequence(int vars, std::vector<int> degrees, int window_start)
    : vars_(vars), start_(window_start), degrees_(std::move(degrees)) {
  if (vars_ < 1) throw InvalidArgument("vars must be positive");
  if (degrees_.empty()) throw InvalidArgument("degree sequence is empty");
  if (degrees_.size() > static_cast<std::size_t>(vars_) + 1) {
    throw InvalidArgument("degree sequence of length " + std::to_string(degrees_.size()) + " exceeds vars+1 = " +
                          std::to_string(vars_ + 1));
  }
  for (std::size_t k = 1; k < degrees_.size(); ++k) {
    if (degrees_[k] <= degrees_[k - 1]) throw InvalidArgument("degrees must be strictly increasing: " + str());
  }
}

DegreeSequence DegreeSequence::parse(std::string_view text, int vars) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  int start = 0;
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      start = std::stoi(s.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("start");
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad window start in '" + std::string(text) + "'");
    }
    s = s.substr(colon + 1);
  }
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::vector<int> degrees;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      degrees.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad degree '" + item + "' in '" + std::string(text) + "'");
    }
  }
  return DegreeSequence(vars, std::move(degrees), start);
}

std::string DegreeSequence::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < degrees_.size(); ++k) os << (k ? "," : "") << degrees_[k];
  if (start_ == 0) return os.str();
  return std::to_string(start_) + ":[" + os.str() + "]";
}

PureDiagram::PureDiagram(DegreeSequence sequence, std::vector<Rational> values)
    : sequence_(std::move(sequence)), values_(std::move(values)) {
  if (values_.size() != sequence_.degrees().size()) throw InvalidArgument("one value per degree required");
  for (const auto& v : values_) {
    if (v.sign() <= 0) throw InvalidArgument("pure diagram values must be positive");
  }
}

BettiTable PureDiagram::to_table() const {
  BettiTable t(sequence_.vars());
  for (int k = 0; k < sequence_.length(); ++k) {
    t.set(sequence_.start() + k, sequence_.degrees()[static_cast<std::size_t>(k)], values_[static_cast<std::size_t>(k)]);
  }
  return t;
}

Rational PureDiagram::moment(int k) const {
  Rational sum;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), BigInt(sequence_.degrees()[i]).get_mpz_t(), static_cast<unsigned long>(k));
    Rational term = values_[i] * Rational(power);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

PureDiagram hk_normalized(const DegreeSequence& d) {
  const auto& deg = d.degrees();
  auto denominator = [&](std::size_t i) {
    BigInt prod = 1;
    for (std::size_t j = 0; j < deg.size(); ++j) {
      if (j != i) prod *= std::abs(static_cast<long>(deg[j]) - deg[i]);
    }
    return prod;
  };
  BigInt head = denominator(0);
  std::vector<Rational> values;
  values.reserve(deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) values.emplace_back(head, denominator(i));
  return PureDiagram(d, std::move(values));
}

Rational integral_scale(const PureDiagram& p) {
  BigInt common_den = 1;
  for (const auto& v : p.values()) common_den = lcm(common_den, v.den());
  BigInt g = 0;
  for (const auto& v : p.values()) g = gcd(g, v.num() * (common_den / v.den()));
  // entries * L are integers with gcd g; dividing by g makes them coprime.
  return Rational(common_den, g);
}

PureDiagram scale(const PureDiagram& p, const Rational& c) {
  std::vector<Rational> values;
  values.reserve(p.values().size());
  for (const auto& v : p.values()) values.push_back(v * c);
  return PureDiagram(p.sequence(), std::move(values));
}

PureDiagram smallest_integral(const PureDiagram& p) { return scale(p, integral_scale(p)); }

std::string to_string(Order o) {
  switch (o) {
    case Order::LessEq: return "LessEq";
    case Order::GreaterEq: return "GreaterEq";
    case Order::Equal: return "Equal";
    case Order::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

// -inf before the window, +inf after it; encoded as (rank, value).
std::pair<int, int> padded(const DegreeSequence& d, int pos) {
  if (pos < d.start()) return {-1, 0};
  if (pos > d.end()) return {1, 0};
  return {0, d.at(pos)};
}

}  // namespace

Order compare(const DegreeSequence& d, const DegreeSequence& e) {
  if (d.vars() != e.vars()) {
    throw DimensionMismatch("vars " + std::to_string(d.vars()) + " vs " + std::to_string(e.vars()));
  }
  bool le = true;
  bool ge = true;
  int lo = std::min(d.start(), e.start());
  int hi = std::max(d.end(), e.end());
  for (int pos = lo; pos <= hi; ++pos) {
    auto a = padded(d, pos);
    auto b = padded(e, pos);
    if (a < b) ge = false;
    if (b < a) le = false;
  }
  if (le && ge) return Order::Equal;
  if (le) return Order::LessEq;
  if (ge) return Order::GreaterEq;
  return Order::Incomparable;
}

bool is_chain(const std::vector<DegreeSequence>& seqs) {
  for (std::size_t k = 1; k < seqs.size(); ++k) {
    Order o = compare(seqs[k - 1], seqs[k]);
    if (o != Order::LessEq && o != Order::Equal) return false;
  }
  return true;
}

}  // namespace boij
