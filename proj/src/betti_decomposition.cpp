#include "boij/betti_decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "boij/errors.hpp"

namespace boij {

std::vector<DegreeSequence> BettiDecomposition::chain() const {
  std::vector<DegreeSequence> seqs;
  for (const auto& t : terms) seqs.push_back(t.diagram.sequence());
  // Insertion sort: the order is only partial, so std::sort's strict weak
  // ordering requirement does not hold in general.
  for (std::size_t k = 1; k < seqs.size(); ++k) {
    for (std::size_t m = k; m > 0 && compare(seqs[m - 1], seqs[m]) == Order::GreaterEq; --m) {
      std::swap(seqs[m - 1], seqs[m]);
    }
  }
  return seqs;
}

StrandScan scan_strand(const BettiTable& b) {
  auto first = b.first_column();
  if (!first) throw InvalidArgument("min_strand of the zero table");
  std::vector<int> degrees{*b.min_degree(*first)};
  std::optional<int> blocked;
  for (int i = *first + 1; static_cast<int>(degrees.size()) < b.vars() + 1; ++i) {
    auto d = b.min_degree(i);
    if (!d) break;
    if (*d <= degrees.back()) {
      blocked = i;
      break;
    }
    degrees.push_back(*d);
  }
  return {DegreeSequence(b.vars(), std::move(degrees), *first), blocked};
}

DegreeSequence min_strand(const BettiTable& b) { return scan_strand(b).strand; }

BettiPeel peel(const BettiTable& b, const DegreeSequence& d) {
  PureDiagram pi = hk_normalized(d);
  std::optional<Rational> q;
  for (int k = 0; k < d.length(); ++k) {
    int i = d.start() + k;
    int j = d.degrees()[static_cast<std::size_t>(k)];
    if (!b.contains(i, j)) {
      throw InvalidArgument("strand cell (" + std::to_string(i) + "," + std::to_string(j) + ") missing from table");
    }
    Rational ratio = b.at(i, j) / pi.values()[static_cast<std::size_t>(k)];
    if (!q || ratio < *q) q = ratio;
  }
  return {*q, subtract_checked(b, scale(pi.to_table(), *q))};
}

BettiDecomposition decompose(const BettiTable& b, Normalization norm) {
  auto report = validate(b);
  if (!report.ok()) throw InvalidTable(report.str());

  BettiDecomposition dec;
  dec.vars = b.vars();
  BettiTable rest = b;
  const std::size_t max_steps = b.size();
  for (int step = 1; !rest.empty(); ++step) {
    if (static_cast<std::size_t>(step) > max_steps) throw NotInCone(step, "no termination within |support| peels");
    StrandScan scan = scan_strand(rest);
    if (scan.blocked_column) {
      throw NotInCone(step, "StrandNotIncreasing(" + std::to_string(*scan.blocked_column) + ") after strand " +
                                scan.strand.str());
    }
    BettiPeel p = peel(rest, scan.strand);
    PureDiagram pi = hk_normalized(scan.strand);
    if (norm == Normalization::SmallestIntegral) {
      Rational lambda = integral_scale(pi);
      dec.terms.push_back({p.q / lambda, scale(pi, lambda)});
    } else {
      dec.terms.push_back({p.q, pi});
    }
    rest = std::move(p.remainder);
  }

  for (std::size_t x = 0; x < dec.terms.size(); ++x) {
    for (std::size_t y = x + 1; y < dec.terms.size(); ++y) {
      if (compare(dec.terms[x].diagram.sequence(), dec.terms[y].diagram.sequence()) == Order::Incomparable) {
        throw NotInCone(static_cast<int>(y + 1), "peeled sequences " + dec.terms[x].diagram.sequence().str() + " and " +
                                                     dec.terms[y].diagram.sequence().str() + " are incomparable");
      }
    }
  }
  return dec;
}

BettiTable recompose(const BettiDecomposition& dec) {
  BettiTable sum(dec.vars);
  for (const auto& t : dec.terms) sum = add_tables(sum, scale(t.diagram.to_table(), t.coefficient));
  return sum;
}

bool is_member(const BettiTable& b) {
  try {
    decompose(b);
    return true;
  } catch (const NotInCone&) {
    return false;
  } catch (const InvalidTable&) {
    return false;
  }
}

std::string format_terms(const BettiDecomposition& dec) {
  std::ostringstream os;
  for (const auto& t : dec.terms) {
    const auto& seq = t.diagram.sequence();
    os << "term " << t.coefficient << " window=" << seq.start() << " degrees=";
    for (std::size_t k = 0; k < seq.degrees().size(); ++k) os << (k ? "," : "") << seq.degrees()[k];
    os << " values=";
    for (std::size_t k = 0; k < t.diagram.values().size(); ++k) os << (k ? "," : "") << t.diagram.values()[k];
    os << "\n";
  }
  return os.str();
}

}  // namespace boij
