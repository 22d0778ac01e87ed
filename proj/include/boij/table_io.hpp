#ifndef BOIJ_TABLE_IO_HPP
#define BOIJ_TABLE_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "boij/betti_table.hpp"
#include "boij/cohomology_table.hpp"

namespace boij {

// Line-oriented exchange formats. `#` starts a comment line; blank lines are
// skipped; entries may come in any order but a repeated cell is an error.
//
//   betti-table v1        coh-table v1
//   vars <v>              n <n>
//   entry <i> <j> <q>     window <lo> <hi>
//                         chi <c_0> ... <c_n>
//                         entry <i> <j> <q>

BettiTable parse_betti(std::string_view text);
CohomologyTable parse_cohomology(std::string_view text);

using AnyTable = std::variant<BettiTable, CohomologyTable>;

/// Dispatches on the header line.
AnyTable parse_table(std::string_view text);
AnyTable read_table_file(const std::string& path);

std::string serialize(const BettiTable& t);
std::string serialize(const CohomologyTable& t);

}  // namespace boij

#endif  // BOIJ_TABLE_IO_HPP
