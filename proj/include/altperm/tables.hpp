// Published count tables: |A_n(q)| for S_6 patterns at even and odd n, and
// |D^3_n(q)| for a few S_4 patterns.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altperm/permutation.hpp"

namespace altperm {

struct ReferenceTable {
  struct Row {
    // Patterns grouped as printed; a group of two is a trivial pair.
    std::vector<std::vector<std::string>> groups;
    // One entry per column of `lengths`; blank cells are absent.
    std::vector<std::optional<std::uint64_t>> values;

    // Distinct patterns of the row, in printed order.
    std::vector<Permutation> patterns() const;
  };

  std::string name;
  PermClass cls;
  std::vector<int> lengths;
  std::vector<Row> rows;
};

const ReferenceTable& table_6even();
const ReferenceTable& table_6odd();
const ReferenceTable& table_4rep();
std::vector<const ReferenceTable*> reference_tables();
const ReferenceTable* find_table(std::string_view name);  // "6even" etc.

}  // namespace altperm
