// Dominant squares and successor diagrams for a block matrix C.
//
// A square (a, b) of Y is dominant for T when the elements of T strictly
// below and strictly right of it contain C (corner inside Y).  Deleting the
// rows and columns of the non-dominant elements of T from the dominant
// squares gives the successor diagram; counting P-avoiders over successors
// counts (P ⊕ C)-avoiders of the parent.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "altperm/young.hpp"

namespace altperm {

using Cell = std::pair<int, int>;  // (row, column), 0-based

// Row lengths of the dominant squares, one entry per row of the parent
// (entries may be 0, so this is not a YoungDiagram).
struct DominantRegion {
  std::vector<int> rows;

  bool contains(int i, int j) const {
    return i >= 0 && i < static_cast<int>(rows.size()) && j >= 0 &&
           j < rows[static_cast<std::size_t>(i)];
  }
  bool is_young_shaped(const YoungDiagram& parent) const;
};

bool is_dominant(const YoungDiagram& y, const Transversal& t,
                 const Permutation& c, int a, int b);
DominantRegion dominant_region(const YoungDiagram& y, const Transversal& t,
                               const Permutation& c);

// Elements of T that are not dominant, sorted by row.
std::vector<Cell> nondominant_set(const YoungDiagram& y, const Transversal& t,
                                  const Permutation& c);

struct SuccessorDiagram {
  ADYoungDiagram diagram;     // built relaxed; well_formed() is a lemma
  std::vector<int> row_map;   // r_i, 0-based parent rows
  std::vector<int> col_map;   // c_i, 0-based parent columns

  friend bool operator==(const SuccessorDiagram&,
                         const SuccessorDiagram&) = default;
};

SuccessorDiagram successor(const ADYoungDiagram& y, const Transversal& t,
                           const Permutation& c);

// T restricted to the kept rows and columns, renumbered.
Transversal deletion_image(const SuccessorDiagram& s, const Transversal& t);

// N together with (r_i, c_{b_i}) for each (i, b_i) of t_prime.  Throws
// std::invalid_argument when the result is not a transversal of y.
Transversal reinsert(const ADYoungDiagram& y, const std::vector<Cell>& n,
                     const SuccessorDiagram& s, const Transversal& t_prime);

// The family of realizable non-dominant sets, each with the first valid
// transversal (lexicographic order) realizing it.
struct NondominantFamily {
  std::vector<Cell> cells;
  Transversal witness;
};
std::vector<NondominantFamily> realizable_nondominant_sets(
    const ADYoungDiagram& y, const Permutation& c);

struct Embed2Sides {
  std::uint64_t lhs = 0;  // |S_Y(P ⊕ C)|
  std::uint64_t rhs = 0;  // sum of |S_{f(N)}(P)|
  std::size_t families = 0;
};
Embed2Sides embed2_sides(const ADYoungDiagram& y, const Permutation& p,
                         const Permutation& c);
bool verify_embed2(const ADYoungDiagram& y, const Permutation& p,
                   const Permutation& c);

// Both implications of the ascent/descent transfer between a parent and a
// successor, in 1-based indices:
//   i ∈ A' and r_i + 1 ∈ D  =>  i + 1 ∈ D'
//   i ∈ D' and r_i - 1 ∈ A  =>  i - 1 ∈ A'
bool alt_technical_holds(const ADYoungDiagram& y, const SuccessorDiagram& s);

}  // namespace altperm
