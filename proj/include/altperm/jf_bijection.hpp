// The replacement bijection between F3-avoiding and J3-avoiding valid
// transversals of 1-alternating AD-Young diagrams.
//
// F3 = M(213), J3 = M(321).  Row triples and column values handled by this
// module are 1-based, so formulas like S(a) = (a3 + 1, a1, 0) read as
// written; the Transversal itself stays 0-based like everywhere else.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altperm/young.hpp"

namespace altperm {

using Triple = std::array<int, 3>;

struct ColumnWindow {
  int lo = 1;  // inclusive, 1-based
  int hi = 0;
};

// Rows i in `rows` (sorted, 1-based) whose column lies in `window`.
std::vector<int> gamma(const Transversal& t, const std::vector<int>& rows,
                       ColumnWindow window);

// Cyclic shifts over gamma(t, rows, window) = i_1 < ... < i_k:
// omega gives row i_j the old column of i_{j-1}, theta that of i_{j+1}
// (indices mod k).  Throws std::invalid_argument unless the last listed
// row reaches the top of the window.
Transversal omega(const YoungDiagram& y, const Transversal& t,
                  const std::vector<int>& rows, ColumnWindow window);
Transversal theta(const YoungDiagram& y, const Transversal& t,
                  const std::vector<int>& rows, ColumnWindow window);

// Copies of J3 (with the corner condition) and copies of F3 whose last row
// is not a required ascent.
std::vector<Triple> j3_copies(const ADYoungDiagram& y, const Transversal& t);
std::vector<Triple> f3_copies(const ADYoungDiagram& y, const Transversal& t);

struct FClass {
  int type = 0;
  Triple key{};  // S(a)
};

// Throws std::invalid_argument when a is not a copy of the right kind.
int classify_J(const ADYoungDiagram& y, const Transversal& t, const Triple& a);
FClass classify_F(const ADYoungDiagram& y, const Transversal& t,
                  const Triple& a);

inline Triple hash_key(const Triple& u) { return {u[2], u[0], u[1]}; }

// Left inverse of S on F3 copies.
Triple s_inverse(const ADYoungDiagram& y, const Triple& key);

// Argmin of #(a) over J3 copies / argmax of S(a) over F3 copies.  Throw
// std::invalid_argument when there is no copy.
Triple select_J(const ADYoungDiagram& y, const Transversal& t);
Triple select_F(const ADYoungDiagram& y, const Transversal& t);

// Every #(u) for a J3 copy u is >= every S(v) for an F3 copy v.
bool is_separable(const ADYoungDiagram& y, const Transversal& t);

// Tallies of the lemma checks made inside phi and psi.
struct LemmaAudit {
  std::map<std::string, std::uint64_t> checked;
  std::map<std::string, std::uint64_t> failed;
  std::vector<std::string> examples;  // first few failures

  void record(const std::string& lemma, bool ok, const std::string& context);
  bool clean() const { return failed.empty(); }
};

// One replacement step.  Throw std::invalid_argument when t is not a
// separable valid transversal holding a copy of J3 (phi) or F3 (psi).
Transversal phi(const ADYoungDiagram& y, const Transversal& t,
                LemmaAudit* audit = nullptr);
Transversal psi(const ADYoungDiagram& y, const Transversal& t,
                LemmaAudit* audit = nullptr);

// The regions that the selected copy forces to be free of T.
bool e_phi_is_empty(const ADYoungDiagram& y, const Transversal& t,
                    const Triple& a);
bool e_psi_is_empty(const ADYoungDiagram& y, const Transversal& t,
                    const Triple& a);

struct TraceStep {
  int index = 0;
  char family = 'J';  // 'J' for a phi step, 'F' for a psi step
  Triple triple{};
  int type = 0;
  Transversal before;
  Transversal after;
};

std::string format_trace_step(const TraceStep& s);

// Iterate phi until the transversal avoids J3 (Phi) or psi until it
// avoids F3 (Psi).  Throws std::logic_error when the step budget n * n!
// runs out or a step fails to move lexicographically.
Transversal Phi(const ADYoungDiagram& y, const Transversal& t,
                std::vector<TraceStep>* trace = nullptr,
                LemmaAudit* audit = nullptr);
Transversal Psi(const ADYoungDiagram& y, const Transversal& t,
                std::vector<TraceStep>* trace = nullptr,
                LemmaAudit* audit = nullptr);

// Enlarges a 1-semialternating diagram with 1 ∈ D to a 1-alternating one:
// a new first row and column, A = {1} ∪ (A + 1), D = D + 1.
ADYoungDiagram alpha_diagram(const ADYoungDiagram& y);
Transversal alpha(const Transversal& t);
// Throws std::invalid_argument unless t starts in column 1.
Transversal alpha_inverse(const Transversal& t);

// Phi and Psi on 1-semialternating diagrams, routed through alpha when
// 1 ∈ D.
Transversal Phi_semi(const ADYoungDiagram& y, const Transversal& t,
                     LemmaAudit* audit = nullptr);
Transversal Psi_semi(const ADYoungDiagram& y, const Transversal& t,
                     LemmaAudit* audit = nullptr);

}  // namespace altperm
