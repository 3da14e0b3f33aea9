#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dmod/monomial.hpp"

namespace dmod {

/// A matrix order: integer weight rows compared in sequence, then a final
/// tie-break (degrevlex or lex) on all variables. Module elements are ordered
/// position-over-term with component 0 largest.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Weight, BlockElimination };
  enum class TieBreak { DegRevLex, Lex };

  static MonomialOrder degrevlex();
  static MonomialOrder lex();
  /// Weight vector first, degrevlex on ties.
  static MonomialOrder weighted(std::vector<int> weight);
  /// Variables flagged in `eliminate` come first (by their total degree), degrevlex within.
  static MonomialOrder elimination(std::vector<bool> eliminate);
  /// General form: rows then tie-break.
  static MonomialOrder matrix(std::vector<std::vector<int>> rows, TieBreak tie = TieBreak::DegRevLex);

  Kind kind() const { return kind_; }
  TieBreak tieBreak() const { return tie_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Copy with every row padded or truncated to `nvars` entries.
  MonomialOrder resized(std::size_t nvars) const;
  /// Copy with an extra leading row.
  MonomialOrder withLeadingRow(std::vector<int> row) const;

  /// Three-way comparison; rows must already have length >= nvars.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  /// True iff the order is a well-order with 1 smallest, i.e. every variable
  /// is greater than 1.
  bool isGlobal(std::size_t nvars) const;

  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.tie_ == b.tie_ && a.rows_ == b.rows_;
  }

 private:
  Kind kind_ = Kind::DegRevLex;
  TieBreak tie_ = TieBreak::DegRevLex;
  std::vector<std::vector<int>> rows_;
};

}  // namespace dmod
