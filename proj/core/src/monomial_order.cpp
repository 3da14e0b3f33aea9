#include "dmod/monomial_order.hpp"

#include <sstream>

namespace dmod {

MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder(); }

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.tie_ = TieBreak::Lex;
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<int> weight) {
  MonomialOrder o;
  o.kind_ = Kind::Weight;
  o.rows_.push_back(std::move(weight));
  return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<bool> eliminate) {
  MonomialOrder o;
  o.kind_ = Kind::BlockElimination;
  std::vector<int> row(eliminate.size());
  for (std::size_t i = 0; i < eliminate.size(); ++i) row[i] = eliminate[i] ? 1 : 0;
  o.rows_.push_back(std::move(row));
  return o;
}

MonomialOrder MonomialOrder::matrix(std::vector<std::vector<int>> rows, TieBreak tie) {
  MonomialOrder o;
  o.kind_ = rows.empty() ? (tie == TieBreak::Lex ? Kind::Lex : Kind::DegRevLex) : Kind::Weight;
  o.tie_ = tie;
  o.rows_ = std::move(rows);
  return o;
}

MonomialOrder MonomialOrder::resized(std::size_t nvars) const {
  MonomialOrder o = *this;
  for (auto& row : o.rows_) row.resize(nvars, 0);
  return o;
}

MonomialOrder MonomialOrder::withLeadingRow(std::vector<int> row) const {
  MonomialOrder o = *this;
  o.kind_ = Kind::Weight;
  o.rows_.insert(o.rows_.begin(), std::move(row));
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  if (a.component != b.component) return a.component < b.component ? 1 : -1;
  for (const auto& row : rows_) {
    long wa = 0, wb = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      wa += long(row[i]) * a.exp[i];
      wb += long(row[i]) * b.exp[i];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  if (tie_ == TieBreak::DegRevLex) {
    if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
    for (std::size_t i = nvars; i-- > 0;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }
  for (std::size_t i = 0; i < nvars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
  return 0;
}

bool MonomialOrder::isGlobal(std::size_t nvars) const {
  for (std::size_t i = 0; i < nvars; ++i) {
    for (const auto& row : rows_) {
      int w = i < row.size() ? row[i] : 0;
      if (w < 0) return false;
      if (w > 0) break;
    }
  }
  return true;
}

std::string MonomialOrder::describe() const {
  std::ostringstream out;
  for (const auto& row : rows_) {
    out << "weight(";
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << ") ";
  }
  out << (tie_ == TieBreak::DegRevLex ? "degrevlex" : "lex");
  return out.str();
}

}  // namespace dmod
