#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bimon/error.hpp"

namespace bimon {

// GMP keeps mpq values canonical (gcd 1, positive denominator) after
// every arithmetic operation.
using Rational = mpq_class;

// Parses "p/q" or "p". Throws std::invalid_argument on malformed text or a
// zero denominator.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

struct FreeModule {
  std::size_t dim = 0;
  std::string label;

  friend bool operator==(const FreeModule& a, const FreeModule& b) { return a.dim == b.dim; }
};

using Vector = std::vector<Rational>;

// Dense matrix of a linear map between based free modules: cod.dim rows,
// dom.dim columns, row-major. Column j is the image of the j-th basis vector.
class LinMap {
 public:
  LinMap() = default;
  LinMap(FreeModule dom, FreeModule cod);
  LinMap(FreeModule dom, FreeModule cod, std::vector<Rational> entries);

  static LinMap zero(FreeModule dom, FreeModule cod) { return LinMap(std::move(dom), std::move(cod)); }
  static LinMap identity(const FreeModule& m);
  // Rows given as nested lists of integers; convenient for fixtures.
  static LinMap from_rows(const FreeModule& dom, const FreeModule& cod,
                          const std::vector<std::vector<long>>& rows);

  const FreeModule& dom() const noexcept { return dom_; }
  const FreeModule& cod() const noexcept { return cod_; }
  std::size_t rows() const noexcept { return cod_.dim; }
  std::size_t cols() const noexcept { return dom_.dim; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Vector apply(const Vector& v) const;
  Vector column(std::size_t c) const;
  LinMap transpose() const;
  LinMap scaled(const Rational& s) const;
  LinMap relabeled(std::string dom_label, std::string cod_label) const;
  bool is_zero() const;

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.entries_ == b.entries_;
  }

 private:
  FreeModule dom_;
  FreeModule cod_;
  std::vector<Rational> entries_;
};

// g∘f. Throws DimensionMismatch when g.dom ≠ f.cod.
LinMap compose(const LinMap& g, const LinMap& f);
LinMap add(const LinMap& a, const LinMap& b);
LinMap subtract(const LinMap& a, const LinMap& b);

// Kronecker product. Basis vector e_i⊗e_j of X⊗Y sits at flat index
// i·dim(Y)+j; the same convention is used for every tensor word.
LinMap tensor_map(const LinMap& f, const LinMap& g);
FreeModule tensor_module(const FreeModule& x, const FreeModule& y);

// Reduced row echelon form of a list of row vectors of equal length.
struct RowEchelon {
  std::vector<Vector> rows;          // nonzero rows, leading entry 1
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t width = 0;
};

RowEchelon row_reduce(std::vector<Vector> rows, std::size_t width);
std::size_t rank(const LinMap& f);
std::vector<Vector> kernel_basis(const LinMap& f);
// Throws DimensionMismatch when f is not square or not invertible.
LinMap inverse(const LinMap& f);
// True when span(a) == span(b); vectors must share a length.
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t width);

struct Disagreement {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational lhs;
  Rational rhs;
  // Filled in by Category::equal; empty for raw matrix comparisons.
  std::string row_label;
  std::string col_label;
};

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::vector<Disagreement> disagreements;
  // Set when the two sides do not even have the same shape.
  std::string note;
};

class CheckOutcome {
 public:
  CheckOutcome() = default;

  void add(AxiomResult r) { axioms_.push_back(std::move(r)); }
  void add_all(const CheckOutcome& other, const std::string& prefix = {});

  bool passed() const;
  const std::vector<AxiomResult>& axioms() const noexcept { return axioms_; }
  std::vector<AxiomResult> residuals() const;
  const AxiomResult* find(const std::string& name) const;
  std::vector<std::string> failed_names() const;

 private:
  std::vector<AxiomResult> axioms_;
};

// Entrywise exact comparison. A dom/cod mismatch is reported as a failure
// with a note rather than thrown.
AxiomResult compare_maps(const std::string& name, const LinMap& lhs, const LinMap& rhs);
CheckOutcome map_equal(const LinMap& f, const LinMap& g);

}  // namespace bimon
