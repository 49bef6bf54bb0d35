#include "bimon/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bimon {

HypothesisFailed::HypothesisFailed(std::vector<std::string> names)
    : Error([&] {
        std::string msg = "hypothesis failed:";
        for (const auto& n : names) msg += " " + n;
        return msg;
      }()),
      names_(std::move(names)) {}

bool HypothesisFailed::names_hypothesis(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

LinMap::LinMap(FreeModule dom, FreeModule cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), entries_(dom_.dim * cod_.dim) {}

LinMap::LinMap(FreeModule dom, FreeModule cod, std::vector<Rational> entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
  if (entries_.size() != dom_.dim * cod_.dim)
    throw DimensionMismatch("entry count " + std::to_string(entries_.size()) + " does not match " +
                            std::to_string(cod_.dim) + "x" + std::to_string(dom_.dim));
}

LinMap LinMap::identity(const FreeModule& m) {
  LinMap id(m, m);
  for (std::size_t i = 0; i < m.dim; ++i) id(i, i) = 1;
  return id;
}

LinMap LinMap::from_rows(const FreeModule& dom, const FreeModule& cod,
                         const std::vector<std::vector<long>>& rows) {
  if (rows.size() != cod.dim) throw DimensionMismatch("row count does not match codomain");
  LinMap f(dom, cod);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != dom.dim) throw DimensionMismatch("column count does not match domain");
    for (std::size_t c = 0; c < dom.dim; ++c) f(r, c) = rows[r][c];
  }
  return f;
}

Vector LinMap::apply(const Vector& v) const {
  if (v.size() != cols()) throw DimensionMismatch("vector length does not match domain");
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) {
      const auto& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(v[c]) != 0) out[r] += a * v[c];
    }
  return out;
}

Vector LinMap::column(std::size_t c) const {
  Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = (*this)(r, c);
  return out;
}

LinMap LinMap::transpose() const {
  LinMap t(cod_, dom_);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
  return t;
}

LinMap LinMap::scaled(const Rational& s) const {
  LinMap out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

LinMap LinMap::relabeled(std::string dom_label, std::string cod_label) const {
  LinMap out = *this;
  out.dom_.label = std::move(dom_label);
  out.cod_.label = std::move(cod_label);
  return out;
}

bool LinMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (g.dom().dim != f.cod().dim)
    throw DimensionMismatch("cannot compose: " + std::to_string(g.dom().dim) + "-dim domain after " +
                            std::to_string(f.cod().dim) + "-dim codomain");
  LinMap out(f.dom(), g.cod());
  const std::size_t n = g.rows(), m = g.cols(), p = f.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const Rational& a = g(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < p; ++j) {
        const Rational& b = f(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  return out;
}

namespace {

void require_same_shape(const LinMap& a, const LinMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("maps have different shapes");
}

}  // namespace

LinMap add(const LinMap& a, const LinMap& b) {
  require_same_shape(a, b);
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return LinMap(a.dom(), a.cod(), std::move(e));
}

LinMap subtract(const LinMap& a, const LinMap& b) {
  require_same_shape(a, b);
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return LinMap(a.dom(), a.cod(), std::move(e));
}

FreeModule tensor_module(const FreeModule& x, const FreeModule& y) {
  std::string label;
  if (x.label.empty())
    label = y.label;
  else if (y.label.empty())
    label = x.label;
  else
    label = x.label + "⊗" + y.label;
  return {x.dim * y.dim, std::move(label)};
}

LinMap tensor_map(const LinMap& f, const LinMap& g) {
  LinMap out(tensor_module(f.dom(), g.dom()), tensor_module(f.cod(), g.cod()));
  const std::size_t gr = g.rows(), gc = g.cols();
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Rational& a = f(i, j);
      if (sgn(a) == 0) continue;
      for (std::size_t k = 0; k < gr; ++k)
        for (std::size_t l = 0; l < gc; ++l) {
          const Rational& b = g(k, l);
          if (sgn(b) != 0) out(i * gr + k, j * gc + l) = a * b;
        }
    }
  return out;
}

RowEchelon row_reduce(std::vector<Vector> rows, std::size_t width) {
  RowEchelon out;
  out.width = width;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < width && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rational inv = 1 / rows[lead][col];
    for (std::size_t c = col; c < width; ++c)
      if (sgn(rows[lead][c]) != 0) rows[lead][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || sgn(rows[r][col]) == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c)
        if (sgn(rows[lead][c]) != 0) rows[r][c] -= factor * rows[lead][c];
    }
    out.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  return out;
}

namespace {

std::vector<Vector> rows_of(const LinMap& f) {
  std::vector<Vector> rows(f.rows(), Vector(f.cols()));
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) rows[r][c] = f(r, c);
  return rows;
}

}  // namespace

std::size_t rank(const LinMap& f) { return row_reduce(rows_of(f), f.cols()).pivots.size(); }

std::vector<Vector> kernel_basis(const LinMap& f) {
  const auto ech = row_reduce(rows_of(f), f.cols());
  std::vector<bool> is_pivot(f.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < f.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(f.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.rows.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

LinMap inverse(const LinMap& f) {
  const std::size_t n = f.rows();
  if (f.cols() != n) throw DimensionMismatch("inverse of a non-square map");
  std::vector<Vector> aug(n, Vector(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = f(r, c);
    aug[r][n + r] = 1;
  }
  const auto ech = row_reduce(std::move(aug), 2 * n);
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
    throw DimensionMismatch("map is not invertible");
  LinMap inv(f.cod(), f.dom());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.rows[r][n + c];
  return inv;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t width) {
  const auto ra = row_reduce(a, width);
  const auto rb = row_reduce(b, width);
  return ra.pivots == rb.pivots && ra.rows == rb.rows;
}

void CheckOutcome::add_all(const CheckOutcome& other, const std::string& prefix) {
  for (auto r : other.axioms_) {
    r.name = prefix + r.name;
    axioms_.push_back(std::move(r));
  }
}

bool CheckOutcome::passed() const {
  return std::all_of(axioms_.begin(), axioms_.end(), [](const AxiomResult& r) { return r.passed; });
}

std::vector<AxiomResult> CheckOutcome::residuals() const {
  std::vector<AxiomResult> out;
  std::copy_if(axioms_.begin(), axioms_.end(), std::back_inserter(out),
               [](const AxiomResult& r) { return !r.passed; });
  return out;
}

const AxiomResult* CheckOutcome::find(const std::string& name) const {
  for (const auto& r : axioms_)
    if (r.name == name || r.name.rfind(name + ":", 0) == 0) return &r;
  return nullptr;
}

std::vector<std::string> CheckOutcome::failed_names() const {
  std::vector<std::string> out;
  for (const auto& r : axioms_)
    if (!r.passed) out.push_back(r.name);
  return out;
}

AxiomResult compare_maps(const std::string& name, const LinMap& lhs, const LinMap& rhs) {
  AxiomResult res;
  res.name = name;
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    res.passed = false;
    std::ostringstream os;
    os << "shape mismatch: " << lhs.rows() << "x" << lhs.cols() << " vs " << rhs.rows() << "x" << rhs.cols();
    res.note = os.str();
    return res;
  }
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (lhs(r, c) != rhs(r, c)) res.disagreements.push_back({r, c, lhs(r, c), rhs(r, c), {}, {}});
  res.passed = res.disagreements.empty();
  return res;
}

CheckOutcome map_equal(const LinMap& f, const LinMap& g) {
  CheckOutcome out;
  out.add(compare_maps("equal", f, g));
  return out;
}

}  // namespace bimon
