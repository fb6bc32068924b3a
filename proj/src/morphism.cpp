#include "bhopf/morphism.hpp"

#include <sstream>
#include <utility>

#include "bhopf/errors.hpp"

namespace bhopf {

namespace {

void require_same_field(const Morphism& a, const Morphism& b) {
  if (a.field() != b.field())
    throw FieldMismatch("morphisms over " + a.field().name() + " and " + b.field().name());
}

std::string dims(const Morphism& f) {
  return std::to_string(f.dom()) + "->" + std::to_string(f.cod());
}

// Reduced row echelon form in place. Pivot: first nonzero entry at or below the
// current row, scanning columns left to right. Returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<Scalar>& m, std::size_t rows, std::size_t cols,
                                    std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p * cols + col].is_zero()) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m[p * cols + c], m[row * cols + c]);
    auto inv = m[row * cols + col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[row * cols + c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r * cols + col].is_zero()) continue;
      auto factor = m[r * cols + col];
      for (std::size_t c = col; c < cols; ++c) {
        if (m[row * cols + c].is_zero()) continue;
        m[r * cols + c] -= factor * m[row * cols + c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Morphism::Morphism(FieldSpec field, std::size_t dom, std::size_t cod, std::vector<Scalar> entries)
    : field_(field), dom_(dom), cod_(cod), entries_(std::move(entries)) {
  if (entries_.size() != dom_ * cod_)
    throw DimensionMismatch("matrix " + std::to_string(cod_) + "x" + std::to_string(dom_) + " given " +
                            std::to_string(entries_.size()) + " entries");
  for (const auto& e : entries_)
    if (e.field() != field_) throw FieldMismatch("matrix entry outside " + field_.name());
}

Morphism Morphism::zero(const FieldSpec& field, std::size_t dom, std::size_t cod) {
  return Morphism(field, dom, cod, std::vector<Scalar>(dom * cod, Scalar::zero(field)));
}

Morphism Morphism::identity(const FieldSpec& field, std::size_t n) {
  std::vector<Scalar> e(n * n, Scalar::zero(field));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Scalar::one(field);
  return Morphism(field, n, n, std::move(e));
}

Morphism Morphism::swap(const FieldSpec& field, std::size_t left, std::size_t right) {
  const auto n = left * right;
  std::vector<Scalar> e(n * n, Scalar::zero(field));
  for (std::size_t i = 0; i < left; ++i)
    for (std::size_t j = 0; j < right; ++j) e[(j * left + i) * n + (i * right + j)] = Scalar::one(field);
  return Morphism(field, n, n, std::move(e));
}

Morphism Morphism::parse_rows(const FieldSpec& field, const std::vector<std::vector<std::string>>& rows,
                              std::size_t dom_if_empty) {
  const auto cod = rows.size();
  const auto dom = cod == 0 ? dom_if_empty : rows.front().size();
  std::vector<Scalar> e;
  e.reserve(dom * cod);
  for (const auto& row : rows) {
    if (row.size() != dom) throw FormatError("ragged matrix rows");
    for (const auto& s : row) e.push_back(Scalar::parse(s, field));
  }
  return Morphism(field, dom, cod, std::move(e));
}

bool Morphism::is_identity() const {
  return dom_ == cod_ && *this == identity(field_, dom_);
}

std::vector<std::vector<std::string>> Morphism::to_rows() const {
  std::vector<std::vector<std::string>> rows(cod_);
  for (std::size_t r = 0; r < cod_; ++r) {
    rows[r].reserve(dom_);
    for (std::size_t c = 0; c < dom_; ++c) rows[r].push_back(at(r, c).to_string());
  }
  return rows;
}

bool Morphism::operator==(const Morphism& rhs) const {
  return field_ == rhs.field_ && dom_ == rhs.dom_ && cod_ == rhs.cod_ && entries_ == rhs.entries_;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  require_same_field(g, f);
  if (f.cod() != g.dom()) throw DimensionMismatch("compose " + dims(g) + " after " + dims(f));
  const auto& field = f.field();
  const auto n = f.dom(), m = g.cod(), inner = f.cod();
  std::vector<Scalar> out(n * m, Scalar::zero(field));
  for (std::size_t k = 0; k < inner; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& fkj = f.at(k, j);
      if (fkj.is_zero()) continue;
      for (std::size_t i = 0; i < m; ++i) {
        const auto& gik = g.at(i, k);
        if (!gik.is_zero()) out[i * n + j] += gik * fkj;
      }
    }
  }
  return Morphism(field, n, m, std::move(out));
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  require_same_field(f, g);
  const auto& field = f.field();
  const auto dom = f.dom() * g.dom(), cod = f.cod() * g.cod();
  std::vector<Scalar> out(dom * cod, Scalar::zero(field));
  for (std::size_t fr = 0; fr < f.cod(); ++fr)
    for (std::size_t fc = 0; fc < f.dom(); ++fc) {
      const auto& a = f.at(fr, fc);
      if (a.is_zero()) continue;
      for (std::size_t gr = 0; gr < g.cod(); ++gr)
        for (std::size_t gc = 0; gc < g.dom(); ++gc) {
          const auto& b = g.at(gr, gc);
          if (!b.is_zero()) out[(fr * g.cod() + gr) * dom + fc * g.dom() + gc] = a * b;
        }
    }
  return Morphism(field, dom, cod, std::move(out));
}

Morphism tensor(std::initializer_list<Morphism> factors, const FieldSpec& field) {
  auto out = Morphism::identity(field, 1);
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

Morphism scale(const Scalar& s, const Morphism& f) {
  std::vector<Scalar> e(f.entries().begin(), f.entries().end());
  for (auto& x : e) x *= s;
  return Morphism(f.field(), f.dom(), f.cod(), std::move(e));
}

Morphism add(const Morphism& f, const Morphism& g) {
  require_same_field(f, g);
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw DimensionMismatch("add " + dims(f) + " and " + dims(g));
  std::vector<Scalar> e(f.entries().begin(), f.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += g.entries()[i];
  return Morphism(f.field(), f.dom(), f.cod(), std::move(e));
}

std::optional<Morphism> solve_linear(const Morphism& a, const Morphism& b) {
  require_same_field(a, b);
  if (a.cod() != b.cod() || b.dom() != 1)
    throw DimensionMismatch("solve " + dims(a) + " against " + dims(b));
  const auto rows = a.cod(), n = a.dom(), cols = n + 1;
  std::vector<Scalar> m;
  m.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.push_back(a.at(r, c));
    m.push_back(b.at(r, 0));
  }
  auto pivots = row_reduce(m, rows, cols, n);
  for (std::size_t r = pivots.size(); r < rows; ++r)
    if (!m[r * cols + n].is_zero()) return std::nullopt;
  std::vector<Scalar> x(n, Scalar::zero(a.field()));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r * cols + n];
  return Morphism(a.field(), 1, n, std::move(x));
}

std::optional<Morphism> invert(const Morphism& f) {
  if (f.dom() != f.cod()) throw DimensionMismatch("invert non-square " + dims(f));
  const auto n = f.dom(), cols = 2 * n;
  std::vector<Scalar> m(n * cols, Scalar::zero(f.field()));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r * cols + c] = f.at(r, c);
    m[r * cols + n + r] = Scalar::one(f.field());
  }
  if (row_reduce(m, n, cols, n).size() != n) return std::nullopt;
  std::vector<Scalar> inv;
  inv.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.push_back(m[r * cols + n + c]);
  return Morphism(f.field(), n, n, std::move(inv));
}

std::size_t rank(const Morphism& f) {
  std::vector<Scalar> m(f.entries().begin(), f.entries().end());
  return row_reduce(m, f.cod(), f.dom(), f.dom()).size();
}

Morphism kernel(const Morphism& f) {
  const auto rows = f.cod(), n = f.dom();
  std::vector<Scalar> m(f.entries().begin(), f.entries().end());
  auto pivots = row_reduce(m, rows, n, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const auto k = free_cols.size();
  std::vector<Scalar> basis(n * k, Scalar::zero(f.field()));
  for (std::size_t j = 0; j < k; ++j) {
    basis[free_cols[j] * k + j] = Scalar::one(f.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) basis[pivots[r] * k + j] = -m[r * n + free_cols[j]];
  }
  return Morphism(f.field(), k, n, std::move(basis));
}

std::string to_string(const Morphism& f) {
  std::ostringstream out;
  for (std::size_t r = 0; r < f.cod(); ++r) {
    out << '[';
    for (std::size_t c = 0; c < f.dom(); ++c) out << (c ? " " : "") << f.at(r, c).to_string();
    out << "]\n";
  }
  return out.str();
}

}  // namespace bhopf
