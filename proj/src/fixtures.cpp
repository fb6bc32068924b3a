#include "bhopf/fixtures.hpp"

#include <string>
#include <vector>

#include "bhopf/errors.hpp"

namespace bhopf::fixtures {

namespace {

struct Matrix {
  FieldSpec field;
  std::size_t dom, cod;
  std::vector<Scalar> e;

  Matrix(const FieldSpec& f, std::size_t d, std::size_t c) : field(f), dom(d), cod(c), e(d * c, Scalar::zero(f)) {}
  Scalar& operator()(std::size_t row, std::size_t col) { return e[row * dom + col]; }
  Morphism done() { return Morphism(field, dom, cod, std::move(e)); }
};

std::string power_label(const char* var, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return var;
  return std::string(var) + "^" + std::to_string(k);
}

// Hopf algebra of a finite group given by its multiplication table.
HopfBundle group_algebra(const FieldSpec& field, std::vector<std::string> labels,
                         const std::vector<std::vector<std::size_t>>& table,
                         const std::vector<std::size_t>& inverse) {
  const auto n = labels.size();
  const auto one = Scalar::one(field);
  Matrix mu(field, n * n, n), eta(field, 1, n), delta(field, n, n * n), eps(field, n, 1), s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mu(table[a][b], a * n + b) = one;
    delta(a * n + a, a) = one;
    eps(0, a) = one;
    s(inverse[a], a) = one;
  }
  eta(0, 0) = one;  // the identity element is listed first
  return HopfBundle(field, std::move(labels), mu.done(), eta.done(), delta.done(), eps.done(),
                    Morphism::swap(field, n, n), s.done());
}

}  // namespace

HopfBundle trivial(const FieldSpec& field) {
  const auto one = Morphism::identity(field, 1);
  return HopfBundle(field, {"1"}, one, one, one, one, one, one);
}

HopfBundle cyclic_group_algebra(std::size_t n, const FieldSpec& field) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(a == 0 ? "e" : power_label("g", a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    inverse[a] = (n - a) % n;
  }
  return group_algebra(field, std::move(labels), table, inverse);
}

HopfBundle product_group_algebra(std::size_t m, std::size_t n, const FieldSpec& field) {
  const auto size = m * n;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(size, std::vector<std::size_t>(size));
  std::vector<std::size_t> inverse(size);
  for (std::size_t a = 0; a < size; ++a) {
    labels.push_back("(" + std::to_string(a / n) + "," + std::to_string(a % n) + ")");
    for (std::size_t b = 0; b < size; ++b)
      table[a][b] = ((a / n + b / n) % m) * n + (a % n + b % n) % n;
    inverse[a] = ((m - a / n) % m) * n + (n - a % n) % n;
  }
  return group_algebra(field, std::move(labels), table, inverse);
}

Scalar q_binomial(std::size_t n, std::size_t k, const Scalar& q) {
  const auto field = q.field();
  if (k > n) return Scalar::zero(field);
  // row[j] = [i choose j]_q, [i choose j] = [i-1 choose j-1] + q^j [i-1 choose j]
  std::vector<Scalar> row(n + 1, Scalar::zero(field));
  row[0] = Scalar::one(field);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j >= 1; --j) row[j] = row[j - 1] + q.pow(static_cast<std::int64_t>(j)) * row[j];
  return row[k];
}

HopfBundle braided_line(std::size_t n, const Scalar& q) {
  const auto field = q.field();
  const auto one = Scalar::one(field);
  if (n == 0 || !q.pow(static_cast<std::int64_t>(n)).is_one())
    throw FormatError("q is not an N-th root of unity");
  for (std::size_t k = 1; k < n; ++k)
    if (q.pow(static_cast<std::int64_t>(k)).is_one()) throw FormatError("q is not a primitive N-th root of unity");

  Matrix mu(field, n * n, n), eta(field, 1, n), delta(field, n, n * n), eps(field, n, 1), braid(field, n * n, n * n),
      s(field, n, n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(power_label("x", a));
    for (std::size_t b = 0; b < n; ++b) {
      if (a + b < n) mu(a + b, a * n + b) = one;
      braid(b * n + a, a * n + b) = q.pow(static_cast<std::int64_t>(a * b));
    }
    for (std::size_t k = 0; k <= a; ++k) delta(k * n + (a - k), a) = q_binomial(a, k, q);
    const auto sign = a % 2 == 0 ? one : -one;
    s(a, a) = sign * q.pow(static_cast<std::int64_t>(a == 0 ? 0 : a * (a - 1) / 2));
  }
  eta(0, 0) = one;
  eps(0, 0) = one;
  return HopfBundle(field, std::move(labels), mu.done(), eta.done(), delta.done(), eps.done(), braid.done(), s.done());
}

Morphism scalar_cross_braid(std::size_t dim_l, std::size_t dim_h, const Scalar& r) {
  Matrix c(r.field(), dim_l * dim_h, dim_h * dim_l);
  for (std::size_t i = 0; i < dim_l; ++i)
    for (std::size_t j = 0; j < dim_h; ++j) c(j * dim_l + i, i * dim_h + j) = r.pow(static_cast<std::int64_t>(i * j));
  return c.done();
}

HopfBundle idempotent_bialgebra(const FieldSpec& field) {
  const auto one = Scalar::one(field);
  Matrix mu(field, 4, 2), eta(field, 1, 2), delta(field, 2, 4), eps(field, 2, 1);
  // 1·1 = 1, 1·t = t·1 = t·t = t
  mu(0, 0) = one;
  mu(1, 1) = one;
  mu(1, 2) = one;
  mu(1, 3) = one;
  eta(0, 0) = one;
  delta(0, 0) = one;
  delta(3, 1) = one;
  eps(0, 0) = one;
  eps(0, 1) = one;
  return HopfBundle(field, {"1", "t"}, mu.done(), eta.done(), delta.done(), eps.done(), Morphism::swap(field, 2, 2));
}

}  // namespace bhopf::fixtures
