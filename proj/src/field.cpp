#include "bhopf/field.hpp"

#include <cctype>
#include <utility>

#include "bhopf/errors.hpp"

namespace bhopf {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !bhopf::is_prime(p))
    throw FormatError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return is_prime() ? "F" + std::to_string(p_) : "Q";
}

namespace {

std::uint32_t reduce(std::int64_t n, std::uint32_t p) {
  auto r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DivisionByZero();
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

bool is_canonical_natural(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t n) {
  if (field.is_prime()) return Scalar(Residue{reduce(n, field.modulus()), field.modulus()});
  return Scalar(mpq_class(static_cast<long>(n)));
}

Scalar Scalar::from_fraction(const FieldSpec& field, std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero();
  return from_int(field, n) / from_int(field, d);
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& field) {
  auto bad = [&] {
    return FormatError("malformed " + field.name() + " scalar \"" + std::string(text) + "\"");
  };
  if (field.is_prime()) {
    if (!is_canonical_natural(text) || text.size() > 10) throw bad();
    auto v = std::stoull(std::string(text));
    if (v >= field.modulus()) throw bad();
    return Scalar(Residue{static_cast<std::uint32_t>(v), field.modulus()});
  }
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!is_canonical_natural(num) || (negative && num == "0")) throw bad();
  mpz_class n{std::string(num)};
  if (negative) n = -n;
  if (slash == std::string_view::npos) return Scalar(mpq_class(n));
  auto den = text.substr(slash + 1);
  if (!is_canonical_natural(den)) throw bad();
  mpz_class d{std::string(den)};
  if (d <= 1) throw bad();
  mpq_class q(n, d);
  q.canonicalize();
  if (q.get_den() != d) throw bad();
  return Scalar(std::move(q));
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->v);
  return std::get<mpq_class>(value_).get_str();
}

FieldSpec Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&value_)) return FieldSpec(FieldSpec::Kind::PrimeField, r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->v == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->v == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (value_.index() != rhs.value_.index()) throw FieldMismatch("scalars from different fields");
  if (auto* r = std::get_if<Residue>(&value_); r && r->p != std::get<Residue>(rhs.value_).p)
    throw FieldMismatch("scalars from different prime fields");
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  Scalar out = *this;
  out += rhs;
  return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  Scalar out = *this;
  out -= rhs;
  return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  Scalar out = *this;
  out *= rhs;
  return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{r->v == 0 ? 0 : r->p - r->v, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    auto s = std::uint64_t{r->v} + std::get<Residue>(rhs.value_).v;
    r->v = static_cast<std::uint32_t>(s >= r->p ? s - r->p : s);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_))
    r->v = mul_mod(r->v, std::get<Residue>(rhs.value_).v, r->p);
  else
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{inv_mod(r->v, r->p), r->p});
  const auto& q = std::get<mpq_class>(value_);
  if (sgn(q) == 0) throw DivisionByZero();
  mpq_class inv = 1 / q;
  return Scalar(std::move(inv));
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = one(field());
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& rhs) const {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) return r->v == std::get<Residue>(rhs.value_).v;
  return std::get<mpq_class>(value_) == std::get<mpq_class>(rhs.value_);
}

}  // namespace bhopf
