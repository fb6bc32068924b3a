#pragma once

/// Exact scalars over the rationals or a prime field 𝔽_p.
///
/// A Scalar carries its field: residues remember their modulus, rationals are
/// GMP fractions kept in canonical form (reduced, positive denominator).
/// Mixing fields in one operation throws FieldMismatch.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace bhopf {

class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws FormatError unless p is a prime below 2^31.
  static FieldSpec prime(std::int64_t p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::PrimeField; }
  std::uint32_t modulus() const { return p_; }

  /// "Q" or "F5".
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::int64_t n);

class Scalar {
 public:
  /// Zero of 𝔽_2; use zero(field) for anything meaningful.
  Scalar() : value_(Residue{0, 2}) {}

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, std::int64_t n);
  /// Rational n/d; for 𝔽_p this is n·d⁻¹.
  static Scalar from_fraction(const FieldSpec& field, std::int64_t n, std::int64_t d);

  /// Parses the canonical serialized form: "n" or "n/d" (reduced, d > 0) over ℚ,
  /// a decimal residue in [0, p) over 𝔽_p.
  static Scalar parse(std::string_view text, const FieldSpec& field);
  std::string to_string() const;

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  /// Throws DivisionByZero for zero.
  Scalar inverse() const;
  /// Negative exponents invert.
  Scalar pow(std::int64_t e) const;

  bool operator==(const Scalar& rhs) const;

 private:
  struct Residue {
    std::uint32_t v;
    std::uint32_t p;
  };

  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void require_same_field(const Scalar& rhs) const;

  std::variant<Residue, mpq_class> value_;
};

}  // namespace bhopf
