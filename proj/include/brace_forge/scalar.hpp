#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace brace_forge {

/// Exact base field: the rationals, or F_p for a prime p.
class Field {
public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws Error(InvalidField) unless p is prime.
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(std::string_view spec);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

private:
  explicit constexpr Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Element of a Field. Rationals are kept canonical (reduced, positive
/// denominator); F_p elements are residues in [0, p).
class Scalar {
public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class &value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }
  /// Strict canonical parse: "a" or "a/b" (b > 1, gcd 1) for Q, residue in
  /// [0, p) for F_p. Throws Error(CanonicalFormError) or Error(ParseError).
  static Scalar parse(Field field, std::string_view text);

  Field field() const { return field_; }
  const mpq_class &value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  std::string to_string() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar &operator+=(const Scalar &rhs);
  Scalar &operator-=(const Scalar &rhs);
  Scalar &operator*=(const Scalar &rhs);
  Scalar &operator/=(const Scalar &rhs);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

private:
  void require_same_field(const Scalar &other) const;
  void reduce();

  Field field_;
  mpq_class value_;
};

} // namespace brace_forge
