#include "brace_forge/scalar.hpp"

#include <charconv>
#include <limits>

#include "brace_forge/error.hpp"

namespace brace_forge {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (c < '0' || c > '9')
      return false;
  return true;
}

bool has_leading_zero(std::string_view s) { return s.size() > 1 && s.front() == '0'; }

} // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorKind::InvalidField, "prime field characteristic out of range: " +
                                             std::to_string(p));
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw Error(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "Q")
    return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (spec.substr(0, prefix.size()) == prefix) {
    auto digits = spec.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && is_digits(digits) &&
        !has_leading_zero(digits))
      return prime(p);
  }
  throw Error(ErrorKind::InvalidField, "expected \"Q\" or \"Fp:<prime>\", got \"" +
                                           std::string(spec) + "\"");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field), value_(value) { reduce(); }

Scalar::Scalar(Field field, const mpq_class &value) : field_(field), value_(value) {
  value_.canonicalize();
  reduce();
}

void Scalar::reduce() {
  if (field_.is_rational())
    return;
  const unsigned long p = static_cast<unsigned long>(field_.characteristic());
  if (mpz_cmp_ui(value_.get_den_mpz_t(), 1) != 0) {
    mpz_class modulus(p);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), value_.get_den_mpz_t(), modulus.get_mpz_t()) == 0)
      throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + field_.to_string());
    mpz_class num = value_.get_num() * inv;
    mpq_set_ui(value_.get_mpq_t(), mpz_fdiv_ui(num.get_mpz_t(), p), 1);
    return;
  }
  mpq_set_ui(value_.get_mpq_t(), mpz_fdiv_ui(value_.get_num_mpz_t(), p), 1);
}

void Scalar::require_same_field(const Scalar &other) const {
  if (field_ != other.field_)
    throw Error(ErrorKind::FieldMismatch,
                "scalars over " + field_.to_string() + " and " + other.field_.to_string());
}

Scalar Scalar::parse(Field field, std::string_view text) {
  const std::string original(text);
  if (field.is_rational()) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
      negative = true;
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    auto num_part = body.substr(0, slash);
    auto den_part = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!is_digits(num_part) || (slash != std::string_view::npos && !is_digits(den_part)))
      throw Error(ErrorKind::ParseError, "not a rational literal: \"" + original + "\"");
    if (has_leading_zero(num_part) || has_leading_zero(den_part))
      throw Error(ErrorKind::CanonicalFormError, "leading zero in \"" + original + "\"");
    mpz_class num{std::string(num_part)};
    mpz_class den(1);
    if (slash != std::string_view::npos) {
      den = mpz_class(std::string(den_part));
      if (den == 0)
        throw Error(ErrorKind::ParseError, "zero denominator in \"" + original + "\"");
      if (den == 1)
        throw Error(ErrorKind::CanonicalFormError, "unit denominator in \"" + original + "\"");
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (g != 1)
        throw Error(ErrorKind::CanonicalFormError, "non-reduced fraction \"" + original + "\"");
    }
    if (negative && num == 0)
      throw Error(ErrorKind::CanonicalFormError, "negative zero \"" + original + "\"");
    if (negative)
      num = -num;
    return Scalar(field, mpq_class(num, den));
  }
  if (!is_digits(text))
    throw Error(ErrorKind::ParseError, "not a residue literal: \"" + original + "\"");
  if (has_leading_zero(text))
    throw Error(ErrorKind::CanonicalFormError, "leading zero in \"" + original + "\"");
  mpz_class r(original);
  if (r >= mpz_class(static_cast<unsigned long>(field.characteristic())))
    throw Error(ErrorKind::CanonicalFormError,
                "residue \"" + original + "\" not in [0, " +
                    std::to_string(field.characteristic()) + ")");
  return Scalar(field, mpq_class(r));
}

std::string Scalar::to_string() const { return value_.get_str(); }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.value_ = -value_;
  out.reduce();
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  out.value_ = 1 / value_;
  out.value_.canonicalize();
  out.reduce();
  return out;
}

Scalar &Scalar::operator+=(const Scalar &rhs) {
  require_same_field(rhs);
  value_ += rhs.value_;
  reduce();
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs) {
  require_same_field(rhs);
  value_ -= rhs.value_;
  reduce();
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &rhs) {
  require_same_field(rhs);
  value_ *= rhs.value_;
  reduce();
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

} // namespace brace_forge
