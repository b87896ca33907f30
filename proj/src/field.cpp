#include "jordantype/field.hpp"

#include <charconv>

namespace jt {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgs: return "InvalidArgs";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotArtinian: return "NotArtinian";
    case ErrorCode::NonUnitConstants: return "NonUnitConstants";
    case ErrorCode::A0NotField: return "A0NotField";
    case ErrorCode::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case ErrorCode::EmptySubspace: return "EmptySubspace";
    case ErrorCode::IncomparableSamples: return "IncomparableSamples";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::StabilityViolation: return "StabilityViolation";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorCode::InvalidArgs, "field characteristic " + std::to_string(p) +
                                            " is not a prime below 2^31");
  FieldSpec s;
  s.kind = Kind::Prime;
  s.prime = p;
  return s;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::uint32_t p = 0;
    const char* begin = text.data() + 3;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, p);
    if (ec == std::errc() && ptr == end && begin != end) return prime_field(p);
  }
  throw Error(ErrorCode::InvalidSpec, "field must be \"Q\" or \"Fp:<prime>\", got \"" + text + "\"");
}

std::string FieldSpec::str() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(prime);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgs, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgs, "division by zero");
  return Rational(mpq_class(1) / v_);
}

Residue Residue::inverse() const {
  if (v_ == 0) throw Error(ErrorCode::InvalidArgs, "division by zero");
  std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  x0 %= static_cast<std::int64_t>(p_);
  if (x0 < 0) x0 += p_;
  return Residue(static_cast<std::uint32_t>(x0), p_);
}

Field<Rational> Field<Rational>::from_spec(const FieldSpec& spec) {
  if (!spec.is_rational()) throw Error(ErrorCode::InvalidArgs, "field spec is not Q");
  return {};
}

Field<Residue> Field<Residue>::from_spec(const FieldSpec& spec) {
  if (spec.is_rational()) throw Error(ErrorCode::InvalidArgs, "field spec is not a prime field");
  return Field<Residue>(spec.prime);
}

Residue Field<Residue>::from_int(long n) const {
  long r = n % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Residue(static_cast<std::uint32_t>(r), p_);
}

Residue Field<Residue>::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0)
    throw Error(ErrorCode::InvalidArgs,
                "constant " + q.get_str() + " is not defined modulo " + std::to_string(p_));
  if (num < 0) num += p_;
  return Residue(static_cast<std::uint32_t>(num.get_ui()), p_) /
         Residue(static_cast<std::uint32_t>(den.get_ui()), p_);
}

}  // namespace jt
