#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "jordantype/error.hpp"
#include "jordantype/random.hpp"

namespace jt {

struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint32_t prime = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint32_t p);
  // Accepts "Q" or "Fp:<p>".
  static FieldSpec parse(const std::string& text);

  bool is_rational() const { return kind == Kind::Rationals; }
  std::uint32_t characteristic() const { return is_rational() ? 0 : prime; }
  std::string str() const;
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

class Rational {
 public:
  Rational() = default;
  explicit Rational(long n) : v_(n) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& value() const { return v_; }
  mpq_class& raw() { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  Rational inverse() const;

 private:
  mpq_class v_;
};

// a -= f * b, without temporaries where the type allows it.
inline void sub_mul(Rational& a, const Rational& f, const Rational& b) {
  mpq_class t;
  mpq_mul(t.get_mpq_t(), f.value().get_mpq_t(), b.value().get_mpq_t());
  mpq_sub(a.raw().get_mpq_t(), a.raw().get_mpq_t(), t.get_mpq_t());
}

class Residue {
 public:
  Residue() = default;
  Residue(std::uint32_t value, std::uint32_t p) : v_(value % p), p_(p) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::string str() const { return std::to_string(v_); }

  Residue& operator+=(const Residue& o) {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  Residue& operator/=(const Residue& o) { return *this *= o.inverse(); }
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  friend Residue operator-(const Residue& a) { return Residue(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend bool operator==(const Residue& a, const Residue& b) { return a.v_ == b.v_; }

  Residue inverse() const;

 private:
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

inline void sub_mul(Residue& a, const Residue& f, const Residue& b) { a -= f * b; }

template <class K>
class Field;

template <>
class Field<Rational> {
 public:
  Field() = default;
  static Field from_spec(const FieldSpec& spec);

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }
  Rational from_rational(const mpq_class& q) const { return Rational(q); }
  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }
  // Integer coordinates drawn uniformly from [-bound, bound].
  Rational random(Rng& rng, long bound) const {
    return Rational(rng.uniform_int(-bound, bound));
  }
};

template <>
class Field<Residue> {
 public:
  explicit Field(std::uint32_t p = 2) : p_(p) {}
  static Field from_spec(const FieldSpec& spec);

  Residue zero() const { return Residue(0, p_); }
  Residue one() const { return Residue(1, p_); }
  Residue from_int(long n) const;
  Residue from_rational(const mpq_class& q) const;
  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime_field(p_); }
  Residue random(Rng& rng, long /*bound*/) const {
    return Residue(static_cast<std::uint32_t>(rng.uniform_int(0, p_ - 1)), p_);
  }

 private:
  std::uint32_t p_;
};

template <class K>
using Vec = std::vector<K>;

template <class K>
bool is_zero_vector(const Vec<K>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace jt
