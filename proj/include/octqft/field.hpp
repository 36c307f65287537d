#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace octqft {

/// The ground field: the rationals or a prime field F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec(); }
  /// Throws Input/NotPrime unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Parses "rational", "Q", "prime:p", "F_p" or a bare decimal prime.
  static FieldSpec parse(const std::string& text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(FieldSpec a, FieldSpec b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(FieldSpec a, FieldSpec b) noexcept { return a.p_ != b.p_; }

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator, prime-field elements as residues in [0, p), so equal
/// values always have identical representations.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  explicit Scalar(FieldSpec field) : field_(field) {}
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, long num, long den);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }
  /// "a/b", "a" or "-a/b"; prime fields also accept any integer, reduced mod p.
  static Scalar parse(FieldSpec field, const std::string& text);

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  /// this += a * b without a temporary for the prime-field case.
  void add_product(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  bool operator==(const Scalar& o) const noexcept;
  bool operator!=(const Scalar& o) const noexcept { return !(*this == o); }

  std::string to_string() const;
  const mpq_class& rational_value() const { return q_; }
  std::uint32_t residue() const noexcept { return residue_; }

 private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::uint32_t residue_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec f, std::size_t n);
Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i);
bool is_zero_vector(const Vector& v);

}  // namespace octqft
