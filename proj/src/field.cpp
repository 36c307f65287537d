#include "octqft/field.hpp"

#include <cctype>
#include <ostream>

#include "octqft/errors.hpp"

namespace octqft {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw input_error("NotPrime", "field characteristic " + std::to_string(p) + " is not a supported prime");
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rational" || text == "Q" || text == "q") return rational();
  std::string digits = text;
  for (const char* prefix : {"prime:", "F_", "F", "p"}) {
    const std::string pre(prefix);
    if (digits.rfind(pre, 0) == 0) {
      digits = digits.substr(pre.size());
      break;
    }
  }
  if (digits.empty() || digits.size() > 10)
    throw input_error("ParseError", "unrecognized field '" + text + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw input_error("ParseError", "unrecognized field '" + text + "'");
  return prime(std::stoull(digits));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("rational") : "prime:" + std::to_string(p_);
}

namespace {

std::uint32_t reduce(FieldSpec f, long v) {
  const long p = f.characteristic();
  long r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_mpz(FieldSpec f, const mpz_class& v) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), f.characteristic());
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field.is_rational())
    q_ = value;
  else
    residue_ = reduce(field, value);
}

Scalar::Scalar(FieldSpec field, long num, long den) : Scalar(field, num) {
  if (den == 0) throw math_error("DivisionByZero", "zero denominator");
  *this = *this / Scalar(field, den);
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
  } else {
    const std::uint32_t den = reduce_mpz(field, value.get_den());
    if (den == 0) throw math_error("DivisionByZero", "denominator divisible by the characteristic");
    residue_ = static_cast<std::uint32_t>(
        std::uint64_t(reduce_mpz(field, value.get_num())) * mod_inverse(den, field.characteristic()) %
        field.characteristic());
  }
}

Scalar Scalar::parse(FieldSpec field, const std::string& text) {
  mpq_class q;
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw input_error("ParseError", "bad coefficient '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw input_error("ParseError", "zero denominator in '" + text + "'");
  q = mpq_class(n, d);
  q.canonicalize();
  if (field.is_rational() && slash != std::string::npos && (q.get_den() != d || q.get_num() != n))
    throw input_error("ParseError", "coefficient '" + text + "' is not in lowest terms");
  return Scalar(field, q);
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? sgn(q_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? q_ == 1 : residue_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw input_error("FieldMismatch", field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r(*this);
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r(*this);
  r -= o;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r(*this);
  r *= o;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = -q_;
  else
    r.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    residue_ = static_cast<std::uint32_t>((std::uint64_t(residue_) + o.residue_) % field_.characteristic());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    residue_ = static_cast<std::uint32_t>(
        (std::uint64_t(residue_) + field_.characteristic() - o.residue_) % field_.characteristic());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    residue_ = static_cast<std::uint32_t>(std::uint64_t(residue_) * o.residue_ % field_.characteristic());
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  check_same_field(b);
  if (field_.is_rational()) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    q_ += t;
  } else {
    const std::uint64_t p = field_.characteristic();
    residue_ = static_cast<std::uint32_t>((residue_ + std::uint64_t(a.residue_) * b.residue_ % p) % p);
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw math_error("DivisionByZero", "inverse of zero");
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.residue_ = mod_inverse(residue_, field_.characteristic());
  return r;
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Scalar result = one(field_);
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const noexcept {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? q_ == o.q_ : residue_ == o.residue_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Vector zero_vector(FieldSpec f, std::size_t n) { return Vector(n, Scalar(f)); }

Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace octqft
