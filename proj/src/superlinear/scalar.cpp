#include "superpair/superlinear/scalar.hpp"

#include <cctype>
#include <ostream>

namespace superpair {

namespace {

mpz_class reduce_mod(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) throw ArithmeticError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar Scalar::rational(const mpq_class& value) {
  Scalar s;
  s.value_ = value;
  s.value_.canonicalize();
  return s;
}

Scalar Scalar::residue(const mpz_class& value, std::uint64_t modulus) {
  Scalar s;
  s.modulus_ = modulus;
  s.value_ = mpq_class(modulus == 0 ? value : reduce_mod(value, modulus));
  return s;
}

Scalar Scalar::in_modulus(std::uint64_t modulus) const {
  if (modulus == modulus_ || modulus == 0) return *this;
  if (modulus_ != 0) throw ArithmeticError("scalars from different prime fields");
  mpz_class den = value_.get_den();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<unsigned long>(modulus)).get_mpz_t()) == 0) {
    throw ArithmeticError("denominator " + den.get_str() + " is not invertible mod " + std::to_string(modulus));
  }
  return residue(mpz_class(value_.get_num() * inv), modulus);
}

std::uint64_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.modulus_;
  if (a.modulus_ != 0 && b.modulus_ != 0) throw ArithmeticError("scalars from different prime fields");
  return a.modulus_ == 0 ? b.modulus_ : a.modulus_;
}

void Scalar::reduce() {
  if (modulus_ != 0) value_ = mpq_class(reduce_mod(value_.get_num(), modulus_));
}

Scalar& Scalar::operator+=(const Scalar& other) {
  const auto m = common_modulus(*this, other);
  if (m == 0) {
    value_ += other.value_;
    return *this;
  }
  *this = in_modulus(m);
  value_ += other.in_modulus(m).value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  const auto m = common_modulus(*this, other);
  if (m == 0) {
    value_ -= other.value_;
    return *this;
  }
  *this = in_modulus(m);
  value_ -= other.in_modulus(m).value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  const auto m = common_modulus(*this, other);
  if (m == 0) {
    value_ *= other.value_;
    return *this;
  }
  *this = in_modulus(m);
  value_ *= other.in_modulus(m).value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (modulus_ == 0) return rational(1 / value_);
  mpz_class inv;
  mpz_class num = value_.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mpz_class(static_cast<unsigned long>(modulus_)).get_mpz_t());
  return residue(inv, modulus_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.value_ = -s.value_;
  s.reduce();
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  const auto m = Scalar::common_modulus(a, b);
  return a.in_modulus(m).value_ == b.in_modulus(m).value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Field Field::prime(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "rationals") return rationals();
  std::string_view digits;
  if (text.rfind("prime:", 0) == 0) {
    digits = text.substr(6);
  } else if (!text.empty() && text.front() == 'F') {
    digits = text.substr(1);
  } else {
    throw std::invalid_argument("unknown field descriptor '" + std::string(text) + "'");
  }
  if (digits.empty()) throw std::invalid_argument("missing characteristic");
  std::uint64_t p = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed characteristic '" + std::string(digits) + "'");
    }
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return prime(p);
}

Scalar Field::operator()(long numerator, long denominator) const {
  return normalize(Scalar(numerator, denominator));
}

Scalar Field::normalize(const Scalar& s) const {
  if (p_ == 0) {
    if (s.modulus() != 0) throw ArithmeticError("prime-field element used as a rational");
    return s;
  }
  return s.in_modulus(p_);
}

Scalar Field::parse_scalar(std::string_view text) const {
  auto fail = [&]() -> Scalar {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  const auto slash = text.find('/');
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) return fail();
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in scalar '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return normalize(Scalar::rational(q));
}

std::string Field::describe() const { return p_ == 0 ? "rational" : "prime:" + std::to_string(p_); }

}  // namespace superpair
