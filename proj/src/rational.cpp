#include "shiftdc/rational.hpp"

#include <charconv>
#include <functional>
#include <stdexcept>

namespace shiftdc {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0)
    throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0)
    throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty())
    return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-')
    i = 1;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      return false;
  return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  if (!valid_integer(num_part, true))
    throw std::invalid_argument("Rational: malformed numerator in '" + std::string(text) + "'");
  mpz_class num(std::string(num_part), 10);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_part = text.substr(slash + 1);
    if (!valid_integer(den_part, false))
      throw std::invalid_argument("Rational: malformed denominator in '" + std::string(text) + "'");
    den = mpz_class(std::string(den_part), 10);
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (q_.get_den() == 1)
    return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero())
    throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long exponent) const {
  Rational base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.q_.get_den_mpz_t(), e);
  return Rational(mpq_class(n, d));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational &Rational::operator+=(const Rational &o) {
  q_ += o.q_;
  return *this;
}
Rational &Rational::operator-=(const Rational &o) {
  q_ -= o.q_;
  return *this;
}
Rational &Rational::operator*=(const Rational &o) {
  q_ *= o.q_;
  return *this;
}
Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::hash() const {
  // Stable within a process; never serialized.
  const std::size_t h1 = std::hash<std::string>{}(q_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(q_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational midpoint(const Rational &a, const Rational &b) { return (a + b) / Rational(2); }
Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }
Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

std::optional<long> exact_log(const Rational &q, const Rational &base, long limit) {
  if (base.sign() <= 0 || base == Rational(1))
    throw std::invalid_argument("exact_log: base must be positive and != 1");
  if (q.sign() <= 0)
    return std::nullopt;
  if (q == Rational(1))
    return 0L;
  // Direction: q = base^k with k > 0 iff q lies on the same side of 1 as base.
  const bool positive = (q > Rational(1)) == (base > Rational(1));
  const Rational step = positive ? base : base.inverse();
  const bool growing = step > Rational(1);
  Rational cur(1);
  for (long k = 1; k <= limit; ++k) {
    cur *= step;
    if (cur == q)
      return positive ? k : -k;
    if (growing ? cur > q : cur < q)
      return std::nullopt;
  }
  return std::nullopt;
}

std::pair<Rational, long> primitive_root(const Rational &value) {
  if (value.sign() <= 0 || value == Rational(1))
    throw std::invalid_argument("primitive_root: value must be positive and != 1");
  const mpz_class n = value.num();
  const mpz_class d = value.den();
  const mpz_class big = n > d ? n : d;
  const long max_k = static_cast<long>(mpz_sizeinbase(big.get_mpz_t(), 2));
  for (long k = max_k; k >= 2; --k) {
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k)) == 0)
      continue;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k)) == 0)
      continue;
    return {Rational(mpq_class(rn, rd)), k};
  }
  return {value, 1};
}

std::string Endpoint::str() const {
  switch (kind) {
  case Kind::NegInf:
    return "-inf";
  case Kind::PosInf:
    return "+inf";
  case Kind::Finite:
    break;
  }
  return value.str();
}

Endpoint Endpoint::parse(std::string_view text) {
  if (text == "-inf")
    return neg_inf();
  if (text == "+inf" || text == "inf")
    return pos_inf();
  return at(Rational::parse(text));
}

namespace {

// -inf < finite < +inf; finite values compared directly.
bool endpoint_less(const Endpoint &a, const Endpoint &b) {
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.finite() && a.value < b.value;
}

} // namespace

Interval::Interval(Endpoint lower, Endpoint upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.kind == Endpoint::Kind::PosInf || upper_.kind == Endpoint::Kind::NegInf ||
      !endpoint_less(lower_, upper_))
    throw std::invalid_argument("Interval: empty interval (" + lower_.str() + ", " + upper_.str() + ")");
}

bool Interval::contains(const Rational &q) const {
  if (lower_.finite() && !(lower_.value < q))
    return false;
  if (upper_.finite() && !(q < upper_.value))
    return false;
  return true;
}

bool Interval::contains_closed(const Rational &a, const Rational &b) const {
  return contains(a) && contains(b);
}

ClosedInterval::ClosedInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo)
    throw std::invalid_argument("ClosedInterval: lo > hi");
}

} // namespace shiftdc
