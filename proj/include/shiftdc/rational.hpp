#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace shiftdc {

/**
 * Exact rational number in canonical form (positive denominator, reduced).
 *
 * Thin value wrapper over mpq_class. All arithmetic is exact; the wrapper
 * exists so the rest of the library never sees a non-canonical mpq_t and so
 * ordering/hashing/serialization have one home.
 */
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  const mpq_class &raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  /// Integer power; negative exponents invert (this must be nonzero then).
  Rational pow(long exponent) const;

  Rational operator-() const;
  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  double to_double() const { return q_.get_d(); }
  std::size_t hash() const;

private:
  mpq_class q_;
};

Rational midpoint(const Rational &a, const Rational &b);
Rational min(const Rational &a, const Rational &b);
Rational max(const Rational &a, const Rational &b);

/// If q = base^k for some integer k in [-limit, limit], returns k.
/// base must be positive and different from 1.
std::optional<long> exact_log(const Rational &q, const Rational &base, long limit = 4096);

/// The unique rho with value = rho^k, k >= 1 maximal (value positive, != 1).
/// Returns {rho, k}.
std::pair<Rational, long> primitive_root(const Rational &value);

/// An endpoint of an open interval: a rational or an infinity.
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static Endpoint neg_inf() { return {Kind::NegInf, {}}; }
  static Endpoint pos_inf() { return {Kind::PosInf, {}}; }
  static Endpoint at(Rational v) { return {Kind::Finite, std::move(v)}; }

  bool finite() const { return kind == Kind::Finite; }
  std::string str() const;
  static Endpoint parse(std::string_view text);

  friend bool operator==(const Endpoint &, const Endpoint &) = default;
};

/// Nonempty open interval (lower, upper) of Q; endpoints may be infinite.
class Interval {
public:
  Interval(Endpoint lower, Endpoint upper);
  Interval(Rational lower, Rational upper)
      : Interval(Endpoint::at(std::move(lower)), Endpoint::at(std::move(upper))) {}

  static Interval whole() { return {Endpoint::neg_inf(), Endpoint::pos_inf()}; }

  const Endpoint &lower() const { return lower_; }
  const Endpoint &upper() const { return upper_; }
  bool bounded() const { return lower_.finite() && upper_.finite(); }

  bool contains(const Rational &q) const;
  /// True when every point of [a, b] lies in this open interval.
  bool contains_closed(const Rational &a, const Rational &b) const;

  friend bool operator==(const Interval &, const Interval &) = default;

private:
  Endpoint lower_;
  Endpoint upper_;
};

/// Closed interval [lo, hi], lo <= hi (degenerate allowed).
struct ClosedInterval {
  Rational lo;
  Rational hi;

  ClosedInterval(Rational l, Rational h);
  bool contains(const Rational &q) const { return lo <= q && q <= hi; }
  bool intersects(const ClosedInterval &o) const { return lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const ClosedInterval &, const ClosedInterval &) = default;
};

} // namespace shiftdc

template <> struct std::hash<shiftdc::Rational> {
  std::size_t operator()(const shiftdc::Rational &q) const { return q.hash(); }
};
