#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace fpzeta {

// Arbitrary-precision integers and exact rationals. Counters overflow 64 bits
// already at binom(10,5)_5, and interpolation must stay exact, so everything
// that accumulates counts or fits polynomials runs on these.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Trial division. Plenty for moduli up to 2^31.
bool is_prime(std::uint64_t n);

namespace modp {

// Raw residue arithmetic. Callers guarantee a, b < p.
inline std::uint32_t reduce(std::int64_t z, std::uint32_t p) {
  std::int64_t r = z % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;  // both < p <= 2^31, no overflow
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

// Extended Euclid. Zero input signals a degenerate system upstream, so it is
// an error here rather than a sentinel.
std::uint32_t inverse(std::uint32_t x, std::uint32_t p);

}  // namespace modp

// Arithmetic context for the prime field F_p. The modulus travels with the
// context (or with FieldElem below), never in global state: scans keep
// several primes in flight at once.
class Fp {
 public:
  // Rejects non-primes and p > 2^31.
  explicit Fp(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::int64_t z) const { return modp::reduce(z, p_); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return modp::add(a, b, p_);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return modp::sub(a, b, p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return modp::neg(a, p_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return modp::mul(a, b, p_);
  }
  std::uint32_t inverse(std::uint32_t x) const { return modp::inverse(x, p_); }

 private:
  std::uint32_t p_;
};

// A residue in [0, p) tagged with its modulus. Immutable value type; mixing
// moduli in one expression is an error.
class FieldElem {
 public:
  FieldElem(std::int64_t value, const Fp& field)
      : value_(field.reduce(value)), p_(field.modulus()) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }

  FieldElem operator+(const FieldElem& o) const {
    return make(modp::add(value_, same(o).value_, p_));
  }
  FieldElem operator-(const FieldElem& o) const {
    return make(modp::sub(value_, same(o).value_, p_));
  }
  FieldElem operator*(const FieldElem& o) const {
    return make(modp::mul(value_, same(o).value_, p_));
  }
  FieldElem operator-() const { return make(modp::neg(value_, p_)); }

  FieldElem inverse() const { return make(modp::inverse(value_, p_)); }

  bool operator==(const FieldElem& o) const {
    return p_ == o.p_ && value_ == o.value_;
  }
  bool is_zero() const { return value_ == 0; }

 private:
  FieldElem make(std::uint32_t v) const {
    FieldElem e = *this;
    e.value_ = v;
    return e;
  }
  const FieldElem& same(const FieldElem& o) const {
    if (p_ != o.p_) throw std::invalid_argument("FieldElem: modulus mismatch");
    return o;
  }

  std::uint32_t value_;
  std::uint32_t p_;
};

inline FieldElem reduce(std::int64_t z, std::uint32_t p) {
  return FieldElem(z, Fp(p));
}

inline FieldElem inverse(const FieldElem& x) { return x.inverse(); }

}  // namespace fpzeta
