#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "burnside/errors.hpp"

namespace burnside {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision integer parts, always reduced to
// lowest terms with a positive denominator. Every probability in the proof
// checker is one of these; no floating point gets near them.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(std::int64_t n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : value_(n) {}

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw Error("rational with zero denominator");
    // cpp_rational normalizes magnitude but rejects negative denominators.
    if (denominator < 0) {
      value_ = Ratio(-numerator, -denominator);
    } else {
      value_ = Ratio(numerator, denominator);
    }
  }

  Rational(std::int64_t numerator, std::int64_t denominator)
      : Rational(BigInt(numerator), BigInt(denominator)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return value_ == 0; }

  // Only valid when is_integer().
  BigInt to_integer() const {
    if (!is_integer()) {
      throw ConsistencyError("expected integer rational, got " + str());
    }
    return numerator();
  }

  double to_double() const { return value_.convert_to<double>(); }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.value_ * b.value_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return Rational(a.value_ / b.value_);
  }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

private:
  using Ratio = boost::multiprecision::cpp_rational;

  explicit Rational(Ratio v) : value_(std::move(v)) {}

  Ratio value_;
};

}  // namespace burnside
