#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace yangian {

/// Base class for every diagnostic raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Canonical "num/den" text, or just "num" for integers.
std::string to_string(const Rational& q);

/// Accepts "n" or "n/d" with optional sign; rejects zero denominators.
Rational parse_rational(std::string_view text);

/// Exact complex number re + im*i with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}
  GaussianRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real) : re(real) {}

  bool is_real() const { return sgn(im) == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const Rational& k);
  GaussianRational& operator/=(const Rational& k);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const Rational& k) { return a *= k; }
  friend GaussianRational operator/(GaussianRational a, const Rational& k) { return a /= k; }
  GaussianRational operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  // Real part first, then imaginary part.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

/// "3/2", "-1/2i", "3/2+1/2i", "2-i".
std::string to_string(const GaussianRational& z);

/// Inverse of to_string; also accepts "num/den+num/deni" as used on the command line.
GaussianRational parse_gaussian(std::string_view text);

/// True when both parts have a denominator dividing `den`.
bool denominators_divide(const GaussianRational& z, long den);

}  // namespace yangian
