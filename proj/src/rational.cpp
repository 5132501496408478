#include "yangian/rational.hpp"

#include <cctype>

namespace yangian {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw Error("malformed rational '" + std::string(text) + "'");
  mpz_class n{std::string(num[0] == '+' ? num.substr(1) : num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw Error("rational with zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const Rational& k) {
  re *= k;
  im *= k;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const Rational& k) {
  if (sgn(k) == 0) throw Error("division by zero");
  re /= k;
  im /= k;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re);
  auto imag = [](const Rational& q) {
    if (q == 1) return std::string("i");
    if (q == -1) return std::string("-i");
    return to_string(q) + "i";
  };
  if (sgn(z.re) == 0) return imag(z.im);
  std::string out = to_string(z.re);
  if (sgn(z.im) > 0) out += '+';
  return out + imag(z.im);
}

GaussianRational parse_gaussian(std::string_view text) {
  if (text.empty()) throw Error("empty complex number");
  if (text.back() != 'i') return GaussianRational(parse_rational(text));
  auto body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_of = [&](std::string_view s) {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parse_rational(s);
  };
  if (split == std::string_view::npos) return GaussianRational(Rational(0), imag_of(body));
  return GaussianRational(parse_rational(body.substr(0, split)), imag_of(body.substr(split)));
}

bool denominators_divide(const GaussianRational& z, long den) {
  auto ok = [den](const Rational& q) { return mpz_class(den) % q.get_den() == 0; };
  return ok(z.re) && ok(z.im);
}

}  // namespace yangian
