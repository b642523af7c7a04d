#include "leibniz/rational.hpp"

#include <cctype>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// GMP rejects a leading '+', so drop it after validation
std::string strip_plus(const std::string& s) {
  return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer_token(num))
    throw parse_error("malformed rational '" + text + "'");
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(den) || den.find('-') != std::string::npos)
      throw parse_error("malformed rational '" + text + "'");
    mpz_class d(strip_plus(den));
    if (d == 0) throw parse_error("zero denominator in rational '" + text + "'");
    Rat r(mpz_class(strip_plus(num)), d);
    r.canonicalize();
    return r;
  }
  return Rat(mpz_class(strip_plus(num)));
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Rat rat_from_long(long numerator, long denominator) {
  if (denominator == 0) throw parse_error("zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

bool vec_is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QVector vec_zero(std::size_t n) { return QVector(n, Rat(0)); }

QVector vec_unit(std::size_t n, std::size_t i) {
  QVector v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

QVector vec_add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw dimension_mismatch("vector length mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector vec_sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw dimension_mismatch("vector length mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector vec_scale(const Rat& c, const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

std::string vec_to_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

}  // namespace leibniz
