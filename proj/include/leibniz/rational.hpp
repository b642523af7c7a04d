#ifndef LEIBNIZ_RATIONAL_HPP
#define LEIBNIZ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace leibniz {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator) as long as they are built through `rat_*` helpers or
/// arithmetic operators.
using Rat = mpq_class;

using QVector = std::vector<Rat>;

/// Parses "p/q" or "p" with optional sign. Throws parse_error on anything
/// else (empty string, zero denominator, stray characters).
Rat rat_from_string(const std::string& text);

/// Canonical form: "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

Rat rat_from_long(long numerator, long denominator = 1);

// small vector helpers used throughout
bool vec_is_zero(const QVector& v);
QVector vec_zero(std::size_t n);
QVector vec_unit(std::size_t n, std::size_t i);
QVector vec_add(const QVector& a, const QVector& b);
QVector vec_sub(const QVector& a, const QVector& b);
QVector vec_scale(const Rat& c, const QVector& a);
std::string vec_to_string(const QVector& v);

}  // namespace leibniz

#endif
