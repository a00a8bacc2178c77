#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hsm {

// Every coordinate in this library is an exact rational. There are no
// tolerance parameters anywhere: predicates are decided by exact sign tests.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

// Parses "p/q", integers, decimal strings ("-3.25") and scientific decimal
// notation ("1e-3", "2.5E2") into an exact rational. Throws std::invalid_argument
// on anything else (in particular there is no binary-float path).
Rat parse_rational(const std::string& text);

// "p/q" (or "p" when the denominator is 1).
std::string to_fraction_string(const Rat& r);

// Convenience double approximation for report output; never used in predicates.
double to_double(const Rat& r);

// Decimal rendering of the approximation with a fixed format, so reports are
// byte-stable across runs.
std::string to_approx_string(const Rat& r);

int sign(const Rat& r);

Rat rat_abs(const Rat& r);

// ceil(a/b) and floor(a/b) for integers a >= 0, b > 0.
long ceil_div(long a, long b);
long floor_div(long a, long b);

// Exact lexicographic comparison; used for deterministic tie-breaking.
int compare_lex(const Vec& a, const Vec& b);

}  // namespace hsm
