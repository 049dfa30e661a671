#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace superalg {

// Exact rational scalar. GMP keeps results canonical (den > 0, gcd = 1).
using Rat = mpq_class;

// Dense coordinate vector over Rat.
using Vec = std::vector<Rat>;

// Builds num/den in canonical form; throws std::invalid_argument on den == 0.
Rat make_rat(long num, long den = 1);

// Parses "p" or "p/q" (arbitrary precision). Throws std::invalid_argument.
Rat parse_rat(const std::string& text);

// Always "num/den", including den == 1, so serialized files are uniform.
std::string rat_to_string(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

bool is_zero(const Vec& v);

Vec zero_vec(int d);
Vec unit_vec(int d, int i);

// y += c * x
void axpy(Vec& y, const Rat& c, const Vec& x);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& a);
Vec operator-(const Vec& a);

std::string vec_to_string(const Vec& v);

}  // namespace superalg
