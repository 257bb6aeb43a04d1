#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace dmm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Cplx = std::complex<double>;

enum class errc {
  argument,
  domain,
  scale,
  numeric,
  parse,
  verify,
};

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  if (r == 0) {
    if (e < 0) throw error(errc::domain, "zero raised to a negative power");
    return Rat(0);
  }
  Rat base = e < 0 ? Rat(1) / r : r;
  unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

inline Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

// rising factorial x(x+1)...(x+k-1)
template <class T>
T rising(T x, unsigned k) {
  T acc(1);
  for (unsigned j = 0; j < k; ++j) acc *= x + T((int)j);
  return acc;
}

// "a/b", "a", and plain decimals like "0.25" all parse exactly
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

// 15 significant digits, no trailing noise
std::string fmt_double(double x);

}  // namespace dmm
