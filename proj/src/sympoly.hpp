#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace dmm {

namespace detail {
template <class T>
T from_rat(const Rat& r);
template <>
inline Rat from_rat<Rat>(const Rat& r) {
  return r;
}
template <>
inline Cplx from_rat<Cplx>(const Rat& r) {
  return Cplx(to_double(r), 0.0);
}
}  // namespace detail

// polynomial in the power sum variables p_1, p_2, ... with exact coefficients
class SymPolynomial {
 public:
  using Key = std::vector<uint32_t>;  // exponent of p_{k+1} at index k, trailing zeros trimmed
  using Terms = std::map<Key, Rat>;

  SymPolynomial() = default;
  static SymPolynomial zero() { return SymPolynomial(); }
  static SymPolynomial constant(const Rat& c);
  static SymPolynomial p(int k);  // the variable p_k, k >= 1
  static SymPolynomial monomial(Key exps, Rat coeff);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int graded_degree() const;  // max over terms of sum k*e_k, -1 for zero

  SymPolynomial operator+(const SymPolynomial& o) const;
  SymPolynomial operator-(const SymPolynomial& o) const;
  SymPolynomial operator*(const SymPolynomial& o) const;
  SymPolynomial& operator+=(const SymPolynomial& o);
  SymPolynomial scaled(const Rat& c) const;
  SymPolynomial d_p1() const;        // partial derivative in p_1
  SymPolynomial flip_sign() const;   // p_k -> -p_k for every k
  bool operator==(const SymPolynomial& o) const { return terms_ == o.terms_; }

  Rat coeff(const Key& k) const;
  // coefficient of the power sum monomial p_Delta = prod p_{Delta_i}
  Rat coeff_of_class(const Partition& delta) const;

  template <class T>
  T eval(const std::function<T(int)>& pk) const {
    T total(0);
    for (const auto& [key, c] : terms_) {
      T term = detail::from_rat<T>(c);
      for (size_t i = 0; i < key.size(); ++i) {
        if (!key[i]) continue;
        T v = pk((int)i + 1);
        for (uint32_t e = 0; e < key[i]; ++e) term = term * v;
      }
      total = total + term;
    }
    return total;
  }

 private:
  Terms terms_;
  void add_term(const Key& k, const Rat& c);
  static void trim(Key& k);
};

// rank one Schur polynomial s_(m) in power sums, from m s_(m) = sum_k p_k s_(m-k)
const SymPolynomial& elementary_schur(int m);

// s_lambda in power sums via the determinant of elementary Schur polynomials
const SymPolynomial& schur_in_p(const Partition& la);

// character map between the power sum and Schur bases at weight |arg|
// p_Delta = sum_lambda chi_lambda(Delta) s_lambda
std::vector<std::pair<Partition, Rat>> powersum_in_schur(const Partition& delta);
// s_lambda = sum_Delta (chi_lambda(Delta)/z_Delta) p_Delta
std::vector<std::pair<Partition, Rat>> schur_in_powersum(const Partition& la);

// closed specializations
Rat schur_at_pinf(const Partition& la);                       // dim/d!
Rat schur_at_geometric(const Partition& la, const Rat& a);    // (a)_la dim/d!
Rat schur_at_identity(const Partition& la, int N);            // (N)_la dim/d!
Rat schur_at_rank(const Partition& la, int k);                // (k)_la dim/d!
Rat qt_pochhammer(const Partition& la, const Rat& q, const Rat& t);  // prod cells (1 - q t^{j-i})
Rat schur_at_p0t(const Partition& la, const Rat& t);          // evaluate at p_m = 1/(1-t^m)
Rat schur_at_qt(const Partition& la, const Rat& q, const Rat& t);

// evaluation data for one power sum argument slot
struct PowerSumPoint {
  enum class Kind { infty, geometric, qt, values };
  Kind kind = Kind::infty;
  Rat a;                        // geometric
  Rat q, t;                     // qt
  std::vector<Cplx> values;     // explicit p_1..p_k, rest zero
  std::vector<Rat> exact_vals;  // optional exact version of values
  bool exact_values = false;

  static PowerSumPoint infty();
  static PowerSumPoint geometric(const Rat& a);
  static PowerSumPoint qt_point(const Rat& q, const Rat& t);
  static PowerSumPoint from_values(std::vector<Cplx> v);
  static PowerSumPoint from_exact(std::vector<Rat> v);
  std::string describe() const;
};

Cplx schur_at_point(const Partition& la, const PowerSumPoint& pt);
bool schur_at_point_exact(const Partition& la, const PowerSumPoint& pt, Rat& out);

// numeric evaluation on a matrix spectrum; bialternant with a conditioning
// fallback to the power sum route when eigenvalues nearly collide
Cplx schur_eval_matrix(const Partition& la, const Eigen::MatrixXcd& X);
Cplx schur_eval_spectrum(const Partition& la, const std::vector<Cplx>& eigs);
Cplx power_sum_eval(const Partition& delta, const Eigen::MatrixXcd& X);

}  // namespace dmm
