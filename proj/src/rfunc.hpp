#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace dmm {

// weight function r(x) = scale * prod_i (x + num[i]) / prod_j (x + den[j])
class RFunction {
 public:
  RFunction() : scale_(1) {}

  static RFunction one() { return RFunction(); }
  static RFunction rational(Rat scale, std::vector<Rat> num, std::vector<Rat> den);
  // prod(a_i + x) / (x * prod(b_j + x)); the plain content weight x is a=[0,0], b=[]
  static RFunction hypergeometric(std::vector<Rat> a, std::vector<Rat> b);
  static RFunction content_weight();  // r(x) = x

  // "1", "x", or "p:a1,a2;q:b1;c:s" (p, q, c parts each optional)
  static RFunction parse(const std::string& text);

  bool is_one() const { return scale_ == 1 && num_.empty() && den_.empty(); }

  // false when x hits a pole
  bool eval(const Rat& x, Rat& out) const;
  Rat eval_or_throw(const Rat& x) const;

  // prod_{k=1}^{m} r(nu + k); false on any pole
  bool step_product(const Rat& nu, int m, Rat& out) const;

  std::string describe() const;

 private:
  Rat scale_;
  std::vector<Rat> num_, den_;
};

}  // namespace dmm
