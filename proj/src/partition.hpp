#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "rational.hpp"

namespace dmm {

// integer partition, parts weakly decreasing, no zero parts stored
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return (int)parts_.size(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return i < (int)parts_.size() ? parts_[i] : 0; }  // 0-based, 0 beyond length

  Partition conjugate() const;
  // adds alpha to each of the first n rows (pads with zeros up to n); alpha >= 0
  Partition shifted(int alpha, int n) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string str() const;  // "4,4,1"; empty partition -> "0"
  static Partition parse(const std::string& s);

 private:
  std::vector<int> parts_;
};

// all partitions of d in reverse lexicographic order: (d), (d-1,1), ..., (1^d)
std::vector<Partition> enumerate_partitions(int d);

// order of the centralizer of the class: prod_k k^{m_k} m_k!
Rat z_of(const Partition& la);

// dim(la)/|la|! via the hook length formula
Rat dim_over_dfact(const Partition& la);

// test oracle route for the same quantity, valid for any n >= length(la):
// prod_{i<j<=n}(la_i - la_j - i + j) / prod_{i<=n} (la_i - i + n)!
Rat dim_over_dfact_alt(const Partition& la, int n);

// (a)_la = prod_i (a - i + 1)(a - i + 2)...(a - i + la_i)
template <class T>
T pochhammer_lambda(const T& a, const Partition& la) {
  T acc(1);
  const auto& p = la.parts();
  for (int i = 0; i < (int)p.size(); ++i) acc = acc * rising(a - T(i), (unsigned)p[i]);
  return acc;
}

// prod over cells (i,j) of r(n + j - i); reports the offending cell on a pole
Rat content_product(const std::function<bool(const Rat&, Rat&)>& r_eval, int n, const Partition& la);

}  // namespace dmm
