#include "sympoly.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "characters.hpp"

namespace dmm {

void SymPolynomial::trim(Key& k) {
  while (!k.empty() && k.back() == 0) k.pop_back();
}

void SymPolynomial::add_term(const Key& k, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPolynomial SymPolynomial::constant(const Rat& c) {
  SymPolynomial r;
  r.add_term({}, c);
  return r;
}

SymPolynomial SymPolynomial::p(int k) {
  if (k < 1) throw error(errc::argument, "power sum index must be positive");
  Key key((size_t)k, 0);
  key[(size_t)k - 1] = 1;
  SymPolynomial r;
  r.add_term(key, Rat(1));
  return r;
}

SymPolynomial SymPolynomial::monomial(Key exps, Rat coeff) {
  trim(exps);
  SymPolynomial r;
  r.add_term(exps, coeff);
  return r;
}

int SymPolynomial::graded_degree() const {
  int best = -1;
  for (const auto& [key, c] : terms_) {
    int d = 0;
    for (size_t i = 0; i < key.size(); ++i) d += (int)(i + 1) * (int)key[i];
    best = std::max(best, d);
  }
  return best;
}

SymPolynomial SymPolynomial::operator+(const SymPolynomial& o) const {
  SymPolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymPolynomial SymPolynomial::operator-(const SymPolynomial& o) const {
  SymPolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

SymPolynomial SymPolynomial::operator*(const SymPolynomial& o) const {
  SymPolynomial r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      Key k(std::max(ka.size(), kb.size()), 0);
      for (size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
      for (size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
      r.add_term(k, ca * cb);
    }
  return r;
}

SymPolynomial SymPolynomial::scaled(const Rat& c) const {
  SymPolynomial r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

SymPolynomial SymPolynomial::d_p1() const {
  SymPolynomial r;
  for (const auto& [k, c] : terms_) {
    if (k.empty() || k[0] == 0) continue;
    Key nk = k;
    nk[0] -= 1;
    trim(nk);
    r.add_term(nk, c * Rat(k[0]));
  }
  return r;
}

SymPolynomial SymPolynomial::flip_sign() const {
  SymPolynomial r;
  for (const auto& [k, c] : terms_) {
    uint64_t tot = 0;
    for (auto e : k) tot += e;
    r.add_term(k, (tot % 2) ? -c : c);
  }
  return r;
}

Rat SymPolynomial::coeff(const Key& k) const {
  Key kk = k;
  trim(kk);
  auto it = terms_.find(kk);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat SymPolynomial::coeff_of_class(const Partition& delta) const {
  Key k;
  for (int part : delta.parts()) {
    if ((size_t)part > k.size()) k.resize((size_t)part, 0);
    k[(size_t)part - 1] += 1;
  }
  return coeff(k);
}

namespace {

std::shared_mutex g_es_mutex;
std::vector<SymPolynomial> g_es_cache;  // elementary Schur polynomials by order

std::shared_mutex g_schur_mutex;
std::map<std::vector<int>, SymPolynomial> g_schur_cache;

}  // namespace

const SymPolynomial& elementary_schur(int m) {
  if (m < 0) throw error(errc::argument, "negative order");
  {
    std::shared_lock lk(g_es_mutex);
    if ((size_t)m < g_es_cache.size()) return g_es_cache[(size_t)m];
  }
  std::unique_lock lk(g_es_mutex);
  if (g_es_cache.empty()) g_es_cache.push_back(SymPolynomial::constant(Rat(1)));
  while ((size_t)m >= g_es_cache.size()) {
    int n = (int)g_es_cache.size();
    SymPolynomial acc;
    for (int k = 1; k <= n; ++k) acc += SymPolynomial::p(k) * g_es_cache[(size_t)(n - k)];
    g_es_cache.push_back(acc.scaled(Rat(1, n)));
  }
  return g_es_cache[(size_t)m];
}

namespace {

// determinant of a square matrix of polynomials by Laplace expansion with
// subset memoization; entries indexed [row][col]
SymPolynomial poly_det(const std::vector<std::vector<SymPolynomial>>& a) {
  int n = (int)a.size();
  if (n == 0) return SymPolynomial::constant(Rat(1));
  std::vector<SymPolynomial> dp((size_t)1 << n);
  dp[0] = SymPolynomial::constant(Rat(1));
  for (uint32_t mask = 1; mask < ((uint32_t)1 << n); ++mask) {
    int r = __builtin_popcount(mask) - 1;  // expand along row r
    SymPolynomial acc;
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!a[(size_t)r][(size_t)j].is_zero()) {
        SymPolynomial contrib = a[(size_t)r][(size_t)j] * dp[mask ^ (1u << j)];
        if ((r + pos) % 2) contrib = contrib.scaled(Rat(-1));
        acc += contrib;
      }
      ++pos;
    }
    dp[mask] = std::move(acc);
  }
  return dp[((uint32_t)1 << n) - 1];
}

}  // namespace

const SymPolynomial& schur_in_p(const Partition& la) {
  const std::vector<int> key = la.parts();
  {
    std::shared_lock lk(g_schur_mutex);
    auto it = g_schur_cache.find(key);
    if (it != g_schur_cache.end()) return it->second;
  }
  int l = la.length();
  std::vector<std::vector<SymPolynomial>> a((size_t)l, std::vector<SymPolynomial>((size_t)l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int ord = la.parts()[(size_t)i] - (i + 1) + (j + 1);
      a[(size_t)i][(size_t)j] = ord < 0 ? SymPolynomial::zero() : elementary_schur(ord);
    }
  SymPolynomial det = poly_det(a);
  std::unique_lock lk(g_schur_mutex);
  auto [it, inserted] = g_schur_cache.emplace(key, std::move(det));
  (void)inserted;
  return it->second;
}

std::vector<std::pair<Partition, Rat>> powersum_in_schur(const Partition& delta) {
  std::vector<std::pair<Partition, Rat>> out;
  for (const Partition& la : enumerate_partitions(delta.weight())) {
    Rat chi = Rat(character(la, delta));
    if (chi != 0) out.emplace_back(la, chi);
  }
  return out;
}

std::vector<std::pair<Partition, Rat>> schur_in_powersum(const Partition& la) {
  std::vector<std::pair<Partition, Rat>> out;
  for (const Partition& delta : enumerate_partitions(la.weight())) {
    Rat chi = Rat(character(la, delta));
    if (chi != 0) out.emplace_back(delta, chi / z_of(delta));
  }
  return out;
}

Rat schur_at_pinf(const Partition& la) { return dim_over_dfact(la); }

Rat schur_at_geometric(const Partition& la, const Rat& a) {
  return pochhammer_lambda(a, la) * dim_over_dfact(la);
}

Rat schur_at_identity(const Partition& la, int N) {
  return pochhammer_lambda(Rat(N), la) * dim_over_dfact(la);
}

Rat schur_at_rank(const Partition& la, int k) {
  return pochhammer_lambda(Rat(k), la) * dim_over_dfact(la);
}

Rat qt_pochhammer(const Partition& la, const Rat& q, const Rat& t) {
  Rat acc(1);
  const auto& p = la.parts();
  for (int i = 1; i <= (int)p.size(); ++i)
    for (int j = 1; j <= p[(size_t)(i - 1)]; ++j) acc *= Rat(1) - q * rat_pow(t, j - i);
  return acc;
}

Rat schur_at_p0t(const Partition& la, const Rat& t) {
  std::function<Rat(int)> pk = [&](int m) {
    Rat den = Rat(1) - rat_pow(t, m);
    if (den == 0) throw error(errc::domain, "t is a root of unity for p_" + std::to_string(m));
    return Rat(1) / den;
  };
  return schur_in_p(la).eval<Rat>(pk);
}

Rat schur_at_qt(const Partition& la, const Rat& q, const Rat& t) {
  return qt_pochhammer(la, q, t) * schur_at_p0t(la, t);
}

PowerSumPoint PowerSumPoint::infty() { return PowerSumPoint{}; }

PowerSumPoint PowerSumPoint::geometric(const Rat& a) {
  PowerSumPoint p;
  p.kind = Kind::geometric;
  p.a = a;
  return p;
}

PowerSumPoint PowerSumPoint::qt_point(const Rat& q, const Rat& t) {
  PowerSumPoint p;
  p.kind = Kind::qt;
  p.q = q;
  p.t = t;
  return p;
}

PowerSumPoint PowerSumPoint::from_values(std::vector<Cplx> v) {
  PowerSumPoint p;
  p.kind = Kind::values;
  p.values = std::move(v);
  return p;
}

PowerSumPoint PowerSumPoint::from_exact(std::vector<Rat> v) {
  PowerSumPoint p;
  p.kind = Kind::values;
  p.exact_vals = std::move(v);
  p.exact_values = true;
  p.values.reserve(p.exact_vals.size());
  for (const Rat& r : p.exact_vals) p.values.push_back(Cplx(to_double(r), 0));
  return p;
}

std::string PowerSumPoint::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::infty:
      os << "infty";
      break;
    case Kind::geometric:
      os << "geometric(" << rat_str(a) << ")";
      break;
    case Kind::qt:
      os << "qt(" << rat_str(q) << "," << rat_str(t) << ")";
      break;
    case Kind::values:
      os << "values[";
      for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << fmt_double(values[i].real());
        if (values[i].imag() != 0) os << (values[i].imag() < 0 ? "-" : "+") << fmt_double(std::abs(values[i].imag())) << "i";
      }
      os << ']';
      break;
  }
  return os.str();
}

Cplx schur_at_point(const Partition& la, const PowerSumPoint& pt) {
  Rat ex;
  if (schur_at_point_exact(la, pt, ex)) return Cplx(to_double(ex), 0);
  std::function<Cplx(int)> pk = [&](int m) -> Cplx {
    return (size_t)m <= pt.values.size() ? pt.values[(size_t)m - 1] : Cplx(0, 0);
  };
  return schur_in_p(la).eval<Cplx>(pk);
}

bool schur_at_point_exact(const Partition& la, const PowerSumPoint& pt, Rat& out) {
  switch (pt.kind) {
    case PowerSumPoint::Kind::infty:
      out = schur_at_pinf(la);
      return true;
    case PowerSumPoint::Kind::geometric:
      out = schur_at_geometric(la, pt.a);
      return true;
    case PowerSumPoint::Kind::qt:
      out = schur_at_qt(la, pt.q, pt.t);
      return true;
    case PowerSumPoint::Kind::values:
      if (!pt.exact_values) return false;
      {
        std::function<Rat(int)> pk = [&](int m) -> Rat {
          return (size_t)m <= pt.exact_vals.size() ? pt.exact_vals[(size_t)m - 1] : Rat(0);
        };
        out = schur_in_p(la).eval<Rat>(pk);
      }
      return true;
  }
  return false;
}

namespace {

Cplx complex_det(std::vector<std::vector<Cplx>> a) {
  int n = (int)a.size();
  Cplx det(1, 0);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    double best = 0;
    for (int r = c; r < n; ++r)
      if (std::abs(a[(size_t)r][(size_t)c]) > best) {
        best = std::abs(a[(size_t)r][(size_t)c]);
        piv = r;
      }
    if (piv < 0 || best == 0) return Cplx(0, 0);
    if (piv != c) {
      std::swap(a[(size_t)piv], a[(size_t)c]);
      det = -det;
    }
    det *= a[(size_t)c][(size_t)c];
    for (int r = c + 1; r < n; ++r) {
      Cplx f = a[(size_t)r][(size_t)c] / a[(size_t)c][(size_t)c];
      for (int j = c; j < n; ++j) a[(size_t)r][(size_t)j] -= f * a[(size_t)c][(size_t)j];
    }
  }
  return det;
}

}  // namespace

Cplx schur_eval_spectrum(const Partition& la, const std::vector<Cplx>& eigs) {
  int n = (int)eigs.size();
  if (la.length() > n) return Cplx(0, 0);
  if (la.empty()) return Cplx(1, 0);

  double norm = 0;
  for (const Cplx& x : eigs) norm = std::max(norm, std::abs(x));
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) min_gap = std::min(min_gap, std::abs(eigs[(size_t)i] - eigs[(size_t)j]));

  if (n >= 2 && min_gap <= 1e-8 * std::max(norm, 1e-300)) {
    // near degenerate spectrum, bialternant ratio is ill conditioned
    std::function<Cplx(int)> pk = [&](int m) {
      Cplx s(0, 0);
      for (const Cplx& x : eigs) s += std::pow(x, m);
      return s;
    };
    return schur_in_p(la).eval<Cplx>(pk);
  }

  std::vector<std::vector<Cplx>> num((size_t)n, std::vector<Cplx>((size_t)n));
  std::vector<std::vector<Cplx>> den((size_t)n, std::vector<Cplx>((size_t)n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int h = la.part(i) - (i + 1) + n;
      num[(size_t)i][(size_t)j] = std::pow(eigs[(size_t)j], h);
      den[(size_t)i][(size_t)j] = std::pow(eigs[(size_t)j], n - (i + 1));
    }
  Cplx d = complex_det(den);
  if (std::abs(d) == 0) {
    std::function<Cplx(int)> pk = [&](int m) {
      Cplx s(0, 0);
      for (const Cplx& x : eigs) s += std::pow(x, m);
      return s;
    };
    return schur_in_p(la).eval<Cplx>(pk);
  }
  return complex_det(num) / d;
}

Cplx schur_eval_matrix(const Partition& la, const Eigen::MatrixXcd& X) {
  if (X.rows() != X.cols()) throw error(errc::argument, "matrix must be square");
  int n = (int)X.rows();
  if (la.length() > n) return Cplx(0, 0);
  if (la.empty()) return Cplx(1, 0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(X, false);
  if (es.info() != Eigen::Success) throw error(errc::numeric, "eigenvalue computation failed");
  std::vector<Cplx> eigs(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return schur_eval_spectrum(la, eigs);
}

Cplx power_sum_eval(const Partition& delta, const Eigen::MatrixXcd& X) {
  if (X.rows() != X.cols()) throw error(errc::argument, "matrix must be square");
  Cplx acc(1, 0);
  Eigen::MatrixXcd pw;
  for (int part : delta.parts()) {
    pw = X;
    for (int k = 1; k < part; ++k) pw = pw * X;
    acc *= pw.trace();
  }
  return acc;
}

}  // namespace dmm
