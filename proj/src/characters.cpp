#include "characters.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "sympoly.hpp"

namespace dmm {

namespace {

std::shared_mutex g_chi_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Int> g_chi_cache;

Int chi_impl(const std::vector<int>& la, const std::vector<int>& delta, size_t di);

// remove border strips of length t via first column hook lengths
Int chi_strips(const std::vector<int>& la, const std::vector<int>& delta, size_t di, int t) {
  int w = (int)la.size();
  std::vector<int> beta((size_t)w);
  for (int i = 0; i < w; ++i) beta[(size_t)i] = la[(size_t)i] + w - 1 - i;
  Int total = 0;
  for (int i = 0; i < w; ++i) {
    int target = beta[(size_t)i] - t;
    if (target < 0) continue;
    bool clash = false;
    int height = 0;
    for (int j = 0; j < w; ++j) {
      if (j == i) continue;
      if (beta[(size_t)j] == target) clash = true;
      if (beta[(size_t)j] > target && beta[(size_t)j] < beta[(size_t)i]) ++height;
    }
    if (clash) continue;
    std::vector<int> nb = beta;
    nb[(size_t)i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> nla;
    for (int j = 0; j < w; ++j) {
      int part = nb[(size_t)j] - (w - 1 - j);
      if (part > 0) nla.push_back(part);
    }
    Int sub = chi_impl(nla, delta, di + 1);
    total += (height % 2) ? -sub : sub;
  }
  return total;
}

Int chi_impl(const std::vector<int>& la, const std::vector<int>& delta, size_t di) {
  if (di >= delta.size()) return la.empty() ? Int(1) : Int(0);
  std::pair<std::vector<int>, std::vector<int>> key(la, std::vector<int>(delta.begin() + (long)di, delta.end()));
  {
    std::shared_lock lk(g_chi_mutex);
    auto it = g_chi_cache.find(key);
    if (it != g_chi_cache.end()) return it->second;
  }
  Int v = chi_strips(la, delta, di, delta[di]);
  std::unique_lock lk(g_chi_mutex);
  g_chi_cache.emplace(std::move(key), v);
  return v;
}

}  // namespace

Int character(const Partition& la, const Partition& delta) {
  if (la.weight() != delta.weight()) throw error(errc::argument, "character arguments must share weight");
  return chi_impl(la.parts(), delta.parts(), 0);
}

Rat phi(const Partition& la, const Partition& delta) {
  return Rat(character(la, delta)) / (dim_over_dfact(la) * z_of(delta));
}

Int CharacterTable::at(const Partition& la, const Partition& delta) const {
  auto it = entries.find({la.parts(), delta.parts()});
  if (it == entries.end()) throw error(errc::argument, "label outside table");
  return it->second;
}

namespace {
std::mutex g_table_mutex;
std::map<int, CharacterTable> g_tables;
}  // namespace

const CharacterTable& character_table(int d) {
  std::lock_guard lk(g_table_mutex);
  auto it = g_tables.find(d);
  if (it != g_tables.end()) return it->second;
  CharacterTable t;
  t.d = d;
  t.labels = enumerate_partitions(d);
  for (const Partition& la : t.labels)
    for (const Partition& delta : t.labels) t.entries[{la.parts(), delta.parts()}] = character(la, delta);
  return g_tables.emplace(d, std::move(t)).first->second;
}

Int character_oracle(const Partition& la, const Partition& delta) {
  if (la.weight() != delta.weight()) throw error(errc::argument, "character arguments must share weight");
  int d = la.weight();
  if (d > 6) throw error(errc::scale, "oracle limited to weight 6");
  std::vector<Partition> classes = enumerate_partitions(d);
  int n = (int)classes.size();
  int col_la = -1, row_delta = -1;
  for (int i = 0; i < n; ++i) {
    if (classes[(size_t)i] == la) col_la = i;
    if (classes[(size_t)i] == delta) row_delta = i;
  }
  if (col_la < 0 || row_delta < 0) throw error(errc::argument, "label of wrong weight");

  // rows: power sum monomials indexed by class; columns: Schur labels
  std::vector<std::vector<Rat>> m((size_t)n, std::vector<Rat>((size_t)n + 1, Rat(0)));
  for (int j = 0; j < n; ++j) {
    const SymPolynomial& s = schur_in_p(classes[(size_t)j]);
    for (int i = 0; i < n; ++i) m[(size_t)i][(size_t)j] = s.coeff_of_class(classes[(size_t)i]);
  }
  for (int i = 0; i < n; ++i) m[(size_t)i][(size_t)n] = (i == row_delta) ? Rat(1) : Rat(0);

  // exact Gaussian elimination
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[(size_t)r][(size_t)c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw error(errc::numeric, "singular Schur transition matrix");
    std::swap(m[(size_t)piv], m[(size_t)c]);
    Rat inv = Rat(1) / m[(size_t)c][(size_t)c];
    for (int j = c; j <= n; ++j) m[(size_t)c][(size_t)j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[(size_t)r][(size_t)c] == 0) continue;
      Rat f = m[(size_t)r][(size_t)c];
      for (int j = c; j <= n; ++j) m[(size_t)r][(size_t)j] -= f * m[(size_t)c][(size_t)j];
    }
  }
  Rat x = m[(size_t)col_la][(size_t)n];
  if (denominator(x) != 1) throw error(errc::numeric, "non integral character from solve");
  return numerator(x);
}

}  // namespace dmm
