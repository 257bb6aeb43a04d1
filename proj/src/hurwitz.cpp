#include "hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "characters.hpp"

namespace dmm {

namespace {

int resolve_weight(const std::vector<Partition>& profiles, std::optional<int> d) {
  if (profiles.empty()) {
    if (!d) throw error(errc::argument, "weight d required when no profiles are given");
    if (*d < 0) throw error(errc::argument, "negative weight");
    return *d;
  }
  int w = profiles.front().weight();
  for (const Partition& p : profiles)
    if (p.weight() != w) throw error(errc::argument, "profiles must share a common weight");
  if (d && *d != w) throw error(errc::argument, "explicit weight disagrees with profiles");
  return w;
}

}  // namespace

Rat hurwitz(int e, const std::vector<Partition>& profiles, std::optional<int> d) {
  if (e > 2) throw error(errc::argument, "Euler characteristic above 2");
  int w = resolve_weight(profiles, d);
  Rat total(0);
  for (const Partition& la : enumerate_partitions(w)) {
    Rat term = rat_pow(dim_over_dfact(la), e);
    for (const Partition& p : profiles) term *= phi(la, p);
    total += term;
  }
  return total;
}

Rat hurwitz_weighted(int e, const std::vector<Partition>& profiles, int m, const Rat& N,
                     std::optional<int> d) {
  if (e > 2) throw error(errc::argument, "Euler characteristic above 2");
  if (m < 0) throw error(errc::argument, "negative weight count");
  int w = resolve_weight(profiles, d);
  Rat total(0);
  for (const Partition& la : enumerate_partitions(w)) {
    Rat term = rat_pow(dim_over_dfact(la), e);
    for (const Partition& p : profiles) term *= phi(la, p);
    if (m > 0) {
      Rat poch = pochhammer_lambda(N, la);
      if (poch == 0)
        throw error(errc::domain, "Pochhammer (N)_lambda vanishes at lambda=(" + la.str() + ")");
      term *= rat_pow(Rat(1) / poch, m);
    }
    total += term;
  }
  return total;
}

namespace {

// dense S_d tables for the counting oracle
struct SymGroup {
  int d = 0;
  int order = 0;
  int id = 0;
  std::vector<std::vector<uint8_t>> perms;     // images
  std::vector<uint16_t> inverse;
  std::vector<uint16_t> square;
  std::vector<std::vector<uint16_t>> comp;     // comp[a][b] = a after b
  std::vector<int> class_id;                   // index into enumerate_partitions(d)
  std::vector<Partition> classes;
  std::vector<std::vector<uint16_t>> members;  // permutations per class

  int mul(int a, int b) const { return comp[(size_t)a][(size_t)b]; }
};

std::mutex g_sym_mutex;
std::map<int, SymGroup> g_sym_cache;

const SymGroup& sym_group(int d) {
  std::lock_guard lk(g_sym_mutex);
  auto it = g_sym_cache.find(d);
  if (it != g_sym_cache.end()) return it->second;

  SymGroup g;
  g.d = d;
  std::vector<uint8_t> cur((size_t)d);
  std::iota(cur.begin(), cur.end(), (uint8_t)0);
  do {
    g.perms.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  g.order = (int)g.perms.size();
  g.id = 0;  // the identity is lexicographically first

  std::map<std::vector<uint8_t>, uint16_t> index;
  for (int i = 0; i < g.order; ++i) index[g.perms[(size_t)i]] = (uint16_t)i;

  g.comp.assign((size_t)g.order, std::vector<uint16_t>((size_t)g.order));
  std::vector<uint8_t> tmp((size_t)d);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      for (int i = 0; i < d; ++i) tmp[(size_t)i] = g.perms[(size_t)a][g.perms[(size_t)b][(size_t)i]];
      g.comp[(size_t)a][(size_t)b] = index[tmp];
    }

  g.inverse.resize((size_t)g.order);
  g.square.resize((size_t)g.order);
  for (int a = 0; a < g.order; ++a) {
    for (int i = 0; i < d; ++i) tmp[g.perms[(size_t)a][(size_t)i]] = (uint8_t)i;
    g.inverse[(size_t)a] = index[tmp];
    g.square[(size_t)a] = g.comp[(size_t)a][(size_t)a];
  }

  g.classes = enumerate_partitions(d);
  g.members.assign(g.classes.size(), {});
  g.class_id.resize((size_t)g.order);
  for (int a = 0; a < g.order; ++a) {
    std::vector<bool> seen((size_t)d, false);
    std::vector<int> lens;
    for (int i = 0; i < d; ++i) {
      if (seen[(size_t)i]) continue;
      int len = 0, j = i;
      while (!seen[(size_t)j]) {
        seen[(size_t)j] = true;
        j = g.perms[(size_t)a][(size_t)j];
        ++len;
      }
      lens.push_back(len);
    }
    Partition type(lens);
    int cid = -1;
    for (size_t c = 0; c < g.classes.size(); ++c)
      if (g.classes[c] == type) {
        cid = (int)c;
        break;
      }
    g.class_id[(size_t)a] = cid;
    g.members[(size_t)cid].push_back((uint16_t)a);
  }
  return g_sym_cache.emplace(d, std::move(g)).first->second;
}

}  // namespace

// counts tuples sigma_1..sigma_F, rho_1..rho_m, (alpha_j, beta_j)_{j<=h} in S_d with
// sigma_i in the prescribed classes and
// sigma_1..sigma_F rho_1^2..rho_m^2 [alpha_1,beta_1]..[alpha_h,beta_h] = id,
// divided by d!.  The last class constrained factor is solved, not enumerated.
Rat hurwitz_bruteforce(int h, int m, const std::vector<Partition>& profiles, std::optional<int> d) {
  if (h < 0 || m < 0) throw error(errc::argument, "negative factor counts");
  int w = resolve_weight(profiles, d);
  if (w > 6) throw error(errc::scale, "counting oracle limited to weight 6");
  if (w == 0) return Rat(1);

  const SymGroup& g = sym_group(w);
  int F = (int)profiles.size();

  std::vector<int> profile_class((size_t)F);
  for (int i = 0; i < F; ++i) {
    int cid = -1;
    for (size_t c = 0; c < g.classes.size(); ++c)
      if (g.classes[c] == profiles[(size_t)i]) cid = (int)c;
    profile_class[(size_t)i] = cid;
  }

  double space = 1;
  for (int i = 0; i + 1 < F; ++i) space *= (double)g.members[(size_t)profile_class[(size_t)i]].size();
  for (int i = 0; i < m + 2 * h; ++i) space *= (double)g.order;
  if (space > 1e7)
    throw error(errc::scale, "search space " + std::to_string((long long)space) + " exceeds 1e7");

  long long count = 0;
  int last_class = F >= 1 ? profile_class[(size_t)(F - 1)] : -1;

  // tail enumerates rho squares then commutators, then tests or solves the relation
  std::function<void(size_t, int, int)> rec_tail = [&](size_t slot, int left, int tail) {
    if (slot == (size_t)(m + h)) {
      int prod = g.mul(left, tail);
      if (F == 0) {
        if (prod == g.id) ++count;
      } else {
        int need = g.inverse[(size_t)prod];  // sigma_F with left*sigma_F*tail=id, cyclically moved
        if (g.class_id[(size_t)need] == last_class) ++count;
      }
      return;
    }
    if (slot < (size_t)m) {
      for (int r = 0; r < g.order; ++r) rec_tail(slot + 1, left, g.mul(tail, g.square[(size_t)r]));
    } else {
      for (int a = 0; a < g.order; ++a) {
        int ainv = g.inverse[(size_t)a];
        for (int b = 0; b < g.order; ++b) {
          int c = g.mul(g.mul(a, b), g.mul(ainv, g.inverse[(size_t)b]));
          rec_tail(slot + 1, left, g.mul(tail, c));
        }
      }
    }
  };

  std::function<void(size_t, int)> rec_sigma = [&](size_t slot, int left) {
    if (slot == (size_t)std::max(0, F - 1)) {
      rec_tail(0, left, g.id);
      return;
    }
    for (uint16_t s : g.members[(size_t)profile_class[slot]]) rec_sigma(slot + 1, g.mul(left, s));
  };
  rec_sigma(0, g.id);

  return Rat(count) / Rat(factorial((unsigned)w));
}

}  // namespace dmm
