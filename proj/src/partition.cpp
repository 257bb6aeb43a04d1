#include "partition.hpp"

#include <algorithm>
#include <sstream>

namespace dmm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw error(errc::argument, "negative part in partition");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  c.resize(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) c[j]++;
  return Partition(c);
}

Partition Partition::shifted(int alpha, int n) const {
  if (alpha < 0) throw error(errc::argument, "negative shift");
  if ((int)parts_.size() > n) throw error(errc::argument, "partition longer than shift width");
  std::vector<int> q(n, alpha);
  for (int i = 0; i < (int)parts_.size(); ++i) q[i] += parts_[i];
  return Partition(q);
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    tok = tok.substr(a, b - a + 1);
    try {
      parts.push_back(std::stoi(tok));
    } catch (...) {
      throw error(errc::parse, "bad partition token '" + tok + "'");
    }
  }
  return Partition(parts);
}

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw error(errc::argument, "negative weight");
  std::vector<Partition> out;
  if (d == 0) {
    out.push_back(Partition());
    return out;
  }
  std::vector<int> cur{d};
  for (;;) {
    out.push_back(Partition(cur));
    // next partition in reverse lexicographic order
    int k = (int)cur.size() - 1;
    while (k >= 0 && cur[k] == 1) --k;
    if (k < 0) break;
    int rem = ((int)cur.size() - 1 - k) + cur[k];
    int newval = cur[k] - 1;
    cur.resize(k);
    while (rem > 0) {
      int take = std::min(newval, rem);
      cur.push_back(take);
      rem -= take;
    }
  }
  return out;
}

Rat z_of(const Partition& la) {
  Int z = 1;
  const auto& p = la.parts();
  int i = 0;
  while (i < (int)p.size()) {
    int j = i;
    while (j < (int)p.size() && p[j] == p[i]) ++j;
    int mult = j - i;
    for (int t = 0; t < mult; ++t) z *= p[i];
    z *= factorial((unsigned)mult);
    i = j;
  }
  return Rat(z);
}

Rat dim_over_dfact(const Partition& la) {
  const auto& p = la.parts();
  Partition conj = la.conjugate();
  Int hooks = 1;
  for (int i = 0; i < (int)p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1;
      int leg = conj.parts()[j] - i - 1;
      hooks *= (arm + leg + 1);
    }
  return Rat(1) / Rat(hooks);
}

Rat dim_over_dfact_alt(const Partition& la, int n) {
  if (n < la.length()) throw error(errc::argument, "row count below partition length");
  Rat num(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) num *= Rat(la.part(i - 1) - la.part(j - 1) - i + j);
  Rat den(1);
  for (int i = 1; i <= n; ++i) den *= Rat(factorial((unsigned)(la.part(i - 1) - i + n)));
  return num / den;
}

Rat content_product(const std::function<bool(const Rat&, Rat&)>& r_eval, int n, const Partition& la) {
  Rat acc(1);
  const auto& p = la.parts();
  for (int i = 1; i <= (int)p.size(); ++i)
    for (int j = 1; j <= p[i - 1]; ++j) {
      Rat v;
      if (!r_eval(Rat(n + j - i), v))
        throw error(errc::domain, "weight function pole at content " + std::to_string(n + j - i) +
                                      " from cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
      acc *= v;
    }
  return acc;
}

}  // namespace dmm
