#include "rfunc.hpp"

#include <cctype>

namespace dmm {

RFunction RFunction::rational(Rat scale, std::vector<Rat> num, std::vector<Rat> den) {
  RFunction r;
  r.scale_ = std::move(scale);
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.scale_ == 0) throw error(errc::argument, "weight function scale must be nonzero");
  return r;
}

RFunction RFunction::hypergeometric(std::vector<Rat> a, std::vector<Rat> b) {
  b.insert(b.begin(), Rat(0));
  return rational(Rat(1), std::move(a), std::move(b));
}

RFunction RFunction::content_weight() { return rational(Rat(1), {Rat(0)}, {}); }

RFunction RFunction::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace((unsigned char)c)) t += c;
  if (t.empty() || t == "1") return one();
  if (t == "x") return content_weight();
  std::vector<Rat> a, b;
  Rat scale(1);
  size_t pos = 0;
  while (pos < t.size()) {
    size_t end = t.find(';', pos);
    if (end == std::string::npos) end = t.size();
    std::string seg = t.substr(pos, end - pos);
    pos = end + 1;
    if (seg.empty()) continue;
    if (seg.size() < 2 || seg[1] != ':')
      throw error(errc::parse, "weight segment must look like p:..., q:..., or c:..., got '" + seg + "'");
    char tag = seg[0];
    std::string body = seg.substr(2);
    std::vector<Rat> vals;
    size_t q = 0;
    while (q <= body.size()) {
      size_t e = body.find(',', q);
      if (e == std::string::npos) e = body.size();
      std::string item = body.substr(q, e - q);
      if (!item.empty()) vals.push_back(parse_rat(item));
      q = e + 1;
    }
    if (tag == 'p')
      a = vals;
    else if (tag == 'q')
      b = vals;
    else if (tag == 'c') {
      if (vals.size() != 1) throw error(errc::parse, "c: takes exactly one value");
      scale = vals[0];
    } else
      throw error(errc::parse, std::string("unknown weight segment tag '") + tag + "'");
  }
  auto r = hypergeometric(std::move(a), std::move(b));
  r.scale_ = scale;
  if (scale == 0) throw error(errc::argument, "weight function scale must be nonzero");
  return r;
}

bool RFunction::eval(const Rat& x, Rat& out) const {
  Rat v = scale_;
  for (const auto& d : den_) {
    Rat f = x + d;
    if (f == 0) return false;
    v /= f;
  }
  for (const auto& n : num_) v *= (x + n);
  out = v;
  return true;
}

Rat RFunction::eval_or_throw(const Rat& x) const {
  Rat v;
  if (!eval(x, v)) throw error(errc::domain, "weight function has a pole at x=" + rat_str(x));
  return v;
}

bool RFunction::step_product(const Rat& nu, int m, Rat& out) const {
  out = 1;
  for (int k = 1; k <= m; ++k) {
    Rat v;
    if (!eval(nu + k, v)) return false;
    out *= v;
  }
  return true;
}

std::string RFunction::describe() const {
  if (is_one()) return "1";
  std::string s = "r(x) = ";
  if (scale_ != 1 || num_.empty()) s += rat_str(scale_);
  bool first = (scale_ == 1 && !num_.empty());
  for (const auto& n : num_) {
    if (!first) s += " * ";
    first = false;
    s += (n == 0) ? "x" : ("(x + " + rat_str(n) + ")");
  }
  if (!den_.empty()) {
    s += " / (";
    for (size_t j = 0; j < den_.size(); ++j) {
      if (j) s += " * ";
      s += (den_[j] == 0) ? "x" : ("(x + " + rat_str(den_[j]) + ")");
    }
    s += ")";
  }
  return s;
}

}  // namespace dmm
