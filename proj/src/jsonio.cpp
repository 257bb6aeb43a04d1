#include "jsonio.hpp"

#include <cctype>
#include <cstdio>

namespace dmm {

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s += c;
  if (s.empty()) throw error(errc::parse, "empty number");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw error(errc::parse, "bad rational '" + text + "'");
    try {
      Int n{num}, d{den};
      return Rat(n, d);
    } catch (const std::exception&) {
      throw error(errc::parse, "bad rational '" + text + "'");
    }
  }

  // plain integer or decimal with optional exponent, converted exactly
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string digits;
  long frac_digits = 0;
  long exp10 = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw error(errc::parse, "bad number '" + text + "'");
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      std::string e = s.substr(i + 1);
      if (e.empty()) throw error(errc::parse, "bad number '" + text + "'");
      size_t pos = 0;
      try {
        exp10 = std::stol(e, &pos);
      } catch (const std::exception&) {
        throw error(errc::parse, "bad number '" + text + "'");
      }
      if (pos != e.size()) throw error(errc::parse, "bad number '" + text + "'");
      break;
    } else if (std::isdigit((unsigned char)c)) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      throw error(errc::parse, "bad number '" + text + "'");
    }
  }
  if (!seen_digit) throw error(errc::parse, "bad number '" + text + "'");
  Int num(digits.empty() ? "0" : digits);
  if (neg) num = -num;
  Rat r(num, 1);
  long shift = exp10 - frac_digits;
  Int ten(10), pw(1);
  for (long k = 0; k < std::labs(shift); ++k) pw *= ten;
  if (shift >= 0)
    r *= Rat(pw, 1);
  else
    r /= Rat(pw, 1);
  return r;
}

std::string rat_str(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

json rat_json(const Rat& r) { return rat_str(r); }

json cplx_json(const Cplx& z) { return json::array({z.real(), z.imag()}); }

json partition_json(const Partition& la) {
  json arr = json::array();
  for (int p : la.parts()) arr.push_back(p);
  return arr;
}

json poly_json(const SymPolynomial& f) {
  json terms = json::array();
  for (const auto& [key, coeff] : f.terms()) {
    json exps = json::array();
    for (uint32_t e : key) exps.push_back(e);
    terms.push_back(json{{"exponents", exps}, {"coeff", rat_str(coeff)}});
  }
  return terms;
}

json model_json(const DessinModel& m) {
  auto words_arr = [](const std::vector<std::vector<int>>& ws) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(w);
    return arr;
  };
  json j;
  j["edges"] = m.edges();
  j["faces"] = words_arr(m.faces());
  j["vertices"] = words_arr(m.vertices());
  j["num_faces"] = m.num_faces();
  j["num_vertices"] = m.num_vertices();
  j["components"] = m.components();
  j["connected"] = m.connected();
  j["euler"] = m.euler();
  if (m.connected()) j["genus"] = m.genus();
  j["face_profile"] = partition_json(m.face_profile());
  j["vertex_profile"] = partition_json(m.vertex_profile());
  return j;
}

json matrix_json(const Eigen::MatrixXcd& M) {
  json rows = json::array();
  for (long i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < M.cols(); ++j) row.push_back(cplx_json(M(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXcd parse_matrix_json(const json& j) {
  if (!j.is_array() || j.empty()) throw error(errc::parse, "matrix must be a nonempty array of rows");
  long n = (long)j.size();
  Eigen::MatrixXcd M(n, n);
  for (long r = 0; r < n; ++r) {
    const json& row = j[(size_t)r];
    if (!row.is_array() || (long)row.size() != n)
      throw error(errc::parse, "matrix must be square, row-major");
    for (long c = 0; c < n; ++c) {
      const json& cell = row[(size_t)c];
      if (cell.is_number()) {
        M(r, c) = Cplx(cell.get<double>(), 0.0);
      } else if (cell.is_array() && cell.size() == 2 && cell[0].is_number() && cell[1].is_number()) {
        M(r, c) = Cplx(cell[0].get<double>(), cell[1].get<double>());
      } else if (cell.is_string()) {
        M(r, c) = Cplx(to_double(parse_rat(cell.get<std::string>())), 0.0);
      } else {
        throw error(errc::parse, "matrix entries must be numbers, [re,im] pairs, or rational strings");
      }
    }
  }
  return M;
}

std::map<std::string, Eigen::MatrixXcd> parse_sources_json(const json& j) {
  if (!j.is_object()) throw error(errc::parse, "sources must be an object of name -> matrix");
  std::map<std::string, Eigen::MatrixXcd> out;
  for (const auto& [name, mat] : j.items()) out.emplace(name, parse_matrix_json(mat));
  return out;
}

}  // namespace dmm
