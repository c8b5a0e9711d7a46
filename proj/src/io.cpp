#include "liealg/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace liealg {

namespace {

Scalar parse_coeff(FieldSpec f, const std::string& text, int line, int col) {
  std::string t = text;
  if (t.empty()) throw ParseError(line, col, "empty coefficient");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      return Scalar(f, Rational(BigInt::from_string(t), BigInt(1)));
    }
    if (!f.is_finite()) {
      BigInt num = BigInt::from_string(t.substr(0, slash));
      BigInt den = BigInt::from_string(t.substr(slash + 1));
      if (den.is_zero()) throw ParseError(line, col, "zero denominator");
      return Scalar(f, Rational(num, den));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError(line, col, "bad coefficient '" + text + "'");
  }
  throw ParseError(line, col, "fractional coefficients need field Q");
}

LieAlgebra parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, static_cast<int>(e.byte), e.what());
  }
  if (!j.contains("dim") || !j.contains("field"))
    throw ParseError(1, 1, "JSON needs dim and field");
  FieldSpec f;
  try {
    f = FieldSpec::parse(j["field"].get<std::string>());
  } catch (const BadParameterError& e) {
    throw ParseError(1, 1, e.what());
  }
  std::size_t n = j["dim"].get<std::size_t>();
  LieAlgebra L(f, n);
  if (j.contains("brackets")) {
    for (const auto& b : j["brackets"]) {
      int i = b.at(0).get<int>(), jj = b.at(1).get<int>();
      if (i < 1 || jj < 1 || i >= jj || jj > static_cast<int>(n))
        throw ParseError(1, 1, "bracket indices out of range");
      Vec v = zero_vec(f, n);
      for (const auto& term : b.at(2)) {
        int k = term.at(0).get<int>();
        if (k < 1 || k > static_cast<int>(n)) throw ParseError(1, 1, "target out of range");
        v[k - 1] += parse_coeff(f, term.at(1).get<std::string>(), 1, 1);
      }
      L.set_bracket(i - 1, jj - 1, v);
    }
  }
  validate(L);
  return L;
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json(text);
    break;
  }
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  std::size_t dim = 0;
  bool have_dim = false, have_field = false;
  FieldSpec field;
  LieAlgebra L;
  std::set<std::pair<int, int>> seen;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "dim") {
      if (have_dim) throw ParseError(lineno, 1, "duplicate dim line");
      if (!(ls >> dim)) throw ParseError(lineno, 5, "dim expects a count");
      have_dim = true;
      continue;
    }
    if (kw == "field") {
      if (!have_dim) throw ParseError(lineno, 1, "dim must precede field");
      if (have_field) throw ParseError(lineno, 1, "duplicate field line");
      std::string f;
      ls >> f;
      try {
        field = FieldSpec::parse(f);
      } catch (const BadParameterError& e) {
        throw ParseError(lineno, 7, e.what());
      }
      have_field = true;
      L = LieAlgebra(field, dim);
      continue;
    }
    if (kw[0] == '[') {
      if (!have_field) throw ParseError(lineno, 1, "field must precede brackets");
      // rejoin the line after the keyword split
      std::string rest;
      std::getline(ls, rest);
      std::string full = kw + rest;
      auto rb = full.find(']');
      auto comma = full.find(',');
      if (rb == std::string::npos || comma == std::string::npos || comma > rb)
        throw ParseError(lineno, 1, "expected [i,j]");
      int i, j;
      try {
        i = std::stoi(full.substr(1, comma - 1));
        j = std::stoi(full.substr(comma + 1, rb - comma - 1));
      } catch (...) {
        throw ParseError(lineno, 2, "bad bracket indices");
      }
      if (i == j) throw ParseError(lineno, 2, "self-bracket forbidden");
      if (i < 1 || j < 1 || i > static_cast<int>(dim) || j > static_cast<int>(dim))
        throw ParseError(lineno, 2, "bracket index out of range");
      if (i > j) throw ParseError(lineno, 2, "store brackets with i < j");
      if (!seen.insert({i, j}).second)
        throw ParseError(lineno, 1, "duplicate bracket line");
      auto eq = full.find('=', rb);
      if (eq == std::string::npos) throw ParseError(lineno, static_cast<int>(rb), "expected =");
      std::string rhs = full.substr(eq + 1);
      Vec v = zero_vec(field, dim);
      // split on '+'
      std::vector<std::string> terms;
      std::string cur;
      for (char c : rhs) {
        if (c == '+') {
          terms.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      terms.push_back(cur);
      for (auto& term : terms) {
        std::string t;
        for (char c : term)
          if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
        if (t.empty()) throw ParseError(lineno, static_cast<int>(eq), "empty term");
        auto star = t.find('*');
        std::string coeff = "1", idx = t;
        if (star != std::string::npos) {
          coeff = t.substr(0, star);
          idx = t.substr(star + 1);
        }
        for (char c : idx)
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(lineno, static_cast<int>(eq), "term must end in a basis index");
        int k = std::stoi(idx);
        if (k < 1 || k > static_cast<int>(dim))
          throw ParseError(lineno, static_cast<int>(eq), "target index out of range");
        v[k - 1] += parse_coeff(field, coeff, lineno, static_cast<int>(eq));
      }
      L.set_bracket(i - 1, j - 1, v);
      continue;
    }
    throw ParseError(lineno, 1, "unrecognized line '" + kw + "'");
  }
  if (!have_dim || !have_field) throw ParseError(lineno, 1, "missing dim or field header");
  validate(L);
  return L;
}

std::string serialize_algebra(const LieAlgebra& L) {
  std::ostringstream os;
  os << "dim " << L.dim() << "\n";
  os << "field " << L.field().name() << "\n";
  for (const auto& [ij, v] : L.table()) {
    os << "[" << ij.first + 1 << "," << ij.second + 1 << "] =";
    bool first = true;
    for (std::size_t k = 0; k < L.dim(); ++k) {
      if (v[k].is_zero()) continue;
      os << (first ? " " : " + ");
      if (!v[k].is_one()) os << v[k].to_string() << "*";
      os << k + 1;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

std::string serialize_algebra_json(const LieAlgebra& L) {
  nlohmann::json j;
  j["dim"] = L.dim();
  j["field"] = L.field().name();
  j["brackets"] = nlohmann::json::array();
  for (const auto& [ij, v] : L.table()) {
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t k = 0; k < L.dim(); ++k)
      if (!v[k].is_zero())
        terms.push_back(nlohmann::json::array({k + 1, v[k].to_string()}));
    j["brackets"].push_back(
        nlohmann::json::array({ij.first + 1, ij.second + 1, terms}));
  }
  return j.dump();
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameterError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

}  // namespace liealg
