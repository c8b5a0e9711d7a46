#include "liealg/reduction.hpp"

#include <cctype>
#include <sstream>

namespace liealg {

Scalar ScalarExpr::eval(FieldSpec f, const std::map<std::string, Scalar>& bind) const {
  switch (kind) {
    case Const:
      return Scalar(f, cval);
    case Param: {
      auto it = bind.find(param);
      if (it == bind.end()) throw BadParameterError("unbound parameter " + param);
      return it->second;
    }
    case Add:
      return a->eval(f, bind) + b->eval(f, bind);
    case Sub:
      return a->eval(f, bind) - b->eval(f, bind);
    case Mul:
      return a->eval(f, bind) * b->eval(f, bind);
    case Neg:
      return -a->eval(f, bind);
    case Inv:
      return a->eval(f, bind).inv();  // DivisionByZeroError surfaces upstream
  }
  throw BadParameterError("corrupt expression");
}

std::string ScalarExpr::to_string() const {
  switch (kind) {
    case Const:
      return std::to_string(cval);
    case Param:
      return param;
    case Add:
      return "(" + a->to_string() + " + " + b->to_string() + ")";
    case Sub:
      return "(" + a->to_string() + " - " + b->to_string() + ")";
    case Mul:
      return a->to_string() + "*" + b->to_string();
    case Neg:
      return "-" + a->to_string();
    case Inv:
      return "inv(" + a->to_string() + ")";
  }
  return "?";
}

namespace {

using ExprPtr = std::shared_ptr<ScalarExpr>;

ExprPtr make(ScalarExpr e) { return std::make_shared<ScalarExpr>(std::move(e)); }

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit ExprParser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw BadParameterError("expression error at '" + s.substr(pos) + "': " + msg);
  }

  ScalarExpr parse_expr() {
    ScalarExpr lhs = parse_term();
    for (;;) {
      skip();
      if (eat('+')) {
        ScalarExpr rhs = parse_term();
        ScalarExpr e;
        e.kind = ScalarExpr::Add;
        e.a = make(lhs);
        e.b = make(rhs);
        lhs = e;
      } else if (eat('-')) {
        ScalarExpr rhs = parse_term();
        ScalarExpr e;
        e.kind = ScalarExpr::Sub;
        e.a = make(lhs);
        e.b = make(rhs);
        lhs = e;
      } else {
        return lhs;
      }
    }
  }
  ScalarExpr parse_term() {
    ScalarExpr lhs = parse_factor();
    for (;;) {
      skip();
      if (eat('*')) {
        ScalarExpr rhs = parse_factor();
        ScalarExpr e;
        e.kind = ScalarExpr::Mul;
        e.a = make(lhs);
        e.b = make(rhs);
        lhs = e;
      } else {
        return lhs;
      }
    }
  }
  ScalarExpr parse_factor() {
    skip();
    if (eat('-')) {
      ScalarExpr e;
      e.kind = ScalarExpr::Neg;
      e.a = make(parse_factor());
      return e;
    }
    if (eat('(')) {
      ScalarExpr e = parse_expr();
      if (!eat(')')) fail("missing )");
      return e;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      long long v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        v = v * 10 + (s[pos++] - '0');
      ScalarExpr e;
      e.kind = ScalarExpr::Const;
      e.cval = v;
      return e;
    }
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      std::string id;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                s[pos] == '_'))
        id.push_back(s[pos++]);
      if (id == "inv") {
        if (!eat('(')) fail("inv needs (");
        ScalarExpr inner = parse_expr();
        if (!eat(')')) fail("missing )");
        ScalarExpr e;
        e.kind = ScalarExpr::Inv;
        e.a = make(inner);
        return e;
      }
      ScalarExpr e;
      e.kind = ScalarExpr::Param;
      e.param = id;
      return e;
    }
    fail("expected factor");
  }
};

ScalarExpr parse_expression(const std::string& text) {
  ExprParser p(text);
  ScalarExpr e = p.parse_expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing junk");
  return e;
}

// right-hand side of a replace: sum of terms, each ending in a basis index
std::vector<std::pair<ScalarExpr, int>> parse_combination(const std::string& text) {
  // split on top-level + and - (keeping signs), then peel the final *index
  std::vector<std::pair<ScalarExpr, int>> out;
  std::vector<std::pair<std::string, int>> parts;  // (term text, sign)
  int depth = 0, sign = 1;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      parts.push_back({cur, sign});
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-') && !cur.empty()) {
      flush();
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    if (depth == 0 && ch == '-' && cur.empty() && parts.empty()) {
      sign = -1;
      continue;
    }
    cur.push_back(ch);
  }
  flush();
  for (auto& [term, sgn] : parts) {
    // final *integer factor = basis index; bare integer = coefficient 1
    std::size_t star = std::string::npos;
    int d2 = 0;
    for (std::size_t i = term.size(); i-- > 0;) {
      if (term[i] == ')') ++d2;
      if (term[i] == '(') --d2;
      if (d2 == 0 && term[i] == '*') {
        star = i;
        break;
      }
    }
    std::string coeff_text, idx_text;
    if (star == std::string::npos) {
      idx_text = term;
      coeff_text = "1";
    } else {
      coeff_text = term.substr(0, star);
      idx_text = term.substr(star + 1);
    }
    // trim
    auto trim = [](std::string& t) {
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    trim(idx_text);
    trim(coeff_text);
    for (char c : idx_text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw BadParameterError("replace term must end in a basis index: " + term);
    int idx = std::stoi(idx_text);
    ScalarExpr c = parse_expression(coeff_text);
    if (sgn < 0) {
      ScalarExpr n;
      n.kind = ScalarExpr::Neg;
      n.a = make(c);
      c = n;
    }
    out.push_back({c, idx});
  }
  return out;
}

}  // namespace

ReductionScript ReductionScript::parse(const std::string& text) {
  ReductionScript sc;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "bind") {
      std::string kv;
      while (ls >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw BadParameterError("bad bind entry: " + kv);
        sc.default_bindings[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
      }
    } else if (kw == "replace") {
      ReductionStep st;
      st.kind = ReductionStep::Replace;
      ls >> st.target;
      std::string arrow;
      ls >> arrow;
      if (arrow != "<-") throw BadParameterError("replace expects '<-': " + line);
      std::string rest;
      std::getline(ls, rest);
      st.combination = parse_combination(rest);
      st.text = "replace " + std::to_string(st.target) + " <-" + rest;
      sc.steps.push_back(std::move(st));
    } else if (kw == "scale") {
      ReductionStep st;
      st.kind = ReductionStep::Scale;
      ls >> st.target;
      std::string by;
      ls >> by;
      if (by != "by") throw BadParameterError("scale expects 'by': " + line);
      std::string rest;
      std::getline(ls, rest);
      st.factor = parse_expression(rest);
      st.text = "scale " + std::to_string(st.target) + " by" + rest;
      sc.steps.push_back(std::move(st));
    } else if (kw == "swap") {
      ReductionStep st;
      st.kind = ReductionStep::Swap;
      ls >> st.target >> st.other;
      st.text = "swap " + std::to_string(st.target) + " " + std::to_string(st.other);
      sc.steps.push_back(std::move(st));
    } else {
      throw BadParameterError("unknown script line: " + line);
    }
  }
  return sc;
}

std::string ReductionScript::serialize() const {
  std::ostringstream os;
  if (!default_bindings.empty()) {
    os << "bind";
    for (const auto& [k, v] : default_bindings) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const auto& st : steps) {
    if (!st.text.empty()) {
      os << st.text << "\n";
      continue;
    }
    if (st.kind == ReductionStep::Swap)
      os << "swap " << st.target << " " << st.other;
    else if (st.kind == ReductionStep::Scale)
      os << "scale " << st.target << " by " << st.factor.to_string();
    else {
      os << "replace " << st.target << " <- ";
      for (std::size_t i = 0; i < st.combination.size(); ++i) {
        if (i) os << " + ";
        os << st.combination[i].first.to_string() << "*" << st.combination[i].second;
      }
    }
    os << "\n";
  }
  return os.str();
}

std::map<std::string, Scalar> bind_ints(FieldSpec f,
                                        const std::map<std::string, long long>& vals) {
  std::map<std::string, Scalar> out;
  for (const auto& [k, v] : vals) out.emplace(k, Scalar(f, v));
  return out;
}

ReductionOutcome run_reduction(const LieAlgebra& L, const ReductionScript& script,
                               const std::map<std::string, Scalar>& bindings) {
  FieldSpec f = L.field();
  std::size_t n = L.dim();
  LieAlgebra cur = L;
  Matrix total = Matrix::identity(f, n);
  for (const auto& st : script.steps) {
    Matrix step = Matrix::identity(f, n);
    try {
      if (st.kind == ReductionStep::Swap) {
        if (st.target < 1 || st.other < 1 || st.target > static_cast<int>(n) ||
            st.other > static_cast<int>(n))
          throw BadParameterError("swap index out of range: " + st.text);
        std::size_t i = st.target - 1, j = st.other - 1;
        step.at(i, i) = Scalar::zero(f);
        step.at(j, j) = Scalar::zero(f);
        step.at(i, j) = Scalar::one(f);
        step.at(j, i) = Scalar::one(f);
      } else if (st.kind == ReductionStep::Scale) {
        Scalar c = st.factor.eval(f, bindings);
        if (c.is_zero()) throw DivisionByZeroError();
        step.at(st.target - 1, st.target - 1) = c;
      } else {
        if (st.target < 1 || st.target > static_cast<int>(n))
          throw BadParameterError("replace index out of range: " + st.text);
        Vec col = zero_vec(f, n);
        for (const auto& [expr, idx] : st.combination) {
          if (idx < 1 || idx > static_cast<int>(n))
            throw BadParameterError("replace index out of range: " + st.text);
          col[idx - 1] += expr.eval(f, bindings);
        }
        for (std::size_t r = 0; r < n; ++r) step.at(r, st.target - 1) = col[r];
      }
    } catch (const DivisionByZeroError&) {
      throw StepNotInvertibleError(st.text);
    }
    if (!inverse(step)) throw StepNotInvertibleError(st.text);
    cur = apply_basis_change(cur, BasisChange{step});
    total = total * step;
  }
  return {cur, BasisChange{total}};
}

}  // namespace liealg
