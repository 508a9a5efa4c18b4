#include "qcurves/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace qcurves {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw std::invalid_argument("MultiPoly: duplicate variable " + vars_[i]);
    }
  }
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  const auto idx = p.index_of(name);
  if (!idx) throw std::invalid_argument("MultiPoly: unknown variable " + name);
  Exponents e(p.vars_.size(), 0);
  e[*idx] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exps, const Rational& c) {
  MultiPoly p(std::move(variables));
  if (exps.size() != p.vars_.size()) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](int e) { return e == 0; }));
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational{} : it->second;
}

std::optional<std::size_t> MultiPoly::index_of(const std::string& name) const {
  const auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::optional<long> MultiPoly::homogeneous_weight(std::span<const int> weights) const {
  if (weights.size() != vars_.size()) throw std::invalid_argument("MultiPoly: weight length mismatch");
  std::optional<long> common;
  for (const auto& [e, c] : terms_) {
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(e[i]) * weights[i];
    if (common && *common != w) return std::nullopt;
    common = w;
  }
  return common;
}

bool MultiPoly::is_homogeneous(std::span<const int> weights) const {
  return is_zero() || homogeneous_weight(weights).has_value();
}

std::optional<long> MultiPoly::total_degree() const {
  const std::vector<int> ones(vars_.size(), 1);
  return homogeneous_weight(ones);
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_same_ring(const MultiPoly& other, const char* op) const {
  if (vars_ != other.vars_) {
    throw std::invalid_argument(std::string("MultiPoly ") + op + ": variable lists differ");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same_ring(rhs, "+");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_same_ring(rhs, "-");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  require_same_ring(rhs, "*");
  MultiPoly out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

namespace {

// Inverse of a single-term polynomial; anything else is not a unit.
MultiPoly invert_monomial(const MultiPoly& p, const std::string& var) {
  if (p.size() != 1) {
    throw std::domain_error("substitute: negative power of " + var + " needs a monomial image");
  }
  const auto& [e, c] = *p.terms().begin();
  Exponents inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  return MultiPoly::monomial(p.variables(), inv, c.inverse());
}

}  // namespace

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment) const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }

  std::vector<const MultiPoly*> images(vars_.size(), nullptr);
  const std::vector<std::string>* target = nullptr;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = assignment.find(vars_[i]);
    if (it == assignment.end()) {
      if (used[i]) throw std::invalid_argument("substitute: no image for variable " + vars_[i]);
      continue;
    }
    images[i] = &it->second;
    if (target == nullptr) {
      target = &it->second.variables();
    } else if (*target != it->second.variables()) {
      throw std::invalid_argument("substitute: images use different variable lists");
    }
  }
  if (target == nullptr) {
    // Constant polynomial with no usable images: keep the ring.
    return *this;
  }

  std::vector<std::map<int, MultiPoly>> power_cache(vars_.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = power_cache[i];
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    MultiPoly val = k >= 0 ? images[i]->pow(static_cast<unsigned>(k))
                           : invert_monomial(*images[i], vars_[i]).pow(static_cast<unsigned>(-k));
    return cache.emplace(k, std::move(val)).first->second;
  };

  MultiPoly out(*target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(*target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= power(i, e[i]);
    }
    out += term;
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rational base = e[i] > 0 ? point[i] : point[i].inverse();
      for (int k = 0; k < std::abs(e[i]); ++k) t *= base;
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::in_variables(const std::vector<std::string>& variables) const {
  MultiPoly out(variables);
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto idx = out.index_of(vars_[i]);
    bool occurs = false;
    for (const auto& [e, c] : terms_) occurs = occurs || e[i] != 0;
    if (!idx) {
      if (occurs) throw std::invalid_argument("in_variables: variable " + vars_[i] + " not in target");
      map[i] = variables.size();
    } else {
      map[i] = *idx;
    }
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (map[i] < variables.size()) ne[map[i]] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

std::string monomial_to_string(const std::vector<std::string>& vars, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_to_string(vars_, e);
    if (mono.empty()) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += mono;
    }
  }
  return out;
}

// ---- parsing -------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("MultiPoly::parse: " + what + " at offset " + std::to_string(pos_) +
                                " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly sum() {
    MultiPoly acc(vars_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly t = product();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly product() {
    MultiPoly acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  int exponent() {
    const bool neg = accept('-');
    const int e = std::stoi(digits());
    return neg ? -e : e;
  }

  MultiPoly power() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = sum();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) {
        const int e = exponent();
        if (e < 0) fail("negative power of a parenthesized expression");
        inner = inner.pow(static_cast<unsigned>(e));
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      if (accept('/')) num += "/" + digits();
      return MultiPoly::constant(vars_, Rational::parse(num));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = s_.substr(start, pos_ - start);
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      Exponents e(vars_.size(), 0);
      e[static_cast<std::size_t>(it - vars_.begin())] = accept('^') ? exponent() : 1;
      return MultiPoly::monomial(vars_, e);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, std::vector<std::string> variables) {
  MultiPoly ring(std::move(variables));
  return Parser(text, ring.vars_).parse();
}

}  // namespace qcurves
