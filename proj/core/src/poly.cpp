#include "rqn/poly.hpp"

#include <algorithm>
#include <cctype>

#include "rqn/errors.hpp"

namespace rqn {

Rational make_rational(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    mpz_class num(s.substr(0, slash));
    mpz_class den(1);
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::pair<std::string_view, std::string_view> split_suffix(std::string_view s) {
  std::size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  return {s.substr(0, k), s.substr(k)};
}

}  // namespace

bool var_less(std::string_view a, std::string_view b) {
  auto [pa, sa] = split_suffix(a);
  auto [pb, sb] = split_suffix(b);
  if (pa != pb) return pa < pb;
  // compare digit strings numerically, ignoring leading zeros
  auto strip = [](std::string_view d) {
    while (d.size() > 1 && d[0] == '0') d.remove_prefix(1);
    return d;
  };
  auto da = strip(sa), db = strip(sb);
  if (da.size() != db.size()) return da.size() < db.size();
  if (da != db) return da < db;
  return a < b;
}

Monomial Monomial::var(std::string name, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.f_.emplace_back(std::move(name), exp);
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [_, e] : f_) d += e;
  return d;
}

std::uint32_t Monomial::degree_in(std::string_view name) const {
  for (const auto& [v, e] : f_)
    if (v == name) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto i = f_.begin(), j = o.f_.begin();
  while (i != f_.end() || j != o.f_.end()) {
    if (j == o.f_.end() || (i != f_.end() && var_less(i->first, j->first))) {
      r.f_.push_back(*i++);
    } else if (i == f_.end() || var_less(j->first, i->first)) {
      r.f_.push_back(*j++);
    } else {
      r.f_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::without(std::string_view name) const {
  Monomial r;
  for (const auto& fac : f_)
    if (fac.first != name) r.f_.push_back(fac);
  return r;
}

Monomial Monomial::restrict_to(const std::set<std::string>& keep) const {
  Monomial r;
  for (const auto& fac : f_)
    if (keep.count(fac.first)) r.f_.push_back(fac);
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += '*';
    s += v;
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return var_less(fa[i].first, fb[i].first);
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  // equal degree and equal prefix means equal monomials
  return false;
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Rational(c));
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::var(const std::string& name) { return monomial(Monomial::var(name), 1); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw ParameterizedAlgebra("expected a constant, got " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return 0;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, _] : terms_)
    for (const auto& [v, e] : m.factors()) out.insert(v);
  return out;
}

std::uint32_t Poly::total_degree() const { return terms_.empty() ? 0 : terms_[0].first.degree(); }

std::uint32_t Poly::degree_in(std::string_view name) const {
  std::uint32_t d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m.degree_in(name));
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return grlex_greater(t.first, k); });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{m, c});
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin(), j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && grlex_greater(i->first, j->first))) {
      r.terms_.push_back(*i++);
    } else if (i == terms_.end() || grlex_greater(j->first, i->first)) {
      r.terms_.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (c != 0) r.terms_.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::map<Monomial, Rational, GrlexGreater> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this - o; }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned e) const {
  Poly r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

Rational Poly::eval(const std::map<std::string, Rational>& at) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = at.find(v);
      if (it == at.end()) throw MissingVariable("no value for variable '" + v + "'");
      Rational p = 1;
      for (std::uint32_t k = 0; k < e; ++k) p *= it->second;
      t *= p;
    }
    sum += t;
  }
  sum.canonicalize();
  return sum;
}

Poly Poly::substitute(const std::map<std::string, Poly>& with) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = with.find(v);
      if (it == with.end())
        rest = rest * Monomial::var(v, e);
      else
        t *= it->second.pow(e);
    }
    out += t * monomial(rest, 1);
  }
  return out;
}

Poly Poly::substitute_cleared(const std::string& name, const Poly& num, const Poly& den) const {
  const auto d = degree_in(name);
  Poly out;
  for (const auto& [m, c] : terms_) {
    auto e = m.degree_in(name);
    out += monomial(m.without(name), c) * num.pow(e) * den.pow(d - e);
  }
  return out;
}

std::map<Monomial, Poly, GrlexGreater> Poly::split(const std::set<std::string>& outer) const {
  std::map<Monomial, Poly, GrlexGreater> out;
  for (const auto& [m, c] : terms_) {
    Monomial o = m.restrict_to(outer);
    Monomial inner;
    for (const auto& fac : m.factors())
      if (!outer.count(fac.first)) inner = inner * Monomial::var(fac.first, fac.second);
    out[o].add_term(inner, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + '*';
      s += m.to_string();
    }
  }
  return s;
}

// Recursive-descent parser for the literal grammar.
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("poly literal '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = unary();
    for (;;) {
      if (eat('*')) {
        p *= unary();
      } else if (eat('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        Rational inv = 1 / d.constant_value();
        inv.canonicalize();
        p *= Poly(inv);
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return Poly::var(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return Parser(text).run(); }

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  return {};
}

Rational poly_eval(const Poly& p, const std::map<std::string, Rational>& at) { return p.eval(at); }

}  // namespace rqn
