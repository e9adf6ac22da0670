#include "krullcert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace krullcert {

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31)) throw InvalidInput("prime field characteristic out of range");
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(Kind::Prime, p);
}

void Field::normalize(Coefficient& c) const {
  c.canonicalize();
  if (kind_ == Kind::Rational) return;
  mpz_class mod(p_);
  mpz_class num = c.get_num() % mod;
  mpz_class den = c.get_den() % mod;
  if (den == 0) throw InvalidInput("denominator vanishes modulo " + std::to_string(p_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (num * inv) % mod;
  if (r < 0) r += mod;
  c = Coefficient(r);
}

Coefficient Field::from(const Coefficient& c) const {
  Coefficient r = c;
  normalize(r);
  return r;
}

Coefficient Field::add(const Coefficient& a, const Coefficient& b) const {
  Coefficient r = a + b;
  if (kind_ == Kind::Prime) normalize(r);
  return r;
}

Coefficient Field::sub(const Coefficient& a, const Coefficient& b) const {
  Coefficient r = a - b;
  if (kind_ == Kind::Prime) normalize(r);
  return r;
}

Coefficient Field::mul(const Coefficient& a, const Coefficient& b) const {
  Coefficient r = a * b;
  if (kind_ == Kind::Prime) normalize(r);
  return r;
}

Coefficient Field::neg(const Coefficient& a) const {
  Coefficient r = -a;
  if (kind_ == Kind::Prime) normalize(r);
  return r;
}

Coefficient Field::div(const Coefficient& a, const Coefficient& b) const {
  if (b == 0) throw InvalidInput("division by zero coefficient");
  if (kind_ == Kind::Rational) return Coefficient(a / b);
  mpz_class mod(p_);
  mpz_class inv;
  mpz_class bz = b.get_num();
  mpz_invert(inv.get_mpz_t(), bz.get_mpz_t(), mod.get_mpz_t());
  return mul(a, Coefficient(inv));
}

// ------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) s.push_back(i);
  }
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], b.exps_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(r.exps_[i], b.exps_[i]);
  return r;
}

// ------------------------------------------------------- PolynomialRing

PolynomialRing::PolynomialRing(std::vector<std::string> vars, Field field)
    : vars_(std::move(vars)), field_(field) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_')) {
      throw InvalidInput("invalid variable name '" + v + "'");
    }
    for (char ch : v) {
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
        throw InvalidInput("invalid variable name '" + v + "'");
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[j] == v) throw InvalidInput("duplicate variable '" + v + "'");
    }
  }
}

std::shared_ptr<const PolynomialRing> PolynomialRing::make(std::vector<std::string> vars,
                                                           Field field) {
  return std::make_shared<const PolynomialRing>(std::move(vars), field);
}

std::size_t PolynomialRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return npos;
}

bool PolynomialRing::same_as(const PolynomialRing& other) const {
  return this == &other || (vars_ == other.vars_ && field_ == other.field_);
}

std::string PolynomialRing::fresh_name(std::string_view stem) const {
  std::string name(stem);
  for (int k = 0; index_of(name) != npos; ++k) name = std::string(stem) + "_" + std::to_string(k);
  return name;
}

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
  auto vars = base->variables();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return PolynomialRing::make(std::move(vars), base->field());
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) throw RingMismatch("polynomial without a ring");
  if (!a->same_as(*b)) throw RingMismatch("operands belong to different polynomial rings");
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
}

// ----------------------------------------------------------- Polynomial

namespace {

struct Descending {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

using TermMap = std::map<Monomial, Coefficient, Descending>;

std::vector<Term> from_map(TermMap&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, std::move(c)});
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Field& f = ring_->field();
  TermMap acc;
  for (auto& t : terms) {
    if (t.monomial.arity() != ring_->arity()) {
      throw ShapeError("monomial arity does not match ring arity");
    }
    auto [it, inserted] = acc.try_emplace(t.monomial, f.from(t.coeff));
    if (!inserted) it->second = f.add(it->second, f.from(t.coeff));
  }
  terms_ = from_map(std::move(acc));
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  const auto arity = ring->arity();
  return Polynomial::monomial(std::move(ring), Monomial(arity), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw ShapeError("variable index out of range");
  Monomial m(ring->arity());
  m[index] = 1;
  return Polynomial::monomial(std::move(ring), std::move(m), Coefficient(1));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Coefficient& c) {
  Polynomial p(std::move(ring));
  if (m.arity() != p.ring_->arity()) throw ShapeError("monomial arity does not match ring arity");
  Coefficient cc = p.ring_->field().from(c);
  if (cc != 0) p.terms_.push_back(Term{std::move(m), std::move(cc)});
  return p;
}

Polynomial Polynomial::from_canonical(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

Coefficient Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Coefficient(0);
}

Coefficient Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Coefficient(0);
}

std::vector<std::size_t> Polynomial::variables_used() const {
  std::vector<bool> used(ring_ ? ring_->arity() : 0, false);
  for (const auto& t : terms_) {
    for (auto v : t.monomial.support()) used[v] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.push_back(i);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  const Field& f = ring_->field();
  for (auto& t : r.terms_) t.coeff = f.neg(t.coeff);
  return r;
}

namespace {

Polynomial merge_add(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(a, b);
  const Field& f = a.ring()->field();
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].monomial > y[j].monomial)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].monomial > x[i].monomial) {
      out.push_back(Term{y[j].monomial, subtract ? f.neg(y[j].coeff) : y[j].coeff});
      ++j;
    } else {
      Coefficient c = subtract ? f.sub(x[i].coeff, y[j].coeff) : f.add(x[i].coeff, y[j].coeff);
      if (c != 0) out.push_back(Term{x[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_canonical(a.ring(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge_add(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge_add(a, b, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const Field& f = a.ring_->field();
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (b.terms_.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.times_term(a.terms_[0].monomial, a.terms_[0].coeff);
  TermMap acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Coefficient c = f.mul(s.coeff, t.coeff);
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, c);
      if (!inserted) it->second = f.add(it->second, c);
    }
  }
  Polynomial r(a.ring_);
  r.terms_ = from_map(std::move(acc));
  return r;
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  const Field& f = ring_->field();
  Coefficient cc = f.from(c);
  if (cc == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = f.mul(t.coeff, cc);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Coefficient& c) const {
  const Field& f = ring_->field();
  Coefficient cc = f.from(c);
  if (cc == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the lexicographic order.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, f.mul(t.coeff, cc)});
  return r;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values, const RingPtr& target) const {
  if (values.size() != ring_->arity()) throw ShapeError("substitution needs one value per variable");
  for (const auto& v : values) require_same_ring(v.ring(), target);
  Polynomial result(target);
  // Cache powers per variable; exponents are small at desk scale.
  std::vector<std::vector<Polynomial>> powers(values.size());
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * values[var]);
    return cache[e];
  };
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t v = 0; v < values.size(); ++v) {
      if (t.monomial[v] != 0) term = term * power_of(v, t.monomial[v]);
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::embed(const RingPtr& target) const {
  if (ring_->same_as(*target)) return Polynomial(target, terms_);
  std::vector<std::size_t> map(ring_->arity());
  for (std::size_t i = 0; i < ring_->arity(); ++i) {
    map[i] = target->index_of(ring_->variables()[i]);
  }
  if (target->field() != ring_->field()) throw RingMismatch("cannot embed across fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] == PolynomialRing::npos) {
        throw RingMismatch("variable '" + ring_->variables()[i] + "' missing in target ring");
      }
      m[map[i]] = t.monomial[i];
    }
    out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_ || !b.ring_) return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Coefficient c = t.coeff;
    bool negative = ring_->field().is_rational() && c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool one = t.monomial.is_one();
    if (c != 1 || one) {
      os << c.get_str();
      if (!one) os << "*";
    }
    bool first_var = true;
    for (std::size_t v = 0; v < t.monomial.arity(); ++v) {
      auto e = t.monomial[v];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->variables()[v];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return p + q;
    case ArithOp::Sub:
      return p - q;
    case ArithOp::Mul:
      return p * q;
  }
  return p;
}

Polynomial poly_pow(const Polynomial& p, std::uint64_t n) { return p.pow(n); }

// --------------------------------------------------------------- parser

Coefficient parse_coefficient(std::string_view text, const Field& field) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty coefficient");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("malformed coefficient '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw ParseError("malformed coefficient '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Coefficient c;
  if (c.set_str(s, 10) != 0) throw ParseError("malformed coefficient '" + s + "'");
  if (c.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  try {
    field.normalize(c);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
  return c;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(ring_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(ring_->field().div(Coefficient(1), d.constant_term()));
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      auto e = std::stoull(std::string(text_.substr(start, pos_ - start)));
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (ch == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(
          ring_, parse_coefficient(text_.substr(start, pos_ - start), ring_->field()));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (idx == PolynomialRing::npos) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, idx);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return ExprParser(text, ring).parse();
}

}  // namespace krullcert
