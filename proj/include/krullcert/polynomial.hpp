#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "krullcert/error.hpp"

namespace krullcert {

/// Exact coefficient. Over Q this is a reduced fraction with positive
/// denominator; over F_p it is an integer residue in [0, p).
using Coefficient = mpq_class;

/// Coefficient field descriptor: the rationals or a prime field F_p, p < 2^31.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return kind_ == Kind::Rational; }

  /// Brings c into canonical form for this field.
  void normalize(Coefficient& c) const;
  Coefficient from(const Coefficient& c) const;

  Coefficient add(const Coefficient& a, const Coefficient& b) const;
  Coefficient sub(const Coefficient& a, const Coefficient& b) const;
  Coefficient mul(const Coefficient& a, const Coefficient& b) const;
  Coefficient neg(const Coefficient& a) const;
  /// Throws InvalidInput on division by zero.
  Coefficient div(const Coefficient& a, const Coefficient& b) const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  /// True iff this divides other componentwise.
  bool divides(const Monomial& other) const;
  /// Indices of the variables with positive exponent.
  std::vector<std::size_t> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; the caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
  /// Plain lexicographic comparison with variable 0 most significant.
  std::strong_ordering operator<=>(const Monomial& other) const {
    return exps_ <=> other.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
};

/// A free polynomial ring K[x_1..x_n]: ordered variable names and a field.
class PolynomialRing {
 public:
  PolynomialRing(std::vector<std::string> vars, Field field);

  static std::shared_ptr<const PolynomialRing> make(
      std::vector<std::string> vars, Field field = Field::rationals());

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const Field& field() const { return field_; }

  /// Index of a variable by name, or npos.
  std::size_t index_of(std::string_view name) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Same variable names (in order) and same field.
  bool same_as(const PolynomialRing& other) const;

  /// A name not used by any variable, derived from the given stem.
  std::string fresh_name(std::string_view stem) const;

 private:
  std::vector<std::string> vars_;
  Field field_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

/// Builds a ring with the variables of base followed by extra variables.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);

struct Term {
  Monomial monomial;
  Coefficient coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial. Terms are kept with nonzero coefficients
/// only, sorted by descending lexicographic order of their monomials
/// (variable 0 most significant). Values are immutable once built.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Builds from arbitrary terms; duplicates are summed and zeros dropped.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const Coefficient& c);
  /// Adopts terms that are already canonical (sorted, nonzero, normalized).
  static Polynomial from_canonical(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Single term with nonzero coefficient.
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint64_t total_degree() const;
  /// Largest exponent of the given variable.
  std::uint32_t degree_in(std::size_t var) const;
  /// Coefficient of a monomial (zero when absent).
  Coefficient coefficient(const Monomial& m) const;
  /// Coefficient of the constant monomial.
  Coefficient constant_term() const;
  /// Variables occurring in some term.
  std::vector<std::size_t> variables_used() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const Coefficient& c) const;
  Polynomial times_term(const Monomial& m, const Coefficient& c) const;
  Polynomial pow(std::uint64_t n) const;

  /// Substitutes values[i] for variable i; all values share one target ring.
  Polynomial substitute(std::span<const Polynomial> values,
                        const RingPtr& target) const;
  /// Re-expresses this polynomial in a ring that contains all of its
  /// variables (matched by name).
  Polynomial embed(const RingPtr& target) const;

  /// Structural equality (ring compatibility plus identical terms).
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Throws RingMismatch unless both polynomials live in compatible rings.
void require_same_ring(const Polynomial& a, const Polynomial& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

// poly_arith / poly_pow in functional form.
enum class ArithOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op);
Polynomial poly_pow(const Polynomial& p, std::uint64_t n);

/// Parses an expression such as "x^2*y - 3/2*z + 1" in the given ring.
/// Throws ParseError on syntax errors or unknown variables.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Parses "num/den" or "num" into a canonical coefficient of the field.
Coefficient parse_coefficient(std::string_view text, const Field& field);

}  // namespace krullcert
