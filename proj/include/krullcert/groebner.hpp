#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "krullcert/polynomial.hpp"

namespace krullcert {

/// Lexicographic or graded-reverse-lexicographic order over a variable
/// priority list (priority[0] is the most significant variable).
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex(std::size_t arity);
  static MonomialOrder lex(std::vector<std::size_t> priority);
  static MonomialOrder grevlex(std::size_t arity);
  /// Grevlex on priority[0..split), ties broken by grevlex on the rest. Any
  /// monomial involving the first block beats every monomial free of it.
  static MonomialOrder block(std::vector<std::size_t> priority, std::size_t split);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t arity() const { return priority_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Index of the leading term of a nonzero polynomial.
  std::size_t lead_index(const Polynomial& p) const;
  const Term& lead(const Polynomial& p) const { return p.terms()[lead_index(p)]; }

  /// True when the order coincides with the storage order of Polynomial.
  bool is_storage_order() const { return storage_; }

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> priority);

  std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) const;

  Kind kind_;
  std::vector<std::size_t> priority_;
  std::size_t split_ = 0;
  bool storage_ = false;
};

/// Reduced Groebner basis with an optional cofactor matrix:
/// basis[i] = sum_k cofactors[i][k] * inputs[k], exactly.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::lex(0);
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
  std::size_t input_count = 0;
  bool has_cofactors = false;

  bool is_unit() const;
};

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         bool track_cofactors = true);

/// Result of dividing by a basis: p = sum quotients[i]*basis[i] + remainder.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

Division divide(const Polynomial& p, std::span<const Polynomial> divisors,
                const MonomialOrder& order);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Cofactors c_k with sum c_k * gens[k] = p, or nullopt when p is not in (gens).
using CofactorCombo = std::vector<Polynomial>;

std::optional<CofactorCombo> ideal_membership(const Polynomial& p,
                                              std::span<const Polynomial> gens);
/// Same test against a basis that already carries cofactors.
std::optional<CofactorCombo> ideal_membership(const Polynomial& p, const GroebnerBasis& gb);

struct RadicalWitness {
  std::uint32_t exponent = 0;
  CofactorCombo cofactors;  ///< p^exponent = sum cofactors[k] * gens[k]
};

/// Ascending exponent search is capped at this value.
inline constexpr std::uint32_t kRadicalExponentCap = 64;

/// Least m with p^m in (gens), after a positive Rabinowitsch test. Throws
/// Error when the exponent cap is hit.
std::optional<RadicalWitness> radical_membership(const Polynomial& p,
                                                 std::span<const Polynomial> gens);

/// Forces the generic Groebner route even for monomial input (used to
/// cross-check the monomial shortcut).
std::optional<RadicalWitness> radical_membership_generic(const Polynomial& p,
                                                         std::span<const Polynomial> gens);

/// Generators of (gens) intersected with K[keep], via a block-order basis
/// with the eliminated variables ranked highest. Output lives in the input ring.
std::vector<Polynomial> elimination(std::span<const Polynomial> gens,
                                    const std::vector<std::size_t>& keep);

/// Generators of (a) intersected with (b).
std::vector<Polynomial> ideal_intersection(std::span<const Polynomial> a,
                                           std::span<const Polynomial> b);

/// Generators of (I : x) computed as (I intersected with (x)) / x.
std::vector<Polynomial> ideal_quotient(std::span<const Polynomial> ideal, const Polynomial& x);

/// True iff a*x in I implies a in I.
bool is_nonzerodivisor(const Polynomial& x, std::span<const Polynomial> ideal_gens);

/// True iff 1 lies in (gens).
bool is_unit_ideal(std::span<const Polynomial> gens);

/// Exact quotient p / q; throws InvalidInput when q does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

}  // namespace krullcert
