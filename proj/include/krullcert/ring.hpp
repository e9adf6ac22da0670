#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "krullcert/groebner.hpp"

namespace krullcert {

/// Quotient K[x]/(relations). The relation basis is computed once at
/// construction.
class Ring {
 public:
  explicit Ring(RingPtr poly, std::vector<Polynomial> relations = {});

  const RingPtr& poly() const { return poly_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& relation_basis() const { return *basis_; }
  std::size_t arity() const { return poly_->arity(); }

  Polynomial reduce(const Polynomial& p) const;
  bool is_zero(const Polynomial& p) const { return reduce(p).is_zero(); }
  /// 1 = 0 in the quotient.
  bool is_trivial() const { return basis_->is_unit(); }
  /// Every relation is a single term (or zero).
  bool has_monomial_relations() const;

  Polynomial parse(std::string_view text) const { return parse_polynomial(text, poly_); }
  Polynomial zero() const { return Polynomial(poly_); }
  Polynomial one() const { return Polynomial::constant(poly_, 1); }

 private:
  RingPtr poly_;
  std::vector<Polynomial> relations_;
  std::shared_ptr<const GroebnerBasis> basis_;
};

}  // namespace krullcert
