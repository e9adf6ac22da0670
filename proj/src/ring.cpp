#include "krullcert/ring.hpp"

#include <algorithm>

namespace krullcert {

Ring::Ring(RingPtr poly, std::vector<Polynomial> relations)
    : poly_(std::move(poly)), relations_(std::move(relations)) {
  if (!poly_) throw InvalidInput("ring without a polynomial ring");
  for (const auto& r : relations_) require_same_ring(poly_, r.ring());
  auto gb = buchberger(relations_, MonomialOrder::grevlex(poly_->arity()), false);
  gb.ring = poly_;
  basis_ = std::make_shared<const GroebnerBasis>(std::move(gb));
}

Polynomial Ring::reduce(const Polynomial& p) const {
  require_same_ring(poly_, p.ring());
  return normal_form(p, *basis_);
}

bool Ring::has_monomial_relations() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const Polynomial& r) { return r.is_zero() || r.is_monomial(); });
}

}  // namespace krullcert
