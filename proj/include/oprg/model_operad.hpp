#pragma once

#include <memory>
#include <string>

#include "oprg/contraction.hpp"

namespace oprg {

// The contraction operad of a model, R_{Adm,T} (intersected with R_1PI when
// the model requires it), wired into the generic carrier interface. Spaces
// are spanned by the model's diagram classes; the universal arity-1 unit is
// adjoined symbolically. Group elements over this carrier form the operadic
// renormalization group of the model.
class ModelCarrier {
 public:
  using Element = ContractionMap;

  explicit ModelCarrier(ModelPtr model, std::size_t cap = 100000)
      : domain_(std::make_shared<DiagramDomain>(model, cap)),
        system_(model_system(model)) {}

  const DomainPtr& domain() const { return domain_; }
  const ModelPtr& model() const { return domain_->model(); }
  const SystemFilter& system() const { return system_; }

  int arity(const Element& a) const { return a.arity; }
  Element zero(int arity) const {
    return zero_contraction_map(domain_, arity);
  }
  Element unit() const { return unit_contraction_map(domain_); }
  Element add(const Element& a, const Element& b) const {
    return oprg::add(a, b);
  }
  Element scale(const Element& a, const Rational& r) const {
    return oprg::scale(a, r);
  }
  Element act(const Element& a, const Permutation& sigma) const {
    return oprg::act(a, sigma);
  }
  Element pcomp(const Element& a, int slot, const Element& b) const {
    return oprg::pcomp(a, slot, b);
  }
  bool equal(const Element& a, const Element& b) const {
    return oprg::equal(a, b);
  }
  Element random(int arity, std::mt19937& rng) const {
    return random_contraction_map(domain_, system_, arity, rng);
  }
  std::string render(const Element& a) const {
    return render_contraction_map(a);
  }

 private:
  DomainPtr domain_;
  SystemFilter system_;
};

}  // namespace oprg
