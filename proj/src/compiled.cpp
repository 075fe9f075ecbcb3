#include "supercauchy/compiled.hpp"

#include <stdexcept>

namespace supercauchy {

int WordTable::intern(Monomial w) {
  for (unsigned a : w.alpha) {
    if (a != 0) throw std::invalid_argument("WordTable words must be bosonic-free");
  }
  w.alpha.assign(static_cast<std::size_t>(base_.m), 0);
  auto it = index_.find(w);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(words_.size());
  index_.emplace(w, id);
  words_.push_back(std::move(w));
  return id;
}

NumericSuperValue WordTable::to_value(std::span<const double> coeffs) const {
  if (coeffs.size() != words_.size()) throw std::invalid_argument("coefficient array size mismatch");
  NumericSuperValue out(base_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (coeffs[i] != 0.0) out.add_word(words_[i], coeffs[i]);
  }
  return out;
}

CompiledElement::CompiledElement(const SuperElement& e, WordTable& table) {
  n_slots_ = e.signature().m;
  if (n_slots_ > 6) throw std::invalid_argument("CompiledElement supports at most 6 bosonic slots");
  terms_.reserve(e.terms().size());
  for (const auto& [w, c] : e.terms()) {
    Term t;
    t.c = c.to_double();
    for (int i = 0; i < n_slots_; ++i) {
      const unsigned a = w.alpha[static_cast<std::size_t>(i)];
      if (a > 255) throw std::invalid_argument("bosonic exponent too large to compile");
      t.pow[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a);
    }
    Monomial bare = w;
    for (auto& a : bare.alpha) a = 0;
    t.word = table.intern(std::move(bare));
    terms_.push_back(t);
  }
}

void CompiledElement::eval_into(std::span<const double> vals, double scale,
                                std::span<double> acc) const {
  for (const Term& t : terms_) {
    double v = t.c * scale;
    for (int i = 0; i < n_slots_; ++i) {
      const double x = vals[static_cast<std::size_t>(i)];
      for (unsigned k = 0; k < t.pow[static_cast<std::size_t>(i)]; ++k) v *= x;
    }
    acc[static_cast<std::size_t>(t.word)] += v;
  }
}

}  // namespace supercauchy
