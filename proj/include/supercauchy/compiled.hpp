#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "supercauchy/element.hpp"
#include "supercauchy/numeric_value.hpp"

namespace supercauchy {

// Interning table for bosonic-free words. Quadrature loops accumulate into a
// flat double array indexed by word id instead of a map, which is what makes
// half-million-node grids affordable; to_value folds the array back into a
// NumericSuperValue of the base signature at the end.
class WordTable {
 public:
  explicit WordTable(Signature base_sig) : base_(base_sig) {}

  const Signature& base_signature() const { return base_; }
  std::size_t size() const { return words_.size(); }

  // w may come from a wider-m signature; its bosonic exponents must be zero
  int intern(Monomial w);

  NumericSuperValue to_value(std::span<const double> coeffs) const;

 private:
  Signature base_;
  std::map<Monomial, int> index_;
  std::vector<Monomial> words_;
};

// One exact element baked down to float coefficients, bosonic exponent
// vectors, and interned word ids. eval_into substitutes slot values and adds
// scale * e(vals) into the flat accumulator. Slots are the bosonic variables
// of the (possibly widened) signature the element was built in; at most 6.
class CompiledElement {
 public:
  CompiledElement() = default;
  CompiledElement(const SuperElement& e, WordTable& table);

  bool empty() const { return terms_.empty(); }

  void eval_into(std::span<const double> vals, double scale, std::span<double> acc) const;

 private:
  struct Term {
    double c = 0.0;
    std::array<std::uint8_t, 6> pow{};
    int word = 0;
  };
  std::vector<Term> terms_;
  int n_slots_ = 0;
};

}  // namespace supercauchy
