#pragma once

#include <cstdint>
#include <vector>

#include "abec/errors.hpp"

namespace abec {

using Symbol = std::uint16_t;

// GF(2^w) description: symbol width in bits plus the defining polynomial,
// encoded as a bit mask with bit w set (0x11D = x^8+x^4+x^3+x^2+1).
struct FieldSpec {
  unsigned width = 8;
  std::uint32_t modulus = 0x11D;

  // Conventional primitive polynomial for each supported width.
  static std::uint32_t default_modulus(unsigned width);
  static FieldSpec make(unsigned width);
};

// Carry-less polynomial multiply reduced mod `modulus`. Reference routine:
// the table-driven Field must agree with it on every pair.
Symbol clmul_reduce(Symbol a, Symbol b, std::uint32_t modulus, unsigned width);

// Returns false if the polynomial has a nontrivial factor (trial division
// against every polynomial of degree <= deg/2).
bool poly_irreducible(std::uint32_t poly);

// Arithmetic in GF(2^w), 1 <= w <= 16, via log/antilog tables.
// Immutable after construction; safe for concurrent reads.
class Field {
 public:
  explicit Field(FieldSpec spec = {});

  const FieldSpec& spec() const { return spec_; }
  unsigned width() const { return spec_.width; }
  std::uint32_t order() const { return 1u << spec_.width; }

  Symbol add(Symbol a, Symbol b) const { return a ^ b; }
  Symbol sub(Symbol a, Symbol b) const { return a ^ b; }
  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    unsigned s = unsigned(log_[a]) + unsigned(log_[b]);
    const unsigned m = order() - 1;
    if (s >= m) s -= m;
    return exp_[s];
  }
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
  Symbol pow(Symbol a, unsigned e) const;

 private:
  FieldSpec spec_;
  std::vector<Symbol> log_;
  std::vector<Symbol> exp_;
};

}  // namespace abec
