#include "abec/gf.hpp"

#include <bit>

namespace abec {

namespace {

int poly_degree(std::uint64_t p) {
  return p == 0 ? -1 : 63 - std::countl_zero(p);
}

// Remainder of a / b over GF(2).
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    a ^= b << (da - db);
    if (a == 0) break;
  }
  return a;
}

}  // namespace

std::uint32_t FieldSpec::default_modulus(unsigned width) {
  // Primitive polynomials, one per width.
  static const std::uint32_t table[17] = {
      0,      0x3,    0x7,    0xB,    0x13,   0x25,   0x43,    0x89,  0x11D,
      0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003,  0x1100B};
  if (width < 1 || width > 16)
    throw ParamError("field width must be in [1, 16]");
  return table[width];
}

FieldSpec FieldSpec::make(unsigned width) {
  return FieldSpec{width, default_modulus(width)};
}

Symbol clmul_reduce(Symbol a, Symbol b, std::uint32_t modulus, unsigned width) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < width; ++i)
    if ((b >> i) & 1) acc ^= std::uint64_t(a) << i;
  for (int d = poly_degree(acc); d >= int(width); d = poly_degree(acc))
    acc ^= std::uint64_t(modulus) << (d - width);
  return Symbol(acc);
}

bool poly_irreducible(std::uint32_t poly) {
  const int deg = poly_degree(poly);
  if (deg < 1) return false;
  for (std::uint32_t d = 2; poly_degree(d) <= deg / 2; ++d)
    if (poly_mod(poly, d) == 0) return false;
  return true;
}

Field::Field(FieldSpec spec) : spec_(spec) {
  const unsigned w = spec_.width;
  if (w < 1 || w > 16) throw ParamError("field width must be in [1, 16]");
  if ((spec_.modulus >> w) != 1)
    throw ParamError("modulus must have degree exactly equal to the width");
  if (!poly_irreducible(spec_.modulus))
    throw ParamError("modulus is reducible over GF(2)");

  const std::uint32_t n = order();
  log_.assign(n, 0);
  exp_.assign(n, 0);
  std::uint32_t b = 1;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    if (i > 0 && b == 1)
      throw ParamError("modulus is irreducible but x is not a generator");
    exp_[i] = Symbol(b);
    log_[b] = Symbol(i);
    b <<= 1;
    if (b & n) b ^= spec_.modulus;
  }
  if (b != 1) throw ParamError("modulus is not primitive");
}

Symbol Field::inv(Symbol a) const {
  if (a == 0) throw ZeroInverse("zero has no multiplicative inverse");
  const unsigned m = order() - 1;
  return exp_[(m - log_[a]) % m];
}

Symbol Field::pow(Symbol a, unsigned e) const {
  Symbol r = 1;
  for (; e; e >>= 1) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
  }
  return r;
}

}  // namespace abec
