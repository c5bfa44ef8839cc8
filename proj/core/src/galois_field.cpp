#include "cover_ramsey/galois_field.hpp"

#include "cover_ramsey/error.hpp"

namespace cover_ramsey {

std::optional<std::pair<std::size_t, std::size_t>> prime_power(std::size_t q) {
  if (q < 2) return std::nullopt;
  std::size_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::size_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, e);
}

namespace {

using Poly = std::vector<std::size_t>;  // coefficients, constant term first

Poly digits(std::size_t x, std::size_t p, std::size_t len) {
  Poly out(len, 0);
  for (std::size_t i = 0; i < len; ++i, x /= p) out[i] = x % p;
  return out;
}

std::size_t undigits(const Poly& c, std::size_t p) {
  std::size_t x = 0;
  for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
  return x;
}

// Product of two polynomials of degree < e reduced modulo the monic `mod`.
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, std::size_t p) {
  const std::size_t e = mod.size() - 1;
  Poly prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t d = prod.size(); d-- > e;) {
    const std::size_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i) {
      std::size_t& slot = prod[d - e + i];
      slot = (slot + (p - c) * mod[i]) % p;
    }
  }
  prod.resize(e);
  return prod;
}

// Irreducible iff every nonzero residue has an inverse, i.e. the quotient
// ring has no zero divisors. Brute force is fine at design scale.
bool irreducible(const Poly& mod, std::size_t p) {
  const std::size_t e = mod.size() - 1;
  std::size_t q = 1;
  for (std::size_t i = 0; i < e; ++i) q *= p;
  for (std::size_t a = 1; a < q; ++a) {
    for (std::size_t b = a; b < q; ++b) {
      const Poly prod = mulmod(digits(a, p, e), digits(b, p, e), mod, p);
      if (undigits(prod, p) == 0) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(std::size_t q) : q_(q) {
  const auto pe = prime_power(q);
  if (!pe) fail(ErrorCode::kUnsupportedParameters, std::to_string(q) + " is not a prime power");
  p_ = pe->first;
  e_ = pe->second;

  Poly mod;
  for (std::size_t low = 0; low < q; ++low) {
    mod = digits(low, p_, e_);
    mod.push_back(1);
    if (e_ == 1 || irreducible(mod, p_)) break;
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    const Poly da = digits(a, p_, e_);
    for (std::size_t b = 0; b < q; ++b) {
      const Poly db = digits(b, p_, e_);
      Poly sum(e_);
      for (std::size_t i = 0; i < e_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = undigits(sum, p_);
      mul_[a * q + b] = undigits(mulmod(da, db, mod, p_), p_);
    }
  }
}

}  // namespace cover_ramsey
