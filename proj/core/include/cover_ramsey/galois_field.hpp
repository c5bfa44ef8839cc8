#ifndef COVER_RAMSEY_GALOIS_FIELD_HPP
#define COVER_RAMSEY_GALOIS_FIELD_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace cover_ramsey {

/// (p, e) with q = p^e, or empty when q is not a prime power.
std::optional<std::pair<std::size_t, std::size_t>> prime_power(std::size_t q);

/// Finite field GF(q) with full addition and multiplication tables.
///
/// Element x in 0..q-1 stands for the polynomial whose base-p digits are the
/// coefficients of x (least significant digit = constant term). 0 and 1 are
/// the field identities. The modulus is the smallest monic irreducible
/// polynomial of degree e in that encoding.
class GaloisField {
 public:
  explicit GaloisField(std::size_t q);

  std::size_t order() const noexcept { return q_; }
  std::size_t characteristic() const noexcept { return p_; }

  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * q_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }

 private:
  std::size_t q_, p_, e_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> mul_;
};

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_GALOIS_FIELD_HPP
