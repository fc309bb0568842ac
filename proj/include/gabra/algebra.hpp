#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gabra/group.hpp"

namespace gabra {

using Coefficient = std::uint8_t;
/// Dense coefficient vector indexed by group element; entries reduced mod p.
using Coefficients = std::vector<Coefficient>;

struct CoefficientsHash {
  std::size_t operator()(const Coefficients& c) const noexcept;
};

/// Largest characteristic representable with one-byte coefficients.
inline constexpr unsigned kMaxPrime = 251;

/// The group algebra KG with K = GF(p), for a finite p-group G.
///
/// Construction enforces the modular condition |G| = p^k. Contexts are
/// immutable and shared by every element living in them.
class AlgebraContext {
 public:
  static std::shared_ptr<const AlgebraContext> make(FiniteGroup group, unsigned p);

  const FiniteGroup& group() const noexcept { return group_; }
  unsigned p() const noexcept { return p_; }
  std::size_t dimension() const noexcept { return group_.order(); }

  const ConjugacyPartition& classes() const noexcept { return classes_; }
  const std::vector<ElementIndex>& center() const noexcept { return center_; }

  /// Partition of the element indices into the sets {g, g^-1}, ordered by
  /// minimal member.
  const std::vector<std::vector<ElementIndex>>& inversion_orbits() const noexcept {
    return inversion_orbits_;
  }

  const Coefficients& class_sum_coefficients(std::size_t class_index) const;

  // Raw kernels on coefficient vectors of length dimension().
  void multiply(const Coefficients& x, const Coefficients& y, Coefficients& out) const;
  Coefficient augmentation(const Coefficients& x) const noexcept;
  Coefficients involution(const Coefficients& x) const;

 private:
  AlgebraContext(FiniteGroup group, unsigned p);

  FiniteGroup group_;
  unsigned p_;
  ConjugacyPartition classes_;
  std::vector<ElementIndex> center_;
  std::vector<std::vector<ElementIndex>> inversion_orbits_;
  std::vector<Coefficients> class_sums_;
};

using ContextPtr = std::shared_ptr<const AlgebraContext>;

/// An element sum(lambda_g * g) of KG.
class AlgebraElement {
 public:
  /// Reduces every entry mod p; throws InvalidInput on a length mismatch.
  AlgebraElement(ContextPtr ctx, std::vector<unsigned> coeffs);
  AlgebraElement(ContextPtr ctx, Coefficients coeffs, bool reduced);

  static AlgebraElement zero(const ContextPtr& ctx);
  static AlgebraElement one(const ContextPtr& ctx);
  static AlgebraElement embed(const ContextPtr& ctx, ElementIndex g);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  Coefficient operator[](ElementIndex g) const { return coeffs_[g]; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }
  /// Lexicographic on coefficient vectors; contexts must match.
  friend bool operator<(const AlgebraElement& a, const AlgebraElement& b) {
    return a.coeffs_ < b.coeffs_;
  }

 private:
  ContextPtr ctx_;
  Coefficients coeffs_;
};

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement negate(const AlgebraElement& x);
AlgebraElement subtract(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(const AlgebraElement& x, unsigned scalar);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement power(const AlgebraElement& x, std::uint64_t exponent);

inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) { return add(x, y); }
inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return subtract(x, y); }
inline AlgebraElement operator-(const AlgebraElement& x) { return negate(x); }
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return mul(x, y); }

/// Classical involution: sum(lambda_g * g) -> sum(lambda_g * g^-1).
AlgebraElement involution(const AlgebraElement& x);

/// Sum of coefficients mod p.
unsigned augmentation(const AlgebraElement& x);

/// Inverse of a unit of augmentation 1, computed as the finite series
/// sum_{i<m} (-z)^i for x = 1 + z, m being the nilpotency index of z.
/// Throws NotNormalizedUnit if augmentation(x) != 1.
AlgebraElement inverse_normalized(const AlgebraElement& x);

/// Least m >= 1 with z^m = 0 for z in the augmentation ideal, or 0 if no
/// such m <= |G| exists. Throws PreconditionViolation if augmentation(z) != 0.
std::size_t nilpotency_index(const AlgebraElement& z);

AlgebraElement class_sum(const ContextPtr& ctx, std::size_t class_index);

/// Commutes with the image of every group generator.
bool is_central(const AlgebraElement& x);

bool is_symmetric(const AlgebraElement& x);

/// Formal sum in element-index order, e.g. "1 + a^2 + b"; "0" for zero.
/// Coefficients other than 1 print as "2*g"; scalar multiples of the
/// identity print as the bare scalar.
std::string to_string(const AlgebraElement& x);

/// Inverse of to_string. Accepts terms "label", "c*label" and "c" joined by '+'.
AlgebraElement parse_element(const ContextPtr& ctx, std::string_view text);

}  // namespace gabra
