#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "gabra/algebra.hpp"

namespace gabra {

/// 2^24 members.
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

/// A finite set of normalized units of one algebra context.
///
/// Every member has augmentation 1. `closed()` is set only by operations
/// that have established closure under multiplication.
class UnitSet {
 public:
  explicit UnitSet(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  /// Throws PreconditionViolation if any element has augmentation != 1 or
  /// belongs to another context.
  UnitSet(ContextPtr ctx, const std::vector<AlgebraElement>& elements);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool closed() const noexcept { return closed_; }

  bool contains(const AlgebraElement& x) const;
  bool contains(const Coefficients& c) const { return members_.count(c) != 0; }

  /// Returns false if already present.
  bool insert(const AlgebraElement& x);

  /// Members sorted lexicographically by coefficient vector.
  std::vector<AlgebraElement> elements() const;

  const std::unordered_set<Coefficients, CoefficientsHash>& raw() const noexcept { return members_; }

  friend bool operator==(const UnitSet& a, const UnitSet& b) {
    return a.ctx_ == b.ctx_ && a.members_ == b.members_;
  }

 private:
  friend UnitSet enumerate_normalized_units(const ContextPtr&, std::uint64_t);
  friend UnitSet symmetric_units(const ContextPtr&, std::uint64_t);
  friend UnitSet closure(const ContextPtr&, const std::vector<AlgebraElement>&, std::uint64_t);
  friend UnitSet star_image(const UnitSet&);

  ContextPtr ctx_;
  std::unordered_set<Coefficients, CoefficientsHash> members_;
  bool closed_ = false;
};

/// p^(|G|-1), or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> normalized_unit_count(const AlgebraContext& ctx);

/// All elements of augmentation 1. Throws CapExceeded when p^(|G|-1) > cap.
UnitSet enumerate_normalized_units(const ContextPtr& ctx, std::uint64_t cap = kDefaultCap);

/// Symmetric normalized units, built from the inversion-orbit basis:
/// coefficients constant on each orbit {g, g^-1}, augmentation 1.
/// Throws CapExceeded when the p^(d-1) result would exceed cap.
UnitSet symmetric_units(const ContextPtr& ctx, std::uint64_t cap = kDefaultCap);

/// Smallest multiplicatively closed set containing `generators` and one.
/// Throws CapExceeded (with the partial size) once the set would pass cap.
UnitSet closure(const ContextPtr& ctx, const std::vector<AlgebraElement>& generators,
                std::uint64_t cap = kDefaultCap);

/// Images of the group elements.
std::vector<AlgebraElement> embedded_group(const ContextPtr& ctx);

bool is_symmetric_subset(const UnitSet& set);

/// {h* : h in H}. The result of a closed set is checked to be closed again.
UnitSet star_image(const UnitSet& set);

bool is_subgroup(const UnitSet& set);

/// Every pair of members commutes.
bool all_commute(const UnitSet& set);

UnitSet intersection(const UnitSet& a, const UnitSet& b);

/// Checks that <G, S> is the central product of the embedded group and the
/// central subgroup S: G meets S inside Z(G), and
/// |<G, S>| * |G cap S| = |S| * |G|. Throws PreconditionViolation when S is
/// not a central subgroup.
bool central_product_check(const UnitSet& embedded, const UnitSet& central,
                           std::uint64_t cap = kDefaultCap);

/// Uniform over normalized units.
AlgebraElement random_unit(const ContextPtr& ctx, std::mt19937_64& rng);

/// Uniform over the whole algebra.
AlgebraElement random_element(const ContextPtr& ctx, std::mt19937_64& rng);

struct ConjectureReport {
  std::string group_name;
  unsigned p = 0;
  std::uint64_t order_group = 0;
  std::uint64_t order_V = 0;
  std::uint64_t order_S = 0;
  std::uint64_t order_H = 0;
  bool S_is_subgroup = false;
  bool S_central = false;
  bool H_symmetric = false;
  bool conjecture_holds = false;
  bool enumerated_V = false;
};

/// Checks whether V(KG) = <G, S*> for K = GF(p).
///
/// |V| comes from the formula p^(|G|-1); V is additionally enumerated and
/// its size confirmed when that fits under cap. |H| always comes from an
/// actual closure.
ConjectureReport check_conjecture(std::string_view spec, unsigned p, std::uint64_t cap = kDefaultCap);
ConjectureReport check_conjecture(const ContextPtr& ctx, std::uint64_t cap = kDefaultCap);

}  // namespace gabra
