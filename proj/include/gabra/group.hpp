#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gabra {

using ElementIndex = std::uint32_t;

/// Largest group order accepted by the table constructor.
inline constexpr std::size_t kMaxGroupOrder = 64;

/// A finite group stored as an explicit multiplication table.
///
/// Element 0 is always the identity. The constructor runs the full axiom
/// check (identity, inverses, Latin square, associativity, generation) and
/// throws InvalidInput if any of it fails, so every FiniteGroup value in
/// circulation is a valid group.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<ElementIndex>> cayley,
              std::vector<ElementIndex> generators,
              std::vector<std::string> labels);

  std::size_t order() const noexcept { return cayley_.size(); }
  const std::string& name() const noexcept { return name_; }

  ElementIndex identity() const noexcept { return 0; }
  ElementIndex mul(ElementIndex i, ElementIndex j) const { return cayley_[i][j]; }
  ElementIndex inverse(ElementIndex i) const { return inverse_[i]; }

  const std::vector<std::vector<ElementIndex>>& cayley() const noexcept { return cayley_; }
  const std::vector<ElementIndex>& inverses() const noexcept { return inverse_; }
  const std::vector<ElementIndex>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(ElementIndex i) const { return labels_[i]; }

  /// Index of the element with the given label; throws InvalidInput if absent.
  ElementIndex find(std::string_view label) const;

  bool is_abelian() const;

 private:
  void validate() const;

  std::string name_;
  std::vector<std::vector<ElementIndex>> cayley_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> generators_;
  std::vector<std::string> labels_;
};

struct ConjugacyClass {
  ElementIndex representative;
  std::vector<ElementIndex> members;  // ascending
};

/// Conjugacy classes ordered by their minimal member.
struct ConjugacyPartition {
  std::vector<ConjugacyClass> classes;

  std::size_t size() const noexcept { return classes.size(); }
  /// Position of the class containing `element`.
  std::size_t class_of(ElementIndex element) const;
};

std::vector<ElementIndex> group_center(const FiniteGroup& group);

ConjugacyPartition conjugacy_classes(const FiniteGroup& group);

/// Builds a group from a spec string `atom ("x" atom)*`, atoms being
/// q8, d8, d16, c<m> (m a prime power, c1 is trivial) and elem<p>e<k>.
/// Atoms are case-insensitive. Throws InvalidInput on malformed specs.
///
/// In a product A x B the element (a, b) has index a + |A| * b, so the
/// identity stays at 0 and the first factor varies fastest.
FiniteGroup build_group(std::string_view spec);

bool is_prime(std::uint64_t n) noexcept;

/// Returns k if n == p^k, or -1 if n is not a power of p.
int log_exact(std::uint64_t n, std::uint64_t p) noexcept;

}  // namespace gabra
