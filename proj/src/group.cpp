#include "gabra/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gabra/error.hpp"

namespace gabra {

namespace {

[[noreturn]] void reject(const std::string& name, const std::string& why) {
  throw InvalidInput("group '" + name + "': " + why);
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name,
                         std::vector<std::vector<ElementIndex>> cayley,
                         std::vector<ElementIndex> generators,
                         std::vector<std::string> labels)
    : name_(std::move(name)),
      cayley_(std::move(cayley)),
      generators_(std::move(generators)),
      labels_(std::move(labels)) {
  const std::size_t n = cayley_.size();
  if (n == 0) reject(name_, "empty table");
  if (n > kMaxGroupOrder) {
    reject(name_, "order " + std::to_string(n) + " exceeds the supported maximum of " +
                      std::to_string(kMaxGroupOrder));
  }
  if (labels_.size() != n) reject(name_, "label count does not match order");
  for (const auto& row : cayley_) {
    if (row.size() != n) reject(name_, "table is not square");
    for (ElementIndex v : row) {
      if (v >= n) reject(name_, "table entry out of range");
    }
  }
  inverse_.assign(n, 0);
  for (ElementIndex i = 0; i < n; ++i) {
    const auto& row = cayley_[i];
    auto it = std::find(row.begin(), row.end(), ElementIndex{0});
    if (it == row.end()) reject(name_, "element " + labels_[i] + " has no inverse");
    inverse_[i] = static_cast<ElementIndex>(it - row.begin());
  }
  validate();
}

void FiniteGroup::validate() const {
  const std::size_t n = order();
  for (ElementIndex i = 0; i < n; ++i) {
    if (cayley_[0][i] != i || cayley_[i][0] != i) reject(name_, "index 0 is not the identity");
    if (cayley_[i][inverse_[i]] != 0 || cayley_[inverse_[i]][i] != 0) {
      reject(name_, "inverse law fails at " + labels_[i]);
    }
  }

  std::vector<char> seen(n);
  for (ElementIndex i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementIndex j = 0; j < n; ++j) seen[cayley_[i][j]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n)) {
      reject(name_, "row " + std::to_string(i) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementIndex j = 0; j < n; ++j) seen[cayley_[j][i]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n)) {
      reject(name_, "column " + std::to_string(i) + " is not a permutation");
    }
  }

  for (ElementIndex i = 0; i < n; ++i) {
    for (ElementIndex j = 0; j < n; ++j) {
      const ElementIndex ij = cayley_[i][j];
      for (ElementIndex k = 0; k < n; ++k) {
        if (cayley_[ij][k] != cayley_[i][cayley_[j][k]]) {
          std::ostringstream msg;
          msg << "associativity fails at (" << labels_[i] << ", " << labels_[j] << ", "
              << labels_[k] << ")";
          reject(name_, msg.str());
        }
      }
    }
  }

  for (ElementIndex g : generators_) {
    if (g >= n) reject(name_, "generator index out of range");
  }
  std::vector<char> reached(n, 0);
  std::vector<ElementIndex> frontier{0};
  reached[0] = 1;
  while (!frontier.empty()) {
    const ElementIndex x = frontier.back();
    frontier.pop_back();
    for (ElementIndex g : generators_) {
      const ElementIndex y = cayley_[x][g];
      if (!reached[y]) {
        reached[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  if (std::count(reached.begin(), reached.end(), 1) != static_cast<long>(n)) {
    reject(name_, "generators do not generate the whole group");
  }
}

ElementIndex FiniteGroup::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidInput("group '" + name_ + "' has no element labelled '" + std::string(label) + "'");
  }
  return static_cast<ElementIndex>(it - labels_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (ElementIndex g : generators_) {
    for (ElementIndex h : generators_) {
      if (cayley_[g][h] != cayley_[h][g]) return false;
    }
  }
  return true;
}

std::size_t ConjugacyPartition::class_of(ElementIndex element) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& m = classes[c].members;
    if (std::binary_search(m.begin(), m.end(), element)) return c;
  }
  throw PreconditionViolation("element " + std::to_string(element) + " is not in the partition");
}

std::vector<ElementIndex> group_center(const FiniteGroup& group) {
  std::vector<ElementIndex> center;
  const std::size_t n = group.order();
  for (ElementIndex z = 0; z < n; ++z) {
    bool central = true;
    for (ElementIndex i = 0; i < n && central; ++i) {
      central = group.mul(z, i) == group.mul(i, z);
    }
    if (central) center.push_back(z);
  }
  return center;
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<char> assigned(n, 0);
  ConjugacyPartition partition;
  for (ElementIndex x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    ConjugacyClass cls{x, {}};
    for (ElementIndex g = 0; g < n; ++g) {
      const ElementIndex conj = group.mul(group.mul(group.inverse(g), x), g);
      if (!assigned[conj]) {
        assigned[conj] = 1;
        cls.members.push_back(conj);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    partition.classes.push_back(std::move(cls));
  }
  return partition;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int log_exact(std::uint64_t n, std::uint64_t p) noexcept {
  if (n == 0 || p < 2) return -1;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : -1;
}

}  // namespace gabra
