#include "gabra/units.hpp"

#include <algorithm>

#include "gabra/error.hpp"

namespace gabra {

namespace {

// Worklist closure over a growing generator list. Each member records how
// many generators it has already been multiplied by (on both sides), so
// adjoining a new generator only performs the missing products.
class ClosureBuilder {
 public:
  ClosureBuilder(const AlgebraContext& ctx, std::uint64_t cap) : ctx_(ctx), cap_(cap) {
    Coefficients one(ctx.dimension(), 0);
    one[0] = 1;
    add(std::move(one));
  }

  void adjoin(const Coefficients& generator) {
    if (index_.count(generator)) return;  // already inside the closed set
    generators_.push_back(generator);
    add(generator);
    Coefficients product;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      while (progress_[i] < generators_.size()) {
        const std::size_t t = progress_[i]++;
        ctx_.multiply(members_[i], generators_[t], product);
        add(product);
        ctx_.multiply(generators_[t], members_[i], product);
        add(product);
      }
    }
  }

  std::unordered_set<Coefficients, CoefficientsHash> take() { return std::move(index_); }

 private:
  void add(const Coefficients& c) {
    if (index_.count(c)) return;
    if (members_.size() + 1 > cap_) {
      throw CapExceeded("closure exceeded cap of " + std::to_string(cap_) + " after reaching " +
                            std::to_string(members_.size()) + " elements",
                        members_.size());
    }
    index_.insert(c);
    members_.push_back(c);
    progress_.push_back(0);
  }

  const AlgebraContext& ctx_;
  std::uint64_t cap_;
  std::vector<Coefficients> members_;
  std::vector<std::size_t> progress_;
  std::vector<Coefficients> generators_;
  std::unordered_set<Coefficients, CoefficientsHash> index_;
};

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

void require_cap(std::optional<std::uint64_t> count, std::uint64_t cap, const std::string& what) {
  if (!count) {
    throw CapExceeded(what + " has more than 2^64 elements", UINT64_MAX);
  }
  if (*count > cap) {
    throw CapExceeded(what + " has " + std::to_string(*count) + " elements, above the cap of " +
                          std::to_string(cap),
                      *count);
  }
}

// Advances a little-endian odometer over positions [1, n) in GF(p).
bool next_digits(std::vector<unsigned>& digits, unsigned p) {
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

UnitSet::UnitSet(ContextPtr ctx, const std::vector<AlgebraElement>& elements) : ctx_(std::move(ctx)) {
  for (const auto& x : elements) insert(x);
}

bool UnitSet::contains(const AlgebraElement& x) const {
  return x.context() == ctx_ && members_.count(x.coefficients()) != 0;
}

bool UnitSet::insert(const AlgebraElement& x) {
  if (x.context() != ctx_) throw PreconditionViolation("unit belongs to another context");
  if (augmentation(x) != 1) {
    throw PreconditionViolation("element " + to_string(x) + " is not a normalized unit");
  }
  const bool inserted = members_.insert(x.coefficients()).second;
  if (inserted) closed_ = false;
  return inserted;
}

std::vector<AlgebraElement> UnitSet::elements() const {
  std::vector<Coefficients> sorted(members_.begin(), members_.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<AlgebraElement> out;
  out.reserve(sorted.size());
  for (auto& c : sorted) out.emplace_back(ctx_, std::move(c), true);
  return out;
}

std::optional<std::uint64_t> normalized_unit_count(const AlgebraContext& ctx) {
  return checked_power(ctx.p(), ctx.dimension() - 1);
}

UnitSet enumerate_normalized_units(const ContextPtr& ctx, std::uint64_t cap) {
  require_cap(normalized_unit_count(*ctx), cap, "V(K" + ctx->group().name() + ")");
  const unsigned p = ctx->p();
  const std::size_t n = ctx->dimension();

  UnitSet units(ctx);
  std::vector<unsigned> digits(n, 0);
  Coefficients c(n);
  do {
    unsigned rest = 0;
    for (std::size_t i = 1; i < n; ++i) {
      c[i] = static_cast<Coefficient>(digits[i]);
      rest += digits[i];
    }
    c[0] = static_cast<Coefficient>((1 + p * n - rest % p) % p);
    units.members_.insert(c);
  } while (next_digits(digits, p));
  units.closed_ = true;
  return units;
}

UnitSet symmetric_units(const ContextPtr& ctx, std::uint64_t cap) {
  const auto& orbits = ctx->inversion_orbits();
  const unsigned p = ctx->p();
  const std::size_t d = orbits.size();
  require_cap(checked_power(p, d - 1), cap, "S*(K" + ctx->group().name() + ")");

  // orbits[0] is {1}; its coefficient absorbs the augmentation constraint.
  UnitSet units(ctx);
  std::vector<unsigned> digits(d, 0);
  Coefficients c(ctx->dimension(), 0);
  do {
    unsigned weight = 0;
    for (std::size_t o = 1; o < d; ++o) {
      for (ElementIndex g : orbits[o]) c[g] = static_cast<Coefficient>(digits[o]);
      weight += digits[o] * static_cast<unsigned>(orbits[o].size());
    }
    c[0] = static_cast<Coefficient>((1 + p * p * ctx->dimension() - weight % p) % p);
    units.members_.insert(c);
  } while (next_digits(digits, p));
  return units;
}

UnitSet closure(const ContextPtr& ctx, const std::vector<AlgebraElement>& generators, std::uint64_t cap) {
  for (const auto& g : generators) {
    if (g.context() != ctx) throw PreconditionViolation("generator belongs to another context");
    if (augmentation(g) != 1) {
      throw PreconditionViolation("generator " + to_string(g) + " is not a normalized unit");
    }
  }
  ClosureBuilder builder(*ctx, cap);
  for (const auto& g : generators) builder.adjoin(g.coefficients());
  UnitSet result(ctx);
  result.members_ = builder.take();
  result.closed_ = true;
  return result;
}

std::vector<AlgebraElement> embedded_group(const ContextPtr& ctx) {
  std::vector<AlgebraElement> out;
  for (ElementIndex g = 0; g < ctx->dimension(); ++g) out.push_back(AlgebraElement::embed(ctx, g));
  return out;
}

bool is_symmetric_subset(const UnitSet& set) {
  const auto& ctx = *set.context();
  for (const auto& c : set.raw()) {
    if (!set.contains(ctx.involution(c))) return false;
  }
  return true;
}

bool is_subgroup(const UnitSet& set) {
  const auto& ctx = *set.context();
  Coefficients one(ctx.dimension(), 0);
  one[0] = 1;
  if (!set.contains(one)) return false;
  // H contains 1, so H is closed under products iff <H> = H.
  try {
    ClosureBuilder builder(ctx, set.size());
    for (const auto& c : set.raw()) builder.adjoin(c);
  } catch (const CapExceeded&) {
    return false;
  }
  return true;
}

UnitSet star_image(const UnitSet& set) {
  const auto& ctx = *set.context();
  UnitSet image(set.context());
  for (const auto& c : set.raw()) image.members_.insert(ctx.involution(c));
  if (set.closed()) {
    if (!is_subgroup(image)) throw Error("image of a closed set under the involution is not closed");
    image.closed_ = true;
  }
  return image;
}

bool all_commute(const UnitSet& set) {
  const auto& ctx = *set.context();
  const std::vector<Coefficients> members(set.raw().begin(), set.raw().end());
  Coefficients xy, yx;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      ctx.multiply(members[i], members[j], xy);
      ctx.multiply(members[j], members[i], yx);
      if (xy != yx) return false;
    }
  }
  return true;
}

UnitSet intersection(const UnitSet& a, const UnitSet& b) {
  if (a.context() != b.context()) throw PreconditionViolation("unit sets belong to different contexts");
  UnitSet out(a.context());
  for (const auto& x : a.elements()) {
    if (b.contains(x)) out.insert(x);
  }
  return out;
}

bool central_product_check(const UnitSet& embedded, const UnitSet& central, std::uint64_t cap) {
  const auto& ctx = embedded.context();
  if (central.context() != ctx) throw PreconditionViolation("unit sets belong to different contexts");
  if (!(embedded == UnitSet(ctx, embedded_group(ctx)))) {
    throw PreconditionViolation("first argument is not the embedded group");
  }
  if (!is_subgroup(central)) throw PreconditionViolation("second argument is not a subgroup");
  const auto central_elements = central.elements();
  for (const auto& s : central_elements) {
    if (!is_central(s)) {
      throw PreconditionViolation("second argument contains the non-central unit " + to_string(s));
    }
  }

  auto generators = embedded.elements();
  generators.insert(generators.end(), central_elements.begin(), central_elements.end());
  const UnitSet generated = closure(ctx, generators, cap);
  const UnitSet meet = intersection(embedded, central);

  const auto& center = ctx->center();
  const bool meet_is_central = std::all_of(meet.raw().begin(), meet.raw().end(), [&](const Coefficients& c) {
    const auto g = static_cast<ElementIndex>(std::find(c.begin(), c.end(), Coefficient{1}) - c.begin());
    return std::binary_search(center.begin(), center.end(), g);
  });
  return meet_is_central && generated.size() * meet.size() == central.size() * embedded.size();
}

AlgebraElement random_unit(const ContextPtr& ctx, std::mt19937_64& rng) {
  const unsigned p = ctx->p();
  std::uniform_int_distribution<unsigned> digit(0, p - 1);
  std::vector<unsigned> c(ctx->dimension(), 0);
  unsigned rest = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    c[i] = digit(rng);
    rest += c[i];
  }
  c[0] = (1 + p * static_cast<unsigned>(c.size()) - rest % p) % p;
  return AlgebraElement(ctx, std::move(c));
}

AlgebraElement random_element(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> digit(0, ctx->p() - 1);
  std::vector<unsigned> c(ctx->dimension());
  for (auto& v : c) v = digit(rng);
  return AlgebraElement(ctx, std::move(c));
}

ConjectureReport check_conjecture(std::string_view spec, unsigned p, std::uint64_t cap) {
  return check_conjecture(AlgebraContext::make(build_group(spec), p), cap);
}

ConjectureReport check_conjecture(const ContextPtr& ctx, std::uint64_t cap) {
  ConjectureReport report;
  report.group_name = ctx->group().name();
  report.p = ctx->p();
  report.order_group = ctx->dimension();

  const auto order_V = normalized_unit_count(*ctx);
  if (!order_V) throw CapExceeded("|V(K" + report.group_name + ")| does not fit in 64 bits", UINT64_MAX);
  report.order_V = *order_V;
  if (*order_V <= cap) {
    const UnitSet units = enumerate_normalized_units(ctx, cap);
    if (units.size() != *order_V) {
      throw Error("enumerated " + std::to_string(units.size()) + " normalized units, expected " +
                  std::to_string(*order_V));
    }
    report.enumerated_V = true;
  }

  const UnitSet symmetric = symmetric_units(ctx, cap);
  report.order_S = symmetric.size();
  report.S_is_subgroup = is_subgroup(symmetric);
  const auto symmetric_elements = symmetric.elements();
  report.S_central = std::all_of(symmetric_elements.begin(), symmetric_elements.end(),
                                 [](const AlgebraElement& s) { return is_central(s); });

  auto generators = embedded_group(ctx);
  generators.insert(generators.end(), symmetric_elements.begin(), symmetric_elements.end());
  const UnitSet generated = closure(ctx, generators, cap);
  report.order_H = generated.size();
  report.H_symmetric = is_symmetric_subset(generated);
  report.conjecture_holds = report.order_H == report.order_V;
  return report;
}

}  // namespace gabra
