#include "gabra/algebra.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "gabra/error.hpp"

namespace gabra {

namespace {

void require_same_context(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.context() != y.context()) {
    throw InvalidInput("algebra elements belong to different contexts");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_unsigned(std::string_view text, unsigned& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

std::size_t CoefficientsHash::operator()(const Coefficients& c) const noexcept {
  // FNV-1a
  std::uint64_t h = 1469598103934665603ULL;
  for (Coefficient v : c) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::shared_ptr<const AlgebraContext> AlgebraContext::make(FiniteGroup group, unsigned p) {
  return std::shared_ptr<const AlgebraContext>(new AlgebraContext(std::move(group), p));
}

AlgebraContext::AlgebraContext(FiniteGroup group, unsigned p) : group_(std::move(group)), p_(p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (p > kMaxPrime) {
    throw InvalidInput("characteristic " + std::to_string(p) + " exceeds the supported maximum of " +
                       std::to_string(kMaxPrime));
  }
  if (log_exact(group_.order(), p) < 0) {
    throw InvalidInput("modular condition violated: |" + group_.name() + "| = " +
                       std::to_string(group_.order()) + " is not a power of " + std::to_string(p));
  }

  classes_ = conjugacy_classes(group_);
  center_ = group_center(group_);

  const std::size_t n = group_.order();
  std::vector<char> seen(n, 0);
  for (ElementIndex g = 0; g < n; ++g) {
    if (seen[g]) continue;
    const ElementIndex inv = group_.inverse(g);
    seen[g] = seen[inv] = 1;
    if (inv == g) {
      inversion_orbits_.push_back({g});
    } else {
      inversion_orbits_.push_back({g, inv});
    }
  }

  for (const auto& cls : classes_.classes) {
    Coefficients sum(n, 0);
    for (ElementIndex m : cls.members) sum[m] = 1;
    class_sums_.push_back(std::move(sum));
  }
}

const Coefficients& AlgebraContext::class_sum_coefficients(std::size_t class_index) const {
  if (class_index >= class_sums_.size()) {
    throw InvalidInput("conjugacy class index " + std::to_string(class_index) + " out of range");
  }
  return class_sums_[class_index];
}

void AlgebraContext::multiply(const Coefficients& x, const Coefficients& y, Coefficients& out) const {
  const std::size_t n = dimension();
  const auto& table = group_.cayley();
  std::uint32_t acc[kMaxGroupOrder] = {};
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t xi = x[i];
    if (xi == 0) continue;
    const auto& row = table[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] != 0) acc[row[j]] += xi * y[j];
    }
  }
  out.resize(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Coefficient>(acc[k] % p_);
}

Coefficient AlgebraContext::augmentation(const Coefficients& x) const noexcept {
  std::uint32_t sum = 0;
  for (Coefficient v : x) sum += v;
  return static_cast<Coefficient>(sum % p_);
}

Coefficients AlgebraContext::involution(const Coefficients& x) const {
  Coefficients out(x.size(), 0);
  for (ElementIndex i = 0; i < x.size(); ++i) out[group_.inverse(i)] = x[i];
  return out;
}

AlgebraElement::AlgebraElement(ContextPtr ctx, std::vector<unsigned> coeffs) : ctx_(std::move(ctx)) {
  if (coeffs.size() != ctx_->dimension()) {
    throw InvalidInput("expected " + std::to_string(ctx_->dimension()) + " coefficients, got " +
                       std::to_string(coeffs.size()));
  }
  coeffs_.reserve(coeffs.size());
  for (unsigned c : coeffs) coeffs_.push_back(static_cast<Coefficient>(c % ctx_->p()));
}

AlgebraElement::AlgebraElement(ContextPtr ctx, Coefficients coeffs, bool reduced)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx_->dimension()) {
    throw InvalidInput("expected " + std::to_string(ctx_->dimension()) + " coefficients, got " +
                       std::to_string(coeffs_.size()));
  }
  if (!reduced) {
    for (auto& c : coeffs_) c = static_cast<Coefficient>(c % ctx_->p());
  }
}

AlgebraElement AlgebraElement::zero(const ContextPtr& ctx) {
  return AlgebraElement(ctx, Coefficients(ctx->dimension(), 0), true);
}

AlgebraElement AlgebraElement::one(const ContextPtr& ctx) { return embed(ctx, 0); }

AlgebraElement AlgebraElement::embed(const ContextPtr& ctx, ElementIndex g) {
  if (g >= ctx->dimension()) throw InvalidInput("group element index out of range");
  Coefficients c(ctx->dimension(), 0);
  c[g] = 1;
  return AlgebraElement(ctx, std::move(c), true);
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_context(x, y);
  const unsigned p = x.context()->p();
  Coefficients c(x.coefficients().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = static_cast<Coefficient>((x[i] + y[i]) % p);
  }
  return AlgebraElement(x.context(), std::move(c), true);
}

AlgebraElement negate(const AlgebraElement& x) {
  const unsigned p = x.context()->p();
  Coefficients c(x.coefficients().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Coefficient>((p - x[i]) % p);
  return AlgebraElement(x.context(), std::move(c), true);
}

AlgebraElement subtract(const AlgebraElement& x, const AlgebraElement& y) { return add(x, negate(y)); }

AlgebraElement scale(const AlgebraElement& x, unsigned scalar) {
  const unsigned p = x.context()->p();
  const unsigned s = scalar % p;
  Coefficients c(x.coefficients().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Coefficient>((x[i] * s) % p);
  return AlgebraElement(x.context(), std::move(c), true);
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_context(x, y);
  Coefficients out;
  x.context()->multiply(x.coefficients(), y.coefficients(), out);
  return AlgebraElement(x.context(), std::move(out), true);
}

AlgebraElement power(const AlgebraElement& x, std::uint64_t exponent) {
  AlgebraElement result = AlgebraElement::one(x.context());
  AlgebraElement base = x;
  while (exponent) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent) base = mul(base, base);
  }
  return result;
}

AlgebraElement involution(const AlgebraElement& x) {
  return AlgebraElement(x.context(), x.context()->involution(x.coefficients()), true);
}

unsigned augmentation(const AlgebraElement& x) { return x.context()->augmentation(x.coefficients()); }

std::size_t nilpotency_index(const AlgebraElement& z) {
  if (augmentation(z) != 0) {
    throw PreconditionViolation("element is not in the augmentation ideal");
  }
  const auto zero = AlgebraElement::zero(z.context());
  AlgebraElement term = z;
  const std::size_t bound = z.context()->dimension();
  for (std::size_t m = 1; m <= bound; ++m) {
    if (term == zero) return m;
    term = mul(term, z);
  }
  return 0;
}

AlgebraElement inverse_normalized(const AlgebraElement& x) {
  if (augmentation(x) != 1) {
    throw NotNormalizedUnit("element " + to_string(x) + " has augmentation " +
                            std::to_string(augmentation(x)) + ", not 1");
  }
  const auto& ctx = x.context();
  const auto one = AlgebraElement::one(ctx);
  const auto zero = AlgebraElement::zero(ctx);
  const auto minus_z = subtract(one, x);  // -(x - 1)

  // y = 1 + (-z) + (-z)^2 + ... until the term vanishes
  AlgebraElement sum = one;
  AlgebraElement term = one;
  for (std::size_t i = 1; i <= ctx->dimension(); ++i) {
    term = mul(term, minus_z);
    if (term == zero) return sum;
    sum = add(sum, term);
  }
  throw Error("inverse series for " + to_string(x) + " did not terminate within " +
              std::to_string(ctx->dimension()) + " terms");
}

AlgebraElement class_sum(const ContextPtr& ctx, std::size_t class_index) {
  return AlgebraElement(ctx, ctx->class_sum_coefficients(class_index), true);
}

bool is_central(const AlgebraElement& x) {
  const auto& ctx = x.context();
  const auto& group = ctx->group();
  for (ElementIndex gen : group.generators()) {
    const auto g = AlgebraElement::embed(ctx, gen);
    if (mul(x, g) != mul(g, x)) return false;
  }
  return true;
}

bool is_symmetric(const AlgebraElement& x) {
  for (const auto& orbit : x.context()->inversion_orbits()) {
    if (orbit.size() == 2 && x[orbit[0]] != x[orbit[1]]) return false;
  }
  return true;
}

std::string to_string(const AlgebraElement& x) {
  const auto& group = x.context()->group();
  std::ostringstream out;
  bool first = true;
  for (ElementIndex i = 0; i < x.coefficients().size(); ++i) {
    const unsigned c = x[i];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == group.identity()) {
      out << c;
    } else if (c == 1) {
      out << group.label(i);
    } else {
      out << c << '*' << group.label(i);
    }
  }
  return first ? "0" : out.str();
}

AlgebraElement parse_element(const ContextPtr& ctx, std::string_view text) {
  const auto& group = ctx->group();
  std::vector<unsigned> coeffs(ctx->dimension(), 0);
  text = trim(text);
  if (text == "0") return AlgebraElement(ctx, coeffs);
  if (text.empty()) throw InvalidInput("empty element text");

  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('+', start);
    const auto term = trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (term.empty()) throw InvalidInput("malformed element '" + std::string(text) + "'");

    unsigned scalar = 1;
    ElementIndex target = group.identity();
    if (parse_unsigned(term, scalar)) {
      // bare scalar times the identity
    } else if (const auto star = term.find('*');
               star != std::string_view::npos && parse_unsigned(trim(term.substr(0, star)), scalar)) {
      target = group.find(trim(term.substr(star + 1)));
    } else {
      scalar = 1;
      target = group.find(term);
    }
    coeffs[target] = (coeffs[target] + scalar % ctx->p()) % ctx->p();

    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return AlgebraElement(ctx, coeffs);
}

}  // namespace gabra
