// Catalog constructors for the groups accepted by build_group.
//
// Every atom is built from a normal form: each element carries an exponent
// vector over the atom's generators, and labels are rendered from it. Direct
// products concatenate the exponent vectors and rename clashing generators.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "gabra/error.hpp"
#include "gabra/group.hpp"

namespace gabra {

namespace {

struct Presented {
  std::vector<std::vector<ElementIndex>> table;
  std::vector<ElementIndex> generators;
  std::vector<std::string> generator_names;
  std::vector<std::vector<int>> exponents;  // per element, one entry per generator

  std::size_t order() const { return table.size(); }
};

std::vector<std::vector<ElementIndex>> square(std::size_t n) {
  return std::vector<std::vector<ElementIndex>>(n, std::vector<ElementIndex>(n, 0));
}

Presented cyclic(std::size_t m) {
  Presented g;
  g.table = square(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g.table[i][j] = static_cast<ElementIndex>((i + j) % m);
  }
  if (m > 1) {
    g.generators = {1};
    g.generator_names = {"g"};
  }
  for (std::size_t i = 0; i < m; ++i) {
    g.exponents.push_back(m > 1 ? std::vector<int>{static_cast<int>(i)} : std::vector<int>{});
  }
  return g;
}

Presented elementary_abelian(std::size_t p, std::size_t k) {
  static const char* kNames[] = {"x", "y", "z", "w", "u", "v"};
  std::size_t n = 1;
  for (std::size_t t = 0; t < k; ++t) n *= p;

  auto digits = [&](std::size_t idx) {
    std::vector<int> e(k);
    for (std::size_t t = 0; t < k; ++t, idx /= p) e[t] = static_cast<int>(idx % p);
    return e;
  };

  Presented g;
  g.table = square(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto di = digits(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto dj = digits(j);
      std::size_t idx = 0;
      for (std::size_t t = k; t-- > 0;) idx = idx * p + (di[t] + dj[t]) % p;
      g.table[i][j] = static_cast<ElementIndex>(idx);
    }
    g.exponents.push_back(di);
  }
  std::size_t weight = 1;
  for (std::size_t t = 0; t < k; ++t, weight *= p) {
    g.generators.push_back(static_cast<ElementIndex>(weight));
    g.generator_names.push_back(kNames[t]);
  }
  return g;
}

// Dihedral group of order 2m: r^i s^j with s r = r^-1 s, index i + m*j.
Presented dihedral(std::size_t m) {
  const std::size_t n = 2 * m;
  Presented g;
  g.table = square(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t i = x % m, j = x / m;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t k = y % m, l = y / m;
      const std::size_t r = j ? (i + m - k) % m : (i + k) % m;
      g.table[x][y] = static_cast<ElementIndex>(r + m * ((j + l) % 2));
    }
    g.exponents.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  g.generators = {1, static_cast<ElementIndex>(m)};
  g.generator_names = {"r", "s"};
  return g;
}

// Quaternion group: a^i b^j with a^4 = 1, b^2 = a^2, b^-1 a b = a^3,
// index i + 4*j, giving 1, a, a^2, a^3, b, a*b, a^2*b, a^3*b.
Presented quaternion() {
  Presented g;
  g.table = square(8);
  for (std::size_t x = 0; x < 8; ++x) {
    const std::size_t i = x % 4, j = x / 4;
    for (std::size_t y = 0; y < 8; ++y) {
      const std::size_t k = y % 4, l = y / 4;
      // b a^k = a^-k b
      std::size_t a_exp = j ? (i + 4 - k) % 4 : (i + k) % 4;
      std::size_t b_exp = j + l;
      if (b_exp == 2) {
        a_exp = (a_exp + 2) % 4;
        b_exp = 0;
      }
      g.table[x][y] = static_cast<ElementIndex>(a_exp + 4 * b_exp);
    }
    g.exponents.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  g.generators = {1, 4};
  g.generator_names = {"a", "b"};
  return g;
}

std::string fresh_name(const std::string& wanted, const std::vector<std::string>& used) {
  auto taken = [&](const std::string& s) {
    return std::find(used.begin(), used.end(), s) != used.end();
  };
  if (!taken(wanted)) return wanted;
  char c = wanted.empty() ? 'a' : wanted[0];
  for (int step = 0; step < 26; ++step) {
    c = c == 'z' ? 'a' : static_cast<char>(c + 1);
    std::string candidate(1, c);
    if (!taken(candidate)) return candidate;
  }
  throw InvalidInput("too many generators to name");
}

Presented product(const Presented& a, const Presented& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > kMaxGroupOrder) {
    throw InvalidInput("direct product order " + std::to_string(n) +
                       " exceeds the supported maximum of " + std::to_string(kMaxGroupOrder));
  }
  Presented g;
  g.table = square(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t first = a.table[x % na][y % na];
      const std::size_t second = b.table[x / na][y / na];
      g.table[x][y] = static_cast<ElementIndex>(first + na * second);
    }
    std::vector<int> e = a.exponents[x % na];
    const auto& eb = b.exponents[x / na];
    e.insert(e.end(), eb.begin(), eb.end());
    g.exponents.push_back(std::move(e));
  }
  g.generators = a.generators;
  g.generator_names = a.generator_names;
  for (std::size_t t = 0; t < b.generators.size(); ++t) {
    g.generators.push_back(static_cast<ElementIndex>(na * b.generators[t]));
    g.generator_names.push_back(fresh_name(b.generator_names[t], g.generator_names));
  }
  return g;
}

std::string render_label(const Presented& g, std::size_t element) {
  std::string out;
  const auto& e = g.exponents[element];
  for (std::size_t t = 0; t < e.size(); ++t) {
    if (e[t] == 0) continue;
    if (!out.empty()) out += '*';
    out += g.generator_names[t];
    if (e[t] != 1) out += '^' + std::to_string(e[t]);
  }
  return out.empty() ? "1" : out;
}

bool parse_number(std::string_view text, std::size_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

Presented parse_atom(std::string_view atom) {
  if (atom == "q8") return quaternion();
  if (atom == "d8") return dihedral(4);
  if (atom == "d16") return dihedral(8);

  std::size_t value = 0;
  if (atom.size() > 1 && atom[0] == 'c' && parse_number(atom.substr(1), value)) {
    if (value == 0 || value > kMaxGroupOrder) {
      throw InvalidInput("cyclic order out of range in '" + std::string(atom) + "'");
    }
    bool prime_power = value == 1;
    for (std::size_t p = 2; p <= value && !prime_power; ++p) {
      if (is_prime(p) && log_exact(value, p) > 0) prime_power = true;
    }
    if (!prime_power) {
      throw InvalidInput("cyclic order " + std::to_string(value) + " is not a prime power");
    }
    return cyclic(value);
  }

  if (atom.substr(0, 4) == "elem") {
    const auto rest = atom.substr(4);
    const auto e = rest.find('e');
    std::size_t p = 0, k = 0;
    if (e != std::string_view::npos && parse_number(rest.substr(0, e), p) &&
        parse_number(rest.substr(e + 1), k)) {
      if (!is_prime(p)) throw InvalidInput("elementary abelian base " + std::to_string(p) + " is not prime");
      std::size_t n = 1;
      for (std::size_t t = 0; t < k && n <= kMaxGroupOrder; ++t) n *= p;
      if (k == 0 || n > kMaxGroupOrder) {
        throw InvalidInput("elementary abelian order out of range in '" + std::string(atom) + "'");
      }
      return elementary_abelian(p, k);
    }
  }

  throw InvalidInput("unknown group atom '" + std::string(atom) + "'");
}

}  // namespace

FiniteGroup build_group(std::string_view spec) {
  std::string normalized;
  for (char c : spec) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    normalized += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (normalized.empty()) throw InvalidInput("empty group spec");

  Presented result;
  bool first = true;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = normalized.find('x', start);
    const std::string_view atom =
        std::string_view(normalized).substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (atom.empty()) throw InvalidInput("malformed group spec '" + std::string(spec) + "'");
    Presented next = parse_atom(atom);
    result = first ? std::move(next) : product(result, next);
    first = false;
    if (end == std::string::npos) break;
    start = end + 1;
  }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < result.order(); ++i) labels.push_back(render_label(result, i));
  return FiniteGroup(normalized, std::move(result.table), std::move(result.generators),
                     std::move(labels));
}

}  // namespace gabra
