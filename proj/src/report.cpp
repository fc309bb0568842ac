#include "gabra/report.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gabra/error.hpp"

namespace gabra {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json listing_json(const ContextPtr& ctx, const char* kind, const UnitSet& set, bool list) {
  Json j;
  j["group"] = ctx->group().name();
  j["prime"] = ctx->p();
  j["kind"] = kind;
  j["cardinality"] = set.size();
  if (list) {
    Json elems = Json::array();
    for (const auto& x : set.elements()) elems.push_back(to_string(x));
    j["elements"] = std::move(elems);
  }
  return j;
}

void emit_listing(const CliConfig& cfg, const ContextPtr& ctx, const char* kind, const UnitSet& set,
                  std::ostream& out) {
  if (cfg.format == OutputFormat::Json) {
    out << listing_json(ctx, kind, set, cfg.list_elements).dump(2) << '\n';
    return;
  }
  out << kind << " of K" << ctx->group().name() << " over GF(" << ctx->p() << "): " << set.size()
      << " elements\n";
  if (cfg.list_elements) {
    for (const auto& x : set.elements()) out << to_string(x) << '\n';
  }
}

UnitSet closure_for(const CliConfig& cfg, const ContextPtr& ctx) {
  std::vector<AlgebraElement> generators;
  for (const auto& text : cfg.extra_generators) {
    auto x = parse_element(ctx, text);
    if (augmentation(x) != 1) {
      throw InvalidInput("generator '" + text + "' does not have augmentation 1");
    }
    generators.push_back(std::move(x));
  }
  std::mt19937_64 rng(cfg.seed);
  for (unsigned i = 0; i < cfg.random_generators; ++i) generators.push_back(random_unit(ctx, rng));
  if (generators.empty()) generators = embedded_group(ctx);
  if (cfg.with_symmetric) {
    const auto s = symmetric_units(ctx, cfg.cap).elements();
    generators.insert(generators.end(), s.begin(), s.end());
  }
  return closure(ctx, generators, cfg.cap);
}

void run_sweep(const CliConfig& cfg, std::ostream& out) {
  Json rows = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(12) << "group" << std::right << std::setw(6) << "|G|"
        << std::setw(10) << "|V|" << std::setw(8) << "|S*|" << std::setw(10) << "|H|"
        << "  S*<=V  S*central  H*=H  V=<G,S*>\n";
  for (const auto& spec : sweep_catalog(cfg.prime)) {
    const auto ctx = AlgebraContext::make(build_group(spec), cfg.prime);
    try {
      const auto r = check_conjecture(ctx, cfg.cap);
      rows.push_back(to_json(r));
      table << std::left << std::setw(12) << r.group_name << std::right << std::setw(6)
            << r.order_group << std::setw(10) << r.order_V << std::setw(8) << r.order_S
            << std::setw(10) << r.order_H << "  " << std::setw(5) << yes_no(r.S_is_subgroup)
            << "  " << std::setw(9) << yes_no(r.S_central) << "  " << std::setw(4)
            << yes_no(r.H_symmetric) << "  " << std::setw(8) << yes_no(r.conjecture_holds) << '\n';
    } catch (const CapExceeded& e) {
      Json row;
      row["group"] = ctx->group().name();
      row["prime"] = ctx->p();
      row["order_group"] = ctx->dimension();
      row["skipped"] = true;
      row["reason"] = e.what();
      rows.push_back(std::move(row));
      table << std::left << std::setw(12) << ctx->group().name() << std::right << std::setw(6)
            << ctx->dimension() << "  skipped: " << e.what() << '\n';
    }
  }
  if (cfg.format == OutputFormat::Json) {
    out << rows.dump(2) << '\n';
  } else {
    out << table.str();
  }
}

int execute(const CliConfig& cfg, std::ostream& out) {
  if (cfg.cap == 0) throw InvalidInput("cap must be at least 1");
  if (cfg.subcommand == Subcommand::Sweep) {
    if (!is_prime(cfg.prime)) throw InvalidInput(std::to_string(cfg.prime) + " is not prime");
    run_sweep(cfg, out);
    return kExitOk;
  }

  const auto ctx = AlgebraContext::make(build_group(cfg.group_spec), cfg.prime);
  switch (cfg.subcommand) {
    case Subcommand::Check: {
      const auto report = check_conjecture(ctx, cfg.cap);
      out << (cfg.format == OutputFormat::Json ? to_json(report).dump(2) + "\n" : to_text(report));
      break;
    }
    case Subcommand::Units:
      emit_listing(cfg, ctx, "units", enumerate_normalized_units(ctx, cfg.cap), out);
      break;
    case Subcommand::Symmetric:
      emit_listing(cfg, ctx, "symmetric", symmetric_units(ctx, cfg.cap), out);
      break;
    case Subcommand::Closure:
      emit_listing(cfg, ctx, "closure", closure_for(cfg, ctx), out);
      break;
    case Subcommand::Sweep:
      break;
  }
  return kExitOk;
}

}  // namespace

Json to_json(const ConjectureReport& r) {
  Json j;
  j["group"] = r.group_name;
  j["prime"] = r.p;
  j["order_group"] = r.order_group;
  j["order_V"] = r.order_V;
  j["order_S"] = r.order_S;
  j["order_H"] = r.order_H;
  j["S_is_subgroup"] = r.S_is_subgroup;
  j["S_central"] = r.S_central;
  j["H_symmetric"] = r.H_symmetric;
  j["conjecture_holds"] = r.conjecture_holds;
  j["enumerated_V"] = r.enumerated_V;
  return j;
}

ConjectureReport report_from_json(const Json& j) {
  ConjectureReport r;
  r.group_name = j.at("group").get<std::string>();
  r.p = j.at("prime").get<unsigned>();
  r.order_group = j.at("order_group").get<std::uint64_t>();
  r.order_V = j.at("order_V").get<std::uint64_t>();
  r.order_S = j.at("order_S").get<std::uint64_t>();
  r.order_H = j.at("order_H").get<std::uint64_t>();
  r.S_is_subgroup = j.at("S_is_subgroup").get<bool>();
  r.S_central = j.at("S_central").get<bool>();
  r.H_symmetric = j.at("H_symmetric").get<bool>();
  r.conjecture_holds = j.at("conjecture_holds").get<bool>();
  r.enumerated_V = j.at("enumerated_V").get<bool>();
  return r;
}

std::string to_text(const ConjectureReport& r) {
  std::ostringstream out;
  auto line = [&](const char* key, auto value) {
    out << std::left << std::setw(18) << key << value << '\n';
  };
  line("group", r.group_name);
  line("prime", r.p);
  line("order_group", r.order_group);
  line("order_V", r.order_V);
  line("order_S", r.order_S);
  line("order_H", r.order_H);
  line("S_is_subgroup", r.S_is_subgroup ? "true" : "false");
  line("S_central", r.S_central ? "true" : "false");
  line("H_symmetric", r.H_symmetric ? "true" : "false");
  line("conjecture_holds", r.conjecture_holds ? "true" : "false");
  line("enumerated_V", r.enumerated_V ? "true" : "false");
  return out.str();
}

std::vector<std::string> sweep_catalog(unsigned p) {
  switch (p) {
    case 2:
      return {"c2",   "c4",       "elem2e2", "c8",   "c4xc2",   "elem2e3", "d8",    "q8",
              "c16",  "c8xc2",    "c4xc4",   "c4xc2xc2", "elem2e4", "d8xc2", "q8xc2", "d16"};
    case 3:
      return {"c3", "c9", "c3xc3", "elem3e2"};
    default:
      if (is_prime(p) && p <= 16) return {"c" + std::to_string(p)};
      return {};
  }
}

std::uint64_t cap_from_environment() {
  const char* raw = std::getenv("GABRA_CAP");
  if (!raw || !*raw) return kDefaultCap;
  std::uint64_t value = 0;
  const std::string_view text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw InvalidInput("GABRA_CAP must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return execute(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const InvalidInput& e) {
    err << "error: invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const NotNormalizedUnit& e) {
    err << "error: invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const PreconditionViolation& e) {
    err << "error: invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace gabra
