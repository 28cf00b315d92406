#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "k3count/error.hpp"
#include "k3count/invariants.hpp"
#include "k3count/parse.hpp"
#include "k3count/qseries.hpp"
#include "k3count/semimodule.hpp"

namespace k3count::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::optional<int> max_window;
};

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

int cmd_eg(std::size_t gmax, const Options& opt, std::ostream& out) {
  const auto e = yau_zaslow_coefficients(gmax);
  if (opt.json) {
    ordered_json rows = ordered_json::array();
    for (std::size_t g = 0; g < e.size(); ++g) {
      rows.push_back({{"g", g}, {"e", e[g].str()}});
    }
    out << rows.dump() << '\n';
  } else {
    out << "g\te(g)\n";
    for (std::size_t g = 0; g < e.size(); ++g) {
      out << g << '\t' << e[g].str() << '\n';
    }
  }
  return kOk;
}

// Enumeration-based epsilon of a unibranch leaf, unless its search window
// exceeds the budget.
std::optional<BigInt> enumerated_leaf(const SingularityDescriptor& leaf,
                                      const Options& opt) {
  const NumericalSemigroup s = std::visit(
      [](const auto& k) -> NumericalSemigroup {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PlanarPQ>) {
          return NumericalSemigroup::from_generators({k.p, k.q});
        } else if constexpr (std::is_same_v<T, SemigroupSingularity>) {
          return k.semigroup;
        } else {
          throw std::logic_error("leaf is not unibranch");
        }
      },
      leaf.kind());
  if (opt.max_window && enumeration_window(s) > *opt.max_window) {
    return std::nullopt;
  }
  return epsilon_semigroup(s);
}

// Closed-form epsilon of a unibranch leaf, when one is known.
std::optional<BigInt> closed_form_leaf(const SingularityDescriptor& leaf) {
  if (const auto* pq = std::get_if<PlanarPQ>(&leaf.kind())) {
    return epsilon_pq(pq->p, pq->q);
  }
  if (const auto* sg = std::get_if<SemigroupSingularity>(&leaf.kind())) {
    const auto& gens = sg->semigroup.generators();
    if (sg->semigroup.genus() == 0) return BigInt(1);
    if (gens.size() == 2) return epsilon_pq(gens[0], gens[1]);
  }
  return std::nullopt;
}

std::string method_of(const SingularityDescriptor& d) {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, AdeLabel>) return "ade-table";
        if constexpr (std::is_same_v<T, PlanarPQ>) return "closed-form";
        if constexpr (std::is_same_v<T, SemigroupSingularity>) {
          return "enumeration";
        }
        return "branch-product";
      },
      d.kind());
}

int cmd_epsilon(const std::string& token, bool verify, const Options& opt,
                std::ostream& out) {
  const SingularityDescriptor d = parse_singularity(token);
  ordered_json doc;
  doc["token"] = token;
  doc["epsilon"] = d.epsilon().str();
  doc["method"] = method_of(d);
  if (d.delta()) doc["delta"] = *d.delta();

  bool verified = true;
  if (verify) {
    const auto leaves = unibranch_leaves(d);
    ordered_json checks = ordered_json::object();

    BigInt branch_product = 1;
    for (const auto& l : leaves) branch_product *= l.epsilon();
    checks["branch_product"] = branch_product.str();
    verified = verified && branch_product == d.epsilon();

    BigInt closed = 1;
    bool have_closed = true;
    for (const auto& l : leaves) {
      auto v = closed_form_leaf(l);
      if (!v) {
        have_closed = false;
        break;
      }
      closed *= *v;
    }
    if (have_closed) {
      checks["closed_form"] = closed.str();
      verified = verified && closed == d.epsilon();
    }

    BigInt enumerated = 1;
    bool skipped = false;
    for (const auto& l : leaves) {
      auto v = enumerated_leaf(l, opt);
      if (!v) {
        skipped = true;
        break;
      }
      enumerated *= *v;
    }
    if (skipped) {
      checks["enumeration"] = "skipped";
    } else {
      checks["enumeration"] = enumerated.str();
      verified = verified && enumerated == d.epsilon();
    }
    doc["checks"] = checks;
    doc["verified"] = verified;
  }

  if (opt.json) {
    out << doc.dump() << '\n';
  } else {
    out << "token: " << token << '\n';
    out << "epsilon: " << d.epsilon().str() << '\n';
    out << "method: " << doc["method"].get<std::string>() << '\n';
    if (d.delta()) out << "delta: " << *d.delta() << '\n';
    if (verify) {
      for (const auto& [key, value] : doc["checks"].items()) {
        out << key << ": " << value.get<std::string>() << '\n';
      }
      out << "verified: " << (verified ? "true" : "false") << '\n';
    }
  }
  return verified ? kOk : kMismatch;
}

int cmd_modules(const std::string& gens_text, const Options& opt,
                std::ostream& out) {
  const auto s = NumericalSemigroup::from_generators(parse_int_list(gens_text));
  const auto modules = enumerate_delta_sets(s);
  if (opt.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : modules) {
      arr.push_back({{"gaps", m.gaps()}, {"generators", minimal_generators(m)}});
    }
    out << arr.dump() << '\n';
  } else {
    for (const auto& m : modules) {
      out << "gaps={" << join(m.gaps()) << "} gens={"
          << join(minimal_generators(m)) << "}\n";
    }
    out << "count=" << modules.size() << '\n';
  }
  return kOk;
}

ordered_json curve_json(const CurveRecord& c,
                        const std::vector<std::string_view>& tokens) {
  ordered_json points = ordered_json::array();
  for (std::size_t i = 0; i < c.singularities().size(); ++i) {
    points.push_back({{"token", std::string(tokens[i])},
                      {"epsilon", c.singularities()[i].epsilon().str()}});
  }
  return {{"curve", c.label()},
          {"singularities", points},
          {"multiplicity", c.multiplicity().str()}};
}

int cmd_multiplicity(const std::string& text, const Options& opt,
                     std::ostream& out) {
  const auto tokens = split_curve(text);
  const CurveRecord curve(text, parse_curve(text));
  if (opt.json) {
    out << curve_json(curve, tokens).dump() << '\n';
  } else {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      out << tokens[i] << ": " << curve.singularities()[i].epsilon().str()
          << '\n';
    }
    out << "multiplicity: " << curve.multiplicity().str() << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& path, std::size_t g, const Options& opt,
              std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file '" + path + "'");
  std::vector<CurveRecord> curves;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      curves.emplace_back("line " + std::to_string(lineno), parse_curve(line));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  const GenusSumReport r = check_genus_sum(curves, g);
  if (opt.json) {
    ordered_json doc = {{"g", g},
                        {"curves", curves.size()},
                        {"sum", r.sum.str()},
                        {"expected", r.expected.str()},
                        {"equal", r.equal}};
    out << doc.dump() << '\n';
  } else {
    out << "g: " << g << '\n'
        << "curves: " << curves.size() << '\n'
        << "sum: " << r.sum.str() << '\n'
        << "expected: " << r.expected.str() << '\n'
        << "match: " << (r.equal ? "true" : "false") << '\n';
  }
  return r.equal ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Counts rational curves on K3 surfaces: Yau-Zaslow "
               "coefficients, epsilon invariants, Delta-set listings.",
               "k3count"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Emit a single JSON document");
  app.add_option("--max-window", opt.max_window,
                 "Skip --verify enumeration for semigroups whose search "
                 "window exceeds this width")
      ->check(CLI::NonNegativeNumber);

  std::size_t gmax = 0;
  auto* eg = app.add_subcommand("eg", "Table of e(g) for g = 0..GMAX");
  eg->add_option("gmax", gmax, "Largest g")->required();

  std::string token;
  bool verify = false;
  auto* eps = app.add_subcommand("epsilon", "Epsilon invariant of a point");
  eps->add_option("token", token, "Singularity token, e.g. E8 or pq(3,5)")
      ->required();
  eps->add_flag("--verify", verify,
                "Cross-check against branch product, closed form and "
                "enumeration");

  std::string gens;
  auto* mods = app.add_subcommand("modules", "List all Delta-sets");
  mods->add_option("generators", gens, "Comma-separated generators, e.g. 3,5")
      ->required();

  std::string curve;
  auto* mult = app.add_subcommand("multiplicity",
                                  "Multiplicity of a rational curve");
  mult->add_option("curve", curve, "Comma-separated singularity tokens")
      ->required();

  std::string path;
  std::size_t g = 0;
  auto* check = app.add_subcommand(
      "check", "Compare summed multiplicities of a curve list with e(g)");
  check->add_option("file", path, "Curve list, one curve per line")
      ->required();
  check->add_option("--g", g, "Genus")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    if (*eg) return cmd_eg(gmax, opt, out);
    if (*eps) return cmd_epsilon(token, verify, opt, out);
    if (*mods) return cmd_modules(gens, opt, out);
    if (*mult) return cmd_multiplicity(curve, opt, out);
    if (*check) return cmd_check(path, g, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace k3count::cli
