#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "freelip/freelip.hpp"

namespace freelip::cli {

namespace {

using nlohmann::json;

struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SpacePtr load_space(const std::string& path) {
  return space_from_json(load_json(path));
}

FreeElement load_element(const SpacePtr& space, const std::string& path) {
  return element_from_json(space, load_json(path));
}

std::string pair_text(const FiniteMetricSpace& space, int x, int y) {
  return space.label(x) + "->" + space.label(y);
}

// ---- table renderings ------------------------------------------------

std::string table_space(const FiniteMetricSpace& space) {
  std::ostringstream out;
  out << space.size() << " points, base " << space.label(space.base())
      << "\n";
  for (int i = 0; i < space.size(); ++i) {
    out << space.label(i) << ":";
    for (int j = 0; j < space.size(); ++j) {
      out << " " << format_rational(space.dist(i, j));
    }
    out << "\n";
  }
  return out.str();
}

std::string table_solution(const NormSolution& s) {
  const auto& space = *s.witness.space();
  std::ostringstream out;
  out << "value " << format_rational(s.value) << "\n";
  for (const auto& [pair, a] : s.flow) {
    out << "flow " << pair_text(space, pair.first, pair.second) << " "
        << format_rational(a) << "\n";
  }
  for (int i = 0; i < space.size(); ++i) {
    out << "witness " << space.label(i) << " "
        << format_rational(s.witness.value(i)) << "\n";
  }
  return out.str();
}

std::string table_measure(const DeLeeuwMeasure& mu) {
  std::ostringstream out;
  if (mu.is_zero()) {
    out << "empty measure\n";
    return out.str();
  }
  for (const auto& [pair, w] : mu.mass()) {
    out << "mass " << pair_text(*mu.space(), pair.first, pair.second) << " "
        << format_rational(w) << "\n";
  }
  return out.str();
}

std::string table_certificate(const SpacePtr& space,
                              const ExtremalityCertificate& cert) {
  std::ostringstream out;
  switch (cert.verdict) {
    case Verdict::extreme:
      out << "verdict Extreme\n";
      break;
    case Verdict::not_extreme:
      out << "verdict NotExtreme\n";
      break;
    case Verdict::not_a_molecule:
      out << "verdict NotAMolecule\n";
      break;
  }
  if (cert.pair) {
    out << "pair " << space->label(cert.pair->first) << " "
        << space->label(cert.pair->second) << "\n";
  }
  if (cert.violating_point) {
    out << "violating_point " << space->label(*cert.violating_point) << "\n";
  }
  if (cert.exposed_constant) {
    out << "exposed_constant "
        << (cert.exposed_constant->is_unbounded()
                ? "unbounded"
                : format_rational(cert.exposed_constant->value()))
        << "\n";
  }
  if (cert.localized) out << table_measure(*cert.localized);
  return out.str();
}

// ---- output plumbing ---------------------------------------------------

struct Sink {
  std::string format = "json";
  std::string path;  // empty = stdout

  void emit(const json& j, const std::string& table,
            std::ostream& out) const {
    std::string text = format == "table" ? table : j.dump(2) + "\n";
    if (path.empty()) {
      out << text;
    } else {
      std::ofstream file(path);
      if (!file) throw IOError("cannot write " + path);
      file << text;
    }
  }
};

json pairs_to_json(const FiniteMetricSpace& space,
                   const std::vector<std::pair<int, int>>& pairs) {
  json list = json::array();
  for (const auto& [p, q] : pairs) {
    list.push_back({space.label(p), space.label(q)});
  }
  return json{{"extreme_pairs", std::move(list)}};
}

std::string pairs_to_table(const FiniteMetricSpace& space,
                           const std::vector<std::pair<int, int>>& pairs) {
  std::ostringstream out;
  for (const auto& [p, q] : pairs) {
    out << space.label(p) << " " << space.label(q) << "\n";
  }
  return out.str();
}

int resolve_label(const FiniteMetricSpace& space, const std::string& label) {
  auto idx = space.index_of(label);
  if (!idx) throw UnknownPoint("unknown point \"" + label + "\"");
  return *idx;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact computations in Lipschitz-free spaces over finite "
               "metric spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --format / -o appear after the subcommand

  Sink sink;
  app.add_option("--format", sink.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("-o,--output", sink.path, "write output to a file");

  std::string space_path, element_path;
  std::vector<std::string> pair_labels;
  bool all_pairs = false;
  int gen_chain = 0, gen_random = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_scale = "1";

  auto* validate = app.add_subcommand("validate", "check a space file");
  validate->add_option("space", space_path)->required();

  auto* norm = app.add_subcommand("norm", "free-space norm with certificate");
  norm->add_option("space", space_path)->required();
  norm->add_option("element", element_path)->required();

  auto* represent =
      app.add_subcommand("represent", "minimal positive representation");
  represent->add_option("space", space_path)->required();
  represent->add_option("element", element_path)->required();

  auto* extreme =
      app.add_subcommand("extreme", "metric extremality criterion");
  extreme->add_option("space", space_path)->required();
  auto* pair_opt =
      extreme->add_option("--pair", pair_labels, "molecule endpoints")
          ->expected(2);
  extreme->add_flag("--all", all_pairs, "enumerate all extreme pairs");

  auto* enumerate =
      app.add_subcommand("enumerate", "list all extreme molecule pairs");
  enumerate->add_option("space", space_path)->required();

  auto* localize =
      app.add_subcommand("localize", "localization proof replay");
  localize->add_option("space", space_path)->required();
  localize->add_option("element", element_path)->required();

  auto* oracle =
      app.add_subcommand("oracle", "polytope vertex test, criterion-free");
  oracle->add_option("space", space_path)->required();
  oracle->add_option("element", element_path)->required();

  auto* generate = app.add_subcommand("generate", "emit a space file");
  auto* chain_opt =
      generate->add_option("--chain", gen_chain, "uniform chain with n steps");
  auto* random_opt =
      generate->add_option("--random", gen_random, "random space on n points");
  generate->add_option("--seed", gen_seed, "random seed");
  generate->add_option("--scale", gen_scale, "rational distance scale");
  chain_opt->excludes(random_opt);

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "UsageError"}, {"message", e.what()}}.dump(2)
        << "\n";
    return 2;
  }

  try {
    if (*validate) {
      SpacePtr space = load_space(space_path);
      sink.emit(json{{"points", space->size()}, {"valid", true}},
                "valid: " + table_space(*space), out);
    } else if (*norm) {
      SpacePtr space = load_space(space_path);
      NormSolution s = free_norm(load_element(space, element_path));
      sink.emit(solution_to_json(s), table_solution(s), out);
    } else if (*represent) {
      SpacePtr space = load_space(space_path);
      DeLeeuwMeasure mu =
          minimal_representation(load_element(space, element_path));
      sink.emit(measure_to_json(mu), table_measure(mu), out);
    } else if (*extreme) {
      SpacePtr space = load_space(space_path);
      const bool has_pair = pair_opt->count() > 0;
      if (all_pairs == has_pair) {
        throw ParseError("extreme needs exactly one of --pair, --all");
      }
      if (all_pairs) {
        auto pairs = enumerate_extreme(space);
        sink.emit(pairs_to_json(*space, pairs), pairs_to_table(*space, pairs),
                  out);
      } else {
        int p = resolve_label(*space, pair_labels[0]);
        int q = resolve_label(*space, pair_labels[1]);
        ExtremalityCertificate cert = is_extreme_molecule(space, p, q);
        sink.emit(certificate_to_json(space, cert),
                  table_certificate(space, cert), out);
      }
    } else if (*enumerate) {
      SpacePtr space = load_space(space_path);
      auto pairs = enumerate_extreme(space);
      sink.emit(pairs_to_json(*space, pairs), pairs_to_table(*space, pairs),
                out);
    } else if (*localize) {
      SpacePtr space = load_space(space_path);
      ExtremalityCertificate cert =
          freelip::localize(load_element(space, element_path));
      sink.emit(certificate_to_json(space, cert),
                table_certificate(space, cert), out);
    } else if (*oracle) {
      SpacePtr space = load_space(space_path);
      ExtremalityCertificate cert =
          oracle_certificate(load_element(space, element_path));
      sink.emit(certificate_to_json(space, cert),
                table_certificate(space, cert), out);
    } else if (*generate) {
      SpacePtr space;
      if (chain_opt->count()) {
        space = chain_space(gen_chain);
      } else if (random_opt->count()) {
        space = random_space(gen_random, gen_seed, parse_rational(gen_scale));
      } else {
        throw ParseError("generate needs one of --chain, --random");
      }
      sink.emit(space_to_json(*space), table_space(*space), out);
    }
  } catch (const ParseError& e) {
    err << json{{"error", e.name()}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const IOError& e) {
    err << json{{"error", "IOError"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    err << json{{"error", e.name()}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace freelip::cli
