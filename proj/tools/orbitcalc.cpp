// orbitcalc: partition calculus for nilpotent orbits of classical Lie
// algebras, with exhaustive identity sweeps.
//
// Exit codes: 0 success, 1 a must-hold identity failed, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "orbitcalc/arthur.hpp"
#include "orbitcalc/bv_duality.hpp"
#include "orbitcalc/classical.hpp"
#include "orbitcalc/closure_poset.hpp"
#include "orbitcalc/dimensions.hpp"
#include "orbitcalc/json_io.hpp"
#include "orbitcalc/text_format.hpp"
#include "orbitcalc/verification.hpp"

using nlohmann::json;
using namespace orbitcalc;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ORBITCALC_MAX_N overrides both the sweep rank cap and the size cap for
// single computations.
std::optional<int> env_cap() {
  const char* v = std::getenv("ORBITCALC_MAX_N");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0 || n > 100000) {
    throw InputError(std::string("ORBITCALC_MAX_N is not a usable integer: ") + v);
  }
  return static_cast<int>(n);
}

int sweep_rank_cap() { return env_cap().value_or(12); }
int sweep_size_cap() { return 2 * sweep_rank_cap() + 1; }
int single_size_cap() { return env_cap().value_or(30); }

void check_size(int size, const std::string& what) {
  if (size > single_size_cap()) {
    throw InputError(what + " has size " + std::to_string(size) +
                     ", above the cap " + std::to_string(single_size_cap()) +
                     " (raise ORBITCALC_MAX_N)");
  }
}

Partition read_partition(const std::string& text) {
  Partition p = parse_partition(text);
  check_size(p.size(), to_string(p));
  return p;
}

GroupType read_group(const std::string& text) {
  GroupType g = parse_group(text);
  check_size(g.partition_size(), g.name());
  return g;
}

ArthurPartitionData read_parameter(const std::string& text) {
  ArthurPartitionData psi = parse_parameter(text);
  check_size(psi.p_psi().size(), to_string(psi));
  return psi;
}

std::optional<Family> read_family(const std::string& text) {
  if (text.empty() || text == "all") return std::nullopt;
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      default: break;
    }
  }
  throw InputError("family must be B, C, D or all: '" + text + "'");
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// Criterion sides for B and C are collapses on the dual side of the orbit;
// their transposes are the partitions compared in the expansion form.
json criterion_output(const ArthurPartitionData& psi) {
  const auto crit = check_criterion(psi);
  const auto expd = check_expansion_form(psi);
  const bool transpose_sides = psi.group().family != Family::D;
  return {{"psi", to_string(psi)},
          {"verdict", crit.verdict},
          {"lhs", transpose_sides ? transpose(crit.lhs) : crit.lhs},
          {"rhs", transpose_sides ? transpose(crit.rhs) : crit.rhs},
          {"criterion_lhs", crit.lhs},
          {"criterion_rhs", crit.rhs},
          {"class", to_string(crit.tag)},
          {"expansion_form", criterion_json(expd)}};
}

struct ComputeArgs {
  std::string group;
  std::string partition;
  std::string parameter;
  std::string source;
};

// Registers the compute kinds on `parent`; the chosen one stores its
// action in `action`.
void add_compute_kinds(CLI::App* parent, ComputeArgs& a,
                       std::function<int()>& action) {
  auto kind = [&](const char* name, const char* help) {
    return parent->add_subcommand(name, help);
  };
  auto with_group = [&](CLI::App* cmd) {
    cmd->add_option("group", a.group, "group, e.g. C5")->required();
    cmd->add_option("partition", a.partition, "partition, e.g. [3^2 2^3]")->required();
  };

  auto* t = kind("transpose", "transpose of a partition");
  t->add_option("partition", a.partition)->required();
  t->callback([&] {
    action = [&] {
      const Partition p = read_partition(a.partition);
      emit({{"input", p}, {"result", transpose(p)}});
      return 0;
    };
  });

  auto* c = kind("collapse", "largest type partition below p");
  with_group(c);
  c->callback([&] {
    action = [&] {
      const GroupType g = read_group(a.group);
      const Partition p = read_partition(a.partition);
      emit({{"group", g}, {"input", p}, {"result", collapse(p, g)}});
      return 0;
    };
  });

  auto* e = kind("expand", "smallest special type partition above p");
  with_group(e);
  e->callback([&] {
    action = [&] {
      const GroupType g = read_group(a.group);
      const Partition p = read_partition(a.partition);
      emit({{"group", g}, {"input", p}, {"result", expansion(p, g)}});
      return 0;
    };
  });

  auto* s = kind("special", "specialness and Spaltenstein dual");
  with_group(s);
  s->callback([&] {
    action = [&] {
      const GroupType g = read_group(a.group);
      const Partition p = read_partition(a.partition);
      emit({{"group", g},
            {"input", p},
            {"special", is_special(p, g)},
            {"dual", spaltenstein_dual(p, g)}});
      return 0;
    };
  });

  auto* eta_cmd = kind("eta", "Barbasch-Vogan dual of a dual-side partition");
  eta_cmd->add_option("--source", a.source,
                      "side the input lives on: soOdd|sp|soEven, B|C|D, or a group like B6")
      ->required();
  eta_cmd->add_option("partition", a.partition)->required();
  eta_cmd->callback([&] {
    action = [&] {
      const Partition p = read_partition(a.partition);
      const bool has_rank = a.source.size() > 1 &&
                            std::isdigit(static_cast<unsigned char>(a.source[1]));
      const GroupType source = has_rank
                                   ? read_group(a.source)
                                   : group_for_size(parse_source_family(a.source), p.size());
      const Partition r = eta(p, source);
      const Partition alt = eta_alt(p, source);
      emit({{"source", source},
            {"target", eta_target(source)},
            {"input", p},
            {"result", r},
            {"eta_alt", alt},
            {"routes_agree", r == alt}});
      return 0;
    };
  });

  auto* d = kind("dim", "orbit dimension");
  with_group(d);
  d->callback([&] {
    action = [&] {
      const GroupType g = read_group(a.group);
      const Partition p = read_partition(a.partition);
      emit({{"group", g}, {"partition", p}, {"dim", dim_orbit(p, g)},
            {"group_dim", dim_group(g)}});
      return 0;
    };
  });

  auto with_param = [&](const char* name, const char* help) {
    auto* cmd = kind(name, help);
    cmd->add_option("parameter", a.parameter, "parameter, e.g. C6:{3^3,2^2}")->required();
    return cmd;
  };

  with_param("wavefront", "GL wavefront p(psi)^t")->callback([&] {
    action = [&] {
      const auto psi = read_parameter(a.parameter);
      emit({{"psi", to_string(psi)}, {"p_psi", psi.p_psi()},
            {"wavefront", gl_wavefront(psi)}, {"tempered", is_tempered(psi)}});
      return 0;
    };
  });

  with_param("bound", "upper bound partition for the wavefront")->callback([&] {
    action = [&] {
      const auto psi = read_parameter(a.parameter);
      emit({{"psi", to_string(psi)}, {"group", psi.group()}, {"bound", bitorsor_bound(psi)}});
      return 0;
    };
  });

  with_param("construct", "constructed member partition")->callback([&] {
    action = [&] {
      const auto psi = read_parameter(a.parameter);
      const auto [p1, n_star] = p1_and_nstar(psi);
      const auto d58 = check_prop58(psi);
      emit({{"psi", to_string(psi)},
            {"p1", p1},
            {"n_star", n_star},
            {"union", constructed_union(psi)},
            {"constructed", d58.constructed},
            {"eta", d58.eta},
            {"dominated", d58.holds},
            {"strict", d58.strict}});
      return 0;
    };
  });

  with_param("criterion", "criterion equation and its expansion form")->callback([&] {
    action = [&] {
      emit(criterion_output(read_parameter(a.parameter)));
      return 0;
    };
  });

  auto* split = with_param("split", "odd/even endoscopic split");
  split->callback([&] {
    action = [&] {
      const auto psi = read_parameter(a.parameter);
      const auto sp = split_IJ(psi);
      emit({{"psi", to_string(psi)},
            {"psi1", parameter_json(sp.psi1)},
            {"psi2", parameter_json(sp.psi2)},
            {"n1", sp.n1},
            {"n2", sp.n2}});
      return 0;
    };
  });

  with_param("codim", "codimension identity for one parameter")->callback([&] {
    action = [&] {
      const auto psi = read_parameter(a.parameter);
      const auto item = verify_lemma41(psi);
      json j = item_json(item);
      j["psi"] = to_string(psi);
      emit(j);
      return item.holds ? 0 : kExitFailed;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitcalc: partitions, collapses and dualities for classical nilpotent orbits"};
  app.require_subcommand(1);
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output where a text format also exists");

  std::function<int()> action;
  ComputeArgs args;

  auto* compute = app.add_subcommand("compute", "single computation");
  compute->require_subcommand(1);
  add_compute_kinds(compute, args, action);
  // The kinds also work directly at top level: `orbitcalc eta ...`.
  add_compute_kinds(&app, args, action);

  std::string identity;
  std::string family;
  int max_n = -1;
  int max_size = -1;
  int min = 0;
  int jobs = 0;
  bool no_duration = false;
  auto* verify = app.add_subcommand("verify", "exhaustive identity sweep");
  verify->add_option("--identity", identity, "identity name")->required();
  verify->add_option("--family", family, "B, C, D or all");
  verify->add_option("--max-n", max_n, "largest rank for rank sweeps");
  verify->add_option("--max-size", max_size, "largest partition size for size sweeps");
  verify->add_option("--min", min, "smallest rank or size");
  verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  verify->add_flag("--no-duration", no_duration, "omit the timing field");
  verify->callback([&] {
    action = [&] {
      SweepConfig cfg;
      cfg.identity = parse_identity(identity);
      cfg.family = read_family(family);
      cfg.jobs = jobs;
      cfg.min = min;
      if (is_size_sweep(cfg.identity)) {
        cfg.max = max_size >= 0 ? max_size : max_n >= 0 ? 2 * max_n + 1 : 12;
        if (cfg.max > sweep_size_cap()) {
          throw InputError("--max-size above the cap " + std::to_string(sweep_size_cap()));
        }
      } else {
        cfg.max = max_n >= 0 ? max_n : 6;
        if (cfg.max > sweep_rank_cap()) {
          throw InputError("--max-n above the cap " + std::to_string(sweep_rank_cap()));
        }
      }
      if (cfg.min < 0) throw InputError("--min must be nonnegative");
      const auto report = run_sweep(cfg);
      emit(report_json(report, !no_duration));
      return report.ok() ? 0 : kExitFailed;
    };
  });

  std::string search_family;
  int search_max_n = 6;
  auto* search = app.add_subcommand("search", "parameters whose expansion-form equality fails");
  search->add_option("--family", search_family, "B, C or D")->required();
  search->add_option("--max-n", search_max_n, "largest rank");
  search->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  search->callback([&] {
    action = [&] {
      const auto f = read_family(search_family);
      if (!f) throw InputError("search needs a single family");
      if (search_max_n < 0 || search_max_n > sweep_rank_cap()) {
        throw InputError("--max-n outside 0.." + std::to_string(sweep_rank_cap()));
      }
      emit(search_counterexamples(*f, search_max_n, jobs));
      return 0;
    };
  });

  std::string hasse_group;
  std::string format = "dot";
  bool with_eta = false;
  auto* hasse = app.add_subcommand("hasse", "closure order diagram of a group");
  hasse->add_option("group", hasse_group, "group, e.g. C3")->required();
  hasse->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  hasse->add_flag("--eta", with_eta, "annotate nodes with their eta image");
  hasse->callback([&] {
    action = [&] {
      const GroupType g = read_group(hasse_group);
      const auto poset = build_closure_poset(g, with_eta);
      if (format == "json" || json_flag) {
        emit(to_json(poset));
      } else {
        std::cout << to_dot(poset);
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return action ? action() : kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
