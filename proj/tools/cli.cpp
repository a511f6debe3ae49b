#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordstop/fptas.hpp"
#include "ordstop/hardness.hpp"
#include "ordstop/json_io.hpp"
#include "ordstop/oracle.hpp"
#include "ordstop/prophet.hpp"
#include "ordstop/structure.hpp"
#include "ordstop/two_point.hpp"

namespace ordstop::cli {

namespace {

using nlohmann::json;

std::vector<std::size_t> parse_order(const std::string& text) {
  std::vector<std::size_t> order;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      const long long value = std::stoll(item);
      if (value < 0) throw ArgumentError("order indices must be non-negative");
      order.push_back(static_cast<std::size_t>(value));
    } catch (const std::invalid_argument&) {
      throw ArgumentError("order must be a comma-separated index list");
    } catch (const std::out_of_range&) {
      throw ArgumentError("order index out of range");
    }
  }
  if (order.empty()) throw ArgumentError("order must not be empty");
  return order;
}

std::vector<std::int64_t> parse_integers(const std::string& text) {
  std::vector<std::int64_t> integers;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      integers.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ArgumentError("integers must be a comma-separated list");
    }
  }
  if (integers.empty()) throw ArgumentError("integers must not be empty");
  return integers;
}

std::vector<FiniteDist> to_finite(const std::vector<Dist>& vars) {
  std::vector<FiniteDist> out;
  out.reserve(vars.size());
  for (const Dist& d : vars) {
    const FiniteDist* f = std::get_if<FiniteDist>(&d);
    if (!f) throw ShapeError("finite-support instance required");
    out.push_back(*f);
  }
  return out;
}

TwoPointInstance to_two_point(const std::vector<Dist>& vars) {
  std::vector<TwoPointVar> tps;
  tps.reserve(vars.size());
  for (const Dist& d : vars) {
    const FiniteDist* f = std::get_if<FiniteDist>(&d);
    if (!f || f->size() > 2) throw ShapeError("two-point instance required");
    if (f->size() == 1) {
      tps.push_back({f->atoms()[0], f->atoms()[0], 0.0});
    } else {
      tps.push_back({f->atoms()[0], f->atoms()[1], f->masses()[1]});
    }
  }
  return TwoPointInstance(std::move(tps));
}

std::vector<UniformDist> to_uniform(const std::vector<Dist>& vars) {
  std::vector<UniformDist> out;
  out.reserve(vars.size());
  for (const Dist& d : vars) {
    const UniformDist* u = std::get_if<UniformDist>(&d);
    if (!u) throw ShapeError("uniform instance required");
    out.push_back(*u);
  }
  return out;
}

json ordering_json(const OrderingResult& res) {
  json obj;
  obj["ordering"] = res.order;
  obj["value"] = res.value;
  obj["thresholds"] = res.thresholds;
  return obj;
}

json cmd_evaluate(const InstanceFile& instance,
                  const std::vector<std::size_t>& order) {
  std::vector<Dist> seq;
  seq.reserve(order.size());
  OrderingResult res = evaluate_order(instance.variables, order);
  for (std::size_t i : res.order) seq.push_back(instance.variables[i]);
  ExcessProfile profile = makespan_value(seq);

  json result = ordering_json(res);
  result["order"] = res.order;
  result["excesses"] = profile.excesses;
  result["cutoffs"] = profile.cutoffs;
  return result;
}

json cmd_solve(const InstanceFile& instance, const std::string& method,
               bool have_eps, double eps) {
  if (method == "fptas" && !have_eps) {
    throw ArgumentError("--eps is required for method fptas");
  }
  json result;
  result["method"] = method;
  if (method == "brute") {
    OracleResult oracle = brute_force_order(instance.variables);
    OrderingResult res =
        evaluate_order(instance.variables, oracle.best_orderings.front());
    result.update(ordering_json(res));
    result["tie_count"] = oracle.best_orderings.size();
    result["evaluated_count"] = oracle.evaluated_count;
  } else if (method == "two-point") {
    TwoPointInstance inst = to_two_point(instance.variables);
    result.update(ordering_json(solve(inst)));
  } else if (method == "nested-uniform") {
    std::vector<UniformDist> uniforms = to_uniform(instance.variables);
    result.update(ordering_json(solve_nested_uniform(uniforms)));
  } else if (method == "fptas") {
    std::vector<FiniteDist> dists = to_finite(instance.variables);
    bool zero_left = true;
    for (const FiniteDist& d : dists) {
      zero_left = zero_left && has_zero_mid_one_support(d);
    }
    FptasResult fres = zero_left ? solve_common_endpoints(dists, eps)
                                 : solve_general_left(dists, eps);
    OrderingResult res = evaluate_order(instance.variables, fres.ordering);
    result.update(ordering_json(res));
    result["eps"] = eps;
    result["variant"] = zero_left ? "common-endpoints" : "general-left";
    result["partitions_kept"] = fres.partitions_kept;
  }
  return result;
}

json cmd_prophet(const InstanceFile& instance) {
  TwoPointInstance inst = to_two_point(instance.variables);
  ProphetReport report = prophet_ratio(inst);
  json result;
  result["e_max"] = report.e_max;
  result["best_order_value"] = report.best_order_value;
  result["ratio"] = report.ratio;
  const ProphetCertificate& cert = *report.certificate;
  json cj;
  cj["i_star"] = cert.i_star;
  cj["u_indices"] = cert.u_indices;
  cj["w_indices"] = cert.w_indices;
  cj["b_w"] = cert.b_w;
  cj["p_w"] = cert.p_w;
  cj["mu_star"] = cert.mu_star;
  cj["t1"] = cert.t1;
  cj["t2"] = cert.t2;
  cj["t3"] = cert.t3;
  cj["max"] = cert.max_value;
  cj["sigma1_value"] = cert.sigma1_value;
  cj["sigma2_value"] = cert.sigma2_value;
  cj["w_empty"] = cert.w_empty;
  result["certificate"] = cj;
  return result;
}

json cmd_gen_hardness(const std::vector<std::int64_t>& integers,
                      std::int64_t target, const std::string& out_path) {
  HardnessInstance inst = generate(integers, target);

  InstanceFile file;
  double gamma = 1.0;
  for (std::int64_t a : inst.integers) gamma *= static_cast<double>(a);
  for (const FiniteDist& d : inst.dists) file.variables.emplace_back(d);
  file.metadata["gamma"] = gamma;
  file.metadata["B"] = static_cast<double>(target);
  save_instance(out_path, file);

  json result;
  result["instance_digest"] = instance_digest(file);
  result["out"] = out_path;
  result["gamma"] = gamma;
  result["B"] = target;
  json middles = json::array();
  for (const FiniteDist& d : inst.dists) middles.push_back(middle_point(d));
  result["m"] = middles;
  return result;
}

json cmd_check_structure(const InstanceFile& instance,
                         const std::vector<std::size_t>& order) {
  std::vector<FiniteDist> dists = to_finite(instance.variables);
  OrderingResult res = evaluate_order(
      std::span<const FiniteDist>(dists), order);
  StructureReport report = classify_st(res, dists);
  json result;
  result["order"] = res.order;
  result["value"] = res.value;
  result["s_indices"] = report.s_indices;
  result["t_indices"] = report.t_indices;
  result["satisfies_claim"] = report.satisfies_claim;
  json violations = json::array();
  for (const StructureViolation& v : report.violations) {
    violations.push_back({{"position", v.position}, {"reason", v.reason}});
  }
  result["violations"] = violations;
  return result;
}

void print_report(const json& report, bool machine, std::ostream& out) {
  if (machine) {
    out << report.dump(2) << "\n";
    return;
  }
  out << "command: " << report["command"].get<std::string>() << "\n";
  if (report.contains("instance_digest")) {
    out << "instance: " << report["instance_digest"].get<std::string>()
        << "\n";
  }
  for (const auto& [key, value] : report["result"].items()) {
    out << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact and approximate probe-order solvers for optimal "
               "stopping"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string order_text;
  std::string method;
  std::string out_path;
  std::string integers_text;
  std::int64_t target = 0;
  double eps = 0.0;
  bool machine = false;

  app.add_flag("--json", machine, "Machine-readable JSON report");

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Value and thresholds of a fixed probe order");
  evaluate->add_option("instance", instance_path, "Instance file")->required();
  evaluate->add_option("--order", order_text, "Comma-separated probe order")
      ->required();

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Find a (near-)optimal probe order");
  solve_cmd->add_option("instance", instance_path, "Instance file")
      ->required();
  solve_cmd
      ->add_option("--method", method,
                   "brute | two-point | fptas | nested-uniform")
      ->required()
      ->check(CLI::IsMember(
          {"brute", "two-point", "fptas", "nested-uniform"}));
  CLI::Option* eps_opt =
      solve_cmd->add_option("--eps", eps, "Accuracy target for fptas");

  CLI::App* prophet_cmd = app.add_subcommand(
      "prophet", "Hindsight benchmark, ratio and certificate");
  prophet_cmd->add_option("instance", instance_path, "Instance file")
      ->required();

  CLI::App* gen = app.add_subcommand(
      "gen-hardness", "Generate a subset-product reduction instance");
  gen->add_option("--integers", integers_text, "Comma-separated integers, each >= 2")
      ->required();
  gen->add_option("--target", target, "Subset-product target")->required();
  gen->add_option("--out", out_path, "Output instance path")->required();

  CLI::App* check = app.add_subcommand(
      "check-structure", "S/T decomposition of a probe order");
  check->add_option("instance", instance_path, "Instance file")->required();
  check->add_option("--order", order_text, "Comma-separated probe order")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  json report;
  try {
    if (app.got_subcommand(evaluate)) {
      InstanceFile instance = load_instance(instance_path);
      report["command"] = "evaluate";
      report["instance_digest"] = instance_digest(instance);
      report["result"] = cmd_evaluate(instance, parse_order(order_text));
    } else if (app.got_subcommand(solve_cmd)) {
      InstanceFile instance = load_instance(instance_path);
      report["command"] = "solve";
      report["instance_digest"] = instance_digest(instance);
      report["result"] =
          cmd_solve(instance, method, eps_opt->count() > 0, eps);
    } else if (app.got_subcommand(prophet_cmd)) {
      InstanceFile instance = load_instance(instance_path);
      report["command"] = "prophet";
      report["instance_digest"] = instance_digest(instance);
      report["result"] = cmd_prophet(instance);
    } else if (app.got_subcommand(gen)) {
      report["command"] = "gen-hardness";
      report["result"] =
          cmd_gen_hardness(parse_integers(integers_text), target, out_path);
    } else if (app.got_subcommand(check)) {
      InstanceFile instance = load_instance(instance_path);
      report["command"] = "check-structure";
      report["instance_digest"] = instance_digest(instance);
      report["result"] = cmd_check_structure(instance, parse_order(order_text));
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;
  report["wall_time_s"] = elapsed.count();
  print_report(report, machine, out);
  return 0;
}

}  // namespace ordstop::cli
