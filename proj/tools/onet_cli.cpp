// Experiment driver.  Subcommands:
//   gen      materialize an instance spec into a reproducible instance file
//   run      execute an experiment config: replay, oracle, report, csv, svg
//   report   aggregate csv files produced by run
//   render   draw an instance file and its replay as svg (1D and 2D only)
//   selftest fast cross-module invariant suite
// Exit codes: 0 all pass, 1 bound or validity failure, 2 usage/config error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <onet/generators.hpp>
#include <onet/selfcheck.hpp>
#include <onet/svg.hpp>
#include <onet/trial.hpp>

namespace {

onet::json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open '" + path + "'");
  onet::json j;
  f >> j;
  return j;
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f.write(body.data(), std::streamsize(body.size()));
}

int cmd_gen(const std::string& spec_path, const std::string& out_path) {
  onet::InstanceSpec spec = load_json(spec_path).get<onet::InstanceSpec>();
  onet::Instance inst = onet::materialize(spec);
  write_text(out_path, onet::instance_to_json(inst).dump(2) + "\n");
  std::cout << "wrote " << out_path << ": " << onet::family_name(spec.family) << ", "
            << inst.ground.size() << " ground points, " << inst.shapes.size() << " shapes\n";
  return 0;
}

int cmd_run(const std::string& config_path, std::string csv_override,
            std::string report_override, std::string render_override) {
  onet::ExperimentConfig cfg = load_json(config_path).get<onet::ExperimentConfig>();
  if (!csv_override.empty()) cfg.csv_path = csv_override;
  if (!report_override.empty()) cfg.report_path = report_override;
  if (!render_override.empty()) cfg.render_path = render_override;
  onet::validate_config(cfg);

  onet::ExperimentResult result = onet::run_experiment(cfg);

  if (!cfg.csv_path.empty()) write_text(cfg.csv_path, onet::csv_table(result.reports));
  if (!cfg.report_path.empty()) {
    onet::json out{{"config", cfg},
                   {"summary", result.summary(cfg)},
                   {"trials", result.reports}};
    write_text(cfg.report_path, out.dump(2) + "\n");
  }
  if (!cfg.render_path.empty()) {
    onet::InstanceSpec s0 = cfg.instance;
    s0.seed = onet::mix_seed(cfg.instance.seed, 0);
    onet::Instance inst = onet::materialize(s0);
    onet::ReplayOutcome replay = onet::replay_final_state(inst, cfg);
    onet::render_svg(inst, replay.alg_points, replay.opt_points, cfg.render_path);
  }

  std::size_t failed = 0;
  for (const onet::TrialReport& r : result.reports)
    if (!r.pass()) ++failed;
  std::cout << result.reports.size() << " trials, " << (result.reports.size() - failed)
            << " passed; max ratio " << result.max_ratio << ", mean ratio " << result.mean_ratio
            << ", mean size " << result.mean_alg_size << "\n";
  if (failed > 0) {
    std::cerr << "error: " << failed << " trial(s) failed bound or validity checks\n";
    return 1;
  }
  return 0;
}

struct CsvGroup {
  std::size_t trials = 0;
  std::size_t passed = 0;
  double max_ratio = 0;
  double ratio_sum = 0;
  double size_sum = 0;
};

int cmd_report(const std::vector<std::string>& csv_paths) {
  std::map<std::string, CsvGroup> groups;
  bool any_fail = false;
  for (const std::string& path : csv_paths) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(f, line)) throw std::invalid_argument("empty csv '" + path + "'");
    if (line != onet::csv_header())
      throw std::invalid_argument("unrecognized csv header in '" + path + "'");
    while (std::getline(f, line)) {
      if (line.empty()) continue;
      std::vector<std::string> cols;
      std::stringstream ss(line);
      std::string col;
      while (std::getline(ss, col, ',')) cols.push_back(col);
      if (cols.size() != 10) throw std::invalid_argument("bad csv row in '" + path + "'");
      CsvGroup& g = groups[cols[1] + " eps_or_M=" + cols[2]];
      g.trials += 1;
      bool pass = cols[8] == "true";
      if (pass) g.passed += 1;
      any_fail = any_fail || !pass;
      double ratio = std::stod(cols[6]);
      g.max_ratio = std::max(g.max_ratio, ratio);
      g.ratio_sum += ratio;
      g.size_sum += std::stod(cols[3]);
    }
  }
  for (const auto& [key, g] : groups) {
    std::cout << key << ": trials=" << g.trials << " passed=" << g.passed
              << " max_ratio=" << g.max_ratio << " mean_ratio=" << g.ratio_sum / double(g.trials)
              << " mean_size=" << g.size_sum / double(g.trials) << "\n";
  }
  if (any_fail) {
    std::cerr << "error: failing rows present\n";
    return 1;
  }
  return 0;
}

int cmd_render(const std::string& instance_path, const std::string& out_path) {
  onet::Instance inst = onet::instance_from_json(load_json(instance_path));
  onet::ExperimentConfig cfg;
  cfg.instance = inst.spec;
  onet::ReplayOutcome replay = onet::replay_final_state(inst, cfg);
  onet::render_svg(inst, replay.alg_points, replay.opt_points, out_path);
  std::cout << "wrote " << out_path << ": " << replay.alg_points.size() << " algorithm points, "
            << replay.opt_points.size() << " optimal points\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online epsilon-net and piercing experiment driver"};
  app.require_subcommand(1);

  std::string spec_path, out_path;
  CLI::App* gen = app.add_subcommand("gen", "materialize an instance spec to a file");
  gen->add_option("--spec", spec_path, "instance spec json")->required();
  gen->add_option("--out", out_path, "output instance json")->required();

  std::string config_path, csv_override, report_override, render_override;
  CLI::App* run = app.add_subcommand("run", "execute an experiment config");
  run->add_option("--config", config_path, "experiment config json")->required();
  run->add_option("--csv", csv_override, "override csv output path");
  run->add_option("--report", report_override, "override report json path");
  run->add_option("--render", render_override, "override svg output path");

  std::vector<std::string> csv_paths;
  CLI::App* report = app.add_subcommand("report", "aggregate run csv files");
  report->add_option("--csv", csv_paths, "csv files to aggregate")->required()->expected(-1);

  std::string instance_path, render_out;
  CLI::App* render = app.add_subcommand("render", "draw an instance and its replay as svg");
  render->add_option("--instance", instance_path, "instance json (from gen)")->required();
  render->add_option("--out", render_out, "output svg path")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(spec_path, out_path);
    if (run->parsed()) return cmd_run(config_path, csv_override, report_override,
                                      render_override);
    if (report->parsed()) return cmd_report(csv_paths);
    if (render->parsed()) return cmd_render(instance_path, render_out);
    if (selftest->parsed()) return onet::selfcheck_print(std::cout) ? 0 : 1;
  } catch (const onet::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
