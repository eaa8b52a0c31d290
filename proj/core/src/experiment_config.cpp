#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "dof/errors.hpp"
#include "dof/experiment.hpp"

namespace dof::experiment {
namespace {

using nlohmann::json;

std::vector<double> number_list(const json& j, const char* key) {
  if (j.is_number()) return {j.get<double>()};
  if (j.is_array()) {
    std::vector<double> out;
    for (const json& v : j) {
      if (!v.is_number()) throw ParseError(std::string("grid.") + key + ": expected numbers");
      out.push_back(v.get<double>());
    }
    return out;
  }
  if (j.is_object()) {
    // {"from": a, "to": b, "points": p}: p evenly spaced values including both ends.
    const double from = j.at("from").get<double>();
    const double to = j.at("to").get<double>();
    const auto points = j.at("points").get<std::size_t>();
    if (points == 0) throw ParseError(std::string("grid.") + key + ": points must be >= 1");
    std::vector<double> out(points);
    for (std::size_t i = 0; i < points; ++i) {
      out[i] = points == 1 ? from : from + (to - from) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return out;
  }
  throw ParseError(std::string("grid.") + key + ": expected number, list or range object");
}

CellSpec cell_from_json(const json& j) {
  CellSpec s;
  s.n = j.at("n").get<Var>();
  s.trials = j.at("trials").get<std::size_t>();
  if (j.contains("alpha")) s.alpha = j["alpha"].get<double>();
  if (j.contains("m")) s.m = j["m"].get<std::size_t>();
  if (j.contains("gamma")) s.gamma = j["gamma"].get<double>();
  if (j.contains("beta")) s.beta = j["beta"].get<double>();
  if (j.contains("f")) s.f = j["f"].get<Var>();
  return s;
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.k = root.value("k", 2u);
    cfg.mode = parse_mode(root.value("mode", std::string("fixed")));
    cfg.master_seed = root.at("master_seed").get<std::uint64_t>();
    cfg.budget = root.value("budget", kDefaultDpllBudget);

    if (root.contains("cells")) {
      for (const json& c : root["cells"]) cfg.cells.push_back(make_cell(cfg.k, cfg.mode, cell_from_json(c)));
    }
    if (root.contains("grid")) {
      // Cartesian product, nested in the order n, alpha/m, gamma/beta/f.
      const json& g = root["grid"];
      const auto trials = g.at("trials").get<std::size_t>();
      const std::vector<double> ns = number_list(g.at("n"), "n");
      const bool by_alpha = g.contains("alpha");
      const std::vector<double> densities = by_alpha ? number_list(g["alpha"], "alpha") : number_list(g.at("m"), "m");
      const char* pkey = g.contains("gamma") ? "gamma" : g.contains("beta") ? "beta" : "f";
      const std::vector<double> params = number_list(g.at(pkey), pkey);
      for (double n : ns) {
        for (double d : densities) {
          for (double p : params) {
            CellSpec s;
            s.n = static_cast<Var>(n);
            s.trials = trials;
            if (by_alpha) {
              s.alpha = d;
            } else {
              s.m = static_cast<std::size_t>(d);
            }
            if (std::string_view(pkey) == "gamma") s.gamma = p;
            if (std::string_view(pkey) == "beta") s.beta = p;
            if (std::string_view(pkey) == "f") s.f = static_cast<Var>(p);
            cfg.cells.push_back(make_cell(cfg.k, cfg.mode, s));
          }
        }
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace dof::experiment
