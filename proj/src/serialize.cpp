#include "qharness/serialize.hpp"

#include <cstdio>
#include <fstream>

namespace qh {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string measure_to_csv(const QuadratureMeasure& m) {
  std::string out = "node,weight\n";
  for (int i = 0; i < m.size(); ++i) {
    out += format_double(m.nodes[static_cast<std::size_t>(i)]);
    out += ',';
    out += format_double(m.weights[static_cast<std::size_t>(i)]);
    out += '\n';
  }
  return out;
}

nlohmann::json measure_to_json(const QuadratureMeasure& m) {
  return {{"nodes", m.nodes}, {"weights", m.weights}};
}

std::string trajectory_to_csv(const Trajectory& traj) {
  std::string out = "t,x\n";
  for (std::size_t i = 0; i < traj.grid.size(); ++i) {
    out += format_double(traj.grid[i]);
    out += ',';
    out += format_double(traj.values[i]);
    out += '\n';
  }
  return out;
}

std::string trajectories_to_csv(const std::vector<Trajectory>& trajs) {
  std::string out;
  if (trajs.empty()) return out;
  const auto& grid = trajs.front().grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) out += ',';
    out += format_double(grid[i]);
  }
  out += '\n';
  for (const auto& traj : trajs) {
    for (std::size_t i = 0; i < traj.values.size(); ++i) {
      if (i) out += ',';
      out += format_double(traj.values[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json trajectories_to_json(const std::vector<Trajectory>& trajs) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& traj : trajs) paths.push_back(traj.values);
  nlohmann::json out;
  out["grid"] = trajs.empty() ? std::vector<double>{} : trajs.front().grid;
  out["paths"] = std::move(paths);
  return out;
}

nlohmann::json identity_report_to_json(const IdentityReport& rep) {
  nlohmann::json tuple = {
      {"z", to_string(rep.tuple.z)},     {"y", to_string(rep.tuple.y)},
      {"x", to_string(rep.tuple.x)},     {"u", to_string(rep.tuple.u)},
      {"t", to_string(rep.tuple.t)},     {"s", to_string(rep.tuple.s)},
      {"eta", to_string(rep.tuple.params.eta)},
      {"theta", to_string(rep.tuple.params.theta)},
      {"q", to_string(rep.tuple.params.q)},
  };
  nlohmann::json out = {{"identity", rep.identity}, {"n", rep.n},
                        {"k", rep.k},               {"j", rep.j},
                        {"tuple", std::move(tuple)}, {"residual", to_string(rep.residual)},
                        {"pass", rep.pass}};
  if (!rep.detail.empty()) out["detail"] = rep.detail;
  return out;
}

nlohmann::json matrix2_to_json(const TransitionMatrix2& m) {
  return {{"labels", {"-", "+"}}, {"matrix", {{m.mm, m.mp}, {m.pm, m.pp}}}};
}

nlohmann::json check_line(const std::string& check, const nlohmann::json& params, double residual,
                          double tolerance) {
  return {{"check", check},
          {"params", params},
          {"residual", residual},
          {"tolerance", tolerance},
          {"pass", residual <= tolerance}};
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NumericError("cannot open output file: " + path);
  out << contents;
}

}  // namespace qh
