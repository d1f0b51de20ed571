#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qharness/connection.hpp"
#include "qharness/markov.hpp"
#include "qharness/qm1.hpp"
#include "qharness/spectral.hpp"

namespace qh {

/// Full round-trip formatting (17 significant digits).
std::string format_double(double x);

std::string measure_to_csv(const QuadratureMeasure& m);
nlohmann::json measure_to_json(const QuadratureMeasure& m);

/// Single trajectory as a (t, x) table.
std::string trajectory_to_csv(const Trajectory& traj);

/// Batch of trajectories: header row of grid times, one row per path.
std::string trajectories_to_csv(const std::vector<Trajectory>& trajs);
nlohmann::json trajectories_to_json(const std::vector<Trajectory>& trajs);

nlohmann::json identity_report_to_json(const IdentityReport& rep);

nlohmann::json matrix2_to_json(const TransitionMatrix2& m);

/// One machine-readable check line: {check, params, residual, tolerance, pass}.
nlohmann::json check_line(const std::string& check, const nlohmann::json& params, double residual,
                          double tolerance);

void write_file(const std::string& path, const std::string& contents);

}  // namespace qh
