#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "ffcurve/curves.hpp"
#include "ffcurve/towers.hpp"

namespace ffc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

curves::CurveSpec curve_from_json(const nlohmann::json& j);
towers::TowerSpec tower_from_json(const nlohmann::json& j);

}  // namespace ffc::cli
