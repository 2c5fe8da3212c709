#pragma once

#include <string>

#include "json.hpp"

namespace mhilb::cli {

// Runs one subcommand on a problem document {"grading", "hilbert", "task"} and returns the artifact.
nlohmann::json execute(const std::string& subcommand, const nlohmann::json& problem);

// One-line human-readable summary of an artifact.
std::string summarize(const nlohmann::json& artifact);

int run(int argc, char** argv);

}  // namespace mhilb::cli
