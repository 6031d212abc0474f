#pragma once

#include <string>
#include <vector>

#include "airystef/grid.hpp"
#include "airystef/stefan.hpp"
#include "config.hpp"
#include "jsonio.hpp"

namespace airystef::cli {

void ensure_dir(const std::string& dir);
void write_file(const std::string& path, const std::string& content);

/// ResidualReport as one stable JSON object.
Json report_json(const ResidualReport& r);

/// Full parameter set of a solved instance, including the derived constants
/// and the boundary data.
Json problem_json(const StefanProblem& p);

Json tolerances_json(const Tolerances& t);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Strict reader for the tables this tool writes (numeric cells, one header
/// line); throws std::invalid_argument on malformed input.
CsvTable read_csv(const std::string& path);

}  // namespace airystef::cli
