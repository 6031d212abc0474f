#include "artifacts.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace airystef::cli {

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::invalid_argument("cannot create output directory " + dir +
                                ": " + ec.message());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write " + path);
  }
  out << content;
}

Json report_json(const ResidualReport& r) {
  return Json::object({
      {"identity", Json::string(r.identity_name)},
      {"method", Json::string(r.method)},
      {"n_points", Json::integer(r.n_points)},
      {"max_abs", Json::number(r.max_abs)},
      {"mean_abs", Json::number(r.mean_abs)},
      {"notes", Json::string(r.notes)},
  });
}

Json problem_json(const StefanProblem& p) {
  const ErmakovParams& e = p.sol.params;
  return Json::object({
      {"lambda", Json::number(e.lambda)},
      {"a", Json::number(p.sol.a)},
      {"c1", Json::number(e.c1)},
      {"c2", Json::number(e.c2)},
      {"c3", Json::number(e.c3)},
      {"kstar", Json::number(e.kstar)},
      {"epsilon", Json::number(e.epsilon)},
      {"sigma", Json::number(e.sigma)},
      {"wronskian", Json::number(e.wronskian)},
      {"m", Json::number(p.sol.m)},
      {"n", Json::number(p.sol.n)},
      {"mu", Json::number(p.sol.mu)},
      {"gamma", Json::number(p.gamma)},
      {"S_0", Json::number(p.S_0)},
      {"L_m", Json::number(p.L_m)},
      {"P_m", Json::number(p.P_m)},
      {"H_0", Json::number(p.H_0)},
      {"i", Json::number(p.i)},
      {"j", Json::number(p.j)},
      {"k", Json::number(p.k)},
      {"notes",
       Json::string("sigma is the real root of 2*sigma^3 = -1, i.e. "
                    "-2^(-1/3); the alternative scale -2^(1/3) fails the "
                    "basis residual Omega'' + (z/2)Omega = 0 and is "
                    "rejected")},
  });
}

Json tolerances_json(const Tolerances& t) {
  return Json::object({
      {"analytic", Json::number(t.analytic)},
      {"boundary", Json::number(t.boundary)},
      {"finite_difference", Json::number(t.finite_difference)},
      {"involution", Json::number(t.involution)},
  });
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(path + ": empty file");
  }
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.header.push_back(cell);

  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    while (std::getline(ls, cell, ',')) {
      try {
        size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                    ": not a number: \"" + cell + "\"");
      }
    }
    if (row.size() != table.header.size()) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected " +
                                  std::to_string(table.header.size()) +
                                  " cells");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace airystef::cli
