#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ramsey/bifurcation.hpp"
#include "ramsey/simulation.hpp"
#include "ramsey/solution.hpp"
#include "ramsey/welfare.hpp"

namespace ramsey {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);
// Inverse of format_double; throws std::invalid_argument on malformed input.
double parse_double(std::string_view s);

// Plain rectangular CSV with a header row and numeric cells.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
CsvTable read_csv(std::istream& in);

// Header t,pi,x,u and optionally rel_gap; one row per quarter.
void write_irf_csv(std::ostream& out, const IrfPath& path,
                   std::span<const double> rel_gap = {});

// Header epsilon,kappa,weight_x,q,W,w_percent. Failed cells are skipped.
void write_welfare_csv(std::ostream& out, const WelfareTable& table);

// Header q,epsilon,lambda,f_pi,anchor_pi,regime.
void write_scan_csv(std::ostream& out, const ScanResult& scan);

// Flat solution record; costate fields are omitted under discretion.
nlohmann::ordered_json solution_record(const PolicySolution& sol);

nlohmann::ordered_json irf_record(const IrfPath& path, std::span<const double> rel_gap = {});
nlohmann::ordered_json welfare_record(const WelfareTable& table);
nlohmann::ordered_json scan_record(const ScanResult& scan);

}  // namespace ramsey
