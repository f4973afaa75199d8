#include "ramsey/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace ramsey {

std::string format_double(double v) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

double parse_double(std::string_view s) {
    double value = 0.0;
    const auto result = std::from_chars(s.data(), s.data() + s.size(), value);
    if (result.ec != std::errc{} || result.ptr != s.data() + s.size())
        throw std::invalid_argument("malformed number: \"" + std::string(s) + "\"");
    return value;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

const char* regime_name(RegimeClass c) {
    return c == RegimeClass::Stable ? "stable" : "unstable";
}

const char* regime_name(Regime r) {
    return r == Regime::QuasiCommitment ? "quasi_commitment" : "discretion";
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    for (auto& name : split_line(line)) table.header.push_back(std::move(name));

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != table.header.size())
            throw std::runtime_error("ragged CSV row: \"" + line + "\"");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) row.push_back(parse_double(cell));
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_irf_csv(std::ostream& out, const IrfPath& path, std::span<const double> rel_gap) {
    const bool with_gap = !rel_gap.empty();
    out << (with_gap ? "t,pi,x,u,rel_gap\n" : "t,pi,x,u\n");
    for (std::size_t t = 0; t < path.pi.size(); ++t) {
        out << t << ',' << format_double(path.pi[t]) << ',' << format_double(path.x[t]) << ','
            << format_double(path.u[t]);
        if (with_gap) out << ',' << format_double(rel_gap[t]);
        out << '\n';
    }
}

void write_welfare_csv(std::ostream& out, const WelfareTable& table) {
    out << "epsilon,kappa,weight_x,q,W,w_percent\n";
    for (const auto& row : table.rows)
        for (const auto& cell : row.entries) {
            if (!cell.ok) continue;
            out << format_double(row.epsilon) << ',' << format_double(row.kappa) << ','
                << format_double(row.weight_x) << ',' << format_double(cell.q) << ','
                << format_double(cell.W) << ',' << format_double(100.0 * cell.w) << '\n';
        }
}

void write_scan_csv(std::ostream& out, const ScanResult& scan) {
    out << "q,epsilon,lambda,f_pi,anchor_pi,regime\n";
    for (const auto& pt : scan.points)
        out << format_double(pt.q) << ',' << format_double(pt.epsilon) << ','
            << format_double(pt.lambda) << ',' << format_double(pt.f_pi) << ','
            << format_double(pt.anchor_pi) << ',' << regime_name(pt.regime_class) << '\n';
}

nlohmann::ordered_json solution_record(const PolicySolution& sol) {
    nlohmann::ordered_json record;
    record["regime"] = regime_name(sol.regime);
    record["q"] = sol.q;
    record["lambda"] = sol.lambda;
    record["f_pi"] = sol.f_pi;
    record["f_u"] = sol.f_u;
    if (sol.p_pi) record["p_pi"] = *sol.p_pi;
    if (sol.p_u) record["p_u"] = *sol.p_u;
    record["anchor_pi"] = sol.anchor_pi;
    record["anchor_x"] = sol.anchor_x;
    record["closed_loop_11"] = sol.closed_loop.m00;
    record["closed_loop_12"] = sol.closed_loop.m01;
    record["closed_loop_21"] = sol.closed_loop.m10;
    record["closed_loop_22"] = sol.closed_loop.m11;
    return record;
}

nlohmann::ordered_json irf_record(const IrfPath& path, std::span<const double> rel_gap) {
    nlohmann::ordered_json record;
    record["regime"] = regime_name(path.meta.regime);
    record["q"] = path.meta.q;
    record["anchor_scale"] = path.meta.anchor_scale;
    record["u0"] = path.meta.u0;
    record["horizon"] = path.horizon;
    record["pi"] = path.pi;
    record["x"] = path.x;
    record["u"] = path.u;
    if (!rel_gap.empty())
        record["rel_gap"] = std::vector<double>(rel_gap.begin(), rel_gap.end());
    return record;
}

nlohmann::ordered_json welfare_record(const WelfareTable& table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json jrow;
        jrow["epsilon"] = row.epsilon;
        jrow["kappa"] = row.kappa;
        jrow["weight_x"] = row.weight_x;
        jrow["W_commit"] = row.W_commit;
        nlohmann::ordered_json cells = nlohmann::ordered_json::array();
        for (const auto& cell : row.entries) {
            nlohmann::ordered_json jcell;
            jcell["q"] = cell.q;
            if (cell.ok) {
                jcell["W"] = cell.W;
                jcell["w"] = cell.w;
            } else {
                jcell["error"] = cell.error;
            }
            cells.push_back(std::move(jcell));
        }
        jrow["entries"] = std::move(cells);
        rows.push_back(std::move(jrow));
    }
    return rows;
}

nlohmann::ordered_json scan_record(const ScanResult& scan) {
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& pt : scan.points) {
        nlohmann::ordered_json jpt;
        jpt["q"] = pt.q;
        jpt["epsilon"] = pt.epsilon;
        jpt["lambda"] = pt.lambda;
        jpt["f_pi"] = pt.f_pi;
        jpt["anchor_pi"] = pt.anchor_pi;
        jpt["regime"] = regime_name(pt.regime_class);
        points.push_back(std::move(jpt));
    }
    nlohmann::ordered_json record;
    record["points"] = std::move(points);
    record["lambda_decreasing_in_q"] = scan.lambda_decreasing_in_q;
    record["lambda_decreasing_in_eps_qc"] = scan.lambda_decreasing_in_eps_qc;
    record["lambda_increasing_in_eps_disc"] = scan.lambda_increasing_in_eps_disc;
    return record;
}

}  // namespace ramsey
