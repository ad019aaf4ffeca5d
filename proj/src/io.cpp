#include "zonal/io.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zonal {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json partition_to_json(const Partition& p) { return ordered_json(p.parts()); }

}  // namespace

std::string table_to_json(CoeffTable& table, int indent) {
    ordered_json out;
    out["n"] = table.weight();
    ordered_json parts = ordered_json::array();
    for (const Partition& p : table.partitions()) parts.push_back(partition_to_json(p));
    out["partitions"] = parts;
    ordered_json rows = ordered_json::array();
    const int count = static_cast<int>(table.size());
    for (int i = 0; i < count; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < count; ++j) row.push_back(to_string(table.at(i, j)));
        rows.push_back(row);
    }
    out["coefficients"] = rows;
    return out.dump(indent);
}

std::string table_to_text(CoeffTable& table) {
    const int count = static_cast<int>(table.size());
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(count) + 1);
    cells[0].push_back("kappa\\lambda");
    for (const Partition& p : table.partitions()) cells[0].push_back(p.to_string());
    for (int i = 0; i < count; ++i) {
        auto& row = cells[static_cast<std::size_t>(i) + 1];
        row.push_back(table.partitions()[static_cast<std::size_t>(i)].to_string());
        for (int j = 0; j < count; ++j) row.push_back(to_string(table.at(i, j)));
    }
    std::vector<std::size_t> widths(static_cast<std::size_t>(count) + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c] << std::string(widths[c] - row[c].size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

std::string mpoly_to_json(const MPoly& f, int indent) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
        ordered_json term;
        term["exponents"] = e;
        term["coefficient"] = to_string(c);
        terms.push_back(term);
    }
    ordered_json out;
    out["nvars"] = f.nvars();
    out["terms"] = terms;
    return out.dump(indent);
}

std::string symm_to_text(const SymM& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : f.coeffs()) {
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        first = false;
        const Rational abs_c = c < 0 ? Rational(-c) : c;
        if (abs_c != 1) out += to_string(abs_c) + "*";
        std::string idx = p.to_string();
        idx.front() = '[';
        idx.back() = ']';
        out += "M" + idx;
    }
    return out;
}

std::string symm_to_json(const SymM& f, int indent) {
    ordered_json terms = ordered_json::array();
    for (const auto& [p, c] : f.coeffs()) {
        ordered_json term;
        term["partition"] = p.parts();
        term["coefficient"] = to_string(c);
        terms.push_back(term);
    }
    return terms.dump(indent);
}

std::string report_to_json(const VerifyReport& report, int indent) {
    ordered_json out;
    out["suite"] = report.suite;
    ordered_json range;
    for (const auto& [k, v] : report.range) range[k] = v;
    out["range"] = range;
    out["checked"] = report.checked;
    out["failures"] = report.failures;
    out["pass"] = report.pass();
    return out.dump(indent);
}

std::string mc_report_to_json(const McReport& report, int indent) {
    ordered_json out;
    out["n"] = report.n;
    out["m"] = report.m;
    out["nu"] = report.nu;
    out["samples"] = report.samples;
    out["seed"] = report.seed;
    ordered_json yy = ordered_json::array();
    for (const Rational& v : report.y) yy.push_back(to_string(v));
    out["y"] = yy;
    ordered_json basis = ordered_json::array();
    for (const Partition& p : report.basis) basis.push_back(partition_to_json(p));
    out["basis"] = basis;
    out["targets"] = report.targets;
    out["means"] = report.means;
    out["stderrs"] = report.stderrs;
    out["zscores"] = report.zscores;
    out["pass"] = report.pass;
    return out.dump(indent);
}

void write_zero_bitmap(int n, std::ostream& out) {
    const std::vector<Partition> parts = partitions_of(n);
    const int count = static_cast<int>(parts.size());
    out << "P1\n";
    out << "# zero pattern of the zonal coefficient matrix, n=" << n << " (zonal " << kVersion
        << ")\n";
    out << count << " " << count << "\n";
    for (int i = 0; i < count; ++i) {
        std::string line;
        for (int j = 0; j < count; ++j) {
            bool black;
            if (j < i) {
                black = true;  // lambda > kappa: strictly lower triangle
            } else {
                black = is_zero_coefficient(parts[static_cast<std::size_t>(i)],
                                            parts[static_cast<std::size_t>(j)]);
            }
            if (!line.empty()) line += ' ';
            line += black ? '1' : '0';
            if (line.size() >= 68) {  // P1 lines should stay within 70 chars
                out << line << "\n";
                line.clear();
            }
        }
        if (!line.empty()) out << line << "\n";
    }
}

Partition parse_partition_arg(const std::string& text, bool* reordered) {
    std::vector<int> parts;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition: " + text);
        }
        if (used != token.size() || value < 1)
            throw std::invalid_argument("malformed partition: " + text);
        parts.push_back(value);
    }
    if (parts.empty()) throw std::invalid_argument("malformed partition: " + text);
    bool sorted = true;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i]) sorted = false;
    if (reordered) *reordered = !sorted;
    return Partition::from_unsorted(std::move(parts));
}

}  // namespace zonal
