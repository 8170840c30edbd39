#include "relia/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "relia/errors.hpp"

namespace relia::data {

std::string format_double(double v) {
    char buf[64];
    auto* end = std::to_chars(buf, buf + sizeof(buf), v).ptr;
    return {buf, end};
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& col) {
    const char* first = cell.data();
    const char* last = first + cell.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw DataError("csv: non-numeric value '" + cell + "' at data row " +
                        std::to_string(row) + ", column '" + col + "'");
    return v;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::string& group_column) {
    std::ifstream in(path);
    if (!in) throw DataError("csv: cannot open file '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw DataError("csv: file '" + path + "' is empty");
    auto header = split_line(line);
    if (header.empty()) throw DataError("csv: header row is empty in '" + path + "'");

    std::set<std::string> seen;
    for (const auto& name : header) {
        if (!seen.insert(name).second)
            throw DataError("csv: duplicate column name '" + name + "'");
    }

    std::size_t label_idx = header.size(), group_idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == label_column) label_idx = i;
        if (header[i] == group_column) group_idx = i;
    }
    if (label_idx == header.size())
        throw DataError("csv: label column '" + label_column + "' not found");
    if (group_idx == header.size())
        throw DataError("csv: group column '" + group_column + "' not found");

    Dataset data;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (i != label_idx && i != group_idx) data.feature_names.push_back(header[i]);
    data.n_features = data.feature_names.size();

    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != header.size())
            throw DataError("csv: data row " + std::to_string(row) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(header.size()));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i == label_idx) {
                if (cells[i] == "0")
                    data.labels.push_back(0);
                else if (cells[i] == "1")
                    data.labels.push_back(1);
                else
                    throw DataError("csv: label value '" + cells[i] + "' outside {0,1} at data row " +
                                    std::to_string(row));
            } else if (i == group_idx) {
                if (cells[i].empty())
                    throw DataError("csv: empty group key at data row " + std::to_string(row));
                data.group_keys.push_back(cells[i]);
            } else {
                if (cells[i].empty())
                    throw DataError("csv: missing value at data row " + std::to_string(row) +
                                    ", column '" + header[i] + "'");
                data.features.push_back(parse_cell(cells[i], row, header[i]));
            }
        }
        ++row;
    }
    data.n_rows = row;
    if (data.n_rows == 0) throw DataError("csv: empty dataset in '" + path + "' (header only)");
    data.validate();
    return data;
}

void write_csv(const Dataset& data, const std::string& path, const std::string& label_column,
               const std::string& group_column) {
    std::ofstream out(path);
    if (!out) throw DataError("csv: cannot write file '" + path + "'");
    for (const auto& name : data.feature_names) out << name << ',';
    out << label_column << ',' << group_column << '\n';
    for (std::size_t i = 0; i < data.n_rows; ++i) {
        for (std::size_t j = 0; j < data.n_features; ++j)
            out << format_double(data.feature(i, j)) << ',';
        out << data.labels[i] << ',' << data.group_keys[i] << '\n';
    }
}

}  // namespace relia::data
