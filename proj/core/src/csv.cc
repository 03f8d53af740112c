// Copyright 2026 The mptzx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mptzx/csv.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mptzx/errors.h"

namespace mptzx {

namespace {

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    // Shortest representation that parses back to the same value.
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return buf;
    }
    return std::string(buf, end);
}

size_t CsvTable::column(const std::string &name) const {
    for (size_t k = 0; k < header.size(); k++) {
        if (header[k] == name) {
            return k;
        }
    }
    throw std::out_of_range("no CSV column named '" + name + "'");
}

bool CsvTable::has_column(const std::string &name) const {
    for (const std::string &h : header) {
        if (h == name) {
            return true;
        }
    }
    return false;
}

double CsvTable::number(size_t row, const std::string &name) const {
    const std::string &text = rows.at(row).at(column(name));
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::logic_error &) {
        throw ParseError("row " + std::to_string(row + 1) + ", column " + name, "not a number: '" + text + "'");
    }
}

size_t CsvTable::count(size_t row, const std::string &name) const {
    double v = number(row, name);
    if (v < 0 || v != static_cast<double>(static_cast<size_t>(v))) {
        throw ParseError("row " + std::to_string(row + 1) + ", column " + name, "not a non-negative integer");
    }
    return static_cast<size_t>(v);
}

void CsvTable::write(std::ostream &out) const {
    for (const std::string &c : comments) {
        out << '#' << c << '\n';
    }
    for (size_t k = 0; k < header.size(); k++) {
        out << (k ? "," : "") << header[k];
    }
    out << '\n';
    for (const auto &row : rows) {
        for (size_t k = 0; k < row.size(); k++) {
            out << (k ? "," : "") << row[k];
        }
        out << '\n';
    }
}

CsvTable read_csv(std::istream &in, const std::string &source) {
    CsvTable table;
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            table.comments.push_back(line.substr(1));
            continue;
        }
        std::vector<std::string> fields = split(line);
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw ParseError(source + ":" + std::to_string(line_no),
                             "expected " + std::to_string(table.header.size()) + " fields, got " +
                                 std::to_string(fields.size()));
        }
        table.rows.push_back(std::move(fields));
    }
    if (!have_header) {
        throw ParseError(source, "missing header line");
    }
    return table;
}

CsvTable read_csv_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_csv(in, path);
}

}  // namespace mptzx
