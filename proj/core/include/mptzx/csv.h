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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mptzx {

/// Shortest round-trip decimal representation ("%.17g" trimmed).
std::string format_double(double x);

/// Comma-separated table. Lines starting with '#' are comments.
struct CsvTable {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Throws std::out_of_range if the column does not exist.
    size_t column(const std::string &name) const;
    bool has_column(const std::string &name) const;
    double number(size_t row, const std::string &name) const;
    size_t count(size_t row, const std::string &name) const;

    void write(std::ostream &out) const;
};

/// Throws ParseError naming `source` and the line number.
CsvTable read_csv(std::istream &in, const std::string &source);
CsvTable read_csv_file(const std::string &path);

}  // namespace mptzx
