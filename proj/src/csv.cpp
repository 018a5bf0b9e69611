// Copyright 2026 The pqcrad Authors
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

#include "pqcrad/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pqcrad::csv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_comment(std::string line) { comments_.push_back(std::move(line)); }

void Table::add_config(const nlohmann::json &config) { comments_.push_back("config: " + config.dump()); }

void Table::add_row_strings(std::vector<std::string> row) {
    if (row.size() != header_.size()) {
        throw std::logic_error("csv row has " + std::to_string(row.size()) + " fields, header has " +
                               std::to_string(header_.size()));
    }
    rows_.push_back(std::move(row));
}

std::string Table::str() const {
    std::string out;
    for (const auto &c : comments_) {
        out += "# ";
        out += c;
        out += '\n';
    }
    const auto append_line = [&out](const std::vector<std::string> &fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += fields[i];
        }
        out += '\n';
    };
    append_line(header_);
    for (const auto &r : rows_) {
        append_line(r);
    }
    return out;
}

void Table::write(const std::filesystem::path &path) const {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f << str();
    if (!f) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

namespace {

bool parse_number(const std::string &field, double &out) {
    const char *begin = field.c_str();
    while (*begin == ' ' || *begin == '\t') {
        ++begin;
    }
    char *end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin) {
        return false;
    }
    while (*end == ' ' || *end == '\t' || *end == '\r') {
        ++end;
    }
    return *end == '\0';
}

} // namespace

std::pair<std::vector<double>, std::vector<double>> read_two_columns(const std::filesystem::path &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<double> xs;
    std::vector<double> ys;
    std::string line;
    std::size_t line_no = 0;
    bool seen_data = false;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::stringstream ss(line);
        std::string a;
        std::string b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',')) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": expected at least two comma-separated columns");
        }
        double x = 0.0;
        double y = 0.0;
        const bool ok = parse_number(a, x) && parse_number(b, y);
        if (!ok) {
            if (!seen_data) {
                seen_data = true; // header row
                continue;
            }
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": non-numeric value");
        }
        seen_data = true;
        xs.push_back(x);
        ys.push_back(y);
    }
    return {std::move(xs), std::move(ys)};
}

} // namespace pqcrad::csv
