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

#pragma once

#include <filesystem>
#include <string_view>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pqcrad::csv {

/// Shortest text that round-trips: "%.17g".
[[nodiscard]] std::string format_double(double v);

/// A comma-separated table with '#' comment lines above the header.
///
/// Comment lines carry the resolved configuration (one "# config: {json}"
/// line) so every file states how it was produced. LF line endings, '.'
/// decimal separator, no quoting (fields never contain commas).
class Table {
  public:
    explicit Table(std::vector<std::string> header);

    void add_comment(std::string line);
    void add_config(const nlohmann::json &config);

    template <typename... Fields> void add_row(Fields &&...fields) {
        std::vector<std::string> row;
        row.reserve(sizeof...(fields));
        (row.push_back(to_field(std::forward<Fields>(fields))), ...);
        add_row_strings(std::move(row));
    }
    void add_row_strings(std::vector<std::string> row);

    [[nodiscard]] std::string str() const;
    void write(const std::filesystem::path &path) const;

    [[nodiscard]] const std::vector<std::vector<std::string>> &rows() const noexcept { return rows_; }

  private:
    static std::string to_field(double v) { return format_double(v); }
    static std::string to_field(float v) { return format_double(v); }
    static std::string to_field(const std::string &v) { return v; }
    static std::string to_field(std::string_view v) { return std::string(v); }
    static std::string to_field(const char *v) { return v; }
    template <typename T>
    requires std::is_integral_v<std::remove_cvref_t<T>>
    static std::string to_field(T v) { return std::to_string(v); }

    std::vector<std::string> comments_;
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Reads the first two numeric columns of a CSV file, skipping '#' comments,
/// blank lines and a non-numeric header row.
[[nodiscard]] std::pair<std::vector<double>, std::vector<double>>
read_two_columns(const std::filesystem::path &path);

} // namespace pqcrad::csv
