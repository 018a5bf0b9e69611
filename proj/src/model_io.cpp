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

#include "pqcrad/model_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pqcrad {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

CircuitModel parse_model(std::string_view text) {
    std::optional<std::size_t> n_qubits;
    std::optional<PauliString> observable;
    Encoding encoding = Encoding::kRyProduct;
    std::vector<PauliString> generators;

    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("model line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "n_qubits") {
            n_qubits = std::stoul(std::string(value));
        } else if (key == "observable") {
            observable = PauliString::parse(value);
        } else if (key == "encoding") {
            encoding = parse_encoding(value);
        } else if (key == "generators") {
            std::string_view rest = value;
            while (!rest.empty()) {
                const std::size_t comma = rest.find(',');
                const std::string_view item = trim(rest.substr(0, comma));
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
                if (!item.empty()) {
                    generators.push_back(PauliString::parse(item));
                }
            }
        } else {
            throw std::invalid_argument("model line " + std::to_string(line_no) + ": unknown key \"" +
                                        std::string(key) + "\"");
        }
    }
    if (!n_qubits) {
        throw std::invalid_argument("model: missing n_qubits");
    }
    if (!observable) {
        throw std::invalid_argument("model: missing observable");
    }
    return CircuitModel(*n_qubits, std::move(generators), *observable, encoding);
}

std::string format_model(const CircuitModel &model) {
    std::ostringstream out;
    out << "n_qubits = " << model.n_qubits() << '\n';
    out << "observable = " << model.observable().to_string() << '\n';
    out << "encoding = " << to_string(model.encoding()) << '\n';
    out << "generators = ";
    for (std::size_t j = 0; j < model.generators().size(); ++j) {
        out << (j == 0 ? "" : ", ") << model.generators()[j].to_string();
    }
    out << '\n';
    return out.str();
}

CircuitModel load_model(const std::filesystem::path &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open model file " + path.string());
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_model(buf.str());
}

void save_model(const CircuitModel &model, const std::filesystem::path &path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f << format_model(model);
}

} // namespace pqcrad
