// Copyright 2026 The Querylab Authors
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

#include "querylab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "querylab/constants.hpp"

namespace querylab {

const char *version() { return "0.1.0"; }

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_value(const ReportValue &v) {
    struct Visitor {
        std::string operator()(Null) const { return ""; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(const std::string &s) const { return s; }
        std::string operator()(const Rational &r) const { return format_rational(r); }
    };
    return std::visit(Visitor{}, v);
}

namespace {

std::string json_string(const std::string &s) { return nlohmann::json(s).dump(); }

std::string json_value(const ReportValue &v) {
    if (std::holds_alternative<Null>(v)) return "null";
    if (std::holds_alternative<bool>(v) || std::holds_alternative<int64_t>(v)) return format_value(v);
    if (const double *d = std::get_if<double>(&v)) {
        return std::isfinite(*d) ? format_double(*d) : json_string(format_double(*d));
    }
    return json_string(format_value(v));
}

std::string csv_cell(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string json_object(const std::vector<std::pair<std::string, ReportValue>> &entries, const std::string &indent) {
    if (entries.empty()) return "{}";
    std::string out = "{\n";
    for (size_t i = 0; i < entries.size(); ++i) {
        out += indent + "  " + json_string(entries[i].first) + ": " + json_value(entries[i].second);
        out += i + 1 < entries.size() ? ",\n" : "\n";
    }
    return out + indent + "}";
}

}  // namespace

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::config(const std::string &key, ReportValue value) { config_.emplace_back(key, std::move(value)); }

void Report::summary(const std::string &key, ReportValue value) { summary_.emplace_back(key, std::move(value)); }

void Report::attach(const std::string &key, const std::string &json) {
    // Normalize to compact form so the output does not depend on the producer's layout.
    attachments_.emplace_back(key, nlohmann::ordered_json::parse(json).dump());
}

void Report::columns(std::vector<std::string> names) { columns_ = std::move(names); }

void Report::row(std::vector<ReportValue> cells) {
    if (cells.size() != columns_.size()) {
        throw Error("report row has " + std::to_string(cells.size()) + " cells, expected " +
                    std::to_string(columns_.size()));
    }
    rows_.push_back(std::move(cells));
}

std::string Report::to_json() const {
    std::string out = "{\n";
    out += "  \"command\": " + json_string(command_) + ",\n";
    out += "  \"version\": " + json_string(version()) + ",\n";
    out += "  \"constants_version\": " + json_string(constants::kConstantsVersion) + ",\n";
    out += "  \"config\": " + json_object(config_, "  ") + ",\n";
    out += "  \"summary\": " + json_object(summary_, "  ") + ",\n";
    out += "  \"attachments\": {";
    for (size_t i = 0; i < attachments_.size(); ++i) {
        out += i == 0 ? "\n" : ",\n";
        out += "    " + json_string(attachments_[i].first) + ": " + attachments_[i].second;
    }
    out += attachments_.empty() ? "},\n" : "\n  },\n";
    out += "  \"columns\": [";
    for (size_t i = 0; i < columns_.size(); ++i) out += (i ? ", " : "") + json_string(columns_[i]);
    out += "],\n  \"rows\": [";
    for (size_t r = 0; r < rows_.size(); ++r) {
        out += r == 0 ? "\n    [" : ",\n    [";
        for (size_t c = 0; c < rows_[r].size(); ++c) out += (c ? ", " : "") + json_value(rows_[r][c]);
        out += "]";
    }
    out += rows_.empty() ? "]\n" : "\n  ]\n";
    return out + "}\n";
}

std::string Report::to_csv() const {
    std::string out;
    out += "# command=" + command_ + "\n";
    out += "# version=" + std::string(version()) + "\n";
    out += "# constants_version=" + std::string(constants::kConstantsVersion) + "\n";
    for (const auto &[k, v] : config_) out += "# " + k + "=" + format_value(v) + "\n";
    for (const auto &[k, v] : summary_) out += "# summary." + k + "=" + format_value(v) + "\n";
    for (size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + csv_cell(columns_[i]);
    out += "\n";
    for (const auto &row : rows_) {
        for (size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_cell(format_value(row[c]));
        out += "\n";
    }
    return out;
}

void Report::write(const std::string &path, const std::string &format) const {
    std::string text;
    if (format == "json") {
        text = to_json();
    } else if (format == "csv") {
        text = to_csv();
    } else {
        throw Error("unknown report format '" + format + "'");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write report to '" + path + "'");
    out << text;
    if (!out) throw Error("cannot write report to '" + path + "'");
}

}  // namespace querylab
