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

// Machine-readable reports.
//
// JSON layout, keys always in this order:
//   {"command": ..., "version": ..., "constants_version": ...,
//    "config": {...}, "summary": {...}, "attachments": {...},
//    "columns": [...], "rows": [[...], ...]}
// CSV layout: one "# key=value" line per header and config entry, then one
// "# summary.key=value" line per summary entry, then the column header, then rows.
//
// Rationals are written "p/q" (always with a denominator), doubles with 17
// significant digits, booleans as true/false. JSON and CSV cells share one formatter,
// so both carry identical numeric text.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "querylab/exact.hpp"

namespace querylab {

struct Null {
    friend bool operator==(Null, Null) { return true; }
};

using ReportValue = std::variant<Null, bool, int64_t, double, std::string, Rational>;

/// Text of a value as it appears in a CSV cell (JSON strings add quotes).
std::string format_value(const ReportValue &v);
/// "%.17g"; "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double v);

class Report {
   public:
    explicit Report(std::string command);

    void config(const std::string &key, ReportValue value);
    void summary(const std::string &key, ReportValue value);
    /// Pre-serialized JSON document stored under attachments (JSON output only).
    void attach(const std::string &key, const std::string &json);
    void columns(std::vector<std::string> names);
    /// Throws Error if the row width differs from the column count.
    void row(std::vector<ReportValue> cells);

    const std::vector<std::pair<std::string, ReportValue>> &summary_entries() const { return summary_; }
    const std::vector<std::vector<ReportValue>> &rows() const { return rows_; }

    std::string to_json() const;
    std::string to_csv() const;
    /// Writes to_json() or to_csv() to path; throws Error if the file cannot be written.
    void write(const std::string &path, const std::string &format) const;

   private:
    std::string command_;
    std::vector<std::pair<std::string, ReportValue>> config_;
    std::vector<std::pair<std::string, ReportValue>> summary_;
    std::vector<std::pair<std::string, std::string>> attachments_;
    std::vector<std::string> columns_;
    std::vector<std::vector<ReportValue>> rows_;
};

/// Library version string.
const char *version();

}  // namespace querylab
