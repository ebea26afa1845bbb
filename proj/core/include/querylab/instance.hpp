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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace querylab {

enum class InstanceKind : uint8_t { collision, setcomp };

/// Which input sequence a query or indicator refers to. Collision inputs only have X.
enum class Register : uint8_t { X = 0, Y = 1 };

std::string to_string(InstanceKind kind);
std::string to_string(Register reg);
InstanceKind parse_instance_kind(const std::string &text);

/// Hidden structure behind a sampled or enumerated input. For collision inputs only
/// `support` and `x_full` are set; set-comparison draws fill every field.
struct LatentDraw {
    std::vector<int> support;    // S, sorted
    std::vector<int> x_support;  // S_X, sorted
    std::vector<int> y_support;  // S_Y, sorted
    std::vector<int> x_full;     // X-hat, before truncation
    std::vector<int> y_full;     // Y-hat, before truncation
};

/// A concrete oracle input. Values are 1-based: collision values lie in {1..n},
/// set-comparison values in {1..2n}.
class Instance {
   public:
    /// Throws Error if a value lies outside {1..n}.
    static Instance collision(std::vector<int> x);
    /// Throws Error if a value lies outside {1..2n}, the lengths differ, or either
    /// sequence repeats a value.
    static Instance setcomp(std::vector<int> x, std::vector<int> y);
    /// Range and length checks only. Used for draws from kappa(g)-to-1 families with
    /// g >= 3, which are many-to-one by construction.
    static Instance setcomp_unchecked(std::vector<int> x, std::vector<int> y);

    InstanceKind kind() const { return kind_; }
    int n() const { return static_cast<int>(x_.size()); }
    /// Largest admissible value: n for collision, 2n for set comparison.
    int alphabet() const { return kind_ == InstanceKind::collision ? n() : 2 * n(); }
    int registers() const { return kind_ == InstanceKind::collision ? 1 : 2; }

    const std::vector<int> &x() const { return x_; }
    const std::vector<int> &y() const { return y_; }
    /// 1-based position lookup; throws Error when out of range.
    int value(Register reg, int position) const;

    const std::optional<LatentDraw> &latent() const { return latent_; }
    void set_latent(LatentDraw latent) { latent_ = std::move(latent); }

    friend bool operator==(const Instance &a, const Instance &b) {
        return a.kind_ == b.kind_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

   private:
    InstanceKind kind_ = InstanceKind::collision;
    std::vector<int> x_;
    std::vector<int> y_;
    std::optional<LatentDraw> latent_;
};

/// True iff every value that occurs in `values` occurs exactly k times.
bool is_k_to_one(std::span<const int> values, int k);
bool validate_instance(const Instance &inst, int k);

/// |{x_1..x_n} ∪ {y_1..y_n}|. Throws Error for collision instances.
int set_union_size(const Instance &inst);

/// Instance file: {"kind", "n", "x", ["y"], ["latent"]}.
Instance instance_from_json(const std::string &text);
std::string instance_to_json(const Instance &inst);

}  // namespace querylab
