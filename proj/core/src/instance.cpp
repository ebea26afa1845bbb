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

#include "querylab/instance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "querylab/exact.hpp"

namespace querylab {

std::string to_string(InstanceKind kind) { return kind == InstanceKind::collision ? "collision" : "setcomp"; }

std::string to_string(Register reg) { return reg == Register::X ? "X" : "Y"; }

InstanceKind parse_instance_kind(const std::string &text) {
    if (text == "collision") return InstanceKind::collision;
    if (text == "setcomp") return InstanceKind::setcomp;
    throw Error("unknown instance kind '" + text + "'");
}

namespace {

void check_range(const std::vector<int> &values, int hi, const char *name) {
    for (int v : values) {
        if (v < 1 || v > hi) {
            throw Error(std::string("value ") + std::to_string(v) + " in " + name + " outside {1.." +
                        std::to_string(hi) + "}");
        }
    }
}

}  // namespace

Instance Instance::collision(std::vector<int> x) {
    if (x.empty()) throw Error("instance must have n >= 1");
    check_range(x, static_cast<int>(x.size()), "X");
    Instance inst;
    inst.kind_ = InstanceKind::collision;
    inst.x_ = std::move(x);
    return inst;
}

Instance Instance::setcomp(std::vector<int> x, std::vector<int> y) {
    if (!is_k_to_one(x, 1) || !is_k_to_one(y, 1)) {
        throw Error("set-comparison sequences must be one-to-one");
    }
    return setcomp_unchecked(std::move(x), std::move(y));
}

Instance Instance::setcomp_unchecked(std::vector<int> x, std::vector<int> y) {
    if (x.empty()) throw Error("instance must have n >= 1");
    if (x.size() != y.size()) throw Error("set-comparison sequences must have equal length");
    int hi = 2 * static_cast<int>(x.size());
    check_range(x, hi, "X");
    check_range(y, hi, "Y");
    Instance inst;
    inst.kind_ = InstanceKind::setcomp;
    inst.x_ = std::move(x);
    inst.y_ = std::move(y);
    return inst;
}

int Instance::value(Register reg, int position) const {
    const auto &seq = reg == Register::X ? x_ : y_;
    if (reg == Register::Y && kind_ != InstanceKind::setcomp) {
        throw Error("collision instance has no Y register");
    }
    if (position < 1 || position > static_cast<int>(seq.size())) {
        throw Error("position " + std::to_string(position) + " out of range");
    }
    return seq[position - 1];
}

bool is_k_to_one(std::span<const int> values, int k) {
    std::map<int, int> counts;
    for (int v : values) ++counts[v];
    return std::all_of(counts.begin(), counts.end(), [k](const auto &kv) { return kv.second == k; });
}

bool validate_instance(const Instance &inst, int k) {
    if (!is_k_to_one(inst.x(), k)) return false;
    return inst.kind() == InstanceKind::collision || is_k_to_one(inst.y(), k);
}

int set_union_size(const Instance &inst) {
    if (inst.kind() != InstanceKind::setcomp) throw Error("set_union_size requires a set-comparison instance");
    std::set<int> u(inst.x().begin(), inst.x().end());
    u.insert(inst.y().begin(), inst.y().end());
    return static_cast<int>(u.size());
}

Instance instance_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(std::string("invalid instance JSON: ") + e.what());
    }
    try {
        auto kind = parse_instance_kind(j.at("kind").get<std::string>());
        auto x = j.at("x").get<std::vector<int>>();
        if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(x.size())) {
            throw Error("instance field n does not match length of x");
        }
        Instance inst = kind == InstanceKind::collision
                            ? Instance::collision(std::move(x))
                            : Instance::setcomp(std::move(x), j.at("y").get<std::vector<int>>());
        if (j.contains("latent")) {
            const auto &l = j.at("latent");
            LatentDraw latent;
            auto get = [&](const char *key, std::vector<int> &out) {
                if (l.contains(key)) out = l.at(key).get<std::vector<int>>();
            };
            get("S", latent.support);
            get("S_X", latent.x_support);
            get("S_Y", latent.y_support);
            get("X_full", latent.x_full);
            get("Y_full", latent.y_full);
            inst.set_latent(std::move(latent));
        }
        return inst;
    } catch (const nlohmann::json::exception &e) {
        throw Error(std::string("invalid instance file: ") + e.what());
    }
}

std::string instance_to_json(const Instance &inst) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(inst.kind());
    j["n"] = inst.n();
    j["x"] = inst.x();
    if (inst.kind() == InstanceKind::setcomp) j["y"] = inst.y();
    if (inst.latent()) {
        const auto &l = *inst.latent();
        nlohmann::ordered_json lj;
        lj["S"] = l.support;
        if (inst.kind() == InstanceKind::setcomp) {
            lj["S_X"] = l.x_support;
            lj["S_Y"] = l.y_support;
        }
        lj["X_full"] = l.x_full;
        if (inst.kind() == InstanceKind::setcomp) lj["Y_full"] = l.y_full;
        j["latent"] = lj;
    }
    return j.dump(2) + "\n";
}

}  // namespace querylab
