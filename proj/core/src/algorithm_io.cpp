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

#include "querylab/algorithm_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "querylab/circuits.hpp"

namespace querylab {

using nlohmann::ordered_json;

namespace {

Register parse_register(const std::string &text) {
    if (text == "X") return Register::X;
    if (text == "Y") return Register::Y;
    throw Error("unknown register '" + text + "'");
}

SparseMatrix<QSqrt2> parse_layer(const ordered_json &j, size_t dim) {
    SparseMatrix<QSqrt2> m(dim);
    if (j.is_object()) {
        if (j.value("dimension", dim) != dim) throw Error("layer dimension does not match basis layout");
        for (const auto &e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3) throw Error("sparse entry must be [row, col, value]");
            size_t r = e[0].get<size_t>(), c = e[1].get<size_t>();
            m.set(r, c, QSqrt2::parse(e[2].get<std::string>()));
        }
        return m;
    }
    if (!j.is_array() || j.size() != dim) throw Error("dense layer must have " + std::to_string(dim) + " rows");
    for (size_t r = 0; r < dim; ++r) {
        if (!j[r].is_array() || j[r].size() != dim) throw Error("dense layer row has wrong length");
        for (size_t c = 0; c < dim; ++c) m.set(r, c, QSqrt2::parse(j[r][c].get<std::string>()));
    }
    return m;
}

}  // namespace

ExactAlgorithm algorithm_from_json(const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::exception &e) {
        throw Error(std::string("malformed algorithm file: ") + e.what());
    }
    try {
        ExactAlgorithm::Config c;
        c.name = j.value("name", std::string("unnamed"));
        c.kind = parse_instance_kind(j.value("kind", std::string("collision")));
        c.n = j.at("n").get<int>();
        c.oracle = parse_oracle_kind(j.value("oracle_kind", std::string("standard")));
        int registers = c.kind == InstanceKind::collision ? 1 : 2;
        int alphabet = registers * c.n;
        int range = c.oracle == OracleKind::standard ? c.n : alphabet;
        c.layout = BasisLayout{j.at("workspace_bits").get<int>(), registers, range};
        if (c.layout.workspace_bits < 0 || c.layout.workspace_bits > 20) throw Error("workspace width out of range");
        c.answer = AnswerField{j.value("answer_offset", 0), j.value("answer_width", bits_for(alphabet))};

        const auto &init = j.at("initial");
        StateVector<QSqrt2> initial;
        for (const auto &a : init.at("amplitudes")) {
            BasisState s{a.value("workspace", uint64_t{0}), parse_register(a.value("register", std::string("X"))),
                         a.at("index").get<int>(), a.value("z", 1)};
            if (!c.layout.contains(s)) throw Error("initial state " + to_string(s) + " outside layout");
            initial.add(s, QSqrt2::parse(a.at("amplitude").get<std::string>()));
        }
        initial.set_scale(parse_rational(init.value("scale", std::string("1/1"))));
        c.initial = std::move(initial);

        for (const auto &layer : j.at("layers")) c.layers.push_back(parse_layer(layer, c.layout.dimension()));
        if (j.contains("T") && j["T"].get<int>() != static_cast<int>(c.layers.size()) - 1) {
            throw Error("T = " + std::to_string(j["T"].get<int>()) + " but file has " +
                        std::to_string(c.layers.size()) + " layers");
        }
        return ExactAlgorithm(std::move(c));
    } catch (const ordered_json::exception &e) {
        throw Error(std::string("malformed algorithm file: ") + e.what());
    }
}

std::string algorithm_to_json(const ExactAlgorithm &alg) {
    ordered_json j;
    j["name"] = alg.name();
    j["kind"] = to_string(alg.kind());
    j["n"] = alg.n();
    j["T"] = alg.queries();
    j["oracle_kind"] = to_string(alg.oracle());
    j["workspace_bits"] = alg.layout().workspace_bits;
    j["answer_offset"] = alg.answer().offset;
    j["answer_width"] = alg.answer().width;
    ordered_json amps = ordered_json::array();
    for (const auto &[s, a] : alg.initial().entries()) {
        ordered_json e;
        e["workspace"] = s.workspace;
        e["register"] = to_string(s.reg);
        e["index"] = s.index;
        e["z"] = s.z;
        e["amplitude"] = a.str();
        amps.push_back(e);
    }
    j["initial"] = {{"scale", format_rational(alg.initial().scale())}, {"amplitudes", amps}};
    ordered_json layers = ordered_json::array();
    for (const auto &m : alg.layers()) {
        ordered_json entries = ordered_json::array();
        // Row-major order so dumps read like the matrix.
        std::vector<std::tuple<uint32_t, size_t, std::string>> all;
        for (size_t c = 0; c < m.dimension(); ++c) {
            for (const auto &[r, v] : m.column(c)) all.emplace_back(r, c, v.str());
        }
        std::sort(all.begin(), all.end());
        for (auto &[r, c, v] : all) entries.push_back(ordered_json::array({r, c, v}));
        layers.push_back({{"dimension", m.dimension()}, {"entries", entries}});
    }
    j["layers"] = layers;
    return j.dump(2) + "\n";
}

ExactAlgorithm load_algorithm(const std::string &spec, int n) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) return builtin_algorithm(spec.substr(prefix.size()), n);
    std::ifstream in(spec);
    if (!in) throw Error("cannot open algorithm file '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    ExactAlgorithm alg = algorithm_from_json(buf.str());
    if (n > 0 && alg.n() != n) {
        throw Error("algorithm file has n=" + std::to_string(alg.n()) + ", requested n=" + std::to_string(n));
    }
    return alg;
}

}  // namespace querylab
