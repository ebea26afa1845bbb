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

#include "querylab/simulator.hpp"

#include <cmath>

namespace querylab {

template <class A>
StateVector<A>::StateVector(const BasisState &s) {
    entries_.emplace(s, AmplitudeTraits<A>::one());
}

template <class A>
StateVector<A> StateVector<A>::uniform(const std::vector<BasisState> &states) {
    if (states.empty()) throw Error("uniform superposition over no states");
    StateVector out;
    for (const auto &s : states) {
        if (!out.entries_.emplace(s, AmplitudeTraits<A>::one()).second) {
            throw Error("duplicate basis state in uniform superposition");
        }
    }
    out.scale_ = make_rational(1, static_cast<long>(states.size()));
    return out;
}

template <class A>
A StateVector<A>::amplitude(const BasisState &s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? A{} : it->second;
}

template <class A>
void StateVector<A>::set(const BasisState &s, const A &value) {
    if (AmplitudeTraits<A>::is_zero(value)) {
        entries_.erase(s);
    } else {
        entries_[s] = value;
    }
}

template <class A>
void StateVector<A>::add(const BasisState &s, const A &value) {
    auto [it, inserted] = entries_.try_emplace(s, value);
    if (!inserted) {
        it->second += value;
        if (AmplitudeTraits<A>::is_zero(it->second)) entries_.erase(it);
    }
}

template <class A>
A StateVector<A>::probability(const BasisState &s) const {
    A a = amplitude(s);
    if constexpr (AmplitudeTraits<A>::exact) {
        return a * a * scale_;
    } else {
        return a * a * scale_.get_d();
    }
}

template <class A>
A StateVector<A>::squared_norm() const {
    A total{};
    for (const auto &[s, a] : entries_) total += a * a;
    if constexpr (AmplitudeTraits<A>::exact) {
        return total * scale_;
    } else {
        return total * scale_.get_d();
    }
}

template <class A>
bool StateVector<A>::is_normalized(double tolerance) const {
    if constexpr (AmplitudeTraits<A>::exact) {
        return squared_norm() == QSqrt2(1);
    } else {
        return std::abs(squared_norm() - 1.0) <= tolerance;
    }
}

template <class A>
StateVector<A> apply_unitary(const StateVector<A> &state, const SparseMatrix<A> &layer, const BasisLayout &layout) {
    if (layer.dimension() != layout.dimension()) throw Error("layer dimension does not match basis layout");
    StateVector<A> out;
    out.set_scale(state.scale());
    for (const auto &[s, a] : state.entries()) {
        for (const auto &[row, u] : layer.column(layout.flat(s))) out.add(layout.state(row), u * a);
    }
    return out;
}

template <class A>
StateVector<A> apply_standard_query(const StateVector<A> &state, const Instance &inst, const AnswerField &answer) {
    StateVector<A> out;
    out.set_scale(state.scale());
    for (const auto &[s, a] : state.entries()) {
        int v = inst.value(s.reg, s.index);
        if (answer.width < 63 && static_cast<uint64_t>(v) >> answer.width != 0) throw Error("field overflow");
        BasisState t = s;
        t.workspace ^= static_cast<uint64_t>(v) << answer.offset;
        out.add(t, a);
    }
    return out;
}

template <class A>
StateVector<A> apply_erasing_query(const StateVector<A> &state, const Instance &inst) {
    if (!validate_instance(inst, 1)) throw Error("erasing oracle undefined for non-injective input");
    StateVector<A> out;
    out.set_scale(state.scale());
    for (const auto &[s, a] : state.entries()) {
        BasisState t = s;
        t.index = inst.value(s.reg, s.index);
        out.add(t, a);
    }
    return out;
}

std::string to_string(OracleKind kind) { return kind == OracleKind::standard ? "standard" : "erasing"; }

OracleKind parse_oracle_kind(const std::string &text) {
    if (text == "standard") return OracleKind::standard;
    if (text == "erasing") return OracleKind::erasing;
    throw Error("unknown oracle kind '" + text + "'");
}

template <class A>
QueryAlgorithm<A>::QueryAlgorithm(Config config) : config_(std::move(config)) {
    const auto &c = config_;
    if (c.n < 1) throw Error("algorithm size n must be positive");
    if (c.layers.empty()) throw Error("algorithm needs at least one unitary layer");
    int registers = c.kind == InstanceKind::collision ? 1 : 2;
    if (c.layout.registers != registers) throw Error("layout register count does not match instance kind");
    int alphabet = c.kind == InstanceKind::collision ? c.n : 2 * c.n;
    int expected_range = c.oracle == OracleKind::standard ? c.n : alphabet;
    if (c.layout.index_range != expected_range) {
        throw Error("layout index range must be " + std::to_string(expected_range) + " for a " + to_string(c.oracle) +
                    " oracle");
    }
    if (c.layout.workspace_bits < 0 || c.layout.workspace_bits > 20) throw Error("workspace width out of range");
    if (c.oracle == OracleKind::standard &&
        (c.answer.offset < 0 || c.answer.width < 1 || c.answer.offset + c.answer.width > c.layout.workspace_bits)) {
        throw Error("answer field does not fit inside the workspace");
    }
    for (size_t t = 0; t < c.layers.size(); ++t) {
        if (c.layers[t].dimension() != c.layout.dimension()) {
            throw Error("layer " + std::to_string(t) + " has dimension " + std::to_string(c.layers[t].dimension()) +
                        ", expected " + std::to_string(c.layout.dimension()));
        }
        if (!c.layers[t].is_orthogonal()) throw Error("layer " + std::to_string(t) + " is not orthogonal");
    }
    for (const auto &[s, a] : c.initial.entries()) {
        if (!c.layout.contains(s)) throw Error("initial state " + to_string(s) + " outside layout");
    }
    if (!c.initial.is_normalized()) throw Error("initial state is not normalized");
}

template <class A>
void QueryAlgorithm<A>::check_compatible(const Instance &inst) const {
    if (inst.kind() != config_.kind) throw Error("instance kind does not match algorithm");
    if (inst.n() != config_.n) {
        throw Error("instance has n=" + std::to_string(inst.n()) + ", algorithm expects n=" +
                    std::to_string(config_.n));
    }
}

FloatAlgorithm to_float(const ExactAlgorithm &alg) {
    FloatAlgorithm::Config c;
    c.name = alg.name();
    c.kind = alg.kind();
    c.n = alg.n();
    c.oracle = alg.oracle();
    c.layout = alg.layout();
    c.answer = alg.answer();
    StateVector<double> init;
    for (const auto &[s, a] : alg.initial().entries()) init.set(s, a.to_double());
    init.set_scale(alg.initial().scale());
    c.initial = init;
    for (const auto &layer : alg.layers()) c.layers.push_back(to_float(layer));
    return FloatAlgorithm(std::move(c));
}

template <class A>
StateVector<A> run(const QueryAlgorithm<A> &alg, const Instance &inst) {
    alg.check_compatible(inst);
    StateVector<A> state = alg.initial();
    const auto &layers = alg.layers();
    for (size_t t = 0; t < layers.size(); ++t) {
        state = apply_unitary(state, layers[t], alg.layout());
        if (t + 1 == layers.size()) break;
        state = alg.oracle() == OracleKind::standard ? apply_standard_query(state, inst, alg.answer())
                                                     : apply_erasing_query(state, inst);
    }
    return state;
}

template <class A>
A acceptance_probability(const QueryAlgorithm<A> &alg, const Instance &inst) {
    StateVector<A> final_state = run(alg, inst);
    A total{};
    for (const auto &[s, a] : final_state.entries()) {
        if (s.z == 2) total += a * a;
    }
    if constexpr (AmplitudeTraits<A>::exact) {
        return total * final_state.scale();
    } else {
        return total * final_state.scale().get_d();
    }
}

template <class A>
BasisState sample_measurement(const StateVector<A> &state, Rng &rng) {
    double norm = AmplitudeTraits<A>::to_double(state.squared_norm());
    if (std::abs(norm - 1.0) > 1e-9) throw Error("cannot sample from an unnormalized state");
    double u = uniform_unit(rng);
    double acc = 0.0;
    const BasisState *last = nullptr;
    for (const auto &[s, a] : state.entries()) {
        acc += AmplitudeTraits<A>::to_double(state.probability(s));
        last = &s;
        if (u < acc) return s;
    }
    if (last == nullptr) throw Error("cannot sample from an empty state");
    return *last;
}

#define QUERYLAB_INSTANTIATE(A)                                                                              \
    template class StateVector<A>;                                                                           \
    template StateVector<A> apply_unitary(const StateVector<A> &, const SparseMatrix<A> &, const BasisLayout &); \
    template StateVector<A> apply_standard_query(const StateVector<A> &, const Instance &, const AnswerField &); \
    template StateVector<A> apply_erasing_query(const StateVector<A> &, const Instance &);                      \
    template class QueryAlgorithm<A>;                                                                        \
    template StateVector<A> run(const QueryAlgorithm<A> &, const Instance &);                                \
    template A acceptance_probability(const QueryAlgorithm<A> &, const Instance &);                          \
    template BasisState sample_measurement(const StateVector<A> &, Rng &);

QUERYLAB_INSTANTIATE(QSqrt2)
QUERYLAB_INSTANTIATE(double)

#undef QUERYLAB_INSTANTIATE

}  // namespace querylab
