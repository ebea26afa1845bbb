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

// Real-amplitude state-vector simulation of query algorithms.
//
// Amplitudes are either exact elements of Q(sqrt 2) or doubles. A state carries a
// rational squared global scale, so the physical amplitude of basis state s is
// amplitude(s) * sqrt(scale()). This keeps uniform superpositions over any number
// of basis states exact.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "querylab/basis.hpp"
#include "querylab/exact.hpp"
#include "querylab/instance.hpp"
#include "querylab/sampling.hpp"

namespace querylab {

template <class A>
class StateVector {
   public:
    StateVector() = default;
    /// The basis state s with amplitude 1.
    explicit StateVector(const BasisState &s);
    /// Equal-weight superposition of distinct basis states.
    static StateVector uniform(const std::vector<BasisState> &states);

    A amplitude(const BasisState &s) const;
    void set(const BasisState &s, const A &value);
    void add(const BasisState &s, const A &value);
    const std::map<BasisState, A> &entries() const { return entries_; }

    const Rational &scale() const { return scale_; }
    void set_scale(Rational scale) { scale_ = std::move(scale); }

    /// scale * amplitude(s)^2.
    A probability(const BasisState &s) const;
    A squared_norm() const;
    /// True if the squared norm is exactly 1 (exact mode) or within tolerance (float).
    bool is_normalized(double tolerance = 1e-12) const;

    friend bool operator==(const StateVector &, const StateVector &) = default;

   private:
    std::map<BasisState, A> entries_;
    Rational scale_ = 1;
};

template <class A>
StateVector<A> apply_unitary(const StateVector<A> &state, const SparseMatrix<A> &layer, const BasisLayout &layout);

/// |Psi, (reg,i), z> -> |Psi xor (v << offset), (reg,i), z> with v = x_i or y_i.
/// Throws Error("field overflow") if v does not fit in the answer field.
template <class A>
StateVector<A> apply_standard_query(const StateVector<A> &state, const Instance &inst, const AnswerField &answer);

/// |(reg,i)> -> |(reg, v)> with v = x_i or y_i; the position is overwritten.
/// Throws Error("erasing oracle undefined for non-injective input") unless each
/// sequence is one-to-one.
template <class A>
StateVector<A> apply_erasing_query(const StateVector<A> &state, const Instance &inst);

enum class OracleKind { standard, erasing };
std::string to_string(OracleKind kind);
OracleKind parse_oracle_kind(const std::string &text);

/// U_0, Q, U_1, ..., Q, U_T. Construction validates every layer: dimension equal to
/// the layout, orthogonality (exact in Q(sqrt 2) mode), a normalized initial state
/// inside the layout, and an answer field inside the workspace.
template <class A>
class QueryAlgorithm {
   public:
    struct Config {
        std::string name;
        InstanceKind kind = InstanceKind::collision;
        int n = 1;
        OracleKind oracle = OracleKind::standard;
        BasisLayout layout;
        AnswerField answer;
        StateVector<A> initial;
        std::vector<SparseMatrix<A>> layers;
    };

    explicit QueryAlgorithm(Config config);

    const std::string &name() const { return config_.name; }
    InstanceKind kind() const { return config_.kind; }
    int n() const { return config_.n; }
    int queries() const { return static_cast<int>(config_.layers.size()) - 1; }
    OracleKind oracle() const { return config_.oracle; }
    const BasisLayout &layout() const { return config_.layout; }
    const AnswerField &answer() const { return config_.answer; }
    const StateVector<A> &initial() const { return config_.initial; }
    const std::vector<SparseMatrix<A>> &layers() const { return config_.layers; }
    const Config &config() const { return config_; }

    /// Throws Error unless inst has this algorithm's kind and size.
    void check_compatible(const Instance &inst) const;

   private:
    Config config_;
};

using ExactAlgorithm = QueryAlgorithm<QSqrt2>;
using FloatAlgorithm = QueryAlgorithm<double>;

FloatAlgorithm to_float(const ExactAlgorithm &alg);

/// Final state after all layers and queries.
template <class A>
StateVector<A> run(const QueryAlgorithm<A> &alg, const Instance &inst);

/// Probability of measuring z = 2 at the end.
template <class A>
A acceptance_probability(const QueryAlgorithm<A> &alg, const Instance &inst);

/// Draws a basis state with probability equal to its squared amplitude.
/// Throws Error if the norm differs from 1 by more than 1e-9.
template <class A>
BasisState sample_measurement(const StateVector<A> &state, Rng &rng);

}  // namespace querylab
