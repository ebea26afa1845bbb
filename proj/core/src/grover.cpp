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

#include "querylab/grover.hpp"

#include <cmath>

namespace querylab {

int grover_padding(int m) {
    if (m < 1) throw Error("search space must be non-empty");
    int p = 1;
    while (p < m) p *= 2;
    return p;
}

double grover_closed_form(int marked, int padded, int iterations) {
    if (marked <= 0) return 0.0;
    double theta = std::asin(std::sqrt(static_cast<double>(marked) / padded));
    double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

template <class A>
GroverResult<A> grover_search(int m, const std::function<bool(int)> &marked, int iterations) {
    if (iterations < 0) throw Error("negative iteration count");
    GroverResult<A> out;
    out.items = m;
    out.padded = grover_padding(m);
    out.iterations = iterations;
    const int M = out.padded;
    BasisLayout layout{0, 1, M};
    auto state_of = [](int i) { return BasisState{0, Register::X, i, 1}; };

    std::vector<bool> is_marked(M + 1, false);
    for (int i = 1; i <= m; ++i) {
        is_marked[i] = marked(i);
        if (is_marked[i]) ++out.marked;
    }
    SparseMatrix<A> oracle = SparseMatrix<A>::identity(layout.dimension());
    for (int i = 1; i <= M; ++i) {
        if (is_marked[i]) {
            size_t f = layout.flat(state_of(i));
            oracle.set(f, f, -AmplitudeTraits<A>::one());
        }
    }
    // Inversion about the mean on the z = 1 block; the z = 2 block is left alone.
    SparseMatrix<A> diffusion = SparseMatrix<A>::identity(layout.dimension());
    A two_over_m;
    if constexpr (AmplitudeTraits<A>::exact) {
        two_over_m = QSqrt2(make_rational(2, M));
    } else {
        two_over_m = 2.0 / M;
    }
    for (int r = 1; r <= M; ++r) {
        for (int c = 1; c <= M; ++c) {
            A v = two_over_m;
            if (r == c) v -= AmplitudeTraits<A>::one();
            diffusion.set(layout.flat(state_of(r)), layout.flat(state_of(c)), v);
        }
    }
    std::vector<BasisState> all;
    for (int i = 1; i <= M; ++i) all.push_back(state_of(i));
    StateVector<A> psi = StateVector<A>::uniform(all);
    for (int t = 0; t < iterations; ++t) {
        psi = apply_unitary(psi, oracle, layout);
        psi = apply_unitary(psi, diffusion, layout);
    }
    out.probabilities.resize(M);
    for (int i = 1; i <= M; ++i) {
        out.probabilities[i - 1] = psi.probability(state_of(i));
        if (is_marked[i]) out.marked_probability += out.probabilities[i - 1];
    }
    return out;
}

template GroverResult<QSqrt2> grover_search(int, const std::function<bool(int)> &, int);
template GroverResult<double> grover_search(int, const std::function<bool(int)> &, int);

}  // namespace querylab
