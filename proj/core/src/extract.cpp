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

#include "querylab/extract.hpp"

namespace querylab {

namespace {

std::map<BasisState, MultilinearPoly> apply_layer(const std::map<BasisState, MultilinearPoly> &in,
                                                  const SparseMatrix<QSqrt2> &layer, const BasisLayout &layout) {
    std::map<BasisState, MultilinearPoly> out;
    for (const auto &[s, p] : in) {
        for (const auto &[row, u] : layer.column(layout.flat(s))) out[layout.state(row)].add(p, u);
    }
    std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
    return out;
}

std::map<BasisState, MultilinearPoly> apply_query(const std::map<BasisState, MultilinearPoly> &in, int alphabet,
                                                  const AnswerField &answer) {
    if (answer.width < 63 && static_cast<uint64_t>(alphabet) >> answer.width != 0) throw Error("field overflow");
    std::map<BasisState, MultilinearPoly> out;
    for (const auto &[s, p] : in) {
        for (int h = 1; h <= alphabet; ++h) {
            BasisState t = s;
            t.workspace ^= static_cast<uint64_t>(h) << answer.offset;
            out[t] += p.times(Indicator{s.reg, s.index, h});
        }
    }
    std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

SymbolicState extract_amplitudes(const ExactAlgorithm &alg) {
    if (alg.oracle() != OracleKind::standard) throw Error("polynomial extraction needs a standard oracle");
    int alphabet = alg.kind() == InstanceKind::collision ? alg.n() : 2 * alg.n();
    SymbolicState st;
    st.scale = alg.initial().scale();
    for (const auto &[s, a] : alg.initial().entries()) st.amplitudes[s] = MultilinearPoly(a);
    const auto &layers = alg.layers();
    for (size_t t = 0; t < layers.size(); ++t) {
        st.amplitudes = apply_layer(st.amplitudes, layers[t], alg.layout());
        if (t + 1 < layers.size()) st.amplitudes = apply_query(st.amplitudes, alphabet, alg.answer());
    }
    return st;
}

MultilinearPoly extract_polynomial(const ExactAlgorithm &alg) {
    SymbolicState st = extract_amplitudes(alg);
    MultilinearPoly out;
    for (const auto &[s, p] : st.amplitudes) {
        if (s.z == 2) out += p * p;
    }
    out *= QSqrt2(st.scale);
    return out;
}

MultilinearPoly extract_polynomial(const FloatAlgorithm &) { throw Error("exact mode required"); }

}  // namespace querylab
