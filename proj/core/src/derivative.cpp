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

#include "querylab/derivative.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace querylab {

Region collision_region(int n, int T, int G, const LatticeOptions &opts) {
    if (G < 2) throw Error("region needs G >= 2");
    Region r;
    r.arity = 2;
    r.lo = {Rational(1), Rational(n)};
    r.hi = {Rational(G), collision_n_upper(n, T, opts)};
    double w = static_cast<double>(n) / (static_cast<double>(opts.collision_width_denominator) * T * (G - 1));
    r.weights = {1.0, w};
    return r;
}

Region setcomp_region(int n, int T, int G, const LatticeOptions &opts) {
    if (G < 2) throw Error("region needs G >= 2");
    Region r;
    r.arity = 3;
    Rational upper = setcomp_n_upper(n, T, opts);
    r.lo = {Rational(1), Rational(n), Rational(n)};
    r.hi = {Rational(G), upper, upper};
    double w = static_cast<double>(n) / (static_cast<double>(opts.setcomp_width_denominator) * T * (G - 1));
    r.weights = {1.0, w, w};
    return r;
}

namespace {

// Flattened double-precision polynomial in local coordinates.
struct FlatPoly {
    std::vector<std::array<int, 3>> exps;
    std::vector<double> coeffs;

    explicit FlatPoly(const LatticePoly &p) {
        for (const auto &[e, c] : p.terms()) {
            exps.push_back(e);
            coeffs.push_back(c.get_d());
        }
    }

    double operator()(const double *x, int arity) const {
        double total = 0.0;
        for (size_t t = 0; t < coeffs.size(); ++t) {
            double v = coeffs[t];
            for (int k = 0; k < arity; ++k) {
                for (int p = 0; p < exps[t][k]; ++p) v *= x[k];
            }
            total += v;
        }
        return total;
    }
};

struct Best {
    double value = -1.0;
    std::array<double, 3> at{};
    int direction = 0;
};

void scan(const std::vector<FlatPoly> &partials, const std::vector<double> &weights, int arity,
          const std::array<double, 3> &lo, const std::array<double, 3> &hi, int res, Best &best) {
    std::array<int, 3> idx{0, 0, 0};
    std::array<double, 3> x{};
    int counts[3] = {res + 1, arity > 1 ? res + 1 : 1, arity > 2 ? res + 1 : 1};
    for (idx[0] = 0; idx[0] < counts[0]; ++idx[0]) {
        for (idx[1] = 0; idx[1] < counts[1]; ++idx[1]) {
            for (idx[2] = 0; idx[2] < counts[2]; ++idx[2]) {
                for (int k = 0; k < arity; ++k) {
                    x[k] = idx[k] == res ? hi[k] : lo[k] + (hi[k] - lo[k]) * idx[k] / res;
                }
                for (int k = 0; k < arity; ++k) {
                    double v = weights[k] * std::abs(partials[k](x.data(), arity));
                    if (v > best.value) {
                        best.value = v;
                        best.at = x;
                        best.direction = k;
                    }
                }
            }
        }
    }
}

}  // namespace

DerivativeReport weighted_max_derivative(const LatticePoly &q, const Region &region, const DerivativeOptions &opts) {
    const int arity = region.arity;
    if (q.arity() != arity) throw Error("polynomial arity does not match region");
    if (static_cast<int>(region.lo.size()) != arity || static_cast<int>(region.hi.size()) != arity ||
        static_cast<int>(region.weights.size()) != arity) {
        throw Error("region bounds do not match its arity");
    }
    // Work in coordinates relative to the lower corner so large N stays well conditioned.
    LatticePoly local = q.shifted(region.lo);
    std::vector<FlatPoly> partials;
    std::array<double, 3> lo{}, hi{};
    for (int k = 0; k < arity; ++k) {
        partials.emplace_back(local.derivative(k));
        hi[k] = Rational(region.hi[k] - region.lo[k]).get_d();
    }
    int res = opts.resolution > 0 ? opts.resolution : (arity == 2 ? 512 : 64);
    Best best;
    scan(partials, region.weights, arity, lo, hi, res, best);
    int refine_res = std::min(res, 64);
    std::array<double, 3> cell{};
    for (int k = 0; k < arity; ++k) cell[k] = (hi[k] - lo[k]) / res;
    for (int round = 0; round < opts.refinement_rounds; ++round) {
        std::array<double, 3> rlo{}, rhi{};
        for (int k = 0; k < arity; ++k) {
            rlo[k] = std::max(lo[k], best.at[k] - cell[k]);
            rhi[k] = std::min(hi[k], best.at[k] + cell[k]);
        }
        scan(partials, region.weights, arity, rlo, rhi, refine_res, best);
        for (int k = 0; k < arity; ++k) cell[k] = (rhi[k] - rlo[k]) / refine_res;
    }
    DerivativeReport report;
    report.value = std::max(best.value, 0.0);
    for (int k = 0; k < arity; ++k) report.at.push_back(best.at[k] + region.lo[k].get_d());
    report.direction = q.names()[best.direction];
    return report;
}

}  // namespace querylab
