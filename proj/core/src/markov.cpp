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

#include "querylab/markov.hpp"

#include <cmath>

#include "querylab/exact.hpp"

namespace querylab {

double markov_bound(int degree, double a1, double a2, double b1, double b2) {
    if (!(a2 > a1)) throw Error("degenerate interval");
    if (b2 < b1) throw Error("value bounds out of order");
    if (degree < 0) throw Error("negative degree");
    return (b2 - b1) / (a2 - a1) * static_cast<double>(degree) * degree;
}

int UniPoly::degree() const {
    for (int d = static_cast<int>(coeffs.size()) - 1; d > 0; --d) {
        if (coeffs[d] != 0.0) return d;
    }
    return 0;
}

double UniPoly::operator()(double x) const {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

UniPoly UniPoly::derivative() const {
    UniPoly d;
    for (size_t k = 1; k < coeffs.size(); ++k) d.coeffs.push_back(coeffs[k] * static_cast<double>(k));
    if (d.coeffs.empty()) d.coeffs.push_back(0.0);
    return d;
}

UniPoly chebyshev(int d) {
    if (d < 0) throw Error("negative degree");
    // T_0 = 1, T_1 = x, T_{k+1} = 2x T_k - T_{k-1}
    std::vector<double> prev{1.0}, cur{0.0, 1.0};
    if (d == 0) return {prev};
    for (int k = 1; k < d; ++k) {
        std::vector<double> next(cur.size() + 1, 0.0);
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {cur};
}

Extremum maximize_on_interval(const std::function<double(double)> &f, double a, double b, int grid) {
    if (!(b >= a)) throw Error("degenerate interval");
    if (grid < 2) grid = 2;
    std::vector<double> xs(grid + 1), ys(grid + 1);
    for (int i = 0; i <= grid; ++i) {
        xs[i] = i == grid ? b : a + (b - a) * i / grid;
        ys[i] = f(xs[i]);
    }
    Extremum best{ys[0], xs[0]};
    for (int i = 0; i <= grid; ++i) {
        if (ys[i] > best.value) best = {ys[i], xs[i]};
    }
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int i = 1; i < grid; ++i) {
        if (ys[i] < ys[i - 1] || ys[i] < ys[i + 1]) continue;
        double lo = xs[i - 1], hi = xs[i + 1];
        double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + phi * (hi - lo);
                f2 = f(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - phi * (hi - lo);
                f1 = f(x1);
            }
        }
        double x = (lo + hi) / 2, y = f(x);
        if (y > best.value) best = {y, x};
    }
    return best;
}

std::pair<double, double> range_on_interval(const UniPoly &p, double a, double b) {
    double hi = maximize_on_interval([&](double x) { return p(x); }, a, b).value;
    double lo = -maximize_on_interval([&](double x) { return -p(x); }, a, b).value;
    return {lo, hi};
}

Extremum max_abs_derivative(const UniPoly &p, double a, double b) {
    UniPoly d = p.derivative();
    return maximize_on_interval([&](double x) { return std::abs(d(x)); }, a, b);
}

}  // namespace querylab
