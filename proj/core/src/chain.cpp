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

#include "querylab/chain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "querylab/constants.hpp"
#include "querylab/extract.hpp"
#include "querylab/markov.hpp"

namespace querylab {

double degree_lower_bound(double d, int G, int T, int n) {
    if (d <= 0.0) return 0.0;
    double k = 1.0 + constants::kCollisionWidth * static_cast<double>(T) * G * (G - 1) / n;
    return std::sqrt(d * (G - 1) / (constants::kRangeConstant + 2.0 * d * k));
}

double general_degree_bound(double d, int G, double eps, double K) {
    if (d <= 0.0) return 0.0;
    return std::sqrt(d * (G - 1) / (1.0 + 2.0 * eps + 2.0 * d * K));
}

std::string to_string(ChainVariant v) { return v == ChainVariant::collision ? "collision" : "setcomp"; }

namespace {

int default_G(int n, ChainVariant variant) {
    int G = 1;
    if (variant == ChainVariant::collision) {
        while (static_cast<long>(G + 1) * (G + 1) <= n) ++G;
    } else {
        while (static_cast<long>(G + 1) * (G + 1) * (G + 1) <= n) ++G;
    }
    return G;
}

// Largest distance from a point of [lo, hi] to the nearest value in `sorted`.
double covering_gap(const std::vector<int> &sorted, double lo, double hi) {
    double gap = std::max(sorted.front() - lo, hi - sorted.back());
    for (size_t i = 1; i < sorted.size(); ++i) gap = std::max(gap, (sorted[i] - sorted[i - 1]) / 2.0);
    return std::max(gap, 0.0);
}

// Covering distances for g in 2..G, where region points with g-hat in (g-1, g] use
// lattice points at g (and g-hat = 1 uses g = 2).
void compute_covering(ChainReport &r, const std::map<int, std::vector<std::vector<int>>> &by_g, double upper) {
    r.covering = true;
    r.gap_N = r.gap_M = 0.0;
    for (int g = 2; g <= r.G; ++g) {
        auto it = by_g.find(g);
        if (it == by_g.end() || it->second.empty()) {
            r.covering = false;
            continue;
        }
        std::set<int> ns, ms;
        for (const auto &p : it->second) {
            ns.insert(p[1]);
            if (p.size() > 2) ms.insert(p[2]);
        }
        r.gap_N = std::max(r.gap_N, covering_gap({ns.begin(), ns.end()}, r.n, upper));
        if (!ms.empty()) r.gap_M = std::max(r.gap_M, covering_gap({ms.begin(), ms.end()}, r.n, upper));
    }
}

int lattice_T(int T) { return std::max(T, 1); }

// Direct Markov certificate along the line through the maximizer.
double direct_bound(const LatticePoly &q, const Region &region, const DerivativeReport &d) {
    int k = 0;
    while (k < region.arity && q.names()[k] != d.direction) ++k;
    if (k == region.arity || d.value <= 0.0) return 0.0;
    double a = region.lo[k].get_d(), b = region.hi[k].get_d();
    // Local coordinates along axis k, other coordinates fixed at the maximizer.
    std::vector<Rational> offset(region.arity);
    for (int j = 0; j < region.arity; ++j) offset[j] = j == k ? region.lo[k] : Rational(d.at[j]);
    LatticePoly local = q.shifted(offset);
    LatticePoly dlocal = local.derivative(k);
    auto at = [&](const LatticePoly &p, double t) {
        std::vector<double> x(region.arity, 0.0);
        x[k] = t;
        return p.evaluate(x);
    };
    double len = b - a;
    double hi = maximize_on_interval([&](double t) { return at(local, t); }, 0.0, len).value;
    double lo = -maximize_on_interval([&](double t) { return -at(local, t); }, 0.0, len).value;
    double slope = maximize_on_interval([&](double t) { return std::abs(at(dlocal, t)); }, 0.0, len).value;
    if (hi - lo <= 0.0) return 0.0;
    return std::sqrt(slope * len / (hi - lo));
}

void finish(ChainReport &r, const ChainOptions &opts, double epsilon) {
    const int T = lattice_T(r.T);
    Region region = r.variant == ChainVariant::collision ? collision_region(r.n, T, r.G, opts.lattice)
                                                         : setcomp_region(r.n, T, r.G, opts.lattice);
    r.q_degree = r.q.degree();
    r.epsilon = epsilon;
    r.derivative = weighted_max_derivative(r.q, region, opts.derivative);
    double w = region.weights[1];
    r.K = 1.0 + (r.gap_N + r.gap_M) / w;
    const double d = r.derivative.value;
    r.bound = r.covering ? general_degree_bound(d, r.G, r.epsilon, r.K) : 0.0;
    if (r.variant == ChainVariant::collision) {
        r.bound_fixed = degree_lower_bound(d, r.G, T, r.n);
    } else {
        double k_fixed = 1.0 + (r.G + static_cast<double>(kappa(r.G))) / w;
        r.bound_fixed = general_degree_bound(d, r.G, constants::kDeviation, k_fixed);
    }
    r.bound_direct = direct_bound(r.q, region, r.derivative);
    if (r.slope) r.slope_consistent = d + 1e-9 * std::max(1.0, d) >= std::abs(r.slope->get_d());
    r.consistent = r.degree_cap + 1e-9 >= r.bound && r.q_degree <= r.degree_cap;
}

}  // namespace

ChainReport verify_inequality_chain(const ExactAlgorithm &alg, ChainVariant variant, const ChainOptions &opts) {
    ChainReport r;
    r.algorithm = alg.name();
    r.variant = variant;
    r.n = alg.n();
    r.T = alg.queries();
    InstanceKind want = variant == ChainVariant::collision ? InstanceKind::collision : InstanceKind::setcomp;
    if (alg.kind() != want) throw Error("algorithm kind does not match chain variant " + to_string(variant));
    r.G = opts.G > 0 ? opts.G : default_G(r.n, variant);
    if (r.G < 2) throw Error("chain needs G >= 2 (n too small)");
    r.degree_cap = variant == ChainVariant::collision ? 2 * r.T : 8 * r.T;
    const int T = lattice_T(r.T);

    MultilinearPoly p = extract_polynomial(alg);
    r.extracted_degree = p.degree();
    AssembleOptions aopts{true};
    r.hypotheses_hold = variant == ChainVariant::collision ? collision_hypothesis_holds(r.n, T)
                                                           : setcomp_hypothesis_holds(r.n, T);
    r.q = variant == ChainVariant::collision ? assemble_q(p, r.n, r.T, aopts) : assemble_q3(p, r.n, r.T, aopts);

    std::vector<std::vector<int>> points;
    double upper;
    if (variant == ChainVariant::collision) {
        for (const auto &pt : quasilattice_points(r.n, T, r.G, opts.lattice)) points.push_back({pt.g, pt.N});
        upper = collision_n_upper(r.n, T, opts.lattice).get_d();
    } else {
        for (const auto &pt : super_quasilattice_points(r.n, T, r.G, opts.lattice)) points.push_back({pt.g, pt.N, pt.M});
        upper = setcomp_n_upper(r.n, T, opts.lattice).get_d();
    }

    ExpectationOptions eopts;
    eopts.cap = opts.cap;
    double epsilon = 0.0;
    std::map<int, std::vector<std::vector<int>>> by_g;
    for (const auto &pt : points) {
        by_g[pt[0]].push_back(pt);
        ChainRow row;
        row.point = pt;
        std::vector<Rational> x(pt.begin(), pt.end());
        row.q = r.q.evaluate(x);
        row.prefactor = variant == ChainVariant::collision ? prefactor(r.n, r.T, pt[1])
                                                           : prefactor3(r.n, r.T, pt[1], pt[2], pt[0]);
        try {
            Expectation e = variant == ChainVariant::collision
                                ? expected_acceptance(p, QuasilatticePoint{pt[0], pt[1]}, r.n, eopts)
                                : expected_acceptance(p, SuperQuasilatticePoint{pt[0], pt[1], pt[2]}, r.n, eopts);
            row.P = e.value.as_rational();
            row.P_source = "enumeration";
        } catch (const EnumerationTooLarge &) {
            if (!opts.identity_fallback) throw;
            row.P = row.prefactor * row.q;
            row.P_source = "identity";
        }
        row.deviation = abs(row.P - row.q);
        row.deviation_bound = (1 / row.prefactor - 1) * row.P;
        epsilon = std::max(epsilon, row.deviation.get_d());
        if (pt[1] == r.n && (pt.size() == 2 || pt[2] == r.n)) {
            if (pt[0] == 1) r.p_one = row.P;
            if (pt[0] == 2) r.p_two = row.P;
        }
        r.rows.push_back(std::move(row));
    }
    if (r.p_one && r.p_two) {
        double a = r.p_one->get_d(), b = r.p_two->get_d();
        r.distinguisher = (a <= constants::kAcceptOneToOne && b >= constants::kAcceptTwoToOne) ||
                          (b <= constants::kAcceptOneToOne && a >= constants::kAcceptTwoToOne);
        std::vector<Rational> one{1, r.n}, two{2, r.n};
        if (variant == ChainVariant::setcomp) {
            one.push_back(r.n);
            two.push_back(r.n);
        }
        r.slope = r.q.evaluate(two) - r.q.evaluate(one);
    }
    compute_covering(r, by_g, upper);
    finish(r, opts, epsilon);
    return r;
}

ChainReport chain_for_polynomial(const LatticePoly &q, ChainVariant variant, int n, int T, const ChainOptions &opts) {
    ChainReport r;
    r.algorithm = "synthetic";
    r.synthetic = true;
    r.variant = variant;
    r.n = n;
    r.T = T;
    r.G = opts.G > 0 ? opts.G : default_G(n, variant);
    if (r.G < 2) throw Error("chain needs G >= 2 (n too small)");
    r.degree_cap = variant == ChainVariant::collision ? 2 * T : 8 * T;
    r.q = q;
    r.hypotheses_hold = variant == ChainVariant::collision ? collision_hypothesis_holds(n, lattice_T(T))
                                                           : setcomp_hypothesis_holds(n, lattice_T(T));
    std::map<int, std::vector<std::vector<int>>> by_g;
    double upper;
    if (variant == ChainVariant::collision) {
        for (const auto &pt : quasilattice_points(n, lattice_T(T), r.G, opts.lattice)) by_g[pt.g].push_back({pt.g, pt.N});
        upper = collision_n_upper(n, lattice_T(T), opts.lattice).get_d();
    } else {
        for (const auto &pt : super_quasilattice_points(n, lattice_T(T), r.G, opts.lattice)) {
            by_g[pt.g].push_back({pt.g, pt.N, pt.M});
        }
        upper = setcomp_n_upper(n, lattice_T(T), opts.lattice).get_d();
    }
    std::vector<Rational> one{1, n}, two{2, n};
    if (variant == ChainVariant::setcomp) {
        one.push_back(n);
        two.push_back(n);
    }
    r.slope = q.evaluate(two) - q.evaluate(one);
    compute_covering(r, by_g, upper);
    finish(r, opts, constants::kDeviation);
    return r;
}

ChainReport negative_control(double steepness, int n, int T, int G) {
    LatticePoly q(2);
    Rational s(steepness);
    q.add_term({1, 0, 0}, s);
    q.add_term({0, 0, 0}, -s);
    ChainOptions opts;
    opts.G = G;
    ChainReport r = chain_for_polynomial(q, ChainVariant::collision, n, T, opts);
    r.algorithm = "negative-control";
    return r;
}

}  // namespace querylab
