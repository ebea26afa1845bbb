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

#include "querylab/gamma.hpp"

#include <algorithm>
#include <functional>

namespace querylab {

namespace {

Rational falling_ratio(long top, long bottom) {
    // top! / bottom!
    return Rational(factorial(top)) / Rational(factorial(bottom));
}

void check_collision_monomial(const Monomial &I, int n) {
    for (const auto &d : I.factors()) {
        if (d.reg != Register::X) throw Error("collision monomials use the X register only");
        if (d.position < 1 || d.position > n || d.value < 1 || d.value > n) {
            throw Error("monomial " + I.str() + " outside positions/values 1.." + std::to_string(n));
        }
    }
}

void check_setcomp_monomial(const Monomial &I, int n) {
    for (const auto &d : I.factors()) {
        if (d.position < 1 || d.position > n || d.value < 1 || d.value > 2 * n) {
            throw Error("monomial " + I.str() + " outside positions 1.." + std::to_string(n) + " or values 1.." +
                        std::to_string(2 * n));
        }
    }
}

LatticePoly kappa_poly() {
    LatticePoly k(2, {"g", "M"});
    k.add_term({2, 0, 0}, 4);
    k.add_term({1, 0, 0}, -12);
    k.add_term({0, 0, 0}, 9);
    return k;
}

}  // namespace

Rational gamma_closed(const Monomial &I, int g, int N, int n, int T) {
    check_collision_monomial(I, n);
    if (g < 1 || N % g != 0 || N < n || N / g > n) {
        throw Error("(g,N) = (" + std::to_string(g) + "," + std::to_string(N) + ") is not a valid family for n=" +
                    std::to_string(n));
    }
    MonomialStats st = I.stats();
    if (st.r > 2 * T || 2 * T > N) throw Error("gamma closed form needs r(I) <= 2T <= N");
    Rational v = Rational(1) / falling_ratio(N, N - 2 * T) / falling_ratio(n, n - st.w());
    for (int i = st.r; i <= 2 * T - 1; ++i) v *= N - i;
    for (int i = 0; i <= st.w() - 1; ++i) v *= N - static_cast<long>(g) * i;
    for (int rj : st.mult) {
        for (int l = 1; l <= rj - 1; ++l) v *= g - l;
    }
    return v;
}

Rational gamma_bruteforce(const Monomial &I, int g, int N, int n, uint64_t cap) {
    CollisionSupportEnumerator it(QuasilatticePoint{g, N}, n, cap);
    Integer hits = 0, total = 0;
    CollisionSupport s;
    while (it.next(s)) {
        ++total;
        bool ok = true;
        for (const auto &d : I.factors()) {
            if (d.reg != Register::X || s.x_full[d.position - 1] != d.value) {
                ok = false;
                break;
            }
        }
        if (ok) ++hits;
    }
    return make_rational(hits, total);
}

namespace {

// Adds one to every sub-monomial (size <= max_degree) of the full assignment.
void tally_submonomials(const std::vector<Indicator> &assignment, int max_degree, std::map<Monomial, Integer> &hits) {
    std::vector<Indicator> pick;
    std::function<void(size_t)> rec = [&](size_t start) {
        auto m = Monomial::from(pick);
        if (m) ++hits[*m];
        if (static_cast<int>(pick.size()) == max_degree) return;
        for (size_t k = start; k < assignment.size(); ++k) {
            pick.push_back(assignment[k]);
            rec(k + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

std::map<Monomial, Rational> normalize(const std::map<Monomial, Integer> &hits, const Integer &total) {
    std::map<Monomial, Rational> out;
    for (const auto &[m, h] : hits) out.emplace(m, make_rational(h, total));
    return out;
}

}  // namespace

std::map<Monomial, Rational> gamma_bruteforce_table(int g, int N, int n, int max_degree, uint64_t cap) {
    CollisionSupportEnumerator it(QuasilatticePoint{g, N}, n, cap);
    std::map<Monomial, Integer> hits;
    Integer total = 0;
    CollisionSupport s;
    std::vector<Indicator> assignment(n);
    while (it.next(s)) {
        ++total;
        for (int i = 1; i <= n; ++i) assignment[i - 1] = Indicator{Register::X, i, s.x_full[i - 1]};
        tally_submonomials(assignment, max_degree, hits);
    }
    return normalize(hits, total);
}

std::map<Monomial, Rational> gamma3_bruteforce_table(int g, int N, int M, int n, int max_degree, uint64_t cap) {
    std::map<Monomial, Integer> hits;
    Integer total = 0;
    std::vector<Indicator> assignment(2 * n);
    for_each_setcomp_support(SuperQuasilatticePoint{g, N, M}, n, cap, [&](const SetcompSupport &s) {
        ++total;
        for (int i = 1; i <= n; ++i) {
            assignment[i - 1] = Indicator{Register::X, i, s.x_full[i - 1]};
            assignment[n + i - 1] = Indicator{Register::Y, i, s.y_full[i - 1]};
        }
        tally_submonomials(assignment, max_degree, hits);
    });
    return normalize(hits, total);
}

Rational prefactor(int n, int T, int N) {
    if (N < 2 * T || n < 2 * T) throw Error("prefactor needs N >= 2T and n >= 2T");
    Rational v = 1;
    for (int i = 0; i < 2 * T; ++i) v *= make_rational(n - i, N - i);
    return v;
}

LatticePoly q_tilde(const Monomial &I, int n, int T) {
    check_collision_monomial(I, n);
    MonomialStats st = I.stats();
    if (st.r > 2 * T || 2 * T > n) throw Error("q_tilde needs r(I) <= 2T <= n");
    Rational scalar = Rational(factorial(n - st.w()) * factorial(n - 2 * T)) / Rational(factorial(n) * factorial(n));
    LatticePoly q = LatticePoly::constant(2, scalar);
    for (int i = st.r; i <= 2 * T - 1; ++i) q = q * linear(2, -i, {0, 1});
    for (int i = 0; i <= st.w() - 1; ++i) q = q * linear(2, 0, {-i, 1});
    for (int rj : st.mult) {
        for (int l = 1; l <= rj - 1; ++l) q = q * linear(2, -l, {1, 0});
    }
    return q;
}

LatticePoly theta_poly(const Monomial &I) {
    MonomialStats st = I.stats();
    const LatticePoly kap = kappa_poly();
    const LatticePoly m = LatticePoly::variable(2, 1, {"g", "M"});
    LatticePoly theta = LatticePoly::constant(2, 1, {"g", "M"});
    auto side = [&](int w, const std::vector<int> &mult) {
        for (int i = 0; i <= w - 1; ++i) theta = theta * (m - kap * Rational(i));
        for (int rj : mult) {
            for (int l = 1; l <= rj - 1; ++l) theta = theta * (kap - LatticePoly::constant(2, l, {"g", "M"}));
        }
    };
    side(st.w_x(), st.mult_x);
    side(st.w_y(), st.mult_y);
    return theta;
}

Rational gamma3_closed(const Monomial &I, int g, int N, int M, int n, int T) {
    check_setcomp_monomial(I, n);
    if (!is_setcomp_family_valid(SuperQuasilatticePoint{g, N, M}, n)) {
        throw Error("(g,N,M) = (" + std::to_string(g) + "," + std::to_string(N) + "," + std::to_string(M) +
                    ") is not a valid family for n=" + std::to_string(n));
    }
    MonomialStats st = I.stats();
    if (st.r > 2 * T) throw Error("gamma3 closed form needs r(I) <= 2T");
    const long k = kappa(g);
    const long s = 2L * N / g;
    const long m = M / k;
    // Z(I) inside S, then Z_X inside S_X and Z_Y inside S_Y.
    Rational v = Rational(binomial(2L * n - st.w(), s - st.w())) / Rational(binomial(2L * n, s));
    v *= Rational(binomial(s - st.w_x(), m - st.w_x())) / Rational(binomial(s, m));
    v *= Rational(binomial(s - st.w_y(), m - st.w_y())) / Rational(binomial(s, m));
    if (sgn(v) == 0) return 0;
    // Positions pinned inside the kappa-to-1 functions.
    v /= falling_ratio(M, M - st.r_x);
    v /= falling_ratio(M, M - st.r_y);
    for (const auto *mult : {&st.mult_x, &st.mult_y}) {
        for (int rj : *mult) {
            for (int l = 0; l <= rj - 1; ++l) v *= k - l;
        }
    }
    return v;
}

Rational gamma3_bruteforce(const Monomial &I, int g, int N, int M, int n, uint64_t cap) {
    Integer hits = 0, total = 0;
    for_each_setcomp_support(SuperQuasilatticePoint{g, N, M}, n, cap, [&](const SetcompSupport &s) {
        ++total;
        for (const auto &d : I.factors()) {
            const auto &full = d.reg == Register::X ? s.x_full : s.y_full;
            if (full[d.position - 1] != d.value) return;
        }
        ++hits;
    });
    return make_rational(hits, total);
}

Rational prefactor3(int n, int T, int N, int M, int g) {
    if (M < 2 * T || n < 2 * T) throw Error("prefactor3 needs M >= 2T and n >= 2T");
    Rational v = 1;
    for (int i = 0; i < 2 * T; ++i) {
        long denom = 2L * N - static_cast<long>(g) * i;
        if (denom == 0) throw Error("prefactor3 undefined: 2N - g i vanishes");
        v *= make_rational(2L * n, denom);
    }
    Rational ratio = 1;
    for (int i = 0; i < 2 * T; ++i) ratio *= make_rational(n - i, M - i);
    return v * ratio * ratio;
}

LatticePoly q_tilde3(const Monomial &I, int n, int T) {
    check_setcomp_monomial(I, n);
    MonomialStats st = I.stats();
    if (st.r > 2 * T || 2 * T > n) throw Error("q_tilde3 needs r(I) <= 2T <= n");
    const std::vector<std::string> names{"g", "N", "M"};
    Integer two_n_pow = 1;
    for (int i = 0; i < 2 * T; ++i) two_n_pow *= 2 * n;
    Rational scalar = Rational(factorial(2L * n - st.w())) / Rational(factorial(2L * n) * two_n_pow);
    Rational ratio = Rational(factorial(n - 2 * T)) / Rational(factorial(n));
    scalar *= ratio * ratio;
    LatticePoly q = LatticePoly::constant(3, scalar, names);
    for (int i = 0; i < st.w_x() + st.w_y() - st.w(); ++i) q = q * LatticePoly::variable(3, 0, names);
    q = q * theta_poly(I).embed(3, {0, 2}, names);
    for (int rx : {st.r_x, st.r_y}) {
        for (int i = rx; i <= 2 * T - 1; ++i) q = q * linear(3, -i, {0, 0, 1}, names);
    }
    for (int i = st.w_x(); i <= st.w() - 1; ++i) q = q * linear(3, 0, {-i, 2, 0}, names);
    for (int i = st.w_y(); i <= 2 * T - 1; ++i) q = q * linear(3, 0, {-i, 2, 0}, names);
    return q;
}

}  // namespace querylab
