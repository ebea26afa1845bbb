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

// querylab: batch driver for the simulator, the polynomial extraction and the
// verification sweeps. Every subcommand writes one report (json or csv).
//
// Exit status: 0 success, 1 a verification sweep found a mismatch, 2 invalid
// configuration, 3 enumeration cap exceeded.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "querylab/algorithm_io.hpp"
#include "querylab/assemble.hpp"
#include "querylab/chain.hpp"
#include "querylab/collision_finding.hpp"
#include "querylab/enumeration.hpp"
#include "querylab/extract.hpp"
#include "querylab/gamma.hpp"
#include "querylab/lattice.hpp"
#include "querylab/report.hpp"
#include "querylab/sampling.hpp"
#include "querylab/setcomp.hpp"

namespace {

using namespace querylab;

constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;

struct Common {
    uint64_t seed = 1;
    std::string format = "json";
    std::string output = "-";
    uint64_t cap = 0;
};

void add_common(CLI::App *sub, Common &c) {
    sub->add_option("--seed", c.seed, "64-bit seed")->capture_default_str();
    sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--output,-o", c.output, "report path, - for stdout")->capture_default_str();
    sub->add_option("--cap", c.cap, "enumeration cap (default from QUERYLAB_ENUM_CAP)");
}

void echo_common(Report &r, const Common &c) {
    r.config("seed", static_cast<int64_t>(c.seed));
    r.config("format", c.format);
    r.config("cap", static_cast<int64_t>(c.cap));
}

void emit(const Report &r, const Common &c) {
    if (c.output == "-") {
        std::cout << (c.format == "csv" ? r.to_csv() : r.to_json());
        std::cout.flush();
    } else {
        r.write(c.output, c.format);
    }
}

struct Mode {
    std::string name = "exact";
    int shots = 0;
};

// "exact", "float", "shots" (with --shots) or "shots:K".
Mode parse_mode(const std::string &text, int shots) {
    Mode m;
    if (text == "exact" || text == "float") {
        m.name = text;
        return m;
    }
    if (text.rfind("shots", 0) == 0) {
        m.name = "shots";
        m.shots = shots;
        if (text.size() > 5) {
            if (text[5] != ':') throw Error("unknown mode '" + text + "'");
            m.shots = std::stoi(text.substr(6));
        }
        if (m.shots < 1) throw Error("shots mode needs a positive shot count");
        return m;
    }
    throw Error("unknown mode '" + text + "'");
}

std::vector<int> parse_list(const std::string &text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw Error("bad integer list '" + text + "'");
        }
        if (used != item.size()) throw Error("bad integer list '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw Error("empty integer list");
    return out;
}

std::string join(const std::vector<int> &v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ReportValue exact_value(const QSqrt2 &v) {
    if (v.is_rational()) return v.as_rational();
    return v.str();
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
    Common common;
    std::string algorithm;
    int n = 0;
    std::string x, y, instance;
    std::string mode = "exact";
    int shots = 1000;
};

int run_simulate(const SimulateArgs &a) {
    ExactAlgorithm alg = load_algorithm(a.algorithm, a.n);
    Mode mode = parse_mode(a.mode, a.shots);
    Instance inst = [&] {
        if (!a.instance.empty()) return instance_from_json(read_file(a.instance));
        if (a.x.empty()) throw Error("simulate needs --x (and --y for set comparison) or --instance");
        if (alg.kind() == InstanceKind::collision) return Instance::collision(parse_list(a.x));
        if (a.y.empty()) throw Error("set-comparison algorithms need --y");
        return Instance::setcomp(parse_list(a.x), parse_list(a.y));
    }();

    Report r("simulate");
    r.config("algorithm", a.algorithm);
    r.config("n", static_cast<int64_t>(alg.n()));
    r.config("x", join(inst.x()));
    r.config("y", inst.kind() == InstanceKind::setcomp ? ReportValue(join(inst.y())) : ReportValue(Null{}));
    r.config("mode", mode.name);
    r.config("shots", static_cast<int64_t>(mode.shots));
    echo_common(r, a.common);

    r.summary("algorithm", alg.name());
    r.summary("T", static_cast<int64_t>(alg.queries()));
    r.summary("oracle", to_string(alg.oracle()));
    r.columns({"workspace", "register", "index", "z", "amplitude", "probability"});
    if (mode.name == "exact") {
        auto state = run(alg, inst);
        r.summary("acceptance_probability", exact_value(acceptance_probability(alg, inst)));
        for (const auto &[s, amp] : state.entries()) {
            r.row({static_cast<int64_t>(s.workspace), to_string(s.reg), static_cast<int64_t>(s.index),
                   static_cast<int64_t>(s.z), (amp * state.scale()).str(), exact_value(state.probability(s))});
        }
        // Amplitudes above are scaled by the squared normalization so they stay in Q(sqrt 2).
        r.summary("amplitude_scale", state.scale());
    } else {
        FloatAlgorithm f = to_float(alg);
        auto state = run(f, inst);
        double p = acceptance_probability(f, inst);
        r.summary("acceptance_probability", p);
        if (mode.name == "shots") {
            Rng rng(a.common.seed);
            int accepted = 0;
            for (int k = 0; k < mode.shots; ++k) accepted += sample_measurement(state, rng).z == 2 ? 1 : 0;
            r.summary("accepted", static_cast<int64_t>(accepted));
            r.summary("accept_frequency", static_cast<double>(accepted) / mode.shots);
        }
        double root = std::sqrt(state.scale().get_d());
        for (const auto &[s, amp] : state.entries()) {
            r.row({static_cast<int64_t>(s.workspace), to_string(s.reg), static_cast<int64_t>(s.index),
                   static_cast<int64_t>(s.z), amp * root, state.probability(s)});
        }
    }
    emit(r, a.common);
    return 0;
}

// ---- extract --------------------------------------------------------------

struct ExtractArgs {
    Common common;
    std::string algorithm;
    int n = 0;
};

int run_extract(const ExtractArgs &a) {
    ExactAlgorithm alg = load_algorithm(a.algorithm, a.n);
    MultilinearPoly p = extract_polynomial(alg);
    Report r("extract");
    r.config("algorithm", a.algorithm);
    r.config("n", static_cast<int64_t>(alg.n()));
    echo_common(r, a.common);
    r.summary("algorithm", alg.name());
    r.summary("T", static_cast<int64_t>(alg.queries()));
    r.summary("degree", static_cast<int64_t>(p.degree()));
    r.summary("degree_cap", static_cast<int64_t>(2 * alg.queries()));
    r.summary("terms", static_cast<int64_t>(p.terms().size()));
    r.summary("rational_coefficients", p.has_rational_coefficients());
    r.attach("polynomial", poly_to_json(p));
    r.columns({"monomial", "degree", "coefficient"});
    for (const auto &[m, c] : p.terms()) r.row({m.str(), static_cast<int64_t>(m.degree()), exact_value(c)});
    emit(r, a.common);
    return 0;
}

// ---- verify-gamma ---------------------------------------------------------

struct GammaArgs {
    Common common;
    int n = 0;
    int max_degree = 3;
    std::string family = "collision";
    int max_N = 0;
    int max_M = 0;
};

int run_verify_gamma(const GammaArgs &a) {
    if (a.n < 1) throw Error("--n must be positive");
    if (a.max_degree < 0) throw Error("--max-degree must be non-negative");
    const bool collision = a.family == "collision";
    const int max_N = a.max_N > 0 ? a.max_N : (collision ? 2 * a.n : a.n);
    const int max_M = a.max_M > 0 ? a.max_M : 2 * a.n;

    Report r("verify-gamma");
    r.config("n", static_cast<int64_t>(a.n));
    r.config("max_degree", static_cast<int64_t>(a.max_degree));
    r.config("family", a.family);
    r.config("max_N", static_cast<int64_t>(max_N));
    r.config("max_M", collision ? ReportValue(Null{}) : ReportValue(static_cast<int64_t>(max_M)));
    echo_common(r, a.common);

    const int registers = collision ? 1 : 2;
    const int alphabet = collision ? a.n : 2 * a.n;
    const auto monomials = all_monomials(registers, a.n, alphabet, a.max_degree);
    int64_t cases = 0, mismatches = 0, points = 0;
    r.columns(collision ? std::vector<std::string>{"g", "N", "monomial", "r", "closed", "bruteforce", "equal"}
                        : std::vector<std::string>{"g", "N", "M", "monomial", "r", "closed", "bruteforce", "equal"});
    auto closed_T = [](const Monomial &I) { return std::max(1, (I.degree() + 1) / 2); };

    if (collision) {
        for (int g = 1; g <= max_N; ++g) {
            for (int N = a.n; N <= max_N; ++N) {
                if (!is_collision_family_valid(QuasilatticePoint{g, N}, a.n)) continue;
                ++points;
                auto table = gamma_bruteforce_table(g, N, a.n, a.max_degree, a.common.cap);
                for (const auto &I : monomials) {
                    if (2 * closed_T(I) > N) continue;
                    Rational closed = gamma_closed(I, g, N, a.n, closed_T(I));
                    auto it = table.find(I);
                    Rational brute = it == table.end() ? Rational(0) : it->second;
                    bool eq = closed == brute;
                    ++cases;
                    mismatches += eq ? 0 : 1;
                    r.row({static_cast<int64_t>(g), static_cast<int64_t>(N), I.str(),
                           static_cast<int64_t>(I.stats().r), closed, brute, eq});
                }
            }
        }
    } else {
        for (int g = 1; g <= 2 * max_N; ++g) {
            for (int N = g; N <= max_N; N += g) {
                for (int M = a.n; M <= max_M; ++M) {
                    SuperQuasilatticePoint p{g, N, M};
                    if (!is_setcomp_family_valid(p, a.n)) continue;
                    ++points;
                    auto table = gamma3_bruteforce_table(g, N, M, a.n, a.max_degree, a.common.cap);
                    for (const auto &I : monomials) {
                        Rational closed = gamma3_closed(I, g, N, M, a.n, closed_T(I));
                        auto it = table.find(I);
                        Rational brute = it == table.end() ? Rational(0) : it->second;
                        bool eq = closed == brute;
                        ++cases;
                        mismatches += eq ? 0 : 1;
                        r.row({static_cast<int64_t>(g), static_cast<int64_t>(N), static_cast<int64_t>(M), I.str(),
                               static_cast<int64_t>(I.stats().r), closed, brute, eq});
                    }
                }
            }
        }
    }
    r.summary("all_equal", mismatches == 0);
    r.summary("points", points);
    r.summary("cases", cases);
    r.summary("mismatches", mismatches);
    emit(r, a.common);
    std::cerr << "all equal: " << (mismatches == 0 ? "true" : "false") << " (" << cases << " cases, " << points
              << " points)\n";
    return mismatches == 0 ? 0 : kExitMismatch;
}

// ---- verify-identity ------------------------------------------------------

struct IdentityArgs {
    Common common;
    std::string algorithm;
    int n = 0;
    std::string points = "strict";
    int max_N = 0;
    int max_M = 0;
    bool override_hypotheses = true;
};

int run_verify_identity(const IdentityArgs &a) {
    ExactAlgorithm alg = load_algorithm(a.algorithm, a.n);
    const int n = alg.n();
    const int T = alg.queries();
    const int lattice_T = std::max(T, 1);
    const bool collision = alg.kind() == InstanceKind::collision;
    if (a.points != "strict" && a.points != "family") throw Error("--points must be strict or family");
    AssembleOptions aopts{a.override_hypotheses};
    ExpectationOptions eopts;
    eopts.cap = a.common.cap;

    MultilinearPoly p = extract_polynomial(alg);
    LatticePoly q = collision ? assemble_q(p, n, T, aopts) : assemble_q3(p, n, T, aopts);

    Report r("verify-identity");
    r.config("algorithm", a.algorithm);
    r.config("n", static_cast<int64_t>(n));
    r.config("points", a.points);
    r.config("max_N", static_cast<int64_t>(a.max_N));
    r.config("max_M", static_cast<int64_t>(a.max_M));
    r.config("override", a.override_hypotheses);
    echo_common(r, a.common);
    r.summary("algorithm", alg.name());
    r.summary("T", static_cast<int64_t>(T));
    r.summary("hypotheses_hold", collision ? collision_hypothesis_holds(n, lattice_T)
                                           : setcomp_hypothesis_holds(n, lattice_T));
    r.summary("q_degree", static_cast<int64_t>(q.degree()));
    r.attach("q", q.to_json());

    int64_t mismatches = 0;
    if (collision) {
        std::vector<QuasilatticePoint> pts;
        if (a.points == "strict") {
            pts = quasilattice_points(n, lattice_T, static_cast<int>(std::floor(std::sqrt(n + 0.5))));
        } else {
            const int max_N = a.max_N > 0 ? a.max_N : 2 * n;
            for (int g = 1; g <= max_N; ++g) {
                for (int N = std::max(n, 2 * T); N <= max_N; ++N) {
                    if (is_collision_family_valid(QuasilatticePoint{g, N}, n)) pts.push_back({g, N});
                }
            }
        }
        r.columns({"g", "N", "P", "prefactor", "q", "prefactor_times_q", "equal"});
        for (const auto &pt : pts) {
            Expectation e = expected_acceptance(alg, pt, eopts);
            Rational qv = q.evaluate(std::vector<Rational>{Rational(pt.g), Rational(pt.N)});
            Rational pref = prefactor(n, T, pt.N);
            bool eq = e.value == QSqrt2(pref * qv);
            mismatches += eq ? 0 : 1;
            r.row({static_cast<int64_t>(pt.g), static_cast<int64_t>(pt.N), exact_value(e.value), pref, qv,
                   Rational(pref * qv), eq});
        }
        r.summary("points", static_cast<int64_t>(pts.size()));
    } else {
        std::vector<SuperQuasilatticePoint> pts;
        if (a.points == "strict") {
            int G = 1;
            while (static_cast<long>(G + 1) * (G + 1) * (G + 1) <= n) ++G;
            pts = super_quasilattice_points(n, lattice_T, G);
        } else {
            const int max_N = a.max_N > 0 ? a.max_N : n;
            const int max_M = a.max_M > 0 ? a.max_M : 2 * n;
            for (int g = 1; g <= 2 * max_N; ++g) {
                for (int N = g; N <= max_N; N += g) {
                    for (int M = std::max(n, 2 * T); M <= max_M; ++M) {
                        SuperQuasilatticePoint pt{g, N, M};
                        if (!is_setcomp_family_valid(pt, n)) continue;
                        bool defined = true;
                        for (int i = 0; i < 2 * T; ++i) defined = defined && 2L * N != static_cast<long>(g) * i;
                        if (defined) pts.push_back(pt);
                    }
                }
            }
        }
        r.columns({"g", "N", "M", "P", "prefactor", "q", "prefactor_times_q", "equal"});
        for (const auto &pt : pts) {
            Expectation e = expected_acceptance(alg, pt, eopts);
            Rational qv = q.evaluate(std::vector<Rational>{Rational(pt.g), Rational(pt.N), Rational(pt.M)});
            Rational pref = prefactor3(n, T, pt.N, pt.M, pt.g);
            bool eq = e.value == QSqrt2(pref * qv);
            mismatches += eq ? 0 : 1;
            r.row({static_cast<int64_t>(pt.g), static_cast<int64_t>(pt.N), static_cast<int64_t>(pt.M),
                   exact_value(e.value), pref, qv, Rational(pref * qv), eq});
        }
        r.summary("points", static_cast<int64_t>(pts.size()));
    }
    r.summary("all_equal", mismatches == 0);
    r.summary("mismatches", mismatches);
    emit(r, a.common);
    return mismatches == 0 ? 0 : kExitMismatch;
}

// ---- chain ----------------------------------------------------------------

struct ChainArgs {
    Common common;
    std::string algorithm;
    int n = 0;
    int G = 0;
    bool negative_control = false;
    double steepness = 1.0;
    int resolution = 0;
    int width_denominator = 0;
};

ReportValue optional_rational(const std::optional<Rational> &v) {
    if (!v) return Null{};
    return *v;
}

int run_chain(const ChainArgs &a) {
    ChainReport c;
    if (a.negative_control) {
        if (!a.algorithm.empty()) throw Error("--negative-control takes no --algorithm");
        c = negative_control(a.steepness, a.n > 0 ? a.n : 10000, 1, a.G > 0 ? a.G : 50);
    } else {
        if (a.algorithm.empty()) throw Error("chain needs --algorithm or --negative-control");
        ExactAlgorithm alg = load_algorithm(a.algorithm, a.n);
        ChainVariant variant = alg.kind() == InstanceKind::collision ? ChainVariant::collision : ChainVariant::setcomp;
        ChainOptions opts;
        opts.G = a.G;
        opts.cap = a.common.cap;
        opts.derivative.resolution = a.resolution;
        if (a.width_denominator > 0) {
            opts.lattice.collision_width_denominator = a.width_denominator;
            opts.lattice.setcomp_width_denominator = a.width_denominator;
        }
        c = verify_inequality_chain(alg, variant, opts);
    }

    Report r("chain");
    r.config("algorithm", a.negative_control ? ReportValue(Null{}) : ReportValue(a.algorithm));
    r.config("n", static_cast<int64_t>(a.n));
    r.config("G", static_cast<int64_t>(a.G));
    r.config("negative_control", a.negative_control);
    r.config("steepness", a.steepness);
    r.config("resolution", static_cast<int64_t>(a.resolution));
    r.config("width_denominator", static_cast<int64_t>(a.width_denominator));
    echo_common(r, a.common);

    r.summary("algorithm", c.algorithm);
    r.summary("variant", to_string(c.variant));
    r.summary("n", static_cast<int64_t>(c.n));
    r.summary("T", static_cast<int64_t>(c.T));
    r.summary("G", static_cast<int64_t>(c.G));
    r.summary("degree_cap", static_cast<int64_t>(c.degree_cap));
    r.summary("extracted_degree", static_cast<int64_t>(c.extracted_degree));
    r.summary("q_degree", static_cast<int64_t>(c.q_degree));
    r.summary("hypotheses_hold", c.hypotheses_hold);
    r.summary("synthetic", c.synthetic);
    r.summary("p_one", optional_rational(c.p_one));
    r.summary("p_two", optional_rational(c.p_two));
    r.summary("distinguisher", c.distinguisher);
    r.summary("slope", optional_rational(c.slope));
    r.summary("max_derivative", c.derivative.value);
    r.summary("max_derivative_direction", c.derivative.direction);
    r.summary("epsilon", c.epsilon);
    r.summary("covering", c.covering);
    r.summary("gap_N", c.gap_N);
    r.summary("gap_M", c.gap_M);
    r.summary("K", c.K);
    r.summary("bound", c.bound);
    r.summary("bound_fixed_constants", c.bound_fixed);
    r.summary("bound_direct", c.bound_direct);
    r.summary("slope_consistent", c.slope_consistent);
    r.summary("consistent", c.consistent);
    r.attach("q", c.q.to_json());

    const bool three = c.variant == ChainVariant::setcomp;
    r.columns(three ? std::vector<std::string>{"g", "N", "M", "P", "P_source", "q", "prefactor", "deviation",
                                               "deviation_bound"}
                    : std::vector<std::string>{"g", "N", "P", "P_source", "q", "prefactor", "deviation",
                                               "deviation_bound"});
    for (const auto &row : c.rows) {
        std::vector<ReportValue> cells;
        for (int v : row.point) cells.emplace_back(static_cast<int64_t>(v));
        cells.insert(cells.end(), {row.P, row.P_source, row.q, row.prefactor, row.deviation, row.deviation_bound});
        r.row(std::move(cells));
    }
    emit(r, a.common);
    return 0;
}

// ---- setcomp --------------------------------------------------------------

struct SetcompArgs {
    Common common;
    int n = 0;
    bool equal = false, disjoint = false, boundary = false;
    std::string x, y, instance;
    std::string mode = "exact";
    int shots = 1000;
};

Instance setcomp_instance(const SetcompArgs &a) {
    int chosen = (a.equal ? 1 : 0) + (a.disjoint ? 1 : 0) + (a.boundary ? 1 : 0) + (a.x.empty() ? 0 : 1) +
                 (a.instance.empty() ? 0 : 1);
    if (chosen > 1) throw Error("choose at most one of --equal, --disjoint, --boundary, --x/--y, --instance");
    if (!a.instance.empty()) return instance_from_json(read_file(a.instance));
    if (!a.x.empty()) {
        if (a.y.empty()) throw Error("--x needs --y");
        return Instance::setcomp(parse_list(a.x), parse_list(a.y));
    }
    if (a.n < 1) throw Error("--n must be positive");
    std::vector<int> x(a.n), y(a.n);
    for (int i = 0; i < a.n; ++i) x[i] = i + 1;
    if (a.equal) return Instance::setcomp(x, x);
    if (a.disjoint) {
        for (int i = 0; i < a.n; ++i) y[i] = a.n + i + 1;
        return Instance::setcomp(x, y);
    }
    if (a.boundary) {
        // |X u Y| = ceil(1.1 n): Y keeps n - k values of X and adds k fresh ones.
        int k = (a.n + 9) / 10;
        for (int i = 0; i < a.n; ++i) y[i] = i < a.n - k ? k + i + 1 : a.n + (i - (a.n - k)) + 1;
        return Instance::setcomp(x, y);
    }
    Rng rng(a.common.seed);
    return sample_setcomp_input(SuperQuasilatticePoint{1, a.n, a.n}, a.n, rng);
}

int run_setcomp(const SetcompArgs &a) {
    Mode mode = parse_mode(a.mode, a.shots);
    Instance inst = setcomp_instance(a);
    Report r("setcomp");
    r.config("n", static_cast<int64_t>(inst.n()));
    r.config("construction", a.equal      ? "equal"
                             : a.disjoint ? "disjoint"
                             : a.boundary ? "boundary"
                             : !a.x.empty() ? "explicit"
                             : !a.instance.empty() ? "file"
                                                   : "random");
    r.config("x", join(inst.x()));
    r.config("y", join(inst.y()));
    r.config("mode", mode.name);
    r.config("shots", static_cast<int64_t>(mode.shots));
    echo_common(r, a.common);

    r.summary("union_size", static_cast<int64_t>(set_union_size(inst)));
    r.summary("unmatched_probability", setcomp_unmatched_probability(inst));
    if (mode.name == "exact") {
        r.summary("P1", exact_value(erasing_setcomp_probability(inst)));
    } else {
        r.summary("P1", erasing_setcomp_probability_float(inst));
    }
    if (mode.name == "shots") {
        Rng rng(a.common.seed);
        AlgorithmResult res = erasing_setcomp_decide(inst, mode.shots, rng);
        r.summary("decision", res.decision);
        r.summary("queries_used", static_cast<int64_t>(res.queries_used));
    }
    r.columns({"i", "x", "y"});
    for (int i = 1; i <= inst.n(); ++i) {
        r.row({static_cast<int64_t>(i), static_cast<int64_t>(inst.x()[i - 1]), static_cast<int64_t>(inst.y()[i - 1])});
    }
    emit(r, a.common);
    return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
    Common common;
    std::string sizes = "27,64";
    int trials = 500;
    std::string algorithm = "all";
    double budget_factor = 2.0;
};

int run_bench(const BenchArgs &a) {
    if (a.trials < 1) throw Error("--trials must be positive");
    std::vector<int> sizes = parse_list(a.sizes);
    std::vector<std::string> algorithms;
    if (a.algorithm == "all") {
        algorithms = {"bht", "birthday"};
    } else if (a.algorithm == "bht" || a.algorithm == "birthday") {
        algorithms = {a.algorithm};
    } else {
        throw Error("--algorithm must be bht, birthday or all");
    }

    Report r("bench");
    r.config("sizes", a.sizes);
    r.config("trials", static_cast<int64_t>(a.trials));
    r.config("algorithm", a.algorithm);
    r.config("budget_factor", a.budget_factor);
    echo_common(r, a.common);
    r.columns({"n", "algorithm", "trials", "success_rate", "mean_queries", "max_queries", "queries_per_root",
               "one_to_one_errors"});

    uint64_t stream = 0;
    for (int n : sizes) {
        if (n < 2) throw Error("bench sizes must be at least 2");
        for (const auto &name : algorithms) {
            // bht scales with n^(1/3), the birthday baseline with n^(1/2).
            const double root = name == "bht" ? std::cbrt(static_cast<double>(n)) : std::sqrt(static_cast<double>(n));
            const int budget = static_cast<int>(std::ceil(a.budget_factor * std::sqrt(static_cast<double>(n))));
            auto solve = [&](const Instance &inst, Rng &rng) {
                return name == "bht" ? bht_collision(inst, rng) : classical_birthday(inst, rng, budget);
            };
            int64_t found = 0, errors = 0, total_queries = 0, max_queries = 0;
            for (int t = 0; t < a.trials; ++t) {
                Rng rng(derive_seed(a.common.seed, stream++));
                AlgorithmResult res = solve(sample_paired(n, rng), rng);
                found += res.collision ? 1 : 0;
                total_queries += res.queries_used;
                max_queries = std::max<int64_t>(max_queries, res.queries_used);
                AlgorithmResult neg = solve(sample_one_to_one(n, rng), rng);
                errors += neg.decision == "one-to-one" ? 0 : 1;
            }
            double mean = static_cast<double>(total_queries) / a.trials;
            r.row({static_cast<int64_t>(n), name, static_cast<int64_t>(a.trials),
                   static_cast<double>(found) / a.trials, mean, max_queries, mean / root, errors});
        }
    }
    emit(r, a.common);
    return 0;
}

// ---- lattice --------------------------------------------------------------

struct LatticeArgs {
    Common common;
    int n = 0;
    int T = 1;
    int G = 0;
    std::string family = "collision";
    int width_denominator = 0;
};

int run_lattice(const LatticeArgs &a) {
    LatticeOptions opts;
    if (a.width_denominator > 0) {
        opts.collision_width_denominator = a.width_denominator;
        opts.setcomp_width_denominator = a.width_denominator;
    }
    Report r("lattice");
    r.config("n", static_cast<int64_t>(a.n));
    r.config("T", static_cast<int64_t>(a.T));
    r.config("G", static_cast<int64_t>(a.G));
    r.config("family", a.family);
    r.config("width_denominator", static_cast<int64_t>(a.width_denominator));
    echo_common(r, a.common);
    if (a.family == "collision") {
        auto pts = quasilattice_points(a.n, a.T, a.G, opts);
        r.summary("points", static_cast<int64_t>(pts.size()));
        r.summary("N_upper", collision_n_upper(a.n, a.T, opts));
        r.columns({"g", "N"});
        for (const auto &p : pts) r.row({static_cast<int64_t>(p.g), static_cast<int64_t>(p.N)});
    } else {
        auto pts = super_quasilattice_points(a.n, a.T, a.G, opts);
        r.summary("points", static_cast<int64_t>(pts.size()));
        r.summary("N_upper", setcomp_n_upper(a.n, a.T, opts));
        r.columns({"g", "N", "M"});
        for (const auto &p : pts) {
            r.row({static_cast<int64_t>(p.g), static_cast<int64_t>(p.N), static_cast<int64_t>(p.M)});
        }
    }
    emit(r, a.common);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"querylab: polynomial-method verification driver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", querylab::version());

    SimulateArgs sim;
    auto *s = app.add_subcommand("simulate", "run an algorithm on one instance");
    s->add_option("--algorithm,-a", sim.algorithm, "builtin:<name> or algorithm file")->required();
    s->add_option("--n", sim.n, "input size (builtins)");
    s->add_option("--x", sim.x, "comma-separated x values");
    s->add_option("--y", sim.y, "comma-separated y values");
    s->add_option("--instance", sim.instance, "instance file");
    s->add_option("--mode", sim.mode, "exact | float | shots[:k]")->capture_default_str();
    s->add_option("--shots", sim.shots, "shot count for shots mode")->capture_default_str();
    add_common(s, sim.common);

    ExtractArgs ext;
    auto *e = app.add_subcommand("extract", "dump the acceptance polynomial");
    e->add_option("--algorithm,-a", ext.algorithm, "builtin:<name> or algorithm file")->required();
    e->add_option("--n", ext.n, "input size (builtins)");
    add_common(e, ext.common);

    GammaArgs gam;
    auto *vg = app.add_subcommand("verify-gamma", "closed-form gamma against brute force");
    vg->add_option("--n", gam.n, "input size")->required();
    vg->add_option("--max-degree", gam.max_degree, "largest monomial degree")->capture_default_str();
    vg->add_option("--family", gam.family, "collision | setcomp")
        ->check(CLI::IsMember({"collision", "setcomp"}))
        ->capture_default_str();
    vg->add_option("--max-N", gam.max_N, "largest N (default 2n, or n for setcomp)");
    vg->add_option("--max-M", gam.max_M, "largest M (setcomp, default 2n)");
    add_common(vg, gam.common);

    IdentityArgs idn;
    auto *vi = app.add_subcommand("verify-identity", "expected acceptance against prefactor * q");
    vi->add_option("--algorithm,-a", idn.algorithm, "builtin:<name> or algorithm file")->required();
    vi->add_option("--n", idn.n, "input size (builtins)");
    vi->add_option("--points", idn.points, "strict | family")->capture_default_str();
    vi->add_option("--max-N", idn.max_N, "largest N for --points family");
    vi->add_option("--max-M", idn.max_M, "largest M for --points family");
    add_common(vi, idn.common);

    ChainArgs ch;
    auto *c = app.add_subcommand("chain", "degree lower bound report");
    c->add_option("--algorithm,-a", ch.algorithm, "builtin:<name> or algorithm file");
    c->add_option("--n", ch.n, "input size");
    c->add_option("--G", ch.G, "largest g (default: as large as the lattice allows)");
    c->add_flag("--negative-control", ch.negative_control, "run the steep synthetic polynomial");
    c->add_option("--steepness", ch.steepness, "negative-control slope")->capture_default_str();
    c->add_option("--resolution", ch.resolution, "derivative grid resolution (0 = default)");
    c->add_option("--width-denominator", ch.width_denominator, "lattice width n/(cT) denominator c");
    add_common(c, ch.common);

    SetcompArgs sc;
    auto *sp = app.add_subcommand("setcomp", "erasing-oracle set comparison");
    sp->add_option("--n", sc.n, "input size");
    sp->add_flag("--equal", sc.equal, "X = Y");
    sp->add_flag("--disjoint", sc.disjoint, "X and Y disjoint");
    sp->add_flag("--boundary", sc.boundary, "|X u Y| = ceil(1.1 n)");
    sp->add_option("--x", sc.x, "comma-separated x values");
    sp->add_option("--y", sc.y, "comma-separated y values");
    sp->add_option("--instance", sc.instance, "instance file");
    sp->add_option("--mode", sc.mode, "exact | float | shots[:k]")->capture_default_str();
    sp->add_option("--shots", sc.shots, "shot count for shots mode")->capture_default_str();
    add_common(sp, sc.common);

    BenchArgs bn;
    auto *b = app.add_subcommand("bench", "collision-finding success and query tables");
    b->add_option("--n", bn.sizes, "comma-separated sizes")->capture_default_str();
    b->add_option("--trials", bn.trials, "trials per size")->capture_default_str();
    b->add_option("--algorithm", bn.algorithm, "bht | birthday | all")->capture_default_str();
    b->add_option("--budget-factor", bn.budget_factor, "birthday budget in units of sqrt(n)")->capture_default_str();
    add_common(b, bn.common);

    LatticeArgs lt;
    auto *l = app.add_subcommand("lattice", "list quasilattice points");
    l->add_option("--n", lt.n, "input size")->required();
    l->add_option("--T", lt.T, "query count")->capture_default_str();
    l->add_option("--G", lt.G, "largest g")->required();
    l->add_option("--family", lt.family, "collision | setcomp")
        ->check(CLI::IsMember({"collision", "setcomp"}))
        ->capture_default_str();
    l->add_option("--width-denominator", lt.width_denominator, "lattice width n/(cT) denominator c");
    add_common(l, lt.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &err) {
        int code = app.exit(err);
        return code == 0 ? 0 : kExitConfig;
    }

    for (Common *common : {&sim.common, &ext.common, &gam.common, &idn.common, &ch.common, &sc.common, &bn.common,
                           &lt.common}) {
        if (common->cap == 0) common->cap = default_enumeration_cap();
    }

    try {
        if (*s) return run_simulate(sim);
        if (*e) return run_extract(ext);
        if (*vg) return run_verify_gamma(gam);
        if (*vi) return run_verify_identity(idn);
        if (*c) return run_chain(ch);
        if (*sp) return run_setcomp(sc);
        if (*b) return run_bench(bn);
        if (*l) return run_lattice(lt);
    } catch (const EnumerationTooLarge &err) {
        std::cerr << "querylab: " << err.what() << "\n";
        return kExitCap;
    } catch (const Error &err) {
        std::cerr << "querylab: " << err.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &err) {
        std::cerr << "querylab: " << err.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
