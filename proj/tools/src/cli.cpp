/*
 * Copyright 2026 The lozenge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "lozenge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lozenge/boxcount.hpp"
#include "lozenge/msf.hpp"
#include "lozenge/render.hpp"
#include "lozenge/sampling.hpp"
#include "lozenge/symfun.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json points_json(const EvalPoint &pts) {
    Json arr = Json::array();
    for (const auto &v : pts.values()) arr.push_back(to_string(v));
    return arr;
}

Json sides_json(const IdentitySides &s) {
    return Json{{"lhs", to_string(s.lhs)}, {"rhs", to_string(s.rhs)}};
}

struct Verdict {
    bool ok = true;
    std::uint64_t checked = 0;
    Json counterexample;
};

struct VerifyOptions {
    std::string target;
    std::optional<int> a;
    std::optional<int> b;
    std::optional<int> n;
    std::uint64_t seed = 0;
    std::optional<int> trials;
};

std::vector<std::pair<int, int>> parity_pairs(const VerifyOptions &o, int max_side) {
    if (o.a.has_value() != o.b.has_value()) throw UsageError("--a and --b must be given together");
    if (o.a) {
        if (*o.a < 1 || *o.b < 1 || (*o.a - *o.b) % 2 != 0)
            throw UsageError("precondition violated: a and b must be positive of equal parity");
        return {{*o.a, *o.b}};
    }
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= max_side; ++a)
        for (int b = 1; b <= max_side; ++b)
            if ((a - b) % 2 == 0) out.emplace_back(a, b);
    return out;
}

std::vector<int> n_values(const VerifyOptions &o, int b) {
    if (o.n) {
        if (*o.n < 1) throw UsageError("precondition violated: n must be positive");
        return {*o.n};
    }
    return {b, b + 1, b + 2};
}

// Runs \p check over the (a, b, n) sweep with \p trials point sets each.
Verdict sweep_points(const VerifyOptions &o, int max_side, int trials, std::size_t extra_points,
                     const std::function<std::optional<Json>(int, int, int, const EvalPoint &)> &check) {
    SeededRng rng(o.seed);
    Verdict v;
    for (const auto &[a, b] : parity_pairs(o, max_side)) {
        for (int n : n_values(o, b)) {
            for (int t = 0; t < trials; ++t) {
                const EvalPoint pts =
                    random_distinct_points(static_cast<std::size_t>(n) + extra_points, rng);
                ++v.checked;
                if (auto bad = check(a, b, n, pts)) {
                    v.ok = false;
                    v.counterexample = Json{{"a", a}, {"b", b}, {"n", n}, {"points", points_json(pts)}};
                    for (auto &[key, value] : bad->items()) v.counterexample[key] = value;
                    return v;
                }
            }
        }
    }
    return v;
}

Verdict verify_theorem3(const VerifyOptions &o) {
    return sweep_points(o, 5, o.trials.value_or(3), 1,
                        [](int a, int b, int n, const EvalPoint &pts) -> std::optional<Json> {
                            const EvalPoint xn = pts.prefix(static_cast<std::size_t>(n));
                            const IdentitySides s{theorem3_lhs(a, b, n, pts, xn),
                                                  theorem3_rhs(a, b, n, pts, xn)};
                            if (s.holds()) return std::nullopt;
                            return sides_json(s);
                        });
}

Verdict verify_conjecture5(const VerifyOptions &o) {
    return sweep_points(o, 5, o.trials.value_or(3), 2,
                        [](int a, int b, int n, const EvalPoint &pts) -> std::optional<Json> {
                            const IdentitySides s = conjecture5_sides(a, b, n, pts);
                            if (s.holds()) return std::nullopt;
                            return sides_json(s);
                        });
}

void require_n_at_least_b(const VerifyOptions &o, int b) {
    if (o.n && *o.n < b) throw UsageError("precondition violated: n >= b");
}

Verdict verify_chain53(const VerifyOptions &o) {
    return sweep_points(o, 3, o.trials.value_or(2), 1,
                        [&](int a, int b, int n, const EvalPoint &pts) -> std::optional<Json> {
                            require_n_at_least_b(o, b);
                            const IdentitySides s =
                                chain_5_3_sides(a, b, n, pts, pts.prefix(static_cast<std::size_t>(n)));
                            if (s.holds()) return std::nullopt;
                            return sides_json(s);
                        });
}

Verdict verify_lemma10(const VerifyOptions &o) {
    return sweep_points(o, 3, o.trials.value_or(2), 1,
                        [&](int a, int b, int n, const EvalPoint &pts) -> std::optional<Json> {
                            require_n_at_least_b(o, b);
                            for (const auto &named : lemma10_sides(a, b, n, pts)) {
                                if (named.sides.holds()) continue;
                                Json j = sides_json(named.sides);
                                j["pfaffian"] = named.name;
                                return j;
                            }
                            return std::nullopt;
                        });
}

Verdict verify_lemma8(const VerifyOptions &o) {
    Verdict v;
    for (const auto &[a, b] : parity_pairs(o, 6)) {
        const auto pairs = generate_rab(a, b);
        const ExactInt expected = binomial(a + b, a);
        if (ExactInt(static_cast<unsigned long>(pairs.size())) != expected) {
            v.ok = false;
            v.counterexample = Json{{"a", a},
                                    {"b", b},
                                    {"pairs", pairs.size()},
                                    {"expected", to_string(expected)}};
            return v;
        }
        for (const auto &pair : pairs) {
            ++v.checked;
            if (!lemma8_check(a, b, pair)) {
                v.ok = false;
                v.counterexample = Json{{"a", a},
                                        {"b", b},
                                        {"lambda", pair.lambda.to_string()},
                                        {"mu", pair.mu.to_string()}};
                return v;
            }
        }
    }
    return v;
}

Verdict verify_minor_summation(const VerifyOptions &o) {
    if (o.a || o.b) throw UsageError("minor-summation takes only --n, --seed and --trials");
    if (o.n && (*o.n < 1 || *o.n > 4)) throw UsageError("precondition violated: 1 <= n <= 4");
    SeededRng rng(o.seed);
    Verdict v;
    const int trials = o.trials.value_or(50);
    for (int t = 0; t < trials; ++t) {
        const int n = o.n ? *o.n : static_cast<int>(rng.uniform(1, 4));
        std::vector<int> qs;
        for (int q = 0; q <= std::min(2, n); ++q)
            if ((n + q) % 2 == 0) qs.push_back(q);
        const int q = qs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(qs.size()) - 1))];
        const int p = static_cast<int>(rng.uniform(n - q, 6));
        const auto g = random_integer_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(p), -3, 3, rng);
        const auto h = random_integer_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(q), -3, 3, rng);
        const auto a = random_skew(static_cast<std::size_t>(p), -3, 3, rng);
        const IdentitySides s = minor_summation(g, h, a);
        ++v.checked;
        if (!s.holds()) {
            v.ok = false;
            v.counterexample = sides_json(s);
            v.counterexample["G"] = g.to_string();
            v.counterexample["H"] = h.to_string();
            v.counterexample["A"] = a.matrix().to_string();
            return v;
        }
    }
    return v;
}

Verdict verify_lemma9(const VerifyOptions &o) {
    if (o.a || o.b) throw UsageError("lemma9 takes only --n, --seed and --trials");
    if (o.n && *o.n < 0) throw UsageError("precondition violated: n >= 0");
    SeededRng rng(o.seed);
    Verdict v;
    const int trials = o.trials.value_or(50);
    std::vector<int> sizes = o.n ? std::vector<int>{*o.n} : std::vector<int>{1, 2, 3, 4, 5};
    for (int n : sizes) {
        const auto un = static_cast<std::size_t>(n);
        for (int t = 0; t < trials; ++t) {
            const auto a = random_skew(un, -3, 3, rng);
            std::vector<ExactRational> bvec;
            std::vector<ExactRational> cvec;
            for (std::size_t i = 0; i < un; ++i) {
                bvec.emplace_back(rng.uniform(-3, 3));
                cvec.emplace_back(rng.uniform(-3, 3));
            }
            const ExactRational d(rng.uniform(-3, 3));
            const IdentitySides s = lemma9_sides(a, bvec, cvec, d);
            ++v.checked;
            if (!s.holds()) {
                v.ok = false;
                v.counterexample = sides_json(s);
                v.counterexample["n"] = n;
                v.counterexample["A"] = a.matrix().to_string();
                return v;
            }
        }
    }
    return v;
}

Json verify_params(const VerifyOptions &o) {
    Json p{{"target", o.target}};
    if (o.a) p["a"] = *o.a;
    if (o.b) p["b"] = *o.b;
    if (o.n) p["n"] = *o.n;
    if (o.trials) p["trials"] = *o.trials;
    return p;
}

PuncturedHexagon hexagon_for(int a, int b, int c, const std::vector<int> &offset) {
    const LatticePoint base = PuncturedHexagon::default_puncture(a, b, c);
    if (offset.empty()) return PuncturedHexagon(a, b, c, base);
    return PuncturedHexagon(a, b, c, {base.x + offset[0], base.y + offset[1]});
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact lozenge tiling counts and Schur function identity checks", "lozenge"};
    app.require_subcommand(1);

    int a = 0;
    int b = 0;
    int c = 0;
    int theorem = 0;
    std::vector<int> offset;

    auto *count = app.add_subcommand("count", "Count tilings or plane partitions");
    count->require_subcommand(1);
    auto *closed = count->add_subcommand("closed", "Closed-form product count");
    auto *box = count->add_subcommand("box", "Plane partitions in a box");
    auto *brute = count->add_subcommand("brute", "Enumerate nonintersecting path families");
    auto *lgv = count->add_subcommand("lgv", "Sum of path determinants");
    for (auto *sub : {closed, brute, lgv}) {
        sub->add_option("--a", a)->required();
        sub->add_option("--b", b)->required();
        sub->add_option("--c", c)->required();
    }
    closed->add_option("--theorem", theorem, "1 (all sides same parity) or 4")
        ->check(CLI::IsMember({1, 4}));
    brute->add_option("--puncture", offset, "Offset DX DY from the default puncture")
        ->expected(2);
    int x = 0;
    int y = 0;
    int z = 0;
    box->add_option("--x", x)->required();
    box->add_option("--y", y)->required();
    box->add_option("--z", z)->required();

    VerifyOptions vo;
    auto *verify = app.add_subcommand("verify", "Check an identity on a deterministic sweep");
    verify
        ->add_option("target", vo.target)
        ->required()
        ->check(CLI::IsMember({"theorem3", "conjecture5", "minor-summation", "lemma9", "lemma10",
                               "chain53", "lemma8"}));
    verify->add_option("--a", vo.a);
    verify->add_option("--b", vo.b);
    verify->add_option("--n", vo.n);
    verify->add_option("--seed", vo.seed);
    verify->add_option("--trials", vo.trials)->check(CLI::PositiveNumber);

    std::uint64_t index = 0;
    std::string output;
    auto *render = app.add_subcommand("render", "Write one tiling as SVG");
    render->add_option("--a", a)->required();
    render->add_option("--b", b)->required();
    render->add_option("--c", c)->required();
    render->add_option("--index", index, "Position in depth-first enumeration order");
    render->add_option("-o,--output", output)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    Json report;
    int status = kOk;
    try {
        if (closed->parsed()) {
            if (theorem == 0) theorem = (a - c) % 2 == 0 ? 1 : 4;
            const ExactInt r = theorem == 1 ? theorem1_count(a, b, c) : theorem4_count(a, b, c);
            report = Json{{"command", "count closed"},
                          {"params", {{"a", a}, {"b", b}, {"c", c}, {"theorem", theorem}}},
                          {"result", to_string(r)}};
        } else if (box->parsed()) {
            report = Json{{"command", "count box"},
                          {"params", {{"x", x}, {"y", y}, {"z", z}}},
                          {"result", to_string(macmahon_box(x, y, z))}};
        } else if (brute->parsed()) {
            const PuncturedHexagon h = hexagon_for(a, b, c, offset);
            Json params{{"a", a}, {"b", b}, {"c", c}};
            params["puncture"] = {h.puncture().x, h.puncture().y};
            report = Json{{"command", "count brute"},
                          {"params", params},
                          {"result", to_string(enumerate_tilings(h))}};
        } else if (lgv->parsed()) {
            report = Json{{"command", "count lgv"},
                          {"params", {{"a", a}, {"b", b}, {"c", c}}},
                          {"result", to_string(count_via_path_determinants(
                                         PuncturedHexagon::central(a, b, c)))}};
        } else if (verify->parsed()) {
            Verdict v;
            if (vo.target == "theorem3") v = verify_theorem3(vo);
            else if (vo.target == "conjecture5") v = verify_conjecture5(vo);
            else if (vo.target == "chain53") v = verify_chain53(vo);
            else if (vo.target == "lemma10") v = verify_lemma10(vo);
            else if (vo.target == "lemma8") v = verify_lemma8(vo);
            else if (vo.target == "minor-summation") v = verify_minor_summation(vo);
            else v = verify_lemma9(vo);
            Json params = verify_params(vo);
            params["checked"] = v.checked;
            report = Json{{"command", "verify " + vo.target}, {"params", params}, {"result", v.ok}};
            if (!v.ok) {
                status = kVerificationFailed;
                if (vo.target == "conjecture5") report["finding"] = "conjecture5 fails";
                report["counterexample"] = v.counterexample;
            }
        } else if (render->parsed()) {
            const PuncturedHexagon h = hexagon_for(a, b, c, {});
            const auto family = nth_family(h, index);
            if (!family) throw UsageError("precondition violated: index exceeds the number of tilings");
            std::ofstream file(output);
            if (!file) throw UsageError("cannot open " + output);
            file << render_tiling_svg(h, *family);
            if (!file) throw UsageError("cannot write " + output);
            report = Json{{"command", "render"},
                          {"params", {{"a", a}, {"b", b}, {"c", c}, {"index", index}}},
                          {"result", output}};
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError &e) {
        err << "error: precondition violated: " << e.what() << '\n';
        return kUsage;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    report["elapsed_ms"] = elapsed.count();
    if (verify->parsed()) report["seed"] = vo.seed;
    out << report.dump() << '\n';
    return status;
}

} // namespace lozenge::cli
