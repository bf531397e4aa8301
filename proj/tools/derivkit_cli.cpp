#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "derivkit/expr.hpp"
#include "derivkit/report.hpp"

namespace {

using namespace derivkit;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerifiedFalse = 1;
constexpr int kExitUsage = 2;

void emit(const json& report) {
    std::cout << report.dump(2) << "\n";
}

int run_check_order(const std::string& expr_text, unsigned n, unsigned trials,
                    std::uint64_t seed) {
    OperatorFunc f = parse_operator(expr_text);
    OrderVerdict v = is_order_n_derivation(f, n, trials, seed);
    json inputs = {{"expr", render(f)}, {"n", n}, {"trials", trials}};
    emit(make_run_report("check-order", inputs, to_json(v), seed));
    std::cerr << (v.is_order_n ? "order-" + std::to_string(n) + " derivation: yes"
                               : "order-" + std::to_string(n) + " derivation: no (witness in report)")
              << "\n";
    return v.is_order_n ? kExitPass : kExitVerifiedFalse;
}

int run_decompose(const std::string& expr_text, unsigned n, unsigned trials, std::uint64_t seed) {
    OperatorFunc f = parse_operator(expr_text);
    LinearSplit split = decompose_linear_part(f, n, trials, seed);
    json inputs = {{"expr", render(f)}, {"n", n}, {"trials", trials}};
    emit(make_run_report("decompose", inputs, to_json(split), seed));
    std::cerr << "lambda = " << render(split.lambda)
              << ", derivation part = " << render(split.derivation_part)
              << (split.verdict.is_order_n ? " (order verified)" : " (order check failed)") << "\n";
    return split.verdict.is_order_n ? kExitPass : kExitVerifiedFalse;
}

int run_poly_decompose(const std::string& expr_text, unsigned n, unsigned probes,
                       std::uint64_t seed) {
    RatFunc p = parse_scalar(expr_text);
    if (p.den() != Poly::one()) {
        std::cerr << "error: expected a polynomial in x, got a proper rational function\n";
        return kExitUsage;
    }
    const Poly poly = p.num();
    BlackBoxFunc box = [&poly](const Rational& q) { return poly.eval(q); };
    json inputs = {{"expr", render_poly(poly, "x")}, {"n", n}, {"probes", probes}};
    try {
        PolyDecomposition d = poly_decompose(box, n, probes, seed);
        emit(make_run_report("poly-decompose", inputs, to_json(d), seed));
        std::cerr << "decomposed into " << d.components.size() << " monomial components\n";
        return kExitPass;
    } catch (const NotPolynomialError& e) {
        json result = {{"error", e.what()},
                       {"witness", {{"x", to_string(e.witness_point)},
                                    {"residual", to_string(e.residual_value)}}}};
        emit(make_run_report("poly-decompose", inputs, result, seed));
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifiedFalse;
    }
}

int run_stabilize(const std::string& fixture, const std::string& lambda_text,
                  const std::string& epsilon_text, unsigned n, unsigned depth, unsigned samples,
                  std::uint64_t seed, const std::string& range_text,
                  const std::string& dump_probes, const std::string& probes_file) {
    Rational range_bound = rational_from_string(range_text);
    BlackBoxFunc f;
    json fixture_json;
    if (fixture == "noisy-linear") {
        Rational lambda = rational_from_string(lambda_text);
        Rational epsilon = rational_from_string(epsilon_text);
        f = make_noisy(lambda, epsilon, seed).base;
        fixture_json = {{"kind", "noisy-linear"}, {"lambda", to_string(lambda)},
                        {"epsilon", to_string(epsilon)}};
    } else if (fixture == "square") {
        f = [](const Rational& x) -> Rational { return x * x; };
        fixture_json = {{"kind", "square"}};
    } else {
        std::cerr << "error: unknown fixture '" << fixture << "'\n";
        return kExitUsage;
    }

    std::vector<std::pair<Rational, Rational>> pairs;
    if (!probes_file.empty()) {
        std::ifstream in(probes_file);
        if (!in) {
            std::cerr << "error: cannot read probe file '" << probes_file << "'\n";
            return kExitUsage;
        }
        std::vector<Rational> flat;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty()) flat.push_back(rational_from_string(line));
        }
        if (flat.empty() || flat.size() % 2 != 0) {
            std::cerr << "error: probe file must hold an even, positive number of rationals\n";
            return kExitUsage;
        }
        for (std::size_t i = 0; i < flat.size(); i += 2) pairs.emplace_back(flat[i], flat[i + 1]);
    } else {
        pairs = generate_sample_pairs(samples, seed, range_bound);
    }

    if (!dump_probes.empty()) {
        std::ofstream out(dump_probes);
        for (const auto& [x, y] : pairs) out << to_string(x) << "\n" << to_string(y) << "\n";
    }

    RecoveryResult r = approx_derivation_recover_with_pairs(f, n, depth, pairs, seed, range_bound);
    json inputs = {{"fixture", fixture_json}, {"n", n}, {"depth", depth},
                   {"samples", static_cast<unsigned>(pairs.size())},
                   {"range_bound", to_string(range_bound)}};
    emit(make_run_report("stabilize", inputs, to_json(r), seed));
    std::cerr << "lambda = " << to_string(r.lambda) << ", epsilon_hat = "
              << to_string(r.report.epsilon_hat) << ", pass = " << (r.report.pass ? "yes" : "no")
              << "\n";
    return r.report.pass ? kExitPass : kExitVerifiedFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus for higher-order derivations over Q(t): order checks, "
                 "linear-part splits, polynomial decomposition, Hyers stabilization"};
    app.require_subcommand(1);

    std::string expr_text;
    unsigned n = 1;
    unsigned trials = 16;
    unsigned probes = 100;
    unsigned depth = 20;
    unsigned samples = 1000;
    std::uint64_t seed = 42;
    std::string lambda_text = "2";
    std::string epsilon_text = "1/100";
    std::string range_text = "10";
    std::string fixture = "noisy-linear";
    std::string dump_probes;
    std::string probes_file;

    auto* check = app.add_subcommand("check-order", "Verify the order-n derivation system");
    check->add_option("expr", expr_text, "operator expression, e.g. \"D^2\"")->required();
    check->add_option("--n", n, "order to check")->required();
    check->add_option("--trials", trials, "random delta-chain trials (default 16)");
    check->add_option("--seed", seed, "RNG seed (default 42)");

    auto* dec = app.add_subcommand("decompose", "Split an operator into derivation + linear part");
    dec->add_option("expr", expr_text, "operator expression, e.g. \"3*id + t*D^2\"")->required();
    dec->add_option("--n", n, "order to verify for the derivation part")->required();
    dec->add_option("--trials", trials, "random delta-chain trials (default 16)");
    dec->add_option("--seed", seed, "RNG seed (default 42)");

    auto* pd = app.add_subcommand("poly-decompose",
                                  "Decompose a polynomial function into monomial traces");
    pd->add_option("expr", expr_text, "polynomial in x, e.g. \"x^2+3*x+1\"")->required();
    pd->add_option("--n", n, "degree bound")->required();
    pd->add_option("--probes", probes, "residual probe count (default 100)");
    pd->add_option("--seed", seed, "RNG seed (default 42)");

    auto* st = app.add_subcommand("stabilize",
                                  "Hyers-stabilize an approximately additive fixture");
    st->add_option("--fixture", fixture, "noisy-linear | square (default noisy-linear)");
    st->add_option("--lambda", lambda_text, "linear core for noisy-linear (default 2)");
    st->add_option("--epsilon", epsilon_text, "designed noise bound (default 1/100)");
    st->add_option("--n", n, "derivation order to report (default 1)");
    st->add_option("--depth", depth, "Hyers iteration depth N (default 20)");
    st->add_option("--samples", samples, "probe pair count (default 1000)");
    st->add_option("--range-bound", range_text, "probe box |x| bound (default 10)");
    st->add_option("--seed", seed, "RNG seed (default 42)");
    st->add_option("--dump-probes", dump_probes, "write probe rationals, one per line");
    st->add_option("--probes-file", probes_file, "load probe rationals instead of sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return run_check_order(expr_text, n, trials, seed);
        if (dec->parsed()) return run_decompose(expr_text, n, trials, seed);
        if (pd->parsed()) return run_poly_decompose(expr_text, n, probes, seed);
        return run_stabilize(fixture, lambda_text, epsilon_text, n, depth, samples, seed,
                             range_text, dump_probes, probes_file);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ElabError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
