// Command-line front end: loads biframe definition files, prints verdict
// reports (text or JSON), and runs the embedded verification corpus.

#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "biframe/document.hpp"
#include "biframe/errors.hpp"
#include "biframe/report.hpp"
#include "biframe/verify.hpp"
#include "biframe/version.hpp"

namespace {

using nlohmann::json;
using namespace biframe;

struct GlobalOptions {
    double tol = 1e-10;
    std::uint64_t seed = 20240817;
    bool json_output = false;
    bool deterministic = false;

    ReportSettings settings() const { return ReportSettings{tol, seed, deterministic}; }
};

void print_human(const json& j, const std::string& prefix = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            print_human(*it, key);
        } else {
            std::cout << key << " = " << it->dump() << "\n";
        }
    }
}

void emit(const GlobalOptions& opts, const std::string& command, json result) {
    json envelope = report_envelope(command, opts.settings(), std::move(result));
    if (opts.json_output) {
        std::cout << envelope.dump(2) << "\n";
    } else {
        print_human(envelope["result"]);
        std::cout << "tolerance = " << opts.tol << "\n";
    }
}

// Diagnostic for complex spaces: the defining form need not be real-valued,
// so report its largest imaginary part over random unit vectors. No verdict
// is attached.
double max_imaginary_form(const BiframePair& pair, std::uint64_t seed) {
    if (pair.F.space().field == Field::Real) return 0.0;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int it = 0; it < 32; ++it) {
        Vector v(pair.F.space().dim);
        for (int i = 0; i < pair.F.space().dim; ++i) v(i) = Scalar(gauss(rng), gauss(rng));
        if (v.norm() == 0.0) continue;
        v /= v.norm();
        const Scalar q = quadratic_form(pair, Vec(pair.F.space(), v));
        worst = std::max(worst, std::abs(q.imag()));
    }
    return worst;
}

json input_block(const std::string& path, const LoadedDocument& doc) {
    json j = {{"path", path}};
    if (!doc.name.empty()) j["name"] = doc.name;
    return j;
}

int cmd_bounds(const GlobalOptions& opts, const std::string& path) {
    const LoadedDocument doc = load_document(path);
    const BiframeReport rep = classify(doc.pair, opts.tol);
    const auto fb = single_frame_bounds(doc.pair.F);
    const auto gb = single_frame_bounds(doc.pair.G);
    json result = {{"input", input_block(path, doc)},
                   {"classify", to_json(rep)},
                   {"frame_bounds_F", {{"lower", fb.first}, {"upper", fb.second}}},
                   {"frame_bounds_G", {{"lower", gb.first}, {"upper", gb.second}}}};
    if (doc.pair.F.space().field == Field::Complex)
        result["max_imag_form"] = max_imaginary_form(doc.pair, opts.seed);
    emit(opts, "bounds", std::move(result));
    return 0;
}

int cmd_reconstruct(const GlobalOptions& opts, const std::string& path) {
    const LoadedDocument doc = load_document(path);
    const Space space = doc.pair.F.space();
    double left_worst = 0.0, right_worst = 0.0;
    for (int i = 0; i < space.dim; ++i) {
        Vector e = Vector::Zero(space.dim);
        e(i) = 1.0;
        const auto [left, right] = reconstruct(doc.pair, Vec(space, e), opts.tol);
        left_worst = std::max(left_worst, (left.entries - e).norm());
        right_worst = std::max(right_worst, (right.entries - e).norm());
    }
    const BiframeOperator s = assemble(doc.pair);
    json result = {{"input", input_block(path, doc)},
                   {"condition_number", condition_number(s.S)},
                   {"residual_left", left_worst},
                   {"residual_right", right_worst}};
    emit(opts, "reconstruct", std::move(result));
    return 0;
}

int cmd_dual(const GlobalOptions& opts, const std::string& path, const std::string& side) {
    const LoadedDocument doc = load_document(path);
    BiframePair dual = [&] {
        if (side == "left") return canonical_dual(doc.pair, DualSide::Left, opts.tol);
        if (side == "right") return canonical_dual(doc.pair, DualSide::Right, opts.tol);
        if (!doc.symbol)
            throw ValidationError("symbol: required for --side multiplier");
        const MultiplierOperator mult =
            build_multiplier(*doc.symbol, doc.pair.F, doc.pair.G);
        return multiplier_dual(mult, *doc.symbol, doc.pair.F, doc.pair.G, opts.tol);
    }();
    json result = {{"input", input_block(path, doc)},
                   {"side", side},
                   {"duality_residual", duality_residual(dual)}};
    emit(opts, "dual", std::move(result));
    return 0;
}

int cmd_multiplier(const GlobalOptions& opts, const std::string& path, double lambda1,
                   double lambda2) {
    const LoadedDocument doc = load_document(path);
    const SymbolFunction symbol = doc.symbol ? *doc.symbol : SymbolFunction(
        doc.pair.F.atom_space(),
        std::vector<Scalar>(doc.pair.F.atom_space()->size(), Scalar(1, 0)));
    const MultiplierOperator mult = build_multiplier(symbol, doc.pair.F, doc.pair.G);
    json result = {{"input", input_block(path, doc)},
                   {"symbol_sup_norm", symbol.sup_norm()},
                   {"symbol_default_unit", !doc.symbol.has_value()},
                   {"bessel_F", mult.bessel_f},
                   {"bessel_G", mult.bessel_g},
                   {"norm_bound", mult.norm_bound},
                   {"actual_norm", mult.actual_norm},
                   {"lower_bound_certificate",
                    to_json(lower_bound_certificate(mult, doc.pair.F, doc.pair.G))},
                   {"perturbation_certificate",
                    to_json(perturbation_certificate(mult, doc.pair.F, doc.pair.G, lambda1,
                                                     lambda2))}};
    emit(opts, "multiplier", std::move(result));
    return 0;
}

int cmd_tensor(const GlobalOptions& opts, const std::string& path_a, const std::string& path_b,
               bool check_factorization, bool check_sandwich) {
    const LoadedDocument a = load_document(path_a);
    const LoadedDocument b = load_document(path_b);
    const BiframeReport ra = classify(a.pair, opts.tol);
    const BiframeReport rb = classify(b.pair, opts.tol);
    const TensorBiframePair product = tensor_pair(a.pair, b.pair);
    const BiframeReport rp = classify(product.pair, opts.tol);
    json result = {{"input_left", input_block(path_a, a)},
                   {"input_right", input_block(path_b, b)},
                   {"factor_bounds_left", {{"lower", ra.lower}, {"upper", ra.upper}}},
                   {"factor_bounds_right", {{"lower", rb.lower}, {"upper", rb.upper}}},
                   // Valid product-of-factor bounds alongside the optimal ones.
                   {"product_bounds",
                    {{"lower", ra.lower * rb.lower}, {"upper", ra.upper * rb.upper}}},
                   {"classify", to_json(rp)}};
    if (check_factorization)
        result["factorization_residual"] = tensor_operator_check(a.pair, b.pair);
    if (check_sandwich)
        result["sandwich"] = to_json(tensor_sandwich_check(a.pair, b.pair, opts.tol));
    emit(opts, "tensor", std::move(result));
    return 0;
}

int cmd_verify(const GlobalOptions& opts) {
    VerifyOptions vopts;
    vopts.tol = opts.tol;
    vopts.seed = opts.seed;
    const std::vector<CheckResult> results = verify_corpus(vopts);
    const json report = verify_report_json(results, vopts);
    std::cout << report.dump(2) << "\n";
    if (!opts.json_output)
        for (const CheckResult& r : results)
            std::cerr << (r.pass ? "PASS" : "FAIL") << "  check " << r.id << "  " << r.name
                      << "  (measured " << r.measured << ", threshold " << r.threshold << ")\n";
    return all_pass(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous biframe toolkit: bounds, reconstruction, duals, multipliers, "
                 "tensor products"};
    app.set_version_flag("--version", BIFRAME_VERSION);
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOptions opts;
    app.add_option("--tol", opts.tol, "Numeric tolerance")->capture_default_str();
    app.add_option("--seed", opts.seed, "Seed for randomized suites")->capture_default_str();
    app.add_flag("--json", opts.json_output, "Machine-readable report on stdout");
    app.add_flag("--deterministic", opts.deterministic,
                 "Bit-reproducible reductions and reports");

    std::string path, path_b, side = "right";
    double lambda1 = 0.0, lambda2 = 0.0;
    bool check_fact = false, check_sand = false;

    CLI::App* bounds = app.add_subcommand("bounds", "Optimal bounds and verdict for a pair");
    bounds->add_option("file", path, "Biframe document")->required();

    CLI::App* recon = app.add_subcommand("reconstruct", "Residuals of both representations");
    recon->add_option("file", path, "Biframe document")->required();

    CLI::App* dual = app.add_subcommand("dual", "Canonical or multiplier-induced dual pair");
    dual->add_option("file", path, "Biframe document")->required();
    dual->add_option("--side", side, "left | right | multiplier")
        ->check(CLI::IsMember({"left", "right", "multiplier"}))
        ->capture_default_str();

    CLI::App* mult = app.add_subcommand("multiplier", "Norm bound and certificates");
    mult->add_option("file", path, "Biframe document")->required();
    mult->add_option("--lambda1", lambda1, "Perturbation lambda1")->capture_default_str();
    mult->add_option("--lambda2", lambda2, "Perturbation lambda2")->capture_default_str();

    CLI::App* tensor = app.add_subcommand("tensor", "Tensor product of two pairs");
    tensor->add_option("fileA", path, "Left factor document")->required();
    tensor->add_option("fileB", path_b, "Right factor document")->required();
    tensor->add_flag("--check-factorization", check_fact, "Report factorization residual");
    tensor->add_flag("--check-sandwich", check_sand, "Report spectral sandwich verdict");

    CLI::App* verify = app.add_subcommand("verify-paper", "Run the embedded reference corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(opts, path);
        if (recon->parsed()) return cmd_reconstruct(opts, path);
        if (dual->parsed()) return cmd_dual(opts, path, side);
        if (mult->parsed()) return cmd_multiplier(opts, path, lambda1, lambda2);
        if (tensor->parsed()) return cmd_tensor(opts, path, path_b, check_fact, check_sand);
        if (verify->parsed()) return cmd_verify(opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
