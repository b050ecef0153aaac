// Command-line surface: every subcommand emits one JSON document on stdout.
// Exit codes: 0 success, 1 a verification failed (counterexample in the
// output), 2 usage error.

#include "wbs/duality.hpp"
#include "wbs/json_io.hpp"
#include "wbs/presentation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace wbs;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Guards {
    bool force = false;
    int enumeration() const { return force ? 10 : kEnumerationGuard; }
    std::size_t tensor() const { return force ? 1000000 : kTensorDimGuard; }
    std::size_t centralizer() const { return force ? 5000 : kCentralizerGuard; }
};

std::optional<RankMode> parse_mode(const std::string& mode) {
    if (mode.empty()) return std::nullopt;
    if (mode == "exact") return RankMode::exact;
    if (mode == "modular") return RankMode::modular;
    throw CLI::ValidationError("--mode must be exact or modular");
}

int emit(const std::string& json, bool ok) {
    std::cout << json << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"walled Brauer superalgebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Guards guards;
    std::uint64_t seed = kDefaultSeed;
    app.add_flag("--force", guards.force, "raise size guards (use with care)");
    app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();

    int n = 2, r = -1, s = -1, k = -1, trials = 0;
    std::string left, right, mode;

    auto add_shape = [&](CLI::App* cmd, bool need_rs) {
        auto* ro = cmd->add_option("--r", r, "left tensor factors");
        auto* so = cmd->add_option("--s", s, "right tensor factors");
        if (need_rs) {
            ro->required();
            so->required();
        }
        return cmd;
    };

    auto* mul = app.add_subcommand("mul", "multiply two diagrams");
    mul->add_option("--left", left, "left diagram JSON file")->required();
    mul->add_option("--right", right, "right diagram JSON file")->required();

    auto* enum_cmd = app.add_subcommand("enum", "enumerate basis diagrams");
    enum_cmd->add_option("--r", r, "");
    enum_cmd->add_option("--s", s, "");
    enum_cmd->add_option("--k", k, "");

    auto* matrix_cmd = app.add_subcommand("matrix", "representation matrix of a diagram");
    matrix_cmd->add_option("--n", n, "")->required();
    matrix_cmd->add_option("--left", left, "diagram JSON file")->required();
    matrix_cmd->add_option("--r", r, "");
    matrix_cmd->add_option("--s", s, "");

    auto* duality = add_shape(app.add_subcommand("duality", "certify the mixed duality"), true);
    duality->add_option("--n", n, "")->required();
    duality->add_option("--mode", mode, "exact|modular");

    auto* sduality = app.add_subcommand("sergeev-duality", "certify the Sergeev duality");
    sduality->add_option("--n", n, "")->required();
    sduality->add_option("--k", k, "")->required();
    sduality->add_option("--mode", mode, "exact|modular");

    auto* relations = add_shape(app.add_subcommand("relations", "check the presentation"), true);
    relations->add_option("--n", n, "also check matrix relations at this n")->default_val(0);

    auto* flip_square =
        add_shape(app.add_subcommand("flip-square", "check the flip commuting square"), true);
    flip_square->add_option("--n", n, "")->required();

    auto* assoc = add_shape(app.add_subcommand("assoc", "sampled associativity check"), true);
    assoc->add_option("--trials", trials, "")->default_val(1000);

    auto* dims = add_shape(app.add_subcommand("dims", "dimension formulas"), true);

    auto* decompose = app.add_subcommand("decompose", "basis-form decomposition");
    decompose->add_option("--left", left, "walled diagram JSON file")->required();

    auto* flip_cmd = add_shape(app.add_subcommand("flip", "signed flip of a k-superdiagram"), true);
    flip_cmd->add_option("--left", left, "k-superdiagram JSON file")->required();

    try {
        app.parse(argc, argv);

        if (mul->parsed()) {
            AnyDiagram a = parse_diagram(slurp(left));
            AnyDiagram b = parse_diagram(slurp(right));
            if (a.index() != b.index()) {
                throw std::invalid_argument("mul needs two diagrams of the same kind");
            }
            if (std::holds_alternative<WalledDiagram>(a)) {
                auto [prod, report] = walled_mul(std::get<WalledDiagram>(a),
                                                 std::get<WalledDiagram>(b));
                std::string body = element_to_json(prod);
                body.back() = ',';
                return emit(body + "\"sign_report\":" + sign_report_to_json(report) + "}", true);
            }
            auto [prod, report] =
                sergeev_mul(std::get<KSuperDiagram>(a), std::get<KSuperDiagram>(b));
            std::string body = element_to_json(prod);
            body.back() = ',';
            return emit(body + "\"sign_report\":" + sign_report_to_json(report) + "}", true);
        }

        if (enum_cmd->parsed()) {
            std::string out = "{\"diagrams\":[";
            bool first = true;
            if (k >= 1) {
                for (const auto& d : enumerate_k(k, guards.enumeration())) {
                    if (!first) out += ",";
                    first = false;
                    out += d.serialize();
                }
            } else if (r >= 0 && s >= 0) {
                for (const auto& d : enumerate_walled(r, s, guards.enumeration())) {
                    if (!first) out += ",";
                    first = false;
                    out += d.serialize();
                }
            } else {
                throw CLI::ValidationError("enum needs --k or both --r and --s");
            }
            return emit(out + "]}", true);
        }

        if (matrix_cmd->parsed()) {
            AnyDiagram d = parse_diagram(slurp(left));
            SparseExactMatrix m;
            if (std::holds_alternative<WalledDiagram>(d)) {
                check_tensor_guard(n, std::get<WalledDiagram>(d).size(), guards.tensor());
                m = psi_matrix(std::get<WalledDiagram>(d), n);
            } else {
                check_tensor_guard(n, std::get<KSuperDiagram>(d).k, guards.tensor());
                m = phi_matrix(std::get<KSuperDiagram>(d), n);
            }
            return emit(matrix_to_json(m), true);
        }

        if (duality->parsed()) {
            auto report =
                verify_mixed_duality(n, r, s, seed, parse_mode(mode), guards.centralizer());
            return emit(duality_report_to_json(report), report.all_checks_pass());
        }

        if (sduality->parsed()) {
            auto report =
                verify_sergeev_duality(n, k, seed, parse_mode(mode), guards.centralizer());
            return emit(duality_report_to_json(report), report.all_checks_pass());
        }

        if (relations->parsed()) {
            auto report = check_presentation_relations(r, s);
            std::string out = "{\"presentation\":" + relation_report_to_json(report);
            bool ok = report.all_pass();
            if (n > 0) {
                auto matrix_checks = verify_centralizer_relations(n, r, s, guards.centralizer());
                out += ",\"matrix_checks\":" + checks_to_json(matrix_checks);
                for (const auto& entry : matrix_checks) ok &= entry.pass;
            }
            return emit(out + "}", ok);
        }

        if (flip_square->parsed()) {
            auto checks = verify_flip_square(n, r, s, guards.centralizer());
            bool ok = true;
            for (const auto& entry : checks) ok &= entry.pass;
            return emit("{\"checks\":" + checks_to_json(checks) + "}", ok);
        }

        if (assoc->parsed()) {
            auto basis = enumerate_walled(r, s, guards.enumeration());
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            for (int t = 0; t < trials; ++t) {
                auto a = walled_element_of(basis[pick(rng)]);
                auto b = walled_element_of(basis[pick(rng)]);
                auto c = walled_element_of(basis[pick(rng)]);
                if (!(elem_mul(elem_mul(a, b), c) == elem_mul(a, elem_mul(b, c)))) {
                    std::string out = "{\"trials\":" + std::to_string(trials) +
                                      ",\"pass\":false,\"counterexample\":{\"a\":" +
                                      element_to_json(a) + ",\"b\":" + element_to_json(b) +
                                      ",\"c\":" + element_to_json(c) + "}}";
                    return emit(out, false);
                }
            }
            return emit("{\"trials\":" + std::to_string(trials) + ",\"pass\":true}", true);
        }

        if (dims->parsed()) {
            auto pair = dim_formulas(r, s);
            std::size_t enumerated = enumerate_walled(r, s, guards.enumeration()).size();
            return emit("{\"factorial\":" + std::to_string(pair.factorial_form) +
                            ",\"sum\":" + std::to_string(pair.sum_form) +
                            ",\"enumerated\":" + std::to_string(enumerated) + "}",
                        true);
        }

        if (decompose->parsed()) {
            WalledDiagram d = parse_walled(slurp(left));
            auto form = decompose_to_basis_form(d);
            bool ok = eval_basis_form(form) == walled_element_of(d);
            return emit("{\"form\":" + basis_form_to_json(form) +
                            ",\"round_trip\":" + (ok ? "true" : "false") + "}",
                        ok);
        }

        if (flip_cmd->parsed()) {
            KSuperDiagram d = parse_k(slurp(left));
            auto [image, sign] = signed_flip(d, r, s);
            return emit("{\"sign\":" + std::to_string(sign) + ",\"diagram\":" + image.serialize() +
                            "}",
                        true);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
