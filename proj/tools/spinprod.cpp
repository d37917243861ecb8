// spinprod: build gamma matrices, graded product modules, and run the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "spinprod/clifford/gamma.hpp"
#include "spinprod/graded/product.hpp"
#include "spinprod/suite/report.hpp"
#include "spinprod/suite/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace spinprod;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw suite::InputError(std::string("bad ") + what + " entry '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw suite::InputError(std::string(what) + " must not be empty");
    return out;
}

int cmd_gamma(int dim, const std::string& signature, const std::string& format) {
    clifford::Signature sig = clifford::Signature::euclidean(dim);
    if (!signature.empty()) {
        const auto pq = parse_int_list(signature, "signature");
        if (pq.size() != 2) throw suite::InputError("signature must be p,q");
        sig = {pq[0], pq[1]};
    }
    const auto rep = clifford::build_gamma(dim, sig);
    if (format == "text") {
        std::cout << suite::gamma_to_text(rep);
    } else {
        std::cout << suite::gamma_to_json(rep).dump() << "\n";
    }
    return kOk;
}

int cmd_product(const std::string& dims_text, const std::string& diag_text, const std::string& scaling_path,
                bool timings) {
    const auto dims = parse_int_list(dims_text, "dims");
    for (int d : dims) {
        if (d < 1) throw suite::InputError("factor dimensions must be positive");
    }
    std::optional<std::vector<std::size_t>> choice;
    if (!diag_text.empty()) {
        choice.emplace();
        for (int i : parse_int_list(diag_text, "diagonalize")) {
            if (i < 1) throw suite::InputError("diagonalize indices are 1-based");
            choice->push_back(static_cast<std::size_t>(i - 1));
        }
        graded::validate_diag_choice(dims, *choice);
    }
    std::optional<std::vector<exact::Matrix>> scaling;
    std::string label = "identity";
    if (!scaling_path.empty()) {
        std::ifstream in(scaling_path);
        if (!in) throw suite::InputError("cannot open scaling file " + scaling_path);
        suite::json j;
        try {
            j = suite::json::parse(in);
        } catch (const std::exception& e) {
            throw suite::InputError("scaling file is not valid JSON: " + std::string(e.what()));
        }
        scaling = suite::parse_scaling(j, dims);
        label = "file";
    }
    const auto report = suite::run_product_suite(dims, std::move(choice), std::move(scaling), label);
    std::cout << suite::to_json(report, timings).dump(2) << "\n";
    if (const auto* fail = report.first_failure()) {
        std::cerr << "verification failed: " << fail->name << " (" << fail->witness << ")\n";
        return kVerifyFailed;
    }
    return kOk;
}

int cmd_verify(int max_dim, int max_factors, bool timings) {
    if (max_dim < 2) throw suite::InputError("--max-dim must be at least 2");
    if (max_factors < 1) throw suite::InputError("--max-factors must be at least 1");
    const auto sweep = suite::run_verify_all(max_dim, max_factors);
    std::cout << suite::to_json(sweep, timings).dump(2) << "\n";
    for (const auto& r : sweep.reports) {
        if (const auto* fail = r.first_failure()) {
            std::cerr << "verification failed for dims";
            for (int d : r.config.dims) std::cerr << ' ' << d;
            std::cerr << " [" << r.config.scaling << "]: " << fail->name << " (" << fail->witness << ")\n";
        }
    }
    return sweep.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spinor representations of Clifford algebras of product spaces"};
    app.require_subcommand(1);

    int dim = 0;
    std::string signature;
    std::string format = "json";
    auto* gamma = app.add_subcommand("gamma", "Print an irreducible gamma-matrix representation");
    gamma->add_option("--dim", dim, "Vector space dimension D >= 1")->required();
    gamma->add_option("--signature", signature, "p,q with p+q == D (default D,0)");
    gamma->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::string dims;
    std::string diagonalize;
    std::string scaling;
    bool timings = false;
    auto* product = app.add_subcommand("product", "Build the graded product module and verify it");
    product->add_option("--dims", dims, "Comma-separated factor dimensions, e.g. 2,3")->required();
    product->add_option("--diagonalize", diagonalize, "1-based odd factors to diagonalize, e.g. 3,4");
    product->add_option("--scaling", scaling, "JSON file with one rational matrix per factor");
    product->add_flag("--timings", timings, "Include per-check elapsed_ms");

    int max_dim = 0;
    int max_factors = 4;
    auto* verify = app.add_subcommand("verify", "Run the suite over every factor composition");
    verify->add_option("--max-dim", max_dim, "Largest total dimension")->required();
    verify->add_option("--max-factors", max_factors, "Largest number of factors (default 4)");
    verify->add_flag("--timings", timings, "Include per-check elapsed_ms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gamma->parsed()) return cmd_gamma(dim, signature, format);
        if (product->parsed()) return cmd_product(dims, diagonalize, scaling, timings);
        if (verify->parsed()) return cmd_verify(max_dim, max_factors, timings);
    } catch (const suite::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
