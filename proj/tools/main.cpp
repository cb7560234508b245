// Command-line front end: synthesize witness matrices, verify certificates,
// classify/decompose polynomials, and run the seeded self-test suite.
//
// Exit codes: 0 success, 1 clean negative result (verification mismatch or
// self-test failure), 2 usage error, 3 domain error, 4 unsupported input.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "witgen/json_io.hpp"
#include "witgen/selftest.hpp"

namespace {

using witgen::json;

std::string load_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) witgen::raise(witgen::ErrorCode::ParseError, "cannot open file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

witgen::MultilinearPoly load_poly(const std::string& arg) {
    std::string text = load_arg(arg);
    size_t at = text.find_first_not_of(" \t\r\n");
    if (at != std::string::npos && text[at] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded())
            witgen::raise(witgen::ErrorCode::ParseError, "invalid polynomial JSON");
        return witgen::poly_from_json(j);
    }
    return witgen::parse_poly(text);
}

json load_json(const std::string& arg, const char* what) {
    json j = json::parse(load_arg(arg), nullptr, false);
    if (j.is_discarded())
        witgen::raise(witgen::ErrorCode::ParseError, std::string("invalid JSON for ") + what);
    return j;
}

int exit_code_for(witgen::ErrorCode code) {
    switch (code) {
        case witgen::ErrorCode::ParseError:
            return 2;
        case witgen::ErrorCode::NotSupported:
        case witgen::ErrorCode::RadicandMismatch:
            return 4;
        default:
            return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact witness synthesis for multilinear polynomial images"};
    app.require_subcommand(1);

    std::string poly_arg, target_arg, witness_arg;
    int n_flag = 0;
    uint64_t seed = 1;
    witgen::SelftestConfig st;

    CLI::App* syn = app.add_subcommand("synthesize", "construct verified witness matrices");
    syn->add_option("--poly", poly_arg, "polynomial (text, JSON, or @file)")->required();
    syn->add_option("--target", target_arg, "target matrix (JSON or @file)")->required();
    syn->add_option("--n", n_flag, "expected matrix dimension (consistency check)");
    syn->add_option("--seed", seed, "seed for randomized searches");

    CLI::App* ver = app.add_subcommand("verify", "check a witness certificate exactly");
    ver->add_option("--poly", poly_arg, "polynomial (text, JSON, or @file)")->required();
    ver->add_option("--witnesses", witness_arg, "witness matrices (JSON array or @file)")
        ->required();
    ver->add_option("--target", target_arg, "target matrix (JSON or @file)")->required();

    CLI::App* dec = app.add_subcommand("decompose", "classify a polynomial");
    dec->add_option("--poly", poly_arg, "polynomial (text, JSON, or @file)")->required();

    CLI::App* self = app.add_subcommand("selftest", "run the seeded property suite");
    self->add_option("--trials", st.trials, "base trial count");
    self->add_option("--seed", st.seed, "suite seed");
    self->add_option("--nmin", st.nmin, "minimum dimension");
    self->add_option("--nmax", st.nmax, "maximum dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*syn) {
            witgen::MultilinearPoly f = load_poly(poly_arg);
            witgen::Matrix d = witgen::matrix_from_json(load_json(target_arg, "target"));
            if (n_flag != 0 && static_cast<size_t>(n_flag) != d.dim())
                witgen::raise(witgen::ErrorCode::DimensionMismatch,
                              "--n does not match the target dimension");
            witgen::WitnessReport rep = witgen::synthesize(f, d, seed);
            std::cout << witgen::report_to_json(rep).dump(2) << "\n";
            std::cerr << "synthesized " << rep.witnesses.size() << " witnesses, n=" << d.dim()
                      << ", verified=" << (rep.verified ? "true" : "false") << "\n";
            return rep.verified ? 0 : 3;
        }
        if (*ver) {
            witgen::MultilinearPoly f = load_poly(poly_arg);
            auto ws = witgen::matrices_from_json(load_json(witness_arg, "witnesses"));
            witgen::Matrix d = witgen::matrix_from_json(load_json(target_arg, "target"));
            bool equal = witgen::verify(f, ws, d);
            std::cout << json{{"equal", equal}}.dump(2) << "\n";
            std::cerr << (equal ? "certificate holds exactly" : "certificate does NOT hold")
                      << "\n";
            return equal ? 0 : 1;
        }
        if (*dec) {
            witgen::MultilinearPoly f = load_poly(poly_arg);
            witgen::SynthesisPlan plan = witgen::classify(f);
            json out = witgen::plan_to_json(plan);
            if (f.arity() == 4 && witgen::is_proper(f))
                out["decomposition"] = witgen::decomposition_to_json(witgen::proper_decompose(f));
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*self) {
            witgen::SelftestReport rep = witgen::run_selftest(st);
            std::cout << rep.text();
            std::cerr << (rep.all_pass() ? "all criteria passed" : "FAILURES present") << "\n";
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const witgen::Error& e) {
        std::cout << json{{"error", witgen::error_code_name(e.code())}, {"message", e.what()}}
                         .dump(2)
                  << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
