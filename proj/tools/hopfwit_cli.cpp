#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfwit/api.hpp"

using namespace hopfwit;
using nlohmann::json;

namespace {

// exit codes: 0 pass / witness found, 1 NoWitness or failed check,
// 2 malformed input or usage error, 3 internal verification failure
constexpr int kOk = 0;
constexpr int kNoWitness = 1;
constexpr int kBadInput = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    std::string pretty = json::parse(text).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << pretty;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        out << pretty;
    }
}

std::string pretty_report(const std::string& report_json) {
    json j = json::parse(report_json);
    std::ostringstream os;
    for (const auto& item : j.at("checks")) {
        os << (item.at("pass").get<bool>() ? "pass" : "FAIL") << "  "
           << item.at("axiom").get<std::string>();
        std::string detail = item.at("detail").get<std::string>();
        if (!item.at("pass").get<bool>() && !detail.empty()) os << "  " << detail;
        os << "\n";
    }
    os << (j.at("ok").get<bool>() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

std::string pretty_catalog(const std::string& report_json) {
    json j = json::parse(report_json);
    std::ostringstream os;
    for (const auto& row : j.at("results"))
        os << (row.at("pass").get<bool>() ? "pass" : "FAIL") << "  "
           << row.at("entry").get<std::string>() << "  " << row.at("solver").get<std::string>()
           << "  " << row.at("outcome").get<std::string>() << " (expected "
           << row.at("expected").get<std::string>() << ")\n";
    os << (j.at("ok").get<bool>() ? "catalog: all assertions passed" : "catalog: FAILURES") << "\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact witnesses for separability, Maschke and Frobenius criteria\n"
                 "over structure-constant presentations of algebras, coalgebras, Hopf\n"
                 "algebras, entwining structures and entwined modules"};
    app.require_subcommand(1);

    std::string level, kind, input, witness_path, out, direction, filter;
    std::string theta_path, fieldext_path, map_path;
    bool as_json = false;

    auto* check = app.add_subcommand("check", "run the axiom checks of a structure level");
    check->add_option("level", level,
                      "algebra|coalgebra|bialgebra|hopf|module|comodule|entwining|entwined|doikoppinen")
        ->required();
    check->add_option("--input", input, "input JSON file")->required();

    auto* solve = app.add_subcommand("solve", "solve for a canonical witness or report NoWitness");
    solve
        ->add_option("kind", kind,
                     "integral|dual_integral|casimir|theta|cocasimir|total_integral|cointegral|"
                     "quantum_integral")
        ->required();
    solve->add_option("--input", input, "input JSON file")->required();
    solve->add_option("--out", out, "witness output file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "re-check an emitted witness against its input");
    verify->add_option("kind", kind, "witness kind")->required();
    verify->add_option("--input", input, "input JSON file")->required();
    verify->add_option("--witness", witness_path, "witness JSON file")->required();

    auto* transport = app.add_subcommand("transport", "map a witness to another witness kind");
    transport
        ->add_option("--direction", direction,
                     "integral_to_idempotent|totalintegral_to_theta|theta_to_totalintegral|"
                     "cocasimir_to_cointegral")
        ->required();
    transport->add_option("--witness", witness_path, "witness JSON file")->required();
    transport->add_option("--input", input, "structures the witness belongs to");
    transport->add_option("--out", out, "output file (stdout when omitted)");

    auto* deform = app.add_subcommand("deform", "deform a splitting map to the stronger level");
    deform->add_option("--theta", theta_path, "theta witness file (entwined deformation)");
    deform->add_option("--fieldext", fieldext_path, "field-extension data file");
    deform->add_option("--map", map_path, "map description JSON")->required();
    deform->add_option("--out", out, "output file (stdout when omitted)");

    auto* catalog = app.add_subcommand("catalog", "run the built-in consistency catalog");
    catalog->add_option("--filter", filter, "only entries whose name contains this substring");
    catalog->add_flag("--json", as_json, "emit the machine-readable report");
    catalog->add_option("--out", out, "report output file");

    try {
        app.parse(argc, argv);
        if (*check) {
            std::string rep = api::check(level, read_file(input));
            std::cout << pretty_report(rep);
            return json::parse(rep).at("ok").get<bool>() ? kOk : kNoWitness;
        }
        if (*solve) {
            auto w = api::solve(kind, read_file(input));
            if (!w) {
                std::cout << "NoWitness\n";
                return kNoWitness;
            }
            write_output(*w, out);
            return kOk;
        }
        if (*verify) {
            std::string rep = api::verify(kind, read_file(input), read_file(witness_path));
            std::cout << pretty_report(rep);
            return json::parse(rep).at("ok").get<bool>() ? kOk : kNoWitness;
        }
        if (*transport) {
            if (input.empty())
                throw ParseError("transport needs --input with the structures the witness belongs to");
            write_output(api::transport(direction, read_file(input), read_file(witness_path)), out);
            return kOk;
        }
        if (*deform) {
            std::string result;
            if (!theta_path.empty())
                result = api::deform_theta(read_file(theta_path), read_file(map_path));
            else if (!fieldext_path.empty())
                result = api::deform_fieldext(read_file(fieldext_path), read_file(map_path));
            else
                throw ParseError("deform needs either --theta or --fieldext");
            write_output(result, out);
            return kOk;
        }
        if (*catalog) {
            uint64_t seed = 0xC0FFEEull;
            if (const char* env = std::getenv("HOPFWIT_SEED")) seed = std::strtoull(env, nullptr, 0);
            std::string rep = api::catalog(filter, seed);
            if (as_json || !out.empty())
                write_output(rep, out);
            else
                std::cout << pretty_catalog(rep);
            return json::parse(rep).at("ok").get<bool>() ? kOk : kNoWitness;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        std::string what = e.what();
        if (what.rfind("internal:", 0) == 0) {
            std::cerr << "internal error: " << what << "\n";
            return kInternal;
        }
        std::cerr << "error: " << what << "\n";
        return kBadInput;
    }
    return kBadInput;
}
