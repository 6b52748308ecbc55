// orbifold-hkr: command-line driver. Reads one JSON job from --spec or stdin.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orbifold_hkr/cli.hpp"

namespace {

using namespace orbifold_hkr;
using cli::json;

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

int fail(int code, const std::string& what) {
    std::cerr << "orbifold-hkr: " << what << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild (co)homology of orbifolds by twisted sectors"};
    app.set_version_flag("--version", cli::version);
    std::string command;
    std::string spec_path;
    std::optional<std::size_t> t_max;
    bool oracle = false;
    std::optional<std::string> format;
    app.add_option("command", command, "quotient | wps | circle | gamma")
        ->required()
        ->check(CLI::IsMember({"quotient", "wps", "circle", "gamma"}));
    app.add_option("--spec", spec_path, "JSON job file; stdin when omitted");
    app.add_option("--t-max", t_max, "truncation order in the weight");
    app.add_flag("--oracle", oracle, "cross-check every cell against brute-force invariants");
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::exit_code::input_error;
    }

    std::string text;
    if (spec_path.empty()) {
        text = slurp(std::cin);
    } else {
        std::ifstream in(spec_path, std::ios::binary);
        if (!in) {
            return fail(cli::exit_code::input_error, "cannot open " + spec_path);
        }
        text = slurp(in);
    }

    try {
        json doc = text.find_first_not_of(" \t\r\n") == std::string::npos ? json::object() : json::parse(text);
        if (!doc.is_object()) {
            throw SchemaError("$", "top level must be an object");
        }
        if (!doc.contains("command")) {
            doc["command"] = command;
        } else if (doc["command"] != command) {
            throw SchemaError("$.command", "document says " + doc["command"].dump() + " but the command line says " +
                                               command);
        }
        if (t_max) {
            doc["t_max"] = *t_max;
        }
        if (oracle) {
            doc["oracle"] = true;
        }
        if (format) {
            doc["format"] = *format;
        }
        const cli::JobSpec job = cli::parse_jobspec(doc);
        const cli::RunOutcome outcome = cli::run(job);
        std::cout << (job.output == cli::OutputFormat::json ? cli::render_json(outcome.report)
                                                            : cli::render_table(outcome.report));
        if (outcome.exit_code == cli::exit_code::oracle_disagreement) {
            std::cerr << "orbifold-hkr: oracle disagreement at "
                      << outcome.report["oracle"]["first_disagreement"].dump() << '\n';
        }
        return outcome.exit_code;
    } catch (const json::parse_error& e) {
        return fail(cli::exit_code::input_error, std::string("$: malformed JSON: ") + e.what());
    } catch (const InputError& e) {
        return fail(cli::exit_code::input_error, e.what());
    } catch (const CapError& e) {
        return fail(cli::exit_code::cap_exceeded, e.what());
    } catch (const std::exception& e) {
        return fail(cli::exit_code::internal_error, std::string("internal error: ") + e.what());
    }
}
