#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "circle.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "group.hpp"
#include "hkr.hpp"
#include "wps.hpp"

namespace orbifold_hkr::cli {

using json = nlohmann::json;

inline constexpr const char* version = "0.1.0";
inline constexpr std::size_t default_t_max = 10;

enum class Command { quotient, wps, circle, gamma };
enum class OutputFormat { json, table };

inline const char* to_string(Command c) {
    switch (c) {
    case Command::quotient:
        return "quotient";
    case Command::wps:
        return "wps";
    case Command::circle:
        return "circle";
    case Command::gamma:
        return "gamma";
    }
    return "?";
}

inline std::optional<Command> command_from_string(std::string_view s) {
    if (s == "quotient") {
        return Command::quotient;
    }
    if (s == "wps") {
        return Command::wps;
    }
    if (s == "circle") {
        return Command::circle;
    }
    if (s == "gamma") {
        return Command::gamma;
    }
    return std::nullopt;
}

struct JobSpec {
    Command command = Command::quotient;
    std::vector<RationalMatrix> generators;
    std::vector<std::uint64_t> weights;
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t t_max = default_t_max;
    std::size_t cap = default_cap;
    bool oracle = false;
    OutputFormat output = OutputFormat::json;
};

namespace detail {

inline std::uint64_t positive_integer(const json& v, const std::string& path, bool allow_zero = false) {
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<long long>() < (allow_zero ? 0 : 1))) {
        throw SchemaError(path, allow_zero ? "expected a nonnegative integer" : "expected a positive integer");
    }
    return v.get<std::uint64_t>();
}

inline Rational rational_entry(const json& v, const std::string& path) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const BadRational& e) {
            throw BadRational(path + ": " + e.what());
        }
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long long>());
    }
    throw SchemaError(path, "expected a rational string such as \"-3/2\"");
}

inline RationalMatrix matrix_value(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) {
        throw SchemaError(path, "expected a nonempty array of rows");
    }
    const std::size_t rows = v.size();
    RationalMatrix m(rows, rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array()) {
            throw SchemaError(row_path, "expected an array of entries");
        }
        if (v[i].size() != rows) {
            throw NonSquareMatrix(row_path + ": row has " + std::to_string(v[i].size()) + " entries, expected " +
                                  std::to_string(rows));
        }
        for (std::size_t j = 0; j < rows; ++j) {
            m(i, j) = rational_entry(v[i][j], row_path + "[" + std::to_string(j) + "]");
        }
    }
    return m;
}

} // namespace detail

/// Validates a job document. Numbers in the payload are checked against the command.
inline JobSpec parse_jobspec(const json& doc) {
    if (!doc.is_object()) {
        throw SchemaError("$", "top level must be an object");
    }
    static const std::set<std::string> known = {"command", "generators", "weights", "n",     "r",
                                                "t_max",   "cap",        "oracle",  "format"};
    for (const auto& [key, value] : doc.items()) {
        if (!known.contains(key)) {
            throw SchemaError("$." + key, "unknown field");
        }
    }
    if (!doc.contains("command") || !doc["command"].is_string()) {
        throw SchemaError("$.command", "missing or not a string");
    }
    const auto cmd = command_from_string(doc["command"].get<std::string>());
    if (!cmd) {
        throw SchemaError("$.command", "unknown command \"" + doc["command"].get<std::string>() + "\"");
    }
    JobSpec job;
    job.command = *cmd;

    const std::map<Command, std::string> payload_key = {
        {Command::quotient, "generators"}, {Command::wps, "weights"}, {Command::circle, "n"}, {Command::gamma, "r"}};
    for (const auto& [c, key] : payload_key) {
        if (c != job.command && doc.contains(key)) {
            throw SchemaError("$." + key, std::string("not allowed for command ") + to_string(job.command));
        }
    }
    const std::string& key = payload_key.at(job.command);
    if (!doc.contains(key)) {
        throw SchemaError("$." + key, std::string("required for command ") + to_string(job.command));
    }
    const json& payload = doc[key];

    switch (job.command) {
    case Command::quotient: {
        if (!payload.is_array() || payload.empty()) {
            throw SchemaError("$.generators", "expected a nonempty array of matrices");
        }
        for (std::size_t k = 0; k < payload.size(); ++k) {
            job.generators.push_back(detail::matrix_value(payload[k], "$.generators[" + std::to_string(k) + "]"));
        }
        const std::size_t dim = job.generators.front().rows();
        for (std::size_t k = 1; k < job.generators.size(); ++k) {
            if (job.generators[k].rows() != dim) {
                throw NonSquareMatrix("$.generators[" + std::to_string(k) + "]: generators have different sizes");
            }
        }
        break;
    }
    case Command::wps:
        if (!payload.is_array() || payload.empty()) {
            throw SchemaError("$.weights", "expected a nonempty array of positive integers");
        }
        for (std::size_t k = 0; k < payload.size(); ++k) {
            job.weights.push_back(detail::positive_integer(payload[k], "$.weights[" + std::to_string(k) + "]"));
        }
        break;
    case Command::circle:
        job.n = detail::positive_integer(payload, "$.n");
        if (job.n < 2) {
            throw SchemaError("$.n", "circle checks need n >= 2");
        }
        break;
    case Command::gamma:
        job.r = detail::positive_integer(payload, "$.r");
        if (job.r < 2) {
            throw SchemaError("$.r", "gamma needs r >= 2");
        }
        break;
    }

    if (doc.contains("t_max")) {
        job.t_max = detail::positive_integer(doc["t_max"], "$.t_max", true);
    }
    if (doc.contains("cap")) {
        job.cap = detail::positive_integer(doc["cap"], "$.cap");
    }
    if (doc.contains("oracle")) {
        if (!doc["oracle"].is_boolean()) {
            throw SchemaError("$.oracle", "expected a boolean");
        }
        job.oracle = doc["oracle"].get<bool>();
    }
    if (doc.contains("format")) {
        const auto& f = doc["format"];
        if (!f.is_string() || (f != "json" && f != "table")) {
            throw SchemaError("$.format", "expected \"json\" or \"table\"");
        }
        job.output = f == "json" ? OutputFormat::json : OutputFormat::table;
    }
    return job;
}

inline JobSpec parse_jobspec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
    return parse_jobspec(doc);
}

// json converts implicitly from strings, so text needs its own exact overloads
inline JobSpec parse_jobspec(const std::string& text) { return parse_jobspec(std::string_view(text)); }
inline JobSpec parse_jobspec(const char* text) { return parse_jobspec(std::string_view(text)); }

inline json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Canonical JSON form of a job; parse_jobspec(to_json(job)) reproduces `job`.
inline json to_json(const JobSpec& job) {
    json doc;
    doc["command"] = to_string(job.command);
    switch (job.command) {
    case Command::quotient: {
        json gens = json::array();
        for (const auto& g : job.generators) {
            gens.push_back(matrix_to_json(g));
        }
        doc["generators"] = std::move(gens);
        break;
    }
    case Command::wps:
        doc["weights"] = job.weights;
        break;
    case Command::circle:
        doc["n"] = job.n;
        break;
    case Command::gamma:
        doc["r"] = job.r;
        break;
    }
    doc["t_max"] = job.t_max;
    doc["cap"] = job.cap;
    doc["oracle"] = job.oracle;
    doc["format"] = job.output == OutputFormat::json ? "json" : "table";
    return doc;
}

inline bool operator==(const JobSpec& a, const JobSpec& b) { return to_json(a) == to_json(b); }

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int internal_error = 1;
inline constexpr int input_error = 2;
inline constexpr int cap_exceeded = 3;
inline constexpr int oracle_disagreement = 4;
} // namespace exit_code

struct RunOutcome {
    json report;
    int exit_code = exit_code::success;
};

/// {"<row>": {"<weight>": "<coefficient>"}}; cohomology weights are s − row.
inline json series_table(const BiSeries& s, Mode mode) {
    json table = json::object();
    for (std::size_t p = 0; p <= s.u_max(); ++p) {
        json row = json::object();
        for (std::size_t d = 0; d <= s.t_max(); ++d) {
            const long weight = mode == Mode::homology ? static_cast<long>(d) : static_cast<long>(d) - static_cast<long>(p);
            row[std::to_string(weight)] = s.at(p, d).str();
        }
        table[std::to_string(p)] = std::move(row);
    }
    return table;
}

inline json oracle_json(const OracleVerdict& v, const char* mode) {
    json out;
    out["checked"] = v.checked;
    out["agreement"] = v.agreement;
    out["cells"] = v.cells;
    if (v.first_disagreement) {
        const auto& c = *v.first_disagreement;
        out["first_disagreement"] = {{"mode", mode},          {"sector", c.sector},
                                     {"row", c.row},           {"d", c.d},
                                     {"molien", c.molien.str()}, {"oracle", std::to_string(c.oracle)}};
    } else {
        out["first_disagreement"] = nullptr;
    }
    return out;
}

inline RunOutcome run_quotient(const JobSpec& job) {
    const MatrixGroup G = MatrixGroup::generate(job.generators, job.cap);
    const auto classes = conjugacy_classes(G);
    const auto sectors = build_sectors(G, classes);
    const HHReport hom = assemble_report(sectors, G.ambient_dim(), job.t_max, Mode::homology);
    const HHReport coh = assemble_report(sectors, G.ambient_dim(), job.t_max, Mode::cohomology);

    RunOutcome out;
    json& r = out.report;
    r["group"] = {{"order", G.order()},
                  {"exponent", G.exponent()},
                  {"ambient_dim", G.ambient_dim()},
                  {"classes", classes.size()},
                  {"abelian", G.is_abelian()}};
    json sector_list = json::array();
    for (std::size_t k = 0; k < sectors.size(); ++k) {
        const auto& s = sectors[k];
        sector_list.push_back({{"index", k},
                               {"representative", matrix_to_json(s.element)},
                               {"class_size", s.cls.members.size()},
                               {"centralizer_order", s.centralizer_order()},
                               {"f_g", s.fixed_dim},
                               {"c_g", s.normal_codim},
                               {"HH", series_table(hom.sectors[k].series, Mode::homology)},
                               {"HH_cohomology", series_table(coh.sectors[k].series, Mode::cohomology)}});
    }
    r["sectors"] = std::move(sector_list);
    r["HH"] = series_table(hom.total, Mode::homology);
    r["HH_cohomology"] = series_table(coh.total, Mode::cohomology);
    r["conventions"] = {
        {"homology", {{"row", hom.conventions.row_index}, {"u", hom.conventions.u_marker}, {"t", hom.conventions.t_marker}}},
        {"cohomology",
         {{"row", coh.conventions.row_index}, {"u", coh.conventions.u_marker}, {"t", coh.conventions.t_marker}}}};

    json oracle;
    if (job.oracle) {
        const auto vh = check_against_oracle(hom, job.t_max);
        const auto vc = check_against_oracle(coh, job.t_max);
        const bool agree = vh.agreement && vc.agreement;
        oracle = {{"checked", true}, {"agreement", agree}, {"cells", vh.cells + vc.cells}};
        if (!vh.agreement) {
            oracle["first_disagreement"] = oracle_json(vh, "homology")["first_disagreement"];
        } else if (!vc.agreement) {
            oracle["first_disagreement"] = oracle_json(vc, "cohomology")["first_disagreement"];
        } else {
            oracle["first_disagreement"] = nullptr;
        }
        if (!agree) {
            out.exit_code = exit_code::oracle_disagreement;
        }
    } else {
        oracle = {{"checked", false}, {"agreement", nullptr}, {"first_disagreement", nullptr}};
    }
    r["oracle"] = std::move(oracle);
    return out;
}

inline RunOutcome run_wps(const JobSpec& job) {
    const WeightedStack W(job.weights);
    RunOutcome out;
    json components = json::array();
    for (const auto& c : inertia_components(W)) {
        components.push_back({{"root", {{"N", c.root_order}, {"k", c.root_index}}},
                              {"order", c.order()},
                              {"support", c.support},
                              {"weights", c.component_weights},
                              {"dimension", c.dimension()}});
    }
    out.report["components"] = std::move(components);
    json hh = json::object();
    for (const auto& [deg, dim] : hh_vector(W)) {
        hh[std::to_string(deg)] = dim;
    }
    out.report["HH"] = std::move(hh);
    out.report["oracle"] = {{"checked", false}, {"agreement", nullptr}, {"first_disagreement", nullptr}};
    return out;
}

inline json homology_json(const std::array<HomologyGroup, 3>& h) {
    return {{"H0", h[0].str()}, {"H1", h[1].str()}, {"H2", h[2].str()}};
}

inline RunOutcome run_gamma(const JobSpec& job) {
    RunOutcome out;
    const auto g = gamma_complex(job.r);
    const auto b = cover_complex(job.r);
    out.report["gamma"] = homology_json(gamma_homology(job.r));
    out.report["gamma"]["euler"] = g.euler_characteristic_from_cells();
    out.report["cover"] = homology_json(cover_homology(job.r));
    out.report["cover"]["euler"] = b.euler_characteristic_from_cells();
    out.report["oracle"] = {{"checked", false}, {"agreement", nullptr}, {"first_disagreement", nullptr}};
    return out;
}

inline RunOutcome run_circle(const JobSpec& job) {
    RunOutcome out;
    const std::size_t n = job.n;
    out.report["fiber_dimension"] = {{"generic", fiber_dimension(n, false)}, {"central", fiber_dimension(n, true)}};
    const auto central = central_complex(n);
    json character = json::array();
    for (const auto& c : central.character) {
        character.push_back(c.str());
    }
    out.report["central_complex"] = {
        {"H0", central.h0}, {"H1", central.h1}, {"trivial_action", central.trivial_action}, {"character", character}};
    const auto generic = generic_fiber_homology(n);
    out.report["generic_fiber"] = {{"H0", generic.h0}, {"H1", generic.h1}};
    out.report["gamma"] = homology_json(gamma_homology(n));
    out.report["cover"] = homology_json(cover_homology(n));
    out.report["oracle"] = {{"checked", false}, {"agreement", nullptr}, {"first_disagreement", nullptr}};
    return out;
}

/// Runs a validated job. Module exceptions propagate; the caller maps them to exit codes.
inline RunOutcome run(const JobSpec& job) {
    RunOutcome out;
    switch (job.command) {
    case Command::quotient:
        out = run_quotient(job);
        break;
    case Command::wps:
        out = run_wps(job);
        break;
    case Command::circle:
        out = run_circle(job);
        break;
    case Command::gamma:
        out = run_gamma(job);
        break;
    }
    out.report["command"] = to_string(job.command);
    out.report["input"] = to_json(job);
    out.report["version"] = version;
    return out;
}

inline std::string render_json(const json& report) { return report.dump(2) + "\n"; }

namespace detail {

inline void render_series_table(std::ostringstream& os, const json& table, const std::string& row_label) {
    std::vector<std::string> weights;
    std::vector<std::string> rows;
    for (const auto& [row, cells] : table.items()) {
        rows.push_back(row);
        for (const auto& [w, v] : cells.items()) {
            if (std::find(weights.begin(), weights.end(), w) == weights.end()) {
                weights.push_back(w);
            }
        }
    }
    auto numeric = [](const std::string& s) { return std::stol(s); };
    std::sort(rows.begin(), rows.end(), [&](auto& a, auto& b) { return numeric(a) < numeric(b); });
    std::sort(weights.begin(), weights.end(), [&](auto& a, auto& b) { return numeric(a) < numeric(b); });
    os << std::setw(8) << (row_label + "\\w");
    for (const auto& w : weights) {
        os << std::setw(6) << w;
    }
    os << '\n';
    for (const auto& row : rows) {
        os << std::setw(8) << row;
        for (const auto& w : weights) {
            const auto& cells = table[row];
            os << std::setw(6) << (cells.contains(w) ? cells[w].get<std::string>() : std::string("."));
        }
        os << '\n';
    }
}

} // namespace detail

/// Human-readable rendering of a report; presentation only.
inline std::string render_table(const json& report) {
    std::ostringstream os;
    const std::string command = report["command"];
    os << "orbifold-hkr " << report["version"].get<std::string>() << "  command: " << command << "\n\n";
    if (command == "quotient") {
        const auto& g = report["group"];
        os << "group order " << g["order"] << ", exponent " << g["exponent"] << ", ambient dimension "
           << g["ambient_dim"] << ", " << g["classes"] << " conjugacy classes\n\n";
        os << std::setw(7) << "sector" << std::setw(12) << "class size" << std::setw(14) << "|Z(g)|" << std::setw(6)
           << "f_g" << std::setw(6) << "c_g" << '\n';
        for (const auto& s : report["sectors"]) {
            os << std::setw(7) << s["index"].get<std::size_t>() << std::setw(12) << s["class_size"].get<std::size_t>()
               << std::setw(14) << s["centralizer_order"].get<std::size_t>() << std::setw(6)
               << s["f_g"].get<std::size_t>() << std::setw(6) << s["c_g"].get<std::size_t>() << '\n';
        }
        os << "\nHH_p (rows p, columns weight)\n";
        detail::render_series_table(os, report["HH"], "p");
        os << "\nHH^k (rows k = p + c_g, columns weight)\n";
        detail::render_series_table(os, report["HH_cohomology"], "k");
        const auto& o = report["oracle"];
        if (o["checked"].get<bool>()) {
            os << "\noracle: " << (o["agreement"].get<bool>() ? "ok" : "DISAGREEMENT") << " (" << o["cells"]
               << " cells)\n";
        }
    } else if (command == "wps") {
        os << std::setw(6) << "k/N" << std::setw(8) << "order" << std::setw(12) << "dimension"
           << "  support\n";
        for (const auto& c : report["components"]) {
            std::string support;
            for (const auto& i : c["support"]) {
                support += (support.empty() ? "" : ",") + std::to_string(i.get<std::size_t>());
            }
            os << std::setw(6)
               << (std::to_string(c["root"]["k"].get<std::uint64_t>()) + "/" +
                   std::to_string(c["root"]["N"].get<std::uint64_t>()))
               << std::setw(8) << c["order"].get<std::uint64_t>() << std::setw(12) << c["dimension"].get<std::size_t>()
               << "  {" << support << "}\n";
        }
        os << "\nHH:";
        for (const auto& [deg, dim] : report["HH"].items()) {
            os << "  HH_" << deg << " = " << dim.get<std::uint64_t>();
        }
        os << '\n';
    } else {
        for (const auto& [key, value] : report.items()) {
            if (key == "command" || key == "input" || key == "version" || key == "oracle") {
                continue;
            }
            os << key << ": " << value.dump() << '\n';
        }
    }
    return os.str();
}

} // namespace orbifold_hkr::cli
