// Copyright 2026 The qdsc Authors
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

#include "cli/commands.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdsc/bounds.h"
#include "qdsc/catalog.h"
#include "qdsc/code_io.h"
#include "qdsc/errors.h"
#include "qdsc/qds.h"
#include "qdsc/schemes.h"

namespace qdsc::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
    std::string data_dir;
    bool json = false;

    std::optional<fs::path> data_path() const {
        return data_dir.empty() ? std::nullopt : std::optional<fs::path>(data_dir);
    }
};

struct NamedCode {
    std::string name;
    QuantumCode code;
};

NamedCode resolve_code(const std::string& spec, bool force_subsystem) {
    if (fs::is_regular_file(spec)) {
        auto file = read_pauli_code(spec);
        file.subsystem = file.subsystem || force_subsystem;
        return {spec, to_quantum_code(file)};
    }
    auto code = catalog(spec);
    if (force_subsystem && std::holds_alternative<StabilizerCode>(code)) {
        auto rows = measured_rows(code);
        return {spec, make_subsystem(std::vector<F4Vector>(rows.begin(), rows.end()))};
    }
    return {spec, std::move(code)};
}

BinaryLinearCode resolve_sm(const std::string& spec, const Options& opts) {
    if (fs::is_regular_file(spec)) {
        return BinaryLinearCode(read_binary_rows(spec), fs::path(spec).filename().string());
    }
    return sm_catalog(spec, opts.data_path());
}

std::string base_notation(const QuantumCode& code, std::size_t d) {
    std::string out = "[[" + std::to_string(code_length(code)) + ",";
    std::visit(
        [&](const auto& c) {
            out += std::to_string(c.k()) + ",";
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, SubsystemCode>) {
                out += std::to_string(c.r()) + ",";
            }
        },
        code);
    return out + std::to_string(d) + "]]";
}

// Report shared by check and construct.
json qds_report(const std::string& name, const QDSCode& qds, std::size_t base_d, std::size_t qds_d) {
    const auto& base = qds.base();
    json j;
    j["code"] = name;
    j["n"] = qds.n();
    j["m"] = measured_rows(base).size();
    std::visit(
        [&](const auto& c) {
            j["k"] = c.k();
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, SubsystemCode>) {
                j["subsystem"] = true;
                j["r"] = c.r();
                j["impure"] = nullptr;
            } else {
                j["subsystem"] = false;
                j["r"] = 0;
                j["impure"] = is_impure(c, base_d);
            }
        },
        base);
    j["distance"] = base_d;
    j["sm"] = {{"name", qds.sm().name()}, {"length", qds.sm().length()}, {"dimension", qds.sm().dimension()}};
    j["l"] = qds.l();
    j["qds_distance"] = qds_d;
    json elems = json::array();
    for (const auto& e : qds.measured_elements()) {
        elems.push_back(e.to_pauli());
    }
    j["measured_elements"] = elems;
    j["weights"] = qds.weights();
    j["total_measurements"] = qds.total_measurements();
    QDSParams p{qds.n(), j["k"].get<std::size_t>(), j["r"].get<std::size_t>(), base_d, qds.l(),
                j["subsystem"].get<bool>()};
    j["notation"] = p.notation();
    j["qds"] = qds_d >= base_d;
    j["verdict"] = p.notation() + " QDS: " + (qds_d >= base_d ? "yes" : "no");
    return j;
}

void print_report(std::ostream& out, const json& j) {
    auto row = [&](const char* key, const std::string& value) {
        out << std::left << std::setw(20) << key << value << '\n';
    };
    row("code", j["code"].get<std::string>());
    std::string params = "n=" + std::to_string(j["n"].get<int>()) + " k=" + std::to_string(j["k"].get<int>()) +
                         " m=" + std::to_string(j["m"].get<int>());
    if (j["subsystem"].get<bool>()) {
        params += " r=" + std::to_string(j["r"].get<int>());
    }
    row("parameters", params);
    row("impure", j["impure"].is_null() ? "n/a" : (j["impure"].get<bool>() ? "yes" : "no"));
    row("distance", std::to_string(j["distance"].get<int>()));
    row("sm code", j["sm"]["name"].get<std::string>() + " [" + std::to_string(j["sm"]["length"].get<int>()) + "," +
                       std::to_string(j["sm"]["dimension"].get<int>()) + "]");
    row("qds distance", std::to_string(j["qds_distance"].get<int>()));
    std::string weights;
    for (const auto& w : j["weights"]) {
        weights += (weights.empty() ? "" : " ") + std::to_string(w.get<int>());
    }
    row("weights", weights);
    row("total measurements", std::to_string(j["total_measurements"].get<int>()));
    out << j["verdict"].get<std::string>() << '\n';
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) {
        throw ParseError("cannot write " + path);
    }
    return f;
}

// ---- catalog ----

int cmd_catalog_list(const Options& opts, std::ostream& out) {
    json j;
    j["quantum"] = json::array();
    for (const auto& e : catalog_entries()) {
        auto code = catalog(e.name);
        std::size_t d = min_distance(code);
        j["quantum"].push_back({{"name", e.name}, {"parameters", base_notation(code, d)}, {"description", e.description}});
    }
    j["sm"] = json::array();
    for (const auto& name : sm_catalog_names()) {
        j["sm"].push_back({{"name", name}, {"import_only", sm_is_import_only(name)}});
    }
    if (opts.json) {
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "quantum codes\n";
    for (const auto& e : j["quantum"]) {
        out << "  " << std::left << std::setw(20) << e["name"].get<std::string>() << std::setw(14)
            << e["parameters"].get<std::string>() << e["description"].get<std::string>() << '\n';
    }
    out << "sm codes\n";
    for (const auto& e : j["sm"]) {
        out << "  " << e["name"].get<std::string>() << (e["import_only"].get<bool>() ? "  (import only)" : "") << '\n';
    }
    return kOk;
}

int cmd_catalog_show(const Options& opts, const std::string& name, std::ostream& out) {
    bool quantum = false;
    for (const auto& e : catalog_entries()) {
        quantum = quantum || e.name == name;
    }
    if (quantum) {
        const auto& entry = catalog_entry(name);
        if (opts.json) {
            out << json{{"name", entry.name}, {"subsystem", entry.subsystem}, {"rows", entry.rows}}.dump(2) << '\n';
        } else {
            std::vector<F4Vector> rows;
            for (const auto& r : entry.rows) {
                rows.push_back(F4Vector::from_pauli(r));
            }
            write_pauli_code(out, rows, entry.subsystem, entry.description);
        }
        return kOk;
    }
    auto code = sm_catalog(name, opts.data_path());
    if (opts.json) {
        json rows = json::array();
        for (const auto& r : code.generator()) {
            rows.push_back(r.str());
        }
        out << json{{"name", code.name()}, {"length", code.length()}, {"dimension", code.dimension()}, {"rows", rows}}
                   .dump(2)
            << '\n';
    } else {
        write_binary_rows(out, code.generator(),
                          code.name() + " [" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) +
                              "] systematic generator");
    }
    return kOk;
}

// ---- check / construct ----

int cmd_check(const Options& opts, const std::string& code_spec, const std::string& sm_spec, bool subsystem,
              std::ostream& out) {
    auto named = resolve_code(code_spec, subsystem);
    std::size_t m = measured_rows(named.code).size();
    auto sm = sm_spec.empty() ? BinaryLinearCode::identity(m) : resolve_sm(sm_spec, opts);
    std::size_t base_d = min_distance(named.code);
    auto qds = build_qds(named.code, sm);
    auto report = qds_report(named.name, qds, base_d, qds_min_distance(qds));
    if (opts.json) {
        out << report.dump(2) << '\n';
    } else {
        print_report(out, report);
    }
    return kOk;
}

int cmd_construct(const Options& opts, const std::string& code_spec, const std::string& sm_spec, bool subsystem,
                  const std::string& out_path, std::ostream& out) {
    auto named = resolve_code(code_spec, subsystem);
    std::size_t base_d = min_distance(named.code);
    auto qds = sm_spec.empty() ? augment_parity(named.code) : build_qds(named.code, resolve_sm(sm_spec, opts));
    std::size_t qds_d = qds_min_distance(qds);
    auto report = qds_report(named.name, qds, base_d, qds_d);
    if (!out_path.empty()) {
        auto f = open_output(out_path);
        write_pauli_code(f, qds.measured_elements(), false,
                         report["notation"].get<std::string>() + " measured elements of " + named.name);
    }
    if (opts.json) {
        out << report.dump(2) << '\n';
    } else {
        print_report(out, report);
    }
    return kOk;
}

// ---- search-impure ----

int cmd_search_impure(const Options& opts, const std::string& code_spec, const std::string& out_path,
                      std::ostream& out, std::ostream& err) {
    auto named = resolve_code(code_spec, false);
    const auto* stab = std::get_if<StabilizerCode>(&named.code);
    if (stab == nullptr) {
        throw PreconditionError("search-impure needs a stabilizer code");
    }
    auto result = impure_zero_redundancy(*stab);
    std::string notation = "[[" + std::to_string(stab->n()) + "," + std::to_string(stab->k()) + ",3:0]]";
    std::ostringstream text;
    write_pauli_code(text, result.rows, false,
                     notation + " generators for " + named.name + "\npivot " + result.pivot.to_pauli() +
                         ", modifier " + result.modifier.str());
    // The written form must re-parse to the same rows and re-verify.
    auto reparsed = parse_pauli_code(text.str(), "<search-impure output>");
    if (reparsed.rows != result.rows || !verifies_zero_redundancy(reparsed.rows)) {
        err << "error: written generators failed re-verification\n";
        return kDefect;
    }
    if (!out_path.empty()) {
        open_output(out_path) << text.str();
    }
    if (opts.json) {
        json rows = json::array();
        for (const auto& r : result.rows) {
            rows.push_back(r.to_pauli());
        }
        out << json{{"code", named.name},
                    {"notation", notation},
                    {"pivot", result.pivot.to_pauli()},
                    {"modifier", result.modifier.str()},
                    {"strings_examined", result.strings_examined},
                    {"pivots_tried", result.pivots_tried},
                    {"rows", rows},
                    {"verified", true}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << std::left << std::setw(20) << "pivot" << result.pivot.to_pauli() << '\n'
        << std::setw(20) << "modifier" << result.modifier.str() << '\n'
        << std::setw(20) << "strings examined" << result.strings_examined << " (pivots tried " << result.pivots_tried
        << ")\n";
    if (out_path.empty()) {
        out << text.str();
    } else {
        out << std::setw(20) << "written" << out_path << '\n';
    }
    out << notation << " QDS: yes\n";
    return kOk;
}

// ---- bounds ----

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            auto v = std::stoull(text);
            return {v, v};
        }
        return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("invalid range '" + text + "', expected a..b");
    }
}

int cmd_bounds(const Options& opts, const std::string& table, const std::vector<std::uint64_t>& check,
               std::uint64_t families, std::ostream& out) {
    int chosen = !table.empty() + !check.empty() + (families != 0);
    if (chosen != 1) {
        throw ParseError("bounds needs exactly one of --table, --check, --families");
    }
    if (!table.empty()) {
        auto [lo, hi] = parse_range(table);
        if (lo > hi) {
            throw ParseError("empty range " + table);
        }
        auto rows = region_table(lo, hi);
        if (opts.json) {
            json j = json::array();
            for (const auto& r : rows) {
                j.push_back({{"n", r.n},
                             {"singleton_k", r.singleton_k},
                             {"hamming_k", r.hamming_k},
                             {"impure_k", r.impure_k},
                             {"conjecture_k", r.conjecture_k}});
            }
            out << j.dump(2) << '\n';
            return kOk;
        }
        out << "n,singleton_k,hamming_k,impure_k,conjecture_k\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.singleton_k << ',' << r.hamming_k << ',' << r.impure_k << ',' << r.conjecture_k
                << '\n';
        }
        return kOk;
    }
    if (!check.empty()) {
        if (check.size() < 2 || check.size() > 4) {
            throw ParseError("--check takes n k [d [l]]");
        }
        CodeParams p{check[0], check[1], check.size() > 2 ? check[2] : 3, check.size() > 3 ? check[3] : 0};
        if (p.k >= p.n) {
            throw ParseError("--check needs k < n");
        }
        std::vector<std::pair<std::string, bool>> verdicts{
            {"qds_hamming", qds_hamming(p)},
            {"quantum_hamming", quantum_hamming(p.n, p.k)},
            {"impure_bound", impure_bound(p.n, p.k)},
            {"conjectured_bound", conjectured_bound(p.n, p.k)},
            {"singleton", singleton_d3(p.n, p.k)},
        };
        if (opts.json) {
            json j{{"n", p.n}, {"k", p.k}, {"d", p.d}, {"l", p.l}};
            for (const auto& [name, ok] : verdicts) {
                j[name] = ok;
            }
            out << j.dump(2) << '\n';
            return kOk;
        }
        out << "n=" << p.n << " k=" << p.k << " d=" << p.d << " l=" << p.l << '\n';
        for (const auto& [name, ok] : verdicts) {
            out << "  " << std::left << std::setw(20) << name << (ok ? "satisfied" : "violated") << '\n';
        }
        if (p.d != 3) {
            out << "  (impure, conjectured and singleton checks are the distance-3 forms)\n";
        }
        return kOk;
    }
    auto entries = pure_only_families(families);
    if (opts.json) {
        json j = json::array();
        for (const auto& e : entries) {
            j.push_back({{"family", e.family}, {"a", e.a}, {"ell", e.ell}, {"n", e.n}, {"k", e.k}});
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "family,a,ell,n,k\n";
    for (const auto& e : entries) {
        out << e.family << ',' << e.a << ',' << e.ell << ',' << e.n << ',' << e.k << '\n';
    }
    return kOk;
}

// ---- simulate ----

std::vector<double> parse_grid(const std::string& text) {
    auto fail = [&]() -> std::vector<double> {
        throw ParseError("invalid --pm-log2 '" + text + "', expected a value or a..b:step");
    };
    try {
        auto dots = text.find("..");
        if (dots == std::string::npos) {
            std::size_t used = 0;
            double v = std::stod(text, &used);
            if (used != text.size()) return fail();
            return {v};
        }
        auto colon = text.find(':', dots);
        if (colon == std::string::npos) return fail();
        double a = std::stod(text.substr(0, dots));
        double b = std::stod(text.substr(dots + 2, colon - dots - 2));
        double step = std::abs(std::stod(text.substr(colon + 1)));
        if (!(step > 0)) return fail();
        auto count = static_cast<std::size_t>(std::floor(std::abs(b - a) / step + 1e-9)) + 1;
        double dir = b >= a ? 1.0 : -1.0;
        std::vector<double> grid;
        for (std::size_t i = 0; i < count; ++i) {
            // Rounded to 1e-9 so that grids print cleanly.
            grid.push_back(std::round((a + dir * step * static_cast<double>(i)) * 1e9) / 1e9);
        }
        return grid;
    } catch (const std::logic_error&) {
        return fail();
    }
}

struct SimulateArgs {
    std::string scheme;
    std::string pm;
    std::string method = "auto";
    std::string decoder = "ml";
    std::string out;
    std::int64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t chunk = 1 << 16;
    unsigned threads = 0;
};

int cmd_simulate(const Options& opts, const SimulateArgs& a, std::ostream& out) {
    if (a.trials < 1) {
        throw ParseError("--trials must be at least 1");
    }
    SweepMethod method;
    if (a.method == "exact") {
        method = SweepMethod::kExact;
    } else if (a.method == "mc") {
        method = SweepMethod::kMonteCarlo;
    } else if (a.method == "auto") {
        method = SweepMethod::kAuto;
    } else {
        throw ParseError("--method must be exact, mc or auto");
    }
    auto grid = parse_grid(a.pm);
    for (double x : grid) {
        if (x > -1.0) {
            throw ParseError("--pm-log2 values must be <= -1 (p_m <= 1/2)");
        }
    }
    auto scheme = build_scheme(a.scheme, opts.data_path(), parse_decoder(a.decoder));
    MonteCarloOptions mc{static_cast<std::uint64_t>(a.trials), a.seed, a.chunk, a.threads};
    bool to_stdout = a.out.empty();
    out << (to_stdout ? "# " : "") << "total_measurements: " << scheme.total_measurements() << std::endl;
    auto rows = sweep(scheme, grid, method, mc);
    if (to_stdout) {
        write_sweep_csv(out, rows);
    } else {
        auto f = open_output(a.out);
        write_sweep_csv(f, rows);
        out << "wrote " << rows.size() << " rows to " << a.out << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum data-syndrome code toolkit", "qdsc"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    app.add_option("--data-dir", opts.data_dir, "Directory with imported SM generator files (default $QDS_DATA_DIR)");
    app.add_flag("--json", opts.json, "Machine-readable output");

    auto* catalog_cmd = app.add_subcommand("catalog", "List or show bundled codes");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "List bundled quantum and SM codes");
    auto* show_cmd = catalog_cmd->add_subcommand("show", "Print the rows of a bundled code");
    std::string show_name;
    show_cmd->add_option("name", show_name, "Code name")->required();

    std::string code_spec, sm_spec, out_path;
    bool subsystem = false;
    auto* check_cmd = app.add_subcommand("check", "Report parameters and QDS distance");
    check_cmd->add_option("--code", code_spec, "Catalog name or Pauli code file")->required();
    check_cmd->add_option("--sm", sm_spec, "SM code name or binary generator file (default: identity)");
    check_cmd->add_flag("--subsystem", subsystem, "Treat the rows as gauge generators");

    auto* construct_cmd = app.add_subcommand("construct", "Build a QDS code (parity augmentation by default)");
    construct_cmd->add_option("--code", code_spec, "Catalog name or Pauli code file")->required();
    construct_cmd->add_option("--sm", sm_spec, "SM code instead of the [m+1,m,2] parity code");
    construct_cmd->add_flag("--subsystem", subsystem, "Treat the rows as gauge generators");
    construct_cmd->add_option("--out", out_path, "Write the measured elements to this file");

    auto* search_cmd = app.add_subcommand("search-impure", "Find zero-redundancy QDS generators for an impure code");
    search_cmd->add_option("--code", code_spec, "Catalog name or Pauli code file")->required();
    search_cmd->add_option("--out", out_path, "Write the generators to this file");

    std::string table;
    std::vector<std::uint64_t> check;
    std::uint64_t families = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "Distance-3 bound tables and checks");
    bounds_cmd->add_option("--table", table, "Region table for n in a..b (CSV)");
    bounds_cmd->add_option("--check", check, "Check n k [d [l]]")->expected(2, 4);
    bounds_cmd->add_option("--families", families, "Pure-only parameter families up to a_max");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Syndrome error probability sweep (CSV)");
    sim_cmd->add_option("--scheme", sim.scheme, "Scheme name")->required();
    sim_cmd->add_option("--pm-log2", sim.pm, "log2 p_m: a value or a..b:step")->required();
    sim_cmd->add_option("--method", sim.method, "exact, mc or auto");
    sim_cmd->add_option("--decoder", sim.decoder, "SM decoder: ml, coset-leader or ml-lex");
    sim_cmd->add_option("--trials", sim.trials, "Monte Carlo trials per point");
    sim_cmd->add_option("--seed", sim.seed, "Monte Carlo seed");
    sim_cmd->add_option("--chunk-size", sim.chunk, "Trials per RNG chunk");
    sim_cmd->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");
    sim_cmd->add_option("--out", sim.out, "CSV output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (list_cmd->parsed()) return cmd_catalog_list(opts, out);
        if (show_cmd->parsed()) return cmd_catalog_show(opts, show_name, out);
        if (check_cmd->parsed()) return cmd_check(opts, code_spec, sm_spec, subsystem, out);
        if (construct_cmd->parsed()) return cmd_construct(opts, code_spec, sm_spec, subsystem, out_path, out);
        if (search_cmd->parsed()) return cmd_search_impure(opts, code_spec, out_path, out, err);
        if (bounds_cmd->parsed()) return cmd_bounds(opts, table, check, families, out);
        if (sim_cmd->parsed()) return cmd_simulate(opts, sim, out);
    } catch (const AvailabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kMissingData;
    } catch (const ConstructionFailure& e) {
        err << "error: " << e.what() << '\n';
        return kDefect;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace qdsc::cli
