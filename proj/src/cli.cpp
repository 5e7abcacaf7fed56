#include "spslab/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spslab/bridge.hpp"
#include "spslab/checks.hpp"
#include "spslab/classical.hpp"
#include "spslab/decompose.hpp"
#include "spslab/io.hpp"
#include "spslab/oracle.hpp"

namespace spslab::cli {

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_counterexample = 2;
constexpr int exit_usage = 3;

// Unwinds a command after a theorem counterexample has already been reported.
struct CounterexampleFound {};

StructureDocument read_input(const std::string& input, std::istream& in) {
    if (input.empty()) {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_document(buffer.str());
    }
    return load_document(input);
}

void write_output(const std::string& output, std::ostream& out, const std::string& text) {
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output);
    if (!file) throw Error("cannot write '" + output + "'");
    file << text;
}

StatePropertySystem as_sps(const StructureDocument& doc) {
    return doc.is_closure_space() ? to_sps(doc.closure_space()) : doc.sps();
}

ClosureSpace as_space(const StructureDocument& doc) {
    return doc.is_closure_space() ? doc.closure_space() : to_closure_space(doc.sps());
}

json sps_json(const StatePropertySystem& sps) {
    return to_json(canonicalize(StructureDocument{sps, std::nullopt, std::nullopt}));
}

int cmd_validate(const std::string& input, std::istream& in, std::ostream& out) {
    json result;
    try {
        StructureDocument doc = read_input(input, in);
        result["valid"] = true;
        result["kind"] = doc.is_closure_space() ? "closure_space" : "sps";
        json normalizations = json::array();
        if (doc.is_closure_space() && doc.closure_space().universe_added())
            normalizations.push_back("universe added to the closed-set family");
        result["normalizations"] = std::move(normalizations);
        out << result.dump(2) << "\n";
        return exit_ok;
    } catch (const SpsAxiomError& e) {
        result["valid"] = false;
        json errors = json::array();
        for (const AxiomViolation& v : e.report()) {
            json entry;
            entry["kind"] = axiom_violation_kind_name(v.kind);
            entry["witnesses"] = v.witnesses;
            errors.push_back(std::move(entry));
        }
        result["errors"] = std::move(errors);
        out << result.dump(2) << "\n";
        return exit_invalid;
    } catch (const Error& e) {
        result["valid"] = false;
        result["errors"] = json::array({e.what()});
        out << result.dump(2) << "\n";
        return exit_invalid;
    }
}

int cmd_convert(const std::string& input, const std::string& output, const std::string& format,
                std::istream& in, std::ostream& out) {
    StructureDocument doc = read_input(input, in);
    if (doc.is_closure_space()) {
        StructureDocument converted{to_sps(doc.closure_space()), doc.name, doc.description};
        if (format == "dot")
            write_output(output, out, to_dot_hasse(converted.sps().lattice()));
        else
            write_output(output, out, serialize(canonicalize(converted)));
    } else {
        StructureDocument converted{to_closure_space(doc.sps()), doc.name, doc.description};
        if (format == "dot")
            write_output(output, out, to_dot_components(converted.closure_space()));
        else
            write_output(output, out, serialize(canonicalize(converted)));
    }
    return exit_ok;
}

int cmd_classical(const std::string& input, const std::string& output, std::istream& in,
                  std::ostream& out) {
    StatePropertySystem sps = as_sps(read_input(input, in));
    json result;
    json elements = json::array();
    for (std::size_t a : classical_elements(sps)) {
        json entry;
        entry["element"] = sps.lattice().name(a);
        entry["complement"] = sps.lattice().name(complement(sps, a));
        elements.push_back(std::move(entry));
    }
    result["classical_elements"] = std::move(elements);
    result["pure_nonclassical"] = is_pure_nonclassical(sps);
    write_output(output, out, result.dump(2) + "\n");
    return exit_ok;
}

int cmd_components(const std::string& input, const std::string& output, std::istream& in,
                   std::ostream& out) {
    ClosureSpace cs = as_space(read_input(input, in));
    json result;
    json blocks = json::array();
    for (Mask block : cs.components()) {
        json names = json::array();
        for (std::size_t p : mask_members(block)) names.push_back(cs.points()[p]);
        blocks.push_back(std::move(names));
    }
    result["components"] = std::move(blocks);
    result["connected"] = cs.is_connected();
    result["totally_disconnected"] = cs.is_totally_disconnected();
    write_output(output, out, result.dump(2) + "\n");
    return exit_ok;
}

int cmd_decompose(const std::string& input, const std::string& output, std::istream& in,
                  std::ostream& out) {
    StatePropertySystem sps = as_sps(read_input(input, in));
    Decomposition dec = [&] {
        try {
            return decompose(sps);
        } catch (const SkeletonAxiomViolationError& e) {
            // a theorem counterexample, not an input defect
            json result;
            result["checks_passed"] = false;
            result["failures"] = json::array({e.what()});
            write_output(output, out, result.dump(2) + "\n");
            throw CounterexampleFound{};
        }
    }();
    std::vector<std::string> failures = verify_decomposition(sps, dec);

    json result;
    json blocks = json::array();
    for (Mask block : dec.blocks) {
        json names = json::array();
        for (std::size_t p : mask_members(block)) names.push_back(sps.states()[p]);
        blocks.push_back(std::move(names));
    }
    result["components"] = std::move(blocks);
    json labels = json::array();
    for (std::size_t e : dec.labels) labels.push_back(sps.lattice().name(e));
    result["labels"] = std::move(labels);
    json parts = json::array();
    for (const StatePropertySystem& part : dec.parts) parts.push_back(sps_json(part));
    result["parts"] = std::move(parts);
    result["skeleton"] = sps_json(dec.skeleton);
    result["notes"] = dec.notes;
    result["checks_passed"] = failures.empty();
    result["failures"] = failures;
    write_output(output, out, result.dump(2) + "\n");
    return failures.empty() ? exit_ok : exit_counterexample;
}

int cmd_classical_part(const std::string& input, const std::string& output, std::istream& in,
                       std::ostream& out) {
    StatePropertySystem sps = as_sps(read_input(input, in));
    ClassicalLattice cl = classical_property_lattice(sps);
    StatePropertySystem part = classical_part(sps);
    bool wzd = to_closure_space(part).is_weakly_zero_dimensional();

    json result;
    result["classical_part"] = sps_json(part);
    result["weakly_zero_dimensional"] = wzd;
    result["atomistic"] = cl.is_atomistic();
    write_output(output, out, result.dump(2) + "\n");
    return wzd ? exit_ok : exit_counterexample;
}

int cmd_enumerate(std::size_t n, const std::string& output, std::ostream& out) {
    ClosureSpaceEnumerator cursor(n);
    std::ostringstream lines;
    while (auto cs = cursor.next())
        lines << to_json(StructureDocument{std::move(*cs), std::nullopt, std::nullopt}).dump()
              << "\n";
    write_output(output, out, lines.str());
    return exit_ok;
}

int cmd_check_theorems(std::size_t max_n, std::size_t samples, std::uint64_t seed,
                       const std::string& certificates, std::ostream& out) {
    auto started = std::chrono::steady_clock::now();
    TheoremRunReport report = run_theorem_checks(max_n, samples, seed);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);

    out << "spaces checked: " << report.spaces_checked << "\n";
    for (const auto& [check, runs] : report.checks_run) {
        std::size_t failed = 0;
        for (const Counterexample& ce : report.counterexamples)
            if (ce.check == check) ++failed;
        out << "  " << check << ": " << runs << " instances, " << failed << " counterexamples\n";
    }
    out << "elapsed: " << elapsed.count() << " ms\n";

    if (!certificates.empty() && !report.counterexamples.empty()) {
        std::filesystem::create_directories(certificates);
        for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
            const Counterexample& ce = report.counterexamples[i];
            StructureDocument doc{ce.space, "counterexample-" + std::to_string(i),
                                  ce.check + ": " + ce.detail};
            std::ofstream file(std::filesystem::path(certificates) /
                               ("counterexample_" + std::to_string(i) + ".json"));
            file << serialize(canonicalize(doc));
        }
        out << "wrote " << report.counterexamples.size() << " certificates to " << certificates
            << "\n";
    }
    for (const Counterexample& ce : report.counterexamples)
        out << "COUNTEREXAMPLE [" << ce.check << "] " << ce.detail << "\n";
    out << (report.ok() ? "all checks passed" : "counterexamples found") << "\n";
    return report.ok() ? exit_ok : exit_counterexample;
}

int cmd_export_dot(const std::string& input, const std::string& output, std::istream& in,
                   std::ostream& out) {
    StructureDocument doc = read_input(input, in);
    if (doc.is_closure_space())
        write_output(output, out, to_dot_components(doc.closure_space()));
    else
        write_output(output, out, to_dot_hasse(doc.sps().lattice()));
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"spslab: finite state property systems, closure spaces, and their decomposition"};
    app.require_subcommand(1);

    std::string input, output, format = "json";
    std::size_t enum_n = 2;
    std::size_t max_n = 3;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    std::string certificates;

    auto add_io = [&](CLI::App* cmd, bool with_format = false) {
        cmd->add_option("--input", input, "input document (default: stdin)");
        cmd->add_option("--output", output, "output file (default: stdout)");
        if (with_format)
            cmd->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"json", "dot"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a document");
    add_io(validate);
    CLI::App* convert =
        app.add_subcommand("convert", "convert between closure spaces and property systems");
    add_io(convert, true);
    CLI::App* classical =
        app.add_subcommand("classical", "list classical properties and their complements");
    add_io(classical);
    CLI::App* components = app.add_subcommand("components", "connection components");
    add_io(components);
    CLI::App* decompose_cmd = app.add_subcommand(
        "decompose", "split into pure nonclassical parts and the classical skeleton");
    add_io(decompose_cmd);
    CLI::App* classical_part_cmd =
        app.add_subcommand("classical-part", "the classical part of a property system");
    add_io(classical_part_cmd);
    CLI::App* check = app.add_subcommand("check-theorems", "run the verification suite");
    check->add_option("--max-n", max_n, "exhaustive cap on the universe size")->default_val(3);
    check->add_option("--samples", samples, "random larger instances")->default_val(0);
    check->add_option("--seed", seed, "sampling seed")->default_val(1);
    check->add_option("--certificates", certificates, "directory for counterexample documents");
    check->add_option("--output", output, "output file (default: stdout)");
    CLI::App* enumerate = app.add_subcommand("enumerate", "stream every closure space of size n");
    enumerate->add_option("--n", enum_n, "universe size")->required();
    enumerate->add_option("--output", output, "output file (default: stdout)");
    CLI::App* export_dot = app.add_subcommand("export-dot", "DOT rendering of a document");
    add_io(export_dot);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (validate->parsed()) return cmd_validate(input, in, out);
        if (convert->parsed()) return cmd_convert(input, output, format, in, out);
        if (classical->parsed()) return cmd_classical(input, output, in, out);
        if (components->parsed()) return cmd_components(input, output, in, out);
        if (decompose_cmd->parsed()) return cmd_decompose(input, output, in, out);
        if (classical_part_cmd->parsed()) return cmd_classical_part(input, output, in, out);
        if (check->parsed()) return cmd_check_theorems(max_n, samples, seed, certificates, out);
        if (enumerate->parsed()) return cmd_enumerate(enum_n, output, out);
        if (export_dot->parsed()) return cmd_export_dot(input, output, in, out);
    } catch (const CounterexampleFound&) {
        return exit_counterexample;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_usage;
}

}  // namespace spslab::cli
