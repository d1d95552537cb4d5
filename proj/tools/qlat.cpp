// qlat: exact quantum-logic workbench over projector and ray declarations.

#include "qlat/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace {

using namespace qlat::cli;

struct Options {
    std::string format = "text";
    std::vector<std::string> assertions;
    std::string file;
    std::string remove;
    std::string convention = "paper";
    std::string laws = "hom";
    std::vector<std::string> ops;
    std::string out;
};

int emit(const Report& report, const Options& opt) {
    const OutputFormat format = opt.format == "records" ? OutputFormat::records : OutputFormat::text;
    report.write(std::cout, format);
    const std::vector<std::string> failures = check_assertions(report, opt.assertions);
    for (const std::string& f : failures)
        std::cerr << "qlat: " << f << '\n';
    return failures.empty() ? exit_ok : exit_expectation_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact subspace-lattice analysis of projector families"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();
    app.add_option("--assert", opt.assertions, "Require record KEY to equal VALUE (repeatable)")
        ->type_name("KEY=VALUE");

    std::function<int()> action;
    const auto with_file = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "Input document")->required();
        return sub;
    };
    const auto on_doc = [&](CLI::App* sub, std::function<Report(const InputDocument&)> run) {
        sub->callback([&opt, &action, run] {
            action = [&opt, run] { return emit(run(read_input_file(opt.file)), opt); };
        });
    };

    on_doc(with_file(app.add_subcommand("lattice", "Element catalogue with order, meet and join tables")),
           [](const InputDocument& doc) { return lattice_command(doc); });
    on_doc(with_file(app.add_subcommand("laws", "Distributive, modular and orthomodular checks")),
           [](const InputDocument& doc) { return laws_command(doc); });

    CLI::App* filters = with_file(app.add_subcommand("filters", "Filter, ideal, primality and valuation report"));
    filters->add_option("--remove", opt.remove, "Ray or projector whose image is removed")->required();
    filters->add_option("--convention", opt.convention, "Valuation convention")
        ->check(CLI::IsMember({"paper", "standard"}))
        ->capture_default_str();
    on_doc(filters, [&opt](const InputDocument& doc) {
        return filters_command(doc, opt.remove, parse_convention(opt.convention));
    });

    CLI::App* valuations = with_file(app.add_subcommand("valuations", "Exhaustive two-valued map search"));
    valuations->add_option("--laws", opt.laws, "meet-hom,join-hom,complement,top,bottom | hom | all | none")
        ->capture_default_str();
    on_doc(valuations, [&opt](const InputDocument& doc) { return valuations_command(doc, parse_laws(opt.laws)); });

    CLI::App* invariant = with_file(app.add_subcommand("invariant", "Invariant sublattices and their intersection"));
    invariant->add_option("--ops", opt.ops, "Projector or context names (default: all projectors)")->delimiter(',');
    on_doc(invariant, [&opt](const InputDocument& doc) { return invariant_command(doc, opt.ops); });

    CLI::App* burnside = with_file(app.add_subcommand("burnside", "Generated algebra and irreducibility"));
    burnside->add_option("--ops", opt.ops, "Projector or context names (default: all projectors)")->delimiter(',');
    on_doc(burnside, [&opt](const InputDocument& doc) { return burnside_command(doc, opt.ops); });

    on_doc(with_file(app.add_subcommand("contexts", "Meet-definedness and contextual valuations")),
           [](const InputDocument& doc) { return contexts_command(doc); });

    CLI::App* dot = with_file(app.add_subcommand("dot", "Hasse diagram in DOT format"));
    dot->add_option("--out", opt.out, "Write to this path instead of stdout");
    dot->callback([&] {
        action = [&] {
            const std::string text = dot_command(read_input_file(opt.file));
            if (opt.out.empty()) {
                std::cout << text;
                return int{exit_ok};
            }
            std::ofstream out(opt.out, std::ios::binary);
            if (!(out << text))
                throw std::runtime_error("cannot write '" + opt.out + "'");
            return int{exit_ok};
        };
    });

    app.add_subcommand("demo-qubit", "Rebuild and check the qubit constructions")->callback([&] {
        action = [&] {
            const DemoResult result = demo_qubit();
            const int status = emit(result.report, opt);
            for (const std::string& f : result.failures)
                std::cerr << "qlat: demo expectation failed: " << f << '\n';
            return result.ok() ? status : int{exit_expectation_failed};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "qlat: " << e.what() << '\n';
        return exit_input_error;
    }
}
