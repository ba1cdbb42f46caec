#include "cli_app.hpp"

#include "umu/cantor.hpp"
#include "umu/harness.hpp"
#include "umu/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>

namespace umu::cli {

namespace {

using io::json;

constexpr int kError = 1;
constexpr int kInconsistent = 2;

RangeSet parse_range(const std::string& text) { return io::range_from_json(io::parse(text)); }

std::vector<Scale> parse_targets(const std::vector<std::string>& items) {
    std::vector<Scale> out;
    for (const auto& item : items) {
        if (!item.empty() && item.front() == '[') {
            for (const auto& v : io::parse(item)) out.push_back(io::scale_from_json(v));
        } else {
            out.push_back(Scale::parse(item));
        }
    }
    return out;
}

void emit_witness(const std::string& path, const json& j) {
    if (!path.empty()) io::write_file(path, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact finite models of universal ultrametric spaces"};
    app.require_subcommand(1);

    std::string model = "f";
    std::string file_a, file_b, range_text, witness_path, eps_text, dump_dir;
    std::vector<std::string> target_items;
    bool use_oracle = false;
    std::uint64_t seed = 1;
    std::size_t trials = 100, max_points = 6, max_support = 5, members = 100;

    auto* validate = app.add_subcommand("validate", "Check that a space file is an ultrametric space");
    validate->add_option("space", file_a, "Space file")->required();

    auto* dist = app.add_subcommand("dist", "Distance between two model elements");
    dist->add_option("--model", model, "f, maps or cpum")->check(CLI::IsMember({"f", "maps", "cpum"}));
    dist->add_option("a", file_a, "First element file")->required();
    dist->add_option("b", file_b, "Second element file")->required();

    auto* petal = app.add_subcommand("petal-dist", "Distance from an element to the piece over a range set");
    petal->add_option("--model", model, "f, maps, cpum or gh")->check(CLI::IsMember({"f", "maps", "cpum", "gh"}));
    petal->add_option("x", file_a, "Element file")->required();
    petal->add_option("--range", range_text, "Range set as a JSON array of scales")->required();
    petal->add_option("--witness", witness_path, "Write the nearest piece member to this file");

    auto* extend = app.add_subcommand("extend", "Point at prescribed distances from anchors");
    extend->add_option("--model", model, "f or maps")->check(CLI::IsMember({"f", "maps"}));
    extend->add_option("anchors", file_a, "Anchor list file")->required();
    extend->add_option("--targets", target_items, "Target distances, comma separated")->delimiter(',')->required();

    auto* embed = app.add_subcommand("embed", "Embed a finite ultrametric space into the support-map model");
    embed->add_option("space", file_a, "Space file")->required();

    auto* na = app.add_subcommand("na", "Non-Archimedean Gromov-Hausdorff distance of two spaces");
    na->add_option("x", file_a, "First space file")->required();
    na->add_option("y", file_b, "Second space file")->required();
    na->add_flag("--oracle", use_oracle, "Brute force over ambient spaces (|X|+|Y| <= 6)");

    auto* quot = app.add_subcommand("quotient", "Merge closed eps-balls of a space");
    quot->add_option("space", file_a, "Space file")->required();
    quot->add_option("--eps", eps_text, "Radius")->required();

    auto* canon = app.add_subcommand("canon", "Canonical isometry-class string of a space");
    canon->add_option("space", file_a, "Space file")->required();

    auto* backforth = app.add_subcommand("backforth", "Back-and-forth between the support-map and Cantor-map models");
    auto* harness_cmd = app.add_subcommand("harness", "Run the property suite of one model");
    for (auto* sub : {backforth, harness_cmd}) {
        sub->add_option("--seed", seed, "Base seed")->envname("UMU_SEED");
        sub->add_option("--trials", trials, "Trials per property (rounds for backforth)");
        sub->add_option("--max-points", max_points, "Largest generated space");
        sub->add_option("--max-support", max_support, "Largest generated support or cell count");
    }
    harness_cmd->add_option("--model", model, "f, maps, cpum or gh")->check(CLI::IsMember({"f", "maps", "cpum", "gh"}));
    harness_cmd->add_option("--members", members, "Random piece members per nearest-point check");
    harness_cmd->add_option("--dump-dir", dump_dir, "Directory for counterexample files");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    try {
        if (validate->parsed()) {
            const json j = io::read_file(file_a);
            try {
                io::space_from_json(j);
            } catch (const ValidationError& e) {
                out << e.what() << "\n";
                return kError;
            }
            out << "OK\n";
        } else if (dist->parsed()) {
            const json a = io::read_file(file_a), b = io::read_file(file_b);
            Scale d;
            if (model == "f") d = f::delta(io::support_map_from_json(a), io::support_map_from_json(b));
            else if (model == "maps") d = maps::nabla(io::cantor_function_from_json(a), io::cantor_function_from_json(b));
            else d = cpum::ud(io::cpum_from_json(a), io::cpum_from_json(b));
            out << d.str() << "\n";
        } else if (petal->parsed()) {
            const json x = io::read_file(file_a);
            const RangeSet s = parse_range(range_text);
            if (model == "f") {
                const auto r = f::petal_distance(io::support_map_from_json(x), s);
                out << r.distance.str() << "\n";
                emit_witness(witness_path, io::to_json(r.witness));
            } else if (model == "maps") {
                const auto r = maps::petal_distance(io::cantor_function_from_json(x), s);
                out << r.distance.str() << "\n";
                emit_witness(witness_path, io::to_json(r.witness));
            } else if (model == "cpum") {
                const auto r = cpum::petal_distance(io::cpum_from_json(x), s);
                out << r.distance.str() << "\n";
                emit_witness(witness_path, io::to_json(r.witness));
            } else {
                const auto r = gh::petal_distance(gh::GHPoint(io::space_from_json(x)), s);
                out << r.distance.str() << "\n";
                emit_witness(witness_path, io::to_json(r.witness.space()));
            }
        } else if (extend->parsed()) {
            const auto anchors = io::anchor_list(io::read_file(file_a));
            const auto targets = parse_targets(target_items);
            if (model == "f") {
                std::vector<f::SupportMap> xs;
                for (const auto& a : anchors) xs.push_back(io::support_map_from_json(a));
                out << io::dump(io::to_json(f::one_point_extension(xs, targets)));
            } else {
                std::vector<maps::CantorFunction> xs;
                for (const auto& a : anchors) xs.push_back(io::cantor_function_from_json(a));
                out << io::dump(io::to_json(maps::one_point_extension(xs, targets)));
            }
        } else if (embed->parsed()) {
            out << io::dump(io::to_json(f::embed_space(io::space_from_json(io::read_file(file_a)))));
        } else if (na->parsed()) {
            const gh::GHPoint x(io::space_from_json(io::read_file(file_a)));
            const gh::GHPoint y(io::space_from_json(io::read_file(file_b)));
            out << (use_oracle ? gh::na_oracle(x, y) : gh::na_distance(x, y)).str() << "\n";
        } else if (quot->parsed()) {
            const auto space = io::space_from_json(io::read_file(file_a));
            out << io::dump(io::to_json(quotient(space, Scale::parse(eps_text))));
        } else if (canon->parsed()) {
            out << canonical_form(io::space_from_json(io::read_file(file_a))) << "\n";
        } else if (backforth->parsed() || harness_cmd->parsed()) {
            harness::TrialConfig config;
            config.seed = seed;
            config.trials = trials;
            config.max_points = max_points;
            config.max_support = max_support;
            config.petal_members = members;
            config.counterexample_dir = dump_dir;
            config.validate();
            const harness::Report report = backforth->parsed()
                                               ? harness::run_back_and_forth(config)
                                               : harness::run_axiom_suite(harness::parse_model(model), config);
            out << report.str();
            return report.passed() ? 0 : kError;
        }
    } catch (const Inconsistent& e) {
        err << "error: " << e.what() << "\n";
        return kInconsistent;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return 0;
}

}  // namespace umu::cli
