#include "latpath/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "latpath/count.hpp"
#include "latpath/render.hpp"
#include "latpath/serialize.hpp"

namespace latpath {

namespace {

struct CommonArgs {
    std::string polygon_file;
    std::string lambda = "1,0;0,-1";
    std::int64_t delta = 0;
    std::string format = "table";
    std::string output;
};

void add_polygon_options(CLI::App* cmd, CommonArgs& args, bool with_delta) {
    cmd->add_option("--polygon", args.polygon_file, "polygon JSON file {\"vertices\": [[x,y],...]}")
        ->required();
    cmd->add_option("--lambda", args.lambda, "direction order \"a1,a2;t1,t2\"")
        ->capture_default_str();
    if (with_delta) {
        cmd->add_option("--delta", args.delta, "number of nodes (genus drop)")
            ->capture_default_str();
    }
    cmd->add_option("--format", args.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--output", args.output, "write to a file instead of stdout");
}

std::size_t checked_delta(std::int64_t delta) {
    if (delta < 0) throw InvalidDelta("delta must be nonnegative");
    return static_cast<std::size_t>(delta);
}

void emit(const CommonArgs& args, const std::string& text, std::ostream& out) {
    if (args.output.empty()) {
        out << text;
    } else {
        write_text_file(args.output, text);
    }
}

std::string points_line(const std::vector<LatticePoint>& points) {
    std::string line;
    for (LatticePoint p : points) line += to_string(p);
    return line;
}

std::string report_table(const CountReport& report, bool per_path) {
    std::ostringstream out;
    out << "kind:    " << to_string(report.kind) << "\n"
        << "polygon: " << points_line(report.polygon) << "\n"
        << "lambda:  " << report.lambda << "\n"
        << "m: " << report.m << "  l: " << report.l << "  delta: " << report.delta
        << "  n: " << report.n << "\n";
    if (report.signs) out << "signs:   " << *report.signs << "\n";
    out << "paths:   " << report.enumerated << " enumerated, " << report.nonzero
        << " with nonzero multiplicity\n";
    if (per_path) {
        for (std::size_t i = 0; i < report.per_path.size(); ++i) {
            const PathContribution& c = report.per_path[i];
            out << "#" << i << "  ";
            switch (report.kind) {
                case CountKind::complex_curves:
                    out << "mu+=" << c.mu.mu_plus << " mu-=" << c.mu.mu_minus
                        << " mu=" << c.mu.mu;
                    break;
                case CountKind::real_curves:
                    out << "muR+=" << c.real.mu_r_plus << " muR-=" << c.real.mu_r_minus
                        << " muR=" << c.real.mu_r << " (mu=" << c.mu.mu << ")";
                    break;
                case CountKind::welschinger:
                    out << "nu+=" << c.real.nu_plus << " nu-=" << c.real.nu_minus
                        << " nu=" << c.real.nu;
                    break;
            }
            out << "  " << points_line(c.path.points) << "\n";
        }
    }
    out << "total:   " << report.total << "\n";
    return out.str();
}

void print_report(const CommonArgs& args, const CountReport& report, bool per_path,
                  std::ostream& out) {
    if (args.format == "json") {
        emit(args, report_to_json(report), out);
    } else {
        emit(args, report_table(report, per_path), out);
    }
}

SignSequence resolve_signs(const std::string& signs_text, const std::string& signs_all,
                           std::size_t edges) {
    if (!signs_all.empty()) {
        return SignSequence::uniform(edges, parse_sign_pair(signs_all));
    }
    if (signs_text.empty()) {
        throw SignLengthMismatch("count-real needs --signs or --signs-all");
    }
    return parse_signs(signs_text);
}

std::vector<DirectionOrder> default_sweep_orders() {
    // the eight axis-aligned orders: +-x +- eps y and +- y +- eps x
    std::vector<DirectionOrder> orders;
    for (int sa : {1, -1}) {
        for (int st : {1, -1}) {
            orders.emplace_back(LatticePoint{sa, 0}, LatticePoint{0, st});
            orders.emplace_back(LatticePoint{0, sa}, LatticePoint{st, 0});
        }
    }
    return orders;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lattice path curve counting"};
    app.require_subcommand(1);

    CommonArgs info_args;
    CLI::App* info = app.add_subcommand("info", "polygon and boundary chain summary");
    add_polygon_options(info, info_args, false);

    CommonArgs paths_args;
    CLI::App* paths = app.add_subcommand("paths", "enumerate increasing paths with multiplicities");
    add_polygon_options(paths, paths_args, true);

    CommonArgs count_args;
    CLI::App* count = app.add_subcommand("count", "curve count via path multiplicities");
    add_polygon_options(count, count_args, true);

    CommonArgs real_args;
    std::string signs_text, signs_all, all_even_rule = "pivot";
    CLI::App* count_real_cmd = app.add_subcommand("count-real", "real curve count for a sign sequence");
    add_polygon_options(count_real_cmd, real_args, true);
    auto* signs_opt = count_real_cmd->add_option("--signs", signs_text,
                                                 "sign pairs, one per edge, e.g. \"++ +- -+\"");
    count_real_cmd->add_option("--signs-all", signs_all, "one sign pair applied to every edge")
        ->excludes(signs_opt);
    count_real_cmd
        ->add_option("--all-even-rule", all_even_rule,
                     "zero test in the all-even case: pivot (both pivot edges) or literal "
                     "(previous edge)")
        ->check(CLI::IsMember({"pivot", "literal"}));

    CommonArgs wel_args;
    CLI::App* wel = app.add_subcommand("count-welschinger", "signed (Welschinger) curve count");
    add_polygon_options(wel, wel_args, true);

    CommonArgs sweep_args;
    std::string sweep_orders_text;
    CLI::App* sweep = app.add_subcommand("sweep", "check that the total is order independent");
    add_polygon_options(sweep, sweep_args, true);
    sweep->add_option("--orders", sweep_orders_text,
                      "space separated order list (default: the 8 axis-aligned orders)");

    std::string registry_file;
    CLI::App* verify = app.add_subcommand("verify", "evaluate a registry of expected counts");
    verify->add_option("--registry", registry_file, "registry JSON file")->required();

    CommonArgs render_args;
    std::string render_kind = "complex", render_paths = "nonzero", render_format = "svg";
    std::string render_signs, render_signs_all;
    int render_cell = 28;
    bool no_annotate = false;
    CLI::App* render = app.add_subcommand("render", "draw path diagrams");
    render->add_option("--polygon", render_args.polygon_file, "polygon JSON file")->required();
    render->add_option("--lambda", render_args.lambda, "direction order")->capture_default_str();
    render->add_option("--delta", render_args.delta, "number of nodes")->capture_default_str();
    render->add_option("--kind", render_kind, "complex, real or welschinger")
        ->check(CLI::IsMember({"complex", "real", "welschinger"}));
    render->add_option("--signs", render_signs, "sign pairs for --kind real");
    render->add_option("--signs-all", render_signs_all, "one sign pair for every edge");
    render->add_option("--paths", render_paths, "all, nonzero, or comma separated indices")
        ->capture_default_str();
    render->add_option("--format", render_format, "svg or ascii")
        ->check(CLI::IsMember({"svg", "ascii"}));
    render->add_option("--cell", render_cell, "cell size in pixels/columns")
        ->capture_default_str();
    render->add_flag("--no-annotate", no_annotate, "omit multiplicity captions");
    render->add_option("--output", render_args.output, "write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (info->parsed()) {
        LatticePolygon polygon = load_polygon_file(info_args.polygon_file);
        DirectionOrder order = DirectionOrder::parse(info_args.lambda);
        PathContext ctx = make_path_context(polygon, order);
        if (info_args.format == "json") {
            nlohmann::json j;
            auto point_array = [](const std::vector<LatticePoint>& pts) {
                nlohmann::json arr = nlohmann::json::array();
                for (LatticePoint p : pts) arr.push_back(nlohmann::json::array({p.x, p.y}));
                return arr;
            };
            j["polygon"] = point_array(polygon.vertices());
            j["lambda"] = order.str();
            j["m"] = polygon.m();
            j["l"] = polygon.l();
            j["boundary_points"] = polygon.boundary_count();
            j["doubled_area"] = polygon.doubled_area();
            j["p"] = nlohmann::json::array({ctx.p.x, ctx.p.y});
            j["q"] = nlohmann::json::array({ctx.q.x, ctx.q.y});
            j["alpha_plus"] = point_array(ctx.chains.alpha_plus.points);
            j["alpha_minus"] = point_array(ctx.chains.alpha_minus.points);
            j["n_plus"] = ctx.chains.n_plus();
            j["n_minus"] = ctx.chains.n_minus();
            emit(info_args, j.dump(2) + "\n", out);
            return 0;
        }
        std::ostringstream text;
        text << "polygon: " << points_line(polygon.vertices()) << "\n"
             << "m: " << polygon.m() << "  l: " << polygon.l()
             << "  B: " << polygon.boundary_count() << "  2*area: " << polygon.doubled_area()
             << "\n"
             << "lambda:  " << order.str() << "\n"
             << "p: " << to_string(ctx.p) << "  q: " << to_string(ctx.q) << "\n"
             << "alpha+ (n+=" << ctx.chains.n_plus() << "): "
             << points_line(ctx.chains.alpha_plus.points) << "\n"
             << "alpha- (n-=" << ctx.chains.n_minus() << "): "
             << points_line(ctx.chains.alpha_minus.points) << "\n";
        emit(info_args, text.str(), out);
        return 0;
    }

    if (paths->parsed()) {
        LatticePolygon polygon = load_polygon_file(paths_args.polygon_file);
        DirectionOrder order = DirectionOrder::parse(paths_args.lambda);
        CountReport report = count_complex(polygon, order, checked_delta(paths_args.delta));
        print_report(paths_args, report, true, out);
        return 0;
    }

    if (count->parsed()) {
        LatticePolygon polygon = load_polygon_file(count_args.polygon_file);
        DirectionOrder order = DirectionOrder::parse(count_args.lambda);
        CountReport report = count_complex(polygon, order, checked_delta(count_args.delta));
        print_report(count_args, report, false, out);
        return 0;
    }

    if (count_real_cmd->parsed()) {
        LatticePolygon polygon = load_polygon_file(real_args.polygon_file);
        DirectionOrder order = DirectionOrder::parse(real_args.lambda);
        std::size_t delta = checked_delta(real_args.delta);
        SignSequence signs = resolve_signs(signs_text, signs_all, polygon.m() - delta);
        CountOptions options;
        options.all_even_rule =
            all_even_rule == "literal" ? AllEvenRule::literal_previous : AllEvenRule::pivot_edges;
        CountReport report = count_real(polygon, order, delta, signs, options);
        print_report(real_args, report, false, out);
        return 0;
    }

    if (wel->parsed()) {
        LatticePolygon polygon = load_polygon_file(wel_args.polygon_file);
        DirectionOrder order = DirectionOrder::parse(wel_args.lambda);
        CountReport report = count_welschinger(polygon, order, checked_delta(wel_args.delta));
        print_report(wel_args, report, false, out);
        return 0;
    }

    if (sweep->parsed()) {
        LatticePolygon polygon = load_polygon_file(sweep_args.polygon_file);
        std::vector<DirectionOrder> orders;
        if (sweep_orders_text.empty()) {
            orders = default_sweep_orders();
        } else {
            std::istringstream in(sweep_orders_text);
            std::string token;
            while (in >> token) orders.push_back(DirectionOrder::parse(token));
        }
        SweepResult result = invariance_sweep(polygon, checked_delta(sweep_args.delta), orders);
        std::ostringstream text;
        for (const auto& [name, total] : result.totals) {
            text << name << "  ->  " << total << "\n";
        }
        text << (result.consistent ? "consistent" : "MISMATCH") << "\n";
        emit(sweep_args, text.str(), out);
        return result.consistent ? 0 : 2;
    }

    if (verify->parsed()) {
        RegistryReport report = verify_registry(load_registry_file(registry_file));
        for (const RegistryOutcome& outcome : report.outcomes) {
            out << (outcome.pass ? "PASS" : "FAIL") << "  " << to_string(outcome.entry.kind)
                << " delta=" << outcome.entry.delta << " lambda=" << outcome.entry.lambda
                << " polygon=" << points_line(outcome.entry.polygon) << " expected "
                << outcome.entry.expected << ", got " << outcome.actual << "\n";
        }
        out << report.outcomes.size() - report.failures() << "/" << report.outcomes.size()
            << " registry cases pass\n";
        return report.all_pass() ? 0 : 2;
    }

    if (render->parsed()) {
        LatticePolygon polygon = load_polygon_file(render_args.polygon_file);
        DirectionOrder order = DirectionOrder::parse(render_args.lambda);
        std::size_t delta = checked_delta(render_args.delta);
        CountReport report;
        if (render_kind == "real") {
            SignSequence signs = resolve_signs(render_signs, render_signs_all,
                                               polygon.m() - delta);
            report = count_real(polygon, order, delta, signs);
        } else if (render_kind == "welschinger") {
            report = count_welschinger(polygon, order, delta);
        } else {
            report = count_complex(polygon, order, delta);
        }
        RenderSpec spec;
        spec.cell = render_cell;
        spec.annotate = !no_annotate;
        spec.format = render_format == "ascii" ? RenderSpec::Format::ascii
                                               : RenderSpec::Format::svg;
        if (render_paths == "all") {
            spec.target = RenderSpec::Target::all;
        } else if (render_paths == "nonzero") {
            spec.target = RenderSpec::Target::nonzero;
        } else {
            spec.target = RenderSpec::Target::explicit_indices;
            std::istringstream in(render_paths);
            std::string token;
            while (std::getline(in, token, ',')) {
                spec.indices.push_back(static_cast<std::size_t>(std::stoull(token)));
            }
        }
        emit(render_args, render_report(report, spec), out);
        return 0;
    }

    err << "error: no subcommand given\n";
    return 1;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace latpath
