#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>

#include "hypell/commands.hpp"
#include "hypell/errors.hpp"

using namespace hypell;

namespace {

HyperCurve load_curve(const std::string& expr, const std::string& file) {
    if (!file.empty()) return curve_from_json(read_json_file(file));
    if (!expr.empty()) return new_hyperelliptic(poly_from_string(expr));
    throw io_error("give a curve with --curve or --curve-file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic on hyperelliptic curves over Q: covering maps, "
                 "Riemann-Roch spaces, point classification, and degree-set sampling"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    std::string format = "table";
    bool offline = false;
    unsigned long long seed = 0;
    int budget = 100;
    std::string cache_dir;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--offline", offline, "never touch the network");
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized subroutines");
    app.add_option("--budget", budget, "sample budget for the sampling commands");
    app.add_option("--cache-dir", cache_dir,
                   "database cache directory (default $HYPELL_CACHE_DIR/lmfdb)");

    std::function<Report()> run;

    auto lmfdb_opts = [&] {
        LmfdbOptions opts;
        opts.cache_dir = cache_dir;
        opts.offline = offline;
        return opts;
    };

    // verify-cover
    auto* cover_cmd = app.add_subcommand("verify-cover", "check a covering map exactly");
    auto cover_args = std::make_shared<std::pair<std::string, std::string>>();
    cover_cmd->add_option("--builtin", cover_args->first, "one of the embedded examples")
        ->check(CLI::IsMember(builtin_cover_names()));
    cover_cmd->add_option("--spec", cover_args->second, "cover record file");
    cover_cmd->callback([&, cover_args] {
        run = [&, cover_args] {
            if (!cover_args->first.empty()) return cmd_verify_cover(builtin_cover(cover_args->first));
            if (!cover_args->second.empty())
                return cmd_verify_cover(cover_from_json(read_json_file(cover_args->second)));
            throw io_error("give a cover with --builtin or --spec");
        };
    });

    // rank input shared by the commands that consume one
    struct RankArgs {
        long rank = 0;
        bool have_rank = false;
        std::string label;
    };
    auto add_rank_options = [&](CLI::App* cmd, std::shared_ptr<RankArgs> args) {
        cmd->add_option("--rank", args->rank, "Mordell-Weil rank supplied by the caller")
            ->each([args](const std::string&) { args->have_rank = true; });
        cmd->add_option("--rank-label", args->label,
                        "fetch the rank from the database cache by label");
    };
    auto resolve_rank = [&](const RankArgs& args) -> std::optional<RankInput> {
        if (!args.label.empty()) return rank_input_from(lmfdb_fetch(args.label, lmfdb_opts()));
        if (args.have_rank)
            return RankInput{RankSource::Config, args.rank, "command line --rank"};
        return std::nullopt;
    };

    // example-dendegs
    auto* dendegs_cmd =
        app.add_subcommand("example-dendegs", "degree-3 cover with two-torsion descent");
    auto dendegs_rank = std::make_shared<RankArgs>();
    add_rank_options(dendegs_cmd, dendegs_rank);
    dendegs_cmd->callback([&, dendegs_rank] {
        run = [&, dendegs_rank] { return cmd_example_dendegs(resolve_rank(*dendegs_rank)); };
    });

    // example-ueno
    auto* ueno_cmd =
        app.add_subcommand("example-ueno", "genus-3 double cover with isolated quadratic points");
    auto ueno_rank = std::make_shared<RankArgs>();
    auto ueno_height = std::make_shared<long>(1000);
    add_rank_options(ueno_cmd, ueno_rank);
    ueno_cmd->add_option("--height-bound", *ueno_height, "census height bound");
    ueno_cmd->callback([&, ueno_rank, ueno_height] {
        run = [&, ueno_rank, ueno_height] {
            return cmd_example_ueno(resolve_rank(*ueno_rank), *ueno_height);
        };
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a closed point");
    struct ClassifyArgs {
        std::string curve, curve_file, point;
        RankArgs rank;
    };
    auto classify_args = std::make_shared<ClassifyArgs>();
    classify_cmd->add_option("--curve", classify_args->curve, "defining polynomial f(x)");
    classify_cmd->add_option("--curve-file", classify_args->curve_file, "curve record file");
    classify_cmd->add_option("--point", classify_args->point, "point spec, e.g. u=x^2-3,kind=inert")
        ->required();
    classify_cmd->add_option("--rank", classify_args->rank.rank, "Jacobian rank from the caller")
        ->each([classify_args](const std::string&) { classify_args->rank.have_rank = true; });
    classify_cmd->add_option("--rank-label", classify_args->rank.label,
                             "fetch the rank from the database cache by label");
    classify_cmd->callback([&, classify_args] {
        run = [&, classify_args] {
            HyperCurve C = load_curve(classify_args->curve, classify_args->curve_file);
            Place P = place_from_spec(C, classify_args->point);
            return cmd_classify(C, P, resolve_rank(classify_args->rank));
        };
    });

    // fiber-sample
    auto* fiber_cmd = app.add_subcommand("fiber-sample", "sample x-fibers along the rationals");
    struct FiberArgs {
        std::string curve, curve_file, num = "x", den = "1";
    };
    auto fiber_args = std::make_shared<FiberArgs>();
    fiber_cmd->add_option("--curve", fiber_args->curve, "defining polynomial f(x)");
    fiber_cmd->add_option("--curve-file", fiber_args->curve_file, "curve record file");
    fiber_cmd->add_option("--map", fiber_args->num, "numerator of the line self-map");
    fiber_cmd->add_option("--map-den", fiber_args->den, "denominator of the line self-map");
    fiber_cmd->callback([&, fiber_args] {
        run = [&, fiber_args] {
            HyperCurve C = load_curve(fiber_args->curve, fiber_args->curve_file);
            FiberMap psi{poly_from_string(fiber_args->num), poly_from_string(fiber_args->den)};
            return cmd_fiber_sample(C, psi, budget);
        };
    });

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "L-polynomial of the reduction mod p");
    struct ZetaArgs {
        std::string curve, curve_file;
        long p = 0;
    };
    auto zeta_args = std::make_shared<ZetaArgs>();
    zeta_cmd->add_option("--curve", zeta_args->curve, "defining polynomial f(x)");
    zeta_cmd->add_option("--curve-file", zeta_args->curve_file, "curve record file");
    zeta_cmd->add_option("-p,--prime", zeta_args->p, "odd prime of good reduction")->required();
    zeta_cmd->callback([&, zeta_args] {
        run = [&, zeta_args] {
            return cmd_zeta(load_curve(zeta_args->curve, zeta_args->curve_file), zeta_args->p);
        };
    });

    // avoid-cosets
    auto* coset_cmd =
        app.add_subcommand("avoid-cosets", "finite-index subgroup avoiding finitely many cosets");
    auto coset_file = std::make_shared<std::string>();
    coset_cmd->add_option("--problem", *coset_file, "problem record file")->required();
    coset_cmd->callback([&, coset_file] {
        run = [&, coset_file] { return cmd_avoid_cosets(read_json_file(*coset_file)); };
    });

    // positivity-check
    app.add_subcommand("positivity-check", "re-prove the genus comparison inequality")
        ->callback([&] { run = [] { return cmd_positivity_check(); }; });

    // lmfdb-fetch
    auto* fetch_cmd = app.add_subcommand("lmfdb-fetch", "rank record by label, cache first");
    struct FetchArgs {
        std::string label;
        bool refresh = false;
    };
    auto fetch_args = std::make_shared<FetchArgs>();
    fetch_cmd->add_option("--label", fetch_args->label, "curve label")->required();
    fetch_cmd->add_flag("--refresh", fetch_args->refresh, "refetch and rewrite the cache");
    fetch_cmd->callback([&, fetch_args] {
        run = [&, fetch_args] {
            LmfdbOptions opts = lmfdb_opts();
            opts.refresh = fetch_args->refresh;
            return cmd_lmfdb_fetch(fetch_args->label, opts);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Report report = run();
        if (seed_opt->count() > 0) report.inputs["seed"] = seed;
        std::cout << report.render(format);
        return report.ok ? 0 : 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
