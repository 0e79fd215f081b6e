#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <smtop/error.hpp>

#include "commands.hpp"

namespace {

namespace cli = smtop::cli;

enum Exit { Ok = 0, ChecksFailed = 1, ParseFailure = 2, SchemaFailure = 3, ValidationFailure = 4 };

std::size_t window_from_env()
{
    const char* text = std::getenv("SMTOP_WINDOW");
    if (!text || !*text)
        return 10;
    try {
        std::size_t used = 0;
        const long long w = std::stoll(text, &used);
        if (used == std::string(text).size() && w >= 1)
            return static_cast<std::size_t>(w);
    } catch (const std::exception&) {
    }
    throw smtop::ParseError(std::string("SMTOP_WINDOW must be a positive integer, got '") + text + "'");
}

void print(const cli::Output& out, bool json)
{
    if (json) {
        std::cout << out.json.dump(2) << '\n';
        return;
    }
    for (const auto& line : out.lines)
        std::cout << line << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite statistical metric spaces and generalized topologies"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::Context ctx;
    app.add_flag("--json", ctx.json, "Emit JSON instead of text");
    app.add_option("--tnorm", ctx.tnorm, "product, min, or a t-norm table file")->capture_default_str();

    cli::SystemSource src;
    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--from", src.from, "System of a space: spheres or r")
            ->check(CLI::IsMember({"spheres", "r"}))
            ->capture_default_str();
        sub->add_option("--bound", src.cap, "Largest natural f for g-ecart systems")->capture_default_str();
    };

    std::string file, file2, p, q, u, v, f, set, emit = "classification";
    std::optional<std::string> opt_point;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t cap = 10;
    std::string fixtures = SMTOP_DEFAULT_FIXTURES;
    std::vector<std::string> groups;
    std::function<cli::Output()> run;

    auto* validate = app.add_subcommand("validate", "Load a space, system or t-norm file and check it");
    validate->add_option("file", file)->required();
    validate->callback([&] { run = [&] { return cli::validate(ctx, file); }; });

    auto* sphere = app.add_subcommand("sphere", "(u,v)-sphere N_p(u,v)");
    sphere->add_option("space", file)->required();
    sphere->add_option("p", p)->required();
    sphere->add_option("u", u)->required();
    sphere->add_option("v", v)->required();
    sphere->callback([&] { run = [&] { return cli::sphere(ctx, file, p, u, v); }; });

    auto* entourage = app.add_subcommand("entourage", "Entourage U(u,v)");
    entourage->add_option("space", file)->required();
    entourage->add_option("u", u)->required();
    entourage->add_option("v", v)->required();
    entourage->callback([&] { run = [&] { return cli::entourage(ctx, file, u, v); }; });

    auto* esphere = app.add_subcommand("ecart-sphere", "f-sphere N_p(f) of a g-ecart");
    esphere->add_option("ecart", file)->required();
    esphere->add_option("p", p)->required();
    esphere->add_option("f", f)->required();
    esphere->callback([&] { run = [&] { return cli::ecart_sphere(ctx, file, p, f); }; });

    auto* rsphere = app.add_subcommand("r-sphere", "r-sphere N_p(r;u)");
    rsphere->add_option("space", file)->required();
    rsphere->add_option("p", p)->required();
    rsphere->add_option("r", q)->required();
    rsphere->add_option("u", u)->required();
    rsphere->callback([&] { run = [&] { return cli::r_sphere(ctx, file, p, q, u); }; });

    auto* family = app.add_subcommand("family", "Neighborhood families of a space or system");
    family->add_option("file", file)->required();
    family->add_option("p", opt_point, "Only this point");
    add_source(family);
    family->callback([&] { run = [&] { return cli::family(ctx, file, opt_point, src); }; });

    auto* classify = app.add_subcommand("classify", "Check N0, N1, N2 and report the type");
    classify->add_option("file", file)->required();
    add_source(classify);
    classify->callback([&] { run = [&] { return cli::classify(ctx, file, src); }; });

    for (const bool interior : {false, true}) {
        auto* sub = app.add_subcommand(interior ? "interior" : "closure",
                                       interior ? "Interior of a set of points" : "Closure of a set of points");
        sub->add_option("file", file)->required();
        sub->add_option("set", set, "Comma-separated labels, e.g. 0,1")->required();
        add_source(sub);
        sub->callback([&, interior] { run = [&, interior] { return cli::closure(ctx, file, set, src, interior); }; });
    }

    auto* symmetric = app.add_subcommand("symmetric", "Check p in cl{q} iff q in cl{p}");
    symmetric->add_option("file", file)->required();
    add_source(symmetric);
    symmetric->callback([&] { run = [&] { return cli::symmetric(ctx, file, src); }; });

    auto* product = app.add_subcommand("product", "Cartesian product of two spaces, g-ecarts or systems");
    product->add_option("first", file)->required();
    product->add_option("second", file2)->required();
    product->add_option("--emit", emit, "space, spheres, classification, axioms, menger or r")
        ->check(CLI::IsMember({"space", "spheres", "classification", "axioms", "menger", "r"}))
        ->capture_default_str();
    product->add_option("--bound", cap, "Largest natural f for g-ecart systems")->capture_default_str();
    product->callback([&] { run = [&] { return cli::product(ctx, file, file2, emit, cap); }; });

    auto* verify = app.add_subcommand("verify", "Verification suites");
    verify->require_subcommand(1);
    auto* theorems = verify->add_subcommand("theorems", "Type preservation of box products on random systems");
    theorems->add_option("--trials", trials, "Pairs per type")->capture_default_str();
    theorems->add_option("--seed", seed)->capture_default_str();
    theorems->callback([&] { run = [&] { return cli::verify_theorems(ctx, trials, seed); }; });
    auto* vspace = verify->add_subcommand("space", "SM axioms and the Menger inequality");
    vspace->add_option("space", file)->required();
    vspace->callback([&] { run = [&] { return cli::verify_space(ctx, file); }; });
    auto* vproduct = verify->add_subcommand("product", "Product checks for two spaces, g-ecarts or systems");
    vproduct->add_option("first", file)->required();
    vproduct->add_option("second", file2)->required();
    vproduct->add_option("--bound", cap, "Largest natural f coordinate")->capture_default_str();
    vproduct->callback([&] { run = [&] { return cli::verify_product(ctx, file, file2, cap); }; });
    auto* vtnorm = verify->add_subcommand("tnorm", "Conditions T-I to T-V for --tnorm");
    vtnorm->callback([&] { run = [&] { return cli::verify_tnorm(ctx); }; });

    auto* examples = app.add_subcommand("paper-examples", "Recompute the worked examples against golden values");
    examples->add_option("--group", groups, "coin, dice, ecart or rsphere (repeatable)");
    examples->add_option("--fixtures", fixtures, "Directory holding the bundled fixtures")->capture_default_str();
    examples->callback([&] { run = [&] { return cli::paper_examples(ctx, fixtures, groups); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ParseFailure;
    }

    try {
        ctx.window = window_from_env();
        const cli::Output out = run();
        print(out, ctx.json);
        return out.ok ? Ok : ChecksFailed;
    } catch (const smtop::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return ParseFailure;
    } catch (const smtop::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return SchemaFailure;
    } catch (const smtop::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return ValidationFailure;
    } catch (const smtop::DomainError& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return ValidationFailure;
    }
}
