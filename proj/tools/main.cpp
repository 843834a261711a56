#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using dcoh::cli::Format;
using dcoh::cli::Manifest;

void add_common(CLI::App* sub, Manifest& m)
{
    sub->add_option("--format", m.format, "json or markdown")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"markdown", Format::Markdown}}));
    sub->add_option("--out", m.out, "write the report here instead of stdout");
}

void add_space(CLI::App* sub, Manifest& m)
{
    auto* space = sub->add_option("--space", m.space, "corpus space: point, circle, torus, rp2, klein, sphere(n)");
    auto* file = sub->add_option("--complex", m.complex, "complex JSON file {\"vertices\", \"facets\"}");
    space->excludes(file);
}

}  // namespace

int main(int argc, char** argv)
{
    Manifest m;
    CLI::App app{"Exact computations with bar constructions and Deligne cocycles"};
    app.require_subcommand(1);

    auto* coh = app.add_subcommand("cohomology", "simplicial homology and cohomology of a complex");
    add_space(coh, m);

    auto* em = app.add_subcommand("em-homology", "homology of K(A, s)");
    em->add_option("--group", m.group, "abelian group such as Z/2+Z/4")->required();
    em->add_option("--s", m.s, "bar iteration count s (default 1)");
    em->add_option("--max-degree", m.max_degree, "top homology degree (default 5)");

    auto* join = app.add_subcommand("join-model", "Milnor join model of EG and BG for a finite group");
    join->add_option("--group", m.group, "finite abelian group")->required();
    join->add_option("--max-degree", m.max_degree, "join dimension n (default 2)");

    auto* bar = app.add_subcommand("bar-exactness", "degreewise exactness of G -> EG -> EBG -> ... -> B^L G");
    bar->add_option("--group", m.group, "abelian group")->required();
    bar->add_option("--s", m.s, "resolution length L (default 3)");
    bar->add_option("--max-degree", m.max_degree, "simplicial degree bound N (default 3)");

    auto* del = app.add_subcommand("deligne", "cone-model Deligne cocycles: generator lifts or checks of a given cocycle");
    add_space(del, m);
    del->add_option("--p", m.p, "degree (default 2)");
    del->add_option("--q", m.q, "weight (default p)");
    del->add_option("--cocycle", m.cocycle, "cocycle JSON file");

    auto* wk = app.add_subcommand("weil-kostant", "lift a closed form with integral periods to a cocycle");
    add_space(wk, m);
    wk->add_option("--p", m.p, "degree (default 2)");
    wk->add_option("--form", m.form, "cochain JSON file (default: first free generator)");

    auto* tower = app.add_subcommand("tower", "Cech towers on the star cover: check, collapse, gerbe view");
    add_space(tower, m);
    tower->add_option("--p", m.p, "degree (default 2)");
    tower->add_option("--q", m.q, "weight (default p)");
    tower->add_option("--tower", m.tower, "tower JSON file");
    tower->add_option("--cocycle", m.cocycle, "cocycle JSON file to localize");
    tower->add_option("--action", m.action, "all, check, collapse or gerbe-view");

    auto* corpus = app.add_subcommand("corpus", "run the full acceptance suite");
    corpus->add_option("--seed", m.seed, "seed for every randomized suite (default 1)");

    for (auto* sub : {coh, em, join, bar, del, wk, tower, corpus}) add_common(sub, m);

    if (argc > 1 && argv[1][0] != '-') {
        const std::string name = argv[1];
        const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
        if (std::none_of(subs.begin(), subs.end(), [&](const CLI::App* a) { return a->get_name() == name; })) {
            std::cerr << "dcoh: unknown command '" << name << "'\n";
            return 1;
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    m.command = app.get_subcommands().front()->get_name();

    try {
        const auto start = std::chrono::steady_clock::now();
        const auto report = dcoh::cli::run(m);
        const auto text = report.render(m.format);
        if (m.out) {
            std::ofstream out(*m.out);
            if (!out) throw dcoh::InputError("cannot write " + m.out->string());
            out << text;
        } else {
            std::cout << text;
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cerr << "dcoh " << m.command << ": " << (report.exit_code() == 0 ? "ok" : "verification failure") << " in "
                  << ms.count() << " ms\n";
        return report.exit_code();
    } catch (const dcoh::ResourceError& e) {
        std::cerr << "dcoh: resource limit: " << e.what() << "\n";
        return 1;
    } catch (const dcoh::InputError& e) {
        std::cerr << "dcoh: input error: " << e.what() << "\n";
        return 1;
    }
}
