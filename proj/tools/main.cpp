#include "schurcoh/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Schur functor cohomology on the Debarre-Voisin fourfold"};
    app.require_subcommand(1);

    schurcoh::RunConfig config;
    std::string format = "json";

    for (const std::string& name : schurcoh::subcommand_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--lambda", config.lambda, "weight, e.g. 3,2,1,0 (sym: unused)");
        sub->add_option("--mu", config.mu, "second weight (lr, bwb) or row length (pieri)");
        sub->add_option("--rank", config.rank, "number of rows kept by lr/pieri");
        sub->add_option("--twist", config.twist, "power of O(1)");
        sub->add_option("--m", config.m, "Sym^m (sym)");
        sub->add_option("--overrides", config.overrides, "preset (none, paper-4.2) or JSON file");
        sub->add_option("--format", format, "json, markdown or csv");
        sub->add_option("--jobs", config.jobs, "worker threads");
        sub->callback([&config, name] { config.subcommand = name; });
    }

    try {
        app.parse(argc, argv);
        config.format = schurcoh::parse_format(format);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? schurcoh::kExitOk : schurcoh::kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return schurcoh::kExitInputError;
    }
    return schurcoh::run(config, std::cout, std::cerr);
}
