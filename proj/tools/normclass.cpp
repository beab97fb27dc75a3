#include "normclass/cli/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
    CLI::App app{"Normal class of surfaces in P^3 and curves in P^2"};
    normclass::RunConfig config;
    std::string batch;
    std::string output = "json";

    app.add_option("command", config.command,
                   "surface-class | curve-class | census | polar | quadric-table | chow")
        ->required();
    app.add_option("input", config.args, "polynomial, Chow-ring expression, or FORM ALPHA [BETA]");
    app.add_option("--seed", config.seed, "seed for all generic draws");
    app.add_option("--retries", config.retries, "retry budget when independent draws disagree");
    app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--batch", batch, "file with one input per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : normclass::exit_code::kParse;
    }
    if (!normclass::is_known_command(config.command)) {
        std::cerr << "unknown command: " << config.command << '\n';
        return normclass::exit_code::kParse;
    }
    config.output = output == "text" ? normclass::OutputFormat::Text : normclass::OutputFormat::Json;
    if (!batch.empty()) config.batch_file = batch;
    if (!config.batch_file && config.args.empty() && config.command != "quadric-table") {
        std::cerr << "missing input\n";
        return normclass::exit_code::kParse;
    }
    return normclass::run(config, std::cout, std::cerr);
}
