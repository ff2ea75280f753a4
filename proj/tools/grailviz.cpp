// grailviz - renders a Grail+ instruction list as TikZ code.
//
// Reads an instruction list from a file or standard input, computes a grid
// layout for the states, and writes TikZ code to a file or standard output,
// so it can sit at the end of a pipeline of Grail+ filters.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grailviz/cli.hpp"

namespace {

// Accepts a TeX-style positive length such as "2cm" or "1.5in".
std::string check_length(const std::string& value) {
    std::size_t pos = 0;
    while (pos < value.size() &&
           (std::isdigit(static_cast<unsigned char>(value[pos])) != 0 ||
            value[pos] == '.')) {
        ++pos;
    }
    const std::string number = value.substr(0, pos);
    const std::string unit = value.substr(pos);
    char* end = nullptr;
    const double parsed = std::strtod(number.c_str(), &end);
    if (number.empty() || end == nullptr || *end != '\0' || parsed <= 0) {
        return "'" + value + "' is not a positive length";
    }
    static const char* kUnits[] = {"pt", "mm", "cm", "in", "ex",
                                   "em", "bp", "dd", "pc", "sp"};
    for (const char* known : kUnits) {
        if (unit == known) {
            return {};
        }
    }
    return "'" + value + "' has no valid length unit";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Render a Grail+ finite-automaton instruction list as TikZ code"};

    grailviz::CliConfig config;
    bool fragment = false;
    bool standalone = false;

    app.add_option("input", config.input_path,
                   "instruction-list file (default: standard input)");
    app.add_option("-o,--output", config.output_path,
                   "output file (default: standard output)");
    auto* fragment_flag = app.add_flag(
        "--fragment", fragment, "emit only the tikzpicture environment");
    auto* standalone_flag =
        app.add_flag("--standalone", standalone,
                     "emit a complete compilable document (default)");
    fragment_flag->excludes(standalone_flag);
    app.add_option("--node-distance", config.node_distance,
                   "node distance, a TeX length (default: 2cm)")
        ->check(CLI::Validator(check_length, "LENGTH"));
    app.add_option("--scale", config.coordinate_scale,
                   "factor applied to grid coordinates (default: 1)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--compile", config.compile,
                 "run pdflatex on the output file (best effort)");

    CLI11_PARSE(app, argc, argv);

    config.mode = fragment ? grailviz::OutputMode::Fragment
                           : grailviz::OutputMode::Standalone;
    return grailviz::run(config, std::cin, std::cout, std::cerr);
}
