#ifndef GRAILVIZ_CLI_HPP
#define GRAILVIZ_CLI_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "grailviz/layout.hpp"
#include "grailviz/parser.hpp"
#include "grailviz/tikz.hpp"

namespace grailviz {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitIoError = 2;

struct CliConfig {
    std::string input_path;   // empty: read standard input
    std::string output_path;  // empty: write standard output
    OutputMode mode = OutputMode::Standalone;
    std::string node_distance = "2cm";
    double coordinate_scale = 1.0;
    bool compile = false;
};

namespace detail {

inline std::string shell_quote(const std::string& path) {
    std::string quoted = "'";
    for (char c : path) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted.push_back(c);
        }
    }
    quoted.push_back('\'');
    return quoted;
}

// Best effort; the child's streams are discarded so nothing can leak into
// the data stream. Failures only warn.
inline void compile_output(const std::string& output_path, std::ostream& diag) {
    if (std::system("command -v pdflatex >/dev/null 2>&1") != 0) {
        diag << "grailviz: warning: pdflatex not found; skipping compilation\n";
        return;
    }
    std::string directory =
        std::filesystem::path(output_path).parent_path().string();
    if (directory.empty()) {
        directory = ".";
    }
    const std::string command =
        "pdflatex -interaction=nonstopmode -halt-on-error -output-directory=" +
        shell_quote(directory) + " " + shell_quote(output_path) +
        " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    if (status != 0) {
        diag << "grailviz: warning: pdflatex failed on " << output_path << "\n";
    }
}

}  // namespace detail

/// Runs the whole pipeline: read, parse, lay out, emit, write. Diagnostics
/// carry a "grailviz:" prefix and go to diag only; the data stream stays
/// clean. Exit status: 0 on success (the optional compile step never
/// changes it), 1 on a parse error, 2 on input/output failure.
inline int run(const CliConfig& config, std::istream& in, std::ostream& out,
               std::ostream& diag) {
    std::string text;
    if (config.input_path.empty()) {
        text.assign(std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(config.input_path, std::ios::binary);
        if (!file) {
            diag << "grailviz: error: cannot open input file '"
                 << config.input_path << "'\n";
            return kExitIoError;
        }
        text.assign(std::istreambuf_iterator<char>(file),
                    std::istreambuf_iterator<char>());
    }

    ParseOutcome outcome = parse(text);
    if (auto* error = std::get_if<ParseError>(&outcome)) {
        diag << "grailviz: error: line " << error->line_number << ": "
             << describe(error->kind) << ": " << error->detail << "\n";
        return kExitParseError;
    }
    const Automaton& automaton = std::get<Automaton>(outcome);

    RenderOptions options;
    options.mode = config.mode;
    options.node_distance = config.node_distance;
    options.coordinate_scale = config.coordinate_scale;
    const std::string document =
        emit_document(automaton, layout(automaton), options);

    if (config.output_path.empty()) {
        out << document;
        out.flush();
        if (!out) {
            diag << "grailviz: error: cannot write to standard output\n";
            return kExitIoError;
        }
        if (config.compile) {
            diag << "grailviz: warning: --compile needs a file output; "
                    "skipping compilation\n";
        }
        return kExitOk;
    }

    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        diag << "grailviz: error: cannot open output file '"
             << config.output_path << "'\n";
        return kExitIoError;
    }
    file << document;
    file.close();
    if (!file) {
        diag << "grailviz: error: cannot write output file '"
             << config.output_path << "'\n";
        return kExitIoError;
    }
    if (config.compile) {
        detail::compile_output(config.output_path, diag);
    }
    return kExitOk;
}

}  // namespace grailviz

#endif  // GRAILVIZ_CLI_HPP
