#ifndef GRAILVIZ_PARSER_HPP
#define GRAILVIZ_PARSER_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "grailviz/automaton.hpp"

namespace grailviz {

// Instruction-list format, one instruction per line:
//
//   (START) |- s        marks state s initial
//   s -| (FINAL)        marks state s final
//   p x q               transition from p to q labelled x
//
// Fields are separated by whitespace; blank lines are skipped; no ordering
// of instructions is required.

struct StartPseudo {
    StateLabel state;

    friend bool operator==(const StartPseudo&, const StartPseudo&) = default;
};

struct FinalPseudo {
    StateLabel state;

    friend bool operator==(const FinalPseudo&, const FinalPseudo&) = default;
};

/// One parsed input line.
struct Instruction {
    std::variant<StartPseudo, FinalPseudo, Transition> value;
    std::size_t line_number = 0;  // 1-based
};

enum class ParseErrorKind { WrongFieldCount, ReservedTokenMisuse, MalformedPseudo };

struct ParseError {
    std::size_t line_number = 0;  // 1-based, points at the offending line
    ParseErrorKind kind = ParseErrorKind::WrongFieldCount;
    std::string detail;
};

using InstructionsOrError = std::variant<std::vector<Instruction>, ParseError>;
using ParseOutcome = std::variant<Automaton, ParseError>;

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() &&
               std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        std::size_t start = pos;
        while (pos < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        if (pos > start) {
            fields.push_back(line.substr(start, pos - start));
        }
    }
    return fields;
}

inline bool is_arrow(std::string_view token) {
    return token == kStartArrow || token == kFinalArrow;
}

// Classifies one non-blank line. Lines carrying an arrow token must match
// their pseudo-instruction template exactly; reserved tokens anywhere else
// are misuse.
inline std::variant<Instruction, ParseError> classify(
    const std::vector<std::string_view>& fields, std::size_t line_number) {
    if (fields.size() != 3) {
        return ParseError{line_number, ParseErrorKind::WrongFieldCount,
                          "expected 3 whitespace-separated fields, found " +
                              std::to_string(fields.size())};
    }
    const std::string_view first = fields[0];
    const std::string_view second = fields[1];
    const std::string_view third = fields[2];

    if (is_arrow(first) || is_arrow(second) || is_arrow(third)) {
        if (second == kStartArrow && first == kStartToken &&
            is_valid_label(third)) {
            return Instruction{StartPseudo{StateLabel(third)}, line_number};
        }
        if (second == kFinalArrow && third == kFinalToken &&
            is_valid_label(first)) {
            return Instruction{FinalPseudo{StateLabel(first)}, line_number};
        }
        return ParseError{
            line_number, ParseErrorKind::MalformedPseudo,
            "line does not match \"(START) |- state\" or \"state -| (FINAL)\""};
    }
    for (std::string_view field : {first, second, third}) {
        if (is_reserved_token(field)) {
            return ParseError{line_number, ParseErrorKind::ReservedTokenMisuse,
                              "reserved token \"" + std::string(field) +
                                  "\" used outside a pseudo-instruction"};
        }
    }
    return Instruction{Transition{StateLabel(first), std::string(second),
                                  StateLabel(third)},
                       line_number};
}

}  // namespace detail

/// Reads the instruction list line by line; stops at the first bad line.
inline InstructionsOrError read_instructions(std::string_view text) {
    std::vector<Instruction> instructions;
    std::size_t line_number = 0;
    while (!text.empty()) {
        const std::size_t newline = text.find('\n');
        const std::string_view line =
            text.substr(0, std::min(newline, text.size()));
        text.remove_prefix(
            newline == std::string_view::npos ? text.size() : newline + 1);
        ++line_number;
        auto fields = detail::split_fields(line);
        if (fields.empty()) {
            continue;  // blank or whitespace-only line
        }
        auto classified = detail::classify(fields, line_number);
        if (auto* error = std::get_if<ParseError>(&classified)) {
            return *error;
        }
        instructions.push_back(std::get<Instruction>(classified));
    }
    return instructions;
}

/// Parses instruction-list text into an Automaton. States are collected in
/// first-seen order, scanning lines top to bottom and fields left to right.
inline ParseOutcome parse(std::string_view text) {
    InstructionsOrError read = read_instructions(text);
    if (auto* error = std::get_if<ParseError>(&read)) {
        return *error;
    }
    Automaton automaton;
    for (const Instruction& instruction :
         std::get<std::vector<Instruction>>(read)) {
        std::visit(
            [&automaton](const auto& value) {
                using T = std::decay_t<decltype(value)>;
                if constexpr (std::is_same_v<T, StartPseudo>) {
                    automaton.mark_initial(value.state);
                } else if constexpr (std::is_same_v<T, FinalPseudo>) {
                    automaton.mark_final(value.state);
                } else {
                    automaton.add_transition(value.source, value.label,
                                             value.sink);
                }
            },
            instruction.value);
    }
    return automaton;
}

/// Canonical instruction-list text: start pseudo-instructions first (in
/// states order), then transitions (stored order), then final
/// pseudo-instructions (states order). One instruction per line,
/// single-space separated, trailing newline.
inline std::string serialize(const Automaton& automaton) {
    std::string out;
    for (const StateEntry& state : automaton.states()) {
        if (state.kind == StateKind::Start || state.kind == StateKind::Both) {
            out.append(kStartToken);
            out.append(" ");
            out.append(kStartArrow);
            out.append(" ");
            out.append(state.label);
            out.push_back('\n');
        }
    }
    for (const Transition& t : automaton.transitions()) {
        out.append(t.source);
        out.push_back(' ');
        out.append(t.label);
        out.push_back(' ');
        out.append(t.sink);
        out.push_back('\n');
    }
    for (const StateEntry& state : automaton.states()) {
        if (state.kind == StateKind::Final || state.kind == StateKind::Both) {
            out.append(state.label);
            out.append(" ");
            out.append(kFinalArrow);
            out.append(" ");
            out.append(kFinalToken);
            out.push_back('\n');
        }
    }
    return out;
}

inline std::string_view describe(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::WrongFieldCount: return "wrong field count";
        case ParseErrorKind::ReservedTokenMisuse: return "reserved token misuse";
        case ParseErrorKind::MalformedPseudo: return "malformed pseudo-instruction";
    }
    return "unknown";
}

}  // namespace grailviz

#endif  // GRAILVIZ_PARSER_HPP
