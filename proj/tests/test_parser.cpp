#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "grailviz/parser.hpp"
#include "support/corpus.hpp"
#include "support/random_automaton.hpp"

using namespace grailviz;
using namespace grailviz::tests;

namespace {

Automaton parse_ok(const std::string& text) {
    ParseOutcome outcome = parse(text);
    REQUIRE(std::holds_alternative<Automaton>(outcome));
    return std::get<Automaton>(outcome);
}

ParseError parse_err(const std::string& text) {
    ParseOutcome outcome = parse(text);
    REQUIRE(std::holds_alternative<ParseError>(outcome));
    return std::get<ParseError>(outcome);
}

}  // namespace

TEST_CASE("parse eight-state example") {
    const Automaton a = parse_ok(kEightStateText);
    CHECK(a == eight_state_automaton());
    CHECK(a.state_count() == 8);
    CHECK(a.transitions().size() == 6);

    std::vector<StateLabel> order;
    std::vector<StateKind> kinds;
    for (const StateEntry& state : a.states()) {
        order.push_back(state.label);
        kinds.push_back(state.kind);
    }
    CHECK(order ==
          std::vector<StateLabel>{"0", "6", "3", "1", "5", "7", "9", "11"});
    CHECK(kinds == std::vector<StateKind>{
                       StateKind::Start, StateKind::Start, StateKind::Both,
                       StateKind::Plain, StateKind::Final, StateKind::Plain,
                       StateKind::Final, StateKind::Plain});
}

TEST_CASE("parse two-state example") {
    const Automaton a = parse_ok(kTwoStateText);
    CHECK(a == two_state_automaton());
    CHECK(a.state_count() == 2);
    CHECK(a.kind_of("0") == StateKind::Start);
    CHECK(a.kind_of("1") == StateKind::Final);
    CHECK(a.transitions().size() == 4);
}

TEST_CASE("parse empty and blank input") {
    CHECK(parse_ok("") == Automaton{});
    CHECK(parse_ok("\n\n  \n\t\n") == Automaton{});
}

TEST_CASE("parse is whitespace tolerant") {
    const Automaton a = parse_ok("  0\t\ta   1 \n(START)  |-\t0\n");
    CHECK(a.state_count() == 2);
    CHECK(a.kind_of("0") == StateKind::Start);
    REQUIRE(a.transitions().size() == 1);
    CHECK(a.transitions()[0] == Transition{"0", "a", "1"});
}

TEST_CASE("parse accepts CRLF line endings") {
    const Automaton a = parse_ok("(START) |- 0\r\n0 a 1\r\n1 -| (FINAL)\r\n");
    CHECK(a.state_count() == 2);
    CHECK(a.kind_of("1") == StateKind::Final);
}

TEST_CASE("parse drops duplicate instructions") {
    const Automaton a =
        parse_ok("(START) |- 0\n(START) |- 0\n0 a 1\n0 a 1\n0 a 1\n");
    CHECK(a.kind_of("0") == StateKind::Start);
    CHECK(a.transitions().size() == 1);
}

TEST_CASE("parse errors") {
    SECTION("wrong field count") {
        const ParseError e = parse_err("0 a");
        CHECK(e.line_number == 1);
        CHECK(e.kind == ParseErrorKind::WrongFieldCount);

        CHECK(parse_err("0 a 1 2").kind == ParseErrorKind::WrongFieldCount);
        CHECK(parse_err("0").kind == ParseErrorKind::WrongFieldCount);
    }
    SECTION("reserved token misuse") {
        CHECK(parse_err("(START) a 0").kind ==
              ParseErrorKind::ReservedTokenMisuse);
        CHECK(parse_err("0 a (FINAL)").kind ==
              ParseErrorKind::ReservedTokenMisuse);
        CHECK(parse_err("0 (START) 1").kind ==
              ParseErrorKind::ReservedTokenMisuse);
    }
    SECTION("malformed pseudo-instructions") {
        CHECK(parse_err("0 |- 1").kind == ParseErrorKind::MalformedPseudo);
        CHECK(parse_err("(START) |- (FINAL)").kind ==
              ParseErrorKind::MalformedPseudo);
        CHECK(parse_err("0 -| 1").kind == ParseErrorKind::MalformedPseudo);
        CHECK(parse_err("(START) -| 0").kind ==
              ParseErrorKind::MalformedPseudo);
        CHECK(parse_err("|- a 0").kind == ParseErrorKind::MalformedPseudo);
        CHECK(parse_err("0 a -|").kind == ParseErrorKind::MalformedPseudo);
    }
    SECTION("line numbers count blank lines") {
        const ParseError e = parse_err("\n\n0 a\n");
        CHECK(e.line_number == 3);
    }
    SECTION("first bad line wins") {
        const ParseError e = parse_err("0 a 1\nbad line here and more\n0 b\n");
        CHECK(e.line_number == 2);
    }
}

TEST_CASE("read_instructions keeps line numbers") {
    InstructionsOrError read = read_instructions("(START) |- 0\n\n0 a 1\n");
    REQUIRE(std::holds_alternative<std::vector<Instruction>>(read));
    const auto& instructions = std::get<std::vector<Instruction>>(read);
    REQUIRE(instructions.size() == 2);
    CHECK(instructions[0].line_number == 1);
    CHECK(std::holds_alternative<StartPseudo>(instructions[0].value));
    CHECK(instructions[1].line_number == 3);
    CHECK(std::holds_alternative<Transition>(instructions[1].value));
}

TEST_CASE("serialize") {
    SECTION("empty automaton") { CHECK(serialize(Automaton{}).empty()); }
    SECTION("single state marked both") {
        Automaton a;
        a.mark_initial("0");
        a.mark_final("0");
        CHECK(serialize(a) == "(START) |- 0\n0 -| (FINAL)\n");
    }
    SECTION("canonical input reproduces byte for byte") {
        CHECK(serialize(parse_ok(kEightStateText)) == kEightStateText);
        CHECK(serialize(parse_ok(kTwoStateText)) == kTwoStateText);
    }
}

TEST_CASE("round trip on canonically built automata") {
    std::mt19937 rng(987654321);
    for (int round = 0; round < 200; ++round) {
        const Automaton a = random_automaton(rng);
        const std::string text = serialize(a);
        CHECK(parse_ok(text) == a);
        CHECK(serialize(parse_ok(text)) == text);
    }
}

TEST_CASE("serialize then parse stabilizes after one pass") {
    // Instruction order in the input is free, so one serialize/parse pass
    // may reorder states; after that pass the value is a fixed point.
    const Automaton scrambled =
        parse_ok("1 a 0\n(START) |- 0\n1 -| (FINAL)\n0 -| (FINAL)\n");
    const Automaton canonical = parse_ok(serialize(scrambled));
    CHECK(parse_ok(serialize(canonical)) == canonical);
    CHECK(serialize(parse_ok(serialize(canonical))) == serialize(canonical));
}

namespace {

std::vector<std::string> split_newline_terminated(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string> split_on_spaces(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        const std::size_t begin = pos;
        while (pos < line.size() && line[pos] != ' ') ++pos;
        if (pos > begin) fields.push_back(line.substr(begin, pos - begin));
    }
    return fields;
}

}  // namespace

TEST_CASE("parse never loses a state") {
    std::mt19937 rng(13579);
    for (int round = 0; round < 50; ++round) {
        const Automaton a = random_automaton(rng);
        const std::string text = serialize(a);
        const Automaton reparsed = parse_ok(text);

        // Re-derive the expected state list straight from the text: every
        // state token, first-seen order, scanning left to right.
        std::vector<std::string> expected;
        for (const std::string& line : split_newline_terminated(text)) {
            const std::vector<std::string> fields = split_on_spaces(line);
            if (fields.size() != 3) continue;
            std::vector<std::string> mentioned;
            if (fields[0] == "(START)") {
                mentioned = {fields[2]};
            } else if (fields[2] == "(FINAL)") {
                mentioned = {fields[0]};
            } else {
                mentioned = {fields[0], fields[2]};
            }
            for (const std::string& label : mentioned) {
                if (std::find(expected.begin(), expected.end(), label) ==
                    expected.end()) {
                    expected.push_back(label);
                }
            }
        }

        std::vector<std::string> actual;
        for (const StateEntry& state : reparsed.states()) {
            actual.push_back(state.label);
        }
        CHECK(actual == expected);
    }
}

TEST_CASE("parsing is insensitive to instruction order") {
    std::mt19937 rng(24680);
    for (int round = 0; round < 50; ++round) {
        const Automaton a = random_automaton(rng);
        std::vector<std::string> lines = split_newline_terminated(serialize(a));
        std::shuffle(lines.begin(), lines.end(), rng);
        std::string shuffled;
        for (const std::string& line : lines) {
            shuffled += line;
            shuffled += '\n';
        }

        const Automaton b = parse_ok(shuffled);

        // Same transition set, same kinds, same state set; only the order
        // of the states list may move.
        auto sorted_transitions = [](const Automaton& m) {
            std::vector<Transition> ts = m.transitions();
            std::sort(ts.begin(), ts.end(),
                      [](const Transition& lhs, const Transition& rhs) {
                          return std::tie(lhs.source, lhs.label, lhs.sink) <
                                 std::tie(rhs.source, rhs.label, rhs.sink);
                      });
            return ts;
        };
        CHECK(sorted_transitions(a) == sorted_transitions(b));
        REQUIRE(a.state_count() == b.state_count());
        for (const StateEntry& state : a.states()) {
            CHECK(b.kind_of(state.label) == state.kind);
        }
    }
}
