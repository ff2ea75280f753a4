#ifndef GRAILVIZ_AUTOMATON_HPP
#define GRAILVIZ_AUTOMATON_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace grailviz {

using StateLabel = std::string;

/// Classification of a state by the pseudo-instructions that mention it.
enum class StateKind { Start, Final, Both, Plain };

struct Transition {
    StateLabel source;
    std::string label;
    StateLabel sink;

    friend bool operator==(const Transition&, const Transition&) = default;
};

// Tokens with a fixed meaning in the instruction-list format. They can
// never serve as state or transition labels.
inline constexpr std::string_view kStartToken = "(START)";
inline constexpr std::string_view kFinalToken = "(FINAL)";
inline constexpr std::string_view kStartArrow = "|-";
inline constexpr std::string_view kFinalArrow = "-|";

inline bool is_reserved_token(std::string_view token) {
    return token == kStartToken || token == kFinalToken ||
           token == kStartArrow || token == kFinalArrow;
}

/// A label is a non-empty run of non-whitespace characters that is not a
/// reserved token. The same rule covers state and transition labels.
inline bool is_valid_label(std::string_view token) {
    if (token.empty() || is_reserved_token(token)) {
        return false;
    }
    return std::none_of(token.begin(), token.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
}

struct StateEntry {
    StateLabel label;
    StateKind kind = StateKind::Plain;

    friend bool operator==(const StateEntry&, const StateEntry&) = default;
};

/// The transition list split into three index-aligned columns.
struct TransitionTriples {
    std::vector<StateLabel> sources;
    std::vector<std::string> labels;
    std::vector<StateLabel> sinks;
};

/// A finite automaton kept exactly as the instruction-list format presents
/// it: states in first-seen order with their start/final marks, plus the
/// transitions in input order. Duplicate transitions and repeated marks
/// collapse, so an instruction list denotes a set.
///
/// Build one with mark_initial/mark_final/add_transition, then treat it as
/// an immutable value; reads are safe to share across threads.
class Automaton {
public:
    Automaton() = default;

    /// Registers a state on first sight; later mentions keep the original
    /// slot. Throws std::invalid_argument on an invalid label.
    void add_state(const StateLabel& label) {
        require_valid(label, "state label");
        if (index_.count(label) == 0) {
            index_.emplace(label, states_.size());
            states_.push_back({label, StateKind::Plain});
        }
    }

    void mark_initial(const StateLabel& label) {
        add_state(label);
        StateKind& kind = states_[index_.at(label)].kind;
        if (kind == StateKind::Plain) {
            kind = StateKind::Start;
        } else if (kind == StateKind::Final) {
            kind = StateKind::Both;
        }
    }

    void mark_final(const StateLabel& label) {
        add_state(label);
        StateKind& kind = states_[index_.at(label)].kind;
        if (kind == StateKind::Plain) {
            kind = StateKind::Final;
        } else if (kind == StateKind::Start) {
            kind = StateKind::Both;
        }
    }

    /// Appends a transition; the source is registered before the sink.
    /// An exact duplicate triple is dropped.
    void add_transition(const StateLabel& source, const std::string& label,
                        const StateLabel& sink) {
        require_valid(label, "transition label");
        add_state(source);
        add_state(sink);
        Transition t{source, label, sink};
        if (std::find(transitions_.begin(), transitions_.end(), t) ==
            transitions_.end()) {
            transitions_.push_back(std::move(t));
        }
    }

    std::size_t state_count() const { return states_.size(); }

    const std::vector<StateEntry>& states() const { return states_; }

    const std::vector<Transition>& transitions() const { return transitions_; }

    bool has_state(const StateLabel& label) const {
        return index_.count(label) != 0;
    }

    /// Throws std::out_of_range for labels not in the states list.
    StateKind kind_of(const StateLabel& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) {
            throw std::out_of_range("unknown state \"" + label + "\"");
        }
        return states_[it->second].kind;
    }

    TransitionTriples transition_triples() const {
        TransitionTriples triples;
        triples.sources.reserve(transitions_.size());
        triples.labels.reserve(transitions_.size());
        triples.sinks.reserve(transitions_.size());
        for (const Transition& t : transitions_) {
            triples.sources.push_back(t.source);
            triples.labels.push_back(t.label);
            triples.sinks.push_back(t.sink);
        }
        return triples;
    }

    friend bool operator==(const Automaton& lhs, const Automaton& rhs) {
        return lhs.states_ == rhs.states_ &&
               lhs.transitions_ == rhs.transitions_;
    }

private:
    static void require_valid(const StateLabel& label, const char* what) {
        if (!is_valid_label(label)) {
            throw std::invalid_argument(std::string("invalid ") + what +
                                        " \"" + label + "\"");
        }
    }

    std::vector<StateEntry> states_;
    std::vector<Transition> transitions_;
    std::unordered_map<StateLabel, std::size_t> index_;
};

}  // namespace grailviz

#endif  // GRAILVIZ_AUTOMATON_HPP
