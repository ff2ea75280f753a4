#ifndef GRAILVIZ_TIKZ_HPP
#define GRAILVIZ_TIKZ_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grailviz/automaton.hpp"
#include "grailviz/layout.hpp"

namespace grailviz {

enum class EdgeStyle { Straight, LoopAbove, BendLeft };

/// One rendered edge: all transitions that share an ordered (source, sink)
/// pair, drawn as a single path with a combined label.
struct EdgeRenderPlan {
    StateLabel source;
    StateLabel sink;
    std::vector<std::string> labels;  // transition order, duplicate-free
    EdgeStyle style = EdgeStyle::Straight;

    friend bool operator==(const EdgeRenderPlan&, const EdgeRenderPlan&) = default;
};

enum class OutputMode { Standalone, Fragment };

struct RenderOptions {
    OutputMode mode = OutputMode::Standalone;
    std::string node_distance = "2cm";  // must be a positive length
    double coordinate_scale = 1.0;      // must be > 0
};

/// Groups transitions by ordered (source, sink) pair, in order of first
/// appearance. Self-loops render as loop above; a pair whose reverse pair
/// also carries transitions bends left so the two arcs cannot overlap.
inline std::vector<EdgeRenderPlan> plan_edges(const Automaton& automaton) {
    std::vector<EdgeRenderPlan> plans;
    for (const Transition& t : automaton.transitions()) {
        auto it = std::find_if(plans.begin(), plans.end(),
                               [&t](const EdgeRenderPlan& plan) {
                                   return plan.source == t.source &&
                                          plan.sink == t.sink;
                               });
        if (it == plans.end()) {
            plans.push_back({t.source, t.sink, {t.label}, EdgeStyle::Straight});
        } else {
            it->labels.push_back(t.label);
        }
    }
    for (EdgeRenderPlan& plan : plans) {
        if (plan.source == plan.sink) {
            plan.style = EdgeStyle::LoopAbove;
            continue;
        }
        const bool has_reverse =
            std::any_of(plans.begin(), plans.end(),
                        [&plan](const EdgeRenderPlan& other) {
                            return other.source == plan.sink &&
                                   other.sink == plan.source;
                        });
        if (has_reverse) {
            plan.style = EdgeStyle::BendLeft;
        }
    }
    return plans;
}

/// Escapes characters the typesetter treats specially. Applied to typeset
/// label text only; TikZ node names must stay raw or name lookup breaks.
inline std::string escape_latex(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '#': out += "\\#"; break;
            case '%': out += "\\%"; break;
            case '&': out += "\\&"; break;
            case '_': out += "\\_"; break;
            case '{': out += "\\{"; break;
            case '}': out += "\\}"; break;
            case '~': out += "\\textasciitilde{}"; break;
            case '^': out += "\\textasciicircum{}"; break;
            case '\\': out += "\\textbackslash{}"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

/// Integers print without a decimal point, anything else in minimal
/// decimal form.
inline std::string format_coordinate(double value) {
    const double rounded = std::round(value);
    if (std::abs(value - rounded) < 1e-9 && std::abs(rounded) < 1e15) {
        return std::to_string(static_cast<long long>(rounded));
    }
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.10g", value);
    return buffer;
}

inline std::string_view style_option(EdgeStyle style) {
    switch (style) {
        case EdgeStyle::LoopAbove: return "loop above";
        case EdgeStyle::BendLeft: return "bend left";
        case EdgeStyle::Straight: break;
    }
    return "";
}

inline std::string emit_node(const StateLabel& label, StateKind kind,
                             double x, double y) {
    std::string line = "\\node[state";
    if (kind == StateKind::Start || kind == StateKind::Both) {
        line += ",initial";
    }
    if (kind == StateKind::Final || kind == StateKind::Both) {
        line += ",accepting";
    }
    line += "] (" + label + ") at (" + format_coordinate(x) + "," +
            format_coordinate(y) + ") {$" + escape_latex(label) + "$};";
    return line;
}

inline std::string emit_edge(const EdgeRenderPlan& plan) {
    std::string joined;
    for (const std::string& label : plan.labels) {
        if (!joined.empty()) {
            joined += ", ";
        }
        joined += escape_latex(label);
    }
    std::string line = "\\path[->] (" + plan.source + ") edge[";
    line += style_option(plan.style);
    line += "] node[align=center, anchor=center, above, sloped] {" + joined +
            "} (" + plan.sink + ");";
    return line;
}

inline std::string emit_fragment(const Automaton& automaton,
                                 const Placement& placement,
                                 const RenderOptions& options) {
    if (options.coordinate_scale <= 0) {
        throw std::invalid_argument("coordinate_scale must be positive");
    }
    for (const StateEntry& state : automaton.states()) {
        if (!placement.contains(state.label)) {
            throw std::out_of_range("no placement for state \"" + state.label +
                                    "\"");
        }
    }
    std::string out =
        "\\begin{tikzpicture}[node distance=" + options.node_distance + "]\n\n";
    for (const StateEntry& state : automaton.states()) {
        const GridPoint& point = placement.at(state.label);
        out += emit_node(state.label, state.kind,
                         point.x * options.coordinate_scale,
                         point.y * options.coordinate_scale);
        out.push_back('\n');
    }
    for (const EdgeRenderPlan& plan : plan_edges(automaton)) {
        out += emit_edge(plan);
        out.push_back('\n');
    }
    out += "\n\\end{tikzpicture}\n";
    return out;
}

/// Fragment mode yields the tikzpicture environment alone; Standalone mode
/// wraps it in a minimal compilable document.
inline std::string emit_document(const Automaton& automaton,
                                 const Placement& placement,
                                 const RenderOptions& options) {
    std::string fragment = emit_fragment(automaton, placement, options);
    if (options.mode == OutputMode::Fragment) {
        return fragment;
    }
    std::string out =
        "\\documentclass{standalone}\n"
        "\\usepackage{tikz}\n"
        "\\usetikzlibrary{automata, positioning}\n"
        "\\begin{document}\n";
    out += fragment;
    out += "\\end{document}\n";
    return out;
}

}  // namespace grailviz

#endif  // GRAILVIZ_TIKZ_HPP
