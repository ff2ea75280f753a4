#ifndef GRAILVIZ_LAYOUT_HPP
#define GRAILVIZ_LAYOUT_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "grailviz/automaton.hpp"

namespace grailviz {

struct GridPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Integer grid coordinates per state. One grid unit apart horizontally;
/// visual spacing is the emitter's business.
class Placement {
public:
    void set(const StateLabel& label, GridPoint point) {
        coords_[label] = point;
    }

    bool contains(const StateLabel& label) const {
        return coords_.count(label) != 0;
    }

    const GridPoint& at(const StateLabel& label) const {
        auto it = coords_.find(label);
        if (it == coords_.end()) {
            throw std::out_of_range("no placement for state \"" + label + "\"");
        }
        return it->second;
    }

    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }

    friend bool operator==(const Placement&, const Placement&) = default;

private:
    std::unordered_map<StateLabel, GridPoint> coords_;
};

using XAssignment = std::unordered_map<StateLabel, int>;

/// Array A of y-coordinates, indexed by x-coordinate.
using YArray = std::vector<int>;

/// The i-th state in first-seen order gets x = i.
inline XAssignment assign_x(const Automaton& automaton) {
    XAssignment x;
    x.reserve(automaton.state_count());
    int next = 0;
    for (const StateEntry& state : automaton.states()) {
        x.emplace(state.label, next++);
    }
    return x;
}

/// Pairwise-raising pass: walk the transitions in stored order, skipping
/// self-loops. For endpoints at x-coordinates i < j, take the maximum over
/// the strict interior A[i+1..j-1] (0 when empty), add one, and lift both
/// A[i] and A[j] to the largest of that and their current values. Entries
/// never decrease.
inline YArray assign_y(const Automaton& automaton, const XAssignment& x) {
    YArray heights(automaton.state_count(), 0);
    for (const Transition& t : automaton.transitions()) {
        if (t.source == t.sink) {
            continue;
        }
        int i = x.at(t.source);
        int j = x.at(t.sink);
        if (i > j) {
            std::swap(i, j);
        }
        int interior_max = 0;
        for (int k = i + 1; k < j; ++k) {
            interior_max = std::max(interior_max, heights[k]);
        }
        const int lifted = std::max({interior_max + 1, heights[i], heights[j]});
        heights[i] = lifted;
        heights[j] = lifted;
    }
    return heights;
}

inline Placement layout(const Automaton& automaton) {
    const XAssignment x = assign_x(automaton);
    const YArray heights = assign_y(automaton, x);
    Placement placement;
    for (const StateEntry& state : automaton.states()) {
        const int column = x.at(state.label);
        placement.set(state.label, {column, heights[column]});
    }
    return placement;
}

}  // namespace grailviz

#endif  // GRAILVIZ_LAYOUT_HPP
