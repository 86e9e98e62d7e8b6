#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "akc/automaton.hpp"

namespace akc {

/// Complete DFA over {0,1} recognizing the set S of prefixes after which the
/// next letter is selected.
class SelectionRule {
public:
    SelectionRule(std::size_t states, StateId initial, std::vector<StateId> accepting,
                  std::vector<std::array<StateId, 2>> transitions);

    std::size_t state_count() const { return transitions_.size(); }
    StateId initial() const { return initial_; }
    bool accepting(StateId s) const { return accepting_.at(s); }
    StateId step(StateId s, Letter l) const { return transitions_.at(s).at(l); }
    const std::vector<std::array<StateId, 2>>& transitions() const { return transitions_; }

    /// Every prefix / no prefix belongs to S.
    static SelectionRule all();
    static SelectionRule none();
    /// Selects positions 0, 2, 4, ... (even-length prefixes).
    static SelectionRule parity();

private:
    StateId initial_;
    std::vector<bool> accepting_;
    std::vector<std::array<StateId, 2>> transitions_;
};

struct SplitWord {
    Word selected;      ///< u
    Word non_selected;  ///< v

    bool operator==(const SplitWord&) const = default;
};

/// w_i goes to u iff the state before reading it is accepting.
SplitWord apply_selection(const SelectionRule& rule, const Word& w);
SplitWord apply_selection_from(const SelectionRule& rule, StateId start, const Word& w);

/// Rebuilds w from (u, v); nullopt ("inconsistent") when the side the rule
/// asks for is exhausted while the other still has letters.
std::optional<Word> merge(const SelectionRule& rule, const Word& u, const Word& v);

/// One graph state per DFA state; transition q -b-> q' becomes (b, eps, b)
/// when q is accepting and (eps, b, b) otherwise.
PairDescriptionMode splitter_mode(const SelectionRule& rule);

/// R'(u', v, w) = exists u: Q(u', u) and R(u, v, w), as a product graph
/// synchronizing Q's object tape with R's first description tape.
PairDescriptionMode joint(const DescriptionMode& q, const PairDescriptionMode& r);

enum class SelectionClass { finite_on_normal, positive_density_on_normal, mixed };

std::string to_string(SelectionClass c);

/// Looks at the terminal strongly connected components reachable from the
/// initial state. On a normal input the run ends up in one of them.
SelectionClass classify_selection(const SelectionRule& rule);

/// Terminal SCCs reachable from the initial state, each as a sorted state list.
std::vector<std::vector<StateId>> terminal_components(const SelectionRule& rule);

/// Text format: `states N`, `initial Q`, `accepting Q...`, `trans FROM LETTER TO`.
SelectionRule parse_selection_rule(std::string_view text);
std::string serialize_selection_rule(const SelectionRule& rule);

} // namespace akc
