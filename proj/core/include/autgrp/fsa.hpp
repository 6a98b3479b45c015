#ifndef AUTGRP_FSA_HPP_
#define AUTGRP_FSA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autgrp/alphabet.hpp"

namespace autgrp {

  using State                    = std::int32_t;
  inline constexpr State kNoState = -1;

  // Partial deterministic automaton. One-track machines read base symbols;
  // two-track machines read padded pairs (a, b) with a, b in base + {PAD},
  // never (PAD, PAD). Transitions are a dense states x labels table.
  class Fsa {
   public:
    Fsa() = default;
    // A machine with no states yet.
    Fsa(std::size_t base_size, int tracks);

    static Fsa empty_language(std::size_t base_size, int tracks);
    static Fsa all_words(std::size_t base_size);
    // Two-track identity relation {(w, w)}.
    static Fsa diagonal(std::size_t base_size);

    int tracks() const noexcept {
      return tracks_;
    }

    std::size_t base_size() const noexcept {
      return base_;
    }

    std::size_t label_count() const noexcept {
      return labels_;
    }

    std::size_t num_states() const noexcept {
      return accepting_.size();
    }

    // Pair label encoding; either side may be kPad (not both).
    std::size_t pair_label(Symbol a, Symbol b) const;
    std::pair<Symbol, Symbol> label_pair(std::size_t label) const;
    bool is_valid_label(std::size_t label) const;

    State add_state(bool accepting = false);

    State start() const noexcept {
      return start_;
    }

    void set_start(State s);

    bool is_accepting(State s) const {
      return accepting_.at(s);
    }

    void set_accepting(State s, bool accept);

    State target(State s, std::size_t label) const {
      return table_[static_cast<std::size_t>(s) * labels_ + label];
    }

    void set_transition(State from, std::size_t label, State to);

    // Word-difference (or other) annotations; empty when absent.
    std::vector<Word> const& state_labels() const noexcept {
      return state_labels_;
    }

    void set_state_labels(std::vector<Word> labels);

    // Number of defined transitions.
    std::size_t num_transitions() const;

    // Track 1. Throws InputError on symbols outside the alphabet or when
    // called on a two-track machine.
    bool accepts(Word const& w) const;
    // Track 2; the shorter word is padded.
    bool accepts(Word const& v, Word const& w) const;

    // State reached, or kNoState.
    State run(Word const& w) const;
    State run(Word const& v, Word const& w) const;

    bool operator==(Fsa const&) const = default;

   private:
    void check_state(State s) const;

    int                base_   = 0;
    int                tracks_ = 1;
    std::size_t        labels_ = 0;
    State              start_  = kNoState;
    std::vector<bool>  accepting_;
    std::vector<State> table_;
    std::vector<Word>  state_labels_;
  };

  // Drop states not reachable from start or not co-reachable to an accept
  // state (start is always kept). Annotations are preserved.
  Fsa trim(Fsa const& a);

  // Renumber states breadth-first from start, following labels in order.
  Fsa canonical(Fsa const& a);

  Fsa intersect(Fsa const& a, Fsa const& b);
  Fsa unite(Fsa const& a, Fsa const& b);
  // For two-track machines the complement is taken within the set of
  // well-formed padded pairs.
  Fsa complement(Fsa const& a);

  enum class Side : std::uint8_t { first, second };

  // {v : exists w, (v, w) accepted} (or the symmetric set for `second`).
  Fsa project(Fsa const& a, Side side);

  // {(v, w) : exists u, (v, u) in L(a) and (u, w) in L(b)}; the middle word
  // may outrun both outer words.
  Fsa compose2(Fsa const& a, Fsa const& b);

  // Minimal partial deterministic machine, canonically numbered.
  Fsa minimize(Fsa const& a);

  struct LanguageDiff {
    bool equal = true;
    // Shortest element of the symmetric difference (first track / second
    // track; `second` is empty for one-track machines).
    Word first;
    Word second;
    bool in_first_machine = false;
  };

  LanguageDiff equal_languages(Fsa const& a, Fsa const& b);

  // Accepted words of length <= maxlen in shortlex order (track 1).
  std::vector<Word> enumerate(Fsa const& a, std::size_t maxlen);

  using BigCount = boost::multiprecision::cpp_int;

  // Number of accepted words of length exactly n (track 1).
  BigCount count_accepted(Fsa const& a, std::size_t n);

  // count_accepted for every length 0..maxlen.
  std::vector<BigCount> growth(Fsa const& a, std::size_t maxlen);

  // Structural problems: non-reachable states, PAD discipline violations.
  std::vector<std::string> check_structure(Fsa const& a);

}  // namespace autgrp

#endif  // AUTGRP_FSA_HPP_
