#ifndef AUTGRP_DIFF_HPP_
#define AUTGRP_DIFF_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "autgrp/fsa.hpp"
#include "autgrp/order.hpp"
#include "autgrp/rewrite.hpp"

namespace autgrp {

  // Two-track automaton whose states are word differences. State 0 is the
  // start, labelled by the empty word; every state accepts; a transition
  // d -(g,h)-> d' means g^-1 d h = d' in the group.
  class DiffMachine {
   public:
    DiffMachine() = default;
    // Tails are computed here, so the order must be the one the labels
    // were minimized for.
    DiffMachine(Fsa fsa, std::vector<State> inverse_state, Order const& order);

    Fsa const& fsa() const noexcept {
      return fsa_;
    }

    std::size_t num_states() const noexcept {
      return fsa_.num_states();
    }

    Word const& label(State s) const {
      return fsa_.state_labels().at(s);
    }

    std::vector<Word> const& labels() const noexcept {
      return fsa_.state_labels();
    }

    State start() const noexcept {
      return fsa_.start();
    }

    // State labelled by a word representing label(s)^-1, or kNoState.
    State inverse_state(State s) const {
      return inverse_.at(s);
    }

    std::optional<State> find(Word const& label) const;

    State target(State s, Symbol g, Symbol h) const {
      return fsa_.target(s, fsa_.pair_label(g, h));
    }

    // State reached by the padded pair, or kNoState.
    State trace_pair(Word const& w1, Word const& w2) const {
      return fsa_.run(w1, w2);
    }

    // Least t with (PAD, t) leading from s to the start state, if any.
    std::optional<Word> const& tail(State s) const {
      return tails_.at(s);
    }

    // Longest label.
    std::size_t max_label_length() const;

   private:
    Fsa                              fsa_;
    std::vector<State>               inverse_;
    std::vector<std::optional<Word>> tails_;
    WordMap<State>                   index_;
  };

  // Differences per prefix of a traced pair.
  struct EquationTrace {
    Word              v;
    Word              w;
    std::vector<Word> differences;  // differences[i] = R(v(i)^-1 w(i))
  };

  EquationTrace trace_equation(RewriteSystem const& r,
                               Word const&          v,
                               Word const&          w);

  struct CloseLimits {
    std::size_t max_states = 20000;
  };

  // States: the empty word and the reductions of x(i)^-1 y(i) and
  // y(i)^-1 x(i) for every rule x -> y; transitions wherever the reduction
  // of g^-1 d h (or g^-1 d, d h) is already a state.
  DiffMachine build_from_rules(RewriteSystem const& r);

  // Inverse closure, substring closure and minimal labelling, to a
  // fixpoint. The language only grows.
  DiffMachine close(DiffMachine const& d,
                    RewriteSystem const& r,
                    CloseLimits const& limits = {});

  // Add the differences and transitions of the pair (v, w), whose final
  // difference is known to equal `final_difference` (the empty word when
  // v = w in the group), then re-close.
  DiffMachine add_equation(DiffMachine const&   d,
                           Word const&          v,
                           Word const&          w,
                           RewriteSystem const& r,
                           Word const&          final_difference = {},
                           CloseLimits const&   limits           = {});

  // Several equations at once, one closure at the end.
  struct Equation {
    Word v;
    Word w;
    Word final_difference;
  };

  DiffMachine add_equations(DiffMachine const&           d,
                            std::vector<Equation> const& equations,
                            RewriteSystem const&         r,
                            CloseLimits const&           limits = {});

  // A direct reduction: w = a v b reduces to a u b.
  struct DirectReduction {
    std::size_t start = 0;
    std::size_t end   = 0;  // v = w[start, end)
    Word        u;
  };

  // Leftmost-ending direct D-reduction of w, if any.
  std::optional<DirectReduction> find_reduction(DiffMachine const& d,
                                                Order const&       order,
                                                Word const&        w);

  // Iterate direct D-reductions to a D-irreducible word.
  Word d_reduce(DiffMachine const& d, Order const& order, Word const& w);

  // Violations of the difference-machine axioms, the label distinctness
  // requirement and inverse-state consistency. Axiom (iv) is checked by
  // comparing R(g^-1 d h) with R(d'), which is exact when R is confluent.
  std::vector<std::string> check_axioms(DiffMachine const&   d,
                                        RewriteSystem const& r);

  // Inverse closure, substring closure and label minimality (against R)
  // of the current transitions.
  std::vector<std::string> check_closure(DiffMachine const& d,
                                         RewriteSystem const& r);

}  // namespace autgrp

#endif  // AUTGRP_DIFF_HPP_
