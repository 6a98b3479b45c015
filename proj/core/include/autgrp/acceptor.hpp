#ifndef AUTGRP_ACCEPTOR_HPP_
#define AUTGRP_ACCEPTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "autgrp/diff.hpp"
#include "autgrp/fsa.hpp"
#include "autgrp/history.hpp"

namespace autgrp {

  // A difference history (d, f(v, u)).
  struct DiffHistory {
    State   state = kNoState;
    History hist;

    bool operator==(DiffHistory const&) const = default;
  };

  // Membership predicate for the finite set H of difference histories the
  // acceptor keeps.
  struct HSpec {
    OrderKind kind = OrderKind::wtlex;
    // weighted: lower[d] <= wtd <= upper, with lower[d] = -wt(label d) and
    // upper the largest label weight
    std::vector<long> lower;
    long              upper = 0;
    // wreath: overhangs of length <= K
    std::size_t K = 0;
  };

  // How K is read off the labels: the longest pi_j(label), or the largest
  // number of same-level symbols anywhere in a label (never smaller).
  enum class WreathBound : std::uint8_t { projection, level_count };

  HSpec make_hspec(Order const&       order,
                   DiffMachine const& d,
                   WreathBound        bound = WreathBound::projection);

  bool in_H(HSpec const& spec, DiffHistory const& dh);

  // Overhang cap for history steps: K + 1.
  inline std::size_t history_cap(HSpec const& spec) {
    return spec.kind == OrderKind::wreath_shortlex ? spec.K + 1 : kNoCap;
  }

  // Difference histories of the pairs (g, h), h a generator or empty,
  // filtered through H; nothing when some z < g has (g, z) reaching the
  // identity difference.
  std::optional<std::vector<DiffHistory>> dh_initial(DiffMachine const& d,
                                                     Order const&       order,
                                                     HSpec const&       spec,
                                                     Symbol             g);

  // Target under (g, t), t possibly kPad; nothing when the transition is
  // missing, leads to the identity difference, or t is a symbol while the
  // history is padded. Not filtered through H.
  std::optional<DiffHistory> dh_target(DiffMachine const& d,
                                       Order const&       order,
                                       HSpec const&       spec,
                                       DiffHistory const& dh,
                                       Symbol             g,
                                       Symbol             t);

  enum class FailureRule : std::uint8_t { none, a, b, c };

  struct Failure {
    FailureRule rule = FailureRule::none;
    Symbol      h    = kPad;  // the generator for rules b and c
  };

  // Whether reading g after a word carrying dh exposes a reduction; rules
  // are tried in the order a, b, c.
  Failure failure_test(DiffMachine const& d,
                       Order const&       order,
                       DiffHistory const& dh,
                       Symbol             g);

  struct AcceptorOptions {
    // drop a history when another with the same state, length flag and lex
    // value has at least its wtd (weighted orders only)
    bool        prune      = false;
    std::size_t max_states = 2000000;  // LimitError beyond this
    // LimitError once the raw states' history sets hold this many entries
    // in total; build time is roughly proportional to it
    std::size_t max_entries = 200000000;
    bool        keep_sets  = false;    // fill AcceptorBuild::sets
  };

  struct AcceptorBuild {
    Fsa raw;      // one state per set of difference histories
    Fsa minimal;  // minimized raw
    // per raw state, its difference histories (when kept)
    std::vector<std::vector<DiffHistory>> sets;
    std::size_t                           histories = 0;  // distinct seen
    std::size_t                           entries   = 0;  // summed set sizes
  };

  AcceptorBuild build_acceptor_full(DiffMachine const&     d,
                                    Order const&           order,
                                    HSpec const&           spec,
                                    AcceptorOptions const& options = {});

  // Minimized word acceptor.
  Fsa build_acceptor(DiffMachine const&     d,
                     Order const&           order,
                     HSpec const&           spec,
                     AcceptorOptions const& options = {});

}  // namespace autgrp

#endif  // AUTGRP_ACCEPTOR_HPP_
