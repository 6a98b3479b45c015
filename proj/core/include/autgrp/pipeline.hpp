#ifndef AUTGRP_PIPELINE_HPP_
#define AUTGRP_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autgrp/acceptor.hpp"
#include "autgrp/diff.hpp"
#include "autgrp/fsa.hpp"
#include "autgrp/presentation.hpp"
#include "autgrp/rewrite.hpp"

namespace autgrp {

  struct AutomaticStructure {
    Presentation  presentation;
    Order         order;
    RewriteSystem rules;
    DiffMachine   D;
    Fsa           W;
    Fsa           Me;
    std::vector<Fsa> multipliers;  // indexed by symbol
    bool             verified = false;
  };

  struct PipelineConfig {
    KbLimits    kb;
    std::size_t max_loops = 64;
    // passes with an unchanged difference set before Step 1 is considered
    // stable
    std::size_t stabilization_window = 2;
    // rebuild W whenever D changes; otherwise only when W accepts a pair
    // (w, w') with w' a D-reduction of w
    bool            always_rebuild = true;
    // add one equation per failing generator per loop instead of one
    bool            batch = false;
    AcceptorOptions acceptor;
    CloseLimits     close;
  };

  enum class Outcome : std::uint8_t {
    verified,
    kb_stopped,
    loop_limit,
    axiom_fail
  };

  std::string_view to_string(Outcome o);

  struct StepRecord {
    std::string name;
    double      seconds = 0;
    std::size_t states  = 0;
    std::string note;
  };

  struct PipelineReport {
    Outcome                  outcome = Outcome::loop_limit;
    std::string              order;
    std::string              kb_status;
    std::size_t              kb_passes    = 0;
    std::size_t              rules        = 0;
    bool                     confluent    = false;
    std::size_t              loops        = 0;
    std::size_t              equations    = 0;
    std::size_t              diff_states  = 0;  // D
    std::size_t              diff_l_states = 0; // differences used by M_g
    std::size_t              acceptor_states = 0;
    std::vector<std::size_t> multiplier_states;  // per symbol
    std::size_t              identity_states = 0;
    bool                     step6_skipped   = false;
    std::vector<StepRecord>  steps;
    std::string              witness;  // last failure description
    double                   seconds = 0;
  };

  struct PipelineResult {
    std::optional<AutomaticStructure> structure;  // present iff verified
    PipelineReport                    report;
  };

  // M_g: pairs of W-words whose D-trace ends at the difference of g
  // (the target of (e, g) from the start). `g` empty gives M_e.
  Fsa build_multiplier(Fsa const&            W,
                       DiffMachine const&    d,
                       std::optional<Symbol> g);

  // D states visited by accepted pairs of the (unminimized) multiplier
  // products for every generator.
  std::size_t count_used_differences(Fsa const& W, DiffMachine const& d);

  struct DomainCheck {
    bool   ok = true;
    Symbol g  = 0;
    Word   v;  // shortest word of L(W) with no partner in M_g
  };

  DomainCheck check_domains(Fsa const& W, std::vector<Fsa> const& multipliers);

  // Every missing (g, v), shortest v per generator.
  std::vector<DomainCheck> missing_domains(Fsa const&              W,
                                           std::vector<Fsa> const& multipliers);

  struct AxiomCheck {
    bool ok = true;
    Word relator;
    // a pair in exactly one of M_r and M_e
    Word v;
    Word w;
  };

  AxiomCheck axiom_check(Presentation const&      p,
                         Fsa const&               Me,
                         std::vector<Fsa> const&  multipliers);

  // Composite relation of the multipliers along a word.
  Fsa compose_along(Word const& r, Fsa const& Me, std::vector<Fsa> const& m);

  // Shortest w with (v, w) accepted by the two-track machine.
  std::optional<Word> image(Fsa const& m, Word const& v);

  PipelineResult run_pipeline(Presentation const&   p,
                              Order const&          order,
                              PipelineConfig const& cfg = {});

  // d_reduce on the structure's difference machine.
  Word normal_form(AutomaticStructure const& s, Word const& w);

}  // namespace autgrp

#endif  // AUTGRP_PIPELINE_HPP_
