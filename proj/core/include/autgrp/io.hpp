#ifndef AUTGRP_IO_HPP_
#define AUTGRP_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "autgrp/diff.hpp"
#include "autgrp/fsa.hpp"
#include "autgrp/order.hpp"
#include "autgrp/pipeline.hpp"
#include "autgrp/presentation.hpp"
#include "autgrp/rewrite.hpp"

namespace autgrp {

  // Line-based text formats. Every parser reports the failing line through
  // ParseError; serializers are deterministic, so serialize(parse(s)) is a
  // fixed point after one round.

  struct PresentationFile {
    Presentation presentation;
    Order        order;
  };

  PresentationFile parse_presentation(std::string_view text);
  std::string      serialize_presentation(Presentation const& p,
                                          Order const&        order);

  // Rules file: the same order block followed by `rule lhs -> rhs` lines.
  // Every rule must decrease under the declared order.
  RewriteSystem parse_rules(std::string_view text);
  std::string   serialize_rules(RewriteSystem const& r);

  struct FsaFile {
    std::vector<std::string> alphabet;
    Fsa                      fsa;
  };

  FsaFile     parse_fsa(std::string_view text);
  // States are written breadth-first from start, then any unreachable ones
  // in their current order.
  std::string serialize_fsa(Fsa const& a, std::vector<std::string> const& names);
  std::string serialize_fsa(Fsa const& a, Alphabet const& alphabet);

  std::vector<std::string> symbol_names(Alphabet const& alphabet);

  // Words over a bare name list: space-separated, or unseparated and split
  // by longest match; "e" is the empty word.
  Word parse_symbols(std::vector<std::string> const& names, std::string_view text);

  // Rebuild a difference machine from a labelled two-track machine whose
  // start is the empty-word state.
  DiffMachine diff_machine_from(Fsa const& a, RewriteSystem const& r);

  // `key: value` lines.
  std::string format_report(PipelineReport const& report);

}  // namespace autgrp

#endif  // AUTGRP_IO_HPP_
