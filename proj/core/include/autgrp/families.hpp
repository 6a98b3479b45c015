#ifndef AUTGRP_FAMILIES_HPP_
#define AUTGRP_FAMILIES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autgrp/order.hpp"
#include "autgrp/presentation.hpp"
#include "autgrp/rewrite.hpp"

namespace autgrp {

  // Built-in example groups. The *W knot variants drop the extra generator
  // a and its relator, leaving the Wirtinger presentation.
  enum class Family : std::uint8_t {
    BSpq,     // <x, y | y x^p = x^q y>
    BSpNegq,  // <x, y | y x^p = x^-q y>
    Hpq,      // <x, y | x^p y = y^-1 x^q>
    HpNegq,   // <x, y | x^p y = y^-1 x^-q>
    KNOT41,
    KNOT52,
    KNOT74,
    KNOT41W,
    KNOT52W,
    KNOT74W
  };

  struct FamilySpec {
    Family family = Family::BSpq;
    int    p      = 1;
    int    q      = 1;
  };

  struct BuiltinFamily {
    Presentation presentation;
    Order        order;
    // the displayed complete rewriting system (two-generator families)
    std::optional<RewriteSystem> expected;
  };

  std::optional<Family> family_from_name(std::string_view name);
  std::string_view      family_name(Family f);
  std::vector<Family>   all_families();

  // Whether p and q are read.
  bool family_has_parameters(Family f);

  // Throws InputError when p or q < 1. Two-generator families use x, X at
  // level 1 and y, Y at level 2 under the wreath order; knot families use
  // shortlex with the displayed generator order.
  BuiltinFamily builtin_family(FamilySpec const& spec);

  // Same knot group, lexorder given by `generators` (each followed by its
  // inverse).
  BuiltinFamily knot_with_order(Family f, std::vector<std::string> const& generators);

}  // namespace autgrp

#endif  // AUTGRP_FAMILIES_HPP_
