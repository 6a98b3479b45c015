#ifndef AUTGRP_PRESENTATION_HPP_
#define AUTGRP_PRESENTATION_HPP_

#include <utility>
#include <vector>

#include "autgrp/alphabet.hpp"

namespace autgrp {

  struct Relation {
    Word lhs;
    Word rhs;

    bool operator==(Relation const&) const = default;
  };

  // <generators | lhs = rhs, ...>; the alphabet carries the inverse pairs.
  struct Presentation {
    Alphabet              alphabet;
    std::vector<Relation> relations;

    // lhs * rhs^-1 for each relation.
    std::vector<Word> relators() const {
      std::vector<Word> out;
      for (auto const& r : relations) {
        out.push_back(concat(r.lhs, invert_word(alphabet, r.rhs)));
      }
      return out;
    }
  };

}  // namespace autgrp

#endif  // AUTGRP_PRESENTATION_HPP_
