#ifndef AUTGRP_ORDER_HPP_
#define AUTGRP_ORDER_HPP_

#include <compare>
#include <cstdint>
#include <string_view>

#include "autgrp/alphabet.hpp"

namespace autgrp {

  // Supported reduction orders. Shortlex is WTLEX with every weight 1.
  enum class OrderKind : std::uint8_t { wtlex, wtshortlex, wreath_shortlex };

  std::string_view to_string(OrderKind kind);

  // A reduction word order over a fixed alphabet.
  class Order {
   public:
    Order() = default;
    Order(Alphabet alphabet, OrderKind kind);

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }

    OrderKind kind() const noexcept {
      return kind_;
    }

    bool is_weighted() const noexcept {
      return kind_ != OrderKind::wreath_shortlex;
    }

    // Total, translation-invariant comparison; equal iff identical words.
    std::strong_ordering compare(Word const& u, Word const& v) const;

    bool less(Word const& u, Word const& v) const {
      return compare(u, v) < 0;
    }

    // Sum of symbol weights.
    long weight_of(Word const& w) const;

    // Maximum symbol level; 0 for the empty word.
    int level_of(Word const& w) const;

    // Longest prefix using only symbols of level <= j.
    Word level_prefix(Word const& w, int j) const;

    // Level-j symbols of level_prefix(w, j), in order.
    Word level_projection(Word const& w, int j) const;

    Word invert(Word const& w) const {
      return invert_word(alphabet_, w);
    }

    bool operator==(Order const&) const = default;

   private:
    std::strong_ordering compare_wreath(Word const& u, Word const& v) const;

    Alphabet  alphabet_;
    OrderKind kind_ = OrderKind::wtlex;
  };

  // Plain lexicographic comparison on symbol indices; a proper prefix
  // precedes its extensions.
  std::strong_ordering lex_compare(Word const& u, Word const& v);

  // Length first, then lexicographic.
  std::strong_ordering shortlex_compare(Word const& u, Word const& v);

  // Length of the longest common prefix.
  std::size_t common_prefix(Word const& u, Word const& v);

}  // namespace autgrp

#endif  // AUTGRP_ORDER_HPP_
