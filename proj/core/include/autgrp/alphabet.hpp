#ifndef AUTGRP_ALPHABET_HPP_
#define AUTGRP_ALPHABET_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace autgrp {

  // Symbols are dense indices into an Alphabet. The index order IS the base
  // lexicographic order, so symbol comparison is integer comparison.
  using Symbol = std::uint16_t;
  using Word   = std::vector<Symbol>;

  // Padding symbol for two-track input.
  inline constexpr Symbol kPad = std::numeric_limits<Symbol>::max();

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (Symbol s : w) {
        h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  template <typename T>
  using WordMap = std::unordered_map<Word, T, WordHash>;

  inline Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  inline Word concat(Word a, Symbol s) {
    a.push_back(s);
    return a;
  }

  // Prefix of length min(i, l(w)).
  inline Word prefix(Word const& w, std::size_t i) {
    return Word(w.begin(), w.begin() + std::min(i, w.size()));
  }

  struct SymbolInfo {
    std::string name;
    std::string inverse;  // name of the inverse symbol (may equal name)
    int         weight = 1;
    int         level  = 1;
  };

  // Generators and their inverses, listed in lexicographic order, with the
  // weight and level attributes the supported orders read.
  class Alphabet {
   public:
    Alphabet() = default;

    // Throws InputError unless names are unique and non-empty, inverses
    // form an involution, weights and levels are >= 1, and every symbol has
    // the level of its inverse.
    explicit Alphabet(std::vector<SymbolInfo> symbols);

    std::size_t size() const noexcept {
      return names_.size();
    }

    std::string const& name(Symbol s) const {
      return names_.at(s);
    }

    Symbol inverse(Symbol s) const {
      return inverse_.at(s);
    }

    int weight(Symbol s) const {
      return weight_.at(s);
    }

    int level(Symbol s) const {
      return level_.at(s);
    }

    int max_level() const noexcept {
      return max_level_;
    }

    std::optional<Symbol> find(std::string_view name) const;

    // Accepts whitespace-separated names, or a run of names without
    // separators, split greedily by longest match. "e" and
    // the empty string denote the empty word. Throws InputError on unknown
    // symbols.
    Word parse_word(std::string_view text) const;

    // Space-separated names; "e" for the empty word.
    std::string format(Word const& w) const;

    std::vector<SymbolInfo> info() const;

    bool operator==(Alphabet const&) const = default;

   private:
    std::vector<std::string> names_;
    std::vector<Symbol>      inverse_;
    std::vector<int>         weight_;
    std::vector<int>         level_;
    int                      max_level_ = 0;
  };

  // Formal inverse: reverse and invert each symbol.
  Word invert_word(Alphabet const& alphabet, Word const& w);

  // Free reduction (cancel adjacent g g^-1).
  Word free_reduce(Alphabet const& alphabet, Word const& w);

}  // namespace autgrp

#endif  // AUTGRP_ALPHABET_HPP_
