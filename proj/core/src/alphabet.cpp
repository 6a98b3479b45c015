#include "autgrp/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "autgrp/error.hpp"

namespace autgrp {

  Alphabet::Alphabet(std::vector<SymbolInfo> symbols) {
    if (symbols.size() >= kPad) {
      throw InputError("alphabet too large");
    }
    for (auto const& s : symbols) {
      if (s.name.empty()) {
        throw InputError("empty symbol name");
      }
      if (s.name == "e" || s.name == "_") {
        throw InputError("symbol name '" + s.name + "' is reserved");
      }
      if (std::any_of(s.name.begin(), s.name.end(), [](unsigned char c) {
            return std::isspace(c) || c == ',' || c == '#';
          })) {
        throw InputError("invalid symbol name '" + s.name + "'");
      }
      if (std::find(names_.begin(), names_.end(), s.name) != names_.end()) {
        throw InputError("duplicate symbol '" + s.name + "'");
      }
      if (s.weight < 1) {
        throw InputError("weight of '" + s.name + "' must be positive");
      }
      if (s.level < 1) {
        throw InputError("level of '" + s.name + "' must be positive");
      }
      names_.push_back(s.name);
      weight_.push_back(s.weight);
      level_.push_back(s.level);
      max_level_ = std::max(max_level_, s.level);
    }
    inverse_.resize(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      auto inv = find(symbols[i].inverse);
      if (!inv) {
        throw InputError("inverse of '" + symbols[i].name + "' ('"
                         + symbols[i].inverse + "') is not a symbol");
      }
      inverse_[i] = *inv;
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      Symbol j = inverse_[i];
      if (inverse_[j] != i) {
        throw InputError("inverse of '" + names_[i]
                         + "' is not an involution");
      }
      if (level_[i] != level_[j]) {
        throw InputError("'" + names_[i] + "' and its inverse '" + names_[j]
                         + "' have different levels");
      }
    }
  }

  std::optional<Symbol> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) {
        return static_cast<Symbol>(i);
      }
    }
    return std::nullopt;
  }

  Word Alphabet::parse_word(std::string_view text) const {
    Word               result;
    std::istringstream in{std::string(text)};
    std::string        token;
    std::vector<std::string> tokens;
    while (in >> token) {
      tokens.push_back(token);
    }
    if (tokens.size() == 1 && (tokens[0] == "e" || tokens[0] == "1")) {
      return result;
    }
    for (auto const& tok : tokens) {
      if (auto s = find(tok)) {
        result.push_back(*s);
        continue;
      }
      // longest-match tokenization of a run such as "xyX"
      std::size_t pos = 0;
      while (pos < tok.size()) {
        std::size_t best_len = 0;
        Symbol      best     = 0;
        for (std::size_t i = 0; i < names_.size(); ++i) {
          auto const& n = names_[i];
          if (n.size() > best_len && tok.compare(pos, n.size(), n) == 0) {
            best_len = n.size();
            best     = static_cast<Symbol>(i);
          }
        }
        if (best_len == 0) {
          throw InputError("unknown symbol in word '" + tok + "'");
        }
        result.push_back(best);
        pos += best_len;
      }
    }
    return result;
  }

  std::string Alphabet::format(Word const& w) const {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += name(w[i]);
    }
    return out;
  }

  std::vector<SymbolInfo> Alphabet::info() const {
    std::vector<SymbolInfo> out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      out.push_back({names_[i], names_[inverse_[i]], weight_[i], level_[i]});
    }
    return out;
  }

  Word invert_word(Alphabet const& alphabet, Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& s : out) {
      s = alphabet.inverse(s);
    }
    return out;
  }

  Word free_reduce(Alphabet const& alphabet, Word const& w) {
    Word out;
    out.reserve(w.size());
    for (Symbol s : w) {
      if (!out.empty() && alphabet.inverse(out.back()) == s) {
        out.pop_back();
      } else {
        out.push_back(s);
      }
    }
    return out;
  }

}  // namespace autgrp
