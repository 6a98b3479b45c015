#include "autgrp/order.hpp"

#include <algorithm>
#include <span>

#include "autgrp/error.hpp"

namespace autgrp {

  namespace {
    using View = std::span<Symbol const>;

    std::strong_ordering lex_view(View u, View v) {
      return std::lexicographical_compare_three_way(
          u.begin(), u.end(), v.begin(), v.end());
    }

    std::strong_ordering shortlex_view(View u, View v) {
      if (u.size() != v.size()) {
        return u.size() <=> v.size();
      }
      return lex_view(u, v);
    }
  }  // namespace

  std::string_view to_string(OrderKind kind) {
    switch (kind) {
      case OrderKind::wtlex:
        return "wtlex";
      case OrderKind::wtshortlex:
        return "wtshortlex";
      case OrderKind::wreath_shortlex:
        return "wreathshortlex";
    }
    return "?";
  }

  std::strong_ordering lex_compare(Word const& u, Word const& v) {
    return lex_view(u, v);
  }

  std::strong_ordering shortlex_compare(Word const& u, Word const& v) {
    return shortlex_view(u, v);
  }

  std::size_t common_prefix(Word const& u, Word const& v) {
    auto n = std::min(u.size(), v.size());
    std::size_t i = 0;
    while (i < n && u[i] == v[i]) {
      ++i;
    }
    return i;
  }

  Order::Order(Alphabet alphabet, OrderKind kind)
      : alphabet_(std::move(alphabet)), kind_(kind) {
    if (kind_ == OrderKind::wreath_shortlex) {
      for (Symbol s = 0; s < alphabet_.size(); ++s) {
        if (alphabet_.level(s) != alphabet_.level(alphabet_.inverse(s))) {
          throw InputError("wreath order needs equal levels for '"
                           + alphabet_.name(s) + "' and its inverse");
        }
      }
    }
  }

  long Order::weight_of(Word const& w) const {
    long total = 0;
    for (Symbol s : w) {
      total += alphabet_.weight(s);
    }
    return total;
  }

  int Order::level_of(Word const& w) const {
    int lvl = 0;
    for (Symbol s : w) {
      lvl = std::max(lvl, alphabet_.level(s));
    }
    return lvl;
  }

  Word Order::level_prefix(Word const& w, int j) const {
    Word out;
    for (Symbol s : w) {
      if (alphabet_.level(s) > j) {
        break;
      }
      out.push_back(s);
    }
    return out;
  }

  Word Order::level_projection(Word const& w, int j) const {
    Word out;
    for (Symbol s : w) {
      int l = alphabet_.level(s);
      if (l > j) {
        break;
      }
      if (l == j) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::strong_ordering Order::compare(Word const& u, Word const& v) const {
    for (Symbol s : u) {
      if (s >= alphabet_.size()) {
        throw InputError("symbol out of range");
      }
    }
    for (Symbol s : v) {
      if (s >= alphabet_.size()) {
        throw InputError("symbol out of range");
      }
    }
    switch (kind_) {
      case OrderKind::wtlex:
      case OrderKind::wtshortlex: {
        long wu = weight_of(u);
        long wv = weight_of(v);
        if (wu != wv) {
          return wu <=> wv;
        }
        return kind_ == OrderKind::wtlex ? lex_compare(u, v)
                                         : shortlex_compare(u, v);
      }
      case OrderKind::wreath_shortlex:
        return compare_wreath(u, v);
    }
    return std::strong_ordering::equal;
  }

  // Strip the common prefix, then compare levels, then the top-level
  // projections by shortlex, then recurse on the prefixes below the top
  // level.
  std::strong_ordering Order::compare_wreath(Word const& u0,
                                             Word const& v0) const {
    View u(u0);
    View v(v0);
    while (true) {
      std::size_t c = 0;
      while (c < u.size() && c < v.size() && u[c] == v[c]) {
        ++c;
      }
      u = u.subspan(c);
      v = v.subspan(c);
      if (u.empty() && v.empty()) {
        return std::strong_ordering::equal;
      }
      int lu = 0;
      int lv = 0;
      for (Symbol s : u) {
        lu = std::max(lu, alphabet_.level(s));
      }
      for (Symbol s : v) {
        lv = std::max(lv, alphabet_.level(s));
      }
      if (lu != lv) {
        return lu <=> lv;
      }
      int  top = lu;
      Word pu;
      Word pv;
      for (Symbol s : u) {
        if (alphabet_.level(s) == top) {
          pu.push_back(s);
        }
      }
      for (Symbol s : v) {
        if (alphabet_.level(s) == top) {
          pv.push_back(s);
        }
      }
      if (auto r = shortlex_compare(pu, pv); r != 0) {
        return r;
      }
      auto below = [&](View w) {
        std::size_t i = 0;
        while (i < w.size() && alphabet_.level(w[i]) < top) {
          ++i;
        }
        return w.first(i);
      };
      u = below(u);
      v = below(v);
    }
  }

}  // namespace autgrp
