#ifndef AUTGRP_TESTS_GRAMMARS_HPP_
#define AUTGRP_TESTS_GRAMMARS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "support.hpp"

// Membership oracles for the normal-form languages of the two-generator
// families, written from the displayed word shapes and independent of any
// rewriting. Symbols are x X y Y.
namespace autgrp::test {

  // x^{e_1} y^{c_1} ... x^{e_k} y^{c_k} x^d; e_1 may be 0, later e_i not.
  struct Syllables {
    std::vector<std::pair<int, int>> xy;
    int                              tail = 0;
  };

  inline std::optional<Syllables> syllables(Word const& w) {
    auto bs = blocks(w);
    if (!bs) {
      return std::nullopt;
    }
    Syllables out;
    int       pending = 0;
    for (auto const& b : *bs) {
      if (b.gen == 0) {
        pending = b.power;
      } else {
        out.xy.emplace_back(pending, b.power);
        pending = 0;
      }
    }
    out.tail = pending;
    return out;
  }

  inline bool in_range(int e, int lo, int hi) {
    return lo <= e && e <= hi;
  }

  // y^a x^{b_1} y^{c_1} ... x^{b_k} y^{c_k} x^d with b_i in [1, s] or
  // [s+1-q, -1] when c_i > 0 and in [1, r] or [r+1-p, -1] when c_i < 0.
  // The same shape serves G_{p,-q}.
  inline bool in_bs_language(int p, int q, Word const& w) {
    auto syl = syllables(w);
    if (!syl) {
      return false;
    }
    int const r = p / 2, s = q / 2;
    for (std::size_t i = 0; i < syl->xy.size(); ++i) {
      auto [b, c] = syl->xy[i];
      if (i == 0 && b == 0) {
        continue;  // the leading y^a
      }
      int const top = c > 0 ? s : r;
      int const n   = c > 0 ? q : p;
      if (!(in_range(b, 1, top) || in_range(b, top + 1 - n, -1))) {
        return false;
      }
    }
    return true;
  }

  // H_{p,q}: no y^-1; every x-exponent before a y lies in
  // [t+1-(p+q), t], t = (p+q)/2; after the first y it is neither 0 nor
  // the representative of p in that window (y x^p y is reducible).
  inline bool in_h_language(int p, int q, Word const& w) {
    auto syl = syllables(w);
    if (!syl) {
      return false;
    }
    int const t     = (p + q) / 2;
    int const lo    = t + 1 - (p + q);
    int const p_rep = p <= t ? p : p - (p + q);
    for (std::size_t i = 0; i < syl->xy.size(); ++i) {
      auto [a, b] = syl->xy[i];
      if (b < 0 || !in_range(a, lo, t)) {
        return false;
      }
      if (i > 0 && (a == 0 || a == p_rep)) {
        return false;
      }
    }
    return true;
  }

  // H_{p,-p}: no y^-1; after the first y, x-exponents are neither 0 nor p.
  inline bool in_h_neg_language(int p, Word const& w) {
    auto syl = syllables(w);
    if (!syl) {
      return false;
    }
    for (std::size_t i = 0; i < syl->xy.size(); ++i) {
      auto [a, b] = syl->xy[i];
      if (b < 0 || (i > 0 && (a == 0 || a == p))) {
        return false;
      }
    }
    return true;
  }

}  // namespace autgrp::test

#endif  // AUTGRP_TESTS_GRAMMARS_HPP_
