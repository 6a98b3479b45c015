#ifndef AUTGRP_TESTS_SUPPORT_HPP_
#define AUTGRP_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "autgrp/diff.hpp"
#include "autgrp/families.hpp"
#include "autgrp/fsa.hpp"
#include "autgrp/order.hpp"
#include "autgrp/pipeline.hpp"

namespace autgrp::test {

  // Fixed seeds everywhere; failures must reproduce.
  inline std::mt19937_64 rng(std::uint64_t salt = 0) {
    return std::mt19937_64(0x5eed5eedULL ^ (salt * 0x9e3779b97f4a7c15ULL));
  }

  inline Word random_word(std::mt19937_64& g, std::size_t alpha, std::size_t maxlen) {
    std::uniform_int_distribution<std::size_t> len(0, maxlen);
    std::uniform_int_distribution<std::size_t> sym(0, alpha - 1);
    Word                                       w(len(g));
    for (auto& s : w) {
      s = static_cast<Symbol>(sym(g));
    }
    return w;
  }

  // Every word of length <= maxlen, shortlex order.
  inline std::vector<Word> all_words(std::size_t alpha, std::size_t maxlen) {
    std::vector<Word> out{Word{}};
    std::size_t       from = 0;
    for (std::size_t len = 1; len <= maxlen; ++len) {
      std::size_t const to = out.size();
      for (std::size_t i = from; i < to; ++i) {
        for (std::size_t s = 0; s < alpha; ++s) {
          out.push_back(concat(out[i], static_cast<Symbol>(s)));
        }
      }
      from = to;
    }
    return out;
  }

  // x X y Y, shortlex.
  inline Order z2_shortlex() {
    return Order(Alphabet({{"x", "X", 1, 1}, {"X", "x", 1, 1}, {"y", "Y", 1, 1}, {"Y", "y", 1, 1}}),
                 OrderKind::wtlex);
  }

  // x X y Y with weights 1 1 3 3.
  inline Order z2_weighted(OrderKind kind) {
    return Order(Alphabet({{"x", "X", 1, 1}, {"X", "x", 1, 1}, {"y", "Y", 3, 1}, {"Y", "y", 3, 1}}),
                 kind);
  }

  // x X at level 1, y Y at level 2.
  inline Order z2_wreath() {
    return Order(Alphabet({{"x", "X", 1, 1}, {"X", "x", 1, 1}, {"y", "Y", 1, 2}, {"Y", "y", 1, 2}}),
                 OrderKind::wreath_shortlex);
  }

  // Six symbols over three levels, for order and history sampling.
  inline Order three_level_wreath() {
    return Order(Alphabet({{"a", "A", 1, 1},
                           {"A", "a", 1, 1},
                           {"b", "B", 1, 2},
                           {"B", "b", 1, 2},
                           {"c", "C", 1, 3},
                           {"C", "c", 1, 3}}),
                 OrderKind::wreath_shortlex);
  }

  // Uneven weights, including a symbol whose inverse weighs differently.
  inline Order uneven_weighted(OrderKind kind) {
    return Order(Alphabet({{"a", "A", 1, 1}, {"A", "a", 2, 1}, {"b", "B", 3, 1}, {"B", "b", 1, 1}}),
                 kind);
  }

  // Pipeline runs are shared across test cases; each family is built once
  // per process.
  inline PipelineResult const& run_family(FamilySpec const& spec) {
    static std::map<std::tuple<int, int, int>, PipelineResult> cache;
    auto key = std::tuple{static_cast<int>(spec.family), spec.p, spec.q};
    if (auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
    auto fam = builtin_family(spec);
    return cache.emplace(key, run_pipeline(fam.presentation, fam.order)).first->second;
  }

  // Families cheap enough for exhaustive checks; one per bundled kind.
  inline std::vector<FamilySpec> sample_families() {
    return {{Family::BSpq, 1, 1},
            {Family::BSpq, 2, 2},
            {Family::BSpNegq, 2, 2},
            {Family::Hpq, 1, 1},
            {Family::HpNegq, 2, 1},
            {Family::KNOT41W, 1, 1},
            {Family::KNOT52W, 1, 1}};
  }

  inline std::string family_label(FamilySpec const& s) {
    std::string out(family_name(s.family));
    if (family_has_parameters(s.family)) {
      out += " " + std::to_string(s.p) + " " + std::to_string(s.q);
    }
    return out;
  }

  // A random accepted pair of a two-track machine with accepting states
  // everywhere (a difference machine): follow defined transitions,
  // respecting padding, for up to maxlen steps.
  inline std::pair<Word, Word> random_walk(std::mt19937_64& g, Fsa const& a, std::size_t maxlen) {
    Word  v, w;
    State s     = a.start();
    bool  v_pad = false, w_pad = false;
    std::size_t const steps = g() % (maxlen + 1);
    for (std::size_t i = 0; i < steps; ++i) {
      std::vector<std::size_t> options;
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        if (!a.is_valid_label(l) || a.target(s, l) == kNoState) {
          continue;
        }
        auto [x, y] = a.label_pair(l);
        if ((v_pad && x != kPad) || (w_pad && y != kPad)) {
          continue;
        }
        options.push_back(l);
      }
      if (options.empty()) {
        break;
      }
      auto l      = options[g() % options.size()];
      auto [x, y] = a.label_pair(l);
      if (x == kPad) {
        v_pad = true;
      } else {
        v.push_back(x);
      }
      if (y == kPad) {
        w_pad = true;
      } else {
        w.push_back(y);
      }
      s = a.target(s, l);
    }
    return {v, w};
  }

  // Exponent-sum blocks: (symbol class, signed run length), where the class
  // is the index of the generator (x or y) and the sign its orientation.
  struct Block {
    int gen;
    int power;
  };

  // Splits a word over x X y Y into maximal signed runs; nothing when the
  // word is not freely reduced.
  inline std::optional<std::vector<Block>> blocks(Word const& w) {
    std::vector<Block> out;
    for (Symbol s : w) {
      int gen  = s / 2;
      int sign = s % 2 == 0 ? 1 : -1;
      if (!out.empty() && out.back().gen == gen) {
        if ((out.back().power > 0) != (sign > 0)) {
          return std::nullopt;
        }
        out.back().power += sign;
      } else {
        out.push_back({gen, sign});
      }
    }
    return out;
  }

}  // namespace autgrp::test

#endif  // AUTGRP_TESTS_SUPPORT_HPP_
