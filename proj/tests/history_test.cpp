#include <doctest.h>

#include "autgrp/error.hpp"
#include "autgrp/history.hpp"
#include "support.hpp"

using namespace autgrp;
using namespace autgrp::test;

namespace {

  // (len, lex, wtd) straight from the definitions.
  WeightedHistory weighted_oracle(Order const& o, Word const& v, Word const& u) {
    WeightedHistory h;
    h.padded  = v.size() > u.size();
    long wtd  = o.weight_of(v) - o.weight_of(u);
    h.wtd     = h.padded ? std::min(wtd, 1L) : wtd;
    int lexs  = lex_compare(u, v) < 0 ? 1 : -1;
    h.lex     = static_cast<std::int8_t>(o.kind() == OrderKind::wtshortlex && h.padded ? 0 : lexs);
    return h;
  }

  struct Sample {
    Word v;
    Word u;
  };

  // Distinct v, u with l(v) >= l(u) and, half the time, a shared prefix.
  Sample sample_pair(std::mt19937_64& g, std::size_t n, std::size_t maxlen) {
    while (true) {
      auto v = random_word(g, n, maxlen);
      auto u = random_word(g, n, maxlen);
      if (u.size() > v.size()) {
        std::swap(u, v);
      }
      if (g() % 2 == 0) {
        auto c = random_word(g, n, 3);
        v      = concat(c, v);
        u      = concat(c, u);
      }
      if (u != v) {
        return {v, u};
      }
    }
  }

  std::vector<Order> history_orders() {
    return {z2_shortlex(),
            uneven_weighted(OrderKind::wtlex),
            uneven_weighted(OrderKind::wtshortlex),
            z2_wreath(),
            three_level_wreath()};
  }

}  // namespace

TEST_CASE("history examples") {
  auto        slx = z2_shortlex();
  auto const& a   = slx.alphabet();
  auto        h   = std::get<WeightedHistory>(history(slx, a.parse_word("xx"), a.parse_word("y")));
  CHECK(h.padded);
  CHECK(h.lex == -1);
  CHECK(h.wtd == 1);

  auto wt = z2_weighted(OrderKind::wtlex);
  auto h2 = std::get<WeightedHistory>(
      history(wt, wt.alphabet().parse_word("y"), wt.alphabet().parse_word("x")));
  CHECK(!h2.padded);
  CHECK(h2.lex == 1);
  CHECK(h2.wtd == 2);

  auto        wr = z2_wreath();
  auto const& b  = wr.alphabet();
  auto        h3 = std::get<WreathHistory>(history(wr, b.parse_word("xy"), b.parse_word("yx")));
  CHECK(!h3.padded);
  CHECK(h3.level_v == 2);
  CHECK(h3.level_u == 2);
  REQUIRE(h3.levels.size() >= 2);
  CHECK(h3.levels[0].kind == LevelState::Kind::u_less);
  CHECK(h3.levels[1].kind == LevelState::Kind::equal);

  auto x  = *b.find("x");
  auto s3 = history_step(wr, h3, x, x);
  CHECK(s3 == history(wr, b.parse_word("xyx"), b.parse_word("yxx")));
  CHECK(decide_precedes(wr, h3, {}, {}));
}

TEST_CASE("weighted history steps") {
  auto            o = uneven_weighted(OrderKind::wtlex);
  WeightedHistory h{false, 1, 0};
  // a and B both weigh 1
  auto same = std::get<WeightedHistory>(history_step(o, h, 0, 3));
  CHECK(same == WeightedHistory{false, 1, 0});
  // A weighs 2
  auto pad = std::get<WeightedHistory>(history_step(o, h, 1, kPad));
  CHECK(pad == WeightedHistory{true, 1, 1});
  CHECK(decide_precedes(o, h, {}, {}));
  WeightedHistory p{true, -1, 1};
  CHECK(decide_precedes(z2_shortlex(), p, {0}, {}));
}

TEST_CASE("history preconditions") {
  auto o = z2_wreath();
  auto x = o.alphabet().parse_word("x");
  CHECK_THROWS_AS(history(o, x, x), InputError);
  CHECK_THROWS_AS(history(o, x, o.alphabet().parse_word("xy")), InputError);
  auto h = history(o, o.alphabet().parse_word("xy"), x);
  CHECK(is_padded(h));
  CHECK_THROWS_AS(history_step(o, h, 0, 0), LogicError);
  // some short pair has an overhang longer than 1
  std::optional<History> over;
  auto const             words = all_words(o.alphabet().size(), 4);
  for (std::size_t i = 0; i < words.size() && !over; ++i) {
    for (std::size_t j = 0; j < i && !over; ++j) {
      auto h = history(o, words[i], words[j], 1);
      if (is_overflow(h)) {
        over = h;
      }
    }
  }
  REQUIRE(over);
  CHECK_THROWS_AS(decide_precedes(o, *over, {}, {}), LogicError);
}

TEST_SUITE("property") {
  TEST_CASE("history step, prefix invariance and decide_precedes agree with direct evaluation") {
    int salt = 0;
    for (auto const& o : history_orders()) {
      CAPTURE(to_string(o.kind()));
      bool const        wreath = o.kind() == OrderKind::wreath_shortlex;
      std::size_t const K      = 3;
      std::size_t const cap    = wreath ? K + 1 : kNoCap;
      auto const        n      = o.alphabet().size();
      auto              g      = rng(200 + salt++);
      int               used   = 0;
      for (int i = 0; i < 10000; ++i) {
        auto [v, u] = sample_pair(g, n, 8);
        auto h      = history(o, v, u, cap);
        if (is_overflow(h)) {
          continue;
        }
        ++used;
        if (!wreath) {
          REQUIRE(std::get<WeightedHistory>(h) == weighted_oracle(o, v, u));
        }
        auto c = random_word(g, n, 4);
        REQUIRE(history(o, concat(c, v), concat(c, u), cap) == h);

        // step
        Symbol s = static_cast<Symbol>(g() % n);
        Symbol t = is_padded(h) || g() % 4 == 0 ? kPad : static_cast<Symbol>(g() % n);
        Word   vs = concat(v, s);
        Word   ut = t == kPad ? u : concat(u, t);
        if (vs != ut) {
          REQUIRE(history_step(o, h, s, t, cap) == history(o, vs, ut, cap));
        }

        // decide
        auto a = random_word(g, n, 4);
        Word b = is_padded(h) ? Word{} : random_word(g, n, 4);
        REQUIRE(decide_precedes(o, h, a, b) == o.less(concat(u, b), concat(v, a)));
      }
      CHECK(used > 5000);
    }
  }

  TEST_CASE("history keys separate distinct histories") {
    auto o = three_level_wreath();
    auto g = rng(9);
    std::map<std::string, History> seen;
    for (int i = 0; i < 3000; ++i) {
      auto [v, u] = sample_pair(g, o.alphabet().size(), 6);
      auto h      = history(o, v, u, 4);
      auto k      = history_key(h);
      auto [it, fresh] = seen.emplace(k, h);
      REQUIRE(it->second == h);
    }
  }
}
