#include <doctest.h>

#include <set>

#include "autgrp/error.hpp"
#include "autgrp/fsa.hpp"
#include "support.hpp"

using namespace autgrp;
using namespace autgrp::test;

namespace {

  using Pair = std::pair<Word, Word>;

  Fsa random_fsa(std::mt19937_64& g, std::size_t base, std::size_t states, double density) {
    Fsa a(base, 1);
    for (std::size_t i = 0; i < states; ++i) {
      a.add_state(g() % 2 == 0);
    }
    a.set_start(0);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t s = 0; s < states; ++s) {
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        if (u(g) < density) {
          a.set_transition(static_cast<State>(s), l, static_cast<State>(g() % states));
        }
      }
    }
    return a;
  }

  // Two-track machines respect padding: states are tagged by which track
  // (if any) has ended, and only compatible labels are used.
  Fsa random_pair_fsa(std::mt19937_64& g, std::size_t base, std::size_t states, double density) {
    Fsa a(base, 2);
    std::vector<int> mode;  // 0 both live, 1 first padded, 2 second padded
    for (std::size_t i = 0; i < states; ++i) {
      a.add_state(g() % 3 == 0);
      mode.push_back(i == 0 ? 0 : static_cast<int>(g() % 3));
    }
    a.set_start(0);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t s = 0; s < states; ++s) {
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        if (!a.is_valid_label(l) || u(g) >= density) {
          continue;
        }
        auto [x, y] = a.label_pair(l);
        int need    = x == kPad ? 1 : (y == kPad ? 2 : 0);
        if (mode[s] != 0 && mode[s] != need) {
          continue;
        }
        std::vector<State> ok;
        for (std::size_t t = 0; t < states; ++t) {
          if (mode[t] == need) {
            ok.push_back(static_cast<State>(t));
          }
        }
        if (!ok.empty()) {
          a.set_transition(static_cast<State>(s), l, ok[g() % ok.size()]);
        }
      }
    }
    return a;
  }

  std::set<Word> lang(Fsa const& a, std::size_t base, std::size_t maxlen) {
    std::set<Word> out;
    for (auto const& w : all_words(base, maxlen)) {
      if (a.accepts(w)) {
        out.insert(w);
      }
    }
    return out;
  }

  std::set<Pair> pair_lang(Fsa const& a, std::size_t base, std::size_t maxlen) {
    std::set<Pair> out;
    auto           ws = all_words(base, maxlen);
    for (auto const& v : ws) {
      for (auto const& w : ws) {
        if (a.accepts(v, w)) {
          out.insert({v, w});
        }
      }
    }
    return out;
  }

  // Machine accepting exactly one padded pair.
  Fsa singleton_pair(std::size_t base, Word const& v, Word const& w) {
    Fsa         a(base, 2);
    State       s = a.add_state(false);
    a.set_start(s);
    std::size_t n = std::max(v.size(), w.size());
    for (std::size_t i = 0; i < n; ++i) {
      Symbol x = i < v.size() ? v[i] : kPad;
      Symbol y = i < w.size() ? w[i] : kPad;
      State  t = a.add_state(false);
      a.set_transition(s, a.pair_label(x, y), t);
      s = t;
    }
    a.set_accepting(s, true);
    return a;
  }

}  // namespace

TEST_CASE("accepts") {
  Fsa a(2, 1);
  a.set_start(a.add_state(true));
  CHECK(a.accepts(Word{}));
  CHECK(!a.accepts(Word{0}));
  CHECK_THROWS_AS(a.accepts(Word{5}), InputError);

  auto d = Fsa::diagonal(2);
  CHECK(d.accepts(Word{0, 1}, Word{0, 1}));
  CHECK(!d.accepts(Word{0, 1}, Word{1, 0}));
  CHECK_THROWS_AS(d.accepts(Word{0}), InputError);
}

TEST_CASE("boolean operations, examples") {
  auto g = rng(11);
  auto a = random_fsa(g, 2, 5, 0.7);
  CHECK(lang(intersect(a, a), 2, 6) == lang(a, 2, 6));
  CHECK(equal_languages(complement(complement(a)), a).equal);
  CHECK(count_accepted(Fsa::all_words(2), 3) == 8);
  CHECK(enumerate(Fsa::empty_language(2, 1), 5).empty());
  CHECK(equal_languages(a, minimize(a)).equal);

  Fsa eps(2, 1);
  eps.set_start(eps.add_state(true));
  auto none = Fsa::empty_language(2, 1);
  auto diff = equal_languages(eps, none);
  CHECK(!diff.equal);
  CHECK(diff.first.empty());
  CHECK(diff.in_first_machine);
}

TEST_CASE("projection and composition, examples") {
  auto diag = Fsa::diagonal(2);
  CHECK(equal_languages(project(diag, Side::first), Fsa::all_words(2)).equal);

  // x = 0, y = 1
  auto one = singleton_pair(2, {0}, {1, 0});
  auto p   = project(one, Side::first);
  CHECK(enumerate(p, 4) == std::vector<Word>{{0}});
  CHECK(enumerate(project(one, Side::second), 4) == std::vector<Word>{{1, 0}});

  auto two = singleton_pair(2, {1, 0}, {1, 0, 0});
  auto c   = compose2(one, two);
  CHECK(pair_lang(c, 2, 3) == std::set<Pair>{{{0}, {1, 0, 0}}});
  CHECK(equal_languages(compose2(diag, two), two).equal);
}

TEST_CASE("minimize merges redundant sinks") {
  Fsa a(2, 1);
  State s = a.add_state(false);
  State t = a.add_state(true);
  State u = a.add_state(true);
  a.set_start(s);
  a.set_transition(s, 0, t);
  a.set_transition(s, 1, u);
  auto m = minimize(a);
  CHECK(m.num_states() == 2);
  CHECK(minimize(m).num_states() == m.num_states());
}

TEST_CASE("growth counts") {
  auto all = Fsa::all_words(3);
  auto gr  = growth(all, 5);
  REQUIRE(gr.size() == 6);
  CHECK(gr[5] == 243);
  // exact beyond 64 bits
  CHECK(count_accepted(all, 50) == BigCount("717897987691852588770249"));
}

TEST_SUITE("property") {
  TEST_CASE("one-track operations match brute force") {
    auto g = rng(21);
    for (int round = 0; round < 60; ++round) {
      std::size_t base = 2 + round % 3;
      auto        a    = random_fsa(g, base, 2 + round % 5, 0.6);
      auto        b    = random_fsa(g, base, 2 + (round / 2) % 5, 0.6);
      std::size_t len  = base == 4 ? 4 : 5;
      auto        la   = lang(a, base, len);
      auto        lb   = lang(b, base, len);
      std::set<Word> inter, uni, comp;
      for (auto const& w : all_words(base, len)) {
        bool x = la.count(w) > 0, y = lb.count(w) > 0;
        if (x && y) inter.insert(w);
        if (x || y) uni.insert(w);
        if (!x) comp.insert(w);
      }
      REQUIRE(lang(intersect(a, b), base, len) == inter);
      REQUIRE(lang(unite(a, b), base, len) == uni);
      REQUIRE(lang(complement(a), base, len) == comp);
      auto m = minimize(a);
      REQUIRE(lang(m, base, len) == la);
      REQUIRE(minimize(m).num_states() == m.num_states());
      REQUIRE(check_structure(m).empty());
      REQUIRE(check_structure(complement(a)).empty());

      auto e  = equal_languages(a, b);
      auto em = equal_languages(minimize(a), minimize(b));
      REQUIRE(e.equal == em.equal);
      // a witness is a shortest difference; brute force to the product bound
      std::size_t bound = a.num_states() * b.num_states() + 1;
      std::optional<Word> first;
      for (auto const& w : all_words(base, std::min<std::size_t>(bound, 7))) {
        if (a.accepts(w) != b.accepts(w)) {
          first = w;
          break;
        }
      }
      if (first) {
        REQUIRE(!e.equal);
        REQUIRE(e.first.size() == first->size());
        REQUIRE(a.accepts(e.first) != b.accepts(e.first));
      } else if (bound <= 7) {
        REQUIRE(e.equal);
      }

      std::vector<Word> en;
      for (auto const& w : all_words(base, len)) {
        if (a.accepts(w)) en.push_back(w);
      }
      std::stable_sort(en.begin(), en.end(), [](Word const& x, Word const& y) {
        return shortlex_compare(x, y) < 0;
      });
      REQUIRE(enumerate(a, len) == en);
      for (std::size_t n = 0; n <= len; ++n) {
        auto c = std::count_if(en.begin(), en.end(), [&](Word const& w) { return w.size() == n; });
        REQUIRE(count_accepted(a, n) == c);
      }
    }
  }

  TEST_CASE("two-track operations match brute force") {
    auto g = rng(22);
    for (int round = 0; round < 40; ++round) {
      std::size_t base = 2;
      auto        a    = random_pair_fsa(g, base, 3 + round % 4, 0.5);
      auto        b    = random_pair_fsa(g, base, 3 + (round / 3) % 4, 0.5);
      REQUIRE(check_structure(trim(a)).empty());
      std::size_t len = 4;
      auto        la  = pair_lang(a, base, len);
      auto        lb  = pair_lang(b, base, len);

      std::set<Pair> inter, comp;
      for (auto const& v : all_words(base, len)) {
        for (auto const& w : all_words(base, len)) {
          bool x = la.count({v, w}) > 0, y = lb.count({v, w}) > 0;
          if (x && y) inter.insert({v, w});
          if (!x) comp.insert({v, w});
        }
      }
      REQUIRE(pair_lang(intersect(a, b), base, len) == inter);
      REQUIRE(pair_lang(complement(a), base, len) == comp);
      REQUIRE(check_structure(complement(a)).empty());
      REQUIRE(pair_lang(minimize(a), base, len) == la);

      // projection: a first word is projected when some partner exists;
      // partners may be longer than len, so compare one-sidedly and then
      // against a longer search
      auto p = project(a, Side::first);
      for (auto const& [v, w] : la) {
        REQUIRE(p.accepts(v));
      }
      auto wide = pair_lang(a, base, len + 3);
      for (auto const& v : all_words(base, len)) {
        bool found = false;
        for (auto const& [x, y] : wide) {
          if (x == v) {
            found = true;
            break;
          }
        }
        if (found) {
          REQUIRE(p.accepts(v));
        }
      }

      // composition, middle words allowed to outrun both outer words
      auto           c = compose2(a, b);
      std::set<Pair> expect;
      auto           wa = pair_lang(a, base, len + 2);
      auto           wb = pair_lang(b, base, len + 2);
      for (auto const& [v, u] : wa) {
        for (auto const& [u2, w] : wb) {
          if (u == u2 && v.size() <= len && w.size() <= len) {
            expect.insert({v, w});
          }
        }
      }
      auto got = pair_lang(c, base, len);
      for (auto const& e : expect) {
        REQUIRE(got.count(e) == 1);
      }
      // anything extra must have a longer middle word
      for (auto const& [v, w] : got) {
        if (expect.count({v, w}) != 0) {
          continue;
        }
        bool found = false;
        for (auto const& u : all_words(base, 14)) {
          if (u.size() > len + 2 && a.accepts(v, u) && b.accepts(u, w)) {
            found = true;
            break;
          }
        }
        REQUIRE(found);
      }
      REQUIRE(check_structure(c).empty());
    }
  }

  TEST_CASE("composition finds long middle words") {
    // a = {(x, x y^k)}, b = {(x y^k, y)}: the middle runs k symbols past
    // both outer words
    for (std::size_t k = 1; k <= 6; ++k) {
      Word mid{0};
      mid.insert(mid.end(), k, 1);
      auto a = singleton_pair(2, {0}, mid);
      auto b = singleton_pair(2, mid, {1});
      auto c = compose2(a, b);
      CHECK(c.accepts(Word{0}, Word{1}));
      CHECK(pair_lang(c, 2, 3).size() == 1);
    }
  }
}
