#include <doctest.h>

#include <set>

#include "autgrp/diff.hpp"
#include "autgrp/families.hpp"
#include "support.hpp"

using namespace autgrp;
using namespace autgrp::test;

namespace {

  DiffMachine closed(RewriteSystem const& r) {
    return close(build_from_rules(r), r);
  }

  RewriteSystem g11_rules() {
    return *builtin_family({Family::BSpq, 1, 1}).expected;
  }

  // States a machine built from r must have: the empty word and both
  // directions of every rule's prefix differences.
  std::set<Word> traced_differences(RewriteSystem const& r) {
    auto const&    alpha = r.order().alphabet();
    std::set<Word> out{Word{}};
    for (auto const& rule : r.rules()) {
      for (std::size_t i = 0; i <= std::max(rule.lhs.size(), rule.rhs.size()); ++i) {
        auto x = prefix(rule.lhs, i);
        auto y = prefix(rule.rhs, i);
        out.insert(r.rewrite(concat(invert_word(alpha, x), y)));
        out.insert(r.rewrite(concat(invert_word(alpha, y), x)));
      }
    }
    return out;
  }

  std::set<Word> label_set(DiffMachine const& d) {
    return {d.labels().begin(), d.labels().end()};
  }

  // Confluent systems the diff properties run on, with their orders.
  std::vector<RewriteSystem> confluent_systems() {
    std::vector<RewriteSystem> out;
    for (auto spec : {FamilySpec{Family::BSpq, 1, 1}, FamilySpec{Family::BSpq, 2, 2},
                      FamilySpec{Family::BSpNegq, 2, 2}, FamilySpec{Family::Hpq, 1, 1},
                      FamilySpec{Family::HpNegq, 2, 1}}) {
      out.push_back(kb_complete(*builtin_family(spec).expected, {}).system);
    }
    auto         o = z2_weighted(OrderKind::wtlex);
    auto const&  a = o.alphabet();
    Presentation z{a, {{a.parse_word("y x"), a.parse_word("x y")}}};
    out.push_back(kb_complete(init_system(z, o), {}).system);
    return out;
  }

}  // namespace

TEST_CASE("build_from_rules") {
  auto o  = z2_shortlex();
  auto fr = kb_complete(init_system({o.alphabet(), {}}, o), {}).system;
  auto d  = build_from_rules(fr);
  CHECK(label_set(d) == traced_differences(fr));
  CHECK(check_axioms(d, fr).empty());

  RewriteSystem none(o);
  auto          e = build_from_rules(none);
  CHECK(e.num_states() == 1);
  for (Symbol g = 0; g < 4; ++g) {
    CHECK(e.target(e.start(), g, g) == e.start());
  }

  auto r  = g11_rules();
  auto dg = build_from_rules(r);
  CHECK(label_set(dg) == traced_differences(r));
  CHECK(check_axioms(dg, r).empty());
}

TEST_CASE("close") {
  auto r = g11_rules();
  auto d = closed(r);
  CHECK(check_axioms(d, r).empty());
  CHECK(check_closure(d, r).empty());
  auto again = close(d, r);
  CHECK(again.num_states() == d.num_states());
  CHECK(again.fsa() == d.fsa());
  for (State s = 0; s < static_cast<State>(d.num_states()); ++s) {
    CHECK(d.inverse_state(s) != kNoState);
  }

  // a lone "x y" difference forces its inverse "Y X" in
  auto const& a  = r.order().alphabet();
  auto        xy = add_equation(build_from_rules(RewriteSystem(r.order())), a.parse_word("x y"),
                                a.parse_word("e"), r,
                                r.rewrite(a.parse_word("Y X")));
  auto labels = label_set(xy);
  for (auto const& l : labels) {
    CHECK(labels.count(r.rewrite(invert_word(a, l))) == 1);
  }
}

TEST_CASE("trace and reduce") {
  auto        r = g11_rules();
  auto        d = closed(r);
  auto const& o = r.order();
  auto const& a = o.alphabet();
  auto        w = a.parse_word("x y X");
  CHECK(d.trace_pair(w, w) == d.start());
  CHECK(d.trace_pair(a.parse_word("xy"), a.parse_word("yx")) == d.start());
  CHECK(d_reduce(d, o, a.parse_word("yx")) == a.parse_word("yx"));
  CHECK(d_reduce(d, o, a.parse_word("xy")) == a.parse_word("yx"));
  CHECK(d_reduce(d, o, a.parse_word("xyxy")) == a.parse_word("yyxx"));

  // bare machine: the diagonal and nothing else
  auto bare = build_from_rules(RewriteSystem(o));
  CHECK(bare.trace_pair(a.parse_word("x"), a.parse_word("y")) == kNoState);

  auto t = trace_equation(r, a.parse_word("xy"), a.parse_word("yx"));
  REQUIRE(t.differences.size() == 3);
  CHECK(t.differences.front().empty());
  CHECK(t.differences.back().empty());
  CHECK(t.differences[1] == r.rewrite(a.parse_word("X y")));
}

TEST_CASE("add_equation") {
  auto        r  = g11_rules();
  auto const& a  = r.order().alphabet();
  auto        d  = closed(r);
  auto        w  = a.parse_word("x y y X");
  auto        d2 = add_equation(d, w, w, r);
  CHECK(d2.fsa() == d.fsa());

  auto bare = close(build_from_rules(RewriteSystem(r.order())), r);
  auto one  = add_equation(bare, a.parse_word("xy"), a.parse_word("yx"), r);
  auto t    = trace_equation(r, a.parse_word("xy"), a.parse_word("yx"));
  for (auto const& diff : t.differences) {
    CHECK(one.find(diff).has_value());
  }
  CHECK(one.trace_pair(a.parse_word("xy"), a.parse_word("yx")) == one.start());
  auto twice = add_equation(one, a.parse_word("xy"), a.parse_word("yx"), r);
  CHECK(twice.fsa() == one.fsa());
}

TEST_CASE("axiom checker catches injected faults") {
  auto r = g11_rules();
  auto d = closed(r);
  auto const& a = r.order().alphabet();

  std::vector<State> inv;
  for (State s = 0; s < static_cast<State>(d.num_states()); ++s) {
    inv.push_back(d.inverse_state(s));
  }

  // relabel one non-start state with a word nothing else carries
  Fsa  bad    = d.fsa();
  auto labels = bad.state_labels();
  labels[1]   = a.parse_word("y y y y y");
  bad.set_state_labels(labels);
  auto v = check_axioms(DiffMachine(bad, inv, r.order()), r);
  CHECK(!v.empty());
  bool iv = false;
  for (auto const& m : v) {
    iv = iv || m.rfind("(iv)", 0) == 0;
  }
  CHECK(iv);

  Fsa  loop = d.fsa();
  loop.set_transition(loop.start(), loop.pair_label(0, 0), kNoState);
  auto lv   = check_axioms(DiffMachine(loop, inv, r.order()), r);
  REQUIRE(lv.size() == 1);
  CHECK(lv[0].rfind("(v)", 0) == 0);
}

TEST_SUITE("property") {
  TEST_CASE("difference machines of confluent systems") {
    auto g = rng(41);
    for (auto const& r : confluent_systems()) {
      auto const& o = r.order();
      auto const& a = o.alphabet();
      CAPTURE(to_string(o.kind()));
      REQUIRE(is_confluent(r));
      auto d = closed(r);
      REQUIRE(check_axioms(d, r).empty());
      REQUIRE(check_closure(d, r).empty());

      // every rule fellow travels to the identity
      for (auto const& rule : r.rules()) {
        REQUIRE(d.trace_pair(rule.lhs, rule.rhs) == d.start());
      }

      // inverse symmetry, and the label is the group difference
      for (int i = 0; i < 2000; ++i) {
        auto [v, w] = random_walk(g, d.fsa(), 10);
        auto s      = d.trace_pair(v, w);
        REQUIRE(s != kNoState);
        REQUIRE(d.trace_pair(w, v) != kNoState);
        REQUIRE(r.rewrite(concat(invert_word(a, v), w)) == d.label(s));
      }

      // D-reduction agrees with rewriting on every short word
      std::size_t const maxlen = a.size() <= 4 ? 7 : 5;
      for (auto const& w : all_words(a.size(), maxlen)) {
        REQUIRE(d_reduce(d, o, w) == r.rewrite(w));
      }
    }
  }
}
