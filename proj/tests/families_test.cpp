#include <doctest.h>

#include "autgrp/error.hpp"
#include "autgrp/families.hpp"
#include "grammars.hpp"
#include "support.hpp"

using namespace autgrp;
using namespace autgrp::test;

namespace {

  bool has_rule(RewriteSystem const& r, std::string_view lhs, std::string_view rhs) {
    auto const& a = r.order().alphabet();
    auto        l = a.parse_word(lhs);
    auto        h = a.parse_word(rhs);
    for (auto const& rule : r.rules()) {
      if (rule.lhs == l && rule.rhs == h) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("family names") {
  for (auto f : all_families()) {
    CHECK(family_from_name(family_name(f)) == f);
  }
  CHECK(!family_from_name("KNOT99"));
  CHECK(family_has_parameters(Family::BSpq));
  CHECK(!family_has_parameters(Family::KNOT41));
  CHECK_THROWS_AS(builtin_family({Family::BSpq, 0, 1}), InputError);
  CHECK_THROWS_AS(builtin_family({Family::Hpq, 1, -2}), InputError);
}

TEST_CASE("two-generator presentations") {
  auto g = builtin_family({Family::BSpq, 1, 1});
  auto const& a = g.order.alphabet();
  REQUIRE(g.presentation.relations.size() == 1);
  CHECK(g.presentation.relations[0].lhs == a.parse_word("y x"));
  CHECK(g.presentation.relations[0].rhs == a.parse_word("x y"));
  CHECK(g.order.kind() == OrderKind::wreath_shortlex);
  CHECK(a.level(*a.find("X")) == 1);
  CHECK(a.level(*a.find("Y")) == 2);
  CHECK(has_rule(*g.expected, "x y", "y x"));
  CHECK(has_rule(*g.expected, "x Y", "Y x"));
  CHECK(has_rule(*g.expected, "X y", "y X"));
  CHECK(has_rule(*g.expected, "x X", "e"));

  // the presentation implied by the displayed G_{p,-q} system
  auto n = builtin_family({Family::BSpNegq, 2, 3});
  CHECK(n.presentation.relations[0].lhs == a.parse_word("y x x"));
  CHECK(n.presentation.relations[0].rhs == a.parse_word("X X X y"));

  auto h = builtin_family({Family::Hpq, 1, 1});
  CHECK(h.presentation.relations[0].lhs == a.parse_word("x y"));
  CHECK(h.presentation.relations[0].rhs == a.parse_word("Y x"));
  CHECK(has_rule(*h.expected, "Y", "x y X"));
  CHECK(has_rule(*h.expected, "y x y", "x"));
}

TEST_CASE("knot presentations") {
  auto k = builtin_family({Family::KNOT41, 1, 1});
  auto const& a = k.order.alphabet();
  CHECK(a.size() == 10);
  CHECK(a.name(0) == "a");
  CHECK(k.order.kind() == OrderKind::wtlex);
  CHECK(!k.expected);
  auto rel = k.presentation.relators();
  REQUIRE(rel.size() == 4);
  CHECK(rel[0] == a.parse_word("A x Y z T"));
  CHECK(rel[3] == a.parse_word("Z X y x"));

  auto w = builtin_family({Family::KNOT41W, 1, 1});
  CHECK(w.order.alphabet().size() == 8);
  CHECK(w.presentation.relations.size() == 3);
  CHECK(builtin_family({Family::KNOT52W, 1, 1}).presentation.relations.size() == 4);
  CHECK(builtin_family({Family::KNOT74W, 1, 1}).presentation.relations.size() == 6);

  auto reordered = knot_with_order(Family::KNOT41W, {"t", "z", "y", "x"});
  CHECK(reordered.order.alphabet().name(0) == "t");
  CHECK(reordered.order.alphabet().name(1) == "T");
  CHECK_THROWS_AS(knot_with_order(Family::KNOT41W, {"t", "z", "y"}), InputError);
}

TEST_SUITE("property") {
  TEST_CASE("displayed Baumslag-Solitar systems and their languages") {
    auto const words = all_words(4, 8);
    for (auto f : {Family::BSpq, Family::BSpNegq}) {
      for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= 3; ++q) {
          auto fam = builtin_family({f, p, q});
          CAPTURE(family_label({f, p, q}));
          REQUIRE(is_confluent(*fam.expected));
          for (auto const& w : words) {
            REQUIRE((fam.expected->rewrite(w) == w) == in_bs_language(p, q, w));
          }
        }
      }
    }
  }

  TEST_CASE("H languages") {
    auto const words = all_words(4, 8);
    for (int p = 1; p <= 3; ++p) {
      for (int q = 1; q <= 3; ++q) {
        auto fam = builtin_family({Family::Hpq, p, q});
        auto r   = kb_complete(*fam.expected, {});
        CAPTURE(p);
        CAPTURE(q);
        REQUIRE(r.status == KbStatus::confluent);
        for (auto const& w : words) {
          REQUIRE((r.system.rewrite(w) == w) == in_h_language(p, q, w));
        }
      }
    }
    // H_{p,-q} only keeps the displayed shape when p = q; otherwise the
    // relations force x y = y x and the group is much smaller
    for (int p = 1; p <= 3; ++p) {
      auto fam = builtin_family({Family::HpNegq, p, p});
      REQUIRE(is_confluent(*fam.expected));
      CAPTURE(p);
      for (auto const& w : words) {
        REQUIRE((fam.expected->rewrite(w) == w) == in_h_neg_language(p, w));
      }
      if (p < 3) {
        auto other = kb_complete(*builtin_family({Family::HpNegq, p + 1, p}).expected, {});
        REQUIRE(other.status == KbStatus::confluent);
        auto const& a = other.system.order().alphabet();
        CHECK(other.system.rewrite(a.parse_word("x y")) == other.system.rewrite(a.parse_word("y x")));
      }
    }
  }
}
