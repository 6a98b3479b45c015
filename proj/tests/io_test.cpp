#include <doctest.h>

#include "autgrp/error.hpp"
#include "autgrp/families.hpp"
#include "autgrp/io.hpp"
#include "support.hpp"

using namespace autgrp;
using namespace autgrp::test;

namespace {

  constexpr char const* kZ2 = R"(# Z^2 under the wreath order
version 1
generators x y
inverse x X
inverse y Y
order wreathshortlex
lexorder x X y Y
level x 1
level y 2
relation y x = x y
)";

  std::size_t parse_error_line(std::string const& text) {
    try {
      parse_presentation(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 0;
  }

  std::string replace(std::string s, std::string const& from, std::string const& to) {
    auto at = s.find(from);
    REQUIRE(at != std::string::npos);
    return s.replace(at, from.size(), to);
  }

}  // namespace

TEST_CASE("presentation files") {
  auto pf = parse_presentation(kZ2);
  CHECK(pf.order.kind() == OrderKind::wreath_shortlex);
  CHECK(pf.order.alphabet().size() == 4);
  REQUIRE(pf.presentation.relations.size() == 1);
  auto const& a = pf.order.alphabet();
  CHECK(pf.presentation.relations[0].lhs == a.parse_word("y x"));
  CHECK(a.level(*a.find("Y")) == 2);

  auto once  = serialize_presentation(pf.presentation, pf.order);
  auto again = parse_presentation(once);
  CHECK(again.order == pf.order);
  CHECK(again.presentation.relations == pf.presentation.relations);
  CHECK(serialize_presentation(again.presentation, again.order) == once);

  // every built-in family round trips
  for (auto f : all_families()) {
    auto fam = builtin_family({f, 2, 1});
    auto s   = serialize_presentation(fam.presentation, fam.order);
    CHECK(serialize_presentation(parse_presentation(s).presentation, parse_presentation(s).order)
          == s);
  }
}

TEST_CASE("presentation errors") {
  CHECK(parse_error_line(replace(kZ2, "level y 2", "level y 2\nlevel Y 1")) == 10);
  CHECK(parse_error_line(replace(kZ2, "order wreathshortlex", "order sideways")) == 6);
  CHECK(parse_error_line(replace(kZ2, "relation y x = x y", "relation y x x y")) == 10);
  CHECK(parse_error_line(replace(kZ2, "relation y x = x y", "relation y z = x y")) == 10);
  CHECK(parse_error_line(replace(kZ2, "version 1\n", "")) == 1);

  std::string wt = "version 1\ngenerators x y\ninverse x X\ninverse y Y\norder wtlex\n"
                   "weight x 1\nrelation y x = x y\n";
  CHECK(parse_error_line(wt) != 0);
  CHECK_NOTHROW(parse_presentation(replace(wt, "weight x 1", "weight x 1\nweight y 2")));

  // involutions and the empty word
  auto inv = parse_presentation("version 1\ngenerators a\ninverse a a\norder shortlex\n"
                                "relation a a = e\n");
  CHECK(inv.order.alphabet().size() == 1);
  CHECK(inv.presentation.relations[0].rhs.empty());
}

TEST_CASE("rules files") {
  auto fam  = builtin_family({Family::BSpq, 2, 2});
  auto text = serialize_rules(*fam.expected);
  auto back = parse_rules(text);
  CHECK(back.size() == fam.expected->size());
  CHECK(serialize_rules(back) == text);
  for (auto const& w : all_words(4, 5)) {
    CHECK(back.rewrite(w) == fam.expected->rewrite(w));
  }

  // a rule that grows is refused
  auto bad = replace(text, "rule ", "rule x -> x x\nrule ");
  CHECK_THROWS_AS(parse_rules(bad), ParseError);
}

TEST_CASE("fsa files") {
  std::string two = "fsa version 1\ntype word\nalphabet a b\nstates 2\nstart 1\naccept 2\n"
                    "1 a 2\n2 b 1\n";
  auto f = parse_fsa(two);
  CHECK(f.fsa.num_states() == 2);
  CHECK(f.alphabet == std::vector<std::string>{"a", "b"});
  CHECK(f.fsa.accepts(Word{0}));
  CHECK(f.fsa.accepts(Word{0, 1, 0}));
  CHECK(!f.fsa.accepts(Word{0, 1}));

  CHECK_THROWS_AS(parse_fsa(replace(two, "1 a 2", "1 a 3")), ParseError);
  CHECK_THROWS_AS(parse_fsa(replace(two, "1 a 2", "1 c 2")), ParseError);
  CHECK_THROWS_AS(parse_fsa(replace(two, "2 b 1", "1 a 1")), ParseError);
  try {
    parse_fsa(replace(two, "type word", "type tree"));
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
  }

  // structure survives a round trip, and serializing is a fixed point
  auto const& st    = *run_family({Family::BSpq, 1, 1}).structure;
  auto        names = symbol_names(st.order.alphabet());
  for (Fsa const* m : {&st.W, &st.Me, &st.D.fsa(), &st.multipliers.at(0)}) {
    auto text = serialize_fsa(*m, names);
    auto back = parse_fsa(text);
    CHECK(back.alphabet == names);
    CHECK(serialize_fsa(back.fsa, names) == text);
    CHECK(back.fsa.num_states() == m->num_states());
    CHECK(equal_languages(back.fsa, *m).equal);
    CHECK(back.fsa.state_labels() == canonical(*m).state_labels());
  }

  // the Z^2 acceptor, reloaded
  auto W = parse_fsa(serialize_fsa(st.W, st.order.alphabet())).fsa;
  CHECK(W.accepts(parse_symbols(names, "yyx")));
  CHECK(!W.accepts(parse_symbols(names, "xy")));
}

TEST_CASE("difference machines from files") {
  auto const& st    = *run_family({Family::BSpq, 1, 1}).structure;
  auto        names = symbol_names(st.order.alphabet());
  auto        back  = parse_fsa(serialize_fsa(st.D.fsa(), names)).fsa;
  auto        d     = diff_machine_from(back, st.rules);
  CHECK(d.num_states() == st.D.num_states());
  CHECK(check_axioms(d, st.rules).empty());
  for (auto const& w : all_words(4, 5)) {
    CHECK(d_reduce(d, st.order, w) == normal_form(st, w));
  }
}

TEST_CASE("symbol parsing") {
  std::vector<std::string> names{"x", "X", "y", "Y"};
  CHECK(parse_symbols(names, "x Y") == Word{0, 3});
  CHECK(parse_symbols(names, "xY") == Word{0, 3});
  CHECK(parse_symbols(names, "e").empty());
  CHECK_THROWS_AS(parse_symbols(names, "xz"), InputError);

  // runs split greedily by longest match
  std::vector<std::string> multi{"a", "ab", "b", "ba"};
  CHECK(parse_symbols(multi, "a b") == Word{0, 2});
  CHECK(parse_symbols(multi, "aba") == Word{1, 0});
}

TEST_CASE("report format") {
  auto const& r    = run_family({Family::BSpq, 1, 1}).report;
  auto        text = format_report(r);
  CHECK(text.find("outcome: Verified") != std::string::npos);
  CHECK(text.find("acceptor_states: 5") != std::string::npos);
}
