#include "autgrp/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "autgrp/error.hpp"

namespace autgrp {

  namespace {

    struct KnotData {
      Family                   family;
      std::vector<std::string> generators;  // with a first
      std::vector<std::string> relators;    // capital letters are inverses
    };

    std::vector<KnotData> const& knots() {
      static std::vector<KnotData> const data{
          {Family::KNOT41,
           {"a", "x", "y", "z", "t"},
           {"A x Y z T", "X Z t z", "Y t x T", "Z X y x"}},
          {Family::KNOT52,
           {"a", "x", "y", "z", "t", "u"},
           {"A t u x z y", "x T X z", "t Y T x", "t z U Z", "u Z U y"}},
          {Family::KNOT74,
           {"a", "x", "y", "z", "t", "u", "v", "w"},
           {"A v U X W Y Z T", "T x z X", "x v Y V", "y u Y v", "y U Z",
            "w t W U", "t w T X"}},
      };
      return data;
    }

    std::string upper(std::string s) {
      for (auto& c : s) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
      return s;
    }

    Family with_a(Family f) {
      switch (f) {
        case Family::KNOT41W:
          return Family::KNOT41;
        case Family::KNOT52W:
          return Family::KNOT52;
        case Family::KNOT74W:
          return Family::KNOT74;
        default:
          return f;
      }
    }

    bool is_knot(Family f) {
      return with_a(f) == Family::KNOT41 || with_a(f) == Family::KNOT52
             || with_a(f) == Family::KNOT74;
    }

    bool wirtinger(Family f) {
      return f == Family::KNOT41W || f == Family::KNOT52W || f == Family::KNOT74W;
    }

    // x, X at level 1, y, Y at level 2, lexorder x X y Y.
    Order two_generator_order() {
      return Order(Alphabet({{"x", "X", 1, 1},
                             {"X", "x", 1, 1},
                             {"y", "Y", 1, 2},
                             {"Y", "y", 1, 2}}),
                   OrderKind::wreath_shortlex);
    }

    constexpr Symbol kx = 0, kX = 1, ky = 2, kY = 3;

    // x^k, negative k meaning X^-k.
    Word xpow(int k) {
      return Word(static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? kX : kx);
    }

    Word cat(std::initializer_list<Word> parts) {
      Word out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

    void add_rule(RewriteSystem& r, Word const& lhs, Word const& rhs) {
      if (!r.order().less(rhs, lhs)) {
        throw LogicError("built-in rule does not decrease");
      }
      r.add_oriented(lhs, rhs);
    }

    void inverse_rules(RewriteSystem& r, bool with_y) {
      add_rule(r, {kx, kX}, {});
      add_rule(r, {kX, kx}, {});
      if (with_y) {
        add_rule(r, {ky, kY}, {});
        add_rule(r, {kY, ky}, {});
      }
    }

    // sign = +1 for G_{p,q}, -1 for G_{p,-q}.
    RewriteSystem bs_rules(Order const& order, int p, int q, int sign) {
      RewriteSystem r(order);
      int const     rr = p / 2;
      int const     s  = q / 2;
      inverse_rules(r, true);
      add_rule(r, cat({xpow(rr + 1), {kY}}), cat({xpow(rr + 1 - p), {kY}, xpow(sign * q)}));
      add_rule(r, cat({xpow(rr - p), {kY}}), cat({xpow(rr), {kY}, xpow(-sign * q)}));
      add_rule(r, cat({xpow(s + 1), {ky}}), cat({xpow(s + 1 - q), {ky}, xpow(sign * p)}));
      add_rule(r, cat({xpow(s - q), {ky}}), cat({xpow(s), {ky}, xpow(-sign * p)}));
      return r;
    }

    RewriteSystem h_rules(Order const& order, int p, int q, int sign) {
      RewriteSystem r(order);
      inverse_rules(r, false);
      add_rule(r, {kY}, cat({xpow(p), {ky}, xpow(-sign * q)}));
      add_rule(r, cat({{ky}, xpow(p), {ky}}), xpow(sign * q));
      if (sign > 0) {
        int const t = (p + q) / 2;
        add_rule(r, cat({xpow(t + 1), {ky}}), cat({xpow(t + 1 - (p + q)), {ky}, xpow(p + q)}));
        add_rule(r, cat({xpow(t - (p + q)), {ky}}), cat({xpow(t), {ky}, xpow(-(p + q))}));
      }
      return r;
    }

    BuiltinFamily knot(Family f, std::vector<std::string> const& generators) {
      auto const& data = [&]() -> KnotData const& {
        for (auto const& k : knots()) {
          if (k.family == with_a(f)) {
            return k;
          }
        }
        throw InputError("not a knot family");
      }();
      bool const drop_a = wirtinger(f);
      auto       expect = data.generators;
      if (drop_a) {
        expect.erase(expect.begin());
      }
      {
        auto a = expect;
        auto b = generators;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          throw InputError("generator order must list each knot generator once");
        }
      }
      std::vector<SymbolInfo> info;
      for (auto const& g : generators) {
        info.push_back({g, upper(g), 1, 1});
        info.push_back({upper(g), g, 1, 1});
      }
      BuiltinFamily out;
      out.order                 = Order(Alphabet(std::move(info)), OrderKind::wtlex);
      out.presentation.alphabet = out.order.alphabet();
      for (std::size_t i = drop_a ? 1 : 0; i < data.relators.size(); ++i) {
        out.presentation.relations.push_back(
            {out.order.alphabet().parse_word(data.relators[i]), {}});
      }
      return out;
    }

    constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
        {Family::BSpq, "BSpq"},
        {Family::BSpNegq, "BSpNegq"},
        {Family::Hpq, "Hpq"},
        {Family::HpNegq, "HpNegq"},
        {Family::KNOT41, "KNOT41"},
        {Family::KNOT52, "KNOT52"},
        {Family::KNOT74, "KNOT74"},
        {Family::KNOT41W, "KNOT41W"},
        {Family::KNOT52W, "KNOT52W"},
        {Family::KNOT74W, "KNOT74W"},
    }};

  }  // namespace

  std::optional<Family> family_from_name(std::string_view name) {
    for (auto const& [f, n] : kNames) {
      if (n == name) {
        return f;
      }
    }
    return std::nullopt;
  }

  std::string_view family_name(Family f) {
    for (auto const& [g, n] : kNames) {
      if (g == f) {
        return n;
      }
    }
    return "?";
  }

  std::vector<Family> all_families() {
    std::vector<Family> out;
    for (auto const& [f, n] : kNames) {
      out.push_back(f);
    }
    return out;
  }

  bool family_has_parameters(Family f) {
    return !is_knot(f);
  }

  BuiltinFamily builtin_family(FamilySpec const& spec) {
    if (is_knot(spec.family)) {
      for (auto const& k : knots()) {
        if (k.family == with_a(spec.family)) {
          auto gens = k.generators;
          if (wirtinger(spec.family)) {
            gens.erase(gens.begin());
          }
          return knot(spec.family, gens);
        }
      }
    }
    if (spec.p < 1 || spec.q < 1) {
      throw InputError("family parameters p and q must be at least 1");
    }
    int const     p = spec.p;
    int const     q = spec.q;
    BuiltinFamily out;
    out.order                 = two_generator_order();
    out.presentation.alphabet = out.order.alphabet();
    auto& rel                 = out.presentation.relations;
    switch (spec.family) {
      case Family::BSpq:
        rel.push_back({cat({{ky}, xpow(p)}), cat({xpow(q), {ky}})});
        out.expected = bs_rules(out.order, p, q, +1);
        break;
      case Family::BSpNegq:
        rel.push_back({cat({{ky}, xpow(p)}), cat({xpow(-q), {ky}})});
        out.expected = bs_rules(out.order, p, q, -1);
        break;
      case Family::Hpq:
        rel.push_back({cat({xpow(p), {ky}}), cat({{kY}, xpow(q)})});
        out.expected = h_rules(out.order, p, q, +1);
        break;
      case Family::HpNegq:
        rel.push_back({cat({xpow(p), {ky}}), cat({{kY}, xpow(-q)})});
        out.expected = h_rules(out.order, p, q, -1);
        break;
      default:
        throw InputError("unknown family");
    }
    return out;
  }

  BuiltinFamily knot_with_order(Family f, std::vector<std::string> const& generators) {
    if (!is_knot(f)) {
      throw InputError("not a knot family");
    }
    return knot(f, generators);
  }

}  // namespace autgrp
