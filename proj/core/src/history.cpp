#include "autgrp/history.hpp"

#include <algorithm>
#include <sstream>

#include "autgrp/error.hpp"

namespace autgrp {

  namespace {

    int sign(std::strong_ordering r) {
      return r < 0 ? -1 : (r > 0 ? 1 : 0);
    }

    Word suffix_from(Word const& w, std::size_t c) {
      return Word(w.begin() + std::min(c, w.size()), w.end());
    }

    // pi_j of a word already known to be open at level j
    Word projection(Order const& order, Word const& w, int j) {
      return order.level_projection(w, j);
    }

    // Classify a level given both (stripped) projections.
    LevelState classify(Word const& pv,
                        Word const& pu,
                        bool        padded,
                        int         level_v,
                        int         level_u,
                        int         j) {
      LevelState st;
      auto       r = shortlex_compare(pu, pv);
      if (r == 0) {
        return st;
      }
      if (r < 0 && (padded || level_u > j)) {
        st.kind = LevelState::Kind::u_less;
        return st;
      }
      if (r > 0 && level_v > j) {
        st.kind = LevelState::Kind::v_less;
        return st;
      }
      st.kind     = LevelState::Kind::open;
      auto m      = std::min(pv.size(), pu.size());
      Word v1     = prefix(pv, m);
      Word u1     = prefix(pu, m);
      st.aligned  = static_cast<std::int8_t>(sign(lex_compare(v1, u1)));
      st.v_tail   = suffix_from(pv, m);
      st.u_tail   = suffix_from(pu, m);
      return st;
    }

    // Re-derive a level after appending (at most) one symbol per side.
    LevelState advance(LevelState const& st,
                       std::optional<Symbol> v_sym,
                       std::optional<Symbol> u_sym,
                       bool                  padded,
                       int                   level_v,
                       int                   level_u,
                       int                   j) {
      using K = LevelState::Kind;
      if (st.kind == K::u_less || st.kind == K::v_less) {
        return st;
      }
      if (!v_sym && !u_sym) {
        // projections unchanged, but freezing may have happened
        if (st.kind == K::equal) {
          return st;
        }
      }
      Word        vt      = st.v_tail;
      Word        ut      = st.u_tail;
      std::int8_t aligned = st.kind == K::open ? st.aligned : 0;
      if (v_sym) {
        vt.push_back(*v_sym);
      }
      if (u_sym) {
        ut.push_back(*u_sym);
      }
      auto m = std::min(vt.size(), ut.size());
      if (aligned == 0) {
        for (std::size_t i = 0; i < m; ++i) {
          if (vt[i] != ut[i]) {
            aligned = ut[i] < vt[i] ? 1 : -1;
            break;
          }
        }
      }
      vt.erase(vt.begin(), vt.begin() + m);
      ut.erase(ut.begin(), ut.begin() + m);

      LevelState out;
      if (aligned == 0 && vt.empty() && ut.empty()) {
        return out;
      }
      bool u_less
          = ut.size() < vt.size() || (ut.size() == vt.size() && aligned > 0);
      if (u_less && (padded || level_u > j)) {
        out.kind = K::u_less;
        return out;
      }
      if (!u_less && level_v > j) {
        out.kind = K::v_less;
        return out;
      }
      out.kind    = K::open;
      out.aligned = aligned;
      out.v_tail  = std::move(vt);
      out.u_tail  = std::move(ut);
      return out;
    }

    bool exceeds(WreathHistory const& h, std::size_t cap) {
      for (auto const& st : h.levels) {
        if (st.v_tail.size() > cap || st.u_tail.size() > cap) {
          return true;
        }
      }
      return false;
    }

    void check_symbol(Order const& order, Symbol s) {
      if (s >= order.alphabet().size()) {
        throw InputError("symbol out of range");
      }
    }

  }  // namespace

  bool is_padded(History const& h) {
    return std::visit([](auto const& x) { return x.padded; }, h);
  }

  bool is_overflow(History const& h) {
    if (auto const* w = std::get_if<WreathHistory>(&h)) {
      return w->overflow;
    }
    return false;
  }

  History history(Order const& order,
                  Word const&  v0,
                  Word const&  u0,
                  std::size_t  overhang_cap) {
    if (v0 == u0) {
      throw InputError("history needs distinct words");
    }
    if (v0.size() < u0.size()) {
      throw InputError("history needs l(v) >= l(u)");
    }
    auto c = common_prefix(v0, u0);
    Word v = suffix_from(v0, c);
    Word u = suffix_from(u0, c);
    bool padded = v.size() > u.size();

    if (order.is_weighted()) {
      WeightedHistory h;
      h.padded = padded;
      h.lex    = static_cast<std::int8_t>(lex_compare(u, v) < 0 ? 1 : -1);
      if (padded && order.kind() == OrderKind::wtshortlex) {
        h.lex = 0;
      }
      h.wtd = order.weight_of(v) - order.weight_of(u);
      if (padded) {
        h.wtd = std::min<std::int64_t>(h.wtd, 1);
      }
      return h;
    }

    WreathHistory h;
    h.padded  = padded;
    h.level_v = order.level_of(v);
    h.level_u = order.level_of(u);
    int n     = order.alphabet().max_level();
    h.levels.resize(n);
    for (int j = 1; j <= n; ++j) {
      h.levels[j - 1] = classify(projection(order, v, j),
                                 projection(order, u, j),
                                 padded,
                                 h.level_v,
                                 h.level_u,
                                 j);
    }
    if (exceeds(h, overhang_cap)) {
      WreathHistory o;
      o.overflow = true;
      return o;
    }
    return h;
  }

  History history_step(Order const&   order,
                       History const& h0,
                       Symbol         g,
                       Symbol         t,
                       std::size_t    overhang_cap) {
    check_symbol(order, g);
    if (t != kPad) {
      check_symbol(order, t);
    }
    if (is_padded(h0) && t != kPad) {
      throw LogicError("padded history stepped by a non-padding symbol");
    }
    auto const& alpha = order.alphabet();

    if (auto const* wh = std::get_if<WeightedHistory>(&h0)) {
      WeightedHistory h = *wh;
      if (t == kPad) {
        h.padded = true;
        h.wtd    = std::min<std::int64_t>(h.wtd + alpha.weight(g), 1);
        if (order.kind() == OrderKind::wtshortlex) {
          h.lex = 0;
        }
      } else {
        h.wtd += alpha.weight(g) - alpha.weight(t);
      }
      return h;
    }

    auto const& old = std::get<WreathHistory>(h0);
    if (old.overflow) {
      return old;
    }
    WreathHistory h;
    h.padded   = old.padded || t == kPad;
    int lg     = alpha.level(g);
    int lt     = t == kPad ? 0 : alpha.level(t);
    h.level_v  = std::max(old.level_v, lg);
    h.level_u  = std::max(old.level_u, lt);
    auto n     = old.levels.size();
    h.levels.resize(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
      int                   j = static_cast<int>(idx) + 1;
      std::optional<Symbol> vs;
      std::optional<Symbol> us;
      if (old.level_v <= j && lg == j) {
        vs = g;
      }
      if (t != kPad && old.level_u <= j && lt == j) {
        us = t;
      }
      h.levels[idx] = advance(
          old.levels[idx], vs, us, h.padded, h.level_v, h.level_u, j);
    }
    if (exceeds(h, overhang_cap)) {
      WreathHistory o;
      o.overflow = true;
      return o;
    }
    return h;
  }

  bool decide_precedes(Order const&   order,
                       History const& h0,
                       Word const&    a,
                       Word const&    b) {
    if (is_overflow(h0)) {
      throw LogicError("decide_precedes on an overflow history");
    }
    if (is_padded(h0) && !b.empty()) {
      throw LogicError("padded history compared with a non-empty b");
    }

    if (auto const* wh = std::get_if<WeightedHistory>(&h0)) {
      bool shortlex_ties = order.kind() == OrderKind::wtshortlex;
      if (wh->padded) {
        if (wh->wtd >= 1) {
          return true;
        }
        auto d = wh->wtd + order.weight_of(a);
        if (d != 0) {
          return d > 0;
        }
        return shortlex_ties ? true : wh->lex > 0;
      }
      auto d = wh->wtd + order.weight_of(a) - order.weight_of(b);
      if (d != 0) {
        return d > 0;
      }
      if (shortlex_ties && a.size() != b.size()) {
        return b.size() < a.size();
      }
      return wh->lex > 0;
    }

    auto const& h = std::get<WreathHistory>(h0);
    using K       = LevelState::Kind;
    for (int j = static_cast<int>(h.levels.size()); j >= 1; --j) {
      Word ap = h.level_v <= j ? order.level_projection(a, j) : Word{};
      Word bp = (!h.padded && h.level_u <= j) ? order.level_projection(b, j)
                                              : Word{};
      auto const& st = h.levels[j - 1];
      switch (st.kind) {
        case K::u_less:
          return true;
        case K::v_less:
          return false;
        case K::equal: {
          auto r = shortlex_compare(bp, ap);
          if (r != 0) {
            return r < 0;
          }
          break;
        }
        case K::open: {
          auto lv = st.v_tail.size() + ap.size();
          auto lu = st.u_tail.size() + bp.size();
          if (lv != lu) {
            return lu < lv;
          }
          if (st.aligned != 0) {
            return st.aligned > 0;
          }
          auto r = lex_compare(concat(st.u_tail, bp), concat(st.v_tail, ap));
          if (r != 0) {
            return r < 0;
          }
          break;
        }
      }
    }
    return false;
  }

  std::string history_key(History const& h0) {
    std::string key;
    auto        put = [&key](std::int64_t x, int bytes) {
      for (int i = 0; i < bytes; ++i) {
        key.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
      }
    };
    if (auto const* wh = std::get_if<WeightedHistory>(&h0)) {
      key.push_back('W');
      put(wh->padded, 1);
      put(wh->lex, 1);
      put(wh->wtd, 8);
      return key;
    }
    auto const& h = std::get<WreathHistory>(h0);
    key.push_back('R');
    put(h.padded, 1);
    put(h.overflow, 1);
    put(h.level_v, 2);
    put(h.level_u, 2);
    for (auto const& st : h.levels) {
      put(static_cast<int>(st.kind), 1);
      if (st.kind == LevelState::Kind::open) {
        put(st.aligned, 1);
        put(static_cast<std::int64_t>(st.v_tail.size()), 2);
        for (Symbol s : st.v_tail) {
          put(s, 2);
        }
        put(static_cast<std::int64_t>(st.u_tail.size()), 2);
        for (Symbol s : st.u_tail) {
          put(s, 2);
        }
      }
    }
    return key;
  }

  std::string to_string(Order const& order, History const& h0) {
    std::ostringstream out;
    if (auto const* wh = std::get_if<WeightedHistory>(&h0)) {
      out << "(" << wh->padded << "," << int(wh->lex) << "," << wh->wtd
          << ")";
      return out.str();
    }
    auto const& h = std::get<WreathHistory>(h0);
    if (h.overflow) {
      return "OVERFLOW";
    }
    out << "(" << h.padded << "," << h.level_v << "," << h.level_u;
    for (auto const& st : h.levels) {
      out << ",";
      switch (st.kind) {
        case LevelState::Kind::equal:
          out << "0";
          break;
        case LevelState::Kind::u_less:
          out << "1";
          break;
        case LevelState::Kind::v_less:
          out << "-1";
          break;
        case LevelState::Kind::open:
          out << "[" << int(st.aligned) << ";"
              << order.alphabet().format(st.v_tail) << ";"
              << order.alphabet().format(st.u_tail) << "]";
          break;
      }
    }
    out << ")";
    return out.str();
  }

}  // namespace autgrp
