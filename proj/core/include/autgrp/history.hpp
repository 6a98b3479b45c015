#ifndef AUTGRP_HISTORY_HPP_
#define AUTGRP_HISTORY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "autgrp/order.hpp"

namespace autgrp {

  // History functions: a finite summary f(v, u) of a pair of distinct words
  // with l(v) >= l(u), enough to decide whether ub < va for any a, b and to
  // compute f(vg, uh). Histories are invariant under a common prefix.

  // WTLEX / WTSHORTLEX history (len, lex, wtd).
  struct WeightedHistory {
    bool padded = false;  // len: l(v) > l(u)
    // +1 when u precedes v lexicographically, -1 when v precedes u. Under
    // WTSHORTLEX a padded pair has lex = 0. A proper prefix precedes its
    // extensions.
    std::int8_t lex = 0;
    // wt(v) - wt(u); capped at 1 when padded.
    std::int64_t wtd = 0;

    auto operator<=>(WeightedHistory const&) const = default;
  };

  // Comparison state of the level-j projections pi_j(v), pi_j(u).
  struct LevelState {
    enum class Kind : std::uint8_t {
      equal,   // c_j = 0
      u_less,  // c_j = 1: pi_j(u) < pi_j(v) and pi_j(u) can no longer grow
      v_less,  // c_j = -1: pi_j(v) < pi_j(u) and pi_j(v) can no longer grow
      open     // record: shortlex history of the aligned parts + overhang
    };
    Kind kind = Kind::equal;
    // open only: shortlex history of the equal-length aligned parts
    // (v1, u1): +1 if u1 precedes v1, -1 if v1 precedes u1, 0 if equal.
    std::int8_t aligned = 0;
    Word        v_tail;  // v2
    Word        u_tail;  // u2 (at most one of the tails is non-empty)

    auto operator<=>(LevelState const&) const = default;
  };

  // Wreath-product-over-shortlex history
  // (len, level(v), level(u), c_1, ..., c_N). Levels above
  // max(level(v), level(u)) are stored as `equal`.
  struct WreathHistory {
    bool                    padded  = false;
    int                     level_v = 0;
    int                     level_u = 0;
    std::vector<LevelState> levels;  // index j - 1 holds c_j
    // Some overhang exceeded the cap; outside every sufficient set.
    bool overflow = false;

    auto operator<=>(WreathHistory const&) const = default;
  };

  using History = std::variant<WeightedHistory, WreathHistory>;

  inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

  bool is_padded(History const& h);
  bool is_overflow(History const& h);

  // Direct evaluation of f(v, u). Requires v != u and l(v) >= l(u)
  // (InputError otherwise). Wreath overhangs longer than `overhang_cap`
  // collapse to an overflow history.
  History history(Order const& order,
                  Word const&  v,
                  Word const&  u,
                  std::size_t  overhang_cap = kNoCap);

  // f(vg, ut) from f(v, u); `t` may be kPad (u is not extended). A padded
  // history only accepts t = kPad (LogicError otherwise).
  History history_step(Order const&   order,
                       History const& h,
                       Symbol         g,
                       Symbol         t,
                       std::size_t    overhang_cap = kNoCap);

  // Whether ub < va for every (v, u) with history h. When h is padded b
  // must be empty. LogicError on overflow histories.
  bool decide_precedes(Order const&   order,
                       History const& h,
                       Word const&    a,
                       Word const&    b);

  // Compact byte encoding; equal histories have equal keys.
  std::string history_key(History const& h);

  std::string to_string(Order const& order, History const& h);

}  // namespace autgrp

#endif  // AUTGRP_HISTORY_HPP_
