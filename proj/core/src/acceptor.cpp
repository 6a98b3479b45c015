#include "autgrp/acceptor.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "autgrp/error.hpp"

namespace autgrp {

  namespace {

    struct IdsHash {
      std::size_t operator()(std::vector<std::int32_t> const& v) const noexcept {
        std::size_t h = 0x84222325cbf29ce4ull;
        for (auto x : v) {
          h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6)
               + (h >> 2);
        }
        return h;
      }
    };

    std::string dh_key(DiffHistory const& dh) {
      std::string k(reinterpret_cast<char const*>(&dh.state), sizeof(State));
      k += history_key(dh.hist);
      return k;
    }

    // dh2 makes dh1 redundant: same state and length flag, no smaller wtd
    // or lex.
    bool dominates(DiffHistory const& dh2, DiffHistory const& dh1) {
      if (dh2.state != dh1.state) {
        return false;
      }
      auto const* a = std::get_if<WeightedHistory>(&dh2.hist);
      auto const* b = std::get_if<WeightedHistory>(&dh1.hist);
      if (!a || !b || a->padded != b->padded) {
        return false;
      }
      return a->wtd >= b->wtd && a->lex >= b->lex && !(*a == *b);
    }

  }  // namespace

  HSpec make_hspec(Order const& order, DiffMachine const& d, WreathBound bound) {
    HSpec spec;
    spec.kind = order.kind();
    auto const& alpha = order.alphabet();
    if (order.is_weighted()) {
      for (auto const& l : d.labels()) {
        long w = order.weight_of(l);
        spec.lower.push_back(-w);
        spec.upper = std::max(spec.upper, w);
      }
      return spec;
    }
    for (auto const& l : d.labels()) {
      if (bound == WreathBound::level_count) {
        std::vector<std::size_t> count(alpha.max_level() + 1, 0);
        for (Symbol s : l) {
          spec.K = std::max(spec.K, ++count[alpha.level(s)]);
        }
        continue;
      }
      for (int j = 1; j <= alpha.max_level(); ++j) {
        spec.K = std::max(spec.K, order.level_projection(l, j).size());
      }
    }
    return spec;
  }

  bool in_H(HSpec const& spec, DiffHistory const& dh) {
    if (auto const* w = std::get_if<WeightedHistory>(&dh.hist)) {
      if (dh.state < 0 || static_cast<std::size_t>(dh.state) >= spec.lower.size()) {
        return false;
      }
      return spec.lower[dh.state] <= w->wtd && w->wtd <= spec.upper;
    }
    auto const& h = std::get<WreathHistory>(dh.hist);
    if (h.overflow) {
      return false;
    }
    for (auto const& st : h.levels) {
      if (st.v_tail.size() > spec.K || st.u_tail.size() > spec.K) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::vector<DiffHistory>> dh_initial(DiffMachine const& d,
                                                     Order const&       order,
                                                     HSpec const&       spec,
                                                     Symbol             g) {
    auto const& f     = d.fsa();
    State const start = d.start();
    auto const  n     = f.base_size();
    Word const  gw{g};
    if (f.target(start, f.pair_label(g, kPad)) == start) {
      return std::nullopt;
    }
    for (std::size_t hi = 0; hi < n; ++hi) {
      auto  h = static_cast<Symbol>(hi);
      State s = f.target(start, f.pair_label(g, h));
      if (s == kNoState) {
        continue;
      }
      if (auto const& t = d.tail(s)) {
        if (order.less(concat(Word{h}, *t), gw)) {
          return std::nullopt;
        }
      }
    }
    std::vector<DiffHistory> out;
    auto const cap = history_cap(spec);
    for (std::size_t hi = 0; hi <= n; ++hi) {
      Symbol h = hi == n ? kPad : static_cast<Symbol>(hi);
      if (h == g) {
        continue;
      }
      State s = f.target(start, f.pair_label(g, h));
      if (s == kNoState || s == start) {
        continue;
      }
      DiffHistory dh{s, history(order, gw, h == kPad ? Word{} : Word{h}, cap)};
      if (in_H(spec, dh)) {
        out.push_back(std::move(dh));
      }
    }
    return out;
  }

  std::optional<DiffHistory> dh_target(DiffMachine const& d,
                                       Order const&       order,
                                       HSpec const&       spec,
                                       DiffHistory const& dh,
                                       Symbol             g,
                                       Symbol             t) {
    if (t != kPad && is_padded(dh.hist)) {
      return std::nullopt;
    }
    State s = d.target(dh.state, g, t);
    if (s == kNoState || s == d.start()) {
      return std::nullopt;
    }
    return DiffHistory{s,
                       history_step(order, dh.hist, g, t, history_cap(spec))};
  }

  Failure failure_test(DiffMachine const& d,
                       Order const&       order,
                       DiffHistory const& dh,
                       Symbol             g) {
    auto const& f     = d.fsa();
    State const start = d.start();
    Word const  gw{g};
    if (is_overflow(dh.hist)) {
      return {};
    }
    if (f.target(dh.state, f.pair_label(g, kPad)) == start
        && decide_precedes(order, dh.hist, gw, Word{})) {
      return {FailureRule::a, kPad};
    }
    if (is_padded(dh.hist)) {
      return {};
    }
    auto const n = f.base_size();
    for (std::size_t hi = 0; hi < n; ++hi) {
      auto h = static_cast<Symbol>(hi);
      if (f.target(dh.state, f.pair_label(g, h)) == start
          && decide_precedes(order, dh.hist, gw, Word{h})) {
        return {FailureRule::b, h};
      }
    }
    for (std::size_t hi = 0; hi < n; ++hi) {
      auto  h = static_cast<Symbol>(hi);
      State t = f.target(dh.state, f.pair_label(g, h));
      if (t == kNoState || t == start) {
        continue;
      }
      State inv = d.inverse_state(t);
      if (inv == kNoState) {
        continue;
      }
      if (decide_precedes(order, dh.hist, gw, concat(Word{h}, d.label(inv)))) {
        return {FailureRule::c, h};
      }
    }
    return {};
  }

  AcceptorBuild build_acceptor_full(DiffMachine const&     d,
                                    Order const&           order,
                                    HSpec const&           spec,
                                    AcceptorOptions const& options) {
    auto const n = d.fsa().base_size();
    if (n != order.alphabet().size()) {
      throw InputError("difference machine and order disagree on alphabet");
    }

    std::vector<DiffHistory>                     pool;
    std::unordered_map<std::string, std::int32_t> pool_index;
    auto intern = [&](DiffHistory dh) {
      auto k = dh_key(dh);
      if (auto it = pool_index.find(k); it != pool_index.end()) {
        return it->second;
      }
      auto id = static_cast<std::int32_t>(pool.size());
      pool.push_back(std::move(dh));
      pool_index.emplace(std::move(k), id);
      return id;
    };

    std::vector<bool>                      init_fail(n, false);
    std::vector<std::vector<std::int32_t>> init_ids(n);
    for (std::size_t g = 0; g < n; ++g) {
      auto init = dh_initial(d, order, spec, static_cast<Symbol>(g));
      if (!init) {
        init_fail[g] = true;
        continue;
      }
      for (auto& dh : *init) {
        init_ids[g].push_back(intern(std::move(dh)));
      }
    }

    // per (history id, generator): failure flag and in-H targets
    struct Step {
      bool                      done = false;
      bool                      fail = false;
      std::vector<std::int32_t> targets;
    };
    std::vector<Step> steps;
    auto step = [&](std::int32_t id, std::size_t g) -> Step const& {
      auto idx = static_cast<std::size_t>(id) * n + g;
      if (steps.size() <= idx) {
        steps.resize(std::max(idx + 1, steps.size() * 2));
      }
      if (!steps[idx].done) {
        Step st;
        st.done       = true;
        auto const dh = pool[id];
        auto       gs = static_cast<Symbol>(g);
        st.fail = failure_test(d, order, dh, gs).rule != FailureRule::none;
        if (!st.fail) {
          for (std::size_t ti = 0; ti <= n; ++ti) {
            Symbol t  = ti == n ? kPad : static_cast<Symbol>(ti);
            auto   nx = dh_target(d, order, spec, dh, gs, t);
            if (nx && in_H(spec, *nx)) {
              st.targets.push_back(intern(std::move(*nx)));
            }
          }
        }
        steps[idx] = std::move(st);
      }
      return steps[idx];
    };

    AcceptorBuild out;
    out.raw = Fsa(n, 1);
    // subsets live back to back in `flat`; `buckets` maps a set hash to the
    // states carrying it
    std::vector<std::int32_t>                              flat;
    std::vector<std::size_t>                               offset{0};
    std::unordered_map<std::size_t, std::vector<State>>    buckets;
    auto set_of = [&](std::size_t s) {
      return std::pair{flat.begin() + static_cast<std::ptrdiff_t>(offset[s]),
                       flat.begin() + static_cast<std::ptrdiff_t>(offset[s + 1])};
    };
    auto add_set = [&](std::vector<std::int32_t> const& set) {
      auto  h      = IdsHash{}(set);
      auto& bucket = buckets[h];
      for (State s : bucket) {
        auto [b, e] = set_of(static_cast<std::size_t>(s));
        if (std::equal(b, e, set.begin(), set.end())) {
          return s;
        }
      }
      if (out.raw.num_states() >= options.max_states) {
        throw LimitError("word acceptor exceeds "
                         + std::to_string(options.max_states) + " states");
      }
      if (flat.size() + set.size() > options.max_entries) {
        throw LimitError("word acceptor history sets exceed "
                         + std::to_string(options.max_entries) + " entries");
      }
      State s = out.raw.add_state(true);
      bucket.push_back(s);
      flat.insert(flat.end(), set.begin(), set.end());
      offset.push_back(flat.size());
      return s;
    };
    out.raw.set_start(add_set({}));

    std::vector<std::uint32_t> stamp;
    std::uint32_t              epoch = 0;
    std::vector<std::int32_t>  next;
    for (std::size_t cur = 0; cur < out.raw.num_states(); ++cur) {
      for (std::size_t g = 0; g < n; ++g) {
        if (init_fail[g]) {
          continue;
        }
        bool fail = false;
        next.clear();
        ++epoch;
        auto take = [&](std::int32_t id) {
          if (stamp.size() <= static_cast<std::size_t>(id)) {
            stamp.resize(std::max<std::size_t>(id + 1, stamp.size() * 2), 0);
          }
          if (stamp[id] != epoch) {
            stamp[id] = epoch;
            next.push_back(id);
          }
        };
        for (auto id : init_ids[g]) {
          take(id);
        }
        for (std::size_t k = offset[cur]; k < offset[cur + 1]; ++k) {
          // `step` may grow the pool, never `flat`
          auto const& st = step(flat[k], g);
          if (st.fail) {
            fail = true;
            break;
          }
          for (auto t : st.targets) {
            take(t);
          }
        }
        if (fail) {
          continue;
        }
        std::sort(next.begin(), next.end());
        if (options.prune && order.is_weighted()) {
          std::vector<std::int32_t> kept;
          for (auto a : next) {
            bool dominated = std::any_of(next.begin(), next.end(), [&](auto b) {
              return b != a && dominates(pool[b], pool[a]);
            });
            if (!dominated) {
              kept.push_back(a);
            }
          }
          next.swap(kept);
        }
        State to = add_set(next);
        out.raw.set_transition(static_cast<State>(cur), g, to);
      }
    }

    if (options.keep_sets) {
      out.sets.reserve(out.raw.num_states());
      for (std::size_t s = 0; s < out.raw.num_states(); ++s) {
        auto [b, e] = set_of(s);
        std::vector<DiffHistory> v;
        for (auto it = b; it != e; ++it) {
          v.push_back(pool[*it]);
        }
        out.sets.push_back(std::move(v));
      }
    }
    out.histories = pool.size();
    out.entries   = flat.size();
    out.minimal   = minimize(out.raw);
    return out;
  }

  Fsa build_acceptor(DiffMachine const&     d,
                     Order const&           order,
                     HSpec const&           spec,
                     AcceptorOptions const& options) {
    return build_acceptor_full(d, order, spec, options).minimal;
  }

}  // namespace autgrp
