#include "autgrp/fsa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "autgrp/error.hpp"

namespace autgrp {

  namespace {

    struct VecHash {
      template <typename T>
      std::size_t operator()(std::vector<T> const& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto x : v) {
          h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6)
               + (h >> 2);
        }
        return h;
      }
    };

    void require_compatible(Fsa const& a, Fsa const& b) {
      if (a.tracks() != b.tracks() || a.base_size() != b.base_size()) {
        throw InputError("automata over different alphabets");
      }
    }

    // Nondeterministic machine with silent moves, used for projection.
    struct Nfa {
      std::size_t                                        labels = 0;
      std::vector<std::vector<std::pair<std::size_t, State>>> edges;
      std::vector<std::vector<State>>                    silent;
      std::vector<State>                                 starts;
      std::vector<bool>                                  accepting;
    };

    std::vector<State> silent_closure(Nfa const& n, std::vector<State> set) {
      std::vector<bool>  seen(n.edges.size(), false);
      std::vector<State> stack;
      for (State s : set) {
        if (!seen[s]) {
          seen[s] = true;
          stack.push_back(s);
        }
      }
      set.clear();
      while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        set.push_back(s);
        for (State t : n.silent[s]) {
          if (!seen[t]) {
            seen[t] = true;
            stack.push_back(t);
          }
        }
      }
      std::sort(set.begin(), set.end());
      return set;
    }

    Fsa determinize(Nfa const& n, std::size_t base, int tracks) {
      Fsa out(base, tracks);
      std::unordered_map<std::vector<State>, State, VecHash> index;
      std::deque<std::vector<State>>                         queue;
      auto intern = [&](std::vector<State> set) {
        auto it = index.find(set);
        if (it != index.end()) {
          return it->second;
        }
        bool acc = std::any_of(
            set.begin(), set.end(), [&](State s) { return n.accepting[s]; });
        State id = out.add_state(acc);
        index.emplace(set, id);
        queue.push_back(std::move(set));
        return id;
      };
      out.set_start(intern(silent_closure(n, n.starts)));
      std::vector<std::vector<State>> buckets(n.labels);
      while (!queue.empty()) {
        auto set = std::move(queue.front());
        queue.pop_front();
        State from = index.at(set);
        for (auto& b : buckets) {
          b.clear();
        }
        for (State s : set) {
          for (auto [l, t] : n.edges[s]) {
            buckets[l].push_back(t);
          }
        }
        for (std::size_t l = 0; l < n.labels; ++l) {
          if (buckets[l].empty()) {
            continue;
          }
          State to = intern(silent_closure(n, buckets[l]));
          out.set_transition(from, l, to);
        }
      }
      return out;
    }

    // Product of two machines with an implicit dead state (-1) on each side.
    template <typename AcceptFn>
    Fsa product(Fsa const& a, Fsa const& b, bool complete, AcceptFn accept) {
      require_compatible(a, b);
      Fsa out(a.base_size(), a.tracks());
      std::unordered_map<std::uint64_t, State> index;
      std::deque<std::pair<State, State>>      queue;
      auto key = [](State x, State y) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x))
                << 32)
               | static_cast<std::uint32_t>(y);
      };
      auto intern = [&](State x, State y) {
        auto k  = key(x, y);
        auto it = index.find(k);
        if (it != index.end()) {
          return it->second;
        }
        bool ax = x != kNoState && a.is_accepting(x);
        bool ay = y != kNoState && b.is_accepting(y);
        State id = out.add_state(accept(ax, ay));
        index.emplace(k, id);
        queue.emplace_back(x, y);
        return id;
      };
      out.set_start(intern(a.start(), b.start()));
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        State from = index.at(key(x, y));
        for (std::size_t l = 0; l < a.label_count(); ++l) {
          if (!a.is_valid_label(l)) {
            continue;
          }
          State tx = x == kNoState ? kNoState : a.target(x, l);
          State ty = y == kNoState ? kNoState : b.target(y, l);
          if (complete ? (tx == kNoState && ty == kNoState)
                       : (tx == kNoState || ty == kNoState)) {
            continue;
          }
          out.set_transition(from, l, intern(tx, ty));
        }
      }
      return out;
    }

    Fsa padded_universe(std::size_t base) {
      // states: 0 none padded, 1 first padded, 2 second padded
      Fsa    u(base, 2);
      State  s0 = u.add_state(true);
      State  s1 = u.add_state(true);
      State  s2 = u.add_state(true);
      u.set_start(s0);
      auto pad = static_cast<Symbol>(kPad);
      for (std::size_t a = 0; a < base; ++a) {
        for (std::size_t b = 0; b < base; ++b) {
          u.set_transition(s0,
                           u.pair_label(static_cast<Symbol>(a),
                                        static_cast<Symbol>(b)),
                           s0);
        }
        u.set_transition(s0, u.pair_label(pad, static_cast<Symbol>(a)), s1);
        u.set_transition(s1, u.pair_label(pad, static_cast<Symbol>(a)), s1);
        u.set_transition(s0, u.pair_label(static_cast<Symbol>(a), pad), s2);
        u.set_transition(s2, u.pair_label(static_cast<Symbol>(a), pad), s2);
      }
      return u;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Fsa
  ////////////////////////////////////////////////////////////////////////

  Fsa::Fsa(std::size_t base_size, int tracks)
      : base_(static_cast<int>(base_size)), tracks_(tracks) {
    if (tracks != 1 && tracks != 2) {
      throw InputError("an automaton has one or two tracks");
    }
    labels_ = tracks == 1 ? base_size : (base_size + 1) * (base_size + 1);
  }

  Fsa Fsa::empty_language(std::size_t base_size, int tracks) {
    Fsa a(base_size, tracks);
    a.set_start(a.add_state(false));
    return a;
  }

  Fsa Fsa::all_words(std::size_t base_size) {
    Fsa   a(base_size, 1);
    State s = a.add_state(true);
    a.set_start(s);
    for (std::size_t l = 0; l < base_size; ++l) {
      a.set_transition(s, l, s);
    }
    return a;
  }

  Fsa Fsa::diagonal(std::size_t base_size) {
    Fsa   a(base_size, 2);
    State s = a.add_state(true);
    a.set_start(s);
    for (std::size_t g = 0; g < base_size; ++g) {
      auto x = static_cast<Symbol>(g);
      a.set_transition(s, a.pair_label(x, x), s);
    }
    return a;
  }

  std::size_t Fsa::pair_label(Symbol a, Symbol b) const {
    auto n  = static_cast<std::size_t>(base_);
    auto ia = a == kPad ? n : static_cast<std::size_t>(a);
    auto ib = b == kPad ? n : static_cast<std::size_t>(b);
    if (ia > n || ib > n || (ia == n && ib == n)) {
      throw InputError("invalid pair label");
    }
    return ia * (n + 1) + ib;
  }

  std::pair<Symbol, Symbol> Fsa::label_pair(std::size_t label) const {
    auto   n = static_cast<std::size_t>(base_);
    auto   a = label / (n + 1);
    auto   b = label % (n + 1);
    Symbol x = a == n ? kPad : static_cast<Symbol>(a);
    Symbol y = b == n ? kPad : static_cast<Symbol>(b);
    return {x, y};
  }

  bool Fsa::is_valid_label(std::size_t label) const {
    if (label >= labels_) {
      return false;
    }
    if (tracks_ == 1) {
      return true;
    }
    return label != labels_ - 1;  // (PAD, PAD)
  }

  State Fsa::add_state(bool accepting) {
    accepting_.push_back(accepting);
    table_.resize(table_.size() + labels_, kNoState);
    if (!state_labels_.empty()) {
      state_labels_.emplace_back();
    }
    return static_cast<State>(accepting_.size() - 1);
  }

  void Fsa::check_state(State s) const {
    if (s < 0 || static_cast<std::size_t>(s) >= accepting_.size()) {
      throw InputError("state out of range");
    }
  }

  void Fsa::set_start(State s) {
    check_state(s);
    start_ = s;
  }

  void Fsa::set_accepting(State s, bool accept) {
    check_state(s);
    accepting_[s] = accept;
  }

  void Fsa::set_transition(State from, std::size_t label, State to) {
    check_state(from);
    if (to != kNoState) {
      check_state(to);
    }
    if (!is_valid_label(label)) {
      throw InputError("invalid transition label");
    }
    table_[static_cast<std::size_t>(from) * labels_ + label] = to;
  }

  void Fsa::set_state_labels(std::vector<Word> labels) {
    if (!labels.empty() && labels.size() != num_states()) {
      throw InputError("state label count mismatch");
    }
    state_labels_ = std::move(labels);
  }

  std::size_t Fsa::num_transitions() const {
    return static_cast<std::size_t>(
        std::count_if(table_.begin(), table_.end(), [](State t) {
          return t != kNoState;
        }));
  }

  State Fsa::run(Word const& w) const {
    if (tracks_ != 1) {
      throw InputError("one-track input given to a two-track automaton");
    }
    State s = start_;
    for (Symbol x : w) {
      if (s == kNoState) {
        break;
      }
      if (x >= base_) {
        throw InputError("symbol outside the automaton alphabet");
      }
      s = target(s, x);
    }
    return s;
  }

  State Fsa::run(Word const& v, Word const& w) const {
    if (tracks_ != 2) {
      throw InputError("pair input given to a one-track automaton");
    }
    State s = start_;
    auto  n = std::max(v.size(), w.size());
    for (std::size_t i = 0; i < n && s != kNoState; ++i) {
      Symbol a = i < v.size() ? v[i] : kPad;
      Symbol b = i < w.size() ? w[i] : kPad;
      if ((a != kPad && a >= base_) || (b != kPad && b >= base_)) {
        throw InputError("symbol outside the automaton alphabet");
      }
      s = target(s, pair_label(a, b));
    }
    return s;
  }

  bool Fsa::accepts(Word const& w) const {
    State s = run(w);
    return s != kNoState && is_accepting(s);
  }

  bool Fsa::accepts(Word const& v, Word const& w) const {
    State s = run(v, w);
    return s != kNoState && is_accepting(s);
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural operations
  ////////////////////////////////////////////////////////////////////////

  Fsa trim(Fsa const& a) {
    auto n = a.num_states();
    if (a.start() == kNoState) {
      return Fsa::empty_language(a.base_size(), a.tracks());
    }
    std::vector<bool>  reach(n, false);
    std::vector<State> stack{a.start()};
    reach[a.start()] = true;
    std::vector<std::vector<State>> reverse(n);
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        State t = a.target(s, l);
        if (t == kNoState) {
          continue;
        }
        reverse[t].push_back(s);
        if (!reach[t]) {
          reach[t] = true;
          stack.push_back(t);
        }
      }
    }
    std::vector<bool> coreach(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      if (reach[s] && a.is_accepting(static_cast<State>(s))) {
        coreach[s] = true;
        stack.push_back(static_cast<State>(s));
      }
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State p : reverse[s]) {
        if (!coreach[p]) {
          coreach[p] = true;
          stack.push_back(p);
        }
      }
    }
    std::vector<State> remap(n, kNoState);
    Fsa                out(a.base_size(), a.tracks());
    std::vector<Word>  labels;
    bool const         annotated = !a.state_labels().empty();
    for (std::size_t s = 0; s < n; ++s) {
      if ((reach[s] && coreach[s]) || static_cast<State>(s) == a.start()) {
        remap[s] = out.add_state(a.is_accepting(static_cast<State>(s)));
        if (annotated) {
          labels.push_back(a.state_labels()[s]);
        }
      }
    }
    out.set_start(remap[a.start()]);
    for (std::size_t s = 0; s < n; ++s) {
      if (remap[s] == kNoState) {
        continue;
      }
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        State t = a.target(static_cast<State>(s), l);
        if (t != kNoState && remap[t] != kNoState) {
          out.set_transition(remap[s], l, remap[t]);
        }
      }
    }
    if (annotated) {
      out.set_state_labels(std::move(labels));
    }
    return out;
  }

  Fsa canonical(Fsa const& a) {
    Fsa out(a.base_size(), a.tracks());
    if (a.start() == kNoState) {
      return Fsa::empty_language(a.base_size(), a.tracks());
    }
    std::vector<State> remap(a.num_states(), kNoState);
    std::vector<State> order;
    std::deque<State>  queue{a.start()};
    remap[a.start()] = out.add_state(a.is_accepting(a.start()));
    order.push_back(a.start());
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        State t = a.target(s, l);
        if (t != kNoState && remap[t] == kNoState) {
          remap[t] = out.add_state(a.is_accepting(t));
          order.push_back(t);
          queue.push_back(t);
        }
      }
    }
    out.set_start(0);
    for (State s : order) {
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        State t = a.target(s, l);
        if (t != kNoState) {
          out.set_transition(remap[s], l, remap[t]);
        }
      }
    }
    if (!a.state_labels().empty()) {
      std::vector<Word> labels;
      for (State s : order) {
        labels.push_back(a.state_labels()[s]);
      }
      out.set_state_labels(std::move(labels));
    }
    return out;
  }

  Fsa intersect(Fsa const& a, Fsa const& b) {
    return trim(product(a, b, false, [](bool x, bool y) { return x && y; }));
  }

  Fsa unite(Fsa const& a, Fsa const& b) {
    return trim(product(a, b, true, [](bool x, bool y) { return x || y; }));
  }

  Fsa complement(Fsa const& a) {
    Fsa c(a.base_size(), a.tracks());
    for (std::size_t s = 0; s < a.num_states(); ++s) {
      c.add_state(!a.is_accepting(static_cast<State>(s)));
    }
    State dead = c.add_state(true);
    c.set_start(a.start() == kNoState ? dead : a.start());
    for (std::size_t s = 0; s < c.num_states(); ++s) {
      for (std::size_t l = 0; l < c.label_count(); ++l) {
        if (!c.is_valid_label(l)) {
          continue;
        }
        State t = static_cast<State>(s) == dead
                      ? kNoState
                      : a.target(static_cast<State>(s), l);
        c.set_transition(static_cast<State>(s), l, t == kNoState ? dead : t);
      }
    }
    if (a.tracks() == 2) {
      return intersect(c, padded_universe(a.base_size()));
    }
    return trim(c);
  }

  Fsa project(Fsa const& a, Side side) {
    if (a.tracks() != 2) {
      throw InputError("projection needs a two-track automaton");
    }
    Nfa n;
    n.labels = a.base_size();
    n.edges.resize(a.num_states());
    n.silent.resize(a.num_states());
    n.accepting.resize(a.num_states());
    for (std::size_t s = 0; s < a.num_states(); ++s) {
      n.accepting[s] = a.is_accepting(static_cast<State>(s));
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        State t = a.target(static_cast<State>(s), l);
        if (t == kNoState) {
          continue;
        }
        auto [x, y] = a.label_pair(l);
        Symbol kept = side == Side::first ? x : y;
        if (kept == kPad) {
          n.silent[s].push_back(t);
        } else {
          n.edges[s].emplace_back(kept, t);
        }
      }
    }
    if (a.start() != kNoState) {
      n.starts.push_back(a.start());
    } else {
      return Fsa::empty_language(a.base_size(), 1);
    }
    return trim(determinize(n, a.base_size(), 1));
  }

  Fsa compose2(Fsa const& a, Fsa const& b) {
    require_compatible(a, b);
    if (a.tracks() != 2) {
      throw InputError("composition needs two-track automata");
    }
    Fsa out(a.base_size(), 2);
    if (a.start() == kNoState || b.start() == kNoState) {
      return Fsa::empty_language(a.base_size(), 2);
    }
    auto const pad  = kPad;
    auto const base = a.base_size();

    // A composite state: a-state, b-state and which words have ended.
    struct Triple {
      State        sa;
      State        sb;
      std::uint8_t ended;  // bit 0: first outer, 1: second outer, 2: middle
      bool operator==(Triple const&) const = default;
    };
    auto pack = [](Triple const& t) {
      return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.sa))
              << 32)
             ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.sb))
                << 3)
             ^ t.ended;
    };

    // Whether the middle word can continue alone to a joint accept:
    // a reads (PAD, m), b reads (m, PAD). The search is bounded by the
    // number of (a, b) state pairs.
    std::unordered_map<std::uint64_t, bool> tail_memo;
    auto tail_ok = [&](State sa, State sb, bool middle_ended) {
      if (a.is_accepting(sa) && b.is_accepting(sb)) {
        return true;
      }
      if (middle_ended) {
        return false;
      }
      auto k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(sa))
                << 32)
               | static_cast<std::uint32_t>(sb);
      if (auto it = tail_memo.find(k); it != tail_memo.end()) {
        return it->second;
      }
      std::unordered_set<std::uint64_t>     seen{k};
      std::deque<std::pair<State, State>>   queue{{sa, sb}};
      bool                                  found = false;
      while (!queue.empty() && !found) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (std::size_t m = 0; m < base && !found; ++m) {
          auto  ms = static_cast<Symbol>(m);
          State tx = a.target(x, a.pair_label(pad, ms));
          State ty = b.target(y, b.pair_label(ms, pad));
          if (tx == kNoState || ty == kNoState) {
            continue;
          }
          if (a.is_accepting(tx) && b.is_accepting(ty)) {
            found = true;
            break;
          }
          auto kk
              = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(tx))
                 << 32)
                | static_cast<std::uint32_t>(ty);
          if (seen.insert(kk).second) {
            queue.emplace_back(tx, ty);
          }
        }
      }
      tail_memo[k] = found;
      return found;
    };

    using Set = std::vector<std::uint64_t>;
    std::unordered_map<Set, State, VecHash> index;
    std::deque<std::vector<Triple>>         queue;
    auto intern = [&](std::vector<Triple> set) {
      std::sort(set.begin(), set.end(), [&](Triple const& x, Triple const& y) {
        return pack(x) < pack(y);
      });
      set.erase(std::unique(set.begin(), set.end()), set.end());
      Set key;
      key.reserve(set.size());
      for (auto const& t : set) {
        key.push_back(pack(t));
      }
      if (auto it = index.find(key); it != index.end()) {
        return it->second;
      }
      bool acc = false;
      for (auto const& t : set) {
        if (tail_ok(t.sa, t.sb, t.ended & 4)) {
          acc = true;
          break;
        }
      }
      State id = out.add_state(acc);
      index.emplace(std::move(key), id);
      queue.push_back(std::move(set));
      return id;
    };

    out.set_start(intern({Triple{a.start(), b.start(), 0}}));
    std::vector<std::vector<Triple>> buckets(out.label_count());
    while (!queue.empty()) {
      auto set = std::move(queue.front());
      queue.pop_front();
      Set key;
      {
        auto sorted = set;
        for (auto const& t : sorted) {
          key.push_back(pack(t));
        }
      }
      State from = index.at(key);
      for (auto& bk : buckets) {
        bk.clear();
      }
      for (auto const& t : set) {
        for (std::size_t xi = 0; xi <= base; ++xi) {
          Symbol x = xi == base ? pad : static_cast<Symbol>(xi);
          if ((t.ended & 1) && x != pad) {
            continue;
          }
          for (std::size_t zi = 0; zi <= base; ++zi) {
            Symbol z = zi == base ? pad : static_cast<Symbol>(zi);
            if (x == pad && z == pad) {
              continue;
            }
            if ((t.ended & 2) && z != pad) {
              continue;
            }
            std::size_t label = out.pair_label(x, z);
            for (std::size_t mi = 0; mi <= base; ++mi) {
              Symbol m = mi == base ? pad : static_cast<Symbol>(mi);
              if ((t.ended & 4) && m != pad) {
                continue;
              }
              State sa = (x == pad && m == pad)
                             ? t.sa
                             : a.target(t.sa, a.pair_label(x, m));
              if (sa == kNoState) {
                continue;
              }
              State sb = (m == pad && z == pad)
                             ? t.sb
                             : b.target(t.sb, b.pair_label(m, z));
              if (sb == kNoState) {
                continue;
              }
              std::uint8_t ended = t.ended;
              if (x == pad) {
                ended |= 1;
              }
              if (z == pad) {
                ended |= 2;
              }
              if (m == pad) {
                ended |= 4;
              }
              buckets[label].push_back(Triple{sa, sb, ended});
            }
          }
        }
      }
      for (std::size_t l = 0; l < out.label_count(); ++l) {
        if (!buckets[l].empty()) {
          out.set_transition(from, l, intern(buckets[l]));
        }
      }
    }
    return trim(out);
  }

  Fsa minimize(Fsa const& a0) {
    Fsa a = trim(a0);
    a.set_state_labels({});
    auto n = a.num_states();
    bool any_accept = false;
    for (std::size_t s = 0; s < n; ++s) {
      any_accept = any_accept || a.is_accepting(static_cast<State>(s));
    }
    if (!any_accept) {
      return Fsa::empty_language(a.base_size(), a.tracks());
    }
    // After trimming every state is live, so undefined transitions all go
    // to the same implicit dead class (-1).
    std::vector<std::int32_t> cls(n);
    for (std::size_t s = 0; s < n; ++s) {
      cls[s] = a.is_accepting(static_cast<State>(s)) ? 1 : 0;
    }
    std::size_t classes = 0;
    {
      std::unordered_set<std::int32_t> distinct(cls.begin(), cls.end());
      classes = distinct.size();
    }
    std::vector<std::int32_t> sig(a.label_count() + 1);
    while (true) {
      std::unordered_map<std::vector<std::int32_t>, std::int32_t, VecHash>
                                ids;
      std::vector<std::int32_t> next(n);
      for (std::size_t s = 0; s < n; ++s) {
        sig[0] = cls[s];
        for (std::size_t l = 0; l < a.label_count(); ++l) {
          State t    = a.target(static_cast<State>(s), l);
          sig[l + 1] = t == kNoState ? -1 : cls[t];
        }
        auto [it, inserted]
            = ids.emplace(sig, static_cast<std::int32_t>(ids.size()));
        next[s] = it->second;
      }
      cls.swap(next);
      if (ids.size() == classes) {
        break;
      }
      classes = ids.size();
    }
    Fsa q(a.base_size(), a.tracks());
    for (std::size_t c = 0; c < classes; ++c) {
      q.add_state(false);
    }
    for (std::size_t s = 0; s < n; ++s) {
      q.set_accepting(cls[s], a.is_accepting(static_cast<State>(s)));
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        State t = a.target(static_cast<State>(s), l);
        if (t != kNoState) {
          q.set_transition(cls[s], l, cls[t]);
        }
      }
    }
    q.set_start(cls[a.start()]);
    return canonical(q);
  }

  LanguageDiff equal_languages(Fsa const& a, Fsa const& b) {
    require_compatible(a, b);
    LanguageDiff result;
    using Pair = std::pair<State, State>;
    std::map<Pair, std::pair<Pair, std::size_t>> parent;
    std::deque<Pair>                             queue;
    Pair start{a.start(), b.start()};
    parent[start] = {start, 0};
    queue.push_back(start);
    auto acc = [](Fsa const& m, State s) {
      return s != kNoState && m.is_accepting(s);
    };
    while (!queue.empty()) {
      Pair p = queue.front();
      queue.pop_front();
      if (acc(a, p.first) != acc(b, p.second)) {
        result.equal            = false;
        result.in_first_machine = acc(a, p.first);
        std::vector<std::size_t> labels;
        for (Pair cur = p; cur != start;) {
          auto const& [prev, l] = parent.at(cur);
          labels.push_back(l);
          cur = prev;
        }
        std::reverse(labels.begin(), labels.end());
        for (auto l : labels) {
          if (a.tracks() == 1) {
            result.first.push_back(static_cast<Symbol>(l));
          } else {
            auto [x, y] = a.label_pair(l);
            if (x != kPad) {
              result.first.push_back(x);
            }
            if (y != kPad) {
              result.second.push_back(y);
            }
          }
        }
        return result;
      }
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        if (!a.is_valid_label(l)) {
          continue;
        }
        State ta = p.first == kNoState ? kNoState : a.target(p.first, l);
        State tb = p.second == kNoState ? kNoState : b.target(p.second, l);
        if (ta == kNoState && tb == kNoState) {
          continue;
        }
        Pair q{ta, tb};
        if (parent.emplace(q, std::make_pair(p, l)).second) {
          queue.push_back(q);
        }
      }
    }
    return result;
  }

  std::vector<Word> enumerate(Fsa const& a, std::size_t maxlen) {
    if (a.tracks() != 1) {
      throw InputError("enumerate needs a one-track automaton");
    }
    std::vector<Word> out;
    if (a.start() == kNoState) {
      return out;
    }
    Fsa t = trim(a);
    std::vector<std::pair<Word, State>> layer{{Word{}, t.start()}};
    for (std::size_t len = 0; len <= maxlen && !layer.empty(); ++len) {
      std::vector<std::pair<Word, State>> next;
      for (auto const& [w, s] : layer) {
        if (t.is_accepting(s)) {
          out.push_back(w);
        }
        if (len == maxlen) {
          continue;
        }
        for (std::size_t l = 0; l < t.label_count(); ++l) {
          State u = t.target(s, l);
          if (u != kNoState) {
            next.emplace_back(concat(w, static_cast<Symbol>(l)), u);
          }
        }
      }
      layer.swap(next);
    }
    return out;
  }

  std::vector<BigCount> growth(Fsa const& a, std::size_t maxlen) {
    if (a.tracks() != 1) {
      throw InputError("growth needs a one-track automaton");
    }
    std::vector<BigCount> out;
    if (a.start() == kNoState) {
      out.assign(maxlen + 1, 0);
      return out;
    }
    std::vector<BigCount> paths(a.num_states(), 0);
    paths[a.start()] = 1;
    for (std::size_t len = 0; len <= maxlen; ++len) {
      BigCount total = 0;
      for (std::size_t s = 0; s < a.num_states(); ++s) {
        if (a.is_accepting(static_cast<State>(s))) {
          total += paths[s];
        }
      }
      out.push_back(total);
      if (len == maxlen) {
        break;
      }
      std::vector<BigCount> next(a.num_states(), 0);
      for (std::size_t s = 0; s < a.num_states(); ++s) {
        if (paths[s] == 0) {
          continue;
        }
        for (std::size_t l = 0; l < a.label_count(); ++l) {
          State t = a.target(static_cast<State>(s), l);
          if (t != kNoState) {
            next[t] += paths[s];
          }
        }
      }
      paths.swap(next);
    }
    return out;
  }

  BigCount count_accepted(Fsa const& a, std::size_t n) {
    return growth(a, n).back();
  }

  std::vector<std::string> check_structure(Fsa const& a) {
    std::vector<std::string> problems;
    if (a.start() == kNoState) {
      problems.emplace_back("no start state");
      return problems;
    }
    // bit 0: first track padded, bit 1: second track padded
    std::vector<std::uint8_t> seen(a.num_states(), 0);
    std::deque<std::pair<State, std::uint8_t>> queue{{a.start(), 0}};
    auto mark = [&](State s, std::uint8_t status) {
      auto bit = static_cast<std::uint8_t>(1u << status);
      if (seen[s] & bit) {
        return false;
      }
      seen[s] |= bit;
      return true;
    };
    mark(a.start(), 0);
    while (!queue.empty()) {
      auto [s, status] = queue.front();
      queue.pop_front();
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        State t = a.target(s, l);
        if (t == kNoState) {
          continue;
        }
        std::uint8_t next = status;
        if (a.tracks() == 2) {
          auto [x, y] = a.label_pair(l);
          if (((status & 1) && x != kPad) || ((status & 2) && y != kPad)) {
            problems.push_back("state " + std::to_string(s + 1)
                               + " reads a symbol after padding");
            continue;
          }
          if (x == kPad) {
            next |= 1;
          }
          if (y == kPad) {
            next |= 2;
          }
        }
        if (mark(t, next)) {
          queue.emplace_back(t, next);
        }
      }
    }
    for (std::size_t s = 0; s < a.num_states(); ++s) {
      if (seen[s] == 0) {
        problems.push_back("state " + std::to_string(s + 1)
                           + " is unreachable");
      }
    }
    return problems;
  }

}  // namespace autgrp
