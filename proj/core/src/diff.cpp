#include "autgrp/diff.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include "autgrp/error.hpp"

namespace autgrp {

  namespace {

    Symbol inv_or_pad(Alphabet const& a, Symbol s) {
      return s == kPad ? kPad : a.inverse(s);
    }

    // Mutable machine under construction: states are raw ids joined by
    // union-find; every word ever known to represent a state is an alias.
    class Builder {
     public:
      Builder(RewriteSystem const& r, CloseLimits limits)
          : r_(r),
            order_(r.order()),
            alpha_(order_.alphabet()),
            n_(alpha_.size()),
            limits_(limits) {
        state_of(Word{});
      }

      void import(DiffMachine const& d) {
        if (d.fsa().base_size() != n_) {
          throw InputError("difference machine over a different alphabet");
        }
        std::vector<int> ids;
        for (State s = 0; s < static_cast<State>(d.num_states()); ++s) {
          ids.push_back(state_of(d.label(s)));
        }
        auto const& f = d.fsa();
        for (State s = 0; s < static_cast<State>(f.num_states()); ++s) {
          for (std::size_t l = 0; l < f.label_count(); ++l) {
            State t = f.target(s, l);
            if (t != kNoState) {
              add_edge(ids[s], l, ids[t]);
            }
          }
        }
      }

      // State for a word, created if no alias matches its reduction.
      int state_of(Word const& w) {
        if (auto it = alias_.find(w); it != alias_.end()) {
          return find(it->second);
        }
        Word red = r_.rewrite(free_reduce(alpha_, w));
        if (auto it = alias_.find(red); it != alias_.end()) {
          alias_.emplace(w, it->second);
          return find(it->second);
        }
        int id = static_cast<int>(label_.size());
        label_.push_back(red);
        parent_.push_back(id);
        alias_.emplace(red, id);
        if (w != red) {
          alias_.emplace(w, id);
        }
        ++fresh_;
        return id;
      }

      std::optional<int> lookup(Word const& w) {
        if (auto it = alias_.find(w); it != alias_.end()) {
          return find(it->second);
        }
        Word red = r_.rewrite(free_reduce(alpha_, w));
        if (auto it = alias_.find(red); it != alias_.end()) {
          return find(it->second);
        }
        return std::nullopt;
      }

      int find(int x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        // the root keeps the least label
        if (order_.less(label_[b], label_[a])) {
          std::swap(a, b);
        }
        parent_[b] = a;
        ++merges_;
      }

      void add_edge(int from, std::size_t label, int to) {
        if (edge_set_.emplace(from, label, to).second) {
          edges_.emplace_back(from, label, to);
        }
      }

      std::size_t pair_label(Symbol g, Symbol h) const {
        auto ig = g == kPad ? n_ : static_cast<std::size_t>(g);
        auto ih = h == kPad ? n_ : static_cast<std::size_t>(h);
        return ig * (n_ + 1) + ih;
      }

      std::pair<Symbol, Symbol> label_pair(std::size_t l) const {
        auto   a = l / (n_ + 1);
        auto   b = l % (n_ + 1);
        Symbol g = a == n_ ? kPad : static_cast<Symbol>(a);
        Symbol h = b == n_ ? kPad : static_cast<Symbol>(b);
        return {g, h};
      }

      void add_trace(Word const& v, Word const& w, Word const& final_diff) {
        auto len  = std::max(v.size(), w.size());
        int  prev = state_of(Word{});
        Word vinv;  // v(i)^-1
        Word wpre;
        for (std::size_t i = 0; i < len; ++i) {
          Symbol g = i < v.size() ? v[i] : kPad;
          Symbol h = i < w.size() ? w[i] : kPad;
          if (g != kPad) {
            vinv.insert(vinv.begin(), alpha_.inverse(g));
          }
          if (h != kPad) {
            wpre.push_back(h);
          }
          int cur = state_of(concat(vinv, wpre));
          add_edge(prev, pair_label(g, h), cur);
          prev = cur;
        }
        merge(prev, state_of(final_diff));
      }

      DiffMachine finish(bool closing) {
        std::size_t rounds = 0;
        while (true) {
          if (++rounds > 1000) {
            throw LogicError("difference machine closure did not settle");
          }
          fresh_  = 0;
          merges_ = 0;
          std::size_t edges_before = edges_.size();
          if (closing) {
            close_labels();
          }
          build_table();
          if (closing) {
            add_closure_edges();
          }
          if (fresh_ == 0 && merges_ == 0 && edges_.size() == edges_before) {
            break;
          }
          if (roots().size() > limits_.max_states) {
            throw LimitError("difference machine exceeds "
                             + std::to_string(limits_.max_states)
                             + " states");
          }
        }
        return emit();
      }

     private:
      std::vector<int> roots() {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
          if (find(i) == i) {
            out.push_back(i);
          }
        }
        return out;
      }

      void close_labels() {
        // iterate until no new labels: inverses, maximal prefixes and
        // maximal suffixes
        std::size_t done = 0;
        while (done < label_.size()) {
          auto end = label_.size();
          for (std::size_t i = done; i < end; ++i) {
            if (find(static_cast<int>(i)) != static_cast<int>(i)) {
              continue;
            }
            Word const l = label_[i];
            state_of(invert_word(alpha_, l));
            if (!l.empty()) {
              state_of(Word(l.begin(), l.end() - 1));
              state_of(Word(l.begin() + 1, l.end()));
            }
            if (label_.size() > limits_.max_states) {
              throw LimitError("difference machine exceeds "
                               + std::to_string(limits_.max_states)
                               + " states");
            }
          }
          done = end;
        }
      }

      // Reduction transitions, then explicit edges; conflicting targets
      // denote the same element and are merged.
      void build_table() {
        table_.clear();
        for (int s : roots()) {
          Word const& d = label_[s];
          for (std::size_t gi = 0; gi <= n_; ++gi) {
            Word left;
            if (gi < n_) {
              left.push_back(alpha_.inverse(static_cast<Symbol>(gi)));
            }
            left.insert(left.end(), d.begin(), d.end());
            for (std::size_t hi = 0; hi <= n_; ++hi) {
              if (gi == n_ && hi == n_) {
                continue;
              }
              Word word = left;
              if (hi < n_) {
                word.push_back(static_cast<Symbol>(hi));
              }
              if (auto t = lookup(word)) {
                table_[key(s, gi * (n_ + 1) + hi)] = *t;
              }
            }
          }
        }
        for (auto const& [a, l, b] : edges_) {
          int  fa = find(a);
          int  fb = find(b);
          auto k  = key(fa, l);
          auto it = table_.find(k);
          if (it == table_.end()) {
            table_.emplace(k, fb);
          } else if (find(it->second) != fb) {
            merge(it->second, fb);
          }
        }
        // re-key after merges; equal sources with different targets merge
        // the targets too
        for (std::size_t before = 0; merges_ != before;) {
          before = merges_;
          std::unordered_map<std::uint64_t, int> fixed;
          for (auto const& [k, t] : table_) {
            int  s  = find(static_cast<int>(k >> 32));
            auto kk = key(s, k & 0xffffffffu);
            auto it = fixed.find(kk);
            if (it == fixed.end()) {
              fixed.emplace(kk, find(t));
            } else if (find(it->second) != find(t)) {
              merge(it->second, t);
            }
          }
          for (auto& [k, t] : fixed) {
            t = find(t);
          }
          table_.swap(fixed);
        }
      }

      void add_closure_edges() {
        std::vector<std::tuple<int, std::size_t, int>> snapshot;
        for (auto const& [k, t] : table_) {
          snapshot.emplace_back(static_cast<int>(k >> 32), k & 0xffffffffu, t);
        }
        std::sort(snapshot.begin(), snapshot.end());
        for (auto const& [s, l, t] : snapshot) {
          auto [g, h] = label_pair(l);
          Symbol gi   = inv_or_pad(alpha_, g);
          Symbol hi   = inv_or_pad(alpha_, h);
          add_edge(t, pair_label(gi, hi), s);
          auto is = lookup(invert_word(alpha_, label_[find(s)]));
          auto it = lookup(invert_word(alpha_, label_[find(t)]));
          if (is && it) {
            add_edge(*is, pair_label(h, g), *it);
          }
        }
        for (int s : roots()) {
          Word const& l = label_[s];
          if (l.empty()) {
            continue;
          }
          if (auto p = lookup(Word(l.begin(), l.end() - 1))) {
            add_edge(*p, pair_label(kPad, l.back()), s);
          }
          if (auto q = lookup(Word(l.begin() + 1, l.end()))) {
            add_edge(*q, pair_label(alpha_.inverse(l.front()), kPad), s);
          }
        }
      }

      DiffMachine emit() {
        auto rs    = roots();
        int  start = find(0);
        std::stable_sort(rs.begin(), rs.end(), [&](int a, int b) {
          if ((a == start) != (b == start)) {
            return a == start;
          }
          return order_.less(label_[a], label_[b]);
        });
        std::unordered_map<int, State> id;
        Fsa                            f(n_, 2);
        std::vector<Word>              labels;
        for (int s : rs) {
          id[s] = f.add_state(true);
          labels.push_back(label_[s]);
        }
        f.set_start(0);
        for (auto const& [k, t] : table_) {
          int s = find(static_cast<int>(k >> 32));
          f.set_transition(id.at(s), k & 0xffffffffu, id.at(find(t)));
        }
        f.set_state_labels(labels);
        std::vector<State> inverse(rs.size(), kNoState);
        for (std::size_t i = 0; i < rs.size(); ++i) {
          if (auto j = lookup(invert_word(alpha_, labels[i]))) {
            if (auto it = id.find(*j); it != id.end()) {
              inverse[i] = it->second;
            }
          }
        }
        return DiffMachine(std::move(f), std::move(inverse), order_);
      }

      static std::uint64_t key(int s, std::size_t l) {
        return (static_cast<std::uint64_t>(s) << 32)
               | static_cast<std::uint64_t>(l);
      }

      RewriteSystem const& r_;
      Order const&         order_;
      Alphabet const&      alpha_;
      std::size_t          n_;
      CloseLimits          limits_;

      std::vector<Word>                               label_;
      std::vector<int>                                parent_;
      WordMap<int>                                    alias_;
      std::vector<std::tuple<int, std::size_t, int>>  edges_;
      std::set<std::tuple<int, std::size_t, int>>     edge_set_;
      std::unordered_map<std::uint64_t, int>          table_;
      std::size_t                                     fresh_  = 0;
      std::size_t                                     merges_ = 0;
    };

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // DiffMachine
  ////////////////////////////////////////////////////////////////////////

  DiffMachine::DiffMachine(Fsa fsa,
                           std::vector<State> inverse_state,
                           Order const&       order)
      : fsa_(std::move(fsa)), inverse_(std::move(inverse_state)) {
    auto n = fsa_.num_states();
    if (fsa_.tracks() != 2 || fsa_.state_labels().size() != n
        || inverse_.size() != n || fsa_.start() != 0) {
      throw InputError("malformed difference machine");
    }
    for (State s = 0; s < static_cast<State>(n); ++s) {
      index_.emplace(fsa_.state_labels()[s], s);
    }
    // least padded tails back to the start, by relaxation
    tails_.assign(n, std::nullopt);
    tails_[0] = Word{};
    auto const base = fsa_.base_size();
    for (std::size_t round = 0; round <= n; ++round) {
      bool changed = false;
      for (State s = 1; s < static_cast<State>(n); ++s) {
        for (std::size_t h = 0; h < base; ++h) {
          State t = fsa_.target(s, fsa_.pair_label(kPad, static_cast<Symbol>(h)));
          if (t == kNoState || !tails_[t]) {
            continue;
          }
          Word cand = concat(Word{static_cast<Symbol>(h)}, *tails_[t]);
          if (!tails_[s] || order.less(cand, *tails_[s])) {
            tails_[s] = std::move(cand);
            changed   = true;
          }
        }
      }
      if (!changed) {
        break;
      }
    }
  }

  std::optional<State> DiffMachine::find(Word const& label) const {
    if (auto it = index_.find(label); it != index_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  std::size_t DiffMachine::max_label_length() const {
    std::size_t m = 0;
    for (auto const& l : labels()) {
      m = std::max(m, l.size());
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  EquationTrace trace_equation(RewriteSystem const& r,
                               Word const&          v,
                               Word const&          w) {
    auto const&   alpha = r.order().alphabet();
    EquationTrace t{v, w, {}};
    auto          len = std::max(v.size(), w.size());
    Word          vinv;
    Word          wpre;
    t.differences.push_back(Word{});
    for (std::size_t i = 0; i < len; ++i) {
      if (i < v.size()) {
        vinv.insert(vinv.begin(), alpha.inverse(v[i]));
      }
      if (i < w.size()) {
        wpre.push_back(w[i]);
      }
      t.differences.push_back(r.rewrite(concat(vinv, wpre)));
    }
    return t;
  }

  DiffMachine build_from_rules(RewriteSystem const& r) {
    Builder b(r, CloseLimits{});
    for (auto const& rule : r.rules()) {
      b.add_trace(rule.lhs, rule.rhs, Word{});
      b.add_trace(rule.rhs, rule.lhs, Word{});
    }
    return b.finish(false);
  }

  DiffMachine close(DiffMachine const&   d,
                    RewriteSystem const& r,
                    CloseLimits const&   limits) {
    Builder b(r, limits);
    b.import(d);
    return b.finish(true);
  }

  DiffMachine add_equations(DiffMachine const&           d,
                            std::vector<Equation> const& equations,
                            RewriteSystem const&         r,
                            CloseLimits const&           limits) {
    Builder b(r, limits);
    b.import(d);
    for (auto const& e : equations) {
      b.add_trace(e.v, e.w, e.final_difference);
    }
    return b.finish(true);
  }

  DiffMachine add_equation(DiffMachine const&   d,
                           Word const&          v,
                           Word const&          w,
                           RewriteSystem const& r,
                           Word const&          final_difference,
                           CloseLimits const&   limits) {
    return add_equations(d, {Equation{v, w, final_difference}}, r, limits);
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Best u per difference state for one track mode. Words keep their
    // capacity between uses; `live` lists the occupied slots.
    struct Slots {
      std::vector<Word>  word;
      std::vector<char>  used;
      std::vector<State> live;

      explicit Slots(std::size_t n) : word(n), used(n, 0) {}

      void clear() {
        for (State s : live) {
          used[s] = 0;
        }
        live.clear();
      }

      // Keep the smaller of the current word and u h (h may be kPad).
      void offer(Order const& order, State t, Word const& u, Symbol h, Word& scratch) {
        scratch.assign(u.begin(), u.end());
        if (h != kPad) {
          scratch.push_back(h);
        }
        if (!used[t]) {
          used[t] = 1;
          live.push_back(t);
          word[t].swap(scratch);
        } else if (order.less(scratch, word[t])) {
          word[t].swap(scratch);
        }
      }
    };

  }  // namespace

  std::optional<DirectReduction> find_reduction(DiffMachine const& d,
                                                Order const&       order,
                                                Word const&        w) {
    auto const& f     = d.fsa();
    auto const  n     = d.num_states();
    auto const  base  = f.base_size();
    auto const  start = d.start();
    for (Symbol s : w) {
      if (s >= base) {
        throw InputError("symbol out of range");
      }
    }

    std::optional<DirectReduction> best;
    // equal-length candidates and candidates whose u has ended, per state
    Slots eq(n), ended(n), eq_next(n), ended_next(n);
    Word  scratch, cand, v;
    bool  have = false;

    std::size_t const len = w.size();
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t limit = best ? best->end : len;
      if (i >= limit) {
        break;
      }
      eq.clear();
      ended.clear();
      eq.offer(order, start, Word{}, kPad, scratch);

      for (std::size_t j = i; j < limit; ++j) {
        Symbol g = w[j];
        eq_next.clear();
        ended_next.clear();
        for (State s : eq.live) {
          Word const& u = eq.word[s];
          for (std::size_t h = 0; h < base; ++h) {
            State t = f.target(s, f.pair_label(g, static_cast<Symbol>(h)));
            if (t != kNoState) {
              eq_next.offer(order, t, u, static_cast<Symbol>(h), scratch);
            }
          }
          State t = f.target(s, f.pair_label(g, kPad));
          if (t != kNoState) {
            ended_next.offer(order, t, u, kPad, scratch);
          }
        }
        for (State s : ended.live) {
          State t = f.target(s, f.pair_label(g, kPad));
          if (t != kNoState) {
            ended_next.offer(order, t, ended.word[s], kPad, scratch);
          }
        }
        std::swap(eq, eq_next);
        std::swap(ended, ended_next);
        if (eq.live.empty() && ended.live.empty()) {
          break;
        }

        v.assign(w.begin() + static_cast<std::ptrdiff_t>(i),
                 w.begin() + static_cast<std::ptrdiff_t>(j + 1));
        have = false;
        auto consider = [&](Word const& u) {
          if (order.less(u, v) && (!have || order.less(u, cand))) {
            cand.assign(u.begin(), u.end());
            have = true;
          }
        };
        if (ended.used[start]) {
          consider(ended.word[start]);
        }
        for (State s : eq.live) {
          if (auto const& t = d.tail(s)) {
            scratch.assign(eq.word[s].begin(), eq.word[s].end());
            scratch.insert(scratch.end(), t->begin(), t->end());
            consider(scratch);
          }
        }
        if (have) {
          best = DirectReduction{i, j + 1, cand};
          break;
        }
      }
    }
    return best;
  }

  Word d_reduce(DiffMachine const& d, Order const& order, Word const& w) {
    Word cur = w;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > 10000000) {
        throw LogicError("D-reduction did not terminate");
      }
      auto red = find_reduction(d, order, cur);
      if (!red) {
        return cur;
      }
      Word next(cur.begin(), cur.begin() + red->start);
      next.insert(next.end(), red->u.begin(), red->u.end());
      next.insert(next.end(), cur.begin() + red->end, cur.end());
      cur.swap(next);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> check_axioms(DiffMachine const&   d,
                                        RewriteSystem const& r) {
    std::vector<std::string> out;
    auto const&              f     = d.fsa();
    auto const&              alpha = r.order().alphabet();
    auto const               n     = f.num_states();
    if (f.base_size() != alpha.size()) {
      out.emplace_back("alphabet size mismatch");
      return out;
    }
    if (f.state_labels().size() != n) {
      out.emplace_back("(ii) states are not all labelled");
      return out;
    }
    for (State s = 0; s < static_cast<State>(n); ++s) {
      if (!f.is_accepting(s)) {
        out.push_back("(i) state " + std::to_string(s + 1)
                      + " is not accepting");
      }
    }
    if (f.start() == kNoState || !d.label(f.start()).empty()) {
      out.emplace_back("(iii) start state is not labelled by the empty word");
    }
    for (State s = 0; s < static_cast<State>(n); ++s) {
      for (std::size_t l = 0; l < f.label_count(); ++l) {
        State t = f.target(s, l);
        if (t == kNoState) {
          continue;
        }
        auto [g, h] = f.label_pair(l);
        Word word;
        if (g != kPad) {
          word.push_back(alpha.inverse(g));
        }
        word.insert(word.end(), d.label(s).begin(), d.label(s).end());
        if (h != kPad) {
          word.push_back(h);
        }
        if (r.rewrite(word) != r.rewrite(d.label(t))) {
          out.push_back("(iv) transition " + std::to_string(s + 1) + " -("
                        + (g == kPad ? "_" : alpha.name(g)) + ","
                        + (h == kPad ? "_" : alpha.name(h)) + ")-> "
                        + std::to_string(t + 1)
                        + " does not match the labels");
        }
      }
    }
    if (f.start() != kNoState) {
      for (Symbol g = 0; g < alpha.size(); ++g) {
        if (f.target(f.start(), f.pair_label(g, g)) != f.start()) {
          out.push_back("(v) start state lacks the loop on (" + alpha.name(g)
                        + "," + alpha.name(g) + ")");
        }
      }
    }
    WordMap<State> seen;
    for (State s = 0; s < static_cast<State>(n); ++s) {
      auto [it, fresh] = seen.emplace(d.label(s), s);
      if (!fresh) {
        out.push_back("states " + std::to_string(it->second + 1) + " and "
                      + std::to_string(s + 1) + " share a label");
      }
    }
    return out;
  }

  std::vector<std::string> check_closure(DiffMachine const&   d,
                                         RewriteSystem const& r) {
    std::vector<std::string> out;
    auto const&              f     = d.fsa();
    auto const&              alpha = r.order().alphabet();
    auto const               n     = f.num_states();
    auto name = [&](State s) { return std::to_string(s + 1); };
    for (State s = 0; s < static_cast<State>(n); ++s) {
      State is = d.inverse_state(s);
      if (is == kNoState) {
        out.push_back("state " + name(s) + " has no inverse state");
      }
      Word const& l = d.label(s);
      if (!l.empty()) {
        auto p = d.find(Word(l.begin(), l.end() - 1));
        auto q = d.find(Word(l.begin() + 1, l.end()));
        if (!p || f.target(*p, f.pair_label(kPad, l.back())) != s) {
          out.push_back("state " + name(s) + " lacks its prefix transition");
        }
        if (!q
            || f.target(*q, f.pair_label(alpha.inverse(l.front()), kPad))
                   != s) {
          out.push_back("state " + name(s) + " lacks its suffix transition");
        }
      }
      if (r.rewrite(l) != l) {
        out.push_back("state " + name(s) + " label is not reduced");
      }
      for (std::size_t lab = 0; lab < f.label_count(); ++lab) {
        State t = f.target(s, lab);
        if (t == kNoState) {
          continue;
        }
        auto [g, h] = f.label_pair(lab);
        Symbol gi   = g == kPad ? kPad : alpha.inverse(g);
        Symbol hi   = h == kPad ? kPad : alpha.inverse(h);
        if (f.target(t, f.pair_label(gi, hi)) != s) {
          out.push_back("transition " + name(s) + " -> " + name(t)
                        + " has no reverse");
        }
        State it = d.inverse_state(t);
        if (is != kNoState && it != kNoState
            && f.target(is, f.pair_label(h, g)) != it) {
          out.push_back("transition " + name(s) + " -> " + name(t)
                        + " has no swapped inverse");
        }
      }
    }
    return out;
  }

}  // namespace autgrp
