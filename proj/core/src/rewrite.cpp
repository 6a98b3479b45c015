#include "autgrp/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "autgrp/error.hpp"

namespace autgrp {

  namespace {

    std::uint64_t symbol_mask(Word const& w) {
      std::uint64_t m = 0;
      for (Symbol s : w) {
        m |= std::uint64_t{1} << (s % 64);
      }
      return m;
    }

    bool contains_factor(Word const& hay, Word const& needle) {
      return std::search(hay.begin(), hay.end(), needle.begin(), needle.end())
             != hay.end();
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Trie
  ////////////////////////////////////////////////////////////////////////

  void RewriteSystem::Trie::reset(std::size_t alphabet_size) {
    alpha = alphabet_size;
    children.assign(alpha, -1);
    terminal.assign(1, -1);
    below.assign(1, {});
  }

  std::int32_t RewriteSystem::Trie::ensure_child(std::int32_t node, Symbol s) {
    auto idx = static_cast<std::size_t>(node) * alpha + s;
    if (children[idx] < 0) {
      auto fresh = static_cast<std::int32_t>(terminal.size());
      children[idx] = fresh;
      children.resize(children.size() + alpha, -1);
      terminal.push_back(-1);
      below.emplace_back();
    }
    return children[idx];
  }

  ////////////////////////////////////////////////////////////////////////
  // RewriteSystem
  ////////////////////////////////////////////////////////////////////////

  RewriteSystem::RewriteSystem(Order order) : order_(std::move(order)) {
    forward_.reset(order_.alphabet().size());
    backward_.reset(order_.alphabet().size());
  }

  std::vector<Rule> RewriteSystem::rules() const {
    std::vector<Rule> out;
    out.reserve(live_);
    for (auto const& s : slots_) {
      if (s) {
        out.push_back(*s);
      }
    }
    return out;
  }

  std::optional<std::size_t> RewriteSystem::add_oriented(Word const& a,
                                                         Word const& b) {
    auto r = order_.compare(a, b);
    if (r == 0) {
      return std::nullopt;
    }
    Rule rule = r > 0 ? Rule{a, b} : Rule{b, a};
    if (rule.lhs.empty()) {
      throw LogicError("rule with empty left side");
    }
    slots_.emplace_back(std::move(rule));
    ++live_;
    auto id = slots_.size() - 1;
    index_rule(id);
    confluent_    = false;
    interreduced_ = false;
    return id;
  }

  void RewriteSystem::index_rule(std::size_t id) {
    auto const& lhs = slots_[id]->lhs;
    auto        uid = static_cast<std::uint32_t>(id);
    std::int32_t node = 0;
    for (Symbol s : lhs) {
      node = forward_.ensure_child(node, s);
      forward_.below[node].push_back(uid);
    }
    if (forward_.terminal[node] < 0 || !alive(forward_.terminal[node])) {
      forward_.terminal[node] = static_cast<std::int32_t>(id);
    }
    node = 0;
    for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
      node = backward_.ensure_child(node, *it);
      backward_.below[node].push_back(uid);
    }
    if (backward_.terminal[node] < 0 || !alive(backward_.terminal[node])) {
      backward_.terminal[node] = static_cast<std::int32_t>(id);
    }
  }

  void RewriteSystem::rebuild_index() {
    forward_.reset(order_.alphabet().size());
    backward_.reset(order_.alphabet().size());
    for (std::size_t id = 0; id < slots_.size(); ++id) {
      if (slots_[id]) {
        index_rule(id);
      }
    }
    dead_ = 0;
  }

  void RewriteSystem::remove(std::size_t id) {
    if (!alive(id)) {
      return;
    }
    slots_[id].reset();
    --live_;
    ++dead_;
    confluent_ = false;
    if (dead_ > 1024 && dead_ > live_) {
      rebuild_index();
    }
  }

  void RewriteSystem::set_rhs(std::size_t id, Word rhs) {
    if (!alive(id)) {
      throw LogicError("set_rhs on a removed rule");
    }
    slots_[id]->rhs = std::move(rhs);
  }

  Word RewriteSystem::rewrite(Word const& w) const {
    auto n = order_.alphabet().size();
    for (Symbol s : w) {
      if (s >= n) {
        throw InputError("symbol out of range");
      }
    }
    Word out;
    out.reserve(w.size());
    Word input(w.rbegin(), w.rend());
    while (!input.empty()) {
      out.push_back(input.back());
      input.pop_back();
      std::int32_t node = 0;
      for (std::size_t i = out.size(); i-- > 0;) {
        node = backward_.child(node, out[i]);
        if (node < 0) {
          break;
        }
        auto t = backward_.terminal[node];
        if (t >= 0 && slots_[t]) {
          auto const& rule = *slots_[t];
          out.resize(out.size() - rule.lhs.size());
          input.insert(input.end(), rule.rhs.rbegin(), rule.rhs.rend());
          break;
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> RewriteSystem::rules_matching_factor(
      Word const& w) const {
    std::vector<std::size_t> out;
    for (std::size_t start = 0; start < w.size(); ++start) {
      std::int32_t node = 0;
      for (std::size_t i = start; i < w.size(); ++i) {
        if (w[i] >= forward_.alpha) {
          throw InputError("symbol out of range");
        }
        node = forward_.child(node, w[i]);
        if (node < 0) {
          break;
        }
        auto t = forward_.terminal[node];
        if (t >= 0 && slots_[t]) {
          out.push_back(static_cast<std::size_t>(t));
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<RewriteSystem::CriticalPair> RewriteSystem::critical_pairs_with(
      std::size_t id) const {
    std::vector<CriticalPair> out;
    if (!alive(id)) {
      return out;
    }
    Rule const& ri = *slots_[id];
    Word const& L  = ri.lhs;

    // lhs_i = a b, lhs_j = b c
    for (std::size_t p = 1; p < L.size(); ++p) {
      std::int32_t node = 0;
      for (std::size_t i = p; i < L.size() && node >= 0; ++i) {
        node = forward_.child(node, L[i]);
      }
      if (node < 0) {
        continue;
      }
      auto blen = L.size() - p;
      for (auto j : forward_.below[node]) {
        if (!slots_[j] || slots_[j]->lhs.size() <= blen) {
          continue;
        }
        Rule const& rj = *slots_[j];
        Word        c(rj.lhs.begin() + blen, rj.lhs.end());
        Word        a(L.begin(), L.begin() + p);
        out.push_back({concat(ri.rhs, c),
                       concat(a, rj.rhs),
                       p + rj.lhs.size(),
                       id,
                       j});
      }
    }
    // lhs_j = a b, lhs_i = b c
    for (std::size_t k = 1; k < L.size(); ++k) {
      std::int32_t node = 0;
      for (std::size_t i = k; i-- > 0 && node >= 0;) {
        node = backward_.child(node, L[i]);
      }
      if (node < 0) {
        continue;
      }
      for (auto j : backward_.below[node]) {
        if (!slots_[j] || slots_[j]->lhs.size() <= k) {
          continue;
        }
        Rule const& rj = *slots_[j];
        Word        a(rj.lhs.begin(), rj.lhs.end() - k);
        Word        c(L.begin() + k, L.end());
        out.push_back({concat(rj.rhs, c),
                       concat(a, ri.rhs),
                       rj.lhs.size() + L.size() - k,
                       j,
                       id});
      }
    }
    // lhs_j a factor of lhs_i
    for (std::size_t start = 0; start < L.size(); ++start) {
      std::int32_t node = 0;
      for (std::size_t i = start; i < L.size(); ++i) {
        node = forward_.child(node, L[i]);
        if (node < 0) {
          break;
        }
        auto t = forward_.terminal[node];
        if (t < 0 || !slots_[t] || static_cast<std::size_t>(t) == id) {
          continue;
        }
        Rule const& rj = *slots_[t];
        Word a(L.begin(), L.begin() + start);
        Word c(L.begin() + i + 1, L.end());
        out.push_back({ri.rhs,
                       concat(concat(a, rj.rhs), c),
                       L.size(),
                       id,
                       static_cast<std::size_t>(t)});
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  RewriteSystem init_system(Presentation const& p, Order const& order) {
    if (!(p.alphabet == order.alphabet())) {
      throw InputError("presentation and order use different alphabets");
    }
    RewriteSystem r(order);
    auto const&   a = p.alphabet;
    for (Symbol g = 0; g < a.size(); ++g) {
      r.add_oriented(Word{g, a.inverse(g)}, Word{});
    }
    for (auto const& rel : p.relations) {
      r.add_oriented(rel.lhs, rel.rhs);
    }
    return r;
  }

  std::vector<std::pair<Word, Word>> critical_pairs(RewriteSystem const& r) {
    // critical_pairs_with reports an overlap from both rules' sides
    std::vector<std::pair<Word, Word>> out;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t, Word>> seen;
    for (std::size_t id = 0; id < r.id_bound(); ++id) {
      for (auto& cp : r.critical_pairs_with(id)) {
        if (seen.emplace(cp.rule_i, cp.rule_j, cp.overlap_length, cp.first).second) {
          out.emplace_back(std::move(cp.first), std::move(cp.second));
        }
      }
    }
    return out;
  }

  bool is_confluent(RewriteSystem const& r) {
    for (std::size_t id = 0; id < r.id_bound(); ++id) {
      for (auto const& cp : r.critical_pairs_with(id)) {
        if (r.rewrite(cp.first) != r.rewrite(cp.second)) {
          return false;
        }
      }
    }
    return true;
  }

  void interreduce(RewriteSystem& r) {
    std::deque<std::pair<Word, Word>> pending;
    bool                              changed = true;
    while (changed) {
      changed = false;
      for (std::size_t id = 0; id < r.id_bound(); ++id) {
        if (!r.alive(id)) {
          continue;
        }
        auto hits = r.rules_matching_factor(r.rule(id).lhs);
        bool other = std::any_of(
            hits.begin(), hits.end(), [id](std::size_t j) { return j != id; });
        if (other) {
          pending.emplace_back(r.rule(id).lhs, r.rule(id).rhs);
          r.remove(id);
          changed = true;
        }
      }
      while (!pending.empty()) {
        auto [a, b] = std::move(pending.front());
        pending.pop_front();
        auto ra = r.rewrite(a);
        auto rb = r.rewrite(b);
        if (ra != rb) {
          r.add_oriented(ra, rb);
          changed = true;
        }
      }
    }
    for (std::size_t id = 0; id < r.id_bound(); ++id) {
      if (r.alive(id)) {
        r.set_rhs(id, r.rewrite(r.rule(id).rhs));
      }
    }
    r.set_interreduced(true);
  }

  ////////////////////////////////////////////////////////////////////////
  // KnuthBendix
  ////////////////////////////////////////////////////////////////////////

  KnuthBendix::KnuthBendix(RewriteSystem system, KbLimits limits)
      : system_(std::move(system)), limits_(limits) {
    if (limits_.max_rules == 0 || limits_.max_length == 0
        || limits_.max_passes == 0) {
      throw InputError("completion limits must be positive");
    }
    interreduce(system_);
  }

  void KnuthBendix::add_equation(Word const& a, Word const& b) {
    pending_.emplace_back(a, b);
    settle();
  }

  void KnuthBendix::settle() {
    std::deque<std::pair<Word, Word>> queue(pending_.begin(), pending_.end());
    pending_.clear();
    while (!queue.empty()) {
      auto [a, b] = std::move(queue.front());
      queue.pop_front();
      auto ra = system_.rewrite(a);
      auto rb = system_.rewrite(b);
      if (ra == rb) {
        continue;
      }
      if (std::max(ra.size(), rb.size()) > limits_.max_length) {
        ++discarded_;
        pass_discarded_ = true;
        continue;
      }
      auto id = *system_.add_oriented(ra, rb);
      Word const lhs  = system_.rule(id).lhs;
      auto const mask = symbol_mask(lhs);
      // rules whose lhs now reduces are replaced by their equation
      for (std::size_t j = 0; j < system_.id_bound(); ++j) {
        if (j == id || !system_.alive(j)) {
          continue;
        }
        auto const& rj = system_.rule(j);
        if (rj.lhs.size() < lhs.size()
            || (symbol_mask(rj.lhs) & mask) != mask) {
          continue;
        }
        if (contains_factor(rj.lhs, lhs)) {
          queue.emplace_back(rj.lhs, rj.rhs);
          system_.remove(j);
        }
      }
      if (system_.size() > limits_.max_rules) {
        over_limit_ = true;
        return;
      }
    }
  }

  KbStatus KnuthBendix::run_pass() {
    if (status_ != KbStatus::running) {
      return status_;
    }
    ++passes_;
    pass_discarded_ = false;
    auto const bound = system_.id_bound();
    std::vector<RewriteSystem::CriticalPair> pairs;
    for (std::size_t id = checked_; id < bound; ++id) {
      auto cps = system_.critical_pairs_with(id);
      pairs.insert(pairs.end(),
                   std::make_move_iterator(cps.begin()),
                   std::make_move_iterator(cps.end()));
    }
    checked_ = bound;
    std::stable_sort(pairs.begin(),
                     pairs.end(),
                     [](auto const& x, auto const& y) {
                       return x.overlap_length < y.overlap_length;
                     });
    for (auto const& cp : pairs) {
      if (!system_.alive(cp.rule_i) || !system_.alive(cp.rule_j)) {
        continue;
      }
      add_equation(cp.first, cp.second);
      if (over_limit_) {
        break;
      }
    }
    for (std::size_t id = 0; id < system_.id_bound(); ++id) {
      if (system_.alive(id)) {
        system_.set_rhs(id, system_.rewrite(system_.rule(id).rhs));
      }
    }
    system_.set_interreduced(true);

    bool grew = system_.id_bound() != bound;
    if (over_limit_) {
      status_    = KbStatus::stopped;
      exhausted_ = true;
    } else if (!grew) {
      status_ = discarded_ == 0 ? KbStatus::confluent : KbStatus::stopped;
    } else if (passes_ >= limits_.max_passes) {
      status_    = KbStatus::stopped;
      exhausted_ = true;
    }
    system_.set_confluent(status_ == KbStatus::confluent);
    return status_;
  }

  KbStatus KnuthBendix::run() {
    while (status_ == KbStatus::running) {
      run_pass();
    }
    return status_;
  }

  KbResult kb_complete(RewriteSystem r, KbLimits const& limits) {
    KnuthBendix kb(std::move(r), limits);
    auto        status = kb.run();
    return {status, kb.system()};
  }

}  // namespace autgrp
