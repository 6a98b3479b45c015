#include "autgrp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <unordered_map>

#include "autgrp/error.hpp"

namespace autgrp {

  namespace {

    using Clock = std::chrono::steady_clock;

    double since(Clock::time_point t0) {
      return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    // Product of W on both tracks with D, accepting pairs of W-words whose
    // trace ends at `target`. A track's W component becomes -1 once it has
    // been padded, which requires an accept state there.
    Fsa multiplier_product(Fsa const& W, DiffMachine const& d, State target) {
      auto const  n = W.base_size();
      auto const& f = d.fsa();
      Fsa         out(n, 2);
      if (target == kNoState || W.start() == kNoState) {
        out.add_state(false);
        out.set_start(0);
        return out;
      }
      struct Key {
        State w1, w2, s;
        bool  operator==(Key const&) const = default;
      };
      struct KeyHash {
        std::size_t operator()(Key const& k) const noexcept {
          auto h = static_cast<std::size_t>(static_cast<std::uint32_t>(k.w1));
          h      = h * 0x9e3779b97f4a7c15ull + static_cast<std::uint32_t>(k.w2);
          return h * 0x9e3779b97f4a7c15ull + static_cast<std::uint32_t>(k.s);
        }
      };
      std::unordered_map<Key, State, KeyHash> index;
      std::vector<Key>                        keys;
      auto accept_side = [&](State w) { return w == kNoState || W.is_accepting(w); };
      auto add = [&](Key k) {
        if (auto it = index.find(k); it != index.end()) {
          return it->second;
        }
        State id = out.add_state(k.s == target && accept_side(k.w1)
                                 && accept_side(k.w2));
        index.emplace(k, id);
        keys.push_back(k);
        return id;
      };
      out.set_start(add({W.start(), W.start(), d.start()}));
      for (std::size_t cur = 0; cur < keys.size(); ++cur) {
        Key const k = keys[cur];
        for (std::size_t ai = 0; ai <= n; ++ai) {
          Symbol a = ai == n ? kPad : static_cast<Symbol>(ai);
          State  w1;
          if (a == kPad) {
            if (!accept_side(k.w1)) {
              continue;
            }
            w1 = kNoState;
          } else {
            if (k.w1 == kNoState) {
              continue;
            }
            w1 = W.target(k.w1, a);
            if (w1 == kNoState) {
              continue;
            }
          }
          for (std::size_t bi = 0; bi <= n; ++bi) {
            Symbol b = bi == n ? kPad : static_cast<Symbol>(bi);
            if (a == kPad && b == kPad) {
              continue;
            }
            State w2;
            if (b == kPad) {
              if (!accept_side(k.w2)) {
                continue;
              }
              w2 = kNoState;
            } else {
              if (k.w2 == kNoState) {
                continue;
              }
              w2 = W.target(k.w2, b);
              if (w2 == kNoState) {
                continue;
              }
            }
            auto  label = f.pair_label(a, b);
            State s     = f.target(k.s, label);
            if (s == kNoState) {
              continue;
            }
            State to = add({w1, w2, s});
            out.set_transition(static_cast<State>(cur), label, to);
          }
        }
      }
      // Remember the D component so callers can count used differences.
      std::vector<Word> ann;
      ann.reserve(keys.size());
      for (auto const& k : keys) {
        ann.push_back(Word{static_cast<Symbol>(k.s)});
      }
      out.set_state_labels(std::move(ann));
      return out;
    }

    State multiplier_target(DiffMachine const& d, Symbol g) {
      State s = d.target(d.start(), kPad, g);
      if (s != kNoState) {
        return s;
      }
      return d.find(Word{g}).value_or(kNoState);
    }

    Fsa restricted_diagonal(Fsa const& W) {
      auto const n = W.base_size();
      Fsa        out(n, 2);
      for (std::size_t s = 0; s < W.num_states(); ++s) {
        out.add_state(W.is_accepting(static_cast<State>(s)));
      }
      if (W.num_states() == 0) {
        out.add_state(false);
        out.set_start(0);
        return out;
      }
      out.set_start(W.start());
      for (std::size_t s = 0; s < W.num_states(); ++s) {
        for (std::size_t a = 0; a < n; ++a) {
          State t = W.target(static_cast<State>(s), a);
          if (t != kNoState) {
            out.set_transition(static_cast<State>(s),
                               out.pair_label(static_cast<Symbol>(a),
                                              static_cast<Symbol>(a)),
                               t);
          }
        }
      }
      return minimize(out);
    }

    // Shortlex-least accepted word of a one-track machine.
    std::optional<Word> shortest_word(Fsa const& a) {
      if (a.start() == kNoState) {
        return std::nullopt;
      }
      std::vector<State>  parent(a.num_states(), kNoState);
      std::vector<Symbol> via(a.num_states(), 0);
      std::vector<bool>   seen(a.num_states(), false);
      std::deque<State>   queue{a.start()};
      seen[a.start()] = true;
      while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        if (a.is_accepting(s)) {
          Word w;
          for (State t = s; t != a.start(); t = parent[t]) {
            w.push_back(via[t]);
          }
          return Word(w.rbegin(), w.rend());
        }
        for (std::size_t g = 0; g < a.base_size(); ++g) {
          State t = a.target(s, g);
          if (t != kNoState && !seen[t]) {
            seen[t]   = true;
            parent[t] = s;
            via[t]    = static_cast<Symbol>(g);
            queue.push_back(t);
          }
        }
      }
      return std::nullopt;
    }

    // Two-track machine of all pairs (v, w), w arbitrary.
    Fsa first_track_is(std::size_t n, Word const& v) {
      Fsa  out(n, 2);
      auto len = v.size();
      // state 2*i: i symbols of v read, w still running; 2*i+1: w padded
      for (std::size_t i = 0; i <= len; ++i) {
        out.add_state(i == len);
        out.add_state(i == len);
      }
      out.set_start(0);
      for (std::size_t i = 0; i <= len; ++i) {
        auto run   = static_cast<State>(2 * i);
        auto ended = static_cast<State>(2 * i + 1);
        if (i < len) {
          for (std::size_t b = 0; b < n; ++b) {
            out.set_transition(run,
                               out.pair_label(v[i], static_cast<Symbol>(b)),
                               run + 2);
          }
          out.set_transition(run, out.pair_label(v[i], kPad), ended + 2);
          out.set_transition(ended, out.pair_label(v[i], kPad), ended + 2);
        } else {
          for (std::size_t b = 0; b < n; ++b) {
            out.set_transition(run,
                               out.pair_label(kPad, static_cast<Symbol>(b)),
                               run);
          }
        }
      }
      return out;
    }

    // Reductions of x(i)^-1 y(i) and y(i)^-1 x(i) over every rule.
    std::set<Word> difference_set(RewriteSystem const& r) {
      auto const&    alpha = r.order().alphabet();
      std::set<Word> out;
      for (auto const& rule : r.rules()) {
        auto const m = std::max(rule.lhs.size(), rule.rhs.size());
        for (std::size_t i = 0; i <= m; ++i) {
          Word x = prefix(rule.lhs, i);
          Word y = prefix(rule.rhs, i);
          out.insert(r.rewrite(concat(invert_word(alpha, x), y)));
          out.insert(r.rewrite(concat(invert_word(alpha, y), x)));
        }
      }
      return out;
    }

    std::vector<Word> check_words(Presentation const& p) {
      auto words = p.relators();
      for (std::size_t s = 0; s < p.alphabet.size(); ++s) {
        auto g = static_cast<Symbol>(s);
        words.push_back(Word{g, p.alphabet.inverse(g)});
      }
      return words;
    }

    // Step 3 under the lazy policy: W accepts two distinct words that D
    // proves equal.
    bool acceptor_stale(Fsa const& W, DiffMachine const& d) {
      auto eq     = minimize(multiplier_product(W, d, d.start()));
      auto others = intersect(eq, complement(Fsa::diagonal(W.base_size())));
      return trim(others).num_states() > 1
             || others.is_accepting(others.start());
    }

  }  // namespace

  std::string_view to_string(Outcome o) {
    switch (o) {
      case Outcome::verified:
        return "Verified";
      case Outcome::kb_stopped:
        return "KbStopped";
      case Outcome::loop_limit:
        return "LoopLimit";
      case Outcome::axiom_fail:
        return "AxiomFail";
    }
    return "?";
  }

  Fsa build_multiplier(Fsa const&            W,
                       DiffMachine const&    d,
                       std::optional<Symbol> g) {
    if (!g) {
      return restricted_diagonal(W);
    }
    auto m = multiplier_product(W, d, multiplier_target(d, *g));
    m.set_state_labels({});
    return minimize(m);
  }

  std::size_t count_used_differences(Fsa const& W, DiffMachine const& d) {
    std::vector<bool> used(d.num_states(), false);
    for (std::size_t g = 0; g < W.base_size(); ++g) {
      auto m = trim(multiplier_product(W, d, multiplier_target(d, static_cast<Symbol>(g))));
      // trim keeps a dead start; a language-empty product uses nothing
      if (m.num_states() == 1 && !m.is_accepting(m.start())
          && m.num_transitions() == 0) {
        continue;
      }
      for (auto const& l : m.state_labels()) {
        used[l.front()] = true;
      }
    }
    return static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
  }

  std::vector<DomainCheck> missing_domains(Fsa const&              W,
                                           std::vector<Fsa> const& multipliers) {
    std::vector<DomainCheck> out;
    for (std::size_t g = 0; g < multipliers.size(); ++g) {
      auto dom = project(multipliers[g], Side::first);
      auto eq  = equal_languages(W, dom);
      if (!eq.equal) {
        out.push_back({false, static_cast<Symbol>(g), eq.first});
      }
    }
    return out;
  }

  DomainCheck check_domains(Fsa const& W, std::vector<Fsa> const& multipliers) {
    auto all = missing_domains(W, multipliers);
    if (all.empty()) {
      return {};
    }
    auto best = all.front();
    for (auto const& c : all) {
      if (shortlex_compare(c.v, best.v) < 0) {
        best = c;
      }
    }
    return best;
  }

  Fsa compose_along(Word const& r, Fsa const& Me, std::vector<Fsa> const& m) {
    Fsa acc = Me;
    for (Symbol s : r) {
      acc = minimize(compose2(acc, m.at(s)));
    }
    return acc;
  }

  AxiomCheck axiom_check(Presentation const&     p,
                         Fsa const&              Me,
                         std::vector<Fsa> const& multipliers) {
    for (auto const& r : check_words(p)) {
      auto mr = compose_along(r, Me, multipliers);
      auto eq = equal_languages(mr, Me);
      if (!eq.equal) {
        return {false, r, eq.first, eq.second};
      }
    }
    return {};
  }

  std::optional<Word> image(Fsa const& m, Word const& v) {
    auto restricted = intersect(m, first_track_is(m.base_size(), v));
    return shortest_word(minimize(project(restricted, Side::second)));
  }

  Word normal_form(AutomaticStructure const& s, Word const& w) {
    return d_reduce(s.D, s.order, w);
  }

  PipelineResult run_pipeline(Presentation const&   p,
                              Order const&          order,
                              PipelineConfig const& cfg) {
    auto const      t_all = Clock::now();
    PipelineResult  result;
    PipelineReport& rep   = result.report;
    auto const&     alpha = p.alphabet;
    auto const      n     = alpha.size();
    rep.order             = std::string(to_string(order.kind()));

    auto finish = [&](Outcome o) {
      rep.outcome = o;
      rep.seconds = since(t_all);
      return result;
    };

    // Step 1: completion, or a stable difference set.
    auto        t0 = Clock::now();
    KnuthBendix kb(init_system(p, order), cfg.kb);
    std::set<Word> prev;
    std::size_t    stable     = 0;
    bool           stabilized = false;
    while (kb.status() == KbStatus::running) {
      kb.run_pass();
      if (kb.status() == KbStatus::confluent) {
        break;
      }
      auto diffs = difference_set(kb.system());
      stable     = diffs == prev ? stable + 1 : 0;
      prev       = std::move(diffs);
      if (stable >= cfg.stabilization_window) {
        stabilized = true;
        break;
      }
    }
    rep.confluent = kb.status() == KbStatus::confluent;
    rep.kb_passes = kb.passes();
    rep.rules     = kb.system().size();
    rep.kb_status = rep.confluent ? "confluent"
                    : stabilized  ? "stabilized"
                                  : "stopped";
    rep.steps.push_back({"kb", since(t0), rep.rules, rep.kb_status});
    if (!rep.confluent && !stabilized && kb.exhausted()) {
      rep.witness = "rewriting system did not stabilize within limits";
      return finish(Outcome::kb_stopped);
    }
    RewriteSystem rules = kb.system();

    // Step 2
    t0             = Clock::now();
    DiffMachine D  = close(build_from_rules(rules), rules, cfg.close);
    rep.steps.push_back({"differences", since(t0), D.num_states(), ""});

    Fsa  W;
    bool need_w = true;
    while (true) {
      // Step 3
      if (need_w || !cfg.always_rebuild) {
        t0 = Clock::now();
        if (need_w || acceptor_stale(W, D)) {
          AcceptorBuild b;
          try {
            b = build_acceptor_full(D, order, make_hspec(order, D), cfg.acceptor);
          } catch (LimitError const& e) {
            rep.witness = e.what();
            break;
          }
          W = std::move(b.minimal);
          rep.steps.push_back({"acceptor", since(t0), W.num_states(),
                               "raw=" + std::to_string(b.raw.num_states())
                                   + " histories="
                                   + std::to_string(b.histories) + " entries="
                                   + std::to_string(b.entries)});
        }
        need_w = false;
      }

      // Step 4
      t0 = Clock::now();
      std::vector<Fsa> mult;
      mult.reserve(n);
      for (std::size_t g = 0; g < n; ++g) {
        mult.push_back(build_multiplier(W, D, static_cast<Symbol>(g)));
      }
      Fsa Me = build_multiplier(W, D, std::nullopt);
      {
        std::size_t total = 0;
        for (auto const& m : mult) {
          total += m.num_states();
        }
        rep.steps.push_back({"multipliers", since(t0), total, ""});
      }

      auto add_and_check = [&](std::vector<Equation> const& eqs) {
        rep.equations += eqs.size();
        auto next      = add_equations(D, eqs, rules, cfg.close);
        bool changed   = !(next.fsa() == D.fsa());
        D              = std::move(next);
        need_w         = changed && cfg.always_rebuild;
        return changed;
      };
      auto bump_loop = [&] {
        ++rep.loops;
        return rep.loops < cfg.max_loops;
      };

      // Step 5
      t0           = Clock::now();
      auto missing = missing_domains(W, mult);
      rep.steps.push_back({"domains", since(t0), missing.size(), ""});
      if (!missing.empty()) {
        if (!cfg.batch) {
          missing.resize(1);
        }
        std::vector<Equation> eqs;
        for (auto const& m : missing) {
          Word vg = concat(m.v, m.g);
          Word w  = d_reduce(D, order, vg);
          eqs.push_back({vg, w, {}});
          eqs.push_back({m.v, w, rules.rewrite(Word{m.g})});
          rep.witness = "domain of " + alpha.name(m.g) + " misses "
                        + alpha.format(m.v);
        }
        if (!add_and_check(eqs)) {
          rep.witness += " (no new differences)";
          break;
        }
        if (!bump_loop()) {
          break;
        }
        continue;
      }

      // Step 6
      if (rep.confluent) {
        rep.step6_skipped = true;
      } else {
        t0        = Clock::now();
        auto chk  = axiom_check(p, Me, mult);
        rep.steps.push_back({"axioms", since(t0), 0, chk.ok ? "" : "fail"});
        if (!chk.ok) {
          rep.witness = "relator " + alpha.format(chk.relator) + " at ("
                        + alpha.format(chk.v) + ", " + alpha.format(chk.w)
                        + ")";
          Word v = chk.v;
          Word w = chk.w;
          if (v == w) {
            auto other = image(compose_along(chk.relator, Me, mult), v);
            if (!other || *other == v) {
              return finish(Outcome::axiom_fail);
            }
            w = *other;
          }
          if (order.less(v, w)) {
            std::swap(v, w);
          }
          if (!add_and_check({{v, w, {}}}) || !bump_loop()) {
            return finish(Outcome::axiom_fail);
          }
          continue;
        }
      }

      rep.diff_states     = D.num_states();
      rep.diff_l_states   = count_used_differences(W, D);
      rep.acceptor_states = W.num_states();
      rep.identity_states = Me.num_states();
      for (auto const& m : mult) {
        rep.multiplier_states.push_back(m.num_states());
      }
      result.structure = AutomaticStructure{p,
                                            order,
                                            std::move(rules),
                                            std::move(D),
                                            std::move(W),
                                            std::move(Me),
                                            std::move(mult),
                                            true};
      return finish(Outcome::verified);
    }
    rep.diff_states     = D.num_states();
    rep.acceptor_states = W.num_states();
    return finish(Outcome::loop_limit);
  }

}  // namespace autgrp
