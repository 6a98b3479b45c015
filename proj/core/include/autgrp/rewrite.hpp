#ifndef AUTGRP_REWRITE_HPP_
#define AUTGRP_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "autgrp/order.hpp"
#include "autgrp/presentation.hpp"

namespace autgrp {

  // lhs -> rhs with rhs < lhs under the system's order.
  struct Rule {
    Word lhs;
    Word rhs;

    bool operator==(Rule const&) const = default;
  };

  // Rule storage with a suffix index for rewriting and prefix/suffix
  // indexes for overlap search. Removed rules leave a hole; ids are stable.
  class RewriteSystem {
   public:
    RewriteSystem() = default;
    explicit RewriteSystem(Order order);

    Order const& order() const noexcept {
      return order_;
    }

    // Live rules in id order.
    std::vector<Rule> rules() const;
    std::size_t size() const noexcept {
      return live_;
    }

    bool confluent() const noexcept {
      return confluent_;
    }

    bool interreduced() const noexcept {
      return interreduced_;
    }

    void set_confluent(bool c) noexcept {
      confluent_ = c;
    }

    void set_interreduced(bool c) noexcept {
      interreduced_ = c;
    }

    // Orient the equation a = b and store it; returns the id, or nothing
    // when a == b. No reduction is performed.
    std::optional<std::size_t> add_oriented(Word const& a, Word const& b);

    void remove(std::size_t id);

    bool alive(std::size_t id) const {
      return id < slots_.size() && slots_[id].has_value();
    }

    Rule const& rule(std::size_t id) const {
      return *slots_.at(id);
    }

    void set_rhs(std::size_t id, Word rhs);

    std::size_t id_bound() const noexcept {
      return slots_.size();
    }

    // Normal form under the rules: repeatedly replace the leftmost-ending
    // occurrence of a lhs.
    Word rewrite(Word const& w) const;

    // Ids of live rules whose lhs occurs in w.
    std::vector<std::size_t> rules_matching_factor(Word const& w) const;

    // Each overlap (lhs_i = a b, lhs_j = b c, b non-empty) and each
    // containment (lhs_j a factor of lhs_i), as the pair of one-step results.
    struct CriticalPair {
      Word        first;
      Word        second;
      std::size_t overlap_length;  // length of the overlapping word
      std::size_t rule_i;
      std::size_t rule_j;
    };

    // Critical pairs between rule i and every live rule (both roles).
    std::vector<CriticalPair> critical_pairs_with(std::size_t id) const;

   private:
    struct Trie {
      // children[node * alpha + s], -1 when absent
      std::vector<std::int32_t>              children;
      std::vector<std::int32_t>              terminal;  // rule id or -1
      std::vector<std::vector<std::uint32_t>> below;    // rule ids in subtree
      std::size_t                            alpha = 0;

      void reset(std::size_t alphabet_size);
      std::int32_t child(std::int32_t node, Symbol s) const {
        return children[static_cast<std::size_t>(node) * alpha + s];
      }
      std::int32_t ensure_child(std::int32_t node, Symbol s);
    };

    void index_rule(std::size_t id);
    void rebuild_index();

    Order                            order_;
    std::vector<std::optional<Rule>> slots_;
    std::size_t                      live_ = 0;
    std::size_t                      dead_ = 0;
    Trie                             forward_;  // lhs read left to right
    Trie                             backward_; // lhs read right to left
    bool                             confluent_    = false;
    bool                             interreduced_ = false;
  };

  struct KbLimits {
    std::size_t max_rules  = 20000;
    std::size_t max_length = 40;  // longest lhs or rhs kept
    std::size_t max_passes = 100;
  };

  // Step 1 initial system: g g^-1 -> e for every symbol and each relation
  // oriented by the order; relations that are trivial after orientation
  // are dropped.
  RewriteSystem init_system(Presentation const& p, Order const& order);

  // All critical pairs of the live rules.
  std::vector<std::pair<Word, Word>> critical_pairs(RewriteSystem const& r);

  // True iff every critical pair rewrites to a common word.
  bool is_confluent(RewriteSystem const& r);

  // Interreduce: drop rules whose lhs contains another lhs (re-adding the
  // reduced equation), and normalize every rhs.
  void interreduce(RewriteSystem& r);

  enum class KbStatus : std::uint8_t { running, confluent, stopped };

  // Completion in passes. Each pass resolves the critical pairs between the
  // rules added since the previous pass and all rules, shortest overlap
  // first, adding and interreducing as it goes.
  class KnuthBendix {
   public:
    KnuthBendix(RewriteSystem system, KbLimits limits);

    // One pass; returns the status after it.
    KbStatus run_pass();

    // Passes until confluent or a limit is hit.
    KbStatus run();

    KbStatus status() const noexcept {
      return status_;
    }

    RewriteSystem const& system() const noexcept {
      return system_;
    }

    std::size_t passes() const noexcept {
      return passes_;
    }

    // Equations dropped for exceeding max_length since the start.
    std::size_t discarded() const noexcept {
      return discarded_;
    }

    // Stopped by the rule or pass limit rather than by running out of
    // admissible overlaps.
    bool exhausted() const noexcept {
      return exhausted_;
    }

   private:
    void add_equation(Word const& a, Word const& b);
    void settle();

    RewriteSystem                    system_;
    KbLimits                         limits_;
    KbStatus                         status_  = KbStatus::running;
    std::size_t                      passes_  = 0;
    std::size_t                      checked_ = 0;  // ids below are done
    std::size_t                      discarded_     = 0;
    bool                             pass_discarded_ = false;
    bool                             over_limit_     = false;
    bool                             exhausted_      = false;
    std::vector<std::pair<Word, Word>> pending_;
  };

  struct KbResult {
    KbStatus      status;
    RewriteSystem system;
  };

  KbResult kb_complete(RewriteSystem r, KbLimits const& limits);

}  // namespace autgrp

#endif  // AUTGRP_REWRITE_HPP_
