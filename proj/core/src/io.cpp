#include "autgrp/io.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "autgrp/error.hpp"

namespace autgrp {

  namespace {

    struct Line {
      std::size_t              number = 0;
      std::vector<std::string> tokens;
      std::string              rest;  // text after the first token
    };

    std::vector<Line> split_lines(std::string_view text) {
      std::vector<Line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        std::string raw(text.substr(pos, end - pos));
        pos = end + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        std::istringstream in(raw);
        Line               line;
        line.number = number;
        std::string tok;
        while (in >> tok) {
          line.tokens.push_back(tok);
        }
        if (line.tokens.empty()) {
          continue;
        }
        auto first = raw.find(line.tokens[0]);
        line.rest  = raw.substr(first + line.tokens[0].size());
        out.push_back(std::move(line));
      }
      return out;
    }

    std::optional<OrderKind> order_from_name(std::string const& name,
                                             bool&              shortlex) {
      shortlex = false;
      if (name == "shortlex") {
        shortlex = true;
        return OrderKind::wtlex;
      }
      if (name == "wtlex") {
        return OrderKind::wtlex;
      }
      if (name == "wtshortlex") {
        return OrderKind::wtshortlex;
      }
      if (name == "wreathshortlex") {
        return OrderKind::wreath_shortlex;
      }
      return std::nullopt;
    }

    int parse_int(Line const& line, std::string const& tok) {
      try {
        std::size_t used = 0;
        int         v    = std::stoi(tok, &used);
        if (used != tok.size()) {
          throw std::invalid_argument(tok);
        }
        return v;
      } catch (std::exception const&) {
        throw ParseError(line.number, "expected an integer, got '" + tok + "'");
      }
    }

    // Order block shared by presentation and rules files.
    class OrderBlock {
     public:
      // True when the line belonged to the block.
      bool take(Line const& line) {
        auto const& t   = line.tokens;
        auto const& key = t[0];
        if (key == "generators") {
          if (t.size() < 2) {
            throw ParseError(line.number, "generators: no names");
          }
          generators_.insert(generators_.end(), t.begin() + 1, t.end());
          generators_line_ = line.number;
        } else if (key == "inverse") {
          expect(line, 3);
          inverse_.emplace_back(t[1], t[2]);
        } else if (key == "order") {
          expect(line, 2);
          kind_ = order_from_name(t[1], shortlex_);
          if (!kind_) {
            throw ParseError(line.number, "unknown order '" + t[1] + "'");
          }
          order_line_ = line.number;
        } else if (key == "lexorder") {
          lexorder_.assign(t.begin() + 1, t.end());
          lexorder_line_ = line.number;
        } else if (key == "weight") {
          expect(line, 3);
          weight_[t[1]] = {parse_int(line, t[2]), line.number};
        } else if (key == "level") {
          expect(line, 3);
          level_[t[1]] = {parse_int(line, t[2]), line.number};
        } else {
          return false;
        }
        return true;
      }

      Order build(std::size_t last_line) const {
        if (generators_.empty()) {
          throw ParseError(last_line, "missing 'generators' line");
        }
        if (!kind_) {
          throw ParseError(last_line, "missing 'order' line");
        }
        std::map<std::string, std::string> inv;
        for (auto const& [a, b] : inverse_) {
          auto bind = [&](std::string const& x, std::string const& y) {
            if (auto it = inv.find(x); it != inv.end() && it->second != y) {
              throw ParseError(generators_line_,
                               "conflicting inverses for '" + x + "'");
            }
            inv[x] = y;
          };
          bind(a, b);
          bind(b, a);
        }
        std::vector<std::string> natural;
        for (auto const& g : generators_) {
          auto it = inv.find(g);
          if (it == inv.end()) {
            throw ParseError(generators_line_,
                             "no inverse declared for generator '" + g + "'");
          }
          natural.push_back(g);
          if (it->second != g) {
            natural.push_back(it->second);
          }
        }
        for (auto const& [a, b] : inv) {
          if (std::find(natural.begin(), natural.end(), a) == natural.end()) {
            throw ParseError(generators_line_,
                             "inverse pair names '" + a
                                 + "', which is not a generator or inverse");
          }
        }
        std::vector<std::string> names = natural;
        if (!lexorder_.empty()) {
          auto a = lexorder_;
          auto b = natural;
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          if (a != b) {
            throw ParseError(lexorder_line_,
                             "lexorder must list every symbol exactly once");
          }
          names = lexorder_;
        }
        for (auto const& [name, v] : weight_) {
          if (!inv.count(name)) {
            throw ParseError(v.second, "weight for unknown symbol '" + name + "'");
          }
        }
        for (auto const& [name, v] : level_) {
          if (!inv.count(name)) {
            throw ParseError(v.second, "level for unknown symbol '" + name + "'");
          }
          auto other = level_.find(inv.at(name));
          if (other != level_.end() && other->second.first != v.first) {
            throw ParseError(std::max(v.second, other->second.second),
                             "'" + name + "' and its inverse have different levels");
          }
        }
        bool const weighted = *kind_ != OrderKind::wreath_shortlex && !shortlex_;
        std::vector<SymbolInfo> info;
        for (auto const& name : names) {
          SymbolInfo s;
          s.name    = name;
          s.inverse = inv.at(name);
          if (weighted) {
            auto w = weight_.find(name);
            if (w == weight_.end()) {
              w = weight_.find(s.inverse);
            }
            if (w == weight_.end()) {
              throw ParseError(order_line_,
                               "order " + std::string(to_string(*kind_))
                                   + " needs a weight for '" + name + "'");
            }
            s.weight = w->second.first;
          } else if (!weight_.empty()) {
            throw ParseError(weight_.begin()->second.second,
                             "weights need order wtlex or wtshortlex");
          }
          if (*kind_ == OrderKind::wreath_shortlex) {
            auto l = level_.find(name);
            if (l == level_.end()) {
              l = level_.find(s.inverse);
            }
            s.level = l == level_.end() ? 1 : l->second.first;
          } else if (!level_.empty()) {
            throw ParseError(level_.begin()->second.second,
                             "levels need order wreathshortlex");
          }
          info.push_back(std::move(s));
        }
        try {
          return Order(Alphabet(std::move(info)), *kind_);
        } catch (ParseError const&) {
          throw;
        } catch (InputError const& e) {
          throw ParseError(generators_line_, e.what());
        }
      }

     private:
      static void expect(Line const& line, std::size_t n) {
        if (line.tokens.size() != n) {
          throw ParseError(line.number,
                           "'" + line.tokens[0] + "' takes "
                               + std::to_string(n - 1) + " argument(s)");
        }
      }

      std::vector<std::string>                        generators_;
      std::vector<std::pair<std::string, std::string>> inverse_;
      std::optional<OrderKind>                         kind_;
      bool                                             shortlex_ = false;
      std::vector<std::string>                         lexorder_;
      std::map<std::string, std::pair<int, std::size_t>> weight_;
      std::map<std::string, std::pair<int, std::size_t>> level_;
      std::size_t generators_line_ = 1;
      std::size_t order_line_      = 1;
      std::size_t lexorder_line_   = 1;
    };

    Word parse_word_at(Alphabet const& a, std::string const& text, std::size_t line) {
      try {
        return a.parse_word(text);
      } catch (InputError const& e) {
        throw ParseError(line, e.what());
      }
    }

    // Split `lhs <sep> rhs`.
    std::pair<std::string, std::string> split_at(Line const&        line,
                                                 std::string const& sep) {
      auto pos = line.rest.find(sep);
      if (pos == std::string::npos) {
        throw ParseError(line.number, "expected '" + sep + "'");
      }
      auto lhs = line.rest.substr(0, pos);
      auto rhs = line.rest.substr(pos + sep.size());
      if (rhs.find(sep) != std::string::npos) {
        throw ParseError(line.number, "more than one '" + sep + "'");
      }
      auto blank = [](std::string const& s) {
        return s.find_first_not_of(" \t\r") == std::string::npos;
      };
      if (blank(lhs) || blank(rhs)) {
        throw ParseError(line.number, "empty side (write 'e' for the empty word)");
      }
      return {lhs, rhs};
    }

    void write_order_block(std::ostringstream& out, Order const& order) {
      auto const& a = order.alphabet();
      std::vector<bool> is_gen(a.size(), false);
      std::vector<bool> taken(a.size(), false);
      out << "generators";
      for (std::size_t s = 0; s < a.size(); ++s) {
        if (!taken[s]) {
          is_gen[s]               = true;
          taken[s]                = true;
          taken[a.inverse(static_cast<Symbol>(s))] = true;
          out << ' ' << a.name(static_cast<Symbol>(s));
        }
      }
      out << '\n';
      for (std::size_t s = 0; s < a.size(); ++s) {
        if (is_gen[s]) {
          auto g = static_cast<Symbol>(s);
          out << "inverse " << a.name(g) << ' ' << a.name(a.inverse(g)) << '\n';
        }
      }
      bool unit = true;
      for (std::size_t s = 0; s < a.size(); ++s) {
        unit = unit && a.weight(static_cast<Symbol>(s)) == 1;
      }
      bool const shortlex = order.kind() == OrderKind::wtlex && unit;
      out << "order "
          << (shortlex                                     ? "shortlex"
              : order.kind() == OrderKind::wtlex           ? "wtlex"
              : order.kind() == OrderKind::wtshortlex      ? "wtshortlex"
                                                           : "wreathshortlex")
          << '\n';
      out << "lexorder";
      for (std::size_t s = 0; s < a.size(); ++s) {
        out << ' ' << a.name(static_cast<Symbol>(s));
      }
      out << '\n';
      if (order.is_weighted() && !shortlex) {
        for (std::size_t s = 0; s < a.size(); ++s) {
          auto g = static_cast<Symbol>(s);
          out << "weight " << a.name(g) << ' ' << a.weight(g) << '\n';
        }
      }
      if (order.kind() == OrderKind::wreath_shortlex) {
        for (std::size_t s = 0; s < a.size(); ++s) {
          if (is_gen[s]) {
            auto g = static_cast<Symbol>(s);
            out << "level " << a.name(g) << ' ' << a.level(g) << '\n';
          }
        }
      }
    }

    std::string pair_token(std::vector<std::string> const& names,
                           std::pair<Symbol, Symbol>       p) {
      auto one = [&](Symbol s) { return s == kPad ? std::string("_") : names.at(s); };
      return one(p.first) + "," + one(p.second);
    }

    std::string format_names(std::vector<std::string> const& names, Word const& w) {
      if (w.empty()) {
        return "e";
      }
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i ? " " : "") + names.at(w[i]);
      }
      return out;
    }

  }  // namespace

  PresentationFile parse_presentation(std::string_view text) {
    auto        lines = split_lines(text);
    OrderBlock  block;
    bool        version = false;
    std::vector<Line const*> relations;
    std::size_t last = 1;
    for (auto const& line : lines) {
      last = line.number;
      if (line.tokens[0] == "version") {
        if (line.tokens.size() != 2 || line.tokens[1] != "1") {
          throw ParseError(line.number, "unsupported version");
        }
        version = true;
      } else if (line.tokens[0] == "relation") {
        relations.push_back(&line);
      } else if (!block.take(line)) {
        throw ParseError(line.number, "unknown keyword '" + line.tokens[0] + "'");
      }
    }
    if (!version) {
      throw ParseError(1, "missing 'version 1' line");
    }
    PresentationFile out{{}, block.build(last)};
    out.presentation.alphabet = out.order.alphabet();
    for (auto const* line : relations) {
      auto [l, r] = split_at(*line, "=");
      out.presentation.relations.push_back(
          {parse_word_at(out.order.alphabet(), l, line->number),
           parse_word_at(out.order.alphabet(), r, line->number)});
    }
    return out;
  }

  std::string serialize_presentation(Presentation const& p, Order const& order) {
    std::ostringstream out;
    out << "version 1\n";
    write_order_block(out, order);
    for (auto const& r : p.relations) {
      out << "relation " << p.alphabet.format(r.lhs) << " = "
          << p.alphabet.format(r.rhs) << '\n';
    }
    return out.str();
  }

  RewriteSystem parse_rules(std::string_view text) {
    auto       lines = split_lines(text);
    OrderBlock block;
    bool       header = false;
    std::vector<Line const*> rules;
    std::size_t last = 1;
    for (auto const& line : lines) {
      last = line.number;
      if (line.tokens[0] == "rws") {
        if (line.tokens.size() != 3 || line.tokens[1] != "version"
            || line.tokens[2] != "1") {
          throw ParseError(line.number, "expected 'rws version 1'");
        }
        header = true;
      } else if (line.tokens[0] == "rule") {
        rules.push_back(&line);
      } else if (!block.take(line)) {
        throw ParseError(line.number, "unknown keyword '" + line.tokens[0] + "'");
      }
    }
    if (!header) {
      throw ParseError(1, "missing 'rws version 1' line");
    }
    RewriteSystem out(block.build(last));
    auto const&   alpha = out.order().alphabet();
    for (auto const* line : rules) {
      auto [l, r] = split_at(*line, "->");
      Word lhs    = parse_word_at(alpha, l, line->number);
      Word rhs    = parse_word_at(alpha, r, line->number);
      if (!out.order().less(rhs, lhs)) {
        throw ParseError(line->number, "rule does not decrease under the order");
      }
      out.add_oriented(lhs, rhs);
    }
    return out;
  }

  std::string serialize_rules(RewriteSystem const& r) {
    std::ostringstream out;
    out << "rws version 1\n";
    write_order_block(out, r.order());
    auto rules = r.rules();
    std::sort(rules.begin(), rules.end(), [&](Rule const& a, Rule const& b) {
      auto c = shortlex_compare(a.lhs, b.lhs);
      return c != 0 ? c < 0 : shortlex_compare(a.rhs, b.rhs) < 0;
    });
    auto const& alpha = r.order().alphabet();
    for (auto const& rule : rules) {
      out << "rule " << alpha.format(rule.lhs) << " -> " << alpha.format(rule.rhs)
          << '\n';
    }
    return out.str();
  }

  std::vector<std::string> symbol_names(Alphabet const& alphabet) {
    std::vector<std::string> out;
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
      out.push_back(alphabet.name(static_cast<Symbol>(s)));
    }
    return out;
  }

  Word parse_symbols(std::vector<std::string> const& names, std::string_view text) {
    std::vector<SymbolInfo> info;
    for (auto const& n : names) {
      info.push_back({n, n, 1, 1});
    }
    return Alphabet(std::move(info)).parse_word(text);
  }

  std::string serialize_fsa(Fsa const& a, std::vector<std::string> const& names) {
    if (names.size() != a.base_size()) {
      throw InputError("alphabet size does not match the machine");
    }
    auto const         n = a.num_states();
    std::vector<State> order;
    std::vector<State> remap(n, kNoState);
    auto visit = [&](State s) {
      remap[s] = static_cast<State>(order.size());
      order.push_back(s);
    };
    if (a.start() != kNoState) {
      visit(a.start());
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t l = 0; l < a.label_count(); ++l) {
          State t = a.target(order[i], l);
          if (t != kNoState && remap[t] == kNoState) {
            visit(t);
          }
        }
      }
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (remap[s] == kNoState) {
        visit(static_cast<State>(s));
      }
    }

    std::ostringstream out;
    out << "fsa version 1\n";
    out << "type " << (a.tracks() == 2 ? "pair" : "word") << '\n';
    out << "alphabet";
    for (auto const& nm : names) {
      out << ' ' << nm;
    }
    out << '\n';
    out << "pad _\n";
    out << "states " << n << '\n';
    out << "start " << (a.start() == kNoState ? 0 : 1) << '\n';
    out << "accept";
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (a.is_accepting(order[i])) {
        out << ' ' << i + 1;
      }
    }
    out << '\n';
    if (!a.state_labels().empty()) {
      for (std::size_t i = 0; i < order.size(); ++i) {
        out << "label " << i + 1 << ' '
            << format_names(names, a.state_labels()[order[i]]) << '\n';
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t l = 0; l < a.label_count(); ++l) {
        State t = a.target(order[i], l);
        if (t == kNoState) {
          continue;
        }
        out << i + 1 << ' '
            << (a.tracks() == 2 ? pair_token(names, a.label_pair(l))
                                : names.at(l))
            << ' ' << remap[t] + 1 << '\n';
      }
    }
    return out.str();
  }

  std::string serialize_fsa(Fsa const& a, Alphabet const& alphabet) {
    return serialize_fsa(a, symbol_names(alphabet));
  }

  FsaFile parse_fsa(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty() || lines[0].tokens
                             != std::vector<std::string>{"fsa", "version", "1"}) {
      throw ParseError(lines.empty() ? 1 : lines[0].number,
                       "expected 'fsa version 1'");
    }
    FsaFile                 out;
    int                     tracks = 0;
    std::optional<std::size_t> states;
    std::optional<long>        start;
    std::vector<long>          accept;
    std::vector<std::pair<long, std::string>> labels;
    std::vector<Line const*>                  transitions;
    std::string                               pad = "_";
    bool have_alphabet = false;
    auto index_of = [&](Line const& line, std::string const& tok) -> long {
      long v = parse_int(line, tok);
      if (!states || v < 1 || static_cast<std::size_t>(v) > *states) {
        throw ParseError(line.number, "state '" + tok + "' out of range");
      }
      return v - 1;
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& line = lines[i];
      auto const& t    = line.tokens;
      if (t[0] == "type") {
        if (t.size() != 2 || (t[1] != "word" && t[1] != "pair")) {
          throw ParseError(line.number, "type must be 'word' or 'pair'");
        }
        tracks = t[1] == "word" ? 1 : 2;
      } else if (t[0] == "alphabet") {
        out.alphabet.assign(t.begin() + 1, t.end());
        have_alphabet = true;
      } else if (t[0] == "pad") {
        if (t.size() != 2) {
          throw ParseError(line.number, "pad takes one symbol");
        }
        pad = t[1];
      } else if (t[0] == "states") {
        if (t.size() != 2) {
          throw ParseError(line.number, "states takes one count");
        }
        int v = parse_int(line, t[1]);
        if (v < 0) {
          throw ParseError(line.number, "negative state count");
        }
        states = static_cast<std::size_t>(v);
      } else if (t[0] == "start") {
        if (t.size() != 2) {
          throw ParseError(line.number, "start takes one state");
        }
        if (t[1] == "0") {
          start = -1;
        } else {
          start = index_of(line, t[1]);
        }
      } else if (t[0] == "accept") {
        for (std::size_t k = 1; k < t.size(); ++k) {
          accept.push_back(index_of(line, t[k]));
        }
      } else if (t[0] == "label") {
        if (t.size() < 3) {
          throw ParseError(line.number, "label needs a state and a word");
        }
        auto rest = line.rest.substr(line.rest.find(t[1]) + t[1].size());
        labels.emplace_back(index_of(line, t[1]), rest);
      } else if (t.size() == 3) {
        transitions.push_back(&line);
      } else {
        throw ParseError(line.number, "unrecognised line");
      }
    }
    if (tracks == 0 || !have_alphabet || !states || !start) {
      throw ParseError(lines.back().number,
                       "missing one of 'type', 'alphabet', 'states', 'start'");
    }
    auto const n = out.alphabet.size();
    Fsa        f(n, tracks);
    for (std::size_t s = 0; s < *states; ++s) {
      f.add_state(false);
    }
    if (*start >= 0) {
      f.set_start(static_cast<State>(*start));
    }
    for (auto s : accept) {
      f.set_accepting(static_cast<State>(s), true);
    }
    std::map<std::string, Symbol> sym;
    for (std::size_t s = 0; s < n; ++s) {
      if (!sym.emplace(out.alphabet[s], static_cast<Symbol>(s)).second) {
        throw ParseError(lines[0].number, "duplicate alphabet symbol");
      }
    }
    auto symbol = [&](Line const& line, std::string const& tok) -> Symbol {
      if (tok == pad) {
        return kPad;
      }
      auto it = sym.find(tok);
      if (it == sym.end()) {
        throw ParseError(line.number, "unknown symbol '" + tok + "'");
      }
      return it->second;
    };
    for (auto const* line : transitions) {
      auto const& t    = line->tokens;
      auto        from = index_of(*line, t[0]);
      auto        to   = index_of(*line, t[2]);
      std::size_t label;
      if (tracks == 1) {
        Symbol s = symbol(*line, t[1]);
        if (s == kPad) {
          throw ParseError(line->number, "padding symbol in a word machine");
        }
        label = s;
      } else {
        auto comma = t[1].find(',');
        if (comma == std::string::npos) {
          throw ParseError(line->number, "pair label must be 'g,h'");
        }
        Symbol a = symbol(*line, t[1].substr(0, comma));
        Symbol b = symbol(*line, t[1].substr(comma + 1));
        if (a == kPad && b == kPad) {
          throw ParseError(line->number, "label (_,_) is not allowed");
        }
        label = f.pair_label(a, b);
      }
      if (f.target(static_cast<State>(from), label) != kNoState) {
        throw ParseError(line->number, "duplicate transition (machine must be deterministic)");
      }
      f.set_transition(static_cast<State>(from), label, static_cast<State>(to));
    }
    if (!labels.empty()) {
      std::vector<Word> words(*states);
      std::vector<bool> seen(*states, false);
      for (auto const& [s, text] : labels) {
        try {
          words[s] = parse_symbols(out.alphabet, text);
        } catch (InputError const& e) {
          throw ParseError(lines[0].number, e.what());
        }
        seen[s] = true;
      }
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw ParseError(lines.back().number, "labels must cover every state");
      }
      f.set_state_labels(std::move(words));
    }
    out.fsa = std::move(f);
    return out;
  }

  DiffMachine diff_machine_from(Fsa const& a, RewriteSystem const& r) {
    auto const& alpha = r.order().alphabet();
    if (a.tracks() != 2 || a.base_size() != alpha.size()
        || a.state_labels().size() != a.num_states() || a.start() != 0) {
      throw InputError("not a labelled difference machine over this alphabet");
    }
    WordMap<State> by_label;
    for (std::size_t s = 0; s < a.num_states(); ++s) {
      by_label.emplace(a.state_labels()[s], static_cast<State>(s));
    }
    std::vector<State> inv(a.num_states(), kNoState);
    for (std::size_t s = 0; s < a.num_states(); ++s) {
      auto w = r.rewrite(invert_word(alpha, a.state_labels()[s]));
      if (auto it = by_label.find(w); it != by_label.end()) {
        inv[s] = it->second;
      }
    }
    return DiffMachine(a, std::move(inv), r.order());
  }

  std::string format_report(PipelineReport const& rep) {
    std::ostringstream out;
    out << "outcome: " << to_string(rep.outcome) << '\n';
    out << "order: " << rep.order << '\n';
    out << "kb_status: " << rep.kb_status << '\n';
    out << "kb_passes: " << rep.kb_passes << '\n';
    out << "rules: " << rep.rules << '\n';
    out << "loops: " << rep.loops << '\n';
    out << "equations: " << rep.equations << '\n';
    out << "acceptor_states: " << rep.acceptor_states << '\n';
    out << "difference_states: " << rep.diff_states << '\n';
    out << "difference_states_used: " << rep.diff_l_states << '\n';
    out << "identity_multiplier_states: " << rep.identity_states << '\n';
    out << "multiplier_states:";
    for (auto m : rep.multiplier_states) {
      out << ' ' << m;
    }
    out << '\n';
    out << "axiom_check: " << (rep.step6_skipped ? "skipped (confluent)" : "run")
        << '\n';
    if (!rep.witness.empty()) {
      out << "witness: " << rep.witness << '\n';
    }
    out << "seconds: " << rep.seconds << '\n';
    for (auto const& s : rep.steps) {
      out << "step: " << s.name << " seconds=" << s.seconds
          << " size=" << s.states;
      if (!s.note.empty()) {
        out << " note=" << s.note;
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace autgrp
