// Command-line front end: pipeline runs, completion, reduction and
// automaton utilities over the text formats.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "autgrp/error.hpp"
#include "autgrp/families.hpp"
#include "autgrp/io.hpp"
#include "autgrp/pipeline.hpp"

namespace fs = std::filesystem;
using namespace autgrp;

namespace {

  constexpr int kExitReject = 1;
  constexpr int kExitLimits = 2;
  constexpr int kExitInput  = 3;

  std::string slurp(fs::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void spit(fs::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw InputError("cannot write '" + path.string() + "'");
    }
  }

  bool looks_like_rules(std::string const& text) {
    std::istringstream in(text);
    std::string        tok;
    while (in >> tok) {
      if (tok[0] == '#') {
        std::getline(in, tok);
        continue;
      }
      return tok == "rws";
    }
    return false;
  }

  std::string format_word(std::vector<std::string> const& names, Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i ? " " : "") + names.at(w[i]);
    }
    return out;
  }

  // File-name-safe form of a symbol name.
  std::string file_tag(std::string const& name) {
    std::string out;
    for (unsigned char c : name) {
      out += std::isalnum(c) ? static_cast<char>(c) : '_';
    }
    return out;
  }

  struct KbOptions {
    std::size_t max_rules  = KbLimits{}.max_rules;
    std::size_t max_length = KbLimits{}.max_length;
    std::size_t max_passes = KbLimits{}.max_passes;

    void attach(CLI::App* app) {
      app->add_option("--kb-max-rules", max_rules, "rule cap for completion");
      app->add_option("--kb-max-len", max_length, "longest equation side kept");
      app->add_option("--kb-max-passes", max_passes, "completion pass cap");
    }

    KbLimits limits() const {
      return {max_rules, max_length, max_passes};
    }
  };

  int cmd_autostructure(std::string const& file,
                        std::string const& dir,
                        KbOptions const&   kb,
                        std::size_t        max_loops,
                        bool               prune,
                        bool               batch,
                        bool               lazy) {
    auto           pf = parse_presentation(slurp(file));
    PipelineConfig cfg;
    cfg.kb               = kb.limits();
    cfg.max_loops        = max_loops;
    cfg.acceptor.prune   = prune;
    cfg.batch            = batch;
    cfg.always_rebuild   = !lazy;
    auto result          = run_pipeline(pf.presentation, pf.order, cfg);
    auto report          = format_report(result.report);
    fs::create_directories(dir);
    spit(fs::path(dir) / "report.txt", report);
    std::cout << report;
    if (!result.structure) {
      return kExitLimits;
    }
    auto const& s     = *result.structure;
    auto const& alpha = s.presentation.alphabet;
    spit(fs::path(dir) / "W.fsa", serialize_fsa(s.W, alpha));
    spit(fs::path(dir) / "D.fsa", serialize_fsa(s.D.fsa(), alpha));
    spit(fs::path(dir) / "M_e.fsa", serialize_fsa(s.Me, alpha));
    for (std::size_t g = 0; g < alpha.size(); ++g) {
      auto name = "M_" + file_tag(alpha.name(static_cast<Symbol>(g)));
      // names differing only in case collide on some file systems
      name += std::isupper(static_cast<unsigned char>(alpha.name(static_cast<Symbol>(g))[0]))
                  ? "_inv"
                  : "";
      spit(fs::path(dir) / (name + ".fsa"),
           serialize_fsa(s.multipliers[g], alpha));
    }
    spit(fs::path(dir) / "rules.rws", serialize_rules(s.rules));
    return 0;
  }

  int cmd_kbcomplete(std::string const& file, KbOptions const& kb) {
    auto pf  = parse_presentation(slurp(file));
    auto res = kb_complete(init_system(pf.presentation, pf.order), kb.limits());
    std::cout << serialize_rules(res.system);
    std::cerr << (res.status == KbStatus::confluent ? "confluent" : "stopped")
              << ", " << res.system.size() << " rules\n";
    return res.status == KbStatus::confluent ? 0 : kExitLimits;
  }

  int cmd_reduce(std::string const& target, std::string const& word, KbOptions const& kb) {
    if (fs::is_directory(target)) {
      auto rules = parse_rules(slurp(fs::path(target) / "rules.rws"));
      auto dfile = parse_fsa(slurp(fs::path(target) / "D.fsa"));
      auto d     = diff_machine_from(dfile.fsa, rules);
      auto w     = rules.order().alphabet().parse_word(word);
      std::cout << rules.order().alphabet().format(d_reduce(d, rules.order(), w))
                << '\n';
      return 0;
    }
    auto text = slurp(target);
    if (looks_like_rules(text)) {
      auto rules = parse_rules(text);
      auto w     = rules.order().alphabet().parse_word(word);
      std::cout << rules.order().alphabet().format(rules.rewrite(w)) << '\n';
      return 0;
    }
    auto pf  = parse_presentation(text);
    auto res = kb_complete(init_system(pf.presentation, pf.order), kb.limits());
    auto w   = pf.order.alphabet().parse_word(word);
    std::cout << pf.order.alphabet().format(res.system.rewrite(w)) << '\n';
    if (res.status != KbStatus::confluent) {
      std::cerr << "warning: rewriting system is not confluent; the result "
                   "may not be a normal form\n";
    }
    return 0;
  }

  int cmd_accept(std::string const& file, std::string const& word) {
    auto f = parse_fsa(slurp(file));
    if (f.fsa.tracks() != 1) {
      throw InputError("accept needs a word acceptor");
    }
    bool ok = f.fsa.accepts(parse_symbols(f.alphabet, word));
    std::cout << (ok ? "accept" : "reject") << '\n';
    return ok ? 0 : kExitReject;
  }

  int cmd_enumerate(std::string const& file, std::size_t maxlen) {
    auto f = parse_fsa(slurp(file));
    for (auto const& w : enumerate(f.fsa, maxlen)) {
      std::cout << format_word(f.alphabet, w) << '\n';
    }
    return 0;
  }

  int cmd_growth(std::string const& file, std::size_t maxlen) {
    auto f = parse_fsa(slurp(file));
    for (auto const& c : growth(f.fsa, maxlen)) {
      std::cout << c << '\n';
    }
    return 0;
  }

  int cmd_fsaop(std::string const& op, std::vector<std::string> const& files) {
    bool const binary = op == "and" || op == "or" || op == "compose" || op == "equal";
    if (files.size() != (binary ? 2u : 1u)) {
      throw InputError("fsaop " + op + " takes " + (binary ? "two" : "one")
                       + " machine(s)");
    }
    auto a = parse_fsa(slurp(files[0]));
    std::optional<FsaFile> b;
    if (binary) {
      b = parse_fsa(slurp(files[1]));
      if (b->alphabet != a.alphabet) {
        throw InputError("machines have different alphabets");
      }
    }
    Fsa out;
    if (op == "and") {
      out = minimize(intersect(a.fsa, b->fsa));
    } else if (op == "or") {
      out = minimize(unite(a.fsa, b->fsa));
    } else if (op == "not") {
      out = minimize(complement(a.fsa));
    } else if (op == "compose") {
      out = minimize(compose2(a.fsa, b->fsa));
    } else if (op == "min") {
      out = minimize(a.fsa);
    } else if (op == "equal") {
      auto eq = equal_languages(a.fsa, b->fsa);
      if (eq.equal) {
        std::cout << "equal\n";
        return 0;
      }
      std::cout << "different: " << format_word(a.alphabet, eq.first);
      if (a.fsa.tracks() == 2) {
        std::cout << " , " << format_word(a.alphabet, eq.second);
      }
      std::cout << " only in " << (eq.in_first_machine ? "first" : "second") << '\n';
      return kExitReject;
    } else {
      throw InputError("unknown fsaop '" + op + "'");
    }
    std::cout << serialize_fsa(out, a.alphabet);
    return 0;
  }

  int cmd_family(std::string const& name, int p, int q) {
    auto f = family_from_name(name);
    if (!f) {
      std::string known;
      for (auto g : all_families()) {
        known += " " + std::string(family_name(g));
      }
      throw InputError("unknown family '" + name + "'; known:" + known);
    }
    auto fam = builtin_family({*f, p, q});
    std::cout << serialize_presentation(fam.presentation, fam.order);
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automatic structures for finitely presented groups"};
  app.require_subcommand(1);
  int rc = 0;

  KbOptions   kb;
  std::string file, dir, word, op, name;
  std::size_t max_loops = PipelineConfig{}.max_loops;
  std::size_t maxlen    = 8;
  bool        prune = false, batch = false, lazy = false;
  int         p = 1, q = 1;
  std::vector<std::string> files;

  auto* as = app.add_subcommand("autostructure", "run the full pipeline");
  as->add_option("FILE", file, "presentation file")->required();
  as->add_option("-o,--output", dir, "output directory")->required();
  as->add_option("--max-loops", max_loops, "correction loop cap");
  as->add_flag("--prune", prune, "drop dominated weighted histories");
  as->add_flag("--batch", batch, "one correction per failing generator per loop");
  as->add_flag("--lazy-rebuild", lazy,
               "rebuild the acceptor only when it accepts equal words");
  kb.attach(as);

  auto* kc = app.add_subcommand("kbcomplete", "Knuth-Bendix completion");
  kc->add_option("FILE", file, "presentation file")->required();
  kb.attach(kc);

  auto* rd = app.add_subcommand("reduce", "reduce a word");
  rd->add_option("TARGET", file, "output directory, rules file or presentation")
      ->required();
  rd->add_option("WORD", word, "word to reduce")->required();
  kb.attach(rd);

  auto* ac = app.add_subcommand("accept", "test acceptance");
  ac->add_option("FSA", file, "word acceptor")->required();
  ac->add_option("WORD", word, "word")->required();

  auto* en = app.add_subcommand("enumerate", "list accepted words");
  en->add_option("FSA", file, "word acceptor")->required();
  en->add_option("--maxlen", maxlen, "longest word listed");

  auto* gr = app.add_subcommand("growth", "count accepted words by length");
  gr->add_option("FSA", file, "word acceptor")->required();
  gr->add_option("--maxlen", maxlen, "longest length counted");

  auto* fo = app.add_subcommand("fsaop", "automaton operations");
  fo->add_option("OP", op, "and|or|not|compose|equal|min")->required();
  fo->add_option("FSA", files, "one or two machines")->required();

  auto* fa = app.add_subcommand("family", "emit a built-in presentation");
  fa->add_option("NAME", name, "family name")->required();
  fa->add_option("p", p, "first parameter");
  fa->add_option("q", q, "second parameter");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*as) {
      rc = cmd_autostructure(file, dir, kb, max_loops, prune, batch, lazy);
    } else if (*kc) {
      rc = cmd_kbcomplete(file, kb);
    } else if (*rd) {
      rc = cmd_reduce(file, word, kb);
    } else if (*ac) {
      rc = cmd_accept(file, word);
    } else if (*en) {
      rc = cmd_enumerate(file, maxlen);
    } else if (*gr) {
      rc = cmd_growth(file, maxlen);
    } else if (*fo) {
      rc = cmd_fsaop(op, files);
    } else if (*fa) {
      rc = cmd_family(name, p, q);
    }
  } catch (LimitError const& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExitLimits;
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return rc;
}
