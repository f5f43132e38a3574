// Copyright 2026 The kpf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <iomanip>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "CLI11.hpp"

#include "kpf/cli.hpp"
#include "kpf/decide.hpp"
#include "kpf/decomp.hpp"
#include "kpf/json_io.hpp"
#include "kpf/oracle.hpp"
#include "kpf/testset.hpp"
#include "kpf/text.hpp"

namespace kpf::cli {

  namespace {

    struct Globals {
      bool     json    = false;
      bool     quiet   = false;
      bool     tokens  = false;
      unsigned threads = 1;

      SymbolMode mode() const {
        return tokens ? SymbolMode::tokens : SymbolMode::chars;
      }
    };

    std::string show(Word const& w, SymbolMode mode) {
      return w.empty() ? "ε" : w.str(mode);
    }

    std::string show_power(PowerWitness const& p, SymbolMode mode) {
      std::ostringstream os;
      os << '(' << p.root.str(mode) << ")^" << p.exponent << " at position " << p.start;
      return os.str();
    }

    AlphabetPtr alphabet_of(std::string_view word, SymbolMode mode) {
      std::vector<std::string>        order;
      std::unordered_set<std::string> seen;
      for (auto& sym : text::split_symbols(word, mode)) {
        if (seen.insert(sym).second) {
          order.push_back(std::move(sym));
        }
      }
      return std::make_shared<Alphabet const>(std::move(order));
    }

    // Prints rows with every column padded to its widest cell.
    void print_table(std::ostream& out, std::vector<std::vector<std::string>> const& rows) {
      std::vector<std::size_t> width;
      for (auto const& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
          // ε is two bytes but one column
          std::size_t len = row[c] == "ε" ? 1 : row[c].size();
          width[c]        = std::max(width[c], len);
        }
      }
      for (auto const& row : rows) {
        out << "  ";
        for (std::size_t c = 0; c < row.size(); ++c) {
          std::size_t len = row[c] == "ε" ? 1 : row[c].size();
          out << row[c];
          if (c + 1 < row.size()) {
            out << std::string(width[c] - len + 2, ' ');
          }
        }
        out << '\n';
      }
    }

    void print_decomposition(std::ostream& out, Decomposition const& d, SymbolMode mode) {
      std::vector<std::vector<std::string>> rows{{"i", "a_i", "w_i", "p_i", "s_i"}};
      for (std::size_t i = 0; i <= d.k; ++i) {
        rows.push_back({std::to_string(i),
                        d.w.alphabet()->symbol(d.a[i]),
                        i == 0 ? "-" : show(d.block(i), mode),
                        show(d.p[i], mode),
                        show(d.s[i], mode)});
      }
      print_table(out, rows);
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int cmd_decide(Globals const&     g,
                   std::string const& file,
                   unsigned           k,
                   std::string const& mode_name,
                   bool               show_image,
                   std::ostream&      out) {
      auto f    = load_morphism(file, g.mode());
      auto mode = mode_name.empty() ? std::optional(default_mode(k)) : parse_mode(mode_name);
      if (!mode) {
        fail(Errc::syntax, "unknown mode '" + mode_name + "'");
      }
      auto verdict = decide(f, k, *mode, g.threads);
      if (g.json) {
        auto j = verdict_to_json(verdict, g.mode());
        if (show_image && verdict.witness) {
          j["image"] = apply(f, verdict.witness->test_word).str(g.mode());
        }
        out << j.dump() << '\n';
      } else if (!g.quiet) {
        out << "morphism is " << (verdict.k_power_free ? "" : "not ") << k
            << "-power-free\n";
        out << "mode: " << to_string(verdict.mode) << '\n';
        out << "words checked: " << verdict.words_checked << '\n';
        if (verdict.witness) {
          out << "witness word: " << show(verdict.witness->test_word, g.mode()) << '\n';
          if (show_image) {
            out << "image: " << show(apply(f, verdict.witness->test_word), g.mode()) << '\n';
          }
          out << "power: " << show_power(verdict.witness->image_power, g.mode()) << '\n';
        }
      }
      return verdict.k_power_free ? positive : negative;
    }

    int cmd_check(Globals const&     g,
                  unsigned           k,
                  std::string        word_text,
                  std::string const& morphism_file,
                  bool               show_image,
                  std::ostream&      out,
                  std::istream&      in) {
      if (word_text.empty()) {
        word_text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        word_text = std::string(text::trim(word_text));
      }
      std::optional<Morphism> f;
      Word                    word;
      if (!morphism_file.empty()) {
        f    = load_morphism(morphism_file, g.mode());
        word = Word::parse(f->domain(), word_text, g.mode());
      } else {
        word = Word::parse(alphabet_of(word_text, g.mode()), word_text, g.mode());
      }
      Word scanned = f ? apply(*f, word) : word;
      auto power   = find_k_power(scanned, k);
      if (g.json) {
        json j{{"word", word.str(g.mode())}, {"k", k}, {"k_power_free", !power}};
        if (f) {
          j["image"] = scanned.str(g.mode());
        }
        j["power"] = power ? json{{"root", power->root.str(g.mode())},
                                  {"exponent", power->exponent},
                                  {"start", power->start}}
                           : json(nullptr);
        out << j.dump() << '\n';
      } else if (!g.quiet) {
        if (f && show_image) {
          out << "image: " << show(scanned, g.mode()) << '\n';
        }
        std::string what = f ? "image of " + show(word, g.mode()) : show(word, g.mode());
        if (power) {
          out << what << " contains " << show_power(*power, g.mode()) << '\n';
        } else {
          out << what << " is " << k << "-power-free\n";
        }
      }
      return power ? negative : positive;
    }

    int cmd_testset(Globals const&     g,
                    unsigned           k,
                    std::string const& alphabet_text,
                    std::string const& kind,
                    std::size_t        max_len,
                    bool               count,
                    std::ostream&      out) {
      auto alphabet = std::make_shared<Alphabet const>(
          text::split_symbols(alphabet_text, g.mode()));
      if (alphabet->size() == 0) {
        fail(Errc::syntax, "--alphabet must name at least one symbol");
      }
      std::optional<PowerFreeWords> gen;
      if (kind == "t") {
        gen.emplace(testset_words(alphabet, k));
      } else if (kind == "u") {
        gen.emplace(u_words(alphabet, k));
      } else if (kind == "kpf") {
        gen.emplace(alphabet, k, max_len ? max_len : testset_bound(alphabet->size(), k));
      } else {
        fail(Errc::syntax, "unknown --kind '" + kind + "' (expected t, u or kpf)");
      }
      std::map<std::size_t, std::size_t> per_length;
      std::size_t                         total = 0;
      json                                words = json::array();
      while (gen->next()) {
        ++per_length[gen->current().size()];
        ++total;
        if (count) {
          continue;
        }
        if (g.json) {
          words.push_back(gen->word().str(g.mode()));
        } else if (!g.quiet) {
          out << gen->word().str(g.mode()) << '\n';
        }
      }
      if (g.json) {
        if (count) {
          json counts = json::object();
          for (auto [len, n] : per_length) {
            counts[std::to_string(len)] = n;
          }
          out << json{{"counts", counts}, {"total", total}}.dump() << '\n';
        } else {
          out << words.dump() << '\n';
        }
      } else if (count && !g.quiet) {
        for (auto [len, n] : per_length) {
          out << len << ' ' << n << '\n';
        }
        out << "total " << total << '\n';
      }
      return positive;
    }

    int cmd_decompose(Globals const&     g,
                      unsigned           k,
                      std::string const& file,
                      std::string const& word_text,
                      std::ostream&      out) {
      auto f      = load_morphism(file, g.mode());
      auto w      = Word::parse(f.domain(), word_text, g.mode());
      auto covers = find_direct_covers(f, w, k);
      json covers_json = json::array();
      if (!g.json && !g.quiet) {
        out << "f(" << show(w, g.mode()) << ") = " << show(apply(f, w), g.mode()) << '\n';
        if (covers.empty()) {
          out << "no directly covered " << k << "-power\n";
        }
      }
      for (std::size_t c = 0; c < covers.size(); ++c) {
        auto const& cover = covers[c];
        json        entry{{"cover", cover_to_json(cover, g.mode())}};
        if (!g.json && !g.quiet) {
          out << "cover " << c + 1 << ": p0=" << show(cover.p0, g.mode())
              << " u=" << show(cover.u, g.mode()) << " sk=" << show(cover.sk, g.mode()) << '\n';
        }
        if (w.size() <= k) {
          entry["decomposition"] = nullptr;
          if (!g.json && !g.quiet) {
            out << "  word too short to decompose\n";
          }
        } else {
          auto d                  = decompose(f, cover);
          entry["decomposition"]  = decomposition_to_json(d, g.mode());
          entry["synchronized"]   = is_synchronized(d);
          if (!g.json && !g.quiet) {
            print_decomposition(out, d, g.mode());
            out << "  synchronized: " << (is_synchronized(d) ? "yes" : "no") << '\n';
          }
        }
        covers_json.push_back(std::move(entry));
      }
      if (g.json) {
        out << json{{"word", w.str(g.mode())},
                    {"image", apply(f, w).str(g.mode())},
                    {"covers", covers_json}}
                   .dump()
            << '\n';
      }
      return positive;
    }

    int cmd_reduce(Globals const&     g,
                   unsigned           k,
                   std::string const& file,
                   std::string const& word_text,
                   std::ostream&      out) {
      auto f      = load_morphism(file, g.mode());
      auto w      = Word::parse(f.domain(), word_text, g.mode());
      auto covers = find_direct_covers(f, w, k);
      json traces = json::array();
      if (covers.empty() && !g.json && !g.quiet) {
        out << "no directly covered " << k << "-power\n";
      }
      for (std::size_t c = 0; c < covers.size(); ++c) {
        auto const& cover = covers[c];
        if (w.size() <= k) {
          fail(Errc::word_too_short,
               "a covered " + std::to_string(k) + "-power needs a word of length at least "
                   + std::to_string(k + 1));
        }
        auto trace = reduce_fully(f, cover);
        traces.push_back(json{{"cover", cover_to_json(cover, g.mode())},
                              {"trace", trace_to_json(trace, g.mode())}});
        if (g.json || g.quiet) {
          continue;
        }
        out << "cover " << c + 1 << ": (" << show(cover.u, g.mode()) << ")^" << k << " in f("
            << show(w, g.mode()) << ")\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
          auto const& st = trace.steps[i];
          out << "step " << i + 1 << ": block " << st.ell << ", letter "
              << w.alphabet()->symbol(st.letter) << '\n';
          std::vector<std::vector<std::string>> rows{{"i", "x_i", "y_i", "z_i"}};
          for (std::size_t q = 0; q < st.cuts.size(); ++q) {
            rows.push_back({std::to_string(q + 1),
                            show(st.cuts[q].x, g.mode()),
                            show(st.cuts[q].y, g.mode()),
                            show(st.cuts[q].z, g.mode())});
          }
          print_table(out, rows);
          out << "  -> (" << show(st.after.u, g.mode()) << ")^" << k << " in f("
              << show(st.after.w, g.mode()) << ")\n";
        }
        out << "final word: " << show(trace.final.w, g.mode()) << " ("
            << trace.steps.size() << " step" << (trace.steps.size() == 1 ? "" : "s") << ")\n";
        print_decomposition(out, trace.final, g.mode());
      }
      if (g.json) {
        out << json{{"word", w.str(g.mode())}, {"traces", traces}}.dump() << '\n';
      }
      return positive;
    }

    int cmd_oracle(Globals const&     g,
                   unsigned           k,
                   std::size_t        max_len,
                   std::string const& file,
                   std::ostream&      out) {
      auto f = load_morphism(file, g.mode());
      if (max_len == 0) {
        max_len = testset_bound(f.domain()->size(), k);
      }
      auto report = brute_force_search(f, k, max_len);
      if (g.json) {
        out << search_to_json(report, g.mode()).dump() << '\n';
      } else if (!g.quiet) {
        out << "words scanned: " << report.words_scanned << " (max length " << max_len
            << ")\n";
        if (report.counterexample) {
          out << "counterexample: " << show(report.counterexample->test_word, g.mode())
              << '\n'
              << "power: " << show_power(report.counterexample->image_power, g.mode())
              << '\n';
        } else {
          out << "no counterexample\n";
        }
      }
      return report.counterexample ? negative : positive;
    }

    int cmd_sweep(Globals const& g, unsigned k, SweepFamily const& family, std::ostream& out) {
      auto report = agreement_sweep(family, k, g.threads);
      if (g.json) {
        json dis = json::array();
        for (auto const& d : report.disagreements) {
          dis.push_back(json{{"morphism", morphism_to_json(d.f, g.mode())},
                             {"verdict", verdict_to_json(d.verdict, g.mode())},
                             {"search", search_to_json(d.search, g.mode())}});
        }
        out << json{{"morphisms", report.morphisms},
                    {"k_power_free", report.k_power_free},
                    {"disagreements", dis}}
                   .dump()
            << '\n';
      } else if (!g.quiet) {
        out << "morphisms: " << report.morphisms << '\n'
            << k << "-power-free: " << report.k_power_free << '\n'
            << "disagreements: " << report.disagreements.size() << '\n';
        for (auto const& d : report.disagreements) {
          out << "--\n" << serialize_morphism(d.f, g.mode());
          out << "decide: " << (d.verdict.k_power_free ? "free" : "not free")
              << ", search: " << (d.search.counterexample ? "counterexample" : "none") << '\n';
        }
      }
      return report.disagreements.empty() ? positive : negative;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err,
          std::istream&                   in) {
    CLI::App app{"Decide k-power-freeness of uniform morphisms", "kpf"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_flag("--quiet", g.quiet, "Only set the exit code");
    app.add_flag("--tokens", g.tokens, "Whitespace-separated multi-character symbols");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

    unsigned    k = 0;
    std::string file, word, mode, morphism, alphabet, kind = "t";
    std::size_t max_len    = 0;
    bool        show_image = false, count = false;
    SweepFamily family;
    bool        exhaustive = false;

    auto* decide_cmd = app.add_subcommand("decide", "Decide k-power-freeness of a uniform morphism");
    decide_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(2u, 1000u));
    decide_cmd->add_option("--mode", mode, "testset | corollary | classic");
    decide_cmd->add_flag("--show-image", show_image, "Print the image of the witness word");
    decide_cmd->add_option("file", file, "Morphism file (.txt or .json)")->required();

    auto* check_cmd = app.add_subcommand("check", "Scan a word (or its image) for a k-power");
    check_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(2u, 1000u));
    check_cmd->add_option("--word", word, "Word to scan (default: standard input)");
    check_cmd->add_option("--morphism", morphism, "Scan the image under this morphism");
    check_cmd->add_flag("--show-image", show_image, "Print the scanned image");

    auto* testset_cmd = app.add_subcommand("testset", "Stream test words");
    testset_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(2u, 1000u));
    testset_cmd->add_option("--alphabet", alphabet, "Alphabet symbols")->required();
    testset_cmd->add_option("--kind", kind, "t (test-set), u, or kpf");
    testset_cmd->add_option("--max-len", max_len, "Longest word for --kind kpf");
    testset_cmd->add_flag("--count", count, "Only print the number of words per length");

    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose the k-powers covered by f(w)");
    decompose_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(3u, 1000u));
    decompose_cmd->add_option("file", file, "Morphism file")->required();
    decompose_cmd->add_option("word", word, "Word w")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce the k-powers covered by f(w)");
    reduce_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(3u, 1000u));
    reduce_cmd->add_option("file", file, "Morphism file")->required();
    reduce_cmd->add_option("word", word, "Word w")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive counterexample search");
    oracle_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(2u, 1000u));
    oracle_cmd->add_option("--max-len", max_len, "Longest word (default: test-set bound)");
    oracle_cmd->add_option("file", file, "Morphism file")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Compare decide with the exhaustive search");
    sweep_cmd->add_option("--k", k, "Exponent")->required()->check(CLI::Range(2u, 1000u));
    sweep_cmd->add_option("--domain", family.domain_size, "Domain size")->required();
    sweep_cmd->add_option("--image", family.image_size, "Image alphabet size")->required();
    sweep_cmd->add_option("--uniform-len", family.length, "Uniform length L")->required();
    auto* ex = sweep_cmd->add_flag("--exhaustive", exhaustive, "Every morphism of the family");
    auto* samples = sweep_cmd->add_option("--samples", family.samples, "Number of seeded samples");
    sweep_cmd->add_option("--seed", family.seed, "First seed");
    ex->excludes(samples);

    std::vector<char const*> argv{"kpf"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::Success const&) {
      auto const* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
      out << sub->help();
      return positive;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }

    try {
      if (*decide_cmd) {
        return cmd_decide(g, file, k, mode, show_image, out);
      }
      if (*check_cmd) {
        return cmd_check(g, k, word, morphism, show_image, out, in);
      }
      if (*testset_cmd) {
        return cmd_testset(g, k, alphabet, kind, max_len, count, out);
      }
      if (*decompose_cmd) {
        return cmd_decompose(g, k, file, word, out);
      }
      if (*reduce_cmd) {
        return cmd_reduce(g, k, file, word, out);
      }
      if (*oracle_cmd) {
        return cmd_oracle(g, k, max_len, file, out);
      }
      if (*sweep_cmd) {
        if (!exhaustive && family.samples == 0) {
          fail(Errc::syntax, "sweep needs --exhaustive or --samples <n>");
        }
        family.exhaustive = exhaustive;
        return cmd_sweep(g, k, family, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
    return usage;
  }

}  // namespace kpf::cli
