// partlab: command-line workbench for easy partition categories and their
// word groups.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "partlab/closure.hpp"
#include "partlab/correspondence.hpp"
#include "partlab/facts.hpp"
#include "partlab/intertwiner.hpp"
#include "partlab/partition.hpp"
#include "partlab/reports.hpp"
#include "partlab/words.hpp"

#ifndef PARTLAB_DEFAULT_FACTS
#define PARTLAB_DEFAULT_FACTS "data/facts.txt"
#endif

namespace {

  using namespace partlab;

  enum Exit : int { ok = 0, failed = 1, inconclusive = 2 };

  struct Settings {
    std::size_t                point_bound  = 8;
    std::size_t                work_bound   = 12;
    std::size_t                length_bound = 8;
    Letter                     alphabet     = 4;
    std::optional<std::size_t> cap;
    unsigned                   workers = 1;
    std::string                format  = "text";
    std::string                out;

    std::size_t cap_or(std::size_t fallback) const {
      return cap.value_or(fallback);
    }
    Json echo() const {
      Json j{{"point_bound", point_bound},
             {"work_bound", work_bound},
             {"length_bound", length_bound},
             {"alphabet", alphabet}};
      if (cap) {
        j["cap"] = *cap;
      }
      return j;
    }
  };

  std::vector<Partition> parse_partitions(std::vector<std::string> const& texts) {
    std::vector<Partition> out;
    for (auto const& t : texts) {
      out.push_back(named_or_literal(t));
    }
    return out;
  }

  std::vector<Z2Word> parse_z2(std::vector<std::string> const& texts) {
    std::vector<Z2Word> out;
    for (auto const& t : texts) {
      out.push_back(Z2Word::parse(t));
    }
    return out;
  }

  Semigroup parse_semigroup(std::string const& s) {
    if (s == "none") {
      return Semigroup::none;
    }
    if (s == "s0") {
      return Semigroup::s0;
    }
    if (s == "s") {
      return Semigroup::s;
    }
    throw std::invalid_argument("semigroup must be none, s0 or s");
  }

  int emit(Settings const& s, std::string const& command, Json report) {
    report["command"] = command;
    report["config"]  = s.echo();
    std::string const text
        = s.format == "json" ? report.dump(2) + "\n" : to_text(report);
    if (s.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(s.out);
      if (!file) {
        throw std::runtime_error("cannot write " + s.out);
      }
      file << text;
    }
    return ok;
  }

  int tri_exit(Tri t) {
    return t == Tri::yes ? ok : t == Tri::no ? failed : inconclusive;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Easy partition categories, word groups and intertwiner checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option defaults");

  Settings s;
  app.add_option("--point-bound,-B", s.point_bound, "max points per partition")
      ->capture_default_str();
  app.add_option("--work-bound,-W", s.work_bound, "max points of a stacked composition")
      ->capture_default_str();
  app.add_option("--length-bound,-L", s.length_bound, "max word length")->capture_default_str();
  app.add_option("--alphabet,-A", s.alphabet, "letters 1..A")->capture_default_str();
  app.add_option("--cap", s.cap, "element cap for closures");
  app.add_option("--workers,-j", s.workers, "worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--format", s.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out,-o", s.out, "write the report to a file");

  int exit_code = ok;

  // closure
  std::vector<std::string> gens;
  bool                     list_members = false;
  auto* closure_cmd = app.add_subcommand("closure", "bounded closure of generators");
  closure_cmd->add_option("--gen,-g", gens, "generator partition")->required();
  closure_cmd->add_flag("--members", list_members, "list member classes");
  closure_cmd->callback([&] {
    auto c    = closure(parse_partitions(gens), s.point_bound, s.work_bound,
                        s.cap_or(5'000'000), s.workers);
    exit_code = emit(s, "closure", closure_report(c, list_members));
    if (exit_code == ok && !c.saturated) {
      exit_code = inconclusive;
    }
  });

  // member
  std::string target;
  auto* member_cmd = app.add_subcommand("member", "membership with a replayable certificate");
  member_cmd->add_option("--gen,-g", gens, "generator partition")->required();
  member_cmd->add_option("--target,-t", target, "partition to look up")->required();
  member_cmd->callback([&] {
    auto c  = closure(parse_partitions(gens), s.point_bound, s.work_bound,
                      s.cap_or(5'000'000), s.workers);
    auto t  = named_or_literal(target);
    auto rp = membership_report(c, t);
    emit(s, "member", rp);
    exit_code = rp.contains("replay_matches") && !rp["replay_matches"].get<bool>()
                    ? failed
                    : tri_exit(contains(c, t).verdict);
  });

  // simplify
  std::string partition_text;
  bool        full = false;
  auto* simplify_cmd = app.add_subcommand("simplify", "single-leg simplification");
  simplify_cmd->add_option("partition", partition_text)->required();
  simplify_cmd->add_flag("--full", full, "iterate to the fixed point");
  simplify_cmd->callback([&] {
    exit_code = emit(s, "simplify", simplify_report(named_or_literal(partition_text), full));
  });

  // word
  auto* word_cmd = app.add_subcommand("word", "word of a partition");
  word_cmd->add_option("partition", partition_text)->required();
  word_cmd->callback(
      [&] { exit_code = emit(s, "word", word_report(named_or_literal(partition_text))); });

  // subgroup
  std::vector<std::string> words, queries;
  std::string              semigroup = "none";
  bool                     free_words = false;
  auto* subgroup_cmd = app.add_subcommand("subgroup", "length-bounded subgroup closure");
  subgroup_cmd->add_option("--word,-w", words, "generator word")->required();
  subgroup_cmd->add_option("--semigroup", semigroup, "none, s0 or s")->capture_default_str();
  subgroup_cmd->add_flag("--free", free_words, "words in x1, x2, ... instead of a1, a2, ...");
  subgroup_cmd->add_option("--query,-q", queries, "word to look up");
  subgroup_cmd->callback([&] {
    Semigroup const sg = parse_semigroup(semigroup);
    bool            all_found = true;
    bool            saturated = false;
    Json            report;
    if (free_words) {
      std::vector<FreeWord> g, q;
      for (auto const& w : words) {
        g.push_back(FreeWord::parse(w));
      }
      for (auto const& w : queries) {
        q.push_back(FreeWord::parse(w));
      }
      auto h = subgroup_closure(g, s.length_bound, sg, s.alphabet, s.cap_or(1'000'000),
                                s.workers);
      for (auto const& w : q) {
        all_found = all_found && h.contains(w);
      }
      saturated = h.saturated;
      report    = subgroup_report(h, q);
    } else {
      auto q = parse_z2(queries);
      auto h = subgroup_closure(parse_z2(words), s.length_bound, sg, s.alphabet,
                                s.cap_or(1'000'000), s.workers);
      for (auto const& w : q) {
        all_found = all_found && h.contains(w);
      }
      saturated = h.saturated;
      report    = subgroup_report(h, q);
    }
    emit(s, "subgroup", report);
    exit_code = !saturated ? inconclusive : all_found ? ok : inconclusive;
  });

  // roundtrip
  std::string oracle_text;
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "category to word group and back");
  auto* oracle_opt    = roundtrip_cmd->add_option(
      "--oracle", oracle_text, "trivial, parity, commutator or exponent:s");
  auto* gen_opt = roundtrip_cmd->add_option("--gen,-g", gens, "generator partition");
  oracle_opt->excludes(gen_opt);
  roundtrip_cmd->callback([&] {
    if (oracle_text.empty() && gens.empty()) {
      throw std::invalid_argument("roundtrip needs --oracle or --gen");
    }
    RoundtripBounds b{s.point_bound, s.work_bound, s.length_bound, s.alphabet, s.workers};
    auto r    = oracle_text.empty() ? roundtrip_check(parse_partitions(gens), b)
                                    : roundtrip_check(MembershipOracle::parse(oracle_text), b);
    emit(s, "roundtrip", roundtrip_report(r));
    exit_code = r.ok() ? ok : failed;
  });

  // quotient
  Letter                   n = 2;
  std::vector<std::string> relators;
  std::size_t              length_cap = 8, size_cap = 10'000;
  auto* quotient_cmd = app.add_subcommand("quotient", "multiplication table of the quotient");
  quotient_cmd->add_option("--n", n, "letters a1..an")->capture_default_str();
  auto* relator_opt = quotient_cmd->add_option("--relator,-r", relators, "relator word");
  auto* q_oracle    = quotient_cmd->add_option("--oracle", oracle_text, "membership oracle");
  relator_opt->excludes(q_oracle);
  quotient_cmd->add_option("--length-cap", length_cap, "max normal form length")
      ->capture_default_str();
  quotient_cmd->add_option("--size-cap", size_cap, "max group order")->capture_default_str();
  quotient_cmd->callback([&] {
    QuotientBounds b;
    b.length_cap  = length_cap;
    b.size_cap    = size_cap;
    b.closure_cap = s.cap_or(b.closure_cap);
    b.workers     = s.workers;
    auto t = relators.empty()
                 ? quotient_enumerate(n,
                                      MembershipOracle::parse(oracle_text.empty() ? "trivial"
                                                                                  : oracle_text),
                                      b)
                 : quotient_enumerate(n, parse_z2(relators), b);
    emit(s, "quotient", quotient_report(t));
    exit_code = t.complete ? ok : inconclusive;
  });

  // limit
  Letter n_max = 4;
  auto* limit_cmd = app.add_subcommand("limit", "compare closures over n and n+1 letters");
  auto* limit_words = limit_cmd->add_option("--word,-w", words, "generator word");
  auto* limit_oracle = limit_cmd->add_option("--oracle", oracle_text, "membership oracle");
  limit_words->excludes(limit_oracle);
  limit_cmd->add_option("--n-max", n_max, "largest n")->capture_default_str();
  limit_cmd->callback([&] {
    auto r = words.empty()
                 ? inductive_limit_check(MembershipOracle::parse(oracle_text.empty()
                                                                     ? "trivial"
                                                                     : oracle_text),
                                         s.length_bound, n_max)
                 : inductive_limit_check(parse_z2(words), s.length_bound, n_max,
                                         s.cap_or(2'000'000), s.workers);
    emit(s, "limit", inductive_limit_report(r));
    exit_code = r.ok() ? ok : failed;
  });

  // intertwiner
  std::string              rep_file, builtin;
  std::vector<std::string> partitions;
  std::uint64_t            budget = 10'000;
  auto* inter_cmd = app.add_subcommand("intertwiner", "relations and intertwiner checks");
  auto* file_opt  = inter_cmd->add_option("--rep", rep_file, "representation file")
                       ->check(CLI::ExistingFile);
  auto* builtin_opt
      = inter_cmd->add_option("--builtin", builtin, "counterexample or diagonal")
            ->check(CLI::IsMember({"counterexample", "diagonal"}));
  file_opt->excludes(builtin_opt);
  inter_cmd->add_option("--partition,-p", partitions, "partition to test");
  inter_cmd->add_option("--budget", budget, "max nonzero entries per check")
      ->capture_default_str();
  inter_cmd->callback([&] {
    Representation rep;
    if (!rep_file.empty()) {
      std::ifstream in(rep_file);
      rep = read_representation(in);
    } else {
      rep = builtin_rep(builtin.empty() ? "counterexample" : builtin);
    }
    if (partitions.empty()) {
      partitions = {"pair", "unit", "crossing", "fourblock", "halflib"};
    }
    auto report = intertwiner_report(rep, parse_partitions(partitions), budget);
    emit(s, "intertwiner", report);
    bool all = report["flags"]["failures"].empty();
    for (auto const& e : report["intertwiners"]) {
      all = all && e["holds"].get<bool>();
    }
    exit_code = all ? ok : failed;
  });

  // facts
  std::string corpus = PARTLAB_DEFAULT_FACTS;
  auto* facts_cmd = app.add_subcommand("facts", "run a regression corpus");
  facts_cmd->add_option("--corpus", corpus, "corpus file")
      ->check(CLI::ExistingFile)
      ->capture_default_str();
  facts_cmd->callback([&] {
    std::ifstream in(corpus);
    auto          facts = read_facts(in);
    Json          results = Json::array();
    std::size_t   pass = 0, fail = 0, open = 0;
    for (auto const& f : facts) {
      auto r = run_fact(f, s.workers);
      results.push_back(Json{{"line", f.line},
                             {"name", f.name},
                             {"check", f.check},
                             {"expected", f.expected},
                             {"actual", r.actual},
                             {"outcome", to_string(r.outcome)}});
      (r.outcome == FactOutcome::pass ? pass
       : r.outcome == FactOutcome::fail ? fail
                                        : open)++;
    }
    emit(s, "facts",
         Json{{"results", results}, {"pass", pass}, {"fail", fail}, {"inconclusive", open}});
    exit_code = fail ? failed : open ? inconclusive : ok;
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return failed;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
  return exit_code;
}
