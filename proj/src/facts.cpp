#include "partlab/facts.hpp"

#include <functional>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "partlab/closure.hpp"
#include "partlab/correspondence.hpp"
#include "partlab/intertwiner.hpp"

namespace partlab {

  std::string to_string(FactOutcome o) {
    switch (o) {
      case FactOutcome::pass:
        return "pass";
      case FactOutcome::fail:
        return "FAIL";
      case FactOutcome::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  namespace {

    std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      std::istringstream       in(s);
      while (std::getline(in, cur, sep)) {
        out.push_back(trim(cur));
      }
      return out;
    }

    struct Args {
      std::map<std::string, std::string> values;

      explicit Args(std::string const& text) {
        std::istringstream in(text);
        std::string        tok;
        while (in >> tok) {
          auto eq = tok.find('=');
          if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("argument '" + tok + "' is not key=value");
          }
          values[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
      }
      std::string str(std::string const& key) const {
        auto it = values.find(key);
        if (it == values.end()) {
          throw std::invalid_argument("missing argument '" + key + "'");
        }
        return it->second;
      }
      std::string str(std::string const& key, std::string const& fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
      }
      std::size_t num(std::string const& key, std::size_t fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : std::stoul(it->second);
      }
      std::vector<Partition> partitions(std::string const& key) const {
        std::vector<Partition> out;
        for (auto const& t : split(str(key), ',')) {
          if (!t.empty()) {
            out.push_back(named_or_literal(t));
          }
        }
        return out;
      }
      std::vector<Z2Word> words(std::string const& key) const {
        std::vector<Z2Word> out;
        for (auto const& t : split(str(key), ',')) {
          out.push_back(Z2Word::parse(t));
        }
        return out;
      }
    };

    struct Outcome {
      std::string actual;
      bool        matches    = false;
      bool        open_ended = false;  // a miss may be due to the bounds
    };

    using Check = std::function<Outcome(Args const&, std::string const&, unsigned)>;

    Outcome same_text(std::string actual, std::string const& expected) {
      bool m = actual == expected;
      return {std::move(actual), m, false};
    }

    Outcome same_partition(Partition const& actual, std::string const& expected) {
      return {actual.render(), actual == named_or_literal(expected), false};
    }

    CategoryApprox category(Args const& a, unsigned workers) {
      return closure(a.partitions("gens"), a.num("B", 8), a.num("W", 12),
                     a.num("cap", 5'000'000), workers);
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }
    std::string true_false(bool b) {
      return b ? "true" : "false";
    }

    std::map<std::string, Check> const& checks() {
      static std::map<std::string, Check> const table = {
          {"member",
           [](Args const& a, std::string const& e, unsigned w) {
             auto c = category(a, w);
             auto m = contains(c, named_or_literal(a.str("target")));
             bool replayed = !m.certificate
                             || replay(c, *m.certificate) == named_or_literal(a.str("target"));
             std::string actual = replayed ? to_string(m.verdict) : "replay-mismatch";
             return Outcome{actual, actual == e, m.verdict == Tri::unknown};
           }},
          {"hyperoctahedral",
           [](Args const& a, std::string const& e, unsigned w) {
             auto t = to_string(is_hyperoctahedral_at_bound(category(a, w)));
             return Outcome{t, t == e, t == "unknown"};
           }},
          {"simplifiable",
           [](Args const& a, std::string const& e, unsigned w) {
             auto t = to_string(is_simplifiable_at_bound(category(a, w)));
             return Outcome{t, t == e, t == "unknown"};
           }},
          {"simplify-step",
           [](Args const& a, std::string const& e, unsigned) {
             return same_partition(simplify_step(named_or_literal(a.str("partition"))), e);
           }},
          {"simplify",
           [](Args const& a, std::string const& e, unsigned) {
             return same_partition(simplify(named_or_literal(a.str("partition"))), e);
           }},
          {"rotate",
           [](Args const& a, std::string const& e, unsigned) {
             Partition p     = named_or_literal(a.str("partition"));
             Side      side  = a.str("side") == "left" ? Side::left : Side::right;
             Direction dir   = a.str("direction") == "up" ? Direction::up : Direction::down;
             std::size_t times = a.num("times", 1);
             for (std::size_t t = 0; t < times; ++t) {
               p = rotate(p, side, dir);
             }
             return same_partition(p, e);
           }},
          {"rotation-class",
           [](Args const& a, std::string const& e, unsigned) {
             Partition r = one_row(named_or_literal(a.str("partition")));
             return Outcome{r.render(), orbit_key(r) == orbit_key(one_row(named_or_literal(e))),
                            false};
           }},
          {"word",
           [](Args const& a, std::string const& e, unsigned) {
             return Outcome{word_of(named_or_literal(a.str("partition"))).to_string(),
                            word_of(named_or_literal(a.str("partition")))
                                == Z2Word::parse(e),
                            false};
           }},
          {"inverse",
           [](Args const& a, std::string const& e, unsigned) {
             auto r = inv(Z2Word::parse(a.str("word")));
             return Outcome{r.to_string(), r == Z2Word::parse(e), false};
           }},
          {"to-free",
           [](Args const& a, std::string const& e, unsigned) {
             auto r = to_free(Z2Word::parse(a.str("word")));
             return Outcome{r.to_string(), r == FreeWord::parse(e), false};
           }},
          {"exponent",
           [](Args const& a, std::string const& e, unsigned) {
             auto r = exponent(FreeWord::parse(a.str("word")),
                               static_cast<Letter>(a.num("letter", 1)));
             return same_text(r.str(), e);
           }},
          {"s0-contains",
           [](Args const& a, std::string const& e, unsigned w) {
             auto s = subgroup_closure(a.words("gens"), a.num("L", 8), Semigroup::s0,
                                       static_cast<Letter>(a.num("alphabet", 4)),
                                       a.num("cap", 1'000'000), w);
             bool found = s.contains(Z2Word::parse(a.str("word")));
             std::string t = found ? "yes" : "unknown";
             return Outcome{t, t == e, !found};
           }},
          {"F-matches",
           [](Args const& a, std::string const& e, unsigned w) {
             auto c   = category(a, w);
             auto img = F_of_category(c, a.num("L", 8),
                                      static_cast<Letter>(a.num("alphabet", 4)), w);
             auto o   = MembershipOracle::parse(a.str("oracle"));
             bool same = img.closed;
             for (auto const& word : all_reduced_words(img.length_bound, img.alphabet_bound)) {
               same = same && (o.decide(word) == Tri::yes) == img.contains(word);
             }
             return same_text(yes_no(same), e);
           }},
          {"F-contains",
           [](Args const& a, std::string const& e, unsigned w) {
             auto c   = category(a, w);
             auto img = F_of_category(c, a.num("L", 8),
                                      static_cast<Letter>(a.num("alphabet", 4)), w);
             auto t   = to_string(img.decide(Z2Word::parse(a.str("word"))));
             return Outcome{t, t == e, t == "unknown"};
           }},
          {"category-of",
           [](Args const& a, std::string const& e, unsigned) {
             auto t = to_string(category_membership(MembershipOracle::parse(a.str("oracle")),
                                                    named_or_literal(a.str("partition"))));
             return Outcome{t, t == e, t == "unknown"};
           }},
          {"roundtrip",
           [](Args const& a, std::string const& e, unsigned w) {
             RoundtripBounds b;
             b.point_bound    = a.num("B", 8);
             b.work_bound     = a.num("W", 12);
             b.length_bound   = a.num("L", 8);
             b.alphabet_bound = static_cast<Letter>(a.num("alphabet", 4));
             b.workers        = w;
             auto r = a.values.count("oracle")
                          ? roundtrip_check(MembershipOracle::parse(a.str("oracle")), b)
                          : roundtrip_check(a.partitions("gens"), b);
             return same_text(r.ok() ? "ok" : "disagree", e);
           }},
          {"quotient-order",
           [](Args const& a, std::string const& e, unsigned w) {
             QuotientBounds b;
             b.length_cap = a.num("length-cap", 8);
             b.workers    = w;
             auto t = quotient_enumerate(static_cast<Letter>(a.num("n", 2)),
                                         a.words("relators"), b);
             std::string actual = t.complete ? std::to_string(t.elements.size()) : "incomplete";
             return Outcome{actual, actual == e, !t.complete};
           }},
          {"relation",
           [](Args const& a, std::string const& e, unsigned) {
             auto r = relation_check(builtin_rep(a.str("rep")),
                                     parse_relation_kind(a.str("kind")));
             return same_text(true_false(r.holds), e);
           }},
          {"intertwines",
           [](Args const& a, std::string const& e, unsigned) {
             auto r = intertwines(builtin_rep(a.str("rep")),
                                  named_or_literal(a.str("partition")));
             return same_text(true_false(r.holds), e);
           }},
          {"word-projection-fails",
           [](Args const& a, std::string const& e, unsigned) {
             auto s = word_projection_search(builtin_rep(a.str("rep")),
                                             named_or_literal(a.str("partition")));
             return same_text(true_false(s.first_failure.has_value()), e);
           }},
      };
      return table;
    }

  }  // namespace

  std::vector<std::string> fact_checks() {
    std::vector<std::string> out;
    for (auto const& [name, check] : checks()) {
      out.push_back(name);
    }
    return out;
  }

  std::vector<Fact> read_facts(std::istream& in) {
    std::vector<Fact> facts;
    std::string       line;
    std::size_t       number = 0;
    while (std::getline(in, line)) {
      ++number;
      std::string const t = trim(line);
      if (t.empty() || t[0] == '#') {
        continue;
      }
      auto parts = split(t, '|');
      if (parts.size() != 4) {
        throw std::invalid_argument("facts line " + std::to_string(number)
                                    + ": expected 'name | check | arguments | expected'");
      }
      facts.push_back({number, parts[0], parts[1], parts[2], parts[3]});
    }
    return facts;
  }

  FactResult run_fact(Fact const& f, unsigned workers) {
    FactResult r;
    r.fact = f;
    auto it = checks().find(f.check);
    if (it == checks().end()) {
      r.actual  = "unknown check '" + f.check + "'";
      r.outcome = FactOutcome::fail;
      return r;
    }
    try {
      Outcome o = it->second(Args(f.arguments), f.expected, workers);
      r.actual  = o.actual;
      r.outcome = o.matches      ? FactOutcome::pass
                  : o.open_ended ? FactOutcome::inconclusive
                                 : FactOutcome::fail;
    } catch (std::exception const& e) {
      r.actual  = std::string("error: ") + e.what();
      r.outcome = FactOutcome::fail;
    }
    return r;
  }

}  // namespace partlab
