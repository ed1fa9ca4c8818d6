#include "partlab/correspondence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "partlab/parallel.hpp"

namespace partlab {

  ////////////////////////////////////////////////////////////////////////
  // oracles
  ////////////////////////////////////////////////////////////////////////

  MembershipOracle MembershipOracle::trivial() {
    return MembershipOracle{};
  }

  MembershipOracle MembershipOracle::parity() {
    MembershipOracle o;
    o._kind = Kind::parity;
    return o;
  }

  MembershipOracle MembershipOracle::exponent(unsigned modulus) {
    if (modulus < 1) {
      throw std::invalid_argument("exponent oracle needs a modulus >= 1");
    }
    MembershipOracle o;
    o._kind    = Kind::exponent;
    o._modulus = modulus;
    return o;
  }

  MembershipOracle MembershipOracle::bounded(Z2Subgroup group) {
    MembershipOracle o;
    o._kind  = Kind::bounded;
    o._group = std::make_shared<Z2Subgroup const>(std::move(group));
    return o;
  }

  MembershipOracle MembershipOracle::parse(std::string const& text) {
    if (text == "trivial") {
      return trivial();
    }
    if (text == "parity" || text == "commutator") {
      return parity();
    }
    auto colon = text.find(':');
    if (colon != std::string::npos && text.substr(0, colon) == "exponent") {
      std::string const digits = text.substr(colon + 1);
      if (digits.empty() || digits.size() > 6
          || !std::all_of(digits.begin(), digits.end(),
                          [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("bad exponent oracle '" + text + "'");
      }
      return exponent(static_cast<unsigned>(std::stoul(digits)));
    }
    throw std::invalid_argument("unknown oracle '" + text
                                + "' (trivial, parity, exponent:<s>)");
  }

  std::string MembershipOracle::name() const {
    std::string s;
    switch (_kind) {
      case Kind::trivial:
        s = "trivial";
        break;
      case Kind::parity:
        s = "parity";
        break;
      case Kind::exponent:
        s = "exponent:" + std::to_string(_modulus);
        break;
      case Kind::bounded:
        s = "bounded(" + std::to_string(_group->elements.size()) + " words, L="
            + std::to_string(_group->length_bound) + ")";
        break;
    }
    if (_restrict) {
      s += " restricted to " + std::to_string(*_restrict) + " letters";
    }
    return s;
  }

  MembershipOracle MembershipOracle::restricted(Letter n) const {
    MembershipOracle o = *this;
    o._restrict        = _restrict ? std::min(*_restrict, n) : n;
    return o;
  }

  Tri MembershipOracle::decide(Z2Word const& w) const {
    if (_restrict && w.max_letter() > *_restrict) {
      return Tri::no;
    }
    switch (_kind) {
      case Kind::trivial:
        return w.is_identity() ? Tri::yes : Tri::no;
      case Kind::parity:
      case Kind::exponent: {
        if (!w.is_even()) {
          return Tri::no;
        }
        for (auto const& [letter, e] : abelianize(to_free(w))) {
          if (_kind == Kind::parity || e % _modulus != 0) {
            return Tri::no;
          }
        }
        return Tri::yes;
      }
      case Kind::bounded:
        return _group->contains(w) ? Tri::yes : Tri::unknown;
    }
    return Tri::unknown;
  }

  Z2Word relabel_first_occurrence(Z2Word const& w) {
    std::map<Letter, Letter> map;
    std::vector<Letter>      out;
    out.reserve(w.size());
    for (Letter a : w.letters()) {
      auto [it, fresh] = map.try_emplace(a, static_cast<Letter>(map.size() + 1));
      out.push_back(it->second);
    }
    return Z2Word::reduce(out);
  }

  ////////////////////////////////////////////////////////////////////////
  // F
  ////////////////////////////////////////////////////////////////////////

  bool WordImage::contains(Z2Word const& w) const {
    return std::binary_search(words.begin(), words.end(), w);
  }

  Tri WordImage::decide(Z2Word const& w) const {
    Z2Word const r = relabel_first_occurrence(w);
    if (r.size() > length_bound || r.max_letter() > alphabet_bound) {
      return Tri::unknown;
    }
    return contains(r) ? Tri::yes : Tri::no;
  }

  std::vector<std::string> closure_violations(std::vector<Z2Word> const& words,
                                              std::size_t length_bound,
                                              Letter alphabet_bound, std::size_t limit,
                                              unsigned workers) {
    std::unordered_set<Z2Word, Z2WordHash> set(words.begin(), words.end());
    std::vector<std::string>               out;
    if (!set.count(Z2Word{})) {
      out.push_back("identity missing");
    }
    auto per_word = parallel_collect<std::vector<std::string>>(
        words.size(), workers, [&](std::size_t i) {
          std::vector<std::string> bad;
          Z2Word const&            u     = words[i];
          auto                     check = [&](Z2Word const& w, std::string const& how) {
            if (bad.size() < limit && w.size() <= length_bound && !set.count(w)) {
              bad.push_back(how + " gives " + w.to_string());
            }
          };
          check(inv(u), "inverse of " + u.to_string());
          for (auto const& v : words) {
            if (u.size() + v.size() > length_bound) {
              // only cancellation at the seam can bring it under the bound
              std::size_t overlap = (u.size() + v.size() - length_bound + 1) / 2;
              if (overlap > std::min(u.size(), v.size())) {
                continue;
              }
            }
            check(mult(u, v), u.to_string() + " * " + v.to_string());
          }
          for (auto const& g : s0_generators_for(u, alphabet_bound)) {
            check(apply_s0(g, u), describe(g) + " of " + u.to_string());
          }
          return bad;
        });
    for (auto& bad : per_word) {
      for (auto& line : bad) {
        if (out.size() < limit) {
          out.push_back(std::move(line));
        }
      }
    }
    return out;
  }

  WordImage word_image(std::vector<std::string> const& member_keys,
                       std::size_t length_bound, Letter alphabet_bound,
                       unsigned workers) {
    if (alphabet_bound < 1) {
      throw std::invalid_argument("alphabet bound must be at least 1");
    }
    auto per_key = parallel_collect<std::set<Z2Word>>(
        member_keys.size(), workers, [&](std::size_t i) {
          std::string const& key = member_keys[i];
          std::size_t const  n   = key.size();
          std::set<Z2Word>   found;
          if (n == 0) {
            found.insert(Z2Word{});
            return found;
          }
          Label blocks = 0;
          for (char ch : key) {
            blocks = std::max<Label>(blocks, static_cast<Label>(
                                                 static_cast<unsigned char>(ch) + 1));
          }
          std::set<std::vector<Label>> variants;
          for (int refl = 0; refl < 2; ++refl) {
            for (std::size_t rot = 0; rot < n; ++rot) {
              std::vector<Label> v(n);
              for (std::size_t t = 0; t < n; ++t) {
                std::size_t src = refl ? n - 1 - (rot + t) % n : (rot + t) % n;
                v[t]            = static_cast<Label>(key[src]);
              }
              variants.insert(std::move(v));
            }
          }
          std::vector<Letter> labelling(blocks, 1);
          std::vector<Letter> letters(n);
          while (true) {
            for (auto const& v : variants) {
              for (std::size_t t = 0; t < n; ++t) {
                letters[t] = labelling[v[t]];
              }
              Z2Word w = Z2Word::reduce(letters);
              if (w.size() <= length_bound) {
                found.insert(std::move(w));
              }
            }
            std::size_t b = 0;
            while (b < blocks && labelling[b] == alphabet_bound) {
              labelling[b++] = 1;
            }
            if (b == blocks) {
              break;
            }
            ++labelling[b];
          }
          return found;
        });
    std::map<Z2Word, std::string> merged;
    for (std::size_t i = 0; i < member_keys.size(); ++i) {
      for (auto const& w : per_key[i]) {
        merged.try_emplace(w, member_keys[i]);
      }
    }
    WordImage img;
    img.length_bound   = length_bound;
    img.alphabet_bound = alphabet_bound;
    for (auto& [w, key] : merged) {
      img.words.push_back(w);
      img.sources.push_back(from_key(key).render());
    }
    img.closure_violations
        = closure_violations(img.words, length_bound, alphabet_bound, 20, workers);
    img.closed = img.closure_violations.empty();
    return img;
  }

  WordImage F_of_category(CategoryApprox const& c, std::size_t length_bound,
                          Letter alphabet_bound, unsigned workers) {
    if (is_simplifiable_at_bound(c) != Tri::yes) {
      throw std::invalid_argument(
          "category does not contain the pair positioner at this bound");
    }
    if (is_hyperoctahedral_at_bound(c) == Tri::no) {
      throw std::invalid_argument("category contains the double singleton");
    }
    return word_image(c.member_keys(), length_bound, alphabet_bound, workers);
  }

  ////////////////////////////////////////////////////////////////////////
  // C_H
  ////////////////////////////////////////////////////////////////////////

  Tri category_membership(MembershipOracle const& oracle, Partition const& p) {
    return oracle.decide(word_of(p));
  }

  Tri SubgroupCategory::contains(Partition const& p) const {
    if (p.point_count() > point_bound) {
      return Tri::unknown;
    }
    return category_membership(oracle, p);
  }

  SubgroupCategory category_of_subgroup(MembershipOracle const& oracle,
                                        std::size_t             point_bound) {
    SubgroupCategory c;
    c.oracle      = oracle;
    c.point_bound = point_bound;
    for (auto const& p : all_one_row_orbits(point_bound)) {
      Tri t = category_membership(oracle, p);
      if (t == Tri::yes) {
        c.member_keys.push_back(orbit_key(p));
      } else if (t == Tri::unknown) {
        ++c.unknown;
      }
    }
    std::sort(c.member_keys.begin(), c.member_keys.end(), [](auto const& x, auto const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // round trip
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void note(RoundtripReport& r, std::string line) {
      ++r.disagreement_count;
      if (r.disagreements.size() < 20) {
        r.disagreements.push_back(std::move(line));
      }
    }

    // C against C_{F(C)} on every class with at most B points.
    template <class InCategory>
    void compare_partitions(RoundtripReport& r, std::size_t point_bound,
                            WordImage const& image, InCategory&& in_category) {
      for (auto const& p : all_one_row_orbits(point_bound)) {
        Tri lhs = in_category(p);
        Tri rhs = image.decide(word_of(p));
        if (lhs == Tri::unknown || rhs == Tri::unknown) {
          continue;
        }
        ++r.partitions_compared;
        if (lhs != rhs) {
          note(r, "partition " + p.render() + ": category " + to_string(lhs)
                      + ", from words " + to_string(rhs));
        }
      }
    }

    // H against F(C_H) on every reduced word at bound.
    template <class InGroup>
    void compare_words(RoundtripReport& r, WordImage const& image, InGroup&& in_group) {
      for (auto const& w : all_reduced_words(r.length_bound, r.alphabet_bound)) {
        Tri lhs = in_group(w);
        if (lhs == Tri::unknown) {
          continue;
        }
        ++r.words_compared;
        bool rhs = image.contains(w);
        if ((lhs == Tri::yes) != rhs) {
          note(r, "word " + w.to_string() + ": subgroup " + to_string(lhs)
                      + ", from partitions " + (rhs ? "yes" : "no"));
        }
      }
    }

    std::set<std::string> key_set(std::vector<std::string> const& keys) {
      return {keys.begin(), keys.end()};
    }

  }  // namespace

  RoundtripReport roundtrip_check(MembershipOracle const& seed, RoundtripBounds const& b) {
    RoundtripReport r;
    r.seed           = "oracle " + seed.name();
    r.point_bound    = b.point_bound;
    r.length_bound   = b.length_bound;
    r.alphabet_bound = b.alphabet_bound;

    SubgroupCategory const ch = category_of_subgroup(seed, b.point_bound);
    r.category_size           = ch.member_keys.size();
    WordImage const image     = word_image(ch.member_keys, b.length_bound,
                                           b.alphabet_bound, b.workers);
    r.subgroup_size           = image.words.size();
    r.image_closed            = image.closed;

    compare_words(r, image, [&](Z2Word const& w) { return seed.decide(w); });
    auto const members = key_set(ch.member_keys);
    compare_partitions(r, b.point_bound, image, [&](Partition const& p) {
      Tri t = category_membership(seed, p);
      return t == Tri::unknown ? t : (members.count(orbit_key(p)) ? Tri::yes : Tri::no);
    });

    // C_H has to be a category at bound: closing it adds nothing.
    std::vector<Partition> gens;
    for (auto const& k : ch.member_keys) {
      if (!k.empty()) {
        gens.push_back(from_key(k));
      }
    }
    auto const closed = closure(gens, b.point_bound, b.work_bound, 5'000'000, b.workers);
    r.category_closed = closed.saturated && key_set(closed.member_keys()) == members;
    if (!r.category_closed) {
      for (auto const& k : closed.member_keys()) {
        if (!members.count(k)) {
          note(r, "closing the subgroup's category adds " + from_key(k).render());
        }
      }
    }
    return r;
  }

  RoundtripReport roundtrip_check(std::vector<Partition> const& generators,
                                  RoundtripBounds const&         b) {
    RoundtripReport r;
    r.seed = "category <";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      r.seed += (i ? ", " : "") + generators[i].render();
    }
    r.seed += ">";
    r.point_bound    = b.point_bound;
    r.length_bound   = b.length_bound;
    r.alphabet_bound = b.alphabet_bound;

    auto const c = closure(generators, b.point_bound, b.work_bound, 5'000'000, b.workers);
    r.category_size   = c.member_count();
    r.category_closed = c.saturated;
    WordImage const image = F_of_category(c, b.length_bound, b.alphabet_bound, b.workers);
    r.subgroup_size       = image.words.size();
    r.image_closed        = image.closed;

    compare_partitions(r, b.point_bound, image,
                       [&](Partition const& p) { return c.has(p) ? Tri::yes : Tri::no; });

    // F(C_{F(C)}) against F(C)
    std::vector<std::string> back;
    for (auto const& p : all_one_row_orbits(b.point_bound)) {
      if (image.decide(word_of(p)) == Tri::yes) {
        back.push_back(orbit_key(p));
      }
    }
    WordImage const again = word_image(back, b.length_bound, b.alphabet_bound, b.workers);
    compare_words(r, again, [&](Z2Word const& w) { return image.decide(w); });
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // restriction and quotients
  ////////////////////////////////////////////////////////////////////////

  Z2Subgroup restrict_to_n(Z2Subgroup const& h, Letter n) {
    if (n < 1) {
      throw std::invalid_argument("restriction needs n >= 1");
    }
    Z2Subgroup r;
    r.generators     = h.generators;
    r.length_bound   = h.length_bound;
    r.semigroup      = h.semigroup;
    r.alphabet_bound = std::min(h.alphabet_bound, n);
    r.cap            = h.cap;
    r.saturated      = h.saturated;
    r.even_only      = h.even_only;
    for (auto const& w : h.elements) {
      if (w.max_letter() <= n) {
        r.insert(w, {"restricted", {}});
      }
    }
    return r;
  }

  namespace {

    QuotientGroupTable enumerate(Letter n, MembershipOracle const& h,
                                 QuotientBounds const& b) {
      if (n < 1) {
        throw std::invalid_argument("quotient needs n >= 1");
      }
      QuotientGroupTable t;
      t.n              = n;
      t.relator_source = h.name();
      t.elements.push_back(Z2Word{});
      t.lengths.push_back(0);

      auto same = [&](Z2Word const& u, Z2Word const& v) {
        return u == v || h.decide(mult(inv(v), u)) == Tri::yes;
      };
      auto find_known = [&](Z2Word const& u, std::size_t upto) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < upto; ++i) {
          if (same(u, t.elements[i])) {
            return i;
          }
        }
        return std::nullopt;
      };

      std::vector<std::size_t> frontier{0};
      bool                     capped = false;
      for (std::size_t d = 1; !frontier.empty(); ++d) {
        if (d > b.length_cap) {
          capped = true;
          break;
        }
        std::vector<Z2Word> candidates;
        for (std::size_t g : frontier) {
          for (Letter a = 1; a <= n; ++a) {
            Z2Word u = mult(t.elements[g], Z2Word::letter(a));
            if (u.size() == d) {
              candidates.push_back(std::move(u));
            }
          }
        }
        std::size_t const known = t.elements.size();
        auto              hits  = parallel_collect<std::optional<std::size_t>>(
            candidates.size(), b.workers,
            [&](std::size_t i) { return find_known(candidates[i], known); });
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (hits[i]) {
            continue;
          }
          bool dup = false;
          for (std::size_t j : next) {
            if (same(candidates[i], t.elements[j])) {
              dup = true;
              break;
            }
          }
          if (dup) {
            continue;
          }
          next.push_back(t.elements.size());
          t.elements.push_back(std::move(candidates[i]));
          t.lengths.push_back(d);
          if (t.elements.size() > b.size_cap) {
            return t;
          }
        }
        frontier = std::move(next);
      }
      t.complete = !capped;
      if (t.complete) {
        t.right_mult = parallel_collect<std::vector<std::size_t>>(
            t.elements.size(), b.workers, [&](std::size_t i) {
              std::vector<std::size_t> row;
              for (Letter a = 1; a <= n; ++a) {
                auto hit = find_known(mult(t.elements[i], Z2Word::letter(a)),
                                      t.elements.size());
                if (!hit) {
                  throw std::logic_error("closed quotient table lost a product");
                }
                row.push_back(*hit);
              }
              return row;
            });
      }
      return t;
    }

  }  // namespace

  QuotientGroupTable quotient_enumerate(Letter n, MembershipOracle const& h,
                                        QuotientBounds const& b) {
    return enumerate(n, h.restricted(n), b);
  }

  QuotientGroupTable quotient_enumerate(Letter n, std::vector<Z2Word> const& relators,
                                        QuotientBounds const& b) {
    Letter alphabet = n;
    for (auto const& r : relators) {
      alphabet = std::max(alphabet, r.max_letter());
    }
    std::size_t const L = 2 * b.length_cap + 2;
    for (auto const& r : relators) {
      if (r.size() > L) {
        throw std::invalid_argument("relator " + r.to_string()
                                    + " is longer than twice the length cap");
      }
    }
    auto group = subgroup_closure(relators, L, Semigroup::s0, alphabet, b.closure_cap,
                                  b.workers);
    std::string source = "S0-closure of {";
    for (std::size_t i = 0; i < relators.size(); ++i) {
      source += (i ? ", " : "") + relators[i].to_string();
    }
    source += "} at length " + std::to_string(L);
    if (!group.saturated) {
      source += " (cap reached)";
    }
    auto t           = enumerate(n, MembershipOracle::bounded(restrict_to_n(group, n)), b);
    t.relator_source = source;
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // inductive limits
  ////////////////////////////////////////////////////////////////////////

  bool InductiveLimitReport::ok() const {
    return std::all_of(levels.begin(), levels.end(), [](Level const& l) { return l.equal; });
  }

  namespace {
    std::set<Z2Word> restricted_words(std::vector<Z2Word> const& words, Letter n) {
      std::set<Z2Word> out;
      for (auto const& w : words) {
        if (w.max_letter() <= n) {
          out.insert(w);
        }
      }
      return out;
    }

    void record(InductiveLimitReport& rep, Letter n, std::set<Z2Word> const& here,
                std::set<Z2Word> const& next) {
      InductiveLimitReport::Level l;
      l.n         = n;
      l.size_n    = here.size();
      l.size_next = next.size();
      l.equal     = here == next;
      rep.levels.push_back(l);
      if (!l.equal) {
        for (auto const& w : here) {
          if (!next.count(w) && rep.mismatches.size() < 20) {
            rep.mismatches.push_back("n=" + std::to_string(n) + ": " + w.to_string()
                                     + " only over n letters");
          }
        }
        for (auto const& w : next) {
          if (!here.count(w) && rep.mismatches.size() < 20) {
            rep.mismatches.push_back("n=" + std::to_string(n) + ": " + w.to_string()
                                     + " only over n+1 letters");
          }
        }
      }
    }
  }  // namespace

  InductiveLimitReport inductive_limit_check(std::vector<Z2Word> const& generators,
                                             std::size_t length_bound, Letter n_max,
                                             std::size_t cap, unsigned workers) {
    Letter used = 1;
    for (auto const& g : generators) {
      used = std::max(used, g.max_letter());
    }
    std::map<Letter, Z2Subgroup> by_alphabet;
    auto closure_over = [&](Letter n) -> Z2Subgroup const& {
      Letter m  = std::max(n, used);
      auto   it = by_alphabet.find(m);
      if (it == by_alphabet.end()) {
        it = by_alphabet
                 .emplace(m, subgroup_closure(generators, length_bound, Semigroup::s0, m,
                                              cap, workers))
                 .first;
      }
      return it->second;
    };
    InductiveLimitReport rep;
    for (Letter n = 1; n <= n_max; ++n) {
      record(rep, n, restricted_words(closure_over(n).elements, n),
             restricted_words(closure_over(n + 1).elements, n));
    }
    return rep;
  }

  InductiveLimitReport inductive_limit_check(MembershipOracle const& h,
                                             std::size_t length_bound, Letter n_max) {
    InductiveLimitReport rep;
    for (Letter n = 1; n <= n_max; ++n) {
      std::set<Z2Word> here, next;
      for (auto const& w : all_reduced_words(length_bound, n)) {
        if (h.restricted(n).decide(w) == Tri::yes) {
          here.insert(w);
        }
      }
      for (auto const& w : all_reduced_words(length_bound, n + 1)) {
        if (w.max_letter() <= n && h.restricted(n + 1).decide(w) == Tri::yes) {
          next.insert(w);
        }
      }
      record(rep, n, here, next);
    }
    return rep;
  }

}  // namespace partlab
