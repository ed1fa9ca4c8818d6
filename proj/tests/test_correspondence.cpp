#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "partlab/closure.hpp"
#include "partlab/correspondence.hpp"

using namespace partlab;

namespace {
  Partition P(char const* text) {
    return named_or_literal(text);
  }
  Z2Word w(char const* text) {
    return Z2Word::parse(text);
  }

  CategoryApprox gen(std::vector<char const*> names, std::size_t B = 8, std::size_t W = 12) {
    std::vector<Partition> g;
    for (auto n : names) {
      g.push_back(P(n));
    }
    return closure(g, B, W);
  }

  // x-exponents counted from the signed letter list
  std::map<int, int> exponents(Z2Word const& u) {
    std::map<int, int> e;
    for (int x : oracle::to_free(u.letters())) {
      e[x > 0 ? x : -x] += x > 0 ? 1 : -1;
    }
    return e;
  }

  // every x-exponent divisible by m (m = 0: only the identity)
  bool in_kernel(Z2Word const& u, int m) {
    if (!u.is_even()) {
      return false;
    }
    if (m == 0) {
      return u.is_identity();
    }
    for (auto const& [x, e] : exponents(u)) {
      if (e % m != 0) {
        return false;
      }
    }
    return true;
  }

  std::set<Z2Word> kernel_words(std::size_t L, Letter A, int m) {
    std::set<Z2Word> out;
    for (auto const& u : all_reduced_words(L, A)) {
      if (in_kernel(u, m)) {
        out.insert(u);
      }
    }
    return out;
  }

  std::set<Z2Word> image_set(WordImage const& img) {
    return {img.words.begin(), img.words.end()};
  }
}  // namespace

TEST_CASE("exact oracles agree with direct exponent counting") {
  auto trivial  = MembershipOracle::trivial();
  auto parity   = MembershipOracle::parity();
  auto exponent = MembershipOracle::exponent(3);
  for (auto const& u : all_reduced_words(8, 4)) {
    REQUIRE((trivial.decide(u) == Tri::yes) == in_kernel(u, 0));
    REQUIRE((parity.decide(u) == Tri::yes) == in_kernel(u, 1 << 30));
    REQUIRE((exponent.decide(u) == Tri::yes) == in_kernel(u, 3));
    REQUIRE(parity.decide(u) != Tri::unknown);
  }
  CHECK(MembershipOracle::parse("commutator").kind() == MembershipOracle::Kind::parity);
  CHECK(MembershipOracle::parse("exponent:4").modulus() == 4);
  CHECK_THROWS(MembershipOracle::parse("exponent:x"));
  CHECK_THROWS(MembershipOracle::parse("free"));
}

TEST_CASE("oracles are invariant under relabelling letters") {
  for (auto const& o : {MembershipOracle::trivial(), MembershipOracle::parity(),
                        MembershipOracle::exponent(2), MembershipOracle::exponent(3)}) {
    for (auto const& u : all_reduced_words(8, 4)) {
      REQUIRE(o.decide(u) == o.decide(relabel_first_occurrence(u)));
    }
  }
  CHECK(relabel_first_occurrence(w("a3.a1.a3.a1")) == w("a1.a2.a1.a2"));
}

TEST_CASE("bounded oracles are sound against the exact kernel") {
  auto h = subgroup_closure({w("(a1.a2)^3"), w("a1.a2.a3.a1.a2.a3")}, 8, Semigroup::s0, 4,
                            2'000'000);
  auto bounded = MembershipOracle::bounded(h);
  auto exact   = MembershipOracle::exponent(3);
  std::size_t yes = 0;
  for (auto const& u : all_reduced_words(8, 4)) {
    Tri t = bounded.decide(u);
    REQUIRE(t != Tri::no);
    if (t == Tri::yes) {
      ++yes;
      REQUIRE(exact.decide(u) == Tri::yes);
    }
  }
  CHECK(yes > 1);
}

TEST_CASE("F of the pair positioner category is trivial") {
  for (std::size_t L : {4u, 6u, 8u}) {
    auto img = F_of_category(gen({"primary"}), L, 4);
    REQUIRE(img.words.size() == 1);
    REQUIRE(img.words[0].is_identity());
    REQUIRE(img.closed);
  }
}

TEST_CASE("F of the half-liberated category is the commutator kernel") {
  auto img = F_of_category(gen({"halflib", "fourblock"}), 8, 3);
  CHECK(image_set(img) == kernel_words(8, 3, 1 << 30));
  CHECK(img.closed);
}

TEST_CASE("F with h_s is the exponent kernel") {
  for (int s : {2, 3, 4}) {
    std::string hs = "h" + std::to_string(s);
    auto        img = F_of_category(gen({"halflib", "fourblock", hs.c_str()}), 8, 4);
    REQUIRE(image_set(img) == kernel_words(8, 4, s));
  }
  auto img = F_of_category(gen({"h3", "fourblock", "primary"}), 8, 4);
  CHECK(img.contains(w("(a1.a2)^3")));
  CHECK(img.decide(w("(a2.a4)^3")) == Tri::yes);
  CHECK(img.decide(w("a1.a2")) == Tri::no);
}

TEST_CASE("F refuses categories outside its domain") {
  CHECK_THROWS_AS(F_of_category(gen({"fourblock"}), 8, 4), std::invalid_argument);
  CHECK_THROWS_AS(F_of_category(gen({"primary", ":ab"}), 8, 4), std::invalid_argument);
}

TEST_CASE("F images are proper, closed subgroups") {
  for (auto const& g : std::vector<std::vector<char const*>>{
           {"primary"}, {"halflib", "fourblock"}, {"h3", "fourblock", "primary"}, {"h4", "primary"}}) {
    auto img = F_of_category(gen(g), 8, 4);
    REQUIRE(img.closed);
    REQUIRE(closure_violations(img.words, 8, 4).empty());
    for (auto const& u : img.words) {
      REQUIRE(u.is_even());
      std::map<Letter, int> count;
      for (Letter a : u.letters()) {
        ++count[a];
      }
      for (auto const& [a, c] : count) {
        REQUIRE(c >= 2);
      }
    }
  }
}

TEST_CASE("closure violations are detected") {
  auto v = closure_violations({Z2Word{}, w("(a1.a2)^2")}, 8, 3);
  CHECK_FALSE(v.empty());
  CHECK(closure_violations({Z2Word{}}, 8, 3).empty());
}

TEST_CASE("F is monotone in the generators") {
  std::vector<std::pair<std::vector<char const*>, std::vector<char const*>>> chains = {
      {{"primary"}, {"halflib", "fourblock"}},
      {{"halflib", "fourblock"}, {"halflib", "fourblock", "h3"}},
      {{"h4", "primary"}, {"h2", "primary"}},
  };
  for (auto const& [small, big] : chains) {
    auto a = image_set(F_of_category(gen(small), 8, 4));
    auto b = image_set(F_of_category(gen(big), 8, 4));
    REQUIRE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("F with h_s splits into powers and commutator words") {
  for (int s : {2, 3}) {
    std::string hs  = "h" + std::to_string(s);
    auto        img = F_of_category(gen({hs.c_str(), "fourblock", "primary"}), 8, 4);
    CHECK(img.contains(from_free(FreeWord::generator(1, s))));
    for (auto const& u : img.words) {
      FreeWord f    = to_free(u);
      FreeWord rest = f;
      for (auto const& [letter, e] : abelianize(f)) {
        REQUIRE(e % s == 0);
        FreeWord power = FreeWord::generator(letter, e);
        Z2Word   as_a  = from_free(power);
        if (as_a.size() <= 8) {
          REQUIRE(img.contains(as_a));
        }
        rest = mult(rest, inv(power));
      }
      REQUIRE(abelianize(rest).empty());
      Z2Word rest_a = from_free(rest);
      if (rest_a.size() <= 8 && rest_a.max_letter() <= 4) {
        REQUIRE_MESSAGE(img.contains(rest_a), u.to_string());
      }
    }
  }
}

TEST_CASE("tested categories sit inside a half-liberated h_s category") {
  std::vector<std::pair<std::vector<char const*>, char const*>> cases = {
      {{"primary"}, "h3"},
      {{"h3", "fourblock", "primary"}, "h3"},
      {{"h4", "primary"}, "h4"},
      {{"halflib", "fourblock"}, "h3"},
  };
  for (auto const& [g, hs] : cases) {
    auto small = gen(g);
    auto big   = gen({"halflib", "fourblock", hs});
    for (auto const& k : small.member_keys()) {
      REQUIRE(big.index.count(k));
    }
  }
}

TEST_CASE("category of a subgroup") {
  auto trivial = MembershipOracle::trivial();
  CHECK(category_membership(trivial, P("primary")) == Tri::yes);
  CHECK(category_membership(trivial, P("fourblock")) == Tri::yes);
  CHECK(category_membership(trivial, P("halflib")) == Tri::no);
  CHECK(category_membership(MembershipOracle::parity(), P("halflib")) == Tri::yes);
  CHECK(category_membership(MembershipOracle::parity(), P("h3")) == Tri::no);
  CHECK(category_membership(MembershipOracle::exponent(3), P("h3")) == Tri::yes);
  CHECK(category_membership(trivial, P(":ab")) == Tri::no);

  auto c = category_of_subgroup(trivial, 8);
  std::set<std::string> expected;
  for (auto const& p : all_one_row_orbits(8)) {
    if (simplify(p).point_count() == 0) {
      expected.insert(orbit_key(p));
    }
  }
  CHECK(std::set<std::string>(c.member_keys.begin(), c.member_keys.end()) == expected);
  CHECK(c.unknown == 0);
}

TEST_CASE("round trips") {
  RoundtripBounds b;
  for (auto const& o : {MembershipOracle::trivial(), MembershipOracle::parity(),
                        MembershipOracle::exponent(3)}) {
    auto r = roundtrip_check(o, b);
    CHECK_MESSAGE(r.ok(), o.name());
    CHECK(r.disagreement_count == 0);
  }
  auto r = roundtrip_check({P("h3"), P("fourblock"), P("primary")}, b);
  CHECK(r.ok());
  CHECK(r.category_size > 0);
}

TEST_CASE("exponent-3 round trip stays in the exponent kernel") {
  auto c   = category_of_subgroup(MembershipOracle::exponent(3), 8);
  auto img = word_image(c.member_keys, 8, 4);
  for (auto const& u : img.words) {
    REQUIRE(in_kernel(u, 3));
  }
}

TEST_CASE("restriction to n letters") {
  auto trivial = MembershipOracle::trivial().restricted(2);
  CHECK(trivial.decide(Z2Word{}) == Tri::yes);

  auto h  = subgroup_closure({w("(a1.a2)^3")}, 8, Semigroup::s0, 4, 2'000'000);
  auto h2 = restrict_to_n(h, 2);
  for (auto const& u : h2.elements) {
    REQUIRE(u.max_letter() <= 2);
  }
  std::set<Z2Word> alternating6;
  for (auto const& u : h2.elements) {
    if (u.size() == 6) {
      alternating6.insert(u);
    }
  }
  CHECK(alternating6 == std::set<Z2Word>{w("(a1.a2)^3"), w("(a2.a1)^3")});
  auto h3 = restrict_to_n(h, 3);
  for (auto const& u : h2.elements) {
    REQUIRE(h3.contains(u));
  }
  CHECK(MembershipOracle::parity().restricted(2).decide(w("a1.a3.a1.a3")) == Tri::no);
}

TEST_CASE("quotients of the free product") {
  QuotientBounds b;
  for (unsigned s : {2u, 3u, 4u, 5u}) {
    auto t = quotient_enumerate(2, {power(w("a1.a2"), s)}, b);
    REQUIRE(t.complete);
    REQUIRE(t.elements.size() == 2 * s);
    oracle::Dihedral d{static_cast<int>(s)};
    auto             lengths = d.lengths();
    REQUIRE(lengths.size() == 2 * s);
    std::set<oracle::Dihedral::Perm> seen;
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
      auto perm = d.evaluate(t.elements[i].letters());
      REQUIRE(seen.insert(perm).second);
      REQUIRE(t.lengths[i] == lengths.at(perm));
      REQUIRE(t.lengths[i] == t.elements[i].size());
    }
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
      for (Letter a = 1; a <= 2; ++a) {
        auto next = t.right_mult[i][a - 1];
        auto want = d.evaluate(mult(t.elements[i], Z2Word::letter(a)).letters());
        REQUIRE(d.evaluate(t.elements[next].letters()) == want);
      }
    }
  }
}

TEST_CASE("quotient edge cases") {
  QuotientBounds b;
  b.length_cap = 5;
  auto free = quotient_enumerate(2, {Z2Word{}}, b);
  CHECK_FALSE(free.complete);
  CHECK(free.elements.size() == 11);

  auto z2 = quotient_enumerate(1, {w("a1.a1")}, QuotientBounds{});
  CHECK(z2.complete);
  CHECK(z2.elements.size() == 2);

  auto by_oracle = quotient_enumerate(2, MembershipOracle::exponent(3), QuotientBounds{});
  CHECK(by_oracle.complete);
  CHECK(by_oracle.elements.size() == 6);

  auto trivial = quotient_enumerate(2, MembershipOracle::trivial(), b);
  CHECK_FALSE(trivial.complete);
}

TEST_CASE("inductive limits") {
  CHECK(inductive_limit_check(MembershipOracle::trivial(), 8, 4).ok());
  CHECK(inductive_limit_check(MembershipOracle::parity(), 8, 4).ok());
  auto r = inductive_limit_check({w("(a1.a2)^3")}, 8, 4);
  CHECK(r.ok());
  CHECK(r.levels.size() == 4);
}
