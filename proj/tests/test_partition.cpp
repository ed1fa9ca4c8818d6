#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "partlab/closure.hpp"
#include "partlab/correspondence.hpp"
#include "partlab/partition.hpp"

using namespace partlab;

namespace {
  Partition P(char const* text) {
    return Partition::parse(text);
  }

  // every partition with k upper and l lower points, k + l <= max_points
  std::vector<Partition> all_up_to(std::size_t max_points) {
    std::vector<Partition> out;
    for (std::size_t n = 0; n <= max_points; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        auto ps = all_partitions(k, n - k);
        out.insert(out.end(), ps.begin(), ps.end());
      }
    }
    return out;
  }

  // distinct letters in clockwise first-occurrence order, naively reduced
  Z2Word clockwise_word(Partition const& p) {
    std::map<Label, Letter> letter;
    std::vector<Letter>     w;
    for (Label b : p.clockwise()) {
      auto it = letter.emplace(b, static_cast<Letter>(letter.size() + 1)).first;
      w.push_back(it->second);
    }
    return Z2Word::reduce(oracle::reduce_letters(w));
  }

  Z2Word normal(Z2Word const& w) {
    return relabel_first_occurrence(w);
  }

  std::vector<int> as_ints(std::vector<Label> const& v) {
    return {v.begin(), v.end()};
  }
}  // namespace

TEST_CASE("named partitions") {
  CHECK(make_named("pair").render() == ":aa");
  CHECK(make_named("unit").render() == "a:a");
  CHECK(make_named("halflib").render() == "abc:cba");
  CHECK(make_named("h", 3).render() == ":ababab");
  CHECK(make_named("primary").render() == "aab:baa");
  CHECK(make_named("fatcross") == P("aabb:bbaa"));
  CHECK(make_named("fourblock").render() == ":aaaa");
  CHECK(make_named("double-singleton").render() == ":ab");
  CHECK(make_named("crossing").render() == "ab:ba");
  CHECK(named_or_literal("h4") == make_named("h", 4));
  CHECK(named_or_literal(":abab") == P(":abab"));
  CHECK_THROWS(make_named("h"));
  CHECK_THROWS(make_named("nonsense"));
  CHECK_THROWS(make_named("h", 0));
}

TEST_CASE("parse and render") {
  CHECK(P(":").point_count() == 0);
  CHECK(P(":").render() == ":");
  CHECK(P("ba:ab").render() == "ab:ba");
  CHECK(P("aabb:bbaa").block_count() == 2);
  CHECK_THROWS(P("ab"));
  CHECK_THROWS(P("a1:a"));
  CHECK_THROWS(P("a:b:c"));
}

TEST_CASE("canonical form is idempotent") {
  for (auto const& p : all_up_to(7)) {
    REQUIRE(P(p.render().c_str()) == p);
    REQUIRE(P(p.render().c_str()).render() == p.render());
  }
}

TEST_CASE("tensor product") {
  CHECK(tensor(P(":aa"), P(":aa")).render() == ":aabb");
  CHECK(tensor(P(":a"), P(":a")) == make_named("double-singleton"));
  CHECK(tensor(P("a:a"), P(":aaaa")).render() == "a:abbbb");
  CHECK(tensor(P(":"), P("ab:ba")) == P("ab:ba"));
}

TEST_CASE("composition") {
  auto id = compose(P("a:a"), P("a:a"));
  CHECK(id.result == P("a:a"));
  CHECK(id.removed_loops == 0);

  // a pair stacked on the crossing is again a pair
  auto capped = compose(make_named("crossing"), make_named("pair"));
  CHECK(capped.result == P(":aa"));
  CHECK(capped.removed_loops == 0);

  auto loop = compose(P("aa:"), P(":aa"));
  CHECK(loop.result == P(":"));
  CHECK(loop.removed_loops == 1);

  CHECK_THROWS(compose(P("a:a"), P(":aa")));
}

TEST_CASE("composition is associative with additive loops") {
  auto small = all_up_to(4);
  std::size_t checked = 0;
  for (auto const& p : small) {
    for (auto const& q : small) {
      if (q.lower_count() != p.upper_count() || q.point_count() + p.point_count() > 5) {
        continue;
      }
      auto qp = compose(p, q);
      for (auto const& r : small) {
        if (r.lower_count() != q.upper_count() || r.point_count() > 3) {
          continue;
        }
        auto left  = compose(qp.result, r);
        auto rq    = compose(q, r);
        auto right = compose(p, rq.result);
        REQUIRE(left.result == right.result);
        REQUIRE(left.removed_loops + qp.removed_loops == right.removed_loops + rq.removed_loops);
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("involution") {
  CHECK(involution(P(":aaaa")).render() == "aaaa:");
  CHECK(involution(P("aab:baa")).render() == "abb:bba");
  for (auto const& p : all_up_to(6)) {
    REQUIRE(involution(involution(p)) == p);
  }
}

TEST_CASE("involution reverses composition order") {
  std::size_t checked = 0;
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t l = 0; l <= 3; ++l) {
      for (std::size_t m = 0; m <= 3; ++m) {
        if (k + l > 6 || l + m > 6) {
          continue;
        }
        for (auto const& q : all_partitions(k, l)) {
          for (auto const& p : all_partitions(l, m)) {
            auto pq = compose(p, q);
            auto rev = compose(involution(q), involution(p));
            REQUIRE(involution(pq.result) == rev.result);
            REQUIRE(pq.removed_loops == rev.removed_loops);
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("rotation") {
  CHECK(rotate(P(":aa"), Side::left, Direction::up) == P("a:a"));
  CHECK_THROWS(rotate(P(":aa"), Side::left, Direction::down));
  CHECK_THROWS(rotate(P("aa:"), Side::right, Direction::up));

  Partition fat = make_named("fatcross");
  for (int i = 0; i < 4; ++i) {
    fat = rotate(fat, Side::left, Direction::down);
  }
  CHECK(fat == P(":aabbaabb"));
  CHECK(one_row(make_named("fatcross")) == P(":aabbaabb"));
  // the primary partition lands in the rotation class of :aabaab
  CHECK(orbit_key(one_row(make_named("primary"))) == orbit_key(P(":aabaab")));
}

TEST_CASE("rotation round trips") {
  for (auto const& p : all_up_to(6)) {
    for (Side s : {Side::left, Side::right}) {
      if (p.upper_count() > 0) {
        REQUIRE(rotate(rotate(p, s, Direction::down), s, Direction::up) == p);
      }
      if (p.lower_count() > 0) {
        REQUIRE(rotate(rotate(p, s, Direction::up), s, Direction::down) == p);
      }
    }
    REQUIRE(lift(one_row(p), p.upper_count()) == p);
    REQUIRE(one_row(p).is_one_row());
  }
}

TEST_CASE("rotation preserves the clockwise cycle") {
  for (auto const& p : all_up_to(6)) {
    std::string const key = orbit_key(one_row(p));
    if (p.upper_count() > 0) {
      REQUIRE(orbit_key(one_row(rotate(p, Side::left, Direction::down))) == key);
      REQUIRE(orbit_key(one_row(rotate(p, Side::right, Direction::down))) == key);
    }
    REQUIRE(orbit_key(one_row(involution(p))) == key);
  }
}

TEST_CASE("orbit keys identify rotations and reflections") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (auto const& p : all_partitions(0, n)) {
      std::string const key = orbit_key(p);
      for (std::size_t s = 0; s < n; ++s) {
        REQUIRE(orbit_key(shift_left(p, s)) == key);
      }
      REQUIRE(orbit_key(reflect(p)) == key);
      REQUIRE(orbit_key(from_key(key)) == key);
      REQUIRE(orbit_representative(p).lower().size() == n);
    }
  }
}

TEST_CASE("one-row orbit enumeration matches brute force") {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::set<std::string> keys;
    for (std::size_t m = 0; m <= n; ++m) {
      std::vector<std::vector<int>> all;
      oracle::set_partitions(m, all);
      for (auto const& w : all) {
        keys.insert(orbit_key(oracle::one_row(w)));
      }
    }
    auto orbits = all_one_row_orbits(n);
    std::set<std::string> got;
    for (auto const& p : orbits) {
      got.insert(orbit_key(p));
    }
    REQUIRE(got.size() == orbits.size());
    REQUIRE(got == keys);
  }
}

TEST_CASE("connecting blocks") {
  CHECK(connect_blocks(P(":abab"), 0, 1) == P(":aaaa"));
  CHECK(connect_blocks(P(":aabb"), 0, 1) == P(":aaaa"));
  CHECK(connect_blocks(P("ab:ba"), 0, 1) == P("aa:aa"));
  CHECK_THROWS(connect_blocks(P(":aabb"), 0, 2));
  CHECK_THROWS(connect_blocks(P(":aabb"), 1, 1));
}

TEST_CASE("words of partitions") {
  CHECK(word_of(make_named("halflib")) == Z2Word::parse("a1.a2.a3.a1.a2.a3"));
  CHECK(word_of(P(":aaaa")).is_identity());
  for (int s = 1; s <= 6; ++s) {
    CHECK(word_of(make_named("h", s)) == power(Z2Word::parse("a1.a2"), static_cast<std::size_t>(s)));
  }
  CHECK(word_of(P(":abab"), {3, 3}).is_identity());
  CHECK(word_of(P(":abab"), {1, 4}) == Z2Word::parse("a4.a1.a4.a1"));
  CHECK(word_of(P(":abb")) == Z2Word::parse("a2"));
  CHECK(block_word(P(":aabbba")).to_string() == "a^2b^3a");
}

TEST_CASE("word extraction agrees with the clockwise oracle") {
  for (auto const& p : all_up_to(7)) {
    REQUIRE_MESSAGE(word_of(p) == clockwise_word(p), p.render());
    REQUIRE(word_of(one_row(p)) == word_of(p));
  }
}

TEST_CASE("simplification") {
  CHECK(simplify_step(P(":abbacacaca")) == P(":aacacaca"));
  CHECK(simplify_step(P(":aacacaca")) == P(":ababab"));
  CHECK(simplify(P(":abbacacaca")) == P(":ababab"));
  CHECK(simplify(P(":aaaa")) == P(":"));
  CHECK(is_single_leg(P(":ababab")));
  CHECK_FALSE(is_single_leg(P(":aabb")));
  CHECK(is_single_leg(P(":")));
}

TEST_CASE("simplification is coherent with words") {
  for (auto const& p : all_up_to(8)) {
    if (p.upper_count() > 2) {
      continue;
    }
    Partition s = simplify(p);
    REQUIRE(is_single_leg(s));
    REQUIRE(simplify(s) == s);
    REQUIRE_MESSAGE(normal(word_of(s)) == normal(word_of(p)), p.render());
  }
}

TEST_CASE("equivalence") {
  CHECK(equivalent(P(":ababab"), P(":ababab")));
  CHECK(equivalent(P(":aaaa"), P(":aaaaaa")));
  Partition halflib_row = one_row(make_named("halflib"));
  CHECK(equivalent(P(":abbcbacb"), halflib_row));
  CHECK(equivalent(P(":abcaddbc"), halflib_row));
  CHECK_FALSE(equivalent(P(":abab"), P(":")));
}

TEST_CASE("equivalence is word equality") {
  auto ps = all_up_to(6);
  for (std::size_t i = 0; i < ps.size(); i += 3) {
    for (std::size_t j = 0; j < ps.size(); j += 7) {
      REQUIRE(equivalent(ps[i], ps[j]) == (normal(word_of(ps[i])) == normal(word_of(ps[j]))));
    }
  }
}

TEST_CASE("noncrossing") {
  CHECK_FALSE(is_noncrossing(make_named("crossing")));
  CHECK(is_noncrossing(P(":aabb")));
  CHECK_FALSE(is_noncrossing(make_named("fatcross")));
  for (auto const& p : all_up_to(8)) {
    if (p.upper_count() > 2) {
      continue;
    }
    REQUIRE(is_noncrossing(p) == oracle::crossing_free(as_ints(p.clockwise())));
    REQUIRE(all_blocks_even(p) == oracle::even_blocks(as_ints(p.clockwise())));
  }
}
