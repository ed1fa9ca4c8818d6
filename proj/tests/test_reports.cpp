#include <doctest.h>

#include <sstream>

#include "partlab/facts.hpp"
#include "partlab/reports.hpp"

using namespace partlab;

namespace {
  Partition P(char const* text) {
    return named_or_literal(text);
  }
  Fact fact(std::string check, std::string args, std::string expected) {
    return {1, "t", std::move(check), std::move(args), std::move(expected)};
  }
}  // namespace

TEST_CASE("closure report") {
  auto c = closure({P("primary")}, 8, 12);
  auto j = closure_report(c, true);
  CHECK(j["saturated"] == true);
  CHECK(j["generators"][0] == "aab:baa");
  CHECK(j["notable"]["fatcross"]["member"] == "yes");
  CHECK(j["notable"]["double-singleton"]["member"] == "unknown");
  CHECK(j["hyperoctahedral"] == "yes");
  CHECK(j["simplifiable"] == "yes");
  CHECK(j["members"].size() == c.member_count());
  CHECK_FALSE(j.contains("workers"));
  CHECK(j["notable"]["fatcross"]["certificate"]["script"].size() >= 1);
}

TEST_CASE("reports do not depend on the worker count") {
  auto one  = closure({P("h3")}, 8, 14, 5'000'000, 1);
  auto many = closure({P("h3")}, 8, 14, 5'000'000, 8);
  CHECK(closure_report(one, true).dump() == closure_report(many, true).dump());
  CHECK(membership_report(one, P("primary")).dump()
        == membership_report(many, P("primary")).dump());
  RoundtripBounds b1, b8;
  b8.workers = 8;
  CHECK(roundtrip_report(roundtrip_check(MembershipOracle::parity(), b1)).dump()
        == roundtrip_report(roundtrip_check(MembershipOracle::parity(), b8)).dump());
}

TEST_CASE("membership report replays its certificate") {
  auto c = closure({P("fatcross")}, 8, 12);
  auto j = membership_report(c, P(":aaaa"));
  CHECK(j["verdict"] == "yes");
  CHECK(j["replay_matches"] == true);
  auto none = membership_report(c, P(":ab"));
  CHECK(none["verdict"] == "unknown");
  CHECK_FALSE(none.contains("certificate"));
}

TEST_CASE("simplify and word reports") {
  auto s = simplify_report(P(":abbacacaca"), true);
  CHECK(s["steps"].size() == 2);
  CHECK(P(s["steps"][0].get<std::string>().c_str()) == P(":aacacaca"));
  CHECK(s["result"] == ":ababab");
  CHECK(s["single_leg"] == true);
  auto one = simplify_report(P(":abbacacaca"), false);
  CHECK(one["steps"].size() == 1);

  auto w = word_report(P("halflib"));
  CHECK(w["word"] == "a1.a2.a3.a1.a2.a3");
  CHECK(w["x_word"] == "x1.x2^-1.x1^-1.x2");
  CHECK(w["exponents"].empty());
  auto odd = word_report(P(":abc"));
  CHECK_FALSE(odd.contains("x_word"));
}

TEST_CASE("subgroup and quotient reports") {
  auto h = subgroup_closure({Z2Word::parse("(a1.a2)^3")}, 6, Semigroup::s0, 3, 100000);
  auto j = subgroup_report(h, {Z2Word::parse("(a2.a1)^3"), Z2Word::parse("a1")});
  CHECK(j["queries"][0]["member"] == "yes");
  CHECK(j["queries"][1]["member"] == "not found");
  CHECK(j["contains_a1"] == false);

  auto t = quotient_enumerate(2, {Z2Word::parse("(a1.a2)^3")}, QuotientBounds{});
  auto q = quotient_report(t);
  CHECK(q["order"] == 6);
  CHECK(q["complete"] == true);
  CHECK(q["right_multiplication"].size() == 6);
}

TEST_CASE("intertwiner report") {
  auto j = intertwiner_report(counterexample_rep(), {P("fatcross"), P("primary")}, 10'000);
  CHECK(j["relations"]["iii"]["holds"] == true);
  CHECK(j["relations"]["iv"]["holds"] == false);
  CHECK(j["intertwiners"][0]["holds"] == true);
  CHECK(j["intertwiners"][1]["holds"] == false);
  CHECK(j["transpose"]["unchanged"] == true);
}

TEST_CASE("text rendering") {
  Json j{{"b", 1}, {"a", Json::array({"x", "y"})}, {"c", Json{{"d", true}}}};
  CHECK(to_text(j) == "a:\n  - x\n  - y\nb: 1\nc:\n  d: true\n");
}

TEST_CASE("facts corpus parsing") {
  std::istringstream in("# comment\n\nname | word | partition=h3 | (a1.a2)^3\n");
  auto               facts = read_facts(in);
  REQUIRE(facts.size() == 1);
  CHECK(facts[0].line == 3);
  CHECK(facts[0].check == "word");
  CHECK(facts[0].expected == "(a1.a2)^3");
  std::istringstream bad("only | three | fields\n");
  CHECK_THROWS(read_facts(bad));
}

TEST_CASE("fact outcomes") {
  CHECK(run_fact(fact("word", "partition=h3", "(a1.a2)^3")).outcome == FactOutcome::pass);
  CHECK(run_fact(fact("word", "partition=h3", "a1")).outcome == FactOutcome::fail);
  CHECK(run_fact(fact("member", "gens=fourblock target=:ab", "yes")).outcome
        == FactOutcome::inconclusive);
  CHECK(run_fact(fact("member", "gens=fourblock target=:aabb", "yes")).outcome
        == FactOutcome::pass);
  CHECK(run_fact(fact("quotient-order", "n=2 relators=e length-cap=3", "6")).outcome
        == FactOutcome::inconclusive);
  auto missing = run_fact(fact("word", "", "e"));
  CHECK(missing.outcome == FactOutcome::fail);
  CHECK(missing.actual.find("missing argument") != std::string::npos);
  CHECK(run_fact(fact("nonsense", "", "")).outcome == FactOutcome::fail);
  CHECK(run_fact(fact("simplify-step", "partition=:abbacacaca", ":aacacaca")).outcome
        == FactOutcome::pass);
  auto checks = fact_checks();
  CHECK(std::find(checks.begin(), checks.end(), "relation") != checks.end());
}
