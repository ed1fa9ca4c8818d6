#include "partlab/reports.hpp"

#include <map>
#include <sstream>

namespace partlab {

  std::vector<std::pair<std::string, Partition>> notable_partitions() {
    return {{"pair", make_named("pair")},
            {"unit", make_named("unit")},
            {"singleton", make_named("singleton")},
            {"double-singleton", make_named("double-singleton")},
            {"fourblock", make_named("fourblock")},
            {"crossing", make_named("crossing")},
            {"halflib", make_named("halflib")},
            {"primary", make_named("primary")},
            {"fatcross", make_named("fatcross")},
            {"h2", make_named("h", 2)},
            {"h3", make_named("h", 3)},
            {"h4", make_named("h", 4)}};
  }

  namespace {
    Json certificate_json(Certificate const& cert) {
      return Json{{"target", cert.target.render()},
                  {"node", cert.node},
                  {"operations", cert.operations},
                  {"script", cert.script}};
    }

    std::vector<std::string> rendered(std::vector<Partition> const& ps) {
      std::vector<std::string> out;
      for (auto const& p : ps) {
        out.push_back(p.render());
      }
      return out;
    }
  }  // namespace

  Json closure_report(CategoryApprox const& c, bool list_members) {
    Json j;
    j["generators"]  = rendered(c.generators);
    j["point_bound"] = c.point_bound;
    j["work_bound"]  = c.work_bound;
    j["cap"]         = c.cap;
    j["saturated"]   = c.saturated;
    j["rounds"]      = c.rounds;
    j["member_count"] = c.member_count();
    std::map<std::string, std::size_t> by_size;
    for (auto const& n : c.nodes) {
      ++by_size[std::to_string(n.key.size())];
    }
    j["classes_by_points"] = by_size;
    Json notable           = Json::object();
    for (auto const& [name, p] : notable_partitions()) {
      if (p.point_count() > c.point_bound) {
        continue;
      }
      auto m = contains(c, p);
      Json e{{"partition", p.render()}, {"member", to_string(m.verdict)}};
      if (m.certificate) {
        e["certificate"] = certificate_json(*m.certificate);
      }
      notable[name] = e;
    }
    j["notable"]                = notable;
    j["hyperoctahedral"]        = to_string(is_hyperoctahedral_at_bound(c));
    j["simplifiable"]           = to_string(is_simplifiable_at_bound(c));
    if (list_members) {
      j["members"] = rendered(c.members());
    }
    return j;
  }

  Json membership_report(CategoryApprox const& c, Partition const& target) {
    auto m = contains(c, target);
    Json j{{"generators", rendered(c.generators)},
           {"point_bound", c.point_bound},
           {"work_bound", c.work_bound},
           {"saturated", c.saturated},
           {"target", target.render()},
           {"verdict", to_string(m.verdict)}};
    if (m.certificate) {
      j["certificate"]      = certificate_json(*m.certificate);
      j["replay_matches"]   = replay(c, *m.certificate) == target;
    }
    return j;
  }

  Json simplify_report(Partition const& p, bool full) {
    Json j{{"input", p.render()}, {"full", full}};
    std::vector<std::string> steps;
    Partition                cur = one_row(p);
    while (true) {
      Partition next = simplify_step(cur);
      if (next == cur) {
        break;
      }
      steps.push_back(next.render());
      cur = next;
      if (!full) {
        break;
      }
    }
    j["steps"]      = steps;
    j["result"]     = cur.render();
    j["single_leg"] = is_single_leg(cur);
    return j;
  }

  Json word_report(Partition const& p) {
    Z2Word const w = word_of(p);
    Json         j{{"partition", p.render()},
                   {"one_row", one_row(p).render()},
                   {"block_word", block_word(one_row(p)).to_string()},
                   {"word", w.to_string()},
                   {"length", w.size()},
                   {"even", w.is_even()}};
    if (w.is_even()) {
      FreeWord const f = to_free(w);
      j["x_word"]      = f.to_string();
      Json ab          = Json::object();
      for (auto const& [letter, e] : abelianize(f)) {
        ab["x" + std::to_string(letter)] = e.str();
      }
      j["exponents"] = ab;
    }
    return j;
  }

  namespace {
    template <class S, class W>
    Json subgroup_json(S const& s, std::vector<W> const& queries) {
      Json j;
      std::vector<std::string> gens, elems;
      for (auto const& g : s.generators) {
        gens.push_back(g.to_string());
      }
      for (auto const& e : s.sorted_elements()) {
        elems.push_back(e.to_string());
      }
      j["generators"]     = gens;
      j["length_bound"]   = s.length_bound;
      j["semigroup"]      = to_string(s.semigroup);
      j["alphabet_bound"] = s.alphabet_bound;
      j["cap"]            = s.cap;
      j["saturated"]      = s.saturated;
      j["size"]           = s.elements.size();
      if (elems.size() <= 200) {
        j["elements"] = elems;
      }
      Json q = Json::array();
      for (auto const& w : queries) {
        Json e{{"word", w.to_string()}, {"member", s.contains(w) ? "yes" : "not found"}};
        if (s.contains(w)) {
          e["witness"] = s.witness_chain(w);
        }
        q.push_back(e);
      }
      j["queries"] = q;
      return j;
    }
  }  // namespace

  Json subgroup_report(Z2Subgroup const& s, std::vector<Z2Word> const& queries) {
    Json j        = subgroup_json(s, queries);
    j["even_only"] = s.even_only;
    j["contains_a1"] = s.contains(Z2Word::letter(1));
    return j;
  }

  Json subgroup_report(FreeSubgroup const& s, std::vector<FreeWord> const& queries) {
    return subgroup_json(s, queries);
  }

  Json word_image_report(WordImage const& img, std::size_t list_limit) {
    Json                     j{{"length_bound", img.length_bound},
                               {"alphabet_bound", img.alphabet_bound},
                               {"size", img.words.size()},
                               {"closed", img.closed},
                               {"closure_violations", img.closure_violations}};
    std::vector<std::string> words;
    for (std::size_t i = 0; i < img.words.size() && i < list_limit; ++i) {
      words.push_back(img.words[i].to_string() + " from " + img.sources[i]);
    }
    j["words"] = words;
    return j;
  }

  Json roundtrip_report(RoundtripReport const& r) {
    return Json{{"seed", r.seed},
                {"point_bound", r.point_bound},
                {"length_bound", r.length_bound},
                {"alphabet_bound", r.alphabet_bound},
                {"category_classes", r.category_size},
                {"subgroup_words", r.subgroup_size},
                {"partitions_compared", r.partitions_compared},
                {"words_compared", r.words_compared},
                {"image_closed", r.image_closed},
                {"category_closed", r.category_closed},
                {"disagreement_count", r.disagreement_count},
                {"disagreements", r.disagreements},
                {"ok", r.ok()}};
  }

  Json quotient_report(QuotientGroupTable const& t) {
    Json                     j{{"n", t.n},
                               {"relators", t.relator_source},
                               {"complete", t.complete},
                               {"order", t.elements.size()}};
    std::vector<std::string> elems;
    std::map<std::string, std::size_t> by_length;
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
      elems.push_back(t.elements[i].to_string());
      ++by_length[std::to_string(t.lengths[i])];
    }
    j["elements"]  = elems;
    j["lengths"]   = t.lengths;
    j["by_length"] = by_length;
    if (t.complete) {
      j["right_multiplication"] = t.right_mult;
    }
    return j;
  }

  Json intertwiner_report(Representation const& rep, std::vector<Partition> const& partitions,
                          std::uint64_t budget) {
    Json     j{{"n", rep.n}, {"dim", rep.dim}};
    RepFlags f = rep_flags(rep);
    j["flags"] = Json{{"self_adjoint", f.self_adjoint},
                      {"squares_projections", f.squares_projections},
                      {"row_sums", f.row_sums},
                      {"column_sums", f.column_sums},
                      {"orthogonality", f.orthogonality},
                      {"failures", f.failures}};
    Json rel   = Json::object();
    for (auto kind : {RelationKind::i, RelationKind::ii, RelationKind::iii, RelationKind::iv}) {
      auto r           = relation_check(rep, kind);
      rel[to_string(kind)] = Json{{"holds", r.holds}, {"failures", r.failures}};
    }
    j["relations"] = rel;
    Json inter     = Json::array();
    if (f.all()) {
      for (auto const& p : partitions) {
        auto r = intertwines(rep, p, budget);
        inter.push_back(Json{{"partition", p.render()},
                             {"holds", r.holds},
                             {"checked", r.checked},
                             {"failures", r.failures}});
      }
      auto t          = transpose_symmetry_check(rep, partitions);
      j["transpose"]  = Json{{"unchanged", t.unchanged}, {"differences", t.differences}};
    }
    j["intertwiners"] = inter;
    return j;
  }

  Json inductive_limit_report(InductiveLimitReport const& r) {
    Json levels = Json::array();
    for (auto const& l : r.levels) {
      levels.push_back(Json{{"n", l.n},
                            {"size_n", l.size_n},
                            {"size_from_next", l.size_next},
                            {"equal", l.equal}});
    }
    return Json{{"levels", levels}, {"mismatches", r.mismatches}, {"ok", r.ok()}};
  }

  namespace {
    void text_rec(std::ostringstream& out, Json const& j, std::string const& indent) {
      if (j.is_object()) {
        for (auto const& [key, value] : j.items()) {
          if (value.is_structured() && !value.empty()) {
            out << indent << key << ":\n";
            text_rec(out, value, indent + "  ");
          } else {
            out << indent << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
          }
        }
      } else if (j.is_array()) {
        for (auto const& value : j) {
          if (value.is_structured() && !value.empty()) {
            out << indent << "-\n";
            text_rec(out, value, indent + "  ");
          } else {
            out << indent << "- "
                << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
          }
        }
      } else {
        out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
      }
    }
  }  // namespace

  std::string to_text(Json const& j) {
    std::ostringstream out;
    text_rec(out, j, "");
    return out.str();
  }

}  // namespace partlab
