#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "partlab/closure.hpp"
#include "partlab/correspondence.hpp"
#include "partlab/intertwiner.hpp"
#include "partlab/partition.hpp"
#include "partlab/words.hpp"

namespace partlab {

  using Json = nlohmann::json;

  // Named partitions looked up in closure reports, with display names.
  std::vector<std::pair<std::string, Partition>> notable_partitions();

  Json closure_report(CategoryApprox const& c, bool list_members = false);
  Json membership_report(CategoryApprox const& c, Partition const& target);
  Json simplify_report(Partition const& p, bool full);
  Json word_report(Partition const& p);
  Json subgroup_report(Z2Subgroup const& s, std::vector<Z2Word> const& queries);
  Json subgroup_report(FreeSubgroup const& s, std::vector<FreeWord> const& queries);
  Json word_image_report(WordImage const& img, std::size_t list_limit = 50);
  Json roundtrip_report(RoundtripReport const& r);
  Json quotient_report(QuotientGroupTable const& t);
  Json intertwiner_report(Representation const& rep, std::vector<Partition> const& partitions,
                          std::uint64_t budget);
  Json inductive_limit_report(InductiveLimitReport const& r);

  // Indented "key: value" rendering.
  std::string to_text(Json const& j);

}  // namespace partlab
