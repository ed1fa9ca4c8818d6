#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "partlab/partition.hpp"

namespace partlab {

  enum class Tri { yes, no, unknown };
  std::string to_string(Tri t);

  // How one rotation class was first reached.  Classes are stored by their
  // one-row key.  `compose` stacks a rotated (possibly reversed) copy of
  // class `a` on class `b` rotated by `pos`, joining `j` points: the last j
  // points of the first word meet the first j points of the second in
  // nested order.  j = 0 is the tensor product.
  struct Step {
    enum class Op : std::uint8_t { empty, pair, generator, compose };
    Op            op   = Op::empty;
    std::uint32_t a    = 0;
    std::uint32_t b    = 0;
    std::uint16_t rot  = 0;
    std::uint16_t pos  = 0;
    std::uint8_t  refl = 0;
    std::uint8_t  j    = 0;
    std::uint32_t gen  = 0;

    auto operator<=>(Step const&) const = default;
  };

  struct ClosureNode {
    std::string   key;  // orbit key, see orbit_key()
    Step          step;
    std::uint64_t cost  = 0;  // operations in the derivation tree
    std::uint32_t round = 0;
  };

  // Bounded closure of a generator set.  Members are rotation classes with
  // at most point_bound points; a composition is only formed when its
  // stacked diagram (middle row counted once) has at most work_bound points.
  struct CategoryApprox {
    std::vector<Partition> generators;
    std::size_t            point_bound = 0;
    std::size_t            work_bound  = 0;
    std::size_t            cap         = 0;
    bool                   saturated   = false;
    std::size_t            rounds      = 0;

    std::vector<ClosureNode>                       nodes;
    std::unordered_map<std::string, std::uint32_t> index;

    std::optional<std::uint32_t> find(Partition const& p) const;
    bool                         has(Partition const& p) const {
      return find(p).has_value();
    }
    // class representatives, sorted by size then key
    std::vector<Partition>   members() const;
    std::vector<std::string> member_keys() const;
    std::size_t              member_count() const {
      return nodes.size();
    }
  };

  CategoryApprox closure(std::vector<Partition> const& generators,
                         std::size_t point_bound, std::size_t work_bound,
                         std::size_t cap = 5'000'000, unsigned workers = 1);

  struct Certificate {
    Partition                target;
    std::uint32_t            node       = 0;
    std::size_t              operations = 0;
    std::vector<std::string> script;
  };

  struct Membership {
    Tri                        verdict = Tri::unknown;
    std::optional<Certificate> certificate;
  };

  Membership contains(CategoryApprox const& c, Partition const& p);

  // Rebuilds a node with tensor/compose/involution/rotate only; the result
  // equals from_key(c.nodes[id].key) exactly.
  Partition replay_node(CategoryApprox const& c, std::uint32_t id);
  // Rebuilds the certificate target itself (any shape).
  Partition replay(CategoryApprox const& c, Certificate const& cert);

  Tri is_hyperoctahedral_at_bound(CategoryApprox const& c);
  Tri is_simplifiable_at_bound(CategoryApprox const& c);

  std::vector<Partition> single_leg_members(CategoryApprox const& c);

  struct ConnectabilityReport {
    bool                     neighbouring_checked = false;
    bool                     arbitrary_checked    = false;
    std::size_t              merges_checked       = 0;
    std::vector<std::string> violations;
  };
  ConnectabilityReport connectability_check(CategoryApprox const& c);

  // Cyclic shift / reversal of a one-row partition through rotations.
  Partition shift_left(Partition const& one_row_form, std::size_t by);
  Partition reflect(Partition const& one_row_form);
  // The one-row composition described at Step, built with compose().
  Partition join_one_row(Partition const& first, Partition const& second,
                         std::size_t j);

}  // namespace partlab
