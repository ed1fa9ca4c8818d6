#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partlab/words.hpp"

namespace partlab {

  using Label = std::uint8_t;

  // A set partition of k upper and l lower points.  Both rows are stored
  // left to right; block labels are canonical (first occurrence reading the
  // upper row, then the lower row, each left to right).
  class Partition {
   public:
    Partition() = default;
    // Arbitrary integer labels per point; equal label = same block.
    Partition(std::vector<int> const& upper, std::vector<int> const& lower);

    // "<upper>:<lower>", letters a-z then A-Z.
    static Partition parse(std::string_view text);
    std::string      render() const;

    std::size_t upper_count() const noexcept {
      return _upper.size();
    }
    std::size_t lower_count() const noexcept {
      return _lower.size();
    }
    std::size_t point_count() const noexcept {
      return _upper.size() + _lower.size();
    }
    std::size_t block_count() const noexcept {
      return _blocks;
    }
    bool is_one_row() const noexcept {
      return _upper.empty();
    }
    std::vector<Label> const& upper() const noexcept {
      return _upper;
    }
    std::vector<Label> const& lower() const noexcept {
      return _lower;
    }
    // upper left to right, then lower right to left
    std::vector<Label> clockwise() const;

    bool operator==(Partition const&) const = default;
    std::strong_ordering operator<=>(Partition const& other) const;

   private:
    std::vector<Label> _upper;
    std::vector<Label> _lower;
    std::size_t        _blocks = 0;
  };

  struct PartitionHash {
    std::size_t operator()(Partition const& p) const noexcept;
  };

  enum class Side { left, right };
  enum class Direction { up, down };

  // pair, unit, singleton, double-singleton, fourblock, h (s), crossing,
  // halflib, primary (pair positioner), fatcross, k (l).
  Partition                make_named(std::string_view name,
                                      std::optional<int> parameter = std::nullopt);
  std::vector<std::string> named_partition_names();
  // "h3", "k2" or a plain name; throws on unknown names.
  Partition                named_or_literal(std::string_view text);

  Partition identity_partition(std::size_t n);

  Partition tensor(Partition const& p, Partition const& q);

  struct Composition {
    Partition   result;
    std::size_t removed_loops = 0;
  };
  // q is stacked on top of p: q in P(k,l), p in P(l,m), result in P(k,m).
  Composition compose(Partition const& p, Partition const& q);

  Partition involution(Partition const& p);
  Partition rotate(Partition const& p, Side side, Direction direction);
  // Moves every upper point down with right-down rotations.
  Partition one_row(Partition const& p);
  // Inverse of one_row for a target with `upper` upper points.
  Partition lift(Partition const& one_row_form, std::size_t upper);

  Partition connect_blocks(Partition const& p, std::size_t b1, std::size_t b2);

  struct BlockWord {
    std::vector<std::pair<Label, std::size_t>> groups;  // (block, run length)
    std::size_t                                length = 0;
    std::string                                to_string() const;
  };
  BlockWord block_word(Partition const& p);

  // Reduced image of the clockwise word; default labelling gives distinct
  // letters in clockwise first-occurrence order.
  Z2Word word_of(Partition const& p);
  // labelling[b] is the letter of canonical block b
  Z2Word word_of(Partition const& p, std::vector<Letter> const& labelling);

  // One round of run-parity reduction on the one-row form.
  Partition simplify_step(Partition const& p);
  Partition simplify(Partition const& p);
  bool      is_single_leg(Partition const& p);
  bool      equivalent(Partition const& p, Partition const& q);
  bool      is_noncrossing(Partition const& p);
  bool      all_blocks_even(Partition const& p);

  // Canonical key of a cyclic word under rotation, reflection and relabelling.
  std::string orbit_key(Label const* word, std::size_t n);
  std::string orbit_key(Partition const& p);
  // One-row partition whose lower row is the orbit key.
  Partition orbit_representative(Partition const& p);
  Partition from_key(std::string const& key);

  // Every partition of P(k,l), in restricted-growth order.
  std::vector<Partition> all_partitions(std::size_t k, std::size_t l);
  // One representative per rotation/reflection class, up to max_points points.
  std::vector<Partition> all_one_row_orbits(std::size_t max_points);

}  // namespace partlab
