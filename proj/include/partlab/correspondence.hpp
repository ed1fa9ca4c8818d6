#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "partlab/closure.hpp"
#include "partlab/partition.hpp"
#include "partlab/words.hpp"

namespace partlab {

  // Decides membership of a Z2Word in a fixed subgroup of the even words.
  class MembershipOracle {
   public:
    enum class Kind { trivial, parity, exponent, bounded };

    static MembershipOracle trivial();
    // kernel of the abelianisation of the x-basis
    static MembershipOracle parity();
    // every x-exponent divisible by `modulus`
    static MembershipOracle exponent(unsigned modulus);
    // answers yes or unknown from a bounded closure
    static MembershipOracle bounded(Z2Subgroup group);
    // "trivial", "parity", "exponent:3"
    static MembershipOracle parse(std::string const& text);

    Tri decide(Z2Word const& w) const;
    // words using letters above n are rejected
    MembershipOracle restricted(Letter n) const;

    Kind                     kind() const noexcept {
      return _kind;
    }
    unsigned                 modulus() const noexcept {
      return _modulus;
    }
    std::optional<Letter>    restriction() const noexcept {
      return _restrict;
    }
    Z2Subgroup const*        group() const noexcept {
      return _group.get();
    }
    std::string              name() const;

   private:
    Kind                              _kind    = Kind::trivial;
    unsigned                          _modulus = 0;
    std::optional<Letter>             _restrict;
    std::shared_ptr<Z2Subgroup const> _group;
  };

  // Reduces the letters of w to 1..m in order of first appearance.
  Z2Word relabel_first_occurrence(Z2Word const& w);

  // Words read off a set of one-row class keys, under every rotation,
  // reflection and every labelling of the blocks by letters 1..alphabet.
  struct WordImage {
    std::size_t              length_bound   = 0;
    Letter                   alphabet_bound = 0;
    std::vector<Z2Word>      words;  // shortlex
    std::vector<std::string> sources;  // first partition producing words[i]
    bool                     closed = false;
    std::vector<std::string> closure_violations;  // first 20

    bool contains(Z2Word const& w) const;
    // exact at bound for simplifiable categories: any labelling works
    Tri  decide(Z2Word const& w) const;
  };

  WordImage word_image(std::vector<std::string> const& member_keys,
                       std::size_t length_bound, Letter alphabet_bound,
                       unsigned workers = 1);

  // Throws std::invalid_argument unless c is simplifiable and not known to
  // contain the double singleton.
  WordImage F_of_category(CategoryApprox const& c, std::size_t length_bound,
                          Letter alphabet_bound, unsigned workers = 1);

  // Checks closure of a word set under inverse, products and S0 at bound.
  std::vector<std::string> closure_violations(std::vector<Z2Word> const& words,
                                              std::size_t length_bound,
                                              Letter alphabet_bound,
                                              std::size_t limit = 20,
                                              unsigned workers = 1);

  // Partition side of the correspondence, evaluated by enumeration.
  struct SubgroupCategory {
    MembershipOracle         oracle;
    std::size_t              point_bound = 0;
    std::vector<std::string> member_keys;  // verdict yes, sorted by size then key
    std::size_t              unknown = 0;  // classes the oracle left open

    Tri contains(Partition const& p) const;
  };

  Tri              category_membership(MembershipOracle const& oracle, Partition const& p);
  SubgroupCategory category_of_subgroup(MembershipOracle const& oracle,
                                        std::size_t point_bound);

  struct RoundtripReport {
    std::string              seed;
    std::size_t              point_bound    = 0;
    std::size_t              length_bound   = 0;
    Letter                   alphabet_bound = 0;
    std::size_t              category_size  = 0;  // classes of C
    std::size_t              subgroup_size  = 0;  // words of H at bound
    std::size_t              partitions_compared = 0;
    std::size_t              words_compared      = 0;
    bool                     image_closed        = false;
    bool                     category_closed     = true;
    std::vector<std::string> disagreements;  // first 20

    std::size_t disagreement_count = 0;
    bool        ok() const {
      return disagreement_count == 0 && image_closed && category_closed;
    }
  };

  struct RoundtripBounds {
    std::size_t point_bound    = 8;
    std::size_t work_bound     = 12;
    std::size_t length_bound   = 8;
    Letter      alphabet_bound = 4;
    unsigned    workers        = 1;
  };

  RoundtripReport roundtrip_check(MembershipOracle const& seed, RoundtripBounds const& b);
  RoundtripReport roundtrip_check(std::vector<Partition> const& generators,
                                  RoundtripBounds const&         b);

  // Words of w in H restricted to letters 1..n.
  Z2Subgroup restrict_to_n(Z2Subgroup const& h, Letter n);

  struct QuotientGroupTable {
    Letter                                n = 0;
    std::vector<Z2Word>                   elements;  // normal forms, by length
    std::vector<std::size_t>              lengths;
    std::vector<std::vector<std::size_t>> right_mult;  // [element][generator-1]
    bool                                  complete = false;
    std::string                           relator_source;
  };

  struct QuotientBounds {
    std::size_t length_cap = 8;
    std::size_t size_cap   = 10'000;
    std::size_t closure_cap = 2'000'000;
    unsigned    workers    = 1;
  };

  QuotientGroupTable quotient_enumerate(Letter n, MembershipOracle const& h,
                                        QuotientBounds const& b);
  // Relators are closed under S0 over letters 1..n at length 2*cap+2 first.
  QuotientGroupTable quotient_enumerate(Letter n, std::vector<Z2Word> const& relators,
                                        QuotientBounds const& b);

  struct InductiveLimitReport {
    struct Level {
      Letter      n = 0;
      std::size_t size_n       = 0;
      std::size_t size_next    = 0;  // restricted from n+1 letters
      bool        equal        = false;
    };
    std::vector<Level>       levels;
    std::vector<std::string> mismatches;  // first 20
    bool ok() const;
  };

  // Compares the closure over n letters with the closure over n+1 letters
  // restricted back to n letters.
  InductiveLimitReport inductive_limit_check(std::vector<Z2Word> const& generators,
                                             std::size_t length_bound, Letter n_max,
                                             std::size_t cap = 2'000'000,
                                             unsigned    workers = 1);
  InductiveLimitReport inductive_limit_check(MembershipOracle const& h,
                                             std::size_t length_bound, Letter n_max);

}  // namespace partlab
