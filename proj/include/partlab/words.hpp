#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace partlab {

  using Letter = std::uint32_t;
  using BigInt = boost::multiprecision::cpp_int;

  // Reduced word in the free product of countably many copies of Z/2.
  // Letters are 1-based indices; the empty word is the identity.
  class Z2Word {
   public:
    Z2Word() = default;

    static Z2Word reduce(std::vector<Letter> const& letters);
    static Z2Word letter(Letter a);
    // "a1.a2.a1", "e" or "" for the identity, "(a1.a2)^3" for powers.
    static Z2Word parse(std::string_view text);

    std::string to_string() const;

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool is_identity() const noexcept {
      return _letters.empty();
    }
    bool is_even() const noexcept {
      return _letters.size() % 2 == 0;
    }
    Letter max_letter() const noexcept;
    std::vector<Letter> support() const;

    bool operator==(Z2Word const&) const = default;
    // shortlex
    std::strong_ordering operator<=>(Z2Word const& other) const;

   private:
    std::vector<Letter> _letters;
  };

  Z2Word mult(Z2Word const& u, Z2Word const& v);
  Z2Word inv(Z2Word const& u);
  Z2Word power(Z2Word const& u, std::size_t e);

  struct Z2WordHash {
    std::size_t operator()(Z2Word const& w) const noexcept;
  };

  struct Syllable {
    Letter letter;
    BigInt exponent;
    bool   operator==(Syllable const&) const = default;
  };

  // Reduced word in the free group on x1, x2, ...
  class FreeWord {
   public:
    FreeWord() = default;

    static FreeWord reduce(std::vector<Syllable> const& syllables);
    static FreeWord generator(Letter k, BigInt const& exponent = 1);
    // "x1^3.x2^-1.x1", "e" or "" for the identity.
    static FreeWord parse(std::string_view text);

    std::string to_string() const;

    std::vector<Syllable> const& syllables() const noexcept {
      return _syllables;
    }
    bool is_identity() const noexcept {
      return _syllables.empty();
    }
    // sum of |exponent|
    BigInt length() const;
    Letter max_letter() const noexcept;
    std::vector<Letter> support() const;

    bool                 operator==(FreeWord const&) const = default;
    std::strong_ordering operator<=>(FreeWord const& other) const;

   private:
    std::vector<Syllable> _syllables;
  };

  FreeWord mult(FreeWord const& u, FreeWord const& v);
  FreeWord inv(FreeWord const& u);

  struct FreeWordHash {
    std::size_t operator()(FreeWord const& w) const noexcept;
  };

  // x_k = a1 a_{k+1}; to_free throws std::invalid_argument on odd words.
  FreeWord to_free(Z2Word const& u);
  Z2Word   from_free(FreeWord const& w);

  BigInt exponent(FreeWord const& w, Letter i);
  // nonzero entries only
  std::map<Letter, BigInt> abelianize(FreeWord const& w);

  // Generators of S0 acting on Z2Words.
  struct Identify {
    std::map<Letter, Letter> map;  // unlisted letters are fixed
  };
  struct ConjugateBy {
    Letter letter;
  };
  using S0Gen = std::variant<Identify, ConjugateBy>;

  Z2Word      apply_s0(S0Gen const& gen, Z2Word const& u);
  std::string describe(S0Gen const& gen);

  // Generators of S acting on FreeWords.
  struct IdentifyX {
    std::map<Letter, Letter> map;
  };
  struct ShiftX {  // x_k -> x_by^-1 x_k for every k
    Letter by;
  };
  struct DeleteX {  // x_letter -> e
    Letter letter;
  };
  struct InvertAll {};
  struct InnerX {  // w -> x^sign w x^-sign
    Letter letter;
    int    sign;
  };
  using SGen = std::variant<IdentifyX, ShiftX, DeleteX, InvertAll, InnerX>;

  FreeWord    apply_s(SGen const& gen, FreeWord const& w);
  std::string describe(SGen const& gen);

  enum class Semigroup { none, s0, s };
  std::string to_string(Semigroup s);

  struct Witness {
    std::string              op;
    std::vector<std::size_t> parents;
  };

  // Length-bounded closure of a word set under product, inverse and a
  // semigroup of endomorphisms.
  template <class Word, class Hash>
  struct SubgroupApprox {
    std::vector<Word> generators;
    std::size_t       length_bound   = 0;
    Semigroup         semigroup      = Semigroup::none;
    Letter            alphabet_bound = 0;
    std::size_t       cap            = 0;
    bool              saturated      = false;
    bool              even_only      = false;

    std::vector<Word>                       elements;  // discovery order
    std::vector<Witness>                    witnesses;
    std::unordered_map<Word, std::size_t, Hash> index;

    bool contains(Word const& w) const {
      return index.count(w) != 0;
    }
    // Derivation steps back to the generators, at most 64 lines.
    std::vector<std::string> witness_chain(Word const& w) const;
    std::vector<Word>        sorted_elements() const;
    std::size_t              insert(Word w, Witness why);
  };

  using Z2Subgroup   = SubgroupApprox<Z2Word, Z2WordHash>;
  using FreeSubgroup = SubgroupApprox<FreeWord, FreeWordHash>;

  Z2Subgroup subgroup_closure(std::vector<Z2Word> const& generators,
                              std::size_t                length_bound,
                              Semigroup                  semigroup,
                              Letter                     alphabet_bound,
                              std::size_t                cap,
                              unsigned                   workers = 1);

  FreeSubgroup subgroup_closure(std::vector<FreeWord> const& generators,
                                std::size_t                  length_bound,
                                Semigroup                    semigroup,
                                Letter                       alphabet_bound,
                                std::size_t                  cap,
                                unsigned                     workers = 1);

  // Elementary generators used by the closures (exposed for tests).
  std::vector<S0Gen> s0_generators_for(Z2Word const& u, Letter alphabet_bound);
  std::vector<SGen>  s_generators_for(FreeWord const& w, Letter alphabet_bound);

  // All reduced Z2Words of length <= max_len over letters 1..alphabet, shortlex.
  std::vector<Z2Word> all_reduced_words(std::size_t max_len, Letter alphabet);

}  // namespace partlab
