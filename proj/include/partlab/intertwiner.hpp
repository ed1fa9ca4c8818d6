#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "partlab/partition.hpp"

namespace partlab {

  using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  using MultiIndex = std::vector<std::uint32_t>;  // 1-based entries

  // 1 iff the indices are constant on every block; upper indices first.
  int delta(Partition const& p, MultiIndex const& upper, MultiIndex const& lower);

  // T_p as a 0/1 map from (C^n)^{k} to (C^n)^{l}; tuples are encoded base n
  // with the leftmost point most significant and entries 0-based.
  struct SparseTensorMap {
    std::size_t                                       n     = 0;
    std::size_t                                       k_in  = 0;
    std::size_t                                       l_out = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;  // (out, in), sorted

    IntMatrix dense() const;  // n^l by n^k
  };

  SparseTensorMap T_of(Partition const& p, std::size_t n);

  MultiIndex    decode_index(std::uint64_t code, std::size_t length, std::size_t n);
  std::uint64_t encode_index(MultiIndex const& idx, std::size_t n);

  // Matrices u_ij (1-based i, j) acting on C^dim.
  struct Representation {
    std::size_t            n   = 0;
    std::size_t            dim = 0;
    std::vector<IntMatrix> u;  // row-major, u[(i-1)*n + (j-1)]

    IntMatrix const& at(std::size_t i, std::size_t j) const {
      return u[(i - 1) * n + (j - 1)];
    }
    IntMatrix& at(std::size_t i, std::size_t j) {
      return u[(i - 1) * n + (j - 1)];
    }
    Representation transposed() const;
  };

  // "n dim" then n*n matrices of dim*dim integers, row-major.
  Representation read_representation(std::istream& in);
  void           write_representation(std::ostream& out, Representation const& rep);

  struct RepFlags {
    bool                     self_adjoint        = false;
    bool                     squares_projections = false;
    bool                     row_sums            = false;
    bool                     column_sums         = false;
    bool                     orthogonality       = false;
    std::vector<std::string> failures;  // first 10

    bool all() const {
      return self_adjoint && squares_projections && row_sums && column_sums
             && orthogonality;
    }
  };
  RepFlags rep_flags(Representation const& rep);

  struct CheckResult {
    bool                     holds = false;
    std::size_t              checked = 0;
    std::vector<std::string> failures;  // first 10 failing index tuples
  };

  enum class RelationKind { i, ii, iii, iv };
  RelationKind parse_relation_kind(std::string const& text);
  std::string  to_string(RelationKind k);

  // i: local symmetries; ii: row and column square sums;
  // iii: squares commute; iv: squares commute with every generator.
  CheckResult relation_check(Representation const& rep, RelationKind kind);

  // u^{l}(T_p x 1) == (T_p x 1)u^{k}.  Throws std::invalid_argument when the
  // representation misses a flag or n^k or n^l exceeds `budget`.
  CheckResult intertwines(Representation const& rep, Partition const& p,
                          std::uint64_t budget = 10'000);

  Representation counterexample_rep();
  // Diagonal matrices: basis vector t carries the permutation perms[t] of
  // {1..n} and u_ij e_t = signs[t][i-1] e_t when perms[t][i-1] = j.
  Representation diagonal_sign_rep(std::vector<std::vector<std::size_t>> const& perms,
                                   std::vector<std::vector<int>> const&         signs);

  // "counterexample" or "diagonal" (a fixed 3-dimensional diagonal family)
  Representation builtin_rep(std::string const& name);

  // Each basis vector t carries a permutation s_t of {1..n}; u_ij squares
  // to the projection onto {t : s_t(i) = j} and pairs or signs vectors
  // inside it.  With `coherent`, only vectors with equal permutations are
  // paired.
  Representation random_block_rep(std::size_t n, std::size_t dim, bool coherent,
                                   std::mt19937_64& rng);

  struct WordProjection {
    bool      product_is_q = false;  // a_1..a_k == q
    bool      split_holds  = false;  // q a_1..a_s == q a_k..a_{s+1}
    IntMatrix product;
    IntMatrix q;
  };

  // p single-leg one-row; choice[b] = (i, j) for canonical block b.
  WordProjection word_projection_check(Representation const& rep, Partition const& p,
                                       std::vector<std::pair<std::size_t, std::size_t>> const& choice,
                                       std::size_t split);

  struct WordProjectionSearch {
    std::size_t                                                      choices = 0;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> first_failure;
  };
  // Tries every choice of generators for the letters of p.
  WordProjectionSearch word_projection_search(Representation const& rep,
                                              Partition const&      p);

  struct TransposeReport {
    bool                     unchanged = false;
    std::vector<std::string> differences;
  };
  // Compares flags, relation kinds i-iv and the given intertwiner checks on
  // rep and its transpose.
  TransposeReport transpose_symmetry_check(Representation const&         rep,
                                           std::vector<Partition> const& partitions);

}  // namespace partlab
