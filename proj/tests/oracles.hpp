#pragma once

// Brute-force reference implementations used as test oracles.  They share
// no code with the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "partlab/partition.hpp"
#include "partlab/words.hpp"

namespace oracle {

  using partlab::Letter;

  // Deletes adjacent equal letters until none remain.
  inline std::vector<Letter> reduce_letters(std::vector<Letter> w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) {
          w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  // Free group words as signed letters (x_k = +k, x_k^-1 = -k).
  inline std::vector<int> free_reduce(std::vector<int> w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == -w[i + 1]) {
          w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  inline partlab::FreeWord to_free_word(std::vector<int> const& w) {
    std::vector<partlab::Syllable> s;
    for (int x : w) {
      s.push_back({static_cast<Letter>(x > 0 ? x : -x), x > 0 ? 1 : -1});
    }
    return partlab::FreeWord::reduce(s);
  }

  // a_i a_j = x_{i-1}^-1 x_{j-1}, x_0 = e.
  inline std::vector<int> to_free(std::vector<Letter> const& even_word) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < even_word.size(); i += 2) {
      if (even_word[i] != 1) {
        out.push_back(-static_cast<int>(even_word[i] - 1));
      }
      if (even_word[i + 1] != 1) {
        out.push_back(static_cast<int>(even_word[i + 1] - 1));
      }
    }
    return free_reduce(out);
  }

  // Restricted growth strings of length n (block labels 0..).
  inline void set_partitions(std::size_t n, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto             rec = [&](auto&& self, int blocks) -> void {
      if (cur.size() == n) {
        out.push_back(cur);
        return;
      }
      for (int b = 0; b <= blocks; ++b) {
        cur.push_back(b);
        self(self, std::max(blocks, b + 1));
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }

  inline bool crossing_free(std::vector<int> const& w) {
    std::size_t n = w.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d)
            if (w[a] == w[c] && w[b] == w[d] && w[a] != w[b]) {
              return false;
            }
    return true;
  }

  inline bool even_blocks(std::vector<int> const& w) {
    std::map<int, int> count;
    for (int b : w) {
      ++count[b];
    }
    return std::all_of(count.begin(), count.end(), [](auto const& e) { return e.second % 2 == 0; });
  }

  inline partlab::Partition one_row(std::vector<int> const& w) {
    return partlab::Partition({}, w);
  }

  // Rotation classes of one-row partitions with <= max_points points that
  // are noncrossing with all blocks of even size.
  inline std::set<std::string> noncrossing_even_classes(std::size_t max_points) {
    std::set<std::string> keys;
    for (std::size_t n = 0; n <= max_points; n += 2) {
      std::vector<std::vector<int>> all;
      set_partitions(n, all);
      for (auto const& w : all) {
        if (crossing_free(w) && even_blocks(w)) {
          keys.insert(partlab::orbit_key(one_row(w)));
        }
      }
    }
    return keys;
  }

  // Classes whose blocks all have exactly two points.
  inline std::set<std::string> pair_partition_classes(std::size_t max_points) {
    std::set<std::string> keys;
    for (std::size_t n = 0; n <= max_points; n += 2) {
      std::vector<std::vector<int>> all;
      set_partitions(n, all);
      for (auto const& w : all) {
        std::map<int, int> count;
        for (int b : w) {
          ++count[b];
        }
        if (std::all_of(count.begin(), count.end(), [](auto const& e) { return e.second == 2; })) {
          keys.insert(partlab::orbit_key(one_row(w)));
        }
      }
    }
    return keys;
  }

  // Dihedral group of order 2s as affine maps x -> sign*x + shift of Z/s:
  // a1 = (-1, 0), a2 = (-1, 1).
  struct Dihedral {
    int s;
    using Perm = std::pair<int, int>;

    Perm generator(Letter a) const {
      return {-1, a == 1 ? 0 : 1 % s};
    }
    Perm identity() const {
      return {1, 0};
    }
    // g after p: x -> g.sign*(p.sign*x + p.shift) + g.shift
    Perm then(Perm p, Perm g) const {
      return {g.first * p.first, (((g.first * p.second + g.second) % s) + s) % s};
    }
    // letters act left to right
    Perm evaluate(std::vector<Letter> const& w) const {
      Perm p = identity();
      for (Letter a : w) {
        p = then(p, generator(a));
      }
      return p;
    }
    std::map<Perm, std::size_t> lengths() const {
      std::map<Perm, std::size_t> dist{{identity(), 0}};
      std::queue<Perm>            frontier;
      frontier.push(identity());
      while (!frontier.empty()) {
        Perm p = frontier.front();
        frontier.pop();
        for (Letter a : {1u, 2u}) {
          Perm next = then(p, generator(a));
          if (!dist.count(next)) {
            dist[next] = dist[p] + 1;
            frontier.push(next);
          }
        }
      }
      return dist;
    }
  };

  using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

  // T_p as a dense n^lower x n^upper matrix, built from the block condition
  // directly.  Multi-indices are read with the leftmost point most significant.
  inline Matrix dense_T(partlab::Partition const& p, std::size_t n) {
    std::size_t const k = p.upper_count(), l = p.lower_count();
    std::size_t       rows = 1, cols = 1;
    for (std::size_t i = 0; i < l; ++i) rows *= n;
    for (std::size_t i = 0; i < k; ++i) cols *= n;
    Matrix m = Matrix::Zero(static_cast<long>(rows), static_cast<long>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::vector<std::size_t> up(k), low(l);
        std::size_t              x = c;
        for (std::size_t i = k; i-- > 0;) {
          up[i] = x % n;
          x /= n;
        }
        x = r;
        for (std::size_t i = l; i-- > 0;) {
          low[i] = x % n;
          x /= n;
        }
        std::map<int, std::size_t> value;
        bool                       ok = true;
        auto                       see = [&](int block, std::size_t v) {
          auto [it, fresh] = value.emplace(block, v);
          ok               = ok && (fresh || it->second == v);
        };
        for (std::size_t i = 0; i < k; ++i) see(p.upper()[i], up[i]);
        for (std::size_t i = 0; i < l; ++i) see(p.lower()[i], low[i]);
        m(static_cast<long>(r), static_cast<long>(c)) = ok ? 1 : 0;
      }
    }
    return m;
  }

}  // namespace oracle
