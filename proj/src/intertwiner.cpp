#include "partlab/intertwiner.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace partlab {

  int delta(Partition const& p, MultiIndex const& upper, MultiIndex const& lower) {
    if (upper.size() != p.upper_count() || lower.size() != p.lower_count()) {
      throw std::invalid_argument("delta: multi-index lengths do not match "
                                  + p.render());
    }
    std::vector<std::uint32_t> value(p.block_count(), 0);
    auto                       visit = [&](Label b, std::uint32_t v) {
      if (value[b] == 0) {
        value[b] = v;
      }
      return value[b] == v;
    };
    for (std::size_t t = 0; t < upper.size(); ++t) {
      if (!visit(p.upper()[t], upper[t])) {
        return 0;
      }
    }
    for (std::size_t t = 0; t < lower.size(); ++t) {
      if (!visit(p.lower()[t], lower[t])) {
        return 0;
      }
    }
    return 1;
  }

  MultiIndex decode_index(std::uint64_t code, std::size_t length, std::size_t n) {
    MultiIndex idx(length);
    for (std::size_t t = length; t-- > 0;) {
      idx[t] = static_cast<std::uint32_t>(code % n + 1);
      code /= n;
    }
    return idx;
  }

  std::uint64_t encode_index(MultiIndex const& idx, std::size_t n) {
    std::uint64_t code = 0;
    for (auto v : idx) {
      code = code * n + (v - 1);
    }
    return code;
  }

  namespace {
    std::uint64_t checked_power(std::size_t n, std::size_t e, std::uint64_t limit,
                                char const* what) {
      std::uint64_t r = 1;
      for (std::size_t t = 0; t < e; ++t) {
        if (r > limit / std::max<std::size_t>(n, 1)) {
          throw std::invalid_argument(std::string(what) + " exceeds the size budget");
        }
        r *= n;
      }
      return r;
    }
  }  // namespace

  SparseTensorMap T_of(Partition const& p, std::size_t n) {
    if (n < 1) {
      throw std::invalid_argument("T_of needs n >= 1");
    }
    std::size_t const blocks = p.block_count();
    checked_power(n, blocks, 50'000'000, "number of T entries");
    SparseTensorMap t;
    t.n     = n;
    t.k_in  = p.upper_count();
    t.l_out = p.lower_count();
    std::vector<std::size_t> value(blocks, 0);
    while (true) {
      std::uint64_t in = 0, out = 0;
      for (Label b : p.upper()) {
        in = in * n + value[b];
      }
      for (Label b : p.lower()) {
        out = out * n + value[b];
      }
      t.entries.emplace_back(out, in);
      std::size_t b = 0;
      while (b < blocks && value[b] + 1 == n) {
        value[b++] = 0;
      }
      if (b == blocks) {
        break;
      }
      ++value[b];
    }
    std::sort(t.entries.begin(), t.entries.end());
    return t;
  }

  IntMatrix SparseTensorMap::dense() const {
    auto const rows = checked_power(n, l_out, 1'000'000, "dense T");
    auto const cols = checked_power(n, k_in, 1'000'000, "dense T");
    IntMatrix  m    = IntMatrix::Zero(static_cast<Eigen::Index>(rows),
                                      static_cast<Eigen::Index>(cols));
    for (auto [out, in] : entries) {
      m(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) = 1;
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // representations
  ////////////////////////////////////////////////////////////////////////

  Representation Representation::transposed() const {
    Representation r = *this;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        r.at(i, j) = at(j, i);
      }
    }
    return r;
  }

  Representation read_representation(std::istream& in) {
    Representation rep;
    long long      n = 0, dim = 0;
    if (!(in >> n >> dim) || n < 1 || dim < 1 || n > 16 || dim > 4096) {
      throw std::invalid_argument("representation file: bad header (n dim)");
    }
    rep.n   = static_cast<std::size_t>(n);
    rep.dim = static_cast<std::size_t>(dim);
    for (std::size_t m = 0; m < rep.n * rep.n; ++m) {
      IntMatrix a(dim, dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
          long long v = 0;
          if (!(in >> v)) {
            throw std::invalid_argument("representation file: expected "
                                        + std::to_string(n * n) + " matrices of size "
                                        + std::to_string(dim));
          }
          a(r, c) = v;
        }
      }
      rep.u.push_back(std::move(a));
    }
    std::string extra;
    if (in >> extra) {
      throw std::invalid_argument("representation file: trailing data '" + extra + "'");
    }
    return rep;
  }

  void write_representation(std::ostream& out, Representation const& rep) {
    out << rep.n << ' ' << rep.dim << '\n';
    for (std::size_t i = 1; i <= rep.n; ++i) {
      for (std::size_t j = 1; j <= rep.n; ++j) {
        IntMatrix const& a = rep.at(i, j);
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
          for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out << (c ? " " : "") << a(r, c);
          }
          out << '\n';
        }
        out << '\n';
      }
    }
  }

  namespace {

    std::string uname(std::size_t i, std::size_t j) {
      return "u" + std::to_string(i) + std::to_string(j);
    }

    void fail(CheckResult& r, std::string what) {
      r.holds = false;
      if (r.failures.size() < 10) {
        r.failures.push_back(std::move(what));
      }
    }

    IntMatrix identity(std::size_t dim) {
      return IntMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
    }

    std::vector<IntMatrix> squares(Representation const& rep) {
      std::vector<IntMatrix> sq;
      for (auto const& a : rep.u) {
        sq.push_back(a * a);
      }
      return sq;
    }

  }  // namespace

  RepFlags rep_flags(Representation const& rep) {
    RepFlags f;
    auto     note = [&](std::string s) {
      if (f.failures.size() < 10) {
        f.failures.push_back(std::move(s));
      }
    };
    std::size_t const n  = rep.n;
    auto const        sq = squares(rep);
    IntMatrix const   one = identity(rep.dim);
    f.self_adjoint = f.squares_projections = f.row_sums = f.column_sums = f.orthogonality
        = true;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        IntMatrix const& a = rep.at(i, j);
        if (a != a.transpose()) {
          f.self_adjoint = false;
          note(uname(i, j) + " is not self-adjoint");
        }
        IntMatrix const& s = sq[(i - 1) * n + (j - 1)];
        if (s * s != s || s != s.transpose()) {
          f.squares_projections = false;
          note(uname(i, j) + "^2 is not a projection");
        }
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      IntMatrix row = IntMatrix::Zero(one.rows(), one.cols());
      IntMatrix col = row;
      for (std::size_t k = 1; k <= n; ++k) {
        row += sq[(i - 1) * n + (k - 1)];
        col += sq[(k - 1) * n + (i - 1)];
      }
      if (row != one) {
        f.row_sums = false;
        note("squares of row " + std::to_string(i) + " do not sum to 1");
      }
      if (col != one) {
        f.column_sums = false;
        note("squares of column " + std::to_string(i) + " do not sum to 1");
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (i == j) {
          continue;
        }
        for (std::size_t k = 1; k <= n; ++k) {
          if (!(rep.at(i, k) * rep.at(j, k)).isZero()) {
            f.orthogonality = false;
            note(uname(i, k) + " " + uname(j, k) + " != 0");
          }
          if (!(rep.at(k, i) * rep.at(k, j)).isZero()) {
            f.orthogonality = false;
            note(uname(k, i) + " " + uname(k, j) + " != 0");
          }
        }
      }
    }
    return f;
  }

  RelationKind parse_relation_kind(std::string const& text) {
    if (text == "i") {
      return RelationKind::i;
    }
    if (text == "ii") {
      return RelationKind::ii;
    }
    if (text == "iii") {
      return RelationKind::iii;
    }
    if (text == "iv") {
      return RelationKind::iv;
    }
    throw std::invalid_argument("relation kind must be i, ii, iii or iv");
  }

  std::string to_string(RelationKind k) {
    switch (k) {
      case RelationKind::i:
        return "i";
      case RelationKind::ii:
        return "ii";
      case RelationKind::iii:
        return "iii";
      case RelationKind::iv:
        return "iv";
    }
    return "?";
  }

  CheckResult relation_check(Representation const& rep, RelationKind kind) {
    CheckResult       r;
    r.holds           = true;
    std::size_t const n  = rep.n;
    auto const        sq = squares(rep);
    auto              s  = [&](std::size_t i, std::size_t j) -> IntMatrix const& {
      return sq[(i - 1) * n + (j - 1)];
    };
    switch (kind) {
      case RelationKind::i:
      case RelationKind::ii: {
        RepFlags f = rep_flags(rep);
        r.checked  = n * n;
        bool ok = kind == RelationKind::i ? f.self_adjoint && f.squares_projections
                                          : f.row_sums && f.column_sums;
        if (!ok) {
          for (auto const& line : f.failures) {
            bool relevant = kind == RelationKind::i
                                ? line.find("self-adjoint") != std::string::npos
                                      || line.find("projection") != std::string::npos
                                : line.find("sum") != std::string::npos;
            if (relevant) {
              fail(r, line);
            }
          }
          r.holds = false;
        }
        return r;
      }
      case RelationKind::iii:
      case RelationKind::iv:
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t k = 1; k <= n; ++k) {
              for (std::size_t l = 1; l <= n; ++l) {
                ++r.checked;
                IntMatrix const& other = kind == RelationKind::iii ? s(k, l) : rep.at(k, l);
                if (s(i, j) * other != other * s(i, j)) {
                  fail(r, "(" + std::to_string(i) + "," + std::to_string(j) + ","
                              + std::to_string(k) + "," + std::to_string(l) + ")");
                }
              }
            }
          }
        }
        return r;
    }
    return r;
  }

  CheckResult intertwines(Representation const& rep, Partition const& p,
                          std::uint64_t budget) {
    RepFlags const flags = rep_flags(rep);
    if (!flags.all()) {
      std::string msg = "representation violates the hyperoctahedral relations:";
      for (auto const& f : flags.failures) {
        msg += " " + f + ";";
      }
      throw std::invalid_argument(msg);
    }
    std::size_t const   n    = rep.n;
    std::size_t const   k    = p.upper_count();
    std::size_t const   l    = p.lower_count();
    std::uint64_t const ins  = checked_power(n, k, budget, "n^k");
    std::uint64_t const outs = checked_power(n, l, budget, "n^l");

    SparseTensorMap const                   t = T_of(p, n);
    std::vector<std::vector<std::uint64_t>> by_in(ins), by_out(outs);
    for (auto [out, in] : t.entries) {
      by_in[in].push_back(out);
      by_out[out].push_back(in);
    }
    IntMatrix const one  = identity(rep.dim);
    IntMatrix const zero = IntMatrix::Zero(one.rows(), one.cols());
    // product u_{a1 b1} ... u_{am bm}
    auto chain = [&](std::uint64_t a, std::uint64_t b, std::size_t m) {
      MultiIndex const ai = decode_index(a, m, n);
      MultiIndex const bi = decode_index(b, m, n);
      IntMatrix        r  = one;
      for (std::size_t t2 = 0; t2 < m; ++t2) {
        r = r * rep.at(ai[t2], bi[t2]);
      }
      return r;
    };

    CheckResult r;
    r.holds = true;
    for (std::uint64_t i = 0; i < outs; ++i) {
      for (std::uint64_t j = 0; j < ins; ++j) {
        ++r.checked;
        if (by_in[j].empty() && by_out[i].empty()) {
          continue;
        }
        IntMatrix lhs = zero, rhs = zero;
        for (std::uint64_t s : by_in[j]) {
          lhs += chain(i, s, l);
        }
        for (std::uint64_t q : by_out[i]) {
          rhs += chain(q, j, k);
        }
        if (lhs != rhs) {
          std::string tuple = "out(";
          for (auto v : decode_index(i, l, n)) {
            tuple += std::to_string(v);
          }
          tuple += ") in(";
          for (auto v : decode_index(j, k, n)) {
            tuple += std::to_string(v);
          }
          fail(r, tuple + ")");
        }
      }
    }
    return r;
  }

  Representation counterexample_rep() {
    Representation rep;
    rep.n   = 3;
    rep.dim = 3;
    auto proj = [](std::initializer_list<int> d) {
      IntMatrix m = IntMatrix::Zero(3, 3);
      int       t = 0;
      for (int v : d) {
        m(t, t) = v;
        ++t;
      }
      return m;
    };
    IntMatrix swap = IntMatrix::Zero(3, 3);
    swap(0, 1) = swap(1, 0) = 1;
    IntMatrix const p1 = proj({1, 0, 0}), p2 = proj({0, 1, 0}), p3 = proj({0, 0, 1});
    rep.u.assign(9, IntMatrix::Zero(3, 3));
    rep.at(1, 1) = swap;
    rep.at(2, 2) = p1;
    rep.at(1, 2) = rep.at(2, 1) = p3;
    rep.at(2, 3) = rep.at(3, 2) = p2;
    rep.at(3, 3) = p1 + p3;
    return rep;
  }

  Representation diagonal_sign_rep(std::vector<std::vector<std::size_t>> const& perms,
                                   std::vector<std::vector<int>> const&         signs) {
    if (perms.empty() || perms.size() != signs.size()) {
      throw std::invalid_argument("diagonal rep needs one permutation and sign row "
                                  "per basis vector");
    }
    Representation rep;
    rep.n   = perms.front().size();
    rep.dim = perms.size();
    rep.u.assign(rep.n * rep.n, IntMatrix::Zero(rep.dim, rep.dim));
    for (std::size_t t = 0; t < rep.dim; ++t) {
      if (perms[t].size() != rep.n || signs[t].size() != rep.n) {
        throw std::invalid_argument("diagonal rep: inconsistent sizes");
      }
      for (std::size_t i = 1; i <= rep.n; ++i) {
        std::size_t j = perms[t][i - 1];
        if (j < 1 || j > rep.n || (signs[t][i - 1] != 1 && signs[t][i - 1] != -1)) {
          throw std::invalid_argument("diagonal rep: bad permutation or sign");
        }
        rep.at(i, j)(t, t) = signs[t][i - 1];
      }
    }
    return rep;
  }

  Representation builtin_rep(std::string const& name) {
    if (name == "counterexample") {
      return counterexample_rep();
    }
    if (name == "diagonal") {
      return diagonal_sign_rep({{1, 2, 3}, {2, 1, 3}, {3, 1, 2}},
                               {{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}});
    }
    throw std::invalid_argument("unknown built-in representation '" + name
                                + "' (counterexample, diagonal)");
  }

  Representation random_block_rep(std::size_t n, std::size_t dim, bool coherent,
                                  std::mt19937_64& rng) {
    if (n < 1 || dim < 1) {
      throw std::invalid_argument("random rep needs n, dim >= 1");
    }
    auto coin = [&]() { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };
    // a small pool of distinct permutations so that equal ones repeat
    std::vector<std::vector<std::size_t>> pool;
    std::vector<std::size_t>              perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t(1));
    do {
      pool.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()) && pool.size() < 5040);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t const pool_size = std::uniform_int_distribution<std::size_t>(
        1, std::min<std::size_t>(3, pool.size()))(rng);
    pool.resize(pool_size);
    std::vector<std::size_t> of(dim);
    for (auto& x : of) {
      x = std::uniform_int_distribution<std::size_t>(0, pool_size - 1)(rng);
    }
    Representation rep;
    rep.n   = n;
    rep.dim = dim;
    rep.u.assign(n * n, IntMatrix::Zero(dim, dim));
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        std::vector<std::size_t> support;
        for (std::size_t t = 0; t < dim; ++t) {
          if (pool[of[t]][i - 1] == j) {
            support.push_back(t);
          }
        }
        std::shuffle(support.begin(), support.end(), rng);
        IntMatrix&  a = rep.at(i, j);
        std::size_t s = 0;
        while (s < support.size()) {
          std::size_t const t    = support[s];
          int const         sign = coin() ? 1 : -1;
          bool const        can_pair
              = s + 1 < support.size()
                && (!coherent || pool[of[t]] == pool[of[support[s + 1]]]);
          if (can_pair && (!coherent || coin())) {
            std::size_t const t2 = support[s + 1];
            a(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(t2)) = sign;
            a(static_cast<Eigen::Index>(t2), static_cast<Eigen::Index>(t)) = sign;
            s += 2;
          } else {
            a(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(t)) = sign;
            s += 1;
          }
        }
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // words of generators
  ////////////////////////////////////////////////////////////////////////

  WordProjection word_projection_check(
      Representation const& rep, Partition const& p,
      std::vector<std::pair<std::size_t, std::size_t>> const& choice, std::size_t split) {
    if (!p.is_one_row() || !is_single_leg(p)) {
      throw std::invalid_argument("word projection needs a one-row single-leg partition");
    }
    if (choice.size() < p.block_count()) {
      throw std::invalid_argument("word projection needs a generator per block");
    }
    for (auto [i, j] : choice) {
      if (i < 1 || j < 1 || i > rep.n || j > rep.n) {
        throw std::invalid_argument("generator index out of range");
      }
    }
    std::size_t const k = p.lower_count();
    if (k > 0 && (split < 1 || split > k)) {
      throw std::invalid_argument("split must lie in 1..k");
    }
    auto gen = [&](std::size_t t) -> IntMatrix const& {
      auto [i, j] = choice[p.lower()[t]];
      return rep.at(i, j);
    };
    IntMatrix const one = identity(rep.dim);
    WordProjection  w;
    w.product = one;
    w.q       = one;
    for (std::size_t t = 0; t < k; ++t) {
      w.product = w.product * gen(t);
      w.q       = w.q * (gen(t) * gen(t));
    }
    w.product_is_q = w.product == w.q;
    IntMatrix left = w.q, right = w.q;
    for (std::size_t t = 0; t < split; ++t) {
      left = left * gen(t);
    }
    for (std::size_t t = k; t-- > split;) {
      right = right * gen(t);
    }
    w.split_holds = left == right;
    return w;
  }

  WordProjectionSearch word_projection_search(Representation const& rep,
                                              Partition const&      p) {
    std::size_t const blocks = p.block_count();
    checked_power(rep.n * rep.n, blocks, 10'000'000, "number of choices");
    std::vector<std::pair<std::size_t, std::size_t>> choice(blocks, {1, 1});
    WordProjectionSearch                             s;
    while (true) {
      ++s.choices;
      if (!word_projection_check(rep, p, choice, std::max<std::size_t>(1, p.lower_count()))
               .product_is_q
          && !s.first_failure) {
        s.first_failure = choice;
      }
      std::size_t b = 0;
      while (b < blocks) {
        auto& [i, j] = choice[b];
        if (j < rep.n) {
          ++j;
          break;
        }
        j = 1;
        if (i < rep.n) {
          ++i;
          break;
        }
        i = 1;
        ++b;
      }
      if (b == blocks) {
        break;
      }
    }
    return s;
  }

  TransposeReport transpose_symmetry_check(Representation const&         rep,
                                           std::vector<Partition> const& partitions) {
    Representation const t = rep.transposed();
    TransposeReport      r;
    auto                 compare = [&](std::string const& what, bool a, bool b) {
      if (a != b) {
        r.differences.push_back(what + ": " + (a ? "true" : "false") + " vs "
                                + (b ? "true" : "false") + " after transposing");
      }
    };
    compare("hyperoctahedral flags", rep_flags(rep).all(), rep_flags(t).all());
    for (auto kind : {RelationKind::i, RelationKind::ii, RelationKind::iii, RelationKind::iv}) {
      compare("relation " + to_string(kind), relation_check(rep, kind).holds,
              relation_check(t, kind).holds);
    }
    if (rep_flags(rep).all() && rep_flags(t).all()) {
      for (auto const& p : partitions) {
        compare("intertwines " + p.render(), intertwines(rep, p).holds,
                intertwines(t, p).holds);
      }
    }
    r.unchanged = r.differences.empty();
    return r;
  }

}  // namespace partlab
