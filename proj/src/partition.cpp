#include "partlab/partition.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace partlab {

  namespace {

    constexpr std::size_t max_blocks_text = 52;

    char letter_of(std::size_t b) {
      if (b >= max_blocks_text) {
        throw std::out_of_range("partition has more than 52 blocks");
      }
      return b < 26 ? static_cast<char>('a' + b) : static_cast<char>('A' + b - 26);
    }

    int index_of(char c) {
      if (c >= 'a' && c <= 'z') {
        return c - 'a';
      }
      if (c >= 'A' && c <= 'Z') {
        return 26 + (c - 'A');
      }
      return -1;
    }

    // Union-find over small integer ids.
    struct Dsu {
      explicit Dsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
      std::vector<std::size_t> parent;
    };

    std::vector<int> widen(std::vector<Label> const& v) {
      return {v.begin(), v.end()};
    }

    std::vector<Label> runs_reduced(std::vector<Label> const& row) {
      std::vector<Label> out;
      std::size_t        i = 0;
      while (i < row.size()) {
        std::size_t j = i;
        while (j < row.size() && row[j] == row[i]) {
          ++j;
        }
        if ((j - i) % 2 == 1) {
          out.push_back(row[i]);
        }
        i = j;
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<int> const& upper,
                       std::vector<int> const& lower) {
    std::vector<std::pair<int, Label>> seen;
    auto                               relabel = [&](int x) -> Label {
      for (auto const& [from, to] : seen) {
        if (from == x) {
          return to;
        }
      }
      if (seen.size() >= 255) {
        throw std::out_of_range("too many blocks");
      }
      Label fresh = static_cast<Label>(seen.size());
      seen.emplace_back(x, fresh);
      return fresh;
    };
    _upper.reserve(upper.size());
    _lower.reserve(lower.size());
    for (int x : upper) {
      _upper.push_back(relabel(x));
    }
    for (int x : lower) {
      _lower.push_back(relabel(x));
    }
    _blocks = seen.size();
  }

  Partition Partition::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos
        || text.find(':', colon + 1) != std::string_view::npos) {
      throw std::invalid_argument("partition text needs exactly one ':' in '"
                                  + std::string(text) + "'");
    }
    std::vector<int> rows[2];
    for (int r = 0; r < 2; ++r) {
      auto part = r == 0 ? text.substr(0, colon) : text.substr(colon + 1);
      for (char c : part) {
        int b = index_of(c);
        if (b < 0) {
          throw std::invalid_argument("bad character '" + std::string(1, c)
                                      + "' in partition text '"
                                      + std::string(text) + "'");
        }
        rows[r].push_back(b);
      }
    }
    return Partition(rows[0], rows[1]);
  }

  std::string Partition::render() const {
    std::string s;
    s.reserve(point_count() + 1);
    for (Label b : _upper) {
      s += letter_of(b);
    }
    s += ':';
    for (Label b : _lower) {
      s += letter_of(b);
    }
    return s;
  }

  std::vector<Label> Partition::clockwise() const {
    std::vector<Label> c(_upper);
    c.insert(c.end(), _lower.rbegin(), _lower.rend());
    return c;
  }

  std::strong_ordering Partition::operator<=>(Partition const& other) const {
    if (auto c = point_count() <=> other.point_count(); c != 0) {
      return c;
    }
    if (auto c = _upper.size() <=> other._upper.size(); c != 0) {
      return c;
    }
    if (auto c = _upper <=> other._upper; c != 0) {
      return c;
    }
    return _lower <=> other._lower;
  }

  std::size_t PartitionHash::operator()(Partition const& p) const noexcept {
    std::size_t h = 1469598103934665603ull ^ p.upper_count();
    for (Label b : p.upper()) {
      h = (h ^ b) * 1099511628211ull;
    }
    h = (h ^ 0xff) * 1099511628211ull;
    for (Label b : p.lower()) {
      h = (h ^ b) * 1099511628211ull;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // named partitions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string normalize_name(std::string_view name) {
      std::string s;
      for (char c : name) {
        if (c != '-' && c != '_' && c != ' ') {
          s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
      }
      return s;
    }
  }  // namespace

  std::vector<std::string> named_partition_names() {
    return {"pair",      "unit",     "singleton", "double-singleton",
            "fourblock", "h",        "crossing",  "halflib",
            "primary",   "fatcross", "k"};
  }

  Partition make_named(std::string_view name, std::optional<int> parameter) {
    std::string const n = normalize_name(name);
    auto              need = [&]() -> int {
      if (!parameter) {
        throw std::invalid_argument("named partition '" + std::string(name)
                                    + "' needs an integer parameter");
      }
      if (*parameter < 1) {
        throw std::invalid_argument("parameter of '" + std::string(name)
                                    + "' must be >= 1");
      }
      return *parameter;
    };
    if (n == "pair") {
      return Partition::parse(":aa");
    }
    if (n == "unit" || n == "identity") {
      return Partition::parse("a:a");
    }
    if (n == "singleton") {
      return Partition::parse(":a");
    }
    if (n == "doublesingleton") {
      return Partition::parse(":ab");
    }
    if (n == "fourblock") {
      return Partition::parse(":aaaa");
    }
    if (n == "crossing") {
      return Partition::parse("ab:ba");
    }
    if (n == "halflib" || n == "halfliberating") {
      return Partition::parse("abc:cba");
    }
    if (n == "primary" || n == "pairpositioner") {
      return Partition::parse("aab:baa");
    }
    if (n == "fatcross" || n == "fatcrossing") {
      return Partition::parse("aabb:bbaa");
    }
    if (n == "h") {
      int              s = need();
      std::vector<int> lower;
      for (int i = 0; i < 2 * s; ++i) {
        lower.push_back(i % 2);
      }
      return Partition({}, lower);
    }
    if (n == "k") {
      int              l = need();
      std::vector<int> row{0};
      for (int i = 1; i <= l; ++i) {
        row.push_back(i);
      }
      row.push_back(0);
      return Partition(row, row);
    }
    throw std::invalid_argument("unknown partition name '" + std::string(name)
                                + "'");
  }

  Partition named_or_literal(std::string_view text) {
    if (text.find(':') != std::string_view::npos) {
      return Partition::parse(text);
    }
    std::string const n = normalize_name(text);
    if ((n[0] == 'h' || n[0] == 'k') && n.size() > 1
        && std::all_of(n.begin() + 1, n.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return make_named(n.substr(0, 1), std::stoi(n.substr(1)));
    }
    return make_named(n);
  }

  Partition identity_partition(std::size_t n) {
    std::vector<int> row(n);
    std::iota(row.begin(), row.end(), 0);
    return Partition(row, row);
  }

  ////////////////////////////////////////////////////////////////////////
  // category operations
  ////////////////////////////////////////////////////////////////////////

  Partition tensor(Partition const& p, Partition const& q) {
    int const        shift = static_cast<int>(p.block_count());
    std::vector<int> upper = widen(p.upper());
    std::vector<int> lower = widen(p.lower());
    for (Label b : q.upper()) {
      upper.push_back(shift + b);
    }
    for (Label b : q.lower()) {
      lower.push_back(shift + b);
    }
    return Partition(upper, lower);
  }

  Composition compose(Partition const& p, Partition const& q) {
    if (q.lower_count() != p.upper_count()) {
      throw std::invalid_argument("cannot compose: lower row of " + q.render()
                                  + " has " + std::to_string(q.lower_count())
                                  + " points, upper row of " + p.render()
                                  + " has " + std::to_string(p.upper_count()));
    }
    std::size_t const offset = q.block_count();
    Dsu               dsu(offset + p.block_count());
    for (std::size_t t = 0; t < p.upper_count(); ++t) {
      dsu.unite(q.lower()[t], offset + p.upper()[t]);
    }
    std::vector<int>  upper, lower;
    std::vector<bool> outer(offset + p.block_count(), false);
    for (Label b : q.upper()) {
      std::size_t r = dsu.find(b);
      outer[r]      = true;
      upper.push_back(static_cast<int>(r));
    }
    for (Label b : p.lower()) {
      std::size_t r = dsu.find(offset + b);
      outer[r]      = true;
      lower.push_back(static_cast<int>(r));
    }
    std::size_t loops = 0;
    for (std::size_t x = 0; x < outer.size(); ++x) {
      if (dsu.find(x) == x && !outer[x]) {
        ++loops;
      }
    }
    return {Partition(upper, lower), loops};
  }

  Partition involution(Partition const& p) {
    return Partition(widen(p.lower()), widen(p.upper()));
  }

  Partition rotate(Partition const& p, Side side, Direction direction) {
    std::vector<int> upper = widen(p.upper());
    std::vector<int> lower = widen(p.lower());
    auto&            from  = direction == Direction::up ? lower : upper;
    auto&            to    = direction == Direction::up ? upper : lower;
    if (from.empty()) {
      throw std::invalid_argument("cannot rotate " + p.render()
                                  + ": source row is empty");
    }
    if (side == Side::left) {
      int x = from.front();
      from.erase(from.begin());
      to.insert(to.begin(), x);
    } else {
      int x = from.back();
      from.pop_back();
      to.push_back(x);
    }
    return Partition(upper, lower);
  }

  Partition one_row(Partition const& p) {
    Partition r = p;
    while (r.upper_count() > 0) {
      r = rotate(r, Side::right, Direction::down);
    }
    return r;
  }

  Partition lift(Partition const& one_row_form, std::size_t upper) {
    if (!one_row_form.is_one_row() || upper > one_row_form.lower_count()) {
      throw std::invalid_argument("lift needs a one-row partition with enough points");
    }
    Partition r = one_row_form;
    for (std::size_t i = 0; i < upper; ++i) {
      r = rotate(r, Side::right, Direction::up);
    }
    return r;
  }

  Partition connect_blocks(Partition const& p, std::size_t b1, std::size_t b2) {
    if (b1 >= p.block_count() || b2 >= p.block_count()) {
      throw std::invalid_argument("unknown block id for " + p.render());
    }
    if (b1 == b2) {
      throw std::invalid_argument("connect_blocks needs two distinct blocks");
    }
    auto map = [&](Label b) {
      return static_cast<int>(b == b2 ? b1 : b);
    };
    std::vector<int> upper, lower;
    for (Label b : p.upper()) {
      upper.push_back(map(b));
    }
    for (Label b : p.lower()) {
      lower.push_back(map(b));
    }
    return Partition(upper, lower);
  }

  ////////////////////////////////////////////////////////////////////////
  // words
  ////////////////////////////////////////////////////////////////////////

  std::string BlockWord::to_string() const {
    std::string s;
    for (auto const& [b, k] : groups) {
      s += letter_of(b);
      if (k != 1) {
        s += '^' + std::to_string(k);
      }
    }
    return s.empty() ? "e" : s;
  }

  BlockWord block_word(Partition const& p) {
    if (!p.is_one_row()) {
      throw std::invalid_argument("block_word needs a one-row partition, got "
                                  + p.render());
    }
    BlockWord w;
    for (Label b : p.lower()) {
      if (!w.groups.empty() && w.groups.back().first == b) {
        ++w.groups.back().second;
      } else {
        w.groups.emplace_back(b, 1);
      }
    }
    w.length = p.lower_count();
    return w;
  }

  Z2Word word_of(Partition const& p) {
    std::vector<Letter> labelling(p.block_count(), 0);
    Letter              next = 1;
    for (Label b : p.clockwise()) {
      if (labelling[b] == 0) {
        labelling[b] = next++;
      }
    }
    return word_of(p, labelling);
  }

  Z2Word word_of(Partition const& p, std::vector<Letter> const& labelling) {
    if (labelling.size() < p.block_count()) {
      throw std::invalid_argument("labelling does not cover every block");
    }
    std::vector<Letter> letters;
    for (Label b : p.clockwise()) {
      letters.push_back(labelling[b]);
    }
    return Z2Word::reduce(letters);
  }

  Partition simplify_step(Partition const& p) {
    Partition r = one_row(p);
    auto      v = runs_reduced(r.lower());
    return Partition({}, widen(v));
  }

  Partition simplify(Partition const& p) {
    Partition r = one_row(p);
    while (true) {
      Partition next = simplify_step(r);
      if (next == r) {
        return r;
      }
      r = std::move(next);
    }
  }

  bool is_single_leg(Partition const& p) {
    Partition r = one_row(p);
    auto const& v = r.lower();
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] == v[i - 1]) {
        return false;
      }
    }
    return true;
  }

  bool equivalent(Partition const& p, Partition const& q) {
    return simplify(p) == simplify(q);
  }

  bool is_noncrossing(Partition const& p) {
    auto const        c = p.clockwise();
    std::size_t const n = c.size();
    std::vector<int>  first(p.block_count(), -1), last(p.block_count(), -1);
    for (std::size_t i = 0; i < n; ++i) {
      if (first[c[i]] < 0) {
        first[c[i]] = static_cast<int>(i);
      }
      last[c[i]] = static_cast<int>(i);
    }
    // Between two consecutive points of a block, every other block must be
    // either entirely inside or entirely outside.
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + 1;
      while (j < n && c[j] != c[i]) {
        ++j;
      }
      if (j >= n) {
        continue;
      }
      for (std::size_t t = i + 1; t < j; ++t) {
        if (first[c[t]] < static_cast<int>(i) || last[c[t]] > static_cast<int>(j)) {
          return false;
        }
      }
    }
    return true;
  }

  bool all_blocks_even(Partition const& p) {
    std::vector<std::size_t> size(p.block_count(), 0);
    for (Label b : p.upper()) {
      ++size[b];
    }
    for (Label b : p.lower()) {
      ++size[b];
    }
    return std::all_of(size.begin(), size.end(),
                       [](std::size_t s) { return s % 2 == 0; });
  }

  ////////////////////////////////////////////////////////////////////////
  // rotation classes
  ////////////////////////////////////////////////////////////////////////

  std::string orbit_key(Label const* word, std::size_t n) {
    std::string best;
    if (n == 0) {
      return best;
    }
    std::array<std::uint16_t, 256> stamp{};
    std::array<Label, 256>         relabel{};
    std::uint16_t                  epoch = 0;
    std::string                    cand(n, '\0');
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t s = 0; s < n; ++s) {
        ++epoch;
        Label next   = 0;
        bool  better = best.empty();
        bool  worse  = false;
        for (std::size_t t = 0; t < n && !worse; ++t) {
          std::size_t idx = dir == 0 ? (s + t) % n : (s + n - t) % n;
          Label       x   = word[idx];
          if (stamp[x] != epoch) {
            stamp[x]   = epoch;
            relabel[x] = next++;
          }
          char ch = static_cast<char>(relabel[x]);
          cand[t] = ch;
          if (!better) {
            if (ch < best[t]) {
              better = true;
            } else if (ch > best[t]) {
              worse = true;
            }
          }
        }
        if (better && !worse) {
          best = cand;
        }
      }
    }
    return best;
  }

  std::string orbit_key(Partition const& p) {
    auto c = p.clockwise();
    return orbit_key(c.data(), c.size());
  }

  Partition from_key(std::string const& key) {
    std::vector<int> lower;
    for (char ch : key) {
      lower.push_back(static_cast<unsigned char>(ch));
    }
    return Partition({}, lower);
  }

  Partition orbit_representative(Partition const& p) {
    return from_key(orbit_key(p));
  }

  namespace {
    template <class Visit>
    void restricted_growth_rec(std::vector<int>& rg, std::size_t i, int used,
                               Visit& visit) {
      if (i == rg.size()) {
        visit(rg);
        return;
      }
      for (int b = 0; b <= used; ++b) {
        rg[i] = b;
        restricted_growth_rec(rg, i + 1, b == used ? used + 1 : used, visit);
      }
    }

    template <class Visit>
    void restricted_growth(std::size_t n, Visit&& visit) {
      std::vector<int> rg(n, 0);
      restricted_growth_rec(rg, 0, 0, visit);
    }
  }  // namespace

  std::vector<Partition> all_partitions(std::size_t k, std::size_t l) {
    std::vector<Partition> out;
    restricted_growth(k + l, [&](std::vector<int> const& rg) {
      out.emplace_back(std::vector<int>(rg.begin(), rg.begin() + k),
                       std::vector<int>(rg.begin() + k, rg.end()));
    });
    return out;
  }

  std::vector<Partition> all_one_row_orbits(std::size_t max_points) {
    std::vector<Partition> out;
    for (std::size_t n = 0; n <= max_points; ++n) {
      std::set<std::string> keys;
      restricted_growth(n, [&](std::vector<int> const& rg) {
        std::vector<Label> w(rg.begin(), rg.end());
        keys.insert(orbit_key(w.data(), w.size()));
      });
      for (auto const& key : keys) {
        out.push_back(from_key(key));
      }
    }
    return out;
  }

}  // namespace partlab
