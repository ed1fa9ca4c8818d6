#include "partlab/closure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "partlab/parallel.hpp"

namespace partlab {

  std::string to_string(Tri t) {
    switch (t) {
      case Tri::yes:
        return "yes";
      case Tri::no:
        return "no";
      case Tri::unknown:
        return "unknown";
    }
    return "?";
  }

  namespace {

    struct Variant {
      std::vector<Label> labels;  // relabelled in first-occurrence order
      std::uint16_t      rot  = 0;
      std::uint8_t       refl = 0;
      Label              blocks = 0;
    };

    std::vector<Label> variant_of(std::string const& key, bool refl,
                                  std::size_t rot) {
      std::size_t const  n = key.size();
      std::vector<Label> v(n);
      for (std::size_t t = 0; t < n; ++t) {
        std::size_t src = refl ? (n - 1 - (rot + t) % n) : (rot + t) % n;
        v[t]            = static_cast<Label>(key[src]);
      }
      return v;
    }

    Label relabel_in_place(std::vector<Label>& v) {
      std::array<int, 256> map;
      map.fill(-1);
      Label next = 0;
      for (auto& x : v) {
        if (map[x] < 0) {
          map[x] = next++;
        }
        x = static_cast<Label>(map[x]);
      }
      return next;
    }

    // Distinct relabelled variants, first (refl, rot) wins.
    std::vector<Variant> variants_of(std::string const& key) {
      std::vector<Variant>              out;
      std::set<std::vector<Label>>      seen;
      for (std::uint8_t refl = 0; refl < 2; ++refl) {
        for (std::size_t rot = 0; rot < key.size(); ++rot) {
          auto  v      = variant_of(key, refl, rot);
          Label blocks = relabel_in_place(v);
          if (seen.insert(v).second) {
            out.push_back({std::move(v), static_cast<std::uint16_t>(rot), refl,
                           blocks});
          }
        }
      }
      return out;
    }

    // Rotations of a class, relabelled, without repeats.
    std::vector<Variant> rotations_of(std::string const& key) {
      std::vector<Variant>         out;
      std::set<std::vector<Label>> seen;
      for (std::size_t rot = 0; rot < key.size(); ++rot) {
        auto  v      = variant_of(key, false, rot);
        Label blocks = relabel_in_place(v);
        if (seen.insert(v).second) {
          out.push_back({std::move(v), static_cast<std::uint16_t>(rot), 0, blocks});
        }
      }
      return out;
    }

    // first[0..a-j) second[j..b), first[a-1-t] joined with second[t].
    struct Joiner {
      std::array<Label, 512> parent;
      std::array<int, 512>   relabel;
      std::vector<Label>     out;

      Label root(Label v) {
        while (parent[v] != v) {
          v = parent[v];
        }
        return v;
      }

      std::string operator()(std::vector<Label> const& first, Label first_blocks,
                             std::vector<Label> const& second, Label second_blocks,
                             std::size_t j) {
        std::size_t const a     = first.size();
        std::size_t const b     = second.size();
        std::size_t const total = std::size_t(first_blocks) + second_blocks;
        for (std::size_t v = 0; v < total; ++v) {
          parent[v]  = static_cast<Label>(v);
          relabel[v] = -1;
        }
        for (std::size_t t = 0; t < j; ++t) {
          Label u = root(first[a - 1 - t]);
          Label w = root(static_cast<Label>(first_blocks + second[t]));
          if (u != w) {
            parent[std::max(u, w)] = std::min(u, w);
          }
        }
        out.clear();
        int  next = 0;
        auto emit = [&](Label v) {
          Label r = root(v);
          if (relabel[r] < 0) {
            relabel[r] = next++;
          }
          out.push_back(static_cast<Label>(relabel[r]));
        };
        for (std::size_t t = 0; t + j < a; ++t) {
          emit(first[t]);
        }
        for (std::size_t t = j; t < b; ++t) {
          emit(static_cast<Label>(first_blocks + second[t]));
        }
        return orbit_key(out.data(), out.size());
      }
    };

    struct Cand {
      Step          step;
      std::uint64_t cost = 0;
    };

    bool better(Cand const& x, Cand const& y) {
      if (x.cost != y.cost) {
        return x.cost < y.cost;
      }
      return x.step < y.step;
    }

    std::uint64_t add_cost(std::uint64_t a, std::uint64_t b) {
      std::uint64_t s = a + b + 1;
      return s < a ? ~std::uint64_t(0) : s;
    }

  }  // namespace

  std::optional<std::uint32_t> CategoryApprox::find(Partition const& p) const {
    if (p.point_count() > point_bound) {
      return std::nullopt;
    }
    auto it = index.find(orbit_key(p));
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<std::string> CategoryApprox::member_keys() const {
    std::vector<std::string> keys;
    for (auto const& n : nodes) {
      keys.push_back(n.key);
    }
    std::sort(keys.begin(), keys.end(), [](auto const& x, auto const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return keys;
  }

  std::vector<Partition> CategoryApprox::members() const {
    std::vector<Partition> out;
    for (auto const& k : member_keys()) {
      out.push_back(from_key(k));
    }
    return out;
  }

  CategoryApprox closure(std::vector<Partition> const& generators,
                         std::size_t point_bound, std::size_t work_bound,
                         std::size_t cap, unsigned workers) {
    if (point_bound < 1 || work_bound < point_bound) {
      throw std::invalid_argument("closure needs 1 <= point bound <= work bound");
    }
    if (point_bound > 60 || work_bound > 120) {
      throw std::invalid_argument("bounds above 60 points (members) or 120 points "
                                  "(work) are not supported");
    }
    CategoryApprox c;
    c.generators  = generators;
    c.point_bound = point_bound;
    c.work_bound  = work_bound;
    c.cap         = cap;

    auto add = [&](std::string key, Step step, std::uint64_t cost,
                   std::uint32_t round) {
      if (c.index.count(key)) {
        return;
      }
      c.index.emplace(key, static_cast<std::uint32_t>(c.nodes.size()));
      c.nodes.push_back({std::move(key), step, cost, round});
    };
    add("", Step{Step::Op::empty}, 0, 0);
    add(std::string(2, '\0'), Step{Step::Op::pair}, 1, 0);
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (generators[g].point_count() > point_bound) {
        throw std::invalid_argument("generator " + generators[g].render()
                                    + " exceeds the point bound");
      }
      Step s{Step::Op::generator};
      s.gen = static_cast<std::uint32_t>(g);
      add(orbit_key(generators[g]), s, 1, 0);
    }

    std::vector<std::vector<Variant>> variants;   // rotations and reflections
    std::vector<std::vector<Variant>> rotations;  // rotations only
    std::size_t                       begin = 0;
    std::uint32_t                     round = 0;

    while (true) {
      std::size_t const end = c.nodes.size();
      if (begin == end) {
        c.saturated = true;
        break;
      }
      if (end > cap) {
        c.saturated = false;
        break;
      }
      for (std::size_t id = variants.size(); id < end; ++id) {
        variants.push_back(variants_of(c.nodes[id].key));
        rotations.push_back(rotations_of(c.nodes[id].key));
      }
      ++round;

      auto local_maps = parallel_collect<std::unordered_map<std::string, Cand>>(
          end - begin, workers, [&](std::size_t off) {
            std::uint32_t const                   x = static_cast<std::uint32_t>(begin + off);
            std::unordered_map<std::string, Cand> local;
            Joiner                                join;
            auto offer = [&](std::string key, Cand const& cand) {
              if (c.index.count(key)) {
                return;
              }
              auto [it, fresh] = local.try_emplace(std::move(key), cand);
              if (!fresh && better(cand, it->second)) {
                it->second = cand;
              }
            };
            auto pair_up = [&](std::uint32_t first, std::uint32_t second) {
              std::size_t const a = c.nodes[first].key.size();
              std::size_t const b = c.nodes[second].key.size();
              if (a == 0 || b == 0) {
                return;
              }
              std::uint64_t const cost = add_cost(c.nodes[first].cost, c.nodes[second].cost);
              for (std::size_t j = 0; j <= std::min(a, b); ++j) {
                if (a + b - j > work_bound || a + b - 2 * j > point_bound) {
                  continue;
                }
                for (auto const& u : variants[first]) {
                  for (auto const& v : rotations[second]) {
                    Cand cand;
                    cand.step.op   = Step::Op::compose;
                    cand.step.a    = first;
                    cand.step.b    = second;
                    cand.step.rot  = u.rot;
                    cand.step.refl = u.refl;
                    cand.step.pos  = v.rot;
                    cand.step.j    = static_cast<std::uint8_t>(j);
                    cand.cost      = cost;
                    offer(join(u.labels, u.blocks, v.labels, v.blocks, j), cand);
                  }
                }
              }
            };
            for (std::uint32_t y = 0; y < end; ++y) {
              pair_up(x, y);
              if (y != x) {
                pair_up(y, x);
              }
            }
            return local;
          });

      std::unordered_map<std::string, Cand> merged;
      for (auto& local : local_maps) {
        for (auto& [key, cand] : local) {
          auto [it, fresh] = merged.try_emplace(key, cand);
          if (!fresh && better(cand, it->second)) {
            it->second = cand;
          }
        }
        local.clear();
      }
      std::vector<std::pair<std::string, Cand>> fresh(
          std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()));
      std::sort(fresh.begin(), fresh.end(), [](auto const& u, auto const& v) {
        return u.first.size() != v.first.size() ? u.first.size() < v.first.size()
                                                : u.first < v.first;
      });
      for (auto& [key, cand] : fresh) {
        add(std::move(key), cand.step, cand.cost, round);
      }
      begin = end;
    }
    c.rounds = round;
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // replay
  ////////////////////////////////////////////////////////////////////////

  Partition shift_left(Partition const& p, std::size_t by) {
    if (!p.is_one_row()) {
      throw std::invalid_argument("shift_left needs a one-row partition");
    }
    Partition r = p;
    if (p.lower_count() == 0) {
      return r;
    }
    for (std::size_t i = 0; i < by % p.lower_count(); ++i) {
      r = rotate(rotate(r, Side::left, Direction::up), Side::right, Direction::down);
    }
    return r;
  }

  Partition reflect(Partition const& p) {
    return one_row(involution(p));
  }

  Partition join_one_row(Partition const& first, Partition const& second,
                         std::size_t j) {
    if (!first.is_one_row() || !second.is_one_row() || j > first.lower_count()
        || j > second.lower_count()) {
      throw std::invalid_argument("join_one_row needs one-row partitions with j points");
    }
    Partition top = first;
    for (std::size_t t = 0; t + j < first.lower_count(); ++t) {
      top = rotate(top, Side::left, Direction::up);
    }
    Partition bottom = second;
    for (std::size_t t = 0; t < j; ++t) {
      bottom = rotate(bottom, Side::left, Direction::up);
    }
    return one_row(compose(bottom, top).result);
  }

  namespace {

    // Rotates/reflects a one-row partition until it equals `target`.
    Partition align(Partition const& r, Partition const& target) {
      if (!r.is_one_row() || !target.is_one_row()
          || r.lower_count() != target.lower_count()) {
        throw std::logic_error("replay produced a partition of the wrong shape");
      }
      std::size_t const n = r.lower_count();
      if (n == 0) {
        return r;
      }
      for (int refl = 0; refl < 2; ++refl) {
        Partition base = refl ? reflect(r) : r;
        for (std::size_t s = 0; s < n; ++s) {
          // compare without rotating first
          std::vector<int> v;
          for (std::size_t t = 0; t < n; ++t) {
            v.push_back(base.lower()[(s + t) % n]);
          }
          if (Partition({}, v) == target) {
            return shift_left(base, s);
          }
        }
      }
      throw std::logic_error("replay left the rotation class: " + r.render()
                             + " vs " + target.render());
    }

    Partition replay_rec(CategoryApprox const&                 c,
                         std::uint32_t                         id,
                         std::vector<std::optional<Partition>>& memo) {
      if (memo[id]) {
        return *memo[id];
      }
      ClosureNode const& node   = c.nodes[id];
      Partition const    target = from_key(node.key);
      Partition          raw;
      switch (node.step.op) {
        case Step::Op::empty:
          raw = Partition{};
          break;
        case Step::Op::pair:
          raw = make_named("pair");
          break;
        case Step::Op::generator:
          raw = one_row(c.generators.at(node.step.gen));
          break;
        case Step::Op::compose: {
          Partition x = replay_rec(c, node.step.a, memo);
          if (node.step.refl) {
            x = reflect(x);
          }
          x           = shift_left(x, node.step.rot);
          Partition y = shift_left(replay_rec(c, node.step.b, memo), node.step.pos);
          raw         = node.step.j == 0 ? tensor(x, y) : join_one_row(x, y, node.step.j);
          break;
        }
      }
      memo[id] = align(raw, target);
      return *memo[id];
    }

    std::string node_text(CategoryApprox const& c, std::uint32_t id) {
      return "#" + std::to_string(id) + " " + from_key(c.nodes[id].key).render();
    }

    std::vector<std::string> script_for(CategoryApprox const& c, std::uint32_t id,
                                        std::size_t& operations) {
      std::set<std::uint32_t>    needed;
      std::vector<std::uint32_t> stack{id};
      while (!stack.empty()) {
        std::uint32_t x = stack.back();
        stack.pop_back();
        if (!needed.insert(x).second) {
          continue;
        }
        auto const& s = c.nodes[x].step;
        if (s.op == Step::Op::compose) {
          stack.push_back(s.a);
          stack.push_back(s.b);
        }
      }
      operations = needed.size();
      std::vector<std::string> lines;
      for (std::uint32_t x : needed) {
        auto const& s    = c.nodes[x].step;
        std::string line = node_text(c, x) + " = ";
        switch (s.op) {
          case Step::Op::empty:
            line += "empty";
            break;
          case Step::Op::pair:
            line += "pair";
            break;
          case Step::Op::generator:
            line += "rotate-down(generator " + c.generators.at(s.gen).render() + ")";
            break;
          case Step::Op::compose:
            line += std::string(s.j == 0 ? "tensor(" : "join(") + "shift("
                    + (s.refl ? "reflect(#" : "(#") + std::to_string(s.a) + "), "
                    + std::to_string(s.rot) + "), shift(#" + std::to_string(s.b) + ", "
                    + std::to_string(s.pos) + ")"
                    + (s.j == 0 ? "" : ", " + std::to_string(s.j) + " points") + ")";
            break;
        }
        lines.push_back(line);
      }
      return lines;
    }

  }  // namespace

  Partition replay_node(CategoryApprox const& c, std::uint32_t id) {
    std::vector<std::optional<Partition>> memo(c.nodes.size());
    return replay_rec(c, id, memo);
  }

  Partition replay(CategoryApprox const& c, Certificate const& cert) {
    Partition r = replay_node(c, cert.node);
    r           = align(r, one_row(cert.target));
    return lift(r, cert.target.upper_count());
  }

  Membership contains(CategoryApprox const& c, Partition const& p) {
    Membership m;
    auto       id = c.find(p);
    if (!id) {
      return m;
    }
    m.verdict = Tri::yes;
    Certificate cert;
    cert.target = p;
    cert.node   = *id;
    cert.script = script_for(c, *id, cert.operations);
    cert.script.push_back("target " + p.render() + " = lift(align(" + node_text(c, *id)
                          + "), " + std::to_string(p.upper_count()) + " upper points)");
    m.certificate = std::move(cert);
    return m;
  }

  Tri is_hyperoctahedral_at_bound(CategoryApprox const& c) {
    if (c.has(make_named("double-singleton"))) {
      return Tri::no;
    }
    if (c.has(make_named("fourblock")) && c.saturated) {
      return Tri::yes;
    }
    return Tri::unknown;
  }

  Tri is_simplifiable_at_bound(CategoryApprox const& c) {
    return c.has(make_named("primary")) ? Tri::yes : Tri::unknown;
  }

  std::vector<Partition> single_leg_members(CategoryApprox const& c) {
    std::set<Partition> out;
    for (auto const& key : c.member_keys()) {
      std::size_t const n = key.size();
      if (n == 0) {
        out.insert(Partition{});
        continue;
      }
      for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t rot = 0; rot < n; ++rot) {
          auto v  = variant_of(key, refl, rot);
          bool ok = true;
          for (std::size_t t = 1; t < n && ok; ++t) {
            ok = v[t] != v[t - 1];
          }
          if (ok) {
            out.insert(Partition({}, std::vector<int>(v.begin(), v.end())));
          }
        }
      }
    }
    return {out.begin(), out.end()};
  }

  ConnectabilityReport connectability_check(CategoryApprox const& c) {
    ConnectabilityReport rep;
    rep.neighbouring_checked = c.has(make_named("fourblock"));
    rep.arbitrary_checked    = c.has(make_named("primary"));
    if (!rep.neighbouring_checked && !rep.arbitrary_checked) {
      return rep;
    }
    for (auto const& key : c.member_keys()) {
      Partition const   p = from_key(key);
      std::size_t const n = key.size();
      std::set<std::pair<Label, Label>> pairs;
      if (rep.arbitrary_checked) {
        for (Label a = 0; a < p.block_count(); ++a) {
          for (Label b = a + 1; b < p.block_count(); ++b) {
            pairs.emplace(a, b);
          }
        }
      } else {
        for (std::size_t t = 0; t < n; ++t) {
          Label a = p.lower()[t], b = p.lower()[(t + 1) % n];
          if (a != b) {
            pairs.emplace(std::min(a, b), std::max(a, b));
          }
        }
      }
      for (auto [a, b] : pairs) {
        ++rep.merges_checked;
        Partition q = connect_blocks(p, a, b);
        if (!c.has(q)) {
          rep.violations.push_back(p.render() + " merge " + std::to_string(a) + ","
                                   + std::to_string(b) + " -> " + q.render());
        }
      }
    }
    return rep;
  }

}  // namespace partlab
