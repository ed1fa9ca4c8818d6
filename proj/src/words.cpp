#include "partlab/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "partlab/parallel.hpp"

namespace partlab {

  namespace {

    constexpr long long max_expansion = 10'000'000;

    void push_reduced(std::vector<Letter>& out, Letter a) {
      if (!out.empty() && out.back() == a) {
        out.pop_back();
      } else {
        out.push_back(a);
      }
    }

    void push_reduced(std::vector<Syllable>& out, Letter x, BigInt const& e) {
      if (e == 0) {
        return;
      }
      if (!out.empty() && out.back().letter == x) {
        out.back().exponent += e;
        if (out.back().exponent == 0) {
          out.pop_back();
        }
      } else {
        out.push_back({x, e});
      }
    }

    long long checked_small(BigInt const& e) {
      BigInt a = abs(e);
      if (a > max_expansion) {
        throw std::length_error("exponent too large to expand: "
                                + e.str());
      }
      return a.convert_to<long long>();
    }

    // Tiny recursive-descent parser shared by both word syntaxes.
    class WordParser {
     public:
      WordParser(std::string_view text, char prefix)
          : _text(text), _prefix(prefix) {}

      template <class Word, class Atom>
      Word parse(Atom&& atom) {
        skip();
        if (_pos == _text.size() || rest_is("e")) {
          if (rest_is("e")) {
            ++_pos;
          }
          skip();
          if (_pos != _text.size()) {
            fail("trailing characters");
          }
          return Word{};
        }
        Word w = expr<Word>(atom);
        skip();
        if (_pos != _text.size()) {
          fail("trailing characters");
        }
        return w;
      }

     private:
      bool rest_is(std::string_view s) const {
        std::size_t p = _pos;
        while (p < _text.size() && std::isspace(static_cast<unsigned char>(_text[p]))) {
          ++p;
        }
        std::string_view r = _text.substr(p);
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) {
          r.remove_suffix(1);
        }
        return r == s;
      }

      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      [[noreturn]] void fail(std::string const& why) const {
        throw std::invalid_argument("cannot parse word '" + std::string(_text)
                                    + "': " + why + " at offset "
                                    + std::to_string(_pos));
      }

      long long integer(bool allow_sign) {
        skip();
        bool neg = false;
        if (allow_sign && _pos < _text.size()
            && (_text[_pos] == '-' || _text[_pos] == '+')) {
          neg = _text[_pos] == '-';
          ++_pos;
        }
        std::size_t start = _pos;
        long long   v     = 0;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          v = v * 10 + (_text[_pos] - '0');
          if (v > max_expansion) {
            fail("number too large");
          }
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a number");
        }
        return neg ? -v : v;
      }

      template <class Word, class Atom>
      Word expr(Atom& atom) {
        Word w = item<Word>(atom);
        skip();
        while (_pos < _text.size() && (_text[_pos] == '.' || _text[_pos] == '*')) {
          ++_pos;
          w = mult(w, item<Word>(atom));
          skip();
        }
        return w;
      }

      template <class Word, class Atom>
      Word item(Atom& atom) {
        skip();
        if (_pos >= _text.size()) {
          fail("unexpected end");
        }
        Word base;
        if (_text[_pos] == '(') {
          ++_pos;
          base = expr<Word>(atom);
          skip();
          if (_pos >= _text.size() || _text[_pos] != ')') {
            fail("expected ')'");
          }
          ++_pos;
        } else if (_text[_pos] == _prefix) {
          ++_pos;
          long long k = integer(false);
          if (k < 1) {
            fail("letter indices start at 1");
          }
          base = atom(static_cast<Letter>(k));
        } else {
          fail(std::string("expected '") + _prefix + "' or '('");
        }
        skip();
        if (_pos < _text.size() && _text[_pos] == '^') {
          ++_pos;
          long long e = integer(true);
          Word      r;
          Word      b = e < 0 ? inv(base) : base;
          for (long long i = 0; i < (e < 0 ? -e : e); ++i) {
            r = mult(r, b);
          }
          return r;
        }
        return base;
      }

      std::string_view _text;
      char             _prefix;
      std::size_t      _pos = 0;
    };

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Z2Word
  ////////////////////////////////////////////////////////////////////////

  Z2Word Z2Word::reduce(std::vector<Letter> const& letters) {
    Z2Word w;
    w._letters.reserve(letters.size());
    for (Letter a : letters) {
      if (a == 0) {
        throw std::invalid_argument("letter index 0 is not allowed");
      }
      push_reduced(w._letters, a);
    }
    return w;
  }

  Z2Word Z2Word::letter(Letter a) {
    return reduce({a});
  }

  Z2Word Z2Word::parse(std::string_view text) {
    WordParser p(text, 'a');
    return p.parse<Z2Word>([](Letter k) { return Z2Word::letter(k); });
  }

  std::string Z2Word::to_string() const {
    if (_letters.empty()) {
      return "e";
    }
    std::string s;
    for (std::size_t i = 0; i < _letters.size(); ++i) {
      if (i) {
        s += '.';
      }
      s += 'a';
      s += std::to_string(_letters[i]);
    }
    return s;
  }

  Letter Z2Word::max_letter() const noexcept {
    Letter m = 0;
    for (Letter a : _letters) {
      m = std::max(m, a);
    }
    return m;
  }

  std::vector<Letter> Z2Word::support() const {
    std::vector<Letter> s(_letters);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  std::strong_ordering Z2Word::operator<=>(Z2Word const& other) const {
    if (auto c = _letters.size() <=> other._letters.size(); c != 0) {
      return c;
    }
    return _letters <=> other._letters;
  }

  Z2Word mult(Z2Word const& u, Z2Word const& v) {
    std::vector<Letter> out(u.letters());
    for (Letter a : v.letters()) {
      push_reduced(out, a);
    }
    return Z2Word::reduce(out);
  }

  Z2Word inv(Z2Word const& u) {
    std::vector<Letter> r(u.letters().rbegin(), u.letters().rend());
    return Z2Word::reduce(r);
  }

  Z2Word power(Z2Word const& u, std::size_t e) {
    Z2Word r;
    for (std::size_t i = 0; i < e; ++i) {
      r = mult(r, u);
    }
    return r;
  }

  std::size_t Z2WordHash::operator()(Z2Word const& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w.letters()) {
      h ^= a;
      h *= 1099511628211ull;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeWord
  ////////////////////////////////////////////////////////////////////////

  FreeWord FreeWord::reduce(std::vector<Syllable> const& syllables) {
    FreeWord w;
    for (auto const& s : syllables) {
      if (s.letter == 0) {
        throw std::invalid_argument("letter index 0 is not allowed");
      }
      push_reduced(w._syllables, s.letter, s.exponent);
    }
    return w;
  }

  FreeWord FreeWord::generator(Letter k, BigInt const& e) {
    return reduce({{k, e}});
  }

  FreeWord FreeWord::parse(std::string_view text) {
    WordParser p(text, 'x');
    return p.parse<FreeWord>([](Letter k) { return FreeWord::generator(k); });
  }

  std::string FreeWord::to_string() const {
    if (_syllables.empty()) {
      return "e";
    }
    std::string s;
    for (std::size_t i = 0; i < _syllables.size(); ++i) {
      if (i) {
        s += '.';
      }
      s += 'x';
      s += std::to_string(_syllables[i].letter);
      if (_syllables[i].exponent != 1) {
        s += '^';
        s += _syllables[i].exponent.str();
      }
    }
    return s;
  }

  BigInt FreeWord::length() const {
    BigInt n = 0;
    for (auto const& s : _syllables) {
      n += abs(s.exponent);
    }
    return n;
  }

  Letter FreeWord::max_letter() const noexcept {
    Letter m = 0;
    for (auto const& s : _syllables) {
      m = std::max(m, s.letter);
    }
    return m;
  }

  std::vector<Letter> FreeWord::support() const {
    std::vector<Letter> s;
    for (auto const& y : _syllables) {
      s.push_back(y.letter);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  std::strong_ordering FreeWord::operator<=>(FreeWord const& other) const {
    BigInt a = length(), b = other.length();
    if (a != b) {
      return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    std::size_t n = std::min(_syllables.size(), other._syllables.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto const& x = _syllables[i];
      auto const& y = other._syllables[i];
      if (x.letter != y.letter) {
        return x.letter <=> y.letter;
      }
      if (x.exponent != y.exponent) {
        return x.exponent < y.exponent ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
      }
    }
    return _syllables.size() <=> other._syllables.size();
  }

  FreeWord mult(FreeWord const& u, FreeWord const& v) {
    std::vector<Syllable> out(u.syllables());
    for (auto const& s : v.syllables()) {
      push_reduced(out, s.letter, s.exponent);
    }
    return FreeWord::reduce(out);
  }

  FreeWord inv(FreeWord const& u) {
    std::vector<Syllable> out;
    for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it) {
      out.push_back({it->letter, -it->exponent});
    }
    return FreeWord::reduce(out);
  }

  std::size_t FreeWordHash::operator()(FreeWord const& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto const& s : w.syllables()) {
      h ^= s.letter;
      h *= 1099511628211ull;
      h ^= static_cast<std::size_t>(static_cast<long long>(s.exponent % 1000003));
      h *= 1099511628211ull;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // basis change
  ////////////////////////////////////////////////////////////////////////

  FreeWord to_free(Z2Word const& u) {
    if (!u.is_even()) {
      throw std::invalid_argument("to_free needs an even word, got "
                                  + u.to_string());
    }
    std::vector<Syllable> out;
    auto const&           a = u.letters();
    for (std::size_t i = 0; i < a.size(); i += 2) {
      // a_j a_k = x_{j-1}^-1 x_{k-1}, x_0 = e
      if (a[i] > 1) {
        push_reduced(out, a[i] - 1, BigInt(-1));
      }
      if (a[i + 1] > 1) {
        push_reduced(out, a[i + 1] - 1, BigInt(1));
      }
    }
    return FreeWord::reduce(out);
  }

  Z2Word from_free(FreeWord const& w) {
    std::vector<Letter> out;
    for (auto const& s : w.syllables()) {
      long long n = checked_small(s.exponent);
      for (long long t = 0; t < n; ++t) {
        if (s.exponent > 0) {
          push_reduced(out, 1);
          push_reduced(out, s.letter + 1);
        } else {
          push_reduced(out, s.letter + 1);
          push_reduced(out, 1);
        }
      }
    }
    return Z2Word::reduce(out);
  }

  BigInt exponent(FreeWord const& w, Letter i) {
    BigInt e = 0;
    for (auto const& s : w.syllables()) {
      if (s.letter == i) {
        e += s.exponent;
      }
    }
    return e;
  }

  std::map<Letter, BigInt> abelianize(FreeWord const& w) {
    std::map<Letter, BigInt> v;
    for (auto const& s : w.syllables()) {
      v[s.letter] += s.exponent;
    }
    for (auto it = v.begin(); it != v.end();) {
      it = it->second == 0 ? v.erase(it) : std::next(it);
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // semigroup generators
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string map_string(std::map<Letter, Letter> const& m, char p) {
      std::string s;
      for (auto const& [from, to] : m) {
        if (!s.empty()) {
          s += ',';
        }
        s += p + std::to_string(from) + "->" + p + std::to_string(to);
      }
      return s;
    }
  }  // namespace

  Z2Word apply_s0(S0Gen const& gen, Z2Word const& u) {
    if (auto const* id = std::get_if<Identify>(&gen)) {
      std::vector<Letter> out;
      for (Letter a : u.letters()) {
        auto it = id->map.find(a);
        out.push_back(it == id->map.end() ? a : it->second);
      }
      return Z2Word::reduce(out);
    }
    Letter const        k = std::get<ConjugateBy>(gen).letter;
    std::vector<Letter> out{k};
    out.insert(out.end(), u.letters().begin(), u.letters().end());
    out.push_back(k);
    return Z2Word::reduce(out);
  }

  std::string describe(S0Gen const& gen) {
    if (auto const* id = std::get_if<Identify>(&gen)) {
      return "identify[" + map_string(id->map, 'a') + "]";
    }
    return "conjugate[a" + std::to_string(std::get<ConjugateBy>(gen).letter) + "]";
  }

  FreeWord apply_s(SGen const& gen, FreeWord const& w) {
    std::vector<Syllable> out;
    if (auto const* id = std::get_if<IdentifyX>(&gen)) {
      for (auto const& s : w.syllables()) {
        auto it = id->map.find(s.letter);
        out.push_back({it == id->map.end() ? s.letter : it->second, s.exponent});
      }
    } else if (auto const* sh = std::get_if<ShiftX>(&gen)) {
      for (auto const& s : w.syllables()) {
        if (s.letter == sh->by) {
          continue;
        }
        long long n = checked_small(s.exponent);
        for (long long t = 0; t < n; ++t) {
          if (s.exponent > 0) {
            push_reduced(out, sh->by, BigInt(-1));
            push_reduced(out, s.letter, BigInt(1));
          } else {
            push_reduced(out, s.letter, BigInt(-1));
            push_reduced(out, sh->by, BigInt(1));
          }
        }
      }
    } else if (auto const* del = std::get_if<DeleteX>(&gen)) {
      for (auto const& s : w.syllables()) {
        if (s.letter != del->letter) {
          out.push_back(s);
        }
      }
    } else if (std::holds_alternative<InvertAll>(gen)) {
      for (auto const& s : w.syllables()) {
        out.push_back({s.letter, -s.exponent});
      }
    } else {
      auto const& in = std::get<InnerX>(gen);
      out.push_back({in.letter, BigInt(in.sign)});
      out.insert(out.end(), w.syllables().begin(), w.syllables().end());
      out.push_back({in.letter, BigInt(-in.sign)});
    }
    return FreeWord::reduce(out);
  }

  std::string describe(SGen const& gen) {
    if (auto const* id = std::get_if<IdentifyX>(&gen)) {
      return "identify[" + map_string(id->map, 'x') + "]";
    }
    if (auto const* sh = std::get_if<ShiftX>(&gen)) {
      return "shift[x" + std::to_string(sh->by) + "]";
    }
    if (auto const* del = std::get_if<DeleteX>(&gen)) {
      return "delete[x" + std::to_string(del->letter) + "]";
    }
    if (std::holds_alternative<InvertAll>(gen)) {
      return "invert-all";
    }
    auto const& in = std::get<InnerX>(gen);
    return "inner[x" + std::to_string(in.letter) + "^" + std::to_string(in.sign)
           + "]";
  }

  std::string to_string(Semigroup s) {
    switch (s) {
      case Semigroup::none:
        return "none";
      case Semigroup::s0:
        return "S0";
      case Semigroup::s:
        return "S";
    }
    return "?";
  }

  namespace {
    // Elementary substitutions plus transpositions generate every map on
    // {1..alphabet}, so iterating them reaches all identifications.
    template <class Make>
    void identification_generators(std::vector<Letter> const& support,
                                   Letter alphabet_bound, Make&& make) {
      for (Letter i : support) {
        for (Letter j = 1; j <= alphabet_bound; ++j) {
          if (j == i) {
            continue;
          }
          make(std::map<Letter, Letter>{{i, j}});
          if (std::binary_search(support.begin(), support.end(), j)) {
            make(std::map<Letter, Letter>{{i, j}, {j, i}});
          }
        }
      }
    }
  }  // namespace

  std::vector<S0Gen> s0_generators_for(Z2Word const& u, Letter alphabet_bound) {
    std::vector<S0Gen> gens;
    identification_generators(u.support(), alphabet_bound, [&](auto m) {
      gens.emplace_back(Identify{std::move(m)});
    });
    for (Letter k = 1; k <= alphabet_bound; ++k) {
      gens.emplace_back(ConjugateBy{k});
    }
    return gens;
  }

  std::vector<SGen> s_generators_for(FreeWord const& w, Letter alphabet_bound) {
    std::vector<SGen> gens;
    auto const        support = w.support();
    identification_generators(support, alphabet_bound, [&](auto m) {
      gens.emplace_back(IdentifyX{std::move(m)});
    });
    for (Letter i = 1; i <= alphabet_bound; ++i) {
      gens.emplace_back(ShiftX{i});
    }
    for (Letter k : support) {
      gens.emplace_back(DeleteX{k});
    }
    gens.emplace_back(InvertAll{});
    for (Letter i = 1; i <= alphabet_bound; ++i) {
      gens.emplace_back(InnerX{i, 1});
      gens.emplace_back(InnerX{i, -1});
    }
    return gens;
  }

  ////////////////////////////////////////////////////////////////////////
  // SubgroupApprox
  ////////////////////////////////////////////////////////////////////////

  template <class Word, class Hash>
  std::size_t SubgroupApprox<Word, Hash>::insert(Word w, Witness why) {
    auto [it, fresh] = index.emplace(w, elements.size());
    if (fresh) {
      elements.push_back(std::move(w));
      witnesses.push_back(std::move(why));
    }
    return it->second;
  }

  template <class Word, class Hash>
  std::vector<std::string>
  SubgroupApprox<Word, Hash>::witness_chain(Word const& w) const {
    std::vector<std::string> lines;
    auto                     it = index.find(w);
    if (it == index.end()) {
      return lines;
    }
    std::set<std::size_t>                            seen;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{it->second, 0}};
    while (!stack.empty()) {
      auto [id, depth] = stack.back();
      stack.pop_back();
      if (!seen.insert(id).second || depth >= 64) {
        continue;
      }
      for (std::size_t p : witnesses[id].parents) {
        stack.emplace_back(p, depth + 1);
      }
    }
    std::size_t shown = 0;
    for (std::size_t id : seen) {
      if (++shown > 64) {
        break;
      }
      std::string line = "#" + std::to_string(id) + " " + elements[id].to_string()
                         + " = " + witnesses[id].op;
      if (!witnesses[id].parents.empty()) {
        line += "(";
        for (std::size_t k = 0; k < witnesses[id].parents.size(); ++k) {
          line += (k ? ",#" : "#") + std::to_string(witnesses[id].parents[k]);
        }
        line += ")";
      }
      lines.push_back(line);
    }
    return lines;
  }

  template <class Word, class Hash>
  std::vector<Word> SubgroupApprox<Word, Hash>::sorted_elements() const {
    std::vector<Word> v(elements);
    std::sort(v.begin(), v.end());
    return v;
  }

  template struct SubgroupApprox<Z2Word, Z2WordHash>;
  template struct SubgroupApprox<FreeWord, FreeWordHash>;

  namespace {

    std::size_t word_length(Z2Word const& w) {
      return w.size();
    }
    std::size_t word_length(FreeWord const& w) {
      BigInt n = w.length();
      return n > BigInt(1'000'000'000) ? std::size_t(1'000'000'000)
                                       : n.convert_to<std::size_t>();
    }

    template <class Word>
    struct Candidate {
      Word    word;
      Witness why;
    };

    template <class Word, class Hash, class Images>
    void run_closure(SubgroupApprox<Word, Hash>& S, unsigned workers,
                     Images&& images) {
      std::size_t const L = S.length_bound;
      for (auto const& g : S.generators) {
        if (word_length(g) > L) {
          throw std::invalid_argument("generator " + g.to_string()
                                      + " is longer than the length bound");
        }
      }
      S.insert(Word{}, {"identity", {}});
      for (auto const& g : S.generators) {
        S.insert(g, {"generator", {}});
      }
      std::size_t begin = 0;
      S.saturated       = false;
      while (true) {
        std::size_t const end = S.elements.size();
        if (begin == end) {
          S.saturated = true;
          return;
        }
        std::size_t const known = end;
        auto              batches
            = parallel_collect<std::vector<Candidate<Word>>>(
                end - begin, workers, [&](std::size_t off) {
                  std::size_t const            i = begin + off;
                  Word const&                  u = S.elements[i];
                  std::vector<Candidate<Word>> out;
                  auto push = [&](Word w, std::string op,
                                  std::vector<std::size_t> parents) {
                    if (word_length(w) <= L && !S.contains(w)) {
                      out.push_back({std::move(w), {std::move(op), std::move(parents)}});
                    }
                  };
                  push(inv(u), "inverse", {i});
                  for (std::size_t j = 0; j < known; ++j) {
                    push(mult(u, S.elements[j]), "product", {i, j});
                    push(mult(S.elements[j], u), "product", {j, i});
                  }
                  for (auto& [w, op] : images(u)) {
                    push(std::move(w), std::move(op), {i});
                  }
                  return out;
                });
        for (auto& batch : batches) {
          for (auto& c : batch) {
            S.insert(std::move(c.word), std::move(c.why));
            if (S.elements.size() > S.cap) {
              return;
            }
          }
        }
        begin = end;
      }
    }

  }  // namespace

  Z2Subgroup subgroup_closure(std::vector<Z2Word> const& generators,
                              std::size_t length_bound, Semigroup semigroup,
                              Letter alphabet_bound, std::size_t cap,
                              unsigned workers) {
    if (semigroup == Semigroup::s) {
      throw std::invalid_argument("the semigroup S acts on FreeWords, not Z2Words");
    }
    Z2Subgroup S;
    S.generators     = generators;
    S.length_bound   = length_bound;
    S.semigroup      = semigroup;
    S.alphabet_bound = alphabet_bound;
    S.cap            = cap;
    S.even_only      = std::all_of(generators.begin(), generators.end(),
                              [](Z2Word const& g) { return g.is_even(); });
    for (auto const& g : generators) {
      if (g.max_letter() > alphabet_bound) {
        throw std::invalid_argument("generator " + g.to_string()
                                    + " uses letters beyond the alphabet bound");
      }
    }
    run_closure(S, workers, [&](Z2Word const& u) {
      std::vector<std::pair<Z2Word, std::string>> out;
      if (semigroup == Semigroup::s0) {
        for (auto const& g : s0_generators_for(u, alphabet_bound)) {
          out.emplace_back(apply_s0(g, u), describe(g));
        }
      }
      return out;
    });
    return S;
  }

  FreeSubgroup subgroup_closure(std::vector<FreeWord> const& generators,
                                std::size_t length_bound, Semigroup semigroup,
                                Letter alphabet_bound, std::size_t cap,
                                unsigned workers) {
    if (semigroup == Semigroup::s0) {
      throw std::invalid_argument("the semigroup S0 acts on Z2Words, not FreeWords");
    }
    FreeSubgroup S;
    S.generators     = generators;
    S.length_bound   = length_bound;
    S.semigroup      = semigroup;
    S.alphabet_bound = alphabet_bound;
    S.cap            = cap;
    for (auto const& g : generators) {
      if (g.max_letter() > alphabet_bound) {
        throw std::invalid_argument("generator " + g.to_string()
                                    + " uses letters beyond the alphabet bound");
      }
    }
    run_closure(S, workers, [&](FreeWord const& w) {
      std::vector<std::pair<FreeWord, std::string>> out;
      if (semigroup == Semigroup::s) {
        for (auto const& g : s_generators_for(w, alphabet_bound)) {
          out.emplace_back(apply_s(g, w), describe(g));
        }
      }
      return out;
    });
    return S;
  }

  std::vector<Z2Word> all_reduced_words(std::size_t max_len, Letter alphabet) {
    std::vector<Z2Word>              out{Z2Word{}};
    std::vector<std::vector<Letter>> layer{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::vector<Letter>> next;
      for (auto const& w : layer) {
        for (Letter a = 1; a <= alphabet; ++a) {
          if (!w.empty() && w.back() == a) {
            continue;
          }
          auto v = w;
          v.push_back(a);
          next.push_back(std::move(v));
        }
      }
      for (auto const& w : next) {
        out.push_back(Z2Word::reduce(w));
      }
      layer = std::move(next);
    }
    return out;
  }

}  // namespace partlab
