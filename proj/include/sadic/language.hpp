#ifndef SADIC_LANGUAGE_HPP_
#define SADIC_LANGUAGE_HPP_

#include <algorithm>  // for sort, binary_search
#include <map>        // for map
#include <memory>     // for shared_ptr
#include <numeric>    // for iota
#include <optional>   // for optional
#include <set>        // for set
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "directive.hpp"  // for DirectiveSequence
#include "errors.hpp"     // for InstabilityError
#include "words.hpp"      // for word_type

namespace sadic {

  struct LanguageTable {
    size_t                              level      = 0;
    size_t                              max_length = 0;
    std::vector<std::vector<word_type>> factors;  // by length, sorted
    bool                                stabilized = false;
    size_t                              horizon    = 0;
    std::optional<size_t>               witness;  // least m with M_{n,m} > 0

    std::vector<word_type> const& of_length(size_t j) const {
      if (j > max_length) {
        throw DomainError("factor length " + std::to_string(j)
                          + " exceeds the table bound "
                          + std::to_string(max_length));
      }
      return factors[j];
    }

    bool contains(word_type const& w) const {
      auto const& f = of_length(w.size());
      return std::binary_search(f.begin(), f.end(), w);
    }
  };

  namespace detail {
    // What survives of tau_{n,m}(a) when only factors of length <= k
    // matter: the factors, and the first and last k-1 letters.
    struct Summary {
      uint64_t            length = 0;
      word_type           head, tail;
      std::set<word_type> factors;
    };

    inline void add_factors(word_type const& w, size_t k,
                            std::set<word_type>& out) {
      for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = 1; j <= k && i + j <= w.size(); ++j) {
          out.emplace(w.begin() + i, w.begin() + i + j);
        }
      }
    }

    inline Summary letter_summary(letter_type a, size_t k) {
      Summary s;
      s.length = 1;
      if (k > 1) {
        s.head = s.tail = {a};
      }
      s.factors.insert({a});
      return s;
    }

    inline void append(Summary& left, Summary const& right, size_t k) {
      word_type glue = left.tail;
      glue.insert(glue.end(), right.head.begin(), right.head.end());
      add_factors(glue, k, left.factors);
      left.factors.insert(right.factors.begin(), right.factors.end());
      if (left.head.size() < k - 1) {
        left.head.insert(left.head.end(), right.head.begin(), right.head.end());
        if (left.head.size() > k - 1) {
          left.head.resize(k - 1);
        }
      }
      word_type tail = left.tail;
      tail.insert(tail.end(), right.tail.begin(), right.tail.end());
      if (tail.size() > k - 1) {
        tail.erase(tail.begin(), tail.end() - (k - 1));
      }
      left.tail = tail;
      uint64_t limit = ~uint64_t(0);
      left.length = left.length > limit - right.length ? limit
                                                        : left.length + right.length;
    }

    // Summaries of tau_{n,m+1}(b) from those of tau_{n,m}.
    inline std::vector<Summary> step(std::vector<Summary> const& below,
                                     Morphism const& tau, size_t k) {
      std::vector<Summary> out;
      for (auto const& img : tau.images()) {
        Summary s = below[img[0]];
        for (size_t i = 1; i < img.size(); ++i) {
          append(s, below[img[i]], k);
        }
        out.push_back(std::move(s));
      }
      return out;
    }

    inline size_t default_horizon(DirectiveSequence const& ds, size_t n) {
      if (auto d = ds.depth()) {
        return *d;
      }
      return n + 64 + 4 * ds.period_length();
    }

    inline size_t stable_rounds(DirectiveSequence const& ds) {
      return ds.is_explicit() ? 2 : std::max<size_t>(2, ds.period_length());
    }

    inline LanguageTable generate(DirectiveSequence const& ds, size_t n,
                                  size_t k, size_t limit) {
      ds.check_level(n);
      LanguageTable t;
      t.level      = n;
      t.max_length = k;
      std::set<word_type> pooled;
      if (k > 0) {
        std::vector<Summary> cur;
        for (letter_type a = 0; a < ds.alphabet(n).size(); ++a) {
          cur.push_back(letter_summary(a, k));
        }
        size_t unchanged = 0, need = stable_rounds(ds);
        for (size_t a = 0; a < cur.size(); ++a) {
          pooled.insert(cur[a].factors.begin(), cur[a].factors.end());
        }
        size_t m = n;
        while (m < limit) {
          cur = step(cur, ds.morphism_at(m), k);
          ++m;
          std::set<word_type> next;
          for (auto const& s : cur) {
            next.insert(s.factors.begin(), s.factors.end());
          }
          // Everything found earlier stays a factor; pool for safety.
          next.insert(pooled.begin(), pooled.end());
          bool same = next.size() == pooled.size();
          pooled    = std::move(next);
          if (!t.witness && is_positive_matrix(ds.incidence_range(n, m))) {
            t.witness = m;
            continue;
          }
          if (t.witness) {
            unchanged = same ? unchanged + 1 : 0;
            // nothing of length k yet means the images are still too short
            bool reached = std::any_of(pooled.begin(), pooled.end(),
                                       [k](auto const& w) { return w.size() == k; });
            if (unchanged >= need && reached) {
              t.stabilized = true;
              break;
            }
          }
        }
        t.horizon = m;
      } else {
        t.stabilized = true;
        t.horizon    = n;
      }
      t.factors.assign(k + 1, {});
      t.factors[0].push_back({});
      for (auto const& w : pooled) {
        t.factors[w.size()].push_back(w);
      }
      return t;
    }
  }  // namespace detail

  // Level-n factors of length <= k. Shared, frozen, and cached per sequence.
  inline std::shared_ptr<LanguageTable const>
  factors(DirectiveSequence const& ds, size_t n, size_t k, size_t limit = 0) {
    ds.check_level(n);
    auto& cache = ds.cache();
    auto  key   = std::make_pair(ds.canonical_level(n), k);
    if (limit == 0) {
      std::lock_guard<std::mutex> lock(cache.mutex);
      auto it = cache.languages.find(key);
      if (it != cache.languages.end()) {
        auto t = std::static_pointer_cast<LanguageTable const>(it->second);
        if (t->level == n) {
          return t;
        }
        auto copy   = std::make_shared<LanguageTable>(*t);
        copy->level = n;
        copy->horizon += n - t->level;
        if (copy->witness) {
          *copy->witness += n - t->level;
        }
        return copy;
      }
    }
    auto t = std::make_shared<LanguageTable const>(detail::generate(
        ds, n, k, limit == 0 ? detail::default_horizon(ds, n) : limit));
    if (limit == 0) {
      std::lock_guard<std::mutex> lock(cache.mutex);
      cache.languages.emplace(key, t);
    }
    return t;
  }

  inline std::shared_ptr<LanguageTable const>
  stable_factors(DirectiveSequence const& ds, size_t n, size_t k) {
    auto t = factors(ds, n, k);
    if (!t->stabilized) {
      throw InstabilityError("level " + std::to_string(n)
                             + " language did not stabilize at length "
                             + std::to_string(k) + " within horizon "
                             + std::to_string(t->horizon));
    }
    return t;
  }

  // p(1), ..., p(k).
  inline std::vector<size_t> complexity(DirectiveSequence const& ds, size_t n,
                                        size_t k) {
    auto                t = stable_factors(ds, n, k);
    std::vector<size_t> out;
    for (size_t j = 1; j <= k; ++j) {
      out.push_back(t->factors[j].size());
    }
    return out;
  }

  struct ExtensionGraph {
    size_t                                             level = 0;
    word_type                                          word;
    std::vector<letter_type>                           left, right;
    std::vector<std::pair<letter_type, letter_type>>   edges;
    bool                                               stabilized = true;
  };

  inline ExtensionGraph extension_graph(LanguageTable const& t,
                                        word_type const&     w) {
    if (w.size() + 2 > t.max_length) {
      throw DomainError("extension graph needs factors of length "
                        + std::to_string(w.size() + 2));
    }
    ExtensionGraph g;
    g.level      = t.level;
    g.word       = w;
    g.stabilized = t.stabilized;
    std::set<letter_type> left, right;
    for (auto const& f : t.factors[w.size() + 2]) {
      if (std::equal(w.begin(), w.end(), f.begin() + 1)) {
        g.edges.emplace_back(f.front(), f.back());
        left.insert(f.front());
        right.insert(f.back());
      }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.left.assign(left.begin(), left.end());
    g.right.assign(right.begin(), right.end());
    return g;
  }

  inline ExtensionGraph extension_graph(DirectiveSequence const& ds, size_t n,
                                        word_type const& w,
                                        bool allow_unstable = false) {
    auto t = allow_unstable ? factors(ds, n, w.size() + 2)
                            : stable_factors(ds, n, w.size() + 2);
    return extension_graph(*t, w);
  }

  struct Component {
    std::vector<letter_type> left, right;
  };

  struct ComponentPartition {
    std::vector<Component>                components;  // by least left letter
    std::vector<std::vector<letter_type>> left_classes, right_classes;
  };

  inline ComponentPartition connected_components(ExtensionGraph const& g) {
    // Union-find on left letters followed by right letters.
    size_t nl = 0, nr = 0;
    for (auto a : g.left) {
      nl = std::max<size_t>(nl, a + 1);
    }
    for (auto b : g.right) {
      nr = std::max<size_t>(nr, b + 1);
    }
    std::vector<size_t> parent(nl + nr);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& [a, b] : g.edges) {
      parent[find(a)] = find(nl + b);
    }
    std::map<size_t, Component> by_root;
    for (auto a : g.left) {
      by_root[find(a)].left.push_back(a);
    }
    for (auto b : g.right) {
      by_root[find(nl + b)].right.push_back(b);
    }
    ComponentPartition p;
    for (auto& [root, c] : by_root) {
      p.components.push_back(std::move(c));
    }
    std::sort(p.components.begin(),
              p.components.end(),
              [](Component const& x, Component const& y) {
                auto key = [](Component const& c) {
                  return std::make_pair(
                      c.left.empty() ? ~letter_type(0) : c.left.front(),
                      c.right.empty() ? ~letter_type(0) : c.right.front());
                };
                return key(x) < key(y);
              });
    for (auto const& c : p.components) {
      p.left_classes.push_back(c.left);
      p.right_classes.push_back(c.right);
    }
    return p;
  }

  inline bool is_tree(ExtensionGraph const& g) {
    return connected_components(g).components.size() == 1
           && g.edges.size() + 1 == g.left.size() + g.right.size();
  }

  // m(w) = |edges| - |left| - |right| + 1.
  inline long multiplicity(ExtensionGraph const& g) {
    return static_cast<long>(g.edges.size())
           - static_cast<long>(g.left.size())
           - static_cast<long>(g.right.size()) + 1;
  }

  inline long multiplicity(DirectiveSequence const& ds, size_t n,
                           word_type const& w) {
    return multiplicity(extension_graph(ds, n, w));
  }

  struct SecondDifference {
    size_t length;
    long   sum_multiplicity;
    long   second_difference;
  };

  // Sum of m(w) over |w| = j against p(j+2) - 2 p(j+1) + p(j), j <= k - 2.
  inline std::vector<SecondDifference>
  second_differences(DirectiveSequence const& ds, size_t n, size_t k) {
    auto                          t = stable_factors(ds, n, k);
    std::vector<SecondDifference> out;
    for (size_t j = 0; j + 2 <= k; ++j) {
      long sum = 0;
      for (auto const& w : t->factors[j]) {
        sum += multiplicity(extension_graph(*t, w));
      }
      long p0 = t->factors[j].size(), p1 = t->factors[j + 1].size(),
           p2 = t->factors[j + 2].size();
      out.push_back({j, sum, p2 - 2 * p1 + p0});
    }
    return out;
  }

  inline bool second_difference_check(DirectiveSequence const& ds, size_t n,
                                      size_t k) {
    for (auto const& r : second_differences(ds, n, k)) {
      if (r.sum_multiplicity != r.second_difference) {
        return false;
      }
    }
    return true;
  }

  struct DendricReport {
    bool                     dendric = true;
    std::optional<word_type> witness;  // first factor with a non-tree graph
  };

  // Checks the extension graphs of all factors of length < k.
  inline DendricReport is_dendric_up_to(DirectiveSequence const& ds, size_t n,
                                        size_t k) {
    DendricReport r;
    if (k == 0) {
      return r;
    }
    auto t = stable_factors(ds, n, k + 1);
    for (size_t j = 0; j < k; ++j) {
      for (auto const& w : t->factors[j]) {
        if (!is_tree(extension_graph(*t, w))) {
          r.dendric = false;
          r.witness = w;
          return r;
        }
      }
    }
    return r;
  }

  struct ReturnWordSet {
    word_type              target;
    std::vector<word_type> words;  // sorted
    size_t                 scan_budget = 0;
    bool                   saturated   = false;
  };

  namespace detail {
    inline std::set<word_type> scan_returns(word_type const& prefix,
                                            word_type const& u) {
      std::set<word_type> out;
      if (u.empty() || u.size() > prefix.size()) {
        return out;
      }
      std::optional<size_t> last;
      for (size_t i = 0; i + u.size() <= prefix.size(); ++i) {
        if (std::equal(u.begin(), u.end(), prefix.begin() + i)) {
          if (last) {
            out.emplace(prefix.begin() + *last, prefix.begin() + i);
          }
          last = i;
        }
      }
      return out;
    }
  }  // namespace detail

  // Return words to u read off a prefix of a level-n point. The set counts
  // as saturated when the first half of the prefix already gives all of it.
  inline ReturnWordSet return_words(DirectiveSequence const& ds, size_t n,
                                    word_type const& u, size_t budget) {
    word_type prefix = ds.point_prefix(n, budget);
    auto      full   = detail::scan_returns(prefix, u);
    auto      half   = detail::scan_returns(
        word_type(prefix.begin(), prefix.begin() + prefix.size() / 2), u);
    ReturnWordSet r;
    r.target      = u;
    r.words       = {full.begin(), full.end()};
    r.scan_budget = prefix.size();
    r.saturated   = half == full && !full.empty();
    return r;
  }

  // Doubles the budget until saturation or the cap.
  inline ReturnWordSet return_words_saturating(DirectiveSequence const& ds,
                                               size_t n, word_type const& u,
                                               size_t start  = 1024,
                                               size_t cap    = 1 << 20) {
    ReturnWordSet r = return_words(ds, n, u, start);
    while (!r.saturated && r.scan_budget * 2 <= cap
           && !(ds.is_explicit() && r.scan_budget < start)) {
      size_t next = r.scan_budget * 2;
      r           = return_words(ds, n, u, next);
      if (r.scan_budget < next) {
        break;
      }
    }
    return r;
  }

  inline bool is_return_word(word_type const& w, word_type const& u) {
    word_type wu = w;
    wu.insert(wu.end(), u.begin(), u.end());
    return !w.empty() && count_occurrences(u, wu) == 2
           && std::equal(u.begin(), u.end(), wu.begin());
  }

  // r(n): least m > n with every letter of A_n in every tau_{n,m}(b).
  inline std::optional<size_t> letter_recurrence(DirectiveSequence const& ds,
                                                 size_t n, size_t limit = 0) {
    return positivity_witness(ds, n,
                              limit ? limit : detail::default_horizon(ds, n));
  }

  // r'(n): least m > n with every length-2 factor of level n in every
  // tau_{n,m}(b).
  inline std::optional<size_t> pair_recurrence(DirectiveSequence const& ds,
                                               size_t n, size_t limit = 0) {
    auto  t     = stable_factors(ds, n, 2);
    auto  pairs = t->factors[2];
    limit       = limit ? limit : detail::default_horizon(ds, n);
    std::vector<detail::Summary> cur;
    for (letter_type a = 0; a < ds.alphabet(n).size(); ++a) {
      cur.push_back(detail::letter_summary(a, 2));
    }
    for (size_t m = n; m < limit; ++m) {
      cur      = detail::step(cur, ds.morphism_at(m), 2);
      bool all = true;
      for (auto const& s : cur) {
        for (auto const& p : pairs) {
          all = all && s.factors.count(p);
        }
      }
      if (all) {
        return m + 1;
      }
    }
    return std::nullopt;
  }

  struct DecisiveReport {
    size_t                                             level;
    bool                                               decisive;
    std::optional<std::pair<letter_type, letter_type>> violation;
  };

  // For n < depth: first letters of tau_n are constant on the right
  // vertices, and last letters on the left vertices, of each component of
  // the empty-word graph at level n+1.
  inline std::vector<DecisiveReport> is_decisive(DirectiveSequence const& ds,
                                                 size_t depth) {
    if (auto d = ds.depth(); d && depth >= *d) {
      depth = *d - 1;
    }
    std::vector<DecisiveReport> out;
    for (size_t n = 0; n < depth; ++n) {
      auto     part = connected_components(extension_graph(ds, n + 1, {}));
      Morphism const& tau = ds.morphism_at(n);
      DecisiveReport  r{n, true, std::nullopt};
      for (auto const& c : part.components) {
        for (auto b : c.right) {
          if (tau.image(b).front() != tau.image(c.right.front()).front()) {
            r.decisive  = false;
            r.violation = std::make_pair(c.right.front(), b);
            break;
          }
        }
        if (!r.decisive) {
          break;
        }
        for (auto a : c.left) {
          if (tau.image(a).back() != tau.image(c.left.front()).back()) {
            r.decisive  = false;
            r.violation = std::make_pair(c.left.front(), a);
            break;
          }
        }
        if (!r.decisive) {
          break;
        }
      }
      out.push_back(r);
    }
    return out;
  }

  namespace detail {
    inline Alphabet block_alphabet(Alphabet const&               base,
                                   std::vector<word_type> const& blocks) {
      std::vector<std::string> symbols;
      for (auto const& b : blocks) {
        symbols.push_back(base.format(b));
      }
      return Alphabet(symbols);
    }

    inline Morphism block_morphism(Morphism const&               tau,
                                   std::vector<word_type> const& upper,
                                   std::vector<word_type> const& lower,
                                   Alphabet const& upper_alphabet,
                                   Alphabet const& lower_alphabet) {
      std::vector<word_type> images;
      for (auto const& block : upper) {
        word_type w = tau.apply(block);
        size_t    k = block.size();
        word_type img;
        for (size_t i = 0; i < tau.image(block[0]).size(); ++i) {
          word_type window(w.begin() + i, w.begin() + i + k);
          auto      it = std::lower_bound(lower.begin(), lower.end(), window);
          if (it == lower.end() || *it != window) {
            throw InconsistencyError("sliding window outside the level "
                                     "language");
          }
          img.push_back(static_cast<letter_type>(it - lower.begin()));
        }
        images.push_back(img);
      }
      return Morphism(upper_alphabet, lower_alphabet, images);
    }
  }  // namespace detail

  // The k-block presentation: letters are the length-k factors of each
  // level, and [a_1...a_k] maps to the first |tau_n(a_1)| windows of length
  // k of tau_n(a_1...a_k).
  inline DirectiveSequence block_presentation(DirectiveSequence const& ds,
                                              size_t                   k) {
    if (k == 0) {
      throw InputError("block length must be positive");
    }
    if (k == 1) {
      return ds;
    }
    size_t slots = ds.is_explicit() ? *ds.depth()
                                    : ds.preperiod_length() + ds.period_length();
    // Levels 0..slots; for periodic input the top level is equivalent to
    // level preperiod.
    std::vector<std::vector<word_type>> blocks;
    std::vector<Alphabet>               alphabets;
    for (size_t n = 0; n <= slots; ++n) {
      blocks.push_back(stable_factors(ds, n, k)->factors[k]);
      alphabets.push_back(detail::block_alphabet(ds.alphabet(n), blocks[n]));
    }
    std::vector<DirectiveSequence::Named> table;
    std::vector<size_t>                   indices;
    for (size_t n = 0; n < slots; ++n) {
      table.push_back({ds.name_at(n) + "_" + std::to_string(n),
                       detail::block_morphism(ds.morphism_at(n),
                                              blocks[n + 1],
                                              blocks[n],
                                              alphabets[n + 1],
                                              alphabets[n])});
      indices.push_back(n);
    }
    DirectiveSequence out;
    if (ds.is_explicit()) {
      out = DirectiveSequence::explicit_schedule(table, indices, slots);
    } else {
      std::vector<size_t> pre(indices.begin(),
                              indices.begin() + ds.preperiod_length());
      std::vector<size_t> per(indices.begin() + ds.preperiod_length(),
                              indices.end());
      out = DirectiveSequence::eventually_periodic(table, pre, per);
    }
    out.set_recognizable_assumed(ds.recognizable_assumed());
    return out;
  }

  inline std::string to_dot(ExtensionGraph const& g, Alphabet const& a) {
    auto id = [&a](char side, letter_type x) {
      std::string s = std::string(1, side) + "_" + a.symbol(x);
      std::string q = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          q += '\\';
        }
        q += c;
      }
      return q + "\"";
    };
    std::string out = "graph extension {\n";
    out += "  label=\"" + a.format(g.word) + "\";\n";
    for (auto x : g.left) {
      out += "  " + id('L', x) + ";\n";
    }
    for (auto y : g.right) {
      out += "  " + id('R', y) + ";\n";
    }
    for (auto const& [x, y] : g.edges) {
      out += "  " + id('L', x) + " -- " + id('R', y) + ";\n";
    }
    return out + "}\n";
  }

}  // namespace sadic

#endif  // SADIC_LANGUAGE_HPP_
