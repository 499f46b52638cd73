#ifndef SADIC_DIRECTIVE_HPP_
#define SADIC_DIRECTIVE_HPP_

#include <map>       // for map
#include <memory>    // for shared_ptr
#include <mutex>     // for mutex, lock_guard
#include <numeric>   // for gcd
#include <optional>  // for optional
#include <sstream>   // for istringstream
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "errors.hpp"  // for DomainError, InputError
#include "matrix.hpp"  // for IntMatrix
#include "words.hpp"   // for Morphism, Alphabet, word_type

namespace sadic {

  namespace detail {
    // Memo tables shared by copies of one sequence. Language tables are
    // stored type-erased so this header does not depend on the language
    // module.
    struct SequenceCache {
      std::mutex                                        mutex;
      std::map<std::pair<size_t, size_t>, Morphism>     compositions;
      std::map<std::pair<size_t, size_t>, IntMatrix>    matrices;
      std::vector<std::vector<Integer>>                 heights;
      std::map<std::pair<size_t, size_t>, std::shared_ptr<void const>>
          languages;
    };
  }  // namespace detail

  // A chain of morphisms tau_n : A_{n+1}* -> A_n*, either eventually
  // periodic (preperiod + period) or an explicit finite schedule of some
  // depth D beyond which nothing is defined.
  class DirectiveSequence {
   public:
    struct Named {
      std::string name;
      Morphism    morphism;
    };

    DirectiveSequence() = default;

    // Names index into `table`; the schedule lists refer to table entries.
    static DirectiveSequence eventually_periodic(std::vector<Named> table,
                                                 std::vector<size_t> pre,
                                                 std::vector<size_t> period) {
      if (period.empty()) {
        throw InputError("the period of a directive sequence is empty");
      }
      DirectiveSequence ds;
      ds._table    = std::move(table);
      ds._pre      = std::move(pre);
      ds._period   = std::move(period);
      ds._explicit = false;
      ds.build_slots();
      return ds;
    }

    static DirectiveSequence explicit_schedule(std::vector<Named>  table,
                                               std::vector<size_t> schedule,
                                               size_t              depth) {
      if (depth == 0 || depth > schedule.size()) {
        throw InputError("explicit schedule depth must be between 1 and the "
                         "schedule length");
      }
      schedule.resize(depth);
      DirectiveSequence ds;
      ds._table    = std::move(table);
      ds._pre      = std::move(schedule);
      ds._explicit = true;
      ds.build_slots();
      return ds;
    }

    static DirectiveSequence constant(Morphism const& tau,
                                      std::string     name = "tau") {
      return eventually_periodic({{std::move(name), tau}}, {}, {0});
    }

    static DirectiveSequence periodic(std::vector<Morphism> const& pre,
                                      std::vector<Morphism> const& period) {
      std::vector<Named>  table;
      std::vector<size_t> p, q;
      for (auto const& m : pre) {
        p.push_back(table.size());
        table.push_back({"t" + std::to_string(table.size()), m});
      }
      for (auto const& m : period) {
        q.push_back(table.size());
        table.push_back({"t" + std::to_string(table.size()), m});
      }
      return eventually_periodic(table, p, q);
    }

    static DirectiveSequence from_schedule(std::vector<Morphism> const& seq) {
      std::vector<Named>  table;
      std::vector<size_t> s;
      for (auto const& m : seq) {
        s.push_back(table.size());
        table.push_back({"t" + std::to_string(table.size()), m});
      }
      return explicit_schedule(table, s, s.size());
    }

    bool is_explicit() const noexcept {
      return _explicit;
    }
    // Declared depth of an explicit schedule; none when infinite.
    std::optional<size_t> depth() const noexcept {
      if (_explicit) {
        return _pre.size();
      }
      return std::nullopt;
    }
    size_t preperiod_length() const noexcept {
      return _explicit ? _pre.size() : _pre.size();
    }
    size_t period_length() const noexcept {
      return _period.size();
    }
    bool is_constant() const noexcept {
      return !_explicit && _pre.empty() && _period.size() == 1;
    }
    bool recognizable_assumed() const noexcept {
      return _recognizable;
    }
    void set_recognizable_assumed(bool v) noexcept {
      _recognizable = v;
    }
    std::vector<Named> const& table() const noexcept {
      return _table;
    }

    void check_index(size_t n, std::string const& what) const {
      if (_explicit && n >= _pre.size()) {
        throw DomainError(what + " at index " + std::to_string(n)
                          + " is beyond the declared depth "
                          + std::to_string(_pre.size()));
      }
    }

    void check_level(size_t n) const {
      if (_explicit && n > _pre.size()) {
        throw DomainError("level " + std::to_string(n)
                          + " is beyond the declared depth "
                          + std::to_string(_pre.size()));
      }
    }

    // Levels with the same tail share a representative.
    size_t canonical_level(size_t n) const noexcept {
      if (_explicit || n < _pre.size()) {
        return n;
      }
      return _pre.size() + (n - _pre.size()) % _period.size();
    }

    Morphism const& morphism_at(size_t n) const {
      check_index(n, "morphism");
      if (n < _pre.size()) {
        return _slots[n];
      }
      return _slots[_pre.size() + (n - _pre.size()) % _period.size()];
    }

    std::string const& name_at(size_t n) const {
      check_index(n, "morphism");
      size_t slot = n < _pre.size()
                        ? _pre[n]
                        : _period[(n - _pre.size()) % _period.size()];
      return _table[slot].name;
    }

    Alphabet const& alphabet(size_t n) const {
      check_level(n);
      if (n == 0) {
        return morphism_at(0).codomain();
      }
      return morphism_at(n - 1).domain();
    }

    // tau_{n,m} = tau_n o ... o tau_{m-1}; the identity when n == m.
    Morphism compose_range(size_t n, size_t m) const {
      if (m < n) {
        throw DomainError("compose_range needs n <= m");
      }
      check_level(m);
      if (n == m) {
        return Morphism::identity(alphabet(n));
      }
      auto key = std::make_pair(canonical_level(n), m - n);
      {
        std::lock_guard<std::mutex> lock(_cache->mutex);
        auto it = _cache->compositions.find(key);
        if (it != _cache->compositions.end()) {
          return it->second;
        }
      }
      Morphism inner = morphism_at(m - 1);
      Morphism out   = m - n == 1 ? inner
                                  : compose(compose_range(n, m - 1), inner);
      std::lock_guard<std::mutex> lock(_cache->mutex);
      _cache->compositions.emplace(key, out);
      return out;
    }

    // M_{n,m}, rows indexed by A_n and columns by A_m.
    IntMatrix incidence_range(size_t n, size_t m) const {
      if (m < n) {
        throw DomainError("incidence_range needs n <= m");
      }
      check_level(m);
      if (n == m) {
        return IntMatrix::identity(alphabet(n).size());
      }
      auto key = std::make_pair(canonical_level(n), m - n);
      {
        std::lock_guard<std::mutex> lock(_cache->mutex);
        auto it = _cache->matrices.find(key);
        if (it != _cache->matrices.end()) {
          return it->second;
        }
      }
      IntMatrix out = incidence_range(n, m - 1)
                      * morphism_at(m - 1).incidence_matrix();
      std::lock_guard<std::mutex> lock(_cache->mutex);
      _cache->matrices.emplace(key, out);
      return out;
    }

    // Product of one full period at a level past the preperiod.
    IntMatrix period_product(size_t n) const {
      if (_explicit) {
        throw DomainError("an explicit schedule has no period");
      }
      if (n < _pre.size()) {
        throw DomainError("period product requested inside the preperiod");
      }
      return incidence_range(n, n + _period.size());
    }

    // h_n(a) = |tau_{0,n}(a)|.
    std::vector<Integer> heights(size_t n) const {
      check_level(n);
      std::lock_guard<std::mutex> lock(_cache->mutex);
      auto& h = _cache->heights;
      if (h.empty()) {
        h.push_back(std::vector<Integer>(alphabet(0).size(), Integer(1)));
      }
      while (h.size() <= n) {
        IntMatrix m = morphism_at(h.size() - 1).incidence_matrix();
        std::vector<Integer> next = row_times(h.back(), m);
        h.push_back(next);
      }
      return h[n];
    }

    // |tau_{n,m}(a)| for a in A_m.
    std::vector<Integer> relative_heights(size_t n, size_t m) const {
      IntMatrix                  mat = incidence_range(n, m);
      std::vector<Integer> ones(mat.rows(), Integer(1));
      return row_times(ones, mat);
    }

    // The compatible letter chain: tau_m(a_{m+1}) starts with a_m.
    letter_type chain_letter(size_t m) const {
      check_level(m);
      size_t top;
      letter_type a;
      if (_explicit) {
        top = _pre.size();
        a   = 0;
      } else {
        auto [anchor_letter, cycle] = periodic_anchor();
        size_t stride               = cycle * _period.size();
        size_t pre                  = _pre.size();
        size_t t                    = m > pre ? m - pre : 0;
        top = pre + stride * ((t + stride - 1) / stride);
        a   = anchor_letter;
      }
      for (size_t i = top; i > m; --i) {
        a = morphism_at(i - 1).image(a).front();
      }
      return a;
    }

    // A prefix of length up to `len` of a level-n point, expanded from the
    // letter chain. Shorter only when an explicit schedule runs out.
    word_type point_prefix(size_t n, size_t len) const {
      check_level(n);
      size_t top = n;
      while (true) {
        std::vector<Integer> rh = relative_heights(n, top);
        if (rh[chain_letter(top)] >= len) {
          break;
        }
        if (_explicit && top == _pre.size()) {
          break;
        }
        if (top - n > 4096) {
          throw DomainError("point prefix does not grow");
        }
        ++top;
      }
      word_type w{chain_letter(top)};
      for (size_t i = top; i > n; --i) {
        Morphism const& tau = morphism_at(i - 1);
        word_type       next;
        for (auto a : w) {
          auto const& img = tau.image(a);
          next.insert(next.end(), img.begin(), img.end());
          if (next.size() >= len) {
            break;
          }
        }
        if (next.size() > len) {
          next.resize(len);
        }
        w = std::move(next);
      }
      return w;
    }

    detail::SequenceCache& cache() const {
      return *_cache;
    }

    std::string to_text() const;

   private:
    void build_slots() {
      for (auto i : _pre) {
        if (i >= _table.size()) {
          throw InputError("schedule refers to an unknown morphism");
        }
      }
      for (auto i : _period) {
        if (i >= _table.size()) {
          throw InputError("schedule refers to an unknown morphism");
        }
      }
      // Relabel alphabets so that codomain(tau_{n+1}) = domain(tau_n) as
      // ordered alphabets; only the listing order may change.
      std::vector<Morphism> pre, per;
      for (auto i : _pre) {
        pre.push_back(_table[i].morphism);
      }
      for (auto i : _period) {
        per.push_back(_table[i].morphism);
      }
      auto relabel = [](Morphism const& inner, Alphabet const& target,
                        size_t index) {
        if (inner.codomain().symbol_set() != target.symbol_set()) {
          throw DomainError("alphabets do not chain at index "
                            + std::to_string(index));
        }
        return inner.with_codomain(target);
      };
      for (size_t j = 1; j < per.size(); ++j) {
        per[j] = relabel(per[j], per[j - 1].domain(), _pre.size() + j);
      }
      if (!per.empty()) {
        per[0] = relabel(per[0], per.back().domain(), _pre.size());
      }
      if (!pre.empty() && !per.empty()) {
        if (pre.back().domain().symbol_set() != per[0].codomain().symbol_set()) {
          throw DomainError("alphabets do not chain at index "
                            + std::to_string(pre.size()));
        }
        pre.back() = pre.back().with_domain(per[0].codomain());
      }
      for (size_t i = pre.size(); i-- > 1;) {
        pre[i] = relabel(pre[i], pre[i - 1].domain(), i);
      }
      _slots = pre;
      _slots.insert(_slots.end(), per.begin(), per.end());
    }

    // A letter a of A_pre with F^c(a) = a, F the first-letter map of one
    // period, together with the cycle length c.
    std::pair<letter_type, size_t> periodic_anchor() const {
      size_t                   pre = _pre.size();
      auto                     first = [&](letter_type a) {
        for (size_t i = pre + _period.size(); i > pre; --i) {
          a = morphism_at(i - 1).image(a).front();
        }
        return a;
      };
      std::map<letter_type, size_t> seen;
      letter_type                   a = 0;
      for (size_t step = 0;; ++step) {
        auto it = seen.find(a);
        if (it != seen.end()) {
          return {a, step - it->second};
        }
        seen.emplace(a, step);
        a = first(a);
      }
    }

    std::vector<Named>    _table;
    std::vector<size_t>   _pre;
    std::vector<size_t>   _period;
    std::vector<Morphism> _slots;
    bool                  _explicit     = false;
    bool                  _recognizable = true;
    std::shared_ptr<detail::SequenceCache> _cache
        = std::make_shared<detail::SequenceCache>();
  };

  inline std::string DirectiveSequence::to_text() const {
    std::string out;
    for (auto const& [name, m] : _table) {
      out += "morphism " + name + "\n" + m.to_text() + "\n";
    }
    auto list = [this](std::vector<size_t> const& idx) {
      std::string s = "[";
      for (size_t i = 0; i < idx.size(); ++i) {
        s += (i ? ", " : "") + _table[idx[i]].name;
      }
      return s + "]";
    };
    out += "schedule\n";
    if (_explicit) {
      out += "explicit = " + list(_pre) + "\n";
      out += "depth = " + std::to_string(_pre.size()) + "\n";
    } else {
      out += "preperiod = " + list(_pre) + "\n";
      out += "period = " + list(_period) + "\n";
    }
    return out;
  }

  inline bool operator==(DirectiveSequence const& a,
                         DirectiveSequence const& b) {
    return a.to_text() == b.to_text();
  }

  namespace detail {
    inline std::vector<std::string> parse_name_list(std::string const& text,
                                                    size_t lineno) {
      std::string t = trim(text);
      if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
        throw InputError("expected a bracketed list of names (line "
                         + std::to_string(lineno) + ")");
      }
      std::vector<std::string> out;
      std::string              body = t.substr(1, t.size() - 2);
      std::istringstream       in(body);
      std::string              item;
      while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) {
          if (trim(body).empty()) {
            break;
          }
          throw InputError("empty name in list (line "
                           + std::to_string(lineno) + ")");
        }
        out.push_back(item);
      }
      return out;
    }
  }  // namespace detail

  // Named "morphism NAME" blocks of rules followed by a "schedule" stanza;
  // a file with bare rules only is read as a constant sequence.
  inline DirectiveSequence parse_directive(std::string const& text) {
    std::istringstream in(text);
    std::string        line;
    size_t             lineno = 0;
    std::vector<std::pair<std::string, detail::RawMorphism>> blocks;
    detail::RawMorphism                                      bare;
    bool                                                     in_schedule = false;
    std::map<std::string, std::string>                       keys;
    std::map<std::string, size_t>                            key_lines;
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = detail::trim(detail::strip_comment(line));
      if (t.empty()) {
        continue;
      }
      auto where = " (line " + std::to_string(lineno) + ")";
      if (t == "schedule") {
        if (in_schedule) {
          throw InputError("second schedule stanza" + where);
        }
        in_schedule = true;
        continue;
      }
      if (t.rfind("morphism", 0) == 0 && t.find("->") == std::string::npos) {
        if (in_schedule) {
          throw InputError("morphism block after the schedule" + where);
        }
        std::string name = detail::trim(t.substr(8));
        if (name.empty() || name.find_first_of(" \t[],=") != std::string::npos) {
          throw InputError("bad morphism name" + where);
        }
        for (auto const& b : blocks) {
          if (b.first == name) {
            throw InputError("morphism \"" + name + "\" defined twice" + where);
          }
        }
        blocks.emplace_back(name, detail::RawMorphism{});
        continue;
      }
      if (in_schedule) {
        auto eq = t.find('=');
        if (eq == std::string::npos) {
          throw InputError("expected \"key = value\" in schedule" + where);
        }
        std::string key = detail::trim(t.substr(0, eq));
        if (key != "preperiod" && key != "period" && key != "explicit"
            && key != "depth") {
          throw InputError("unknown schedule key \"" + key + "\"" + where);
        }
        if (keys.count(key)) {
          throw InputError("schedule key \"" + key + "\" repeated" + where);
        }
        keys[key]      = detail::trim(t.substr(eq + 1));
        key_lines[key] = lineno;
        continue;
      }
      detail::RawMorphism& target = blocks.empty() ? bare : blocks.back().second;
      try {
        if (!detail::parse_rule(t, lineno, target)) {
          throw InputError("expected \"letter -> word\"" + where);
        }
      } catch (InputError const& e) {
        std::string msg = e.what();
        if (msg.find("(line") == std::string::npos) {
          msg += where;
        }
        throw InputError(msg);
      }
    }
    if (blocks.empty()) {
      if (in_schedule) {
        throw InputError("schedule given without morphism blocks");
      }
      if (bare.letters.empty()) {
        throw InputError("no rules found");
      }
      return DirectiveSequence::constant(detail::build_morphism(bare));
    }
    if (!bare.letters.empty()) {
      throw InputError("rules before the first morphism block");
    }
    if (!in_schedule) {
      throw InputError("missing schedule stanza");
    }
    std::vector<DirectiveSequence::Named> table;
    std::map<std::string, size_t>         index;
    for (auto const& [name, raw] : blocks) {
      if (raw.letters.empty()) {
        throw InputError("morphism \"" + name + "\" has no rules");
      }
      index[name] = table.size();
      try {
        table.push_back({name, detail::build_morphism(raw)});
      } catch (InputError const& e) {
        throw InputError("morphism \"" + name + "\": " + e.what());
      }
    }
    auto lookup = [&](std::string const& key) {
      std::vector<size_t> out;
      for (auto const& n : detail::parse_name_list(keys[key], key_lines[key])) {
        auto it = index.find(n);
        if (it == index.end()) {
          throw InputError("unknown morphism \"" + n + "\" (line "
                           + std::to_string(key_lines[key]) + ")");
        }
        out.push_back(it->second);
      }
      return out;
    };
    if (keys.count("explicit")) {
      if (keys.count("period") || keys.count("preperiod")) {
        throw InputError("explicit schedules take no period or preperiod");
      }
      auto   sched = lookup("explicit");
      size_t depth = sched.size();
      if (keys.count("depth")) {
        Integer d = detail::parse_integer(keys["depth"]);
        if (d < 1 || d > static_cast<long>(sched.size())) {
          throw InputError("depth must be between 1 and the schedule length");
        }
        depth = d.get_ui();
      }
      return DirectiveSequence::explicit_schedule(table, sched, depth);
    }
    if (keys.count("depth")) {
      throw InputError("depth applies to explicit schedules only");
    }
    if (!keys.count("period")) {
      throw InputError("schedule needs a period or an explicit list");
    }
    std::vector<size_t> pre;
    if (keys.count("preperiod")) {
      pre = lookup("preperiod");
    }
    return DirectiveSequence::eventually_periodic(table, pre, lookup("period"));
  }

  struct PrimitivityWitness {
    size_t                level;
    std::optional<size_t> witness;  // least m with M_{n,m} > 0, if found
  };

  // For each n < depth, the least m <= n + depth with M_{n,m} positive
  // (m <= D for explicit schedules).
  inline std::vector<PrimitivityWitness>
  is_primitive(DirectiveSequence const& ds, size_t depth) {
    if (depth < 1) {
      throw InputError("depth must be at least 1");
    }
    if (auto d = ds.depth(); d && depth > *d) {
      depth = *d;
    }
    std::vector<PrimitivityWitness> out;
    for (size_t n = 0; n < depth; ++n) {
      PrimitivityWitness w{n, std::nullopt};
      size_t             last = n + depth;
      if (auto d = ds.depth()) {
        last = std::min(last, *d);
      }
      for (size_t m = n + 1; m <= last; ++m) {
        if (is_positive_matrix(ds.incidence_range(n, m))) {
          w.witness = m;
          break;
        }
      }
      out.push_back(w);
    }
    return out;
  }

  inline std::vector<bool> is_positive(DirectiveSequence const& ds,
                                       size_t                   depth) {
    if (auto d = ds.depth(); d && depth > *d) {
      depth = *d;
    }
    std::vector<bool> out;
    for (size_t n = 0; n < depth; ++n) {
      out.push_back(is_positive_matrix(ds.morphism_at(n).incidence_matrix()));
    }
    return out;
  }

  // Least m > n with M_{n,m} positive, searching no further than `limit`.
  inline std::optional<size_t> positivity_witness(DirectiveSequence const& ds,
                                                  size_t n, size_t limit) {
    if (auto d = ds.depth(); d && limit > *d) {
      limit = *d;
    }
    for (size_t m = n + 1; m <= limit; ++m) {
      if (is_positive_matrix(ds.incidence_range(n, m))) {
        return m;
      }
    }
    return std::nullopt;
  }

  // The sequence of pieces tau_{n_k, n_{k+1}}, preceded by tau_{0, n_0}
  // when n_0 > 0. The result is an explicit schedule.
  inline DirectiveSequence contraction(DirectiveSequence const& ds,
                                       std::vector<size_t> const& cuts) {
    if (cuts.size() < 2) {
      throw InputError("contraction needs at least two cut points");
    }
    for (size_t i = 1; i < cuts.size(); ++i) {
      if (cuts[i] <= cuts[i - 1]) {
        throw InputError("cut points must be strictly increasing");
      }
    }
    ds.check_level(cuts.back());
    std::vector<Morphism> pieces;
    if (cuts[0] > 0) {
      pieces.push_back(ds.compose_range(0, cuts[0]));
    }
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      pieces.push_back(ds.compose_range(cuts[i], cuts[i + 1]));
    }
    return DirectiveSequence::from_schedule(pieces);
  }

  // Contraction along the cut points 0, s, 2s, ...; eventually periodic
  // again when the input is.
  inline DirectiveSequence contraction_uniform(DirectiveSequence const& ds,
                                               size_t stride) {
    if (stride == 0) {
      throw InputError("stride must be positive");
    }
    if (ds.is_explicit()) {
      std::vector<size_t> cuts;
      for (size_t c = 0; c <= *ds.depth(); c += stride) {
        cuts.push_back(c);
      }
      return contraction(ds, cuts);
    }
    size_t pre = ds.preperiod_length(), len = ds.period_length();
    size_t j0    = (pre + stride - 1) / stride;
    size_t cycle = len / std::gcd(len, stride);
    std::vector<Morphism> p, q;
    for (size_t j = 0; j < j0; ++j) {
      p.push_back(ds.compose_range(j * stride, (j + 1) * stride));
    }
    for (size_t j = j0; j < j0 + cycle; ++j) {
      q.push_back(ds.compose_range(j * stride, (j + 1) * stride));
    }
    return DirectiveSequence::periodic(p, q);
  }

  struct DumontThomasLayer {
    word_type   prefix;  // u_i
    letter_type letter;  // a_i
  };

  // Layers (u_i, a_i), listed from i = n up to i = m, locating position p
  // of tau_{n,m}(a): u_i a_i is a prefix of tau_i(a_{i+1}), a_m = a, u_m is
  // empty, and tau_{n,m-1}(u_{m-1}) ... tau_{n,n+1}(u_{n+1}) u_n is the
  // prefix of length p.
  inline std::vector<DumontThomasLayer>
  dumont_thomas_decompose(DirectiveSequence const& ds, size_t n, size_t m,
                          letter_type a, Integer p) {
    if (m < n) {
      throw DomainError("decomposition needs n <= m");
    }
    auto top = ds.relative_heights(n, m);
    if (a >= top.size()) {
      throw DomainError("letter outside the alphabet");
    }
    if (p < 0 || p >= top[a]) {
      throw DomainError("position outside the image");
    }
    std::vector<DumontThomasLayer> layers(m - n + 1);
    layers[m - n] = {{}, a};
    letter_type current = a;
    for (size_t i = m; i-- > n;) {
      auto              h   = ds.relative_heights(n, i);
      word_type const&  img = ds.morphism_at(i).image(current);
      word_type         u;
      size_t            k = 0;
      while (p >= h[img[k]]) {
        p -= h[img[k]];
        u.push_back(img[k]);
        ++k;
      }
      current       = img[k];
      layers[i - n] = {u, current};
    }
    return layers;
  }

}  // namespace sadic

#endif  // SADIC_DIRECTIVE_HPP_
