#ifndef SADIC_WORDS_HPP_
#define SADIC_WORDS_HPP_

#include <algorithm>  // for sort, find
#include <cstdint>    // for uint32_t
#include <map>        // for map
#include <optional>   // for optional
#include <set>        // for set
#include <sstream>    // for istringstream
#include <string>     // for string
#include <vector>     // for vector

#include "errors.hpp"    // for InputError, DomainError
#include "matrix.hpp"    // for IntMatrix
#include "rational.hpp"  // for Integer

namespace sadic {

  using letter_type = std::uint32_t;
  using word_type   = std::vector<letter_type>;

  // Letter counts, indexed by the letters of an alphabet.
  using ParikhVector = std::vector<Integer>;

  // Finite ordered alphabet; letter i is the i-th symbol.
  //
  // In text a symbol is written bare when it is a single character other
  // than whitespace, brackets or '#', and as "[symbol]" otherwise.
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> symbols)
        : _symbols(std::move(symbols)) {
      for (size_t i = 0; i < _symbols.size(); ++i) {
        if (_symbols[i].empty()) {
          throw InputError("empty letter symbol");
        }
        if (!_index.emplace(_symbols[i], static_cast<letter_type>(i)).second) {
          throw InputError("letter \"" + _symbols[i] + "\" listed twice");
        }
      }
    }

    // Symbols "0", "1", ..., "n-1".
    static Alphabet numbered(size_t n) {
      std::vector<std::string> s;
      for (size_t i = 0; i < n; ++i) {
        s.push_back(std::to_string(i));
      }
      return Alphabet(s);
    }

    size_t size() const noexcept {
      return _symbols.size();
    }
    std::string const& symbol(letter_type a) const {
      return _symbols.at(a);
    }
    std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }
    bool contains(std::string const& s) const {
      return _index.count(s) != 0;
    }
    letter_type index(std::string const& s) const {
      auto it = _index.find(s);
      if (it == _index.end()) {
        throw InputError("unknown letter \"" + s + "\"");
      }
      return it->second;
    }
    std::set<std::string> symbol_set() const {
      return std::set<std::string>(_symbols.begin(), _symbols.end());
    }

    static bool is_bare(std::string const& s) {
      return s.size() == 1 && !std::isspace(static_cast<unsigned char>(s[0]))
             && s[0] != '[' && s[0] != ']' && s[0] != '#';
    }

    static std::string quote(std::string const& s) {
      return is_bare(s) ? s : "[" + s + "]";
    }

    std::string format(word_type const& w) const {
      std::string out;
      for (auto a : w) {
        out += quote(symbol(a));
      }
      return out;
    }

    // Splits text into symbols; brackets nest.
    static std::vector<std::string> tokenize(std::string const& text) {
      std::vector<std::string> out;
      for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          continue;
        }
        if (c == ']') {
          throw InputError("unbalanced ']' in \"" + text + "\"");
        }
        if (c != '[') {
          out.emplace_back(1, c);
          continue;
        }
        size_t depth = 1, j = i + 1;
        for (; j < text.size() && depth > 0; ++j) {
          depth += text[j] == '[' ? 1 : (text[j] == ']' ? -1 : 0);
        }
        if (depth != 0) {
          throw InputError("unbalanced '[' in \"" + text + "\"");
        }
        std::string sym = text.substr(i + 1, j - i - 2);
        if (sym.empty()) {
          throw InputError("empty bracketed letter in \"" + text + "\"");
        }
        out.push_back(sym);
        i = j - 1;
      }
      return out;
    }

    word_type parse(std::string const& text) const {
      word_type w;
      for (auto const& s : tokenize(text)) {
        w.push_back(index(s));
      }
      return w;
    }

    friend bool operator==(Alphabet const& a, Alphabet const& b) {
      return a._symbols == b._symbols;
    }
    friend bool operator!=(Alphabet const& a, Alphabet const& b) {
      return !(a == b);
    }

   private:
    std::vector<std::string>           _symbols;
    std::map<std::string, letter_type> _index;
  };

  inline ParikhVector parikh(word_type const& w, size_t alphabet_size) {
    ParikhVector v(alphabet_size, Integer(0));
    for (auto a : w) {
      if (a >= alphabet_size) {
        throw DomainError("letter outside the alphabet");
      }
      v[a] += 1;
    }
    return v;
  }

  inline bool is_factor(word_type const& u, word_type const& w) {
    return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
  }

  inline size_t count_occurrences(word_type const& u, word_type const& w) {
    if (u.empty() || u.size() > w.size()) {
      return 0;
    }
    size_t n = 0;
    for (size_t i = 0; i + u.size() <= w.size(); ++i) {
      if (std::equal(u.begin(), u.end(), w.begin() + i)) {
        ++n;
      }
    }
    return n;
  }

  // A non-erasing, letter-onto morphism from domain words to codomain words.
  class Morphism {
   public:
    Morphism() = default;

    Morphism(Alphabet domain, Alphabet codomain, std::vector<word_type> images)
        : _domain(std::move(domain)),
          _codomain(std::move(codomain)),
          _images(std::move(images)) {
      if (_images.size() != _domain.size()) {
        throw InputError("a morphism needs one image per domain letter");
      }
      std::vector<bool> seen(_codomain.size(), false);
      for (size_t a = 0; a < _images.size(); ++a) {
        if (_images[a].empty()) {
          throw InputError("image of \"" + _domain.symbol(a)
                           + "\" is empty; morphisms must be non-erasing");
        }
        for (auto b : _images[a]) {
          if (b >= _codomain.size()) {
            throw InputError("image letter outside the codomain");
          }
          seen[b] = true;
        }
      }
      for (size_t b = 0; b < seen.size(); ++b) {
        if (!seen[b]) {
          throw InputError("letter \"" + _codomain.symbol(b)
                           + "\" occurs in no image; morphisms must be "
                             "letter-onto");
        }
      }
    }

    static Morphism identity(Alphabet const& a) {
      std::vector<word_type> images;
      for (letter_type i = 0; i < a.size(); ++i) {
        images.push_back({i});
      }
      return Morphism(a, a, images);
    }

    Alphabet const& domain() const noexcept {
      return _domain;
    }
    Alphabet const& codomain() const noexcept {
      return _codomain;
    }
    word_type const& image(letter_type a) const {
      return _images.at(a);
    }
    std::vector<word_type> const& images() const noexcept {
      return _images;
    }

    word_type apply(word_type const& w) const {
      word_type out;
      for (auto a : w) {
        if (a >= _images.size()) {
          throw DomainError("letter outside the domain");
        }
        out.insert(out.end(), _images[a].begin(), _images[a].end());
      }
      return out;
    }

    // Entry (b, a) counts b in the image of a.
    IntMatrix incidence_matrix() const {
      IntMatrix m(_codomain.size(), _domain.size());
      for (size_t a = 0; a < _images.size(); ++a) {
        for (auto b : _images[a]) {
          m(b, a) += 1;
        }
      }
      return m;
    }

    bool is_left_proper() const {
      for (auto const& w : _images) {
        if (w.front() != _images[0].front()) {
          return false;
        }
      }
      return true;
    }
    bool is_right_proper() const {
      for (auto const& w : _images) {
        if (w.back() != _images[0].back()) {
          return false;
        }
      }
      return true;
    }
    bool is_proper() const {
      return is_left_proper() && is_right_proper();
    }

    std::optional<size_t> constant_length() const {
      for (auto const& w : _images) {
        if (w.size() != _images[0].size()) {
          return std::nullopt;
        }
      }
      return _images[0].size();
    }

    bool is_endomorphism() const {
      return _domain == _codomain;
    }

    // The same map with the codomain letters listed in another order.
    Morphism with_codomain(Alphabet const& target) const {
      if (target.symbol_set() != _codomain.symbol_set()) {
        throw DomainError("codomain relabelling must keep the same letters");
      }
      std::vector<word_type> images = _images;
      for (auto& w : images) {
        for (auto& b : w) {
          b = target.index(_codomain.symbol(b));
        }
      }
      return Morphism(_domain, target, images);
    }

    // The same map with the domain letters listed in another order.
    Morphism with_domain(Alphabet const& target) const {
      if (target.symbol_set() != _domain.symbol_set()) {
        throw DomainError("domain relabelling must keep the same letters");
      }
      std::vector<word_type> images;
      for (auto const& s : target.symbols()) {
        images.push_back(_images[_domain.index(s)]);
      }
      return Morphism(target, _codomain, images);
    }

    // "a -> image" lines in domain order.
    std::string to_text() const {
      std::string out;
      for (size_t a = 0; a < _images.size(); ++a) {
        out += Alphabet::quote(_domain.symbol(a)) + " -> "
               + _codomain.format(_images[a]) + "\n";
      }
      return out;
    }

    friend bool operator==(Morphism const& a, Morphism const& b) {
      return a._domain == b._domain && a._codomain == b._codomain
             && a._images == b._images;
    }
    friend bool operator!=(Morphism const& a, Morphism const& b) {
      return !(a == b);
    }

   private:
    Alphabet               _domain;
    Alphabet               _codomain;
    std::vector<word_type> _images;
  };

  // tau o sigma: first sigma, then tau.
  inline Morphism compose(Morphism const& tau, Morphism const& sigma) {
    if (sigma.codomain() != tau.domain()) {
      throw DomainError("cannot compose: codomain of the inner morphism is not "
                        "the domain of the outer one");
    }
    std::vector<word_type> images;
    for (auto const& w : sigma.images()) {
      images.push_back(tau.apply(w));
    }
    return Morphism(sigma.domain(), tau.codomain(), images);
  }

  namespace detail {
    inline std::string strip_comment(std::string const& line) {
      auto pos = line.find('#');
      return pos == std::string::npos ? line : line.substr(0, pos);
    }

    struct RawMorphism {
      std::vector<std::string>              letters;
      std::vector<std::vector<std::string>> images;
    };

    inline Morphism build_morphism(RawMorphism const& raw) {
      Alphabet              domain(raw.letters);
      std::set<std::string> used;
      bool                  inside = true;
      for (auto const& img : raw.images) {
        for (auto const& s : img) {
          used.insert(s);
          inside = inside && domain.contains(s);
        }
      }
      // Endomorphism when the images stay inside the domain letters;
      // otherwise the codomain is the sorted set of image letters.
      Alphabet codomain
          = inside ? domain
                   : Alphabet(std::vector<std::string>(used.begin(), used.end()));
      std::vector<word_type> images;
      for (auto const& img : raw.images) {
        word_type w;
        for (auto const& s : img) {
          w.push_back(codomain.index(s));
        }
        images.push_back(w);
      }
      return Morphism(domain, codomain, images);
    }

    // Parses "a -> w"; returns false when the line has no arrow.
    inline bool parse_rule(std::string const& line,
                           size_t             lineno,
                           RawMorphism&       raw) {
      auto arrow = line.find("->");
      if (arrow == std::string::npos) {
        return false;
      }
      auto where = " (line " + std::to_string(lineno) + ")";
      auto lhs   = Alphabet::tokenize(line.substr(0, arrow));
      if (lhs.size() != 1) {
        throw InputError("left side must be exactly one letter" + where);
      }
      if (std::find(raw.letters.begin(), raw.letters.end(), lhs[0])
          != raw.letters.end()) {
        throw InputError("letter \"" + lhs[0] + "\" defined twice" + where);
      }
      auto rhs = Alphabet::tokenize(line.substr(arrow + 2));
      if (rhs.empty()) {
        throw InputError("empty image" + where);
      }
      raw.letters.push_back(lhs[0]);
      raw.images.push_back(rhs);
      return true;
    }
  }  // namespace detail

  // One "a -> w" rule per line; '#' starts a comment.
  inline Morphism parse_morphism(std::string const& text) {
    std::istringstream  in(text);
    std::string         line;
    size_t              lineno = 0;
    detail::RawMorphism raw;
    while (std::getline(in, line)) {
      ++lineno;
      line = detail::trim(detail::strip_comment(line));
      if (line.empty()) {
        continue;
      }
      try {
        if (!detail::parse_rule(line, lineno, raw)) {
          throw InputError("expected \"letter -> word\" (line "
                           + std::to_string(lineno) + ")");
        }
      } catch (InputError const& e) {
        std::string msg = e.what();
        if (msg.find("(line") == std::string::npos) {
          msg += " (line " + std::to_string(lineno) + ")";
        }
        throw InputError(msg);
      }
    }
    if (raw.letters.empty()) {
      throw InputError("no rules found");
    }
    return detail::build_morphism(raw);
  }

}  // namespace sadic

#endif  // SADIC_WORDS_HPP_
