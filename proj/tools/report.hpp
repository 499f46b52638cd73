// JSON views of library results. nlohmann::json keeps object keys in a
// std::map, so dumps come out with sorted keys.
#ifndef SADIC_TOOLS_REPORT_HPP_
#define SADIC_TOOLS_REPORT_HPP_

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "sadic.hpp"

namespace sadic::report {

  using nlohmann::json;

  inline json number(Integer const& x) {
    if (x.fits_slong_p()) {
      return x.get_si();
    }
    return x.get_str();
  }

  inline json numbers(std::vector<Integer> const& xs) {
    json out = json::array();
    for (auto const& x : xs) {
      out.push_back(number(x));
    }
    return out;
  }

  // Six significant digits, so goldens do not depend on the last bits.
  inline json approx(double x) {
    if (!std::isfinite(x)) {
      return nullptr;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::stod(buf);
  }

  inline json exact(QuadNumber const& x) {
    return x.to_string();
  }

  inline json exact(QuadVector const& v) {
    json out = json::array();
    for (auto const& x : v) {
      out.push_back(x.to_string());
    }
    return out;
  }

  inline json symbols(Alphabet const& a, std::vector<letter_type> const& ls) {
    json out = json::array();
    for (auto x : ls) {
      out.push_back(a.symbol(x));
    }
    return out;
  }

  inline json matrix(IntMatrix const& m) {
    json out = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (size_t j = 0; j < m.cols(); ++j) {
        row.push_back(number(m(i, j)));
      }
      out.push_back(row);
    }
    return out;
  }

  inline json partition(ComponentPartition const& p, Alphabet const& a) {
    json out = json::array();
    for (auto const& k : p.components) {
      out.push_back({{"left", symbols(a, k.left)},
                     {"right", symbols(a, k.right)}});
    }
    return out;
  }

  inline json graph(ExtensionGraph const& g, Alphabet const& a) {
    json edges = json::array();
    for (auto [l, r] : g.edges) {
      edges.push_back({a.symbol(l), a.symbol(r)});
    }
    ComponentPartition p = connected_components(g);
    return {{"level", g.level},
            {"word", a.format(g.word)},
            {"left", symbols(a, g.left)},
            {"right", symbols(a, g.right)},
            {"edges", edges},
            {"components", partition(p, a)},
            {"tree", is_tree(g)},
            {"multiplicity", multiplicity(g)},
            {"stabilized", g.stabilized}};
  }

  inline json basis(SubspaceBasis const& b) {
    json out = json::array();
    for (auto const& v : b.vectors()) {
      out.push_back(exact(v));
    }
    return out;
  }

  inline json lattice(LatticeReport const& r) {
    return {{"rank", r.rank},
            {"divisors", numbers(r.divisors)},
            {"index", r.index ? number(*r.index) : json(nullptr)},
            {"words", r.words},
            {"saturated", r.saturated}};
  }

  inline json certificate(Certificate const& c) {
    return {{"n", c.level},
            {"c", exact(c.c)},
            {"v", exact(c.v)},
            {"w", numbers(c.w)},
            {"from_full_space", c.from_full_space}};
  }

  inline json decay(DecayTable const& t) {
    json rows = json::array();
    for (size_t i = 0; i < t.levels.size(); ++i) {
      rows.push_back({{"level", t.levels[i]}, {"value", approx(t.values[i])}});
    }
    return {{"rows", rows}, {"theta", approx(t.theta)}, {"decays", t.decays}};
  }

  inline json verification(VerificationReport const& r) {
    return {{"identity", r.identity},
            {"coboundary", r.coboundary},
            {"stable", r.stable},
            {"integral", r.integral},
            {"ok", r.ok()}};
  }

  inline json optional_size(std::optional<size_t> const& x) {
    return x ? json(*x) : json(nullptr);
  }

  inline json diagnostic(DiagnosticReport const& d) {
    json levels = json::array();
    for (auto const& l : d.levels) {
      levels.push_back({{"level", l.level},
                        {"necessary", exact(l.necessary)},
                        {"sup", approx(l.sup)},
                        {"words", l.words},
                        {"r", optional_size(l.r)},
                        {"r_prime", optional_size(l.r_prime)}});
    }
    return {{"alpha", exact(d.alpha)},
            {"levels", levels},
            {"verdict", to_string(d.verdict)},
            {"gap", d.gap ? exact(*d.gap) : json(nullptr)},
            {"trend_to_zero", d.trend_to_zero}};
  }

  inline json spectrum(SpectrumReport const& s) {
    json ev = json::array();
    for (auto const& [x, trend] : s.evidence) {
      ev.push_back({{"candidate", exact(x)}, {"trend_to_zero", trend}});
    }
    return {{"q_levels", numbers(s.q_levels)},
            {"gcds", numbers(s.gcds)},
            {"q", number(s.q)},
            {"clipped", s.clipped},
            {"primes", numbers(s.primes)},
            {"group", s.group},
            {"evidence", ev}};
  }

  inline json balance(BalanceReport const& b) {
    return {{"balanced", b.balanced},
            {"letters", b.letters},
            {"dim_stable", b.dim_stable},
            {"dim_coboundary", b.dim_coboundary},
            {"dim_sum", b.dim_sum},
            {"codim", b.codim},
            {"orthogonal", b.orthogonal ? json(*b.orthogonal) : json(nullptr)}};
  }

  inline json bounds(DimensionBounds const& b) {
    return {{"k", b.k},
            {"bound1", b.bound1},
            {"bound2", b.bound2 ? json(*b.bound2) : json(nullptr)},
            {"t", optional_size(b.t)},
            {"complexity", b.complexity},
            {"tijdeman_equality", b.tijdeman_equality},
            {"dendric", b.dendric ? json(*b.dendric) : json(nullptr)}};
  }

  inline json conditions(ConditionReport const& r) {
    auto flag = [](std::optional<bool> const& x) {
      return x ? json(*x) : json(nullptr);
    };
    json levels = json::array();
    for (auto const& l : r.levels) {
      levels.push_back({{"level", l.level},
                        {"C1", flag(l.c1)},
                        {"C2", flag(l.c2)},
                        {"C3", flag(l.c3)},
                        {"C4", flag(l.c4)},
                        {"C5", flag(l.c5)}});
    }
    return {{"levels", levels}, {"holding", r.holding}};
  }

  // key: value lines for --format text.
  inline void flatten(json const& j, std::string const& prefix,
                      std::string& out) {
    if (j.is_object()) {
      for (auto it = j.begin(); it != j.end(); ++it) {
        flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                out);
      }
    } else if (j.is_array() && !j.empty()
               && (j.front().is_object() || j.front().is_array())) {
      for (size_t i = 0; i < j.size(); ++i) {
        flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
      }
    } else {
      out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump())
             + "\n";
    }
  }

  inline std::string text(json const& j) {
    std::string out;
    flatten(j, "", out);
    return out;
  }

}  // namespace sadic::report

#endif  // SADIC_TOOLS_REPORT_HPP_
