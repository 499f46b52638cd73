#ifndef SADIC_COBOUNDARY_HPP_
#define SADIC_COBOUNDARY_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "directive.hpp"  // for DirectiveSequence
#include "errors.hpp"     // for DomainError, InstabilityError
#include "language.hpp"   // for extension_graph, connected_components
#include "lattice.hpp"    // for smith_normal_form
#include "linalg.hpp"     // for SubspaceBasis
#include "quadratic.hpp"  // for QuadNumber, QuadVector

namespace sadic {

  struct CoboundaryBasis {
    size_t                  level = 0;
    ComponentPartition      partition;
    std::vector<QuadVector> generators;  // 1^R_K - 1^L_K, last K dropped
    SubspaceBasis           basis;

    size_t components() const noexcept {
      return partition.components.size();
    }
    size_t dim() const noexcept {
      return basis.dim();
    }
  };

  namespace detail {
    inline CoboundaryBasis coboundary_from(ComponentPartition const& part,
                                           size_t letters, size_t level) {
      CoboundaryBasis out;
      out.level     = level;
      out.partition = part;
      for (size_t i = 0; i + 1 < part.components.size(); ++i) {
        QuadVector v(letters, QuadNumber(0));
        for (auto b : part.components[i].right) {
          v[b] += 1;
        }
        for (auto a : part.components[i].left) {
          v[a] -= 1;
        }
        out.generators.push_back(v);
      }
      out.basis = SubspaceBasis(letters, out.generators);
      if (out.basis.dim() + 1 != std::max<size_t>(part.components.size(), 1)) {
        throw InconsistencyError("coboundary generators are dependent");
      }
      return out;
    }

    // Every letter shows up on both sides of the empty-word graph.
    inline bool covers_alphabet(ExtensionGraph const& g, size_t letters) {
      return g.left.size() == letters && g.right.size() == letters;
    }
  }  // namespace detail

  inline CoboundaryBasis coboundary_space(DirectiveSequence const& ds,
                                          size_t                   n) {
    auto g = extension_graph(ds, n, {});
    return detail::coboundary_from(
        connected_components(g), ds.alphabet(n).size(), n);
  }

  // Gamma(eps) connected. An unstabilized table only has fewer edges, so a
  // connected graph on all letters already settles the question.
  inline bool is_trivial_space(DirectiveSequence const& ds, size_t n) {
    auto g = extension_graph(ds, n, {}, true);
    bool connected = connected_components(g).components.size() == 1;
    if (g.stabilized) {
      return connected;
    }
    if (connected && detail::covers_alphabet(g, ds.alphabet(n).size())) {
      return true;
    }
    throw InstabilityError("level " + std::to_string(n)
                           + " empty-word graph is not settled");
  }

  struct RhoMap {
    size_t     level = 0;
    QuadVector values;  // constant on each right class
  };

  // c(a) = rho(b) - rho(a) for a left vertex a and a right vertex b of the
  // same component.
  inline QuadVector rho_to_coboundary(RhoMap const&             rho,
                                      ComponentPartition const& part) {
    QuadVector c(rho.values.size(), QuadNumber(0));
    for (auto const& k : part.components) {
      if (k.right.empty()) {
        continue;
      }
      QuadNumber r = rho.values[k.right.front()];
      for (auto b : k.right) {
        if (rho.values[b] != r) {
          throw DomainError("rho is not constant on a right class");
        }
      }
      for (auto a : k.left) {
        c[a] = r - rho.values[a];
      }
    }
    return c;
  }

  // The rho with value 0 on the first right class inducing c.
  inline RhoMap coboundary_to_rho(QuadVector const&         c,
                                  ComponentPartition const& part,
                                  size_t                    level = 0) {
    size_t                 letters = c.size();
    size_t                 r       = part.components.size();
    std::vector<size_t>    left_of(letters, r), right_of(letters, r);
    for (size_t i = 0; i < r; ++i) {
      for (auto a : part.components[i].left) {
        left_of[a] = i;
      }
      for (auto b : part.components[i].right) {
        right_of[b] = i;
      }
    }
    // Unknowns R_0..R_{r-1}: R_{right_of(a)} - R_{left_of(a)} = -c(a).
    QuadMatrix a(letters + 1, r);
    QuadVector rhs(letters + 1, QuadNumber(0));
    for (size_t x = 0; x < letters; ++x) {
      if (left_of[x] == r || right_of[x] == r) {
        throw DomainError("letter missing from the empty-word graph");
      }
      a(x, right_of[x]) += 1;
      a(x, left_of[x]) -= 1;
      rhs[x] = -c[x];
    }
    a(letters, 0) = 1;
    auto sol      = solve(a, rhs);
    if (!sol) {
      throw DomainError("vector is not a letter-coboundary");
    }
    RhoMap rho{level, QuadVector(letters)};
    for (size_t x = 0; x < letters; ++x) {
      rho.values[x] = (*sol)[right_of[x]];
    }
    return rho;
  }

  struct CoboundaryCheck {
    bool                     ok = true;
    std::optional<word_type> witness;
  };

  inline QuadNumber evaluate(QuadVector const& c, word_type const& w) {
    QuadNumber s;
    for (auto a : w) {
      s += c.at(a);
    }
    return s;
  }

  inline CoboundaryCheck verify_coboundary(
      QuadVector const& c, std::vector<ReturnWordSet> const& sets) {
    for (auto const& set : sets) {
      for (auto const& w : set.words) {
        if (!evaluate(c, w).is_zero()) {
          return {false, w};
        }
      }
    }
    return {};
  }

  // c o tau_{n,m} as a row vector over A_m.
  inline QuadVector compose_with(QuadVector const& c,
                                 DirectiveSequence const& ds, size_t n,
                                 size_t m) {
    return row_times(c, to_quad(ds.incidence_range(n, m)));
  }

  struct StableCoboundaries {
    SubspaceBasis basis;
    bool          partial = false;  // explicit schedule: not restricted
  };

  // Coboundaries whose images under the period product are fixed; for
  // levels inside the preperiod, those mapped into that space at the first
  // periodic level.
  inline StableCoboundaries stable_coboundaries(DirectiveSequence const& ds,
                                                size_t                   n) {
    CoboundaryBasis cob = coboundary_space(ds, n);
    if (ds.is_explicit()) {
      return {cob.basis, true};
    }
    size_t    pre   = ds.preperiod_length();
    size_t    top   = std::max(n, pre);
    IntMatrix p     = ds.period_product(top);
    IntMatrix shift = p;
    for (size_t i = 0; i < p.rows(); ++i) {
      shift(i, i) -= 1;
    }
    SubspaceBasis fixed(p.rows(), kernel_left(to_quad(shift)));
    if (top > n) {
      fixed = preimage(to_quad(ds.incidence_range(n, top)), fixed);
    }
    return {intersect(cob.basis, fixed), false};
  }

  struct LatticeReport {
    size_t               rank = 0;
    std::vector<Integer> divisors;
    std::optional<Integer> index;  // none when infinite
    size_t               words     = 0;
    bool                 saturated = false;
  };

  // Smith form of the abelianized return words to u.
  inline LatticeReport return_word_lattice(DirectiveSequence const& ds,
                                           size_t n, word_type const& u,
                                           size_t budget) {
    size_t letters = ds.alphabet(n).size();
    if (letters < 2) {
      throw DomainError("return-word lattice needs at least two letters");
    }
    ReturnWordSet rws = return_words(ds, n, u, budget);
    LatticeReport out;
    out.words     = rws.words.size();
    out.saturated = rws.saturated;
    if (rws.words.empty()) {
      return out;
    }
    std::vector<std::vector<Integer>> rows;
    for (auto const& w : rws.words) {
      rows.push_back(parikh(w, letters));
    }
    SmithForm snf = smith_normal_form(IntMatrix::from_rows(rows));
    out.divisors  = snf.divisors;
    out.rank      = snf.divisors.size();
    if (out.rank == letters) {
      Integer idx = 1;
      for (auto const& d : snf.divisors) {
        idx *= d;
      }
      out.index = idx;
    }
    return out;
  }

}  // namespace sadic

#endif  // SADIC_COBOUNDARY_HPP_
