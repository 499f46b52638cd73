// sadic: command-line front end over the header-only library.
//
//   sadic inspect FILE
//   sadic graph FILE [--level n] [--word w] [--format dot]
//   sadic certify FILE --alpha "1/2 + 1/2*sqrt(5)"
//
// Exit codes: 0 ok, 1 inconclusive, 2 input error, 3 inconsistency.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "report.hpp"

namespace {

  using nlohmann::json;
  using namespace sadic;  // NOLINT(build/namespaces)

  enum Exit { ok = 0, inconclusive = 1, input_error = 2, inconsistent = 3 };

  struct Request {
    std::string path;
    std::string format = "json";
    std::string alpha;
    std::string word;
    size_t      level  = 0;
    size_t      depth  = 8;
    size_t      length = 4;
    size_t      budget = 4096;
    size_t      n_max  = 8;
  };

  DirectiveSequence load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_directive(ss.str());
  }

  QuadNumber parse_alpha(std::string const& text) {
    if (text.empty()) {
      throw InputError("--alpha is required");
    }
    if (text == "golden") {
      return parse_quad("1/2 + 1/2*sqrt(5)");
    }
    if (text == "sqrt2") {
      return parse_quad("sqrt(2)");
    }
    return parse_quad(text);
  }

  json lines(std::string const& text) {
    json              out = json::array();
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
      out.push_back(line);
    }
    return out;
  }

  size_t slot_count(DirectiveSequence const& ds) {
    return ds.is_explicit() ? *ds.depth()
                            : ds.preperiod_length() + ds.period_length();
  }

  bool all_constant_length(DirectiveSequence const& ds) {
    for (size_t i = 0; i < slot_count(ds); ++i) {
      if (!ds.morphism_at(i).constant_length()) {
        return false;
      }
    }
    return true;
  }

  int cmd_inspect(Request const& r, json& out) {
    DirectiveSequence ds = load(r.path);
    json              slots = json::array();
    for (size_t i = 0; i < slot_count(ds); ++i) {
      Morphism const& m = ds.morphism_at(i);
      auto            len = m.constant_length();
      slots.push_back({{"slot", i},
                       {"name", ds.name_at(i)},
                       {"domain", m.domain().symbols()},
                       {"codomain", m.codomain().symbols()},
                       {"rules", lines(m.to_text())},
                       {"incidence", report::matrix(m.incidence_matrix())},
                       {"determinant",
                        m.domain().size() == m.codomain().size()
                            ? report::number(determinant(m.incidence_matrix()))
                            : json(nullptr)},
                       {"left_proper", m.is_left_proper()},
                       {"right_proper", m.is_right_proper()},
                       {"constant_length", len ? json(*len) : json(nullptr)}});
    }
    json prim = json::array();
    for (auto const& w : is_primitive(ds, r.depth)) {
      prim.push_back({{"level", w.level},
                      {"witness", report::optional_size(w.witness)}});
    }
    out = {{"kind", ds.is_explicit()     ? "explicit"
                    : ds.is_constant()   ? "constant"
                                         : "eventually-periodic"},
           {"slots", slots},
           {"primitivity", prim}};
    if (ds.is_explicit()) {
      out["depth"] = *ds.depth();
    } else {
      out["preperiod_length"] = ds.preperiod_length();
      out["period_length"]    = ds.period_length();
      IntMatrix  p            = ds.period_product(ds.preperiod_length());
      PerronData pd           = perron_data(p);
      out["period_product"]   = {
          {"incidence", report::matrix(p)},
          {"char_poly", char_poly(p).to_string()},
          {"perron_root", pd.exact ? report::exact(pd.lambda)
                                   : report::approx(pd.lambda_approx)},
          {"perron_exact", pd.exact}};
    }
    return ok;
  }

  int cmd_graph(Request const& r, json& out, std::string& dot) {
    DirectiveSequence ds = load(r.path);
    Alphabet const&   a  = ds.alphabet(r.level);
    ExtensionGraph    g  = extension_graph(ds, r.level, a.parse(r.word));
    out                  = report::graph(g, a);
    dot                  = to_dot(g, a);
    return ok;
  }

  int cmd_coboundary(Request const& r, json& out) {
    DirectiveSequence ds  = load(r.path);
    Alphabet const&   a   = ds.alphabet(r.level);
    CoboundaryBasis   cob = coboundary_space(ds, r.level);
    StableCoboundaries st = stable_coboundaries(ds, r.level);
    json              gens = json::array();
    for (auto const& g : cob.generators) {
      gens.push_back(report::exact(g));
    }
    json lattices = json::object();
    if (a.size() >= 2) {
      for (letter_type x = 0; x < a.size(); ++x) {
        lattices[a.symbol(x)]
            = report::lattice(return_word_lattice(ds, r.level, {x}, r.budget));
      }
    }
    out = {{"level", r.level},
           {"alphabet", a.symbols()},
           {"components", report::partition(cob.partition, a)},
           {"generators", gens},
           {"dimension", cob.dim()},
           {"trivial", cob.dim() == 0},
           {"stable_coboundaries",
            {{"basis", report::basis(st.basis)}, {"partial", st.partial}}},
           {"lattices", lattices}};
    return ok;
  }

  int cmd_certify(Request const& r, json& out) {
    DirectiveSequence ds    = load(r.path);
    QuadNumber        alpha = parse_alpha(r.alpha);
    std::optional<Certificate> cert;
    std::string                note;
    if (ds.is_explicit()) {
      note = "explicit schedule: diagnostics only";
    } else {
      try {
        cert = certify_eigenvalue(ds, alpha, r.n_max);
      } catch (InexactError const& e) {
        note = std::string("no exact certificate: ") + e.what();
      }
    }
    out = {{"alpha", report::exact(alpha)},
           {"certificate", nullptr},
           {"decay_table", nullptr}};
    Verdict verdict = Verdict::inconclusive;
    std::optional<QuadVector> c0;
    if (cert) {
      VerificationReport v = verify_certificate(*cert, ds, r.depth, r.length);
      out["certificate"]   = report::certificate(*cert);
      out["decay_table"]   = report::decay(v.decay);
      out["verification"]  = report::verification(v);
      if (v.ok()) {
        verdict = Verdict::certified;
      }
      if (cert->level == 0) {
        c0 = cert->c;
      }
    }
    DiagnosticReport host = host_diagnostic(ds, alpha, r.depth, c0);
    out["diagnostics"]    = report::diagnostic(host);
    if (verdict != Verdict::certified) {
      verdict = host.verdict;
    } else if (host.verdict == Verdict::refuted_by_trend) {
      throw InconsistencyError("certified eigenvalue refuted by the host "
                               "diagnostic");
    }
    out["verdict"] = to_string(verdict);
    if (!note.empty()) {
      out["note"] = note;
    }
    return verdict == Verdict::inconclusive ? inconclusive : ok;
  }

  int cmd_spectrum(Request const& r, json& out) {
    DirectiveSequence ds = load(r.path);
    if (!ds.is_explicit() && all_constant_length(ds)) {
      out         = report::spectrum(
          constant_length_spectrum(ds, r.depth, r.budget));
      out["kind"] = "constant-length";
      return ok;
    }
    out = {{"kind", "bounds"},
           {"bounds", report::bounds(eigenvalue_dim_bounds(ds, r.level,
                                                           r.length))},
           {"conditions",
            report::conditions(cocoboundary_conditions(ds, r.depth,
                                                       r.budget))}};
    return ok;
  }

  int cmd_balance(Request const& r, json& out) {
    DirectiveSequence ds   = load(r.path);
    json              rows = json::array();
    for (size_t k = 1; k <= r.length; ++k) {
      json row = report::balance(balanced_on_factors(ds, k));
      row["k"] = k;
      rows.push_back(row);
    }
    out = {{"factors", rows}};
    return ok;
  }

  int cmd_complexity(Request const& r, json& out) {
    DirectiveSequence ds = load(r.path);
    json              sd = json::array();
    bool              holds = true;
    for (auto const& d : second_differences(ds, r.level, r.length)) {
      sd.push_back({{"length", d.length},
                    {"sum_multiplicity", d.sum_multiplicity},
                    {"second_difference", d.second_difference}});
      holds = holds && d.sum_multiplicity == d.second_difference;
    }
    DendricReport den = is_dendric_up_to(ds, r.level, r.length);
    Alphabet const& a = ds.alphabet(r.level);
    out = {{"level", r.level},
           {"complexity", complexity(ds, r.level, r.length)},
           {"second_differences", sd},
           {"identity_holds", holds},
           {"dendric", den.dendric},
           {"dendric_witness",
            den.witness ? json(a.format(*den.witness)) : json(nullptr)},
           {"bounds", report::bounds(eigenvalue_dim_bounds(ds, r.level,
                                                           r.length))}};
    return holds ? ok : inconsistent;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of substitutive and S-adic subshifts"};
  app.require_subcommand(1);
  Request req;

  auto add = [&req, &app](std::string const& name, std::string const& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", req.path, "morphism or directive file")
        ->required();
    sub->add_option("--format", req.format, "json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--level", req.level, "level n");
    sub->add_option("--depth", req.depth, "levels to scan")
        ->check(CLI::PositiveNumber);
    sub->add_option("--length", req.length, "factor length k")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", req.budget, "return-word scan budget")
        ->check(CLI::PositiveNumber);
    return sub;
  };
  auto* inspect    = add("inspect", "alphabets, matrices, primitivity");
  auto* graph      = add("graph", "extension graph of a factor");
  auto* coboundary = add("coboundary", "letter-coboundary space and lattices");
  auto* certify    = add("certify", "certify or refute an eigenvalue");
  auto* spectrum   = add("spectrum", "constant-length spectrum or bounds");
  auto* balance    = add("balance", "balance on factors of length 1..k");
  auto* cx         = add("complexity", "complexity and dendricity");
  graph->add_option("--word", req.word, "factor, empty by default");
  certify->add_option("--alpha", req.alpha, "p/q, p + q*sqrt(d), golden, "
                                            "sqrt2")
      ->required();
  certify->add_option("--nmax", req.n_max, "deepest certificate level");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  json        out;
  std::string dot;
  int         code = ok;
  try {
    if (*inspect) {
      code = cmd_inspect(req, out);
    } else if (*graph) {
      code = cmd_graph(req, out, dot);
    } else if (*coboundary) {
      code = cmd_coboundary(req, out);
    } else if (*certify) {
      code = cmd_certify(req, out);
    } else if (*spectrum) {
      code = cmd_spectrum(req, out);
    } else if (*balance) {
      code = cmd_balance(req, out);
    } else if (*cx) {
      code = cmd_complexity(req, out);
    }
  } catch (InputError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (DomainError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (FieldMismatchError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (InstabilityError const& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return inconclusive;
  } catch (InexactError const& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return inconclusive;
  } catch (InconsistencyError const& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return inconsistent;
  }

  if (req.format == "dot") {
    if (dot.empty()) {
      std::cerr << "input error: dot output is only available for graph\n";
      return input_error;
    }
    std::cout << dot;
  } else if (req.format == "text") {
    std::cout << report::text(out);
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return code;
}
