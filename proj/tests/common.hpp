#ifndef SADIC_TESTS_COMMON_HPP_
#define SADIC_TESTS_COMMON_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sadic.hpp"

namespace fixture {

  inline std::string read(std::string const& name) {
    std::ifstream in(std::string(SADIC_FIXTURES) + "/" + name + ".txt");
    if (!in) {
      throw sadic::InputError("missing fixture " + name);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline sadic::DirectiveSequence load(std::string const& name) {
    return sadic::parse_directive(read(name));
  }

  inline sadic::QuadVector qv(std::vector<std::string> const& xs) {
    sadic::QuadVector out;
    for (auto const& x : xs) {
      out.push_back(sadic::parse_quad(x));
    }
    return out;
  }

  inline sadic::word_type w(sadic::DirectiveSequence const& ds, size_t n,
                            std::string const& text) {
    return ds.alphabet(n).parse(text);
  }

  inline std::vector<std::string> strings(sadic::Alphabet const&         a,
                                          std::vector<sadic::word_type> const& ws) {
    std::vector<std::string> out;
    for (auto const& x : ws) {
      out.push_back(a.format(x));
    }
    return out;
  }

}  // namespace fixture

#endif  // SADIC_TESTS_COMMON_HPP_
