#include "catch_amalgamated.hpp"
#include "properties.hpp"

using namespace sadic;  // NOLINT(build/namespaces)

namespace {
  std::string describe(DirectiveSequence const& ds) {
    return ds.morphism_at(0).to_text();
  }

  std::vector<DirectiveSequence> everything() {
    auto all = props::corpus();
    all.insert(all.end(), props::with_coboundaries().begin(),
               props::with_coboundaries().end());
    return all;
  }
}  // namespace

TEST_CASE("the sample covers both kinds of Perron root", "[property]") {
  size_t nontrivial = 0, inexact = 0, letters = 0;
  for (auto const& ds : props::corpus()) {
    nontrivial += coboundary_space(ds, 0).dim() > 0;
    inexact += !perron_data(ds.morphism_at(0).incidence_matrix()).exact;
    letters = std::max(letters, ds.alphabet(0).size());
  }
  CHECK(props::corpus().size() == 200);
  CHECK(nontrivial > 0);
  CHECK(inexact >= 20);
  CHECK(letters == 4);
  CHECK(props::with_coboundaries().size() == 40);
}

TEST_CASE("coboundary dimension is components minus one", "[property]") {
  for (auto const& ds : everything()) {
    INFO(describe(ds));
    CHECK(props::dimension_matches(ds));
  }
}

TEST_CASE("parikh vectors are functorial", "[property]") {
  unsigned seed = 7;
  for (auto const& ds : props::corpus()) {
    INFO(describe(ds));
    CHECK(props::parikh_functorial(ds, seed++));
  }
}

TEST_CASE("Cayley-Hamilton", "[property]") {
  for (auto const& ds : props::corpus()) {
    INFO(describe(ds));
    CHECK(props::cayley_hamilton(ds));
  }
}

TEST_CASE("coboundaries vanish on return words", "[property]") {
  for (auto const& ds : everything()) {
    INFO(describe(ds));
    CHECK(props::vanishes_on_return_words(ds));
  }
}

TEST_CASE("coboundaries have zero mean", "[property]") {
  for (auto const& ds : everything()) {
    INFO(describe(ds));
    CHECK(props::zero_mean(ds));
  }
}

TEST_CASE("second differences match multiplicities", "[property]") {
  for (auto const& ds : props::corpus()) {
    INFO(describe(ds));
    CHECK(props::second_differences_hold(ds));
  }
}

TEST_CASE("proper implies decisive", "[property]") {
  for (auto const& ds : props::proper_sample()) {
    INFO(describe(ds));
    REQUIRE(ds.morphism_at(0).is_left_proper());
    REQUIRE(ds.morphism_at(0).is_right_proper());
    CHECK(props::decisive_if_proper(ds));
  }
  for (auto const& ds : props::corpus()) {
    INFO(describe(ds));
    CHECK(props::decisive_if_proper(ds));
  }
}

TEST_CASE("block presentations keep the language", "[property]") {
  for (auto const& ds : props::corpus()) {
    INFO(describe(ds));
    CHECK(props::block_projection_keeps_language(ds));
  }
}
