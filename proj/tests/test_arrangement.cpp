#include <doctest.h>

#include "arrlab/arrangement.hpp"
#include "support.hpp"

using namespace arrlab;
using namespace arrlab::testing;

namespace {

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_arrangement(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("parse the Boolean fixture") {
  Arrangement a = parse_arrangement(slurp(data_path("boolean3.json")));
  CHECK(a.dim() == 3);
  CHECK(a.size() == 3);
  CHECK(a[2].label == "z");
  CHECK(a[0].normal == vec({1, 0, 0}));
}

TEST_CASE("parse defaults labels and accepts fractions") {
  Arrangement a = parse_arrangement(R"({"dim":2,"hyperplanes":[{"normal":["1/2","0"],"offset":"3/4"},
                                                            {"normal":["0","-2"]}]})");
  CHECK(a[0].label == "H1");
  CHECK(a[1].label == "H2");
  CHECK(a[0].offset == Rat(3) / Rat(4));
  CHECK(a[1].offset == Rat(0));
}

TEST_CASE("parse errors") {
  CHECK(parse_error_kind(R"({"dim":2,"hyperplanes":[{"normal":["1","0"]},{"normal":["2","0"]}]})") ==
        ErrorKind::DuplicateHyperplane);
  CHECK(parse_error_kind(R"({"dim":3,"hyperplanes":[{"normal":["0","0","0"]}]})") == ErrorKind::ZeroNormal);
  CHECK(parse_error_kind(R"({"dim":2,"hyperplanes":[{"normal":["1"]}]})") == ErrorKind::MalformedInput);
  CHECK(parse_error_kind(R"({"dim":2,"hyperplanes":[{"normal":["1","x"]}]})") == ErrorKind::MalformedInput);
  CHECK(parse_error_kind(R"({"dim":2,"hyperplanes":[{"normal":["1","1/0"]}]})") == ErrorKind::MalformedInput);
  CHECK(parse_error_kind("{not json") == ErrorKind::MalformedInput);
  CHECK(parse_error_kind(R"({"hyperplanes":[]})") == ErrorKind::MalformedInput);
}

TEST_CASE("duplicate report names both indices") {
  try {
    parse_arrangement(R"({"dim":1,"hyperplanes":[{"normal":["1"],"offset":"1"},{"normal":["3"],"offset":"2"},
                                                   {"normal":["-2"],"offset":"-2"}]})");
    FAIL("expected DuplicateHyperplane");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateHyperplane);
    CHECK(std::string(e.what()).find("1 and 3") != std::string::npos);
  }
}

TEST_CASE("property: serialize then parse is the identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Arrangement a = random_arrangement(rng, 1 + i % 4, 1 + i % 6);
    CHECK(parse_arrangement(serialize(a)) == a);
  }
}

TEST_CASE("is_essential") {
  CHECK(is_essential(boolean(3)));
  CHECK_FALSE(is_essential(arr(2, {{1, 0, 0}, {1, 0, 1}})));
  CHECK(is_essential(arr(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}})));
}

TEST_CASE("delete_restrict on the Boolean arrangement") {
  auto dr = delete_restrict(boolean(3), 2);
  CHECK(dr.deleted == arr(3, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(dr.restricted.dim() == 2);
  REQUIRE(dr.restricted.size() == 2);
  CHECK(dr.restricted[0].normal == vec({1, 0}));
  CHECK(dr.restricted[1].normal == vec({0, 1}));
  CHECK(dr.parents == std::vector<IndexSet>{{0}, {1}});
}

TEST_CASE("delete_restrict traces and parallel omissions") {
  Arrangement a = arr(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}});
  auto on_y = delete_restrict(a, 2);
  CHECK(on_y.restricted.dim() == 1);
  CHECK(on_y.restricted.size() == 2);
  CHECK(on_y.restricted[0].offset == Rat(0));
  CHECK(on_y.restricted[1].offset == Rat(1));

  auto on_x1 = delete_restrict(a, 1);
  REQUIRE(on_x1.deleted.size() == 2);
  CHECK(on_x1.deleted[0].normal == vec({1, 0}));
  CHECK(on_x1.deleted[1].normal == vec({0, 1}));
  CHECK(on_x1.deleted.labels({0, 1}) == std::vector<std::string>{"H1", "H3"});
  CHECK(on_x1.restricted.size() == 1);  // x=0 is parallel to x=1
  CHECK(on_x1.parents == std::vector<IndexSet>{{2}});

  CHECK_THROWS_AS(delete_restrict(a, 3), Error);
}

TEST_CASE("delete_restrict merges coincident traces") {
  Arrangement a = arr(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  auto dr = delete_restrict(a, 0);
  REQUIRE(dr.restricted.size() == 1);
  CHECK(dr.parents[0] == IndexSet{1, 2});
  CHECK(dr.restricted[0].label == "H2|H3");
}

TEST_CASE("dimension one restricts to a point") {
  auto dr = delete_restrict(arr(1, {{1, 0}, {1, 3}}), 0);
  CHECK(dr.restricted.dim() == 0);
  CHECK(dr.restricted.empty());
}

TEST_CASE("is_generic examples") {
  CHECK(is_generic(boolean(3), hyp({1, 1, 1}, 1)).generic);

  auto v = is_generic(boolean(3), hyp({1, 1, 1}, 0));
  CHECK_FALSE(v.generic);
  CHECK(*v.violation == IndexSet{0, 1, 2});

  auto w = is_generic(arr(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}}), hyp({1, -1}, 0));
  CHECK_FALSE(w.generic);
  CHECK(*w.violation == IndexSet{0, 2});

  // parallel to a line: fails at that line
  auto p = is_generic(arr(2, {{1, 0, 0}, {0, 1, 0}}), hyp({1, 0}, 5));
  CHECK_FALSE(p.generic);
  CHECK(*p.violation == IndexSet{0});

  CHECK_THROWS_AS(is_generic(boolean(3), hyp({1, 1}, 1)), Error);
}

TEST_CASE("random_generic_hyperplane is deterministic and generic") {
  Arrangement a = boolean(3);
  Hyperplane u = random_generic_hyperplane(a, 1);
  CHECK(is_generic(a, u).generic);
  Hyperplane again = random_generic_hyperplane(a, 1);
  CHECK(u.normal == again.normal);
  CHECK(u.offset == again.offset);

  std::mt19937_64 rng(5);
  Arrangement six = random_essential(rng, 3, 6);
  for (std::uint64_t seed = 0; seed < 100; ++seed) CHECK(is_generic(six, random_generic_hyperplane(six, seed)).generic);

  CHECK_THROWS_AS(random_generic_hyperplane(arr(1, {{1, 0}}), 0), Error);
}

TEST_CASE("section of the Boolean arrangement") {
  Arrangement s = section(boolean(3), hyp({1, 1, 1}, 1));
  CHECK(s.dim() == 2);
  REQUIRE(s.size() == 3);
  CHECK(s[0].label == "H1");
  // pairwise non-parallel and no common point
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(s.intersection({i, j}).dim() == 0);
  CHECK(s.intersection({0, 1, 2}).empty);
  CHECK(is_essential(s));
}

TEST_CASE("section refuses non-generic hyperplanes") {
  try {
    section(boolean(3), hyp({1, 1, 1}, 0));
    FAIL("expected NotGeneric");
  } catch (const NotGenericError& e) {
    CHECK(e.kind() == ErrorKind::NotGeneric);
    CHECK(e.flat() == IndexSet{0, 1, 2});
  }
}

TEST_CASE("property: sections keep size and essentiality") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const std::size_t dim = 2 + i % 3;
    Arrangement a = random_essential(rng, dim, dim + i % 4);
    Arrangement s = section(a, random_generic_hyperplane(a, static_cast<std::uint64_t>(i)));
    CHECK(s.size() == a.size());
    CHECK(s.dim() == dim - 1);
    CHECK(is_essential(s));
  }
}
