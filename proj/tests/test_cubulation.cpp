#include <doctest.h>

#include "medianforge/cubulation.hpp"
#include "medianforge/errors.hpp"
#include "medianforge/hyperplanes.hpp"
#include "medianforge/median.hpp"
#include "support.hpp"

using namespace medianforge;
using namespace testkit;

namespace {

using Walls = std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>;

Wallspace line(int n) {
  std::vector<std::string> points;
  for (int i = 1; i <= n; ++i) points.push_back(std::to_string(i));
  Walls walls;
  for (int cut = 1; cut < n; ++cut) {
    walls.emplace_back(std::vector<std::string>(points.begin(), points.begin() + cut),
                       std::vector<std::string>(points.begin() + cut, points.end()));
  }
  return Wallspace(points, walls);
}

}  // namespace

TEST_CASE("wallspace validation") {
  CHECK_THROWS_AS(Wallspace({"a", "b"}, Walls{{{"a", "b"}, {}}}), InputError);
  CHECK_THROWS_AS(Wallspace({"a", "b"}, Walls{{{"a"}, {"a", "b"}}}), InputError);
  CHECK_THROWS_AS(Wallspace({"a", "b", "c"}, Walls{{{"a"}, {"b"}}}), InputError);
  CHECK_THROWS_AS(Wallspace({"a", "b"}, Walls{{{"a"}, {"b"}}, {{"b"}, {"a"}}}), InputError);
  CHECK_THROWS_AS(Wallspace({"a", "a"}, Walls{}), InputError);
  CHECK_THROWS_AS(Wallspace({"a", "b"}, Walls{{{"a"}, {"z"}}}), InputError);
}

TEST_CASE("principal orientations") {
  const Wallspace one({"a", "b"}, Walls{{{"a"}, {"b"}}});
  CHECK(principal_orientation(one, 0) == Orientation{0});

  const Wallspace three = line(3);
  const auto o = principal_orientation(three, three.point_index("2"));
  CHECK(o == Orientation{1, 0});  // {2,3} for the first wall, {1,2} for the second
  CHECK(is_consistent(three, o));
  CHECK_FALSE(is_consistent(three, Orientation{0, 1}));

  const Wallspace twins({"a", "b", "c"}, Walls{{{"a", "b"}, {"c"}}});
  CHECK(principal_orientation(twins, 0) == principal_orientation(twins, 1));
  CHECK_THROWS_AS(three.point_index("9"), InputError);
}

TEST_CASE("dualization examples") {
  const auto one = dualize(Wallspace({"a", "b"}, Walls{{{"a"}, {"b"}}}));
  CHECK(one.graph.order() == 2);
  CHECK(one.graph.size() == 1);

  const auto square = dualize(Wallspace({"1", "2", "3", "4"}, Walls{{{"1", "2"}, {"3", "4"}}, {{"1", "3"}, {"2", "4"}}}));
  CHECK(square.graph.order() == 4);
  CHECK(square.graph.size() == 4);
  CHECK(medianness_oracle(square.graph).verdict);

  const auto path = dualize(line(3));
  CHECK(path.graph.order() == 3);
  CHECK(path.graph.size() == 2);
  CHECK(path.graph.distance(path.point_vertex[0], path.point_vertex[2]) == 2);
}

TEST_CASE("wall distance law examples") {
  const Wallspace one({"a", "b"}, Walls{{{"a"}, {"b"}}});
  const auto d1 = dualize(one);
  const auto r1 = wall_distance_check(one, d1);
  CHECK(r1.violations.empty());
  CHECK(d1.graph.distance(d1.point_vertex[0], d1.point_vertex[1]) == 1);
  CHECK(d1.graph.distance(d1.point_vertex[0], d1.point_vertex[0]) == 0);

  const Wallspace four = line(4);
  const auto d4 = dualize(four);
  CHECK(d4.graph.order() == 4);
  CHECK(d4.graph.size() == 3);
  CHECK(d4.graph.distance(d4.point_vertex[0], d4.point_vertex[3]) == 3);
  CHECK(wall_distance_check(four, d4).violations.empty());
  CHECK(wall_distance_check(four, d4).pairs_checked == 10);  // unordered pairs with p = q included
}

TEST_CASE("random wallspaces dualize to median graphs with one hyperplane per wall") {
  for (const auto& ws : random_wallspaces(25, 77)) {
    const auto dual = dualize(ws);
    CHECK(brute_is_median(dual.graph));
    CHECK(wall_distance_check(ws, dual).violations.empty());
    const Hyperplanes h(dual.graph);
    CHECK(h.count() == ws.walls().size());
    // each hyperplane flips exactly one wall, and no two share halfspaces
    std::vector<std::size_t> flipped;
    for (const auto& p : h.all()) {
      const Edge& e = dual.graph.edges()[p.id];
      const std::string& a = dual.graph.name(e.u);
      const std::string& b = dual.graph.name(e.v);
      std::size_t diff = 0;
      std::size_t at = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
          ++diff;
          at = i;
        }
      }
      CHECK(diff == 1);
      flipped.push_back(at);
    }
    std::sort(flipped.begin(), flipped.end());
    CHECK(std::adjacent_find(flipped.begin(), flipped.end()) == flipped.end());
  }
}

TEST_CASE("orientation ceiling") {
  std::vector<std::string> points;
  Walls walls;
  for (int i = 0; i < 6; ++i) points.push_back("p" + std::to_string(i));
  // six pairwise transverse walls would need 64 orientations
  for (int bit = 0; bit < 3; ++bit) {
    std::vector<std::string> a;
    std::vector<std::string> b;
    for (int i = 0; i < 6; ++i) ((i >> bit) & 1 ? b : a).push_back(points[i]);
    walls.emplace_back(a, b);
  }
  const Wallspace ws(points, walls);
  CHECK_THROWS_AS(dualize(ws, 4), ResourceError);
  CHECK_NOTHROW(dualize(ws, 8));
}

TEST_CASE("random wallspaces are reproducible") {
  std::mt19937_64 a(3);
  std::mt19937_64 b(3);
  CHECK(random_wallspace(a, 7, 9) == random_wallspace(b, 7, 9));
}
