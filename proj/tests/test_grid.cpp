#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "gridres/grid.hpp"
#include "gridres/vertex_set.hpp"
#include "oracles.hpp"

using namespace gridres;

TEST_CASE("make_grid validates and normalizes") {
    auto g = make_grid({3, 6, 7});
    CHECK(g.rank() == 3);
    CHECK(g.vertex_count() == 126);

    auto dropped = make_grid({1, 4, 5});
    CHECK(dropped.rank() == 2);
    CHECK(dropped.dim(0) == 4);
    CHECK(dropped.dim(1) == 5);
    CHECK(dropped.dropped_units == 1);

    CHECK_THROWS_AS(make_grid({2, 0, 3}), InvalidDimsError);
    CHECK_THROWS_AS(make_grid({}), InvalidDimsError);
    CHECK_THROWS_AS(make_grid({-2, 3}), InvalidDimsError);

    auto trivial = make_grid({1, 1, 1});
    CHECK(trivial.trivial());
    CHECK(trivial.vertex_count() == 1);
}

TEST_CASE("distance matches the closed form") {
    auto g = make_grid({2, 3, 4});
    CHECK(distance(g, Vertex{0, 0, 0}, Vertex{1, 2, 3}) == 6);
    auto big = make_grid({6, 6, 6});
    CHECK(distance(big, Vertex{5, 5, 5}, Vertex{5, 5, 5}) == 0);
    auto cube = make_grid({2, 2, 2});
    CHECK(distance(cube, Vertex{0, 1, 0}, Vertex{1, 0, 0}) == 2);
    CHECK_THROWS_AS(distance(g, Vertex{0, 0, 0}, Vertex{0, 0, 5}), GridMismatchError);
}

TEST_CASE("distance metric axioms on random samples") {
    auto g = make_grid({4, 4, 4});
    std::mt19937 rng(20240817);
    for (int t = 0; t < 2000; ++t) {
        Vertex a = oracles::random_vertex(g, rng);
        Vertex b = oracles::random_vertex(g, rng);
        Vertex c = oracles::random_vertex(g, rng);
        REQUIRE(distance(g, a, b) == oracles::l1(a, b));
        REQUIRE(distance(g, a, b) == distance(g, b, a));
        REQUIRE((distance(g, a, b) == 0) == (a == b));
        REQUIRE(distance(g, a, c) <= distance(g, a, b) + distance(g, b, c));
    }
}

TEST_CASE("index bijection in x1-fastest order") {
    for (const auto& dims : std::vector<std::vector<int>>{
             {2, 2, 2}, {3, 3, 3}, {2, 3, 4}, {5, 2, 3}, {4, 4}, {7}}) {
        auto g = make_grid(dims);
        const auto expected = oracles::all_vertices(g);
        for (Index i = 0; i < g.vertex_count(); ++i) {
            Vertex u = index_vertex(g, i);
            REQUIRE(u == expected[static_cast<std::size_t>(i)]);
            REQUIRE(vertex_index(g, u) == i);
        }
    }
    auto g = make_grid({2, 2, 2});
    CHECK(index_vertex(g, 1) == Vertex{1, 0, 0});
    CHECK(vertex_index(g, Vertex{0, 1, 0}) == 2);
    CHECK(vertex_index(g, Vertex{0, 0, 1}) == 4);
}

TEST_CASE("parity law for odd-distance pairs") {
    auto g = make_grid({3, 4, 3});
    std::mt19937 rng(7);
    for (int t = 0; t < 2000; ++t) {
        Vertex u = oracles::random_vertex(g, rng);
        Vertex v = oracles::random_vertex(g, rng);
        Vertex z = oracles::random_vertex(g, rng);
        if (distance(g, u, v) % 2 == 1)
            REQUIRE(distance(g, u, z) % 2 != distance(g, v, z) % 2);
    }
}

TEST_CASE("face set and its cardinality formula") {
    auto cube = make_grid({2, 2, 2});
    CHECK(face_set(cube).size() == 8);

    auto g3 = make_grid({3, 3, 3});
    auto f3 = face_set(g3);
    CHECK(f3.size() == 26);
    CHECK_FALSE(f3.contains(Vertex{1, 1, 1}));

    auto g367 = make_grid({3, 6, 7});
    CHECK(face_set(g367).size() == 106);
    CHECK(face_count_formula(g367) == 106);

    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b)
            for (int c = 2; c <= 6; ++c) {
                auto g = make_grid({a, b, c});
                const Index interior =
                    Index{std::max(a - 2, 0)} * std::max(b - 2, 0) * std::max(c - 2, 0);
                REQUIRE(face_set(g).size() == g.vertex_count() - interior);
                REQUIRE(face_set(g).size() == face_count_formula(g));
            }

    CHECK_THROWS_AS(face_set(make_grid({4, 4})), UnsupportedRankError);
}

TEST_CASE("corners and degrees") {
    auto g = make_grid({3, 3, 3});
    CHECK(corners(g).size() == 8);
    CHECK(is_corner(g, Vertex{0, 0, 0}));
    CHECK(degree(g, Vertex{0, 0, 0}) == 3);
    CHECK_FALSE(is_corner(g, Vertex{1, 1, 1}));
    CHECK(is_interior(g, Vertex{1, 1, 1}));
    CHECK(degree(g, Vertex{1, 1, 1}) == 6);
    CHECK_FALSE(is_corner(g, Vertex{1, 0, 0}));
    CHECK(degree(g, Vertex{1, 0, 0}) == 4);
}

TEST_CASE("projection merges duplicates in first-seen order") {
    auto g = make_grid({3, 3, 3});
    auto s = make_set(g, {Vertex{0, 0, 0}, Vertex{0, 0, 1}});
    auto p3 = projection(s, 3);
    REQUIRE(p3.size() == 1);
    CHECK(p3[0] == std::array<int, 2>{0, 0});

    auto s2 = make_set(g, {Vertex{1, 2, 0}});
    auto p1 = projection(s2, 1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == std::array<int, 2>{2, 0});

    CHECK(projection(VertexSet(g), 2).empty());
    CHECK_THROWS_AS(projection(s, 4), DomainError);
}

TEST_CASE("region_of follows the strict-below convention") {
    CHECK(region_of(3, 3, {0, 0}, 1, 1) == Quadrant::MM);
    CHECK(region_of(4, 4, {2, 1}, 2, 2) == Quadrant::PM);
    CHECK(region_of(4, 4, {1, 2}, 2, 2) == Quadrant::MP);
    CHECK(region_of(4, 4, {2, 2}, 2, 2) == Quadrant::PP);
    CHECK_THROWS_AS(region_of(3, 3, {0, 0}, 0, 1), DomainError);
    CHECK_THROWS_AS(region_of(3, 3, {0, 0}, 3, 1), DomainError);

    // the four quadrants partition the plane
    for (int a1 = 1; a1 < 4; ++a1)
        for (int a2 = 1; a2 < 4; ++a2) {
            int counts[4] = {0, 0, 0, 0};
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y)
                    ++counts[static_cast<int>(region_of(4, 4, {x, y}, a1, a2))];
            REQUIRE(counts[0] + counts[1] + counts[2] + counts[3] == 16);
            REQUIRE(counts[static_cast<int>(Quadrant::MM)] == a1 * a2);
            REQUIRE(counts[static_cast<int>(Quadrant::PP)] == (4 - a1) * (4 - a2));
        }
}

TEST_CASE("shortest path box membership law") {
    auto g = make_grid({2, 2, 2});
    auto box = shortest_path_box(g, Vertex{0, 0, 0}, Vertex{1, 1, 0});
    CHECK(box.vertex_count() == 4);

    auto g2 = make_grid({3, 3, 3});
    auto single = shortest_path_box(g2, Vertex{1, 2, 0}, Vertex{1, 2, 0});
    CHECK(single.vertex_count() == 1);
    auto wide = shortest_path_box(g2, Vertex{0, 2, 1}, Vertex{2, 0, 1});
    CHECK(wide.vertex_count() == 9);

    for (const auto& dims : std::vector<std::vector<int>>{{4, 4, 4}, {2, 3, 4}}) {
        auto grid = make_grid(dims);
        const auto verts = oracles::all_vertices(grid);
        for (const Vertex& u : verts)
            for (const Vertex& v : verts) {
                auto b = shortest_path_box(grid, u, v);
                for (const Vertex& z : verts) {
                    const bool on_path =
                        distance(grid, u, z) + distance(grid, z, v) == distance(grid, u, v);
                    REQUIRE(b.contains(z) == on_path);
                }
            }
    }
}

TEST_CASE("grid and vertex text forms round-trip") {
    CHECK(format_grid(make_grid({2, 3, 4})) == "2x3x4");
    CHECK(format_grid(make_grid({1, 1, 1})) == "1");
    CHECK(format_vertex(Vertex{0, 1, 2}) == "(0,1,2)");

    auto g = parse_grid("3x6x7");
    CHECK(g.vertex_count() == 126);
    CHECK(parse_grid("1x4x5").rank() == 2);
    CHECK_THROWS_AS(parse_grid("3x-1x2"), ParseError);
    CHECK_THROWS_AS(parse_grid("3xx2"), ParseError);
    CHECK_THROWS_AS(parse_grid(""), ParseError);
    CHECK_THROWS_AS(parse_grid("3X4"), ParseError);

    CHECK(parse_vertex("(0,1,2)") == Vertex{0, 1, 2});
    CHECK(parse_vertex(" ( 3 , 4 , 5 ) ") == Vertex{3, 4, 5});
    CHECK_THROWS_AS(parse_vertex("0,1,2"), ParseError);
    CHECK_THROWS_AS(parse_vertex("(0,1,2"), ParseError);
    CHECK_THROWS_AS(parse_vertex("(0,1,2) junk"), ParseError);

    try {
        parse_vertex("(0,a,2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column >= 4);
    }
}

TEST_CASE("vertex set semantics") {
    auto g = make_grid({2, 3, 4});
    VertexSet a(g);
    CHECK(a.empty());
    a.insert(Vertex{0, 0, 0});
    a.insert(Vertex{1, 2, 3});
    a.insert(Vertex{0, 0, 0});
    CHECK(a.size() == 2);
    CHECK(a.contains(Vertex{1, 2, 3}));

    VertexSet b(g);
    b.insert(Vertex{1, 2, 3});
    b.insert(Vertex{1, 0, 0});
    CHECK(intersection_count(a, b) == 1);
    CHECK_FALSE(is_subset(b, a));
    b.erase(Vertex{1, 0, 0});
    CHECK(is_subset(b, a));

    auto other = make_grid({2, 3, 5});
    VertexSet c(other);
    CHECK_THROWS_AS(intersection_count(a, c), GridMismatchError);

    CHECK(full_set(g).size() == 24);
    const auto members = a.vertices();
    REQUIRE(members.size() == 2);
    CHECK(vertex_index(g, members[0]) < vertex_index(g, members[1]));
}
