#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "redchev/cheby.hpp"
#include "redchev/fgraph.hpp"
#include "redchev/redei.hpp"

using namespace redchev;

namespace {

ExtPtr make_ext(uint64_t p, unsigned k, uint64_t alpha_idx) {
  FieldPtr f = Field::make(p, k);
  return Extension::make(f, f->from_index(alpha_idx));
}

FunctionalGraph graph_of(std::vector<uint32_t> succ) {
  FunctionalGraph g;
  g.succ = std::move(succ);
  g.labels.resize(g.succ.size());
  for (size_t i = 0; i < g.labels.size(); ++i) {
    g.labels[i] = std::to_string(i);
  }
  return g;
}

FunctionalGraph relabel(const FunctionalGraph& g,
                        const std::vector<uint32_t>& perm) {
  FunctionalGraph h;
  h.succ.resize(g.size());
  h.labels.resize(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    h.succ[perm[i]] = perm[g.succ[i]];
    h.labels[perm[i]] = g.labels[i];
  }
  return h;
}

}  // namespace

TEST_CASE("identity graph is all self-loops") {
  FunctionalGraph g = graph_of({0, 1, 2});
  CanonicalForm form = canonical_form(g);
  REQUIRE(form.components.size() == 3);
  for (const auto& c : form.components) {
    CHECK(c.cycle_len == 1);
    CHECK(c.trees == std::vector<std::string>{"()"});
  }
  CHECK(cycle_stats(g) == "cycles: 1x3; tails: none");
  CHECK(all_cycles(g));
}

TEST_CASE("squaring on mu_3 has one fixed point and a 2-cycle") {
  ExtPtr e = make_ext(2, 1, 1);
  FunctionalGraph g = power_map_graph(*e, 2);
  REQUIRE(g.size() == 3);
  CHECK(cycle_stats(g) == "cycles: 1x1, 2x1; tails: none");
  CHECK(all_cycles(g));
}

TEST_CASE("build_graph requires the map to stay inside the domain") {
  ExtPtr e = make_ext(5, 1, 2);
  std::vector<Point> line = projective_line(e->base());
  ChebySpec spec{e, 2};
  FunctionalGraph g = build_graph(
      [&](const Point& p) { return cheby_eval(spec, p); }, line);
  CHECK(g.size() == 6);

  // dropping infinity breaks closure over F_2: C_2(1) = inf there
  ExtPtr e2 = make_ext(2, 1, 1);
  ChebySpec spec2{e2, 2};
  std::vector<Point> affine2 = {Point::finite(e2->base()->zero()),
                                Point::finite(e2->base()->one())};
  CHECK_THROWS_AS(build_graph(
                      [&](const Point& p) { return cheby_eval(spec2, p); },
                      affine2),
                  std::domain_error);
}

TEST_CASE("doubling on Z/6 has the documented canonical form") {
  // 0 -> 0, 1 -> 2, 2 -> 4, 3 -> 0, 4 -> 2, 5 -> 4
  FunctionalGraph g = graph_of({0, 2, 4, 0, 2, 4});
  CanonicalForm form = canonical_form(g);
  REQUIRE(form.components.size() == 2);
  // fixed point 0 carrying the tail {3}; 2-cycle {2,4} with tails {1},{5}
  CHECK(form.components[0].cycle_len == 1);
  CHECK(form.components[0].trees == std::vector<std::string>{"(())"});
  CHECK(form.components[1].cycle_len == 2);
  CHECK(form.components[1].trees ==
        std::vector<std::string>{"(())", "(())"});
  CHECK(cycle_stats(g) == "cycles: 1x1, 2x1; tails: 1x3");

  // squaring on mu_6 is the same shape
  ExtPtr e = make_ext(5, 1, 2);
  CHECK(iso_check(g, power_map_graph(*e, 2)));
}

TEST_CASE("canonical form is invariant under 100 seeded relabelings") {
  ExtPtr e = make_ext(5, 1, 2);
  std::vector<FunctionalGraph> graphs;
  graphs.push_back(graph_of({0, 2, 4, 0, 2, 4}));
  graphs.push_back(power_map_graph(*e, 2));
  graphs.push_back(power_map_graph(*e, 3));
  graphs.push_back(graph_of({1, 2, 3, 4, 5, 6, 7, 0}));
  {
    // a random self-map has a messier mix of tails and cycles
    std::mt19937_64 rng(4242);
    std::vector<uint32_t> succ(40);
    for (auto& s : succ) {
      s = static_cast<uint32_t>(rng() % succ.size());
    }
    graphs.push_back(graph_of(std::move(succ)));
  }
  std::mt19937_64 rng(99);
  for (const FunctionalGraph& g : graphs) {
    CanonicalForm base_form = canonical_form(g);
    std::vector<uint32_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(g, perm)) == base_form);
    }
  }
}

TEST_CASE("iso_check distinguishes cycle structures") {
  ExtPtr e = make_ext(5, 1, 2);
  std::vector<Point> line = projective_line(e->base());
  ChebySpec c2{e, 2};
  FunctionalGraph g = build_graph(
      [&](const Point& p) { return cheby_eval(c2, p); }, line);
  CHECK(iso_check(g, g));
  CHECK(iso_check(g, power_map_graph(*e, 2)));
  CHECK_FALSE(iso_check(g, power_map_graph(*e, 3)));
}

TEST_CASE("power map graphs") {
  ExtPtr e = make_ext(5, 1, 2);
  FunctionalGraph id = power_map_graph(*e, 1);
  CHECK(cycle_stats(id) == "cycles: 1x6; tails: none");

  // gcd(5, 6) = 1: a permutation, so every node lies on a cycle
  CHECK(all_cycles(power_map_graph(*e, 5)));
  CHECK_FALSE(all_cycles(power_map_graph(*e, 2)));
  CHECK_THROWS_AS(power_map_graph(*e, 0), std::domain_error);
}

TEST_CASE("all-cycles equals the gcd permutation criterion") {
  for (auto [p, k, a] : std::vector<std::tuple<uint64_t, unsigned, uint64_t>>{
           {5, 1, 2}, {7, 1, 3}, {2, 2, 2}, {2, 3, 1}}) {
    FieldPtr f = Field::make(p, k);
    ExtPtr e = Extension::make(f, f->from_index(a));
    std::vector<Point> line = projective_line(f);
    for (uint64_t n = 1; n <= 10; ++n) {
      RedeiSpec spec{e, n};
      FunctionalGraph g = build_graph(
          [&](const Point& pt) { return redei_eval(spec, pt); }, line);
      CHECK(all_cycles(g) == (std::gcd(n, f->order() + 1) == 1));
    }
  }
}

TEST_CASE("dot export lists one edge per node") {
  ExtPtr e = make_ext(2, 1, 1);
  FunctionalGraph g = power_map_graph(*e, 2);
  std::string dot = to_dot(g);
  CHECK(dot.rfind("digraph functional_graph {", 0) == 0);
  size_t edges = 0;
  for (size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos;
       ++pos) {
    ++edges;
  }
  CHECK(edges == g.size());
}

TEST_CASE("deeper tails show up in the histogram") {
  // 5 -> 4 -> 3 -> 0, 0 on a self-loop, plus 1 -> 0, 2 -> 0
  FunctionalGraph g = graph_of({0, 0, 0, 0, 3, 4});
  CHECK(cycle_stats(g) == "cycles: 1x1; tails: 1x3, 2x1, 3x1");
}
