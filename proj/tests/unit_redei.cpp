#include <doctest.h>

#include <numeric>

#include "redchev/encoding.hpp"
#include "redchev/numutil.hpp"
#include "redchev/redei.hpp"

using namespace redchev;

namespace {

ExtPtr make_ext(uint64_t p, unsigned k, uint64_t alpha_idx) {
  FieldPtr f = Field::make(p, k);
  return Extension::make(f, f->from_index(alpha_idx));
}

Poly poly_from(const FieldPtr& f, std::vector<uint64_t> idx) {
  std::vector<Elem> c;
  for (uint64_t v : idx) c.push_back(f->from_index(v));
  return Poly(f, std::move(c));
}

// Independent oracle built straight from the defining display
//   R_n = (beta (x - beta_bar)^n - beta_bar (x - beta)^n)
//         / ((x - beta_bar)^n - (x - beta)^n),
// expanded symbolically over F_{q^2} and descended coefficientwise.
// swap exercises the choice of root: the result must not depend on it.
RationalMap redei_display_oracle(const Extension& E, uint64_t n,
                                 bool swap = false) {
  const FieldPtr& X = E.ext();
  Elem b = swap ? E.beta_bar() : E.beta();
  Elem bb = swap ? E.beta() : E.beta_bar();
  Poly lin_b(X, {-b, X->one()});    // x - beta
  Poly lin_bb(X, {-bb, X->one()});  // x - beta_bar
  Poly pb = Poly::constant(X, X->one());
  Poly pbb = pb;
  for (uint64_t i = 0; i < n; ++i) {
    pb = pb * lin_b;
    pbb = pbb * lin_bb;
  }
  Poly num = pbb.scaled(b) - pb.scaled(bb);
  Poly den = pbb - pb;
  // Only the ratio is rational as written (Frobenius negates both sides
  // for odd q); dividing by the denominator's leading coefficient makes
  // every coefficient land in F_q.
  Elem s = den.lead().inv();
  num = num.scaled(s);
  den = den.scaled(s);
  auto down = [&](const Poly& poly) {
    std::vector<Elem> c;
    for (int i = 0; i <= poly.degree(); ++i) {
      auto d = E.descend(poly.coeff(static_cast<size_t>(i)));
      REQUIRE(d.has_value());  // coefficients are fixed by x -> x^q
      c.push_back(*d);
    }
    return Poly(E.base(), std::move(c));
  };
  return RationalMap(down(num), down(den));
}

}  // namespace

TEST_CASE("redei coefficients match the defining display") {
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{
           {5, 1}, {7, 1}, {3, 2}, {2, 1}, {2, 2}, {2, 3}}) {
    FieldPtr f = Field::make(p, k);
    for (const Elem& a : enumerate_alphas(f)) {
      ExtPtr e = Extension::make(f, a);
      for (uint64_t n = 1; n <= 10; ++n) {
        RationalMap got = redei_coeffs(RedeiSpec{e, n});
        CHECK(got == redei_display_oracle(*e, n));
        // swapping beta and beta_bar yields the identical map
        CHECK(got == redei_display_oracle(*e, n, /*swap=*/true));
        CHECK(got.degree() == n);
      }
    }
  }
}

TEST_CASE("redei coefficient examples") {
  ExtPtr e52 = make_ext(5, 1, 2);
  CHECK(redei_coeffs(RedeiSpec{e52, 1}) ==
        RationalMap::identity(e52->base()));
  CHECK(redei_coeffs(RedeiSpec{e52, 2}) ==
        RationalMap(poly_from(e52->base(), {2, 0, 1}),
                    poly_from(e52->base(), {0, 2})));

  ExtPtr e21 = make_ext(2, 1, 1);
  CHECK(redei_coeffs(RedeiSpec{e21, 2}) ==
        RationalMap(poly_from(e21->base(), {1, 0, 1}),
                    poly_from(e21->base(), {1})));

  CHECK_THROWS_AS(redei_coeffs(RedeiSpec{e52, 0}), std::domain_error);
  CHECK_THROWS_AS(redei_coeffs(RedeiSpec{e52, kCoeffDegreeCap + 1}),
                  std::domain_error);
}

TEST_CASE("redei evaluation pipeline") {
  ExtPtr e52 = make_ext(5, 1, 2);
  for (uint64_t n = 1; n <= 6; ++n) {
    CHECK(redei_eval(RedeiSpec{e52, n}, Point::infinity()) ==
          Point::infinity());
  }
  CHECK(redei_eval(RedeiSpec{e52, 2},
                   Point::finite(e52->base()->zero())) == Point::infinity());

  ExtPtr e21 = make_ext(2, 1, 1);
  CHECK(redei_eval(RedeiSpec{e21, 2}, Point::finite(e21->base()->zero())) ==
        Point::finite(e21->base()->one()));

  // base points come back over the base field
  Point img = redei_eval(RedeiSpec{e52, 3},
                         Point::finite(e52->base()->from_index(2)));
  REQUIRE_FALSE(img.is_inf());
  CHECK(img.value().field().same(*e52->base()));

  // extension points stay in the extension, including beta -> beta
  Point b = Point::finite(e52->beta());
  CHECK(redei_eval(RedeiSpec{e52, 2}, b) == b);
}

TEST_CASE("evaluators agree pointwise on P^1(F_{q^2})") {
  for (auto [p, k, a] : std::vector<std::tuple<uint64_t, unsigned, uint64_t>>{
           {5, 1, 2}, {7, 1, 3}, {2, 2, 2}}) {
    ExtPtr e = make_ext(p, k, a);
    for (uint64_t n = 1; n <= 8; ++n) {
      RedeiSpec spec{e, n};
      RationalMap rm = redei_coeffs(spec);
      for (const Point& pt : projective_line(e->ext())) {
        CHECK(rm.eval(pt) == redei_eval(spec, pt));
      }
    }
  }
}

TEST_CASE("redei combine realizes the addition law") {
  ExtPtr e52 = make_ext(5, 1, 2);
  const FieldPtr& f5 = e52->base();

  // v = infinity is the identity of the combiner
  for (const Point& u : projective_line(f5)) {
    CHECK(redei_combine(*e52, u, Point::infinity()) == u);
  }

  // combine(R_1(1), R_1(1)) = (1*1 + 2)/(1 + 1) = 4 = R_2(1)
  Point one = Point::finite(f5->one());
  CHECK(redei_combine(*e52, one, one) == Point::finite(f5->from_index(4)));
  CHECK(redei_eval(RedeiSpec{e52, 2}, one) ==
        Point::finite(f5->from_index(4)));

  // even q: combine(R_1(0), R_1(0)) = 1 = R_2(0)
  ExtPtr e21 = make_ext(2, 1, 1);
  Point zero = Point::finite(e21->base()->zero());
  CHECK(redei_combine(*e21, zero, zero) ==
        Point::finite(e21->base()->one()));

  // R_m(x) combined with R_n(x) equals R_{m+n}(x) everywhere
  for (uint64_t m = 1; m <= 5; ++m) {
    for (uint64_t n = 1; n <= 5; ++n) {
      for (const Point& x : projective_line(f5)) {
        CHECK(redei_combine(*e52, redei_eval(RedeiSpec{e52, m}, x),
                            redei_eval(RedeiSpec{e52, n}, x)) ==
              redei_eval(RedeiSpec{e52, m + n}, x));
      }
    }
  }
}

TEST_CASE("combine display matches the canonical form away from poles") {
  for (auto [p, k, a] : std::vector<std::tuple<uint64_t, unsigned, uint64_t>>{
           {5, 1, 2}, {7, 1, 3}, {2, 1, 1}, {2, 2, 2}}) {
    ExtPtr e = make_ext(p, k, a);
    const FieldPtr& f = e->base();
    Elem tr = *e->descend(e->trace_beta());
    for (uint64_t uu = 0; uu < f->order(); ++uu) {
      for (uint64_t vv = 0; vv < f->order(); ++vv) {
        Elem u = f->from_index(uu), v = f->from_index(vv);
        Elem den = u + v - tr;
        if (den.is_zero()) continue;
        CHECK(redei_combine(*e, Point::finite(u), Point::finite(v)) ==
              Point::finite((u * v + e->alpha()) / den));
      }
    }
  }
}

TEST_CASE("permutation criterion and brute force") {
  ExtPtr e52 = make_ext(5, 1, 2);
  CHECK_FALSE(redei_permutes(RedeiSpec{e52, 3}));  // gcd(3, 6) = 3
  CHECK(redei_permutes(RedeiSpec{e52, 5}));        // gcd(5, 6) = 1
  ExtPtr e73 = make_ext(7, 1, 3);
  CHECK(redei_permutes(RedeiSpec{e73, 3}));        // gcd(3, 8) = 1
  for (uint64_t n = 1; n <= 12; ++n) {
    CHECK(redei_permutes(RedeiSpec{e52, n}) ==
          redei_permutes_brute(RedeiSpec{e52, n}));
    CHECK(redei_permutes(RedeiSpec{e73, n}) ==
          redei_permutes_brute(RedeiSpec{e73, n}));
  }
}

TEST_CASE("composition semigroup R_m o R_n = R_{mn}") {
  for (auto [p, k, a] : std::vector<std::tuple<uint64_t, unsigned, uint64_t>>{
           {5, 1, 3}, {2, 2, 3}}) {
    ExtPtr e = make_ext(p, k, a);
    for (uint64_t m = 1; m <= 4; ++m) {
      for (uint64_t n = 1; n <= 4; ++n) {
        // symbolic
        CHECK(redei_coeffs(RedeiSpec{e, m})
                  .compose(redei_coeffs(RedeiSpec{e, n})) ==
              redei_coeffs(RedeiSpec{e, m * n}));
        // pointwise
        for (const Point& x : projective_line(e->base())) {
          CHECK(redei_eval(RedeiSpec{e, m}, redei_eval(RedeiSpec{e, n}, x)) ==
                redei_eval(RedeiSpec{e, m * n}, x));
        }
      }
    }
  }
}

TEST_CASE("evaluation depends only on n mod q+1 on base points") {
  ExtPtr e = make_ext(7, 1, 3);
  uint64_t big = 1'000'000'007ULL;
  uint64_t reduced = big % 8 == 0 ? 8 : big % 8;
  for (const Point& x : projective_line(e->base())) {
    CHECK(redei_eval(RedeiSpec{e, big}, x) ==
          redei_eval(RedeiSpec{e, reduced}, x));
  }
}

TEST_CASE("distinct alpha give distinct R_2 over F_5") {
  FieldPtr f5 = Field::make(5);
  RationalMap a = redei_coeffs(RedeiSpec{
      Extension::make(f5, f5->from_index(2)), 2});
  RationalMap b = redei_coeffs(RedeiSpec{
      Extension::make(f5, f5->from_index(3)), 2});
  CHECK(a != b);
}

TEST_CASE("binomial rows match the Pascal-triangle oracle") {
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 13ULL}) {
    // Pascal recurrence mod p, the reference construction
    std::vector<std::vector<uint64_t>> tri{{1}};
    for (int r = 1; r <= 40; ++r) {
      std::vector<uint64_t> row(r + 1, 1);
      for (int j = 1; j < r; ++j) {
        row[j] = (tri[r - 1][j - 1] + tri[r - 1][j]) % p;
      }
      tri.push_back(std::move(row));
    }
    for (uint64_t n : {0ULL, 1ULL, 7ULL, 25ULL, 40ULL}) {
      CHECK(binom_row_mod_p(n, p) == tri[n]);
    }
  }
}
