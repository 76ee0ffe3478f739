#include "redchev/selftest.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "redchev/cheby.hpp"
#include "redchev/encoding.hpp"
#include "redchev/fgraph.hpp"
#include "redchev/keyx.hpp"
#include "redchev/redei.hpp"
#include "redchev/trig.hpp"

namespace redchev {

namespace {

struct Sweep {
  bool quick;
  std::vector<ExtPtr> cases;  // all (q, alpha) over the main field set
  uint64_t nmax;              // degree sweep bound
  uint64_t mmax;              // bound for the m,n <= 8 criteria
};

std::vector<FieldPtr> main_fields(bool quick) {
  std::vector<std::pair<uint64_t, unsigned>> pk;
  if (quick) {
    pk = {{3, 1}, {5, 1}, {7, 1}, {2, 1}, {2, 2}};
  } else {
    pk = {{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1},
          {2, 1}, {2, 2}, {2, 3}, {2, 4}};
  }
  std::vector<FieldPtr> out;
  for (auto [p, k] : pk) out.push_back(Field::make(p, k));
  return out;
}

Sweep build_sweep(bool quick) {
  Sweep s;
  s.quick = quick;
  s.nmax = quick ? 6 : 12;
  s.mmax = quick ? 5 : 8;
  for (const FieldPtr& f : main_fields(quick)) {
    for (const Elem& a : enumerate_alphas(f)) {
      s.cases.push_back(Extension::make(f, a));
    }
  }
  return s;
}

std::string case_tag(const Extension& E, uint64_t n) {
  std::ostringstream os;
  os << "q=" << E.q() << " alpha=" << elem_string(E.alpha()) << " n=" << n;
  return os.str();
}

using CheckFn = std::function<bool(std::string&)>;

CheckResult run_check(const std::string& name, const CheckFn& fn) {
  CheckResult r;
  r.name = name;
  try {
    r.pass = fn(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

// 1. |enumerate_alphas| = floor(q/2)
bool check_alpha_count(const Sweep& s, std::string& detail) {
  std::vector<FieldPtr> fields = main_fields(s.quick);
  if (!s.quick) {
    fields.push_back(Field::make(17));
    fields.push_back(Field::make(5, 2));
    fields.push_back(Field::make(3, 3));
    fields.push_back(Field::make(2, 5));
  }
  for (const FieldPtr& f : fields) {
    size_t got = enumerate_alphas(f).size();
    if (got != f->order() / 2) {
      detail = "q=" + std::to_string(f->order()) + ": got " +
               std::to_string(got);
      return false;
    }
  }
  return true;
}

// 2. coefficient form vs conjugation pipeline on all of P^1(F_{q^2})
bool check_redei_evaluators(const Sweep& s, std::string& detail) {
  for (const ExtPtr& E : s.cases) {
    std::vector<Point> line = projective_line(E->ext());
    for (uint64_t n = 1; n <= s.nmax; ++n) {
      RedeiSpec spec{E, n};
      RationalMap rm = redei_coeffs(spec);
      for (const Point& pt : line) {
        if (rm.eval(pt) != redei_eval(spec, pt)) {
          detail = case_tag(*E, n) + " at " + point_string(pt);
          return false;
        }
      }
    }
  }
  return true;
}

// 3. C_n = (1/x) o R_n o (1/x) symbolically, and its evaluators agree
bool check_cheby_conjugacy(const Sweep& s, std::string& detail) {
  for (const ExtPtr& E : s.cases) {
    MobiusMap recip = MobiusMap::reciprocal(E->base());
    std::vector<Point> line = projective_line(E->ext());
    for (uint64_t n = 1; n <= s.nmax; ++n) {
      ChebySpec spec{E, n};
      RationalMap cm = cheby_coeffs(spec);
      if (cm != redei_coeffs(RedeiSpec{E, n}).conjugate(recip)) {
        detail = case_tag(*E, n) + ": conjugate mismatch";
        return false;
      }
      for (const Point& pt : line) {
        if (cm.eval(pt) != cheby_eval(spec, pt)) {
          detail = case_tag(*E, n) + " at " + point_string(pt);
          return false;
        }
      }
    }
  }
  return true;
}

// 4. gcd criterion vs brute-force bijectivity
bool check_permutation_criteria(const Sweep& s, std::string& detail) {
  for (const ExtPtr& E : s.cases) {
    for (uint64_t n = 1; n <= s.nmax; ++n) {
      RedeiSpec rs{E, n};
      ChebySpec cs{E, n};
      if (redei_permutes(rs) != redei_permutes_brute(rs)) {
        detail = "redei " + case_tag(*E, n);
        return false;
      }
      if (cheby_permutes_p1(cs) != cheby_permutes_p1_brute(cs)) {
        detail = "cheby " + case_tag(*E, n);
        return false;
      }
      if (!E->even_char() &&
          cheby_permutes_affine(cs) != cheby_permutes_affine_brute(cs)) {
        detail = "cheby affine " + case_tag(*E, n);
        return false;
      }
    }
  }
  return true;
}

// 5. commutation, symbolic and pointwise
bool check_commutation(const Sweep& s, std::string& detail) {
  for (const ExtPtr& E : s.cases) {
    std::vector<Point> line = projective_line(E->base());
    std::vector<RationalMap> R, C;
    for (uint64_t n = 1; n <= s.mmax; ++n) {
      R.push_back(redei_coeffs(RedeiSpec{E, n}));
      C.push_back(cheby_coeffs(ChebySpec{E, n}));
    }
    for (uint64_t m = 1; m <= s.mmax; ++m) {
      for (uint64_t n = m + 1; n <= s.mmax; ++n) {
        if (R[m - 1].compose(R[n - 1]) != R[n - 1].compose(R[m - 1])) {
          detail = "redei symbolic " + case_tag(*E, m) + " vs n=" +
                   std::to_string(n);
          return false;
        }
        if (C[m - 1].compose(C[n - 1]) != C[n - 1].compose(C[m - 1])) {
          detail = "cheby symbolic " + case_tag(*E, m) + " vs n=" +
                   std::to_string(n);
          return false;
        }
        for (const Point& x : line) {
          RedeiSpec rm{E, m}, rn{E, n};
          ChebySpec cm{E, m}, cn{E, n};
          if (redei_eval(rm, redei_eval(rn, x)) !=
              redei_eval(rn, redei_eval(rm, x))) {
            detail = "redei pointwise " + case_tag(*E, m) + " n=" +
                     std::to_string(n) + " x=" + point_string(x);
            return false;
          }
          if (cheby_eval(cm, cheby_eval(cn, x)) !=
              cheby_eval(cn, cheby_eval(cm, x))) {
            detail = "cheby pointwise " + case_tag(*E, m) + " n=" +
                     std::to_string(n) + " x=" + point_string(x);
            return false;
          }
        }
      }
    }
  }
  return true;
}

// 6. addition laws and their rational displays
bool check_addition_laws(const Sweep& s, std::string& detail) {
  for (const ExtPtr& E : s.cases) {
    const Extension& X = *E;
    std::vector<Point> line = projective_line(X.base());
    for (uint64_t m = 1; m <= s.mmax; ++m) {
      for (uint64_t n = 1; n <= s.mmax; ++n) {
        RedeiSpec rm{E, m}, rn{E, n}, rsum{E, m + n};
        ChebySpec cm{E, m}, cn{E, n}, csum{E, m + n};
        for (const Point& x : line) {
          if (redei_combine(X, redei_eval(rm, x), redei_eval(rn, x)) !=
              redei_eval(rsum, x)) {
            detail = "redei " + case_tag(X, m) + "+" + std::to_string(n) +
                     " at x=" + point_string(x);
            return false;
          }
          if (cheby_combine(X, cheby_eval(cm, x), cheby_eval(cn, x)) !=
              cheby_eval(csum, x)) {
            detail = "cheby " + case_tag(X, m) + "+" + std::to_string(n) +
                     " at x=" + point_string(x);
            return false;
          }
        }
      }
    }
    // rational displays against the canonical mu-product forms, at every
    // finite (u, v) where the displayed denominator is nonzero
    Elem tr = *X.descend(X.trace_beta());
    Elem one = X.base()->one();
    for (uint64_t a = 0; a < X.q(); ++a) {
      for (uint64_t b = 0; b < X.q(); ++b) {
        Elem u = X.base()->from_index(a);
        Elem v = X.base()->from_index(b);
        Point pu = Point::finite(u), pv = Point::finite(v);
        Elem dr = u + v - tr;
        if (!dr.is_zero() &&
            redei_combine(X, pu, pv) !=
                Point::finite((u * v + X.alpha()) / dr)) {
          detail = "redei display q=" + std::to_string(X.q()) + " u=" +
                   elem_string(u) + " v=" + elem_string(v);
          return false;
        }
        Elem dc = one + X.alpha() * u * v;
        if (!dc.is_zero() &&
            cheby_combine(X, pu, pv) !=
                Point::finite((u + v - tr * u * v) / dc)) {
          detail = "cheby display q=" + std::to_string(X.q()) + " u=" +
                   elem_string(u) + " v=" + elem_string(v);
          return false;
        }
      }
    }
  }
  return true;
}

// 7. functional graphs isomorphic to the power map on mu_{q+1}
bool check_functional_graphs(const Sweep& s, std::string& detail) {
  for (const ExtPtr& E : s.cases) {
    std::vector<Point> line = projective_line(E->base());
    for (uint64_t n = 1; n <= s.nmax; ++n) {
      CanonicalForm power = canonical_form(power_map_graph(*E, n));
      RedeiSpec rs{E, n};
      ChebySpec cs{E, n};
      FunctionalGraph gr = build_graph(
          [&](const Point& p) { return redei_eval(rs, p); }, line);
      FunctionalGraph gc = build_graph(
          [&](const Point& p) { return cheby_eval(cs, p); }, line);
      if (canonical_form(gr) != power) {
        detail = "redei " + case_tag(*E, n);
        return false;
      }
      if (canonical_form(gc) != power) {
        detail = "cheby " + case_tag(*E, n);
        return false;
      }
    }
  }
  return true;
}

// 8. involution criterion vs double application
bool check_involutions(const Sweep& s, std::string& detail) {
  uint64_t bound = s.quick ? 10 : 20;
  for (const ExtPtr& E : s.cases) {
    for (uint64_t n = 1; n <= bound; ++n) {
      ChebySpec cs{E, n};
      if (cheby_is_involution(cs) != cheby_is_involution_brute(cs)) {
        detail = case_tag(*E, n);
        return false;
      }
    }
  }
  return true;
}

// 9. trigonometric identities over full periods
bool check_trigonometry(const Sweep& s, std::string& detail) {
  std::vector<std::pair<uint64_t, unsigned>> even =
      s.quick ? std::vector<std::pair<uint64_t, unsigned>>{{2, 1}, {2, 2}}
              : std::vector<std::pair<uint64_t, unsigned>>{{2, 1}, {2, 2},
                                                           {2, 3}};
  for (auto [p, k] : even) {
    FieldPtr f = Field::make(p, k);
    for (const Elem& a : enumerate_alphas(f)) {
      ExtPtr E = Extension::make(f, a);
      Elem g = E->field_generator();
      for (const Elem& zeta : {g, g * g}) {
        TrigCtx2 ctx = make_trig2(E, zeta);
        int64_t ord = static_cast<int64_t>(ctx.ord);
        for (int64_t x = 0; x < ord; ++x) {
          for (int64_t y = 0; y < ord; ++y) {
            auto ok = trig2_identities(ctx, x, y);
            for (size_t i = 0; i < ok.size(); ++i) {
              if (!ok[i]) {
                detail = "identity " + std::to_string(i + 1) + " q=" +
                         std::to_string(f->order()) + " alpha=" +
                         elem_string(a) + " zeta=" + elem_string(zeta) +
                         " k=" + std::to_string(x) + " l=" +
                         std::to_string(y);
                return false;
              }
            }
          }
          for (uint64_t n = 1; n <= 8; ++n) {
            auto [lhs, rhs] = tan2_multiply(ctx, x, n);
            if (lhs != rhs) {
              detail = "tan multiplication q=" + std::to_string(f->order()) +
                       " alpha=" + elem_string(a) + " k=" +
                       std::to_string(x) + " n=" + std::to_string(n);
              return false;
            }
          }
        }
      }
    }
  }
  std::vector<std::pair<uint64_t, unsigned>> odd =
      s.quick ? std::vector<std::pair<uint64_t, unsigned>>{{5, 1}}
              : std::vector<std::pair<uint64_t, unsigned>>{{5, 1}, {7, 1},
                                                           {3, 2}};
  for (auto [p, k] : odd) {
    FieldPtr f = Field::make(p, k);
    for (const Elem& a : enumerate_alphas(f)) {
      ExtPtr E = Extension::make(f, a);
      TrigCtxOdd ctx = make_trig_odd(E);
      int64_t ord = static_cast<int64_t>(ctx.ord);
      for (int64_t x = 0; x < ord; ++x) {
        for (int64_t y = 0; y < ord; ++y) {
          if (!tan_odd_addition(ctx, x, y)) {
            detail = "odd tangent addition q=" + std::to_string(f->order()) +
                     " alpha=" + elem_string(a) + " k=" + std::to_string(x) +
                     " l=" + std::to_string(y);
            return false;
          }
        }
      }
    }
  }
  return true;
}

// 10. distinct alpha give distinct normalized maps
bool check_alpha_injectivity(const Sweep& s, std::string& detail) {
  std::vector<std::pair<uint64_t, unsigned>> pk =
      s.quick ? std::vector<std::pair<uint64_t, unsigned>>{{5, 1}, {2, 3}}
              : std::vector<std::pair<uint64_t, unsigned>>{
                    {5, 1}, {7, 1}, {2, 3}, {3, 2}, {13, 1}};
  for (auto [p, k] : pk) {
    FieldPtr f = Field::make(p, k);
    for (uint64_t n : {uint64_t{2}, uint64_t{3}}) {
      if (n == f->characteristic()) continue;
      std::set<std::string> seen;
      std::vector<Elem> alphas = enumerate_alphas(f);
      for (const Elem& a : alphas) {
        seen.insert(ratmap_string(redei_coeffs(RedeiSpec{
            Extension::make(f, a), n})));
      }
      if (seen.size() != alphas.size()) {
        detail = "q=" + std::to_string(f->order()) + " n=" +
                 std::to_string(n) + ": " + std::to_string(seen.size()) +
                 " distinct of " + std::to_string(alphas.size());
        return false;
      }
    }
  }
  return true;
}

// 11. key exchange trials
bool check_key_exchange(const Sweep& s, std::string& detail) {
  std::vector<std::pair<uint64_t, unsigned>> pk =
      s.quick ? std::vector<std::pair<uint64_t, unsigned>>{{13, 1}, {2, 4}}
              : std::vector<std::pair<uint64_t, unsigned>>{
                    {13, 1}, {2, 4}, {251, 1}, {2, 8}};
  int trials = s.quick ? 20 : 100;
  for (auto [p, k] : pk) {
    FieldPtr f = Field::make(p, k);
    ExtPtr E = Extension::make(f, enumerate_alphas(f).front());
    KeyxParams params{E, Point::finite(f->one())};
    for (int t = 0; t < trials; ++t) {
      KeyxSecret a = keygen(params, static_cast<uint64_t>(t));
      KeyxSecret b = keygen(params, static_cast<uint64_t>(t) + 1000);
      if (std::gcd(a.n, E->q() + 1) != 1 || std::gcd(b.n, E->q() + 1) != 1) {
        detail = "q=" + std::to_string(E->q()) + " trial " +
                 std::to_string(t) + ": secret not coprime to q+1";
        return false;
      }
      Point pa = derive_public(params, a);
      Point pb = derive_public(params, b);
      if (derive_shared(params, a, pb) != derive_shared(params, b, pa)) {
        detail = "q=" + std::to_string(E->q()) + " trial " +
                 std::to_string(t) + ": shared secrets differ";
        return false;
      }
      for (const Point& pub : {pa, pb}) {
        KeyxMessage m = decode_message(encode_message(params, pub));
        if (!m.field->same(*f) || m.alpha != E->alpha() ||
            m.x0 != params.x0 || m.pub != pub) {
          detail = "q=" + std::to_string(E->q()) + " trial " +
                   std::to_string(t) + ": wire round-trip mismatch";
          return false;
        }
      }
    }
  }
  return true;
}

// 12. logarithmic evaluation speed, against the coefficient path
bool check_performance(const Sweep&, std::string& detail) {
  FieldPtr f = Field::make(251);
  ExtPtr E = Extension::make(f, enumerate_alphas(f).front());
  std::vector<Point> line = projective_line(f);
  for (uint64_t n = 1; n <= 12; ++n) {
    ChebySpec spec{E, n};
    RationalMap cm = cheby_coeffs(spec);
    for (const Point& pt : line) {
      if (cm.eval(pt) != cheby_eval(spec, pt)) {
        detail = "coefficient mismatch n=" + std::to_string(n) + " at " +
                 point_string(pt);
        return false;
      }
    }
  }
  ChebySpec big{E, 1'000'000'000};
  auto t0 = std::chrono::steady_clock::now();
  uint64_t sink = 0;
  for (const Point& pt : line) {
    Point img = cheby_eval(big, pt);
    sink += img.is_inf() ? 1 : img.value().index();
  }
  auto t1 = std::chrono::steady_clock::now();
  double per_point =
      std::chrono::duration<double, std::milli>(t1 - t0).count() /
      static_cast<double>(line.size());
  if (per_point >= 1.0) {
    detail = "n=10^9 took " + std::to_string(per_point) +
             " ms/point (checksum " + std::to_string(sink % 997) + ")";
    return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> run_selftest(bool quick) {
  Sweep s = build_sweep(quick);
  std::vector<CheckResult> out;
  out.push_back(run_check("alpha-count equals floor(q/2)", [&](auto& d) {
    return check_alpha_count(s, d);
  }));
  out.push_back(run_check(
      "redei coefficients match conjugation evaluation on P^1(F_q^2)",
      [&](auto& d) { return check_redei_evaluators(s, d); }));
  out.push_back(run_check(
      "cheby equals redei conjugated by 1/x; evaluators agree",
      [&](auto& d) { return check_cheby_conjugacy(s, d); }));
  out.push_back(run_check(
      "permutation criterion gcd(n,q+1)=1 matches bijectivity scans",
      [&](auto& d) { return check_permutation_criteria(s, d); }));
  out.push_back(run_check("redei and cheby families commute",
                          [&](auto& d) { return check_commutation(s, d); }));
  out.push_back(run_check("addition laws and their rational displays",
                          [&](auto& d) { return check_addition_laws(s, d); }));
  out.push_back(run_check(
      "functional graphs isomorphic to the power map on mu_{q+1}",
      [&](auto& d) { return check_functional_graphs(s, d); }));
  out.push_back(run_check(
      "involution criterion n^2=1 mod q+1 matches double application",
      [&](auto& d) { return check_involutions(s, d); }));
  out.push_back(run_check("trigonometric identities over full periods",
                          [&](auto& d) { return check_trigonometry(s, d); }));
  out.push_back(run_check("distinct alpha give distinct maps (n in {2,3})",
                          [&](auto& d) { return check_alpha_injectivity(s, d); }));
  out.push_back(run_check(
      "key exchange: shared agreement, coprime secrets, wire round-trip",
      [&](auto& d) { return check_key_exchange(s, d); }));
  out.push_back(run_check(
      "degree-10^9 evaluation under 1 ms/point, matching coefficients",
      [&](auto& d) { return check_performance(s, d); }));
  return out;
}

}  // namespace redchev
