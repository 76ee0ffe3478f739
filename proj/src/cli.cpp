#include "redchev/cli.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "redchev/cheby.hpp"
#include "redchev/encoding.hpp"
#include "redchev/fgraph.hpp"
#include "redchev/keyx.hpp"
#include "redchev/redei.hpp"
#include "redchev/selftest.hpp"
#include "redchev/trig.hpp"

namespace redchev {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Re-throws domain errors with the offending flag named.
template <typename Fn>
auto flagged(const char* flag, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string(flag) + ": " + e.what());
  }
}

struct MapArgs {
  std::string field;
  std::string alpha;
  uint64_t n = 1;
};

ExtPtr make_ext(const MapArgs& a) {
  FieldPtr f = flagged("--field", [&] { return parse_field_spec(a.field); });
  Elem alpha = flagged("--alpha", [&] { return parse_elem(f, a.alpha); });
  return flagged("--alpha", [&] { return Extension::make(f, alpha); });
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

int run_selftest_cmd(bool quick, std::ostream& out) {
  bool all = true;
  int passed = 0;
  std::vector<CheckResult> results = run_selftest(quick);
  for (const CheckResult& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " " << r.name;
    if (!r.pass && !r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
    all = all && r.pass;
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return all ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Redei and tangent-Chebyshev rational maps over finite fields"};
  app.require_subcommand(1);

  // alphas
  std::string alphas_field;
  CLI::App* alphas = app.add_subcommand(
      "alphas", "List every alpha giving an irreducible quadratic");
  alphas->add_option("--field", alphas_field, "field spec, e.g. 5 or 2^4")
      ->required();

  // redei / cheby
  MapArgs redei_args, cheby_args;
  bool redei_coeffs_flag = false, cheby_coeffs_flag = false;
  std::string redei_eval_at, cheby_eval_at;
  bool cheby_involution = false, cheby_permutes = false;

  CLI::App* redei = app.add_subcommand("redei", "Redei rational maps R_n");
  redei->add_option("--field", redei_args.field)->required();
  redei->add_option("--alpha", redei_args.alpha)->required();
  redei->add_option("--n", redei_args.n, "degree, n >= 1")->required();
  redei->add_flag("--coeffs", redei_coeffs_flag,
                  "print the reduced fraction");
  redei->add_option("--eval", redei_eval_at,
                    "evaluate at a point of P^1(F_q)");

  CLI::App* cheby =
      app.add_subcommand("cheby", "tangent-Chebyshev rational maps C_n");
  cheby->add_option("--field", cheby_args.field)->required();
  cheby->add_option("--alpha", cheby_args.alpha)->required();
  cheby->add_option("--n", cheby_args.n, "degree, n >= 1")->required();
  cheby->add_flag("--coeffs", cheby_coeffs_flag,
                  "print the reduced fraction");
  cheby->add_option("--eval", cheby_eval_at,
                    "evaluate at a point of P^1(F_q)");
  cheby->add_flag("--involution", cheby_involution,
                  "does C_n induce an involution on P^1(F_q)?");
  cheby->add_flag("--permutes", cheby_permutes,
                  "does C_n permute P^1(F_q)?");

  // combine
  MapArgs combine_args;
  std::string combine_u, combine_v;
  bool combine_redei = false, combine_cheby = false;
  CLI::App* combine = app.add_subcommand(
      "combine", "apply the addition-law combiner to two points");
  combine->add_option("--field", combine_args.field)->required();
  combine->add_option("--alpha", combine_args.alpha)->required();
  combine->add_option("--u", combine_u)->required();
  combine->add_option("--v", combine_v)->required();
  combine->add_flag("--redei", combine_redei);
  combine->add_flag("--cheby", combine_cheby);

  // graph
  MapArgs graph_args;
  std::string graph_map, graph_format = "cycles";
  CLI::App* graph =
      app.add_subcommand("graph", "functional graph of a map");
  graph->add_option("--field", graph_args.field)->required();
  graph->add_option("--alpha", graph_args.alpha)->required();
  graph->add_option("--n", graph_args.n)->required();
  graph->add_option("--map", graph_map, "redei, cheby, or power")
      ->required()
      ->check(CLI::IsMember({"redei", "cheby", "power"}));
  graph->add_option("--format", graph_format, "dot or cycles")
      ->check(CLI::IsMember({"dot", "cycles"}));

  // trig
  MapArgs trig_args;
  std::string trig_zeta;
  bool trig_table = false;
  CLI::App* trig = app.add_subcommand(
      "trig", "finite-field trigonometric tables (sin, cos, tan)");
  trig->add_option("--field", trig_args.field)->required();
  trig->add_option("--alpha", trig_args.alpha)->required();
  trig->add_option("--zeta", trig_zeta,
                   "element of F_{q^2}, default: smallest generator");
  trig->add_flag("--table", trig_table, "print one line per k");

  // keyx demo
  MapArgs keyx_args;
  std::string keyx_x0;
  uint64_t seed_a = 0, seed_b = 0;
  CLI::App* keyx = app.add_subcommand("keyx", "toy commuting-map exchange");
  keyx->require_subcommand(1);
  CLI::App* demo = keyx->add_subcommand("demo", "run both parties locally");
  demo->add_option("--field", keyx_args.field)->required();
  demo->add_option("--alpha", keyx_args.alpha)->required();
  demo->add_option("--x0", keyx_x0)->required();
  demo->add_option("--seed-a", seed_a)->required();
  demo->add_option("--seed-b", seed_b)->required();

  // selftest
  bool quick = false;
  CLI::App* selftest =
      app.add_subcommand("selftest", "run the full invariant suite");
  selftest->add_flag("--quick", quick, "reduced field sweep");

  std::vector<const char*> argv;
  argv.push_back("redchev");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*alphas) {
      FieldPtr f =
          flagged("--field", [&] { return parse_field_spec(alphas_field); });
      for (const Elem& a : enumerate_alphas(f)) {
        out << elem_string(a) << "\n";
      }
      return 0;
    }
    if (*redei) {
      if (redei_coeffs_flag == !redei_eval_at.empty()) {
        throw UsageError("redei: pass exactly one of --coeffs or --eval");
      }
      ExtPtr E = make_ext(redei_args);
      RedeiSpec spec{E, redei_args.n};
      if (redei_coeffs_flag) {
        out << ratmap_string(redei_coeffs(spec)) << "\n";
      } else {
        Point pt = flagged(
            "--eval", [&] { return parse_point(E->base(), redei_eval_at); });
        out << point_string(redei_eval(spec, pt)) << "\n";
      }
      return 0;
    }
    if (*cheby) {
      int chosen = (cheby_coeffs_flag ? 1 : 0) +
                   (!cheby_eval_at.empty() ? 1 : 0) +
                   (cheby_involution ? 1 : 0) + (cheby_permutes ? 1 : 0);
      if (chosen != 1) {
        throw UsageError(
            "cheby: pass exactly one of --coeffs, --eval, --involution, "
            "--permutes");
      }
      ExtPtr E = make_ext(cheby_args);
      ChebySpec spec{E, cheby_args.n};
      if (cheby_coeffs_flag) {
        out << ratmap_string(cheby_coeffs(spec)) << "\n";
      } else if (!cheby_eval_at.empty()) {
        Point pt = flagged(
            "--eval", [&] { return parse_point(E->base(), cheby_eval_at); });
        out << point_string(cheby_eval(spec, pt)) << "\n";
      } else if (cheby_involution) {
        out << bool_str(cheby_is_involution(spec)) << "\n";
      } else {
        out << bool_str(cheby_permutes_p1(spec)) << "\n";
      }
      return 0;
    }
    if (*combine) {
      if (combine_redei == combine_cheby) {
        throw UsageError("combine: pass exactly one of --redei or --cheby");
      }
      ExtPtr E = make_ext(combine_args);
      Point u =
          flagged("--u", [&] { return parse_point(E->base(), combine_u); });
      Point v =
          flagged("--v", [&] { return parse_point(E->base(), combine_v); });
      Point w = combine_redei ? redei_combine(*E, u, v)
                              : cheby_combine(*E, u, v);
      out << point_string(w) << "\n";
      return 0;
    }
    if (*graph) {
      ExtPtr E = make_ext(graph_args);
      uint64_t n = graph_args.n;
      FunctionalGraph g;
      if (graph_map == "power") {
        g = power_map_graph(*E, n);
      } else {
        std::vector<Point> line = projective_line(E->base());
        if (graph_map == "redei") {
          RedeiSpec spec{E, n};
          g = build_graph(
              [&](const Point& p) { return redei_eval(spec, p); }, line);
        } else {
          ChebySpec spec{E, n};
          g = build_graph(
              [&](const Point& p) { return cheby_eval(spec, p); }, line);
        }
      }
      if (graph_format == "dot") {
        out << to_dot(g);
      } else {
        out << cycle_stats(g) << "\n";
      }
      return 0;
    }
    if (*trig) {
      if (!trig_table) {
        throw UsageError("trig: --table is the only action");
      }
      ExtPtr E = make_ext(trig_args);
      std::optional<Elem> zeta;
      if (!trig_zeta.empty()) {
        zeta = flagged("--zeta",
                       [&] { return parse_elem(E->ext(), trig_zeta); });
      }
      if (E->even_char()) {
        TrigCtx2 ctx = flagged("--zeta", [&] { return make_trig2(E, zeta); });
        for (uint64_t k = 0; k < ctx.ord; ++k) {
          int64_t ik = static_cast<int64_t>(k);
          out << k << " " << elem_string(sin2(ctx, ik)) << " "
              << elem_string(cos2(ctx, ik)) << " "
              << point_string(tan2(ctx, ik)) << "\n";
        }
      } else {
        TrigCtxOdd ctx =
            flagged("--zeta", [&] { return make_trig_odd(E, zeta); });
        for (uint64_t k = 0; k < ctx.ord; ++k) {
          int64_t ik = static_cast<int64_t>(k);
          out << k << " " << elem_string(sin_odd(ctx, ik)) << " "
              << elem_string(cos_odd(ctx, ik)) << " "
              << point_string(tan_odd(ctx, ik)) << "\n";
        }
      }
      return 0;
    }
    if (*keyx) {
      ExtPtr E = make_ext(keyx_args);
      Point x0 =
          flagged("--x0", [&] { return parse_point(E->base(), keyx_x0); });
      KeyxParams params{E, x0};
      KeyxSecret a = keygen(params, seed_a);
      KeyxSecret b = keygen(params, seed_b);
      std::string msg_a = encode_message(params, derive_public(params, a));
      std::string msg_b = encode_message(params, derive_public(params, b));
      out << "A secret: " << a.n << "\n";
      out << "B secret: " << b.n << "\n";
      out << "A public: " << msg_a << "\n";
      out << "B public: " << msg_b << "\n";
      // each side decodes the peer's line and applies its own secret
      KeyxMessage from_b = decode_message(msg_b);
      KeyxMessage from_a = decode_message(msg_a);
      Point shared_a =
          derive_shared(KeyxParams{from_b.ext, from_b.x0}, a, from_b.pub);
      Point shared_b =
          derive_shared(KeyxParams{from_a.ext, from_a.x0}, b, from_a.pub);
      out << "A shared: " << point_string(shared_a) << "\n";
      out << "B shared: " << point_string(shared_b) << "\n";
      out << "agree: " << bool_str(shared_a == shared_b) << "\n";
      return 0;
    }
    if (*selftest) {
      return run_selftest_cmd(quick, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace redchev
