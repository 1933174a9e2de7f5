// Command-line front end. Subcommands wrap one library call each and speak
// JSON on stdin-free paths: inputs are files, results go to stdout or --out.
// Domain errors exit 1 with {"error": code, "detail": text} on stderr;
// anything else escaping the library is an internal failure and exits 2.

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "ce/cluster.hpp"
#include "ce/duality.hpp"
#include "ce/error.hpp"
#include "ce/json_io.hpp"
#include "ce/polygon.hpp"
#include "ce/qseed.hpp"
#include "ce/snake.hpp"
#include "ce/tropical.hpp"
#include "ce/verify.hpp"

namespace {

using ce::Json;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    ce::write_json_file(out_path, j);
  }
}

// Chart from --n / --tri: an explicit triangulation file wins, a bare --n
// falls back to the fan.
ce::Triangulation load_chart(int n, const std::string& tri_path) {
  if (tri_path.empty()) {
    ce::require(n >= 3, "bad_polygon", "pass --n or --tri to fix the polygon");
    return ce::fan_triangulation(n);
  }
  ce::Triangulation t = ce::triangulation_from_json(ce::read_json_file(tri_path));
  ce::require(n == 0 || n == t.n, "bad_polygon", "--n disagrees with the triangulation file");
  return t;
}

// Square exchange matrix over the mutable directions, in their stored order.
// Mutation words and targets for cluster-pattern commands are 1-based over
// this block.
ce::IntMat mutable_exchange(const ce::Seed& s) {
  std::vector<int> idx;
  for (int i = 0; i < s.m; ++i)
    if (!s.is_frozen(i)) idx.push_back(i);
  ce::IntMat b;
  for (int i : idx) {
    ce::IntVec row;
    for (int j : idx) row.push_back(s.eps[i][j]);
    b.push_back(row);
  }
  return b;
}

ce::MarkedArcSet load_arcs(const std::string& lam_path, int n) {
  ce::DiskLamination l = ce::lamination_from_json(ce::read_json_file(lam_path));
  ce::require(n == 0 || l.n == n, "bad_polygon", "--n disagrees with the lamination file");
  return ce::deform_endpoints(l);
}

ce::VerifyLevel parse_level(const std::string& s) {
  if (s == "desk") return ce::VerifyLevel::Desk;
  if (s == "smoke") return ce::VerifyLevel::Smoke;
  ce::fail("bad_word", "--level must be desk or smoke");
}

void print_result_row(const ce::CheckResult& r) {
  std::ostringstream line;
  line << std::left << std::setw(20) << r.name << (r.pass ? "PASS" : "FAIL") << "  "
       << std::right << std::setw(8) << std::fixed << std::setprecision(2) << r.seconds
       << "s  " << r.detail;
  std::cout << line.str() << "\n";
}

int run_verify(const std::string& target, const std::string& level_str, uint64_t seed,
               int trials) {
  ce::VerifyLevel level = parse_level(level_str);
  if (target == "all") {
    auto results = ce::run_all_checks(level, seed);
    int failed = 0;
    for (const auto& r : results) {
      print_result_row(r);
      if (!r.pass) ++failed;
    }
    std::cout << results.size() - failed << "/" << results.size() << " suites passed\n";
    if (failed > 0)
      ce::fail("verify_failed", std::to_string(failed) + " suite(s) failed");
    return 0;
  }
  if (target == "hyperbolic") {
    ce::HyperbolicResiduals r = ce::hyperbolic_residuals(trials, seed);
    std::ostringstream line;
    line.precision(3);
    line << std::scientific << "max residuals over " << r.trials << " trials: exchange "
         << r.ptolemy << ", cross-ratio " << r.cross_ratio << ", flip " << r.flip;
    std::cout << line.str() << "\n";
    if (!(r.ptolemy < 1e-9 && r.cross_ratio < 1e-9 && r.flip < 1e-9))
      ce::fail("verify_failed", "hyperbolic residuals exceed 1e-9");
    return 0;
  }
  using SuiteFn = ce::CheckResult (*)(ce::VerifyLevel, uint64_t);
  const std::map<std::string, SuiteFn> suites{
      {"compatibility", ce::check_compatibility},
      {"dilog", ce::check_dilog},
      {"flip-census", ce::check_flip_census},
      {"ia-map", ce::check_ia_map},
      {"id-map", ce::check_id_map},
      {"involutivity", ce::check_involutivity},
      {"laurent-positivity", ce::check_laurent_positivity},
      {"quantum-fpoly", ce::check_quantum_fpoly},
      {"separation", ce::check_separation},
      {"snake-oracle", ce::check_snake_oracle},
      {"tropical-geometric", ce::check_tropical_geometric},
  };
  auto it = suites.find(target);
  ce::require(it != suites.end(), "bad_word", "unknown verify target " + target);
  ce::CheckResult r = it->second(level, seed);
  print_result_row(r);
  if (!r.pass) ce::fail("verify_failed", "suite " + target + " failed");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for cluster varieties of the disk"};
  app.require_subcommand(1);

  std::string in_path, out_path, word_str, tri_path, lam_path, mirror_path, arc_str;
  std::string point_path, type_str, level_str = "desk", target = "all", pair_path;
  int n = 0, target_idx = 0, trials = 1000;
  uint64_t seed = 0;
  bool quantum = false;

  auto* seed_cmd = app.add_subcommand("seed", "exchange matrices and compatible pairs");
  seed_cmd->require_subcommand(1);
  auto* seed_mutate = seed_cmd->add_subcommand("mutate", "mutate a seed along a word");
  seed_mutate->add_option("--in", in_path, "seed JSON")->required();
  seed_mutate->add_option("--word", word_str, "1-based mutation word")->required();
  seed_mutate->add_option("--out", out_path, "output path (default stdout)");
  auto* seed_pair = seed_cmd->add_subcommand("pair", "principal compatible pair of a seed");
  seed_pair->add_option("--in", in_path, "seed JSON")->required();
  seed_pair->add_option("--word", word_str, "1-based mutation word");
  seed_pair->add_option("--out", out_path, "output path (default stdout)");

  auto* cluster_cmd = app.add_subcommand("cluster", "cluster variables and F-polynomials");
  cluster_cmd->require_subcommand(1);
  auto* cluster_fpoly = cluster_cmd->add_subcommand("fpoly", "F-polynomial and g-vector");
  cluster_fpoly->add_option("--seed", in_path, "seed JSON")->required();
  cluster_fpoly->add_option("--word", word_str, "1-based mutation word");
  cluster_fpoly->add_option("--target", target_idx, "1-based mutable direction")->required();
  cluster_fpoly->add_option("--out", out_path, "output path (default stdout)");

  auto* trop_cmd = app.add_subcommand("tropical", "piecewise-linear mutation dynamics");
  trop_cmd->require_subcommand(1);
  auto* trop_mut = trop_cmd->add_subcommand("mutate", "mutate a tropical point");
  trop_mut->add_option("--type", type_str, "point type: a, x or d")->required();
  trop_mut->add_option("--point", point_path, "tropical point JSON")->required();
  trop_mut->add_option("--eps", in_path, "seed JSON carrying the exchange matrix")->required();
  trop_mut->add_option("--word", word_str, "1-based mutation word")->required();
  trop_mut->add_option("--out", out_path, "output path (default stdout)");

  auto* poly_cmd = app.add_subcommand("polygon", "triangulations of the marked disk");
  poly_cmd->require_subcommand(1);
  auto* poly_snake = poly_cmd->add_subcommand("snake", "snake graph of an arc in a chart");
  poly_snake->add_option("--n", n, "polygon size");
  poly_snake->add_option("--tri", tri_path, "triangulation JSON (default fan)");
  poly_snake->add_option("--arc", arc_str, "arc endpoints, 1-based, e.g. 2,6")->required();
  poly_snake->add_option("--out", out_path, "output path (default stdout)");
  auto* poly_census = poly_cmd->add_subcommand("census", "count all triangulations");
  poly_census->add_option("--n", n, "polygon size")->required();
  poly_census->add_option("--out", out_path, "output path (default stdout)");
  auto* poly_mat = poly_cmd->add_subcommand("matrices", "slot matrices of a chart");
  poly_mat->add_option("--n", n, "polygon size");
  poly_mat->add_option("--tri", tri_path, "triangulation JSON (default fan)");
  poly_mat->add_option("--out", out_path, "output path (default stdout)");

  auto* dual_cmd = app.add_subcommand("duality", "canonical expansions of arc systems");
  dual_cmd->require_subcommand(1);
  auto* dual_ia = dual_cmd->add_subcommand("ia", "expansion in the X-chart of a triangulation");
  dual_ia->add_option("--n", n, "polygon size");
  dual_ia->add_option("--tri", tri_path, "chart triangulation JSON (default fan)");
  dual_ia->add_option("--lam", lam_path, "lamination JSON")->required();
  dual_ia->add_flag("--quantum", quantum, "quantum expansion instead of classical");
  dual_ia->add_option("--out", out_path, "output path (default stdout)");
  auto* dual_id = dual_cmd->add_subcommand("id", "normal form of a mirror pair");
  dual_id->add_option("--n", n, "polygon size");
  dual_id->add_option("--tri", tri_path, "chart triangulation JSON (default fan)");
  dual_id->add_option("--lam", lam_path, "primary lamination JSON")->required();
  dual_id->add_option("--mirror", mirror_path, "mirror lamination JSON")->required();
  dual_id->add_flag("--quantum", quantum, "quantum normal form instead of classical");
  dual_id->add_option("--out", out_path, "output path (default stdout)");

  auto* q_cmd = app.add_subcommand("quantum", "quantum seeds and F-polynomials");
  q_cmd->require_subcommand(1);
  auto* q_mutate = q_cmd->add_subcommand("mutate", "mutate a quantum seed along a word");
  q_mutate->add_option("--pair", pair_path, "compatible pair JSON")->required();
  q_mutate->add_option("--word", word_str, "1-based mutation word")->required();
  q_mutate->add_option("--out", out_path, "output path (default stdout)");
  auto* q_fpoly = q_cmd->add_subcommand("fpoly", "quantum F-polynomial and g-vector");
  q_fpoly->add_option("--seed", in_path, "seed JSON")->required();
  q_fpoly->add_option("--word", word_str, "1-based mutation word");
  q_fpoly->add_option("--target", target_idx, "1-based mutable direction")->required();
  q_fpoly->add_option("--out", out_path, "output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "acceptance suites");
  verify_cmd->add_option("target", target, "all, a suite name, or hyperbolic");
  verify_cmd->add_option("--level", level_str, "desk or smoke (default desk)");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--trials", trials, "trial count for the hyperbolic target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json err{{"error", "bad_args"}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }

  try {
    if (seed_mutate->parsed()) {
      ce::Seed s = ce::seed_from_json(ce::read_json_file(in_path));
      for (int k : ce::parse_word(word_str)) s = ce::mutate_matrix(s, k);
      emit(ce::seed_to_json(s), out_path);
    } else if (seed_pair->parsed()) {
      ce::Seed s = ce::seed_from_json(ce::read_json_file(in_path));
      ce::CompatiblePair p = ce::principal_pair(mutable_exchange(s));
      if (!word_str.empty())
        for (int k : ce::parse_word(word_str)) p = ce::mutate_pair(p, k, 1);
      emit(ce::pair_to_json(p), out_path);
    } else if (cluster_fpoly->parsed()) {
      ce::Seed s = ce::seed_from_json(ce::read_json_file(in_path));
      ce::IntMat b0 = mutable_exchange(s);
      std::vector<int> word =
          word_str.empty() ? std::vector<int>{} : ce::parse_word(word_str);
      ce::require(target_idx >= 1 && target_idx <= static_cast<int>(b0.size()),
                  "bad_direction", "--target is 1-based over the mutable block");
      ce::FPolyResult r = ce::f_polynomial(b0, word, target_idx - 1);
      Json g = Json::array();
      for (long long v : r.g) g.push_back(v);
      emit(Json{{"F", ce::laurent_to_json(r.f)}, {"g", g}}, out_path);
    } else if (trop_mut->parsed()) {
      ce::TropPoint pt = ce::trop_point_from_json(ce::read_json_file(point_path));
      const char* want = pt.type == ce::TropType::A ? "a"
                         : pt.type == ce::TropType::X ? "x"
                                                      : "d";
      ce::require(type_str == want, "shape_mismatch", "--type disagrees with the point file");
      ce::Seed s = ce::seed_from_json(ce::read_json_file(in_path));
      for (int k : ce::parse_word(word_str)) {
        pt = ce::trop_mutate(pt, k, s.eps);
        s = ce::mutate_matrix(s, k);
      }
      emit(ce::trop_point_to_json(pt), out_path);
    } else if (poly_snake->parsed()) {
      ce::Triangulation t = load_chart(n, tri_path);
      std::vector<int> ends = ce::parse_word(arc_str);
      ce::require(ends.size() == 2, "bad_arc", "--arc takes two vertices");
      ce::Chord c = ce::make_chord(t.n, ends[0], ends[1]);
      ce::SnakeGraph g = ce::snake_graph(t, c);
      Json edges = Json::array();
      for (const ce::SnakeEdge& e : g.edges)
        edges.push_back(Json{{"a", e.a + 1},
                             {"b", e.b + 1},
                             {"label", e.label + 1},
                             {"glued", e.glued}});
      Json crossed = Json::array();
      for (int sslot : g.crossed) crossed.push_back(sslot + 1);
      ce::IntVec mg = ce::msw_g_vector(t, c);
      Json gj = Json::array();
      for (long long v : mg) gj.push_back(v);
      emit(Json{{"vertices", g.nv},
                {"edges", edges},
                {"crossed_slots", crossed},
                {"matching_count", ce::perfect_matchings(g).size()},
                {"g", gj}},
           out_path);
    } else if (poly_census->parsed()) {
      emit(Json{{"n", n}, {"count", ce::all_triangulations(n).size()}}, out_path);
    } else if (poly_mat->parsed()) {
      ce::Triangulation t = load_chart(n, tri_path);
      auto mat_json = [](const ce::IntMat& m) {
        Json rows = Json::array();
        for (const auto& r : m) {
          Json row = Json::array();
          for (long long v : r) row.push_back(v);
          rows.push_back(row);
        }
        return rows;
      };
      emit(Json{{"triangulation", ce::triangulation_to_json(t)},
                {"b", mat_json(ce::b_matrix(t))},
                {"lambda", mat_json(ce::lambda_matrix(t))}},
           out_path);
    } else if (dual_ia->parsed()) {
      ce::Triangulation t = load_chart(n, tri_path);
      ce::MarkedArcSet l = load_arcs(lam_path, t.n);
      if (quantum) {
        ce::QTElem e = ce::ia_q(l, t);
        emit(Json{{"coeff_ring", "Z[q,q^-1]"}, {"terms", ce::qtelem_terms_to_json(e)}},
             out_path);
      } else {
        emit(ce::sfrat_to_json(ce::ia_classical(l, t)), out_path);
      }
    } else if (dual_id->parsed()) {
      ce::Triangulation t = load_chart(n, tri_path);
      ce::MarkedArcSet l = load_arcs(lam_path, t.n);
      ce::MarkedArcSet lm = load_arcs(mirror_path, t.n);
      ce::DoubleCanonicalForm f =
          quantum ? ce::id_q(l, lm, t) : ce::id_classical(l, lm, t);
      Json out = ce::dcf_to_json(f);
      if (quantum) out["coeff_ring"] = "Z[q,q^-1]";
      if (out["x_integral"].get<bool>()) out["value"] = ce::sfrat_to_json(ce::dcf_at_one(f));
      emit(out, out_path);
    } else if (q_mutate->parsed()) {
      ce::CompatiblePair p = ce::pair_from_json(ce::read_json_file(pair_path));
      ce::QuantumSeedState st = ce::initial_quantum_state(p);
      for (int k : ce::parse_word(word_str)) st = ce::quantum_mutate_seed(st, k);
      Json vars = Json::array();
      for (const ce::QTElem& v : st.vars) vars.push_back(ce::qtelem_terms_to_json(v));
      emit(Json{{"pair", ce::pair_to_json(st.pair)}, {"vars", vars}}, out_path);
    } else if (q_fpoly->parsed()) {
      ce::Seed s = ce::seed_from_json(ce::read_json_file(in_path));
      ce::IntMat b0 = mutable_exchange(s);
      std::vector<int> word =
          word_str.empty() ? std::vector<int>{} : ce::parse_word(word_str);
      ce::require(target_idx >= 1 && target_idx <= static_cast<int>(b0.size()),
                  "bad_direction", "--target is 1-based over the mutable block");
      ce::QFPolyResult r = ce::quantum_f_polynomial(b0, word, target_idx - 1);
      Json g = Json::array();
      for (long long v : r.g) g.push_back(v);
      emit(Json{{"F", ce::qtelem_terms_to_json(r.f)},
                {"g", g},
                {"omega_shift", r.omega_shift}},
           out_path);
    } else if (verify_cmd->parsed()) {
      return run_verify(target, level_str, seed, trials);
    }
  } catch (const ce::Error& e) {
    Json err{{"error", e.code()}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", "internal"}, {"detail", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 0;
}
