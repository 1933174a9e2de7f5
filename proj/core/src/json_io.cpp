#include "ce/json_io.hpp"

#include <fstream>
#include <limits>

#include "ce/error.hpp"

namespace ce {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  require(it != j.end(), "bad_json", std::string("missing field \"") + key + "\"");
  return *it;
}

long long to_int(const Json& j, const char* what) {
  require(j.is_number_integer(), "bad_json", std::string(what) + " must be an integer");
  return j.get<long long>();
}

IntVec int_vec(const Json& j, const char* what) {
  require(j.is_array(), "bad_json", std::string(what) + " must be an array");
  IntVec out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(to_int(x, what));
  return out;
}

IntMat int_matrix(const Json& j, const char* what) {
  require(j.is_array(), "bad_json", std::string(what) + " must be an array of rows");
  IntMat out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(int_vec(row, what));
  return out;
}

Json int_vec_json(const IntVec& v) {
  Json out = Json::array();
  for (long long x : v) out.push_back(x);
  return out;
}

Json int_mat_json(const IntMat& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(int_vec_json(row));
  return out;
}

Rational rational_field(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  require(j.is_string(), "bad_json", std::string(what) + " must be a rational string");
  return parse_rational(j.get<std::string>());
}

Json coef_json(const Int& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return Json(c.convert_to<long long>());
  return Json(c.str());
}

Int coef_from(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  require(j.is_string(), "bad_json", "integer coefficient must be a number or string");
  return Int(j.get<std::string>());
}

Exp exp_from(const Json& j) {
  require(j.is_array(), "bad_json", "exponent must be an array");
  Exp e;
  e.reserve(j.size());
  for (const auto& x : j) e.push_back(static_cast<int>(to_int(x, "exponent entry")));
  return e;
}

} // namespace

Json seed_to_json(const Seed& s) {
  Json frozen = Json::array();
  for (int i = 0; i < s.m; ++i)
    if (s.is_frozen(i)) frozen.push_back(i + 1);
  return Json{{"m", s.m}, {"frozen", frozen}, {"eps", int_mat_json(s.eps)}};
}

Seed seed_from_json(const Json& j) {
  int m = static_cast<int>(to_int(field(j, "m"), "m"));
  std::vector<int> frozen;
  for (const auto& x : field(j, "frozen")) {
    int i = static_cast<int>(to_int(x, "frozen index"));
    require(i >= 1 && i <= m, "bad_json", "frozen index out of range");
    frozen.push_back(i - 1);
  }
  return Seed::make(m, frozen, int_matrix(field(j, "eps"), "eps"));
}

Json pair_to_json(const CompatiblePair& p) {
  return Json{{"m", p.m()},
              {"lambda", int_mat_json(p.lambda)},
              {"b", int_mat_json(p.b)},
              {"d", int_vec_json(p.d)}};
}

CompatiblePair pair_from_json(const Json& j) {
  return CompatiblePair::make(int_matrix(field(j, "lambda"), "lambda"),
                              int_matrix(field(j, "b"), "b"), int_vec(field(j, "d"), "d"));
}

Json triangulation_to_json(const Triangulation& t) {
  Json diags = Json::array();
  for (const Chord& c : t.sorted_diagonals()) diags.push_back(Json::array({c.u + 1, c.v + 1}));
  return Json{{"n", t.n}, {"diagonals", diags}};
}

Triangulation triangulation_from_json(const Json& j) {
  int n = static_cast<int>(to_int(field(j, "n"), "n"));
  std::vector<Chord> diags;
  for (const auto& d : field(j, "diagonals")) {
    require(d.is_array() && d.size() == 2, "bad_json", "diagonal must be a vertex pair");
    int u = static_cast<int>(to_int(d[0], "vertex")) - 1;
    int v = static_cast<int>(to_int(d[1], "vertex")) - 1;
    require(u >= 0 && u < n && v >= 0 && v < n, "bad_json", "diagonal vertex out of range");
    diags.push_back(make_chord(n, u, v));
  }
  return Triangulation::make(n, std::move(diags));
}

Json lamination_to_json(const DiskLamination& l) {
  Json curves = Json::array();
  for (const SegmentCurve& c : l.curves)
    curves.push_back(Json{{"segments", Json::array({c.s1 + 1, c.s2 + 1})},
                          {"weight", rational_str(c.w)}});
  return Json{{"n", l.n}, {"curves", curves}};
}

DiskLamination lamination_from_json(const Json& j) {
  int n = static_cast<int>(to_int(field(j, "n"), "n"));
  std::vector<SegmentCurve> curves;
  for (const auto& c : field(j, "curves")) {
    const Json& seg = field(c, "segments");
    require(seg.is_array() && seg.size() == 2, "bad_json", "segments must be a pair");
    SegmentCurve sc;
    sc.s1 = static_cast<int>(to_int(seg[0], "segment")) - 1;
    sc.s2 = static_cast<int>(to_int(seg[1], "segment")) - 1;
    require(sc.s1 >= 0 && sc.s1 < n && sc.s2 >= 0 && sc.s2 < n, "bad_json",
            "segment index out of range");
    sc.w = rational_field(field(c, "weight"), "weight");
    curves.push_back(sc);
  }
  return DiskLamination::make(n, std::move(curves));
}

Json trop_point_to_json(const TropPoint& p) {
  const char* type = p.type == TropType::A ? "a" : p.type == TropType::X ? "x" : "d";
  Json v = Json::array();
  for (const Rational& r : p.v) v.push_back(rational_str(r));
  return Json{{"type", type}, {"v", v}};
}

TropPoint trop_point_from_json(const Json& j) {
  TropPoint out;
  std::string type = field(j, "type").get<std::string>();
  if (type == "a")
    out.type = TropType::A;
  else if (type == "x")
    out.type = TropType::X;
  else if (type == "d")
    out.type = TropType::D;
  else
    fail("bad_json", "point type must be a, x or d");
  for (const auto& r : field(j, "v")) out.v.push_back(rational_field(r, "coordinate"));
  return out;
}

Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exp = Json::array();
    for (int x : e) exp.push_back(x);
    terms.push_back(Json{{"exp", exp}, {"coef", rational_str(c)}});
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  int nvars = static_cast<int>(to_int(field(j, "nvars"), "nvars"));
  LaurentPoly out(nvars);
  for (const auto& t : field(j, "terms")) {
    Exp e = exp_from(field(t, "exp"));
    require(static_cast<int>(e.size()) == nvars, "bad_json", "exponent arity mismatch");
    out.add_term(e, rational_field(field(t, "coef"), "coef"));
  }
  return out;
}

Json sfrat_to_json(const SFRat& r) {
  return Json{{"num", laurent_to_json(r.num())}, {"den", laurent_to_json(r.den())}};
}

SFRat sfrat_from_json(const Json& j) {
  return SFRat(laurent_from_json(field(j, "num")), laurent_from_json(field(j, "den")));
}

Json omega_to_json(const OmegaScalar& c) {
  Json pairs = Json::array();
  for (const auto& [e, coef] : c.coeffs()) pairs.push_back(Json::array({e, coef_json(coef)}));
  return Json{{"omega", pairs}};
}

OmegaScalar omega_from_json(const Json& j) {
  OmegaScalar out;
  for (const auto& p : field(j, "omega")) {
    require(p.is_array() && p.size() == 2, "bad_json", "omega term must be a pair");
    out.add(static_cast<int>(to_int(p[0], "omega exponent")), coef_from(p[1]));
  }
  return out;
}

Json qtelem_terms_to_json(const QTElem& e) {
  Json terms = Json::array();
  for (const auto& [v, c] : e.terms())
    terms.push_back(Json{{"exp", int_vec_json(v)}, {"coef", omega_to_json(c)}});
  return terms;
}

Json dcf_to_json(const DoubleCanonicalForm& f) {
  Json den = Json::array(), num = Json::array();
  for (const auto& d : f.den_factors) den.push_back(qtelem_terms_to_json(d));
  for (const auto& g : f.num_factors) num.push_back(qtelem_terms_to_json(g));
  bool integral = true;
  for (long long x : f.x_exp2)
    if (x % 2 != 0) integral = false;
  Json out{{"omega_exp", f.omega_exp}, {"den_factors", den},    {"num_factors", num},
           {"b_exp", int_vec_json(f.b_exp)}, {"x_exp2", int_vec_json(f.x_exp2)},
           {"mono", int_vec_json(f.mono)},   {"x_integral", integral}};
  if (!integral) out["diagnosis"] = "a0_parity";
  return out;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    std::string tok = s.substr(pos, next - pos);
    require(!tok.empty(), "bad_word", "empty entry in mutation word");
    size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail("bad_word", "mutation word entries must be integers");
    }
    require(used == tok.size(), "bad_word", "mutation word entries must be integers");
    require(k >= 1, "bad_word", "mutation word entries are 1-based");
    out.push_back(k - 1);
    pos = next + 1;
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "bad_json", "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("bad_json", std::string("parse failure in ") + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  require(out.good(), "bad_json", "cannot write " + path);
  out << j.dump(2) << "\n";
}

} // namespace ce
