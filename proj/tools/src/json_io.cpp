#include "skein_cli/json_io.hpp"

#include <limits>
#include <optional>

namespace skein::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SchemaError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

void expect_keys(const Json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail("expected an object");
  if (j.size() != keys.size()) fail("unexpected keys in " + j.dump());
  for (const char* k : keys)
    if (!j.contains(k)) fail(std::string("missing key \"") + k + "\" in " + j.dump());
}

std::int64_t int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::pair<std::int64_t, std::int64_t> int_pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(std::string(what) + " must be a two-element array");
  return {int_from_json(j[0], what), int_from_json(j[1], what)};
}

Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) return big_to_json(numerator(r));
  return r.str();
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (!j.is_string()) fail("coefficient must be an integer or a decimal string, got " + j.dump());
  const auto& s = j.get_ref<const std::string&>();
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size() || (s[i] == '0' && s.size() > i + 1)) fail("malformed integer string \"" + s + "\"");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') fail("malformed integer string \"" + s + "\"");
  BigInt v(s);
  // Numbers that fit in int64 must be written as JSON numbers.
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    fail("integer \"" + s + "\" must be written as a number");
  return v;
}

Json to_json(BPoint p) { return Json::array({p.m, p.n}); }
Json to_json(LiftVec v) { return Json::array({v.x, v.y}); }
Json to_json(const Matrix2& M) { return Json::array({Json::array({M.a, M.b}), Json::array({M.c, M.d})}); }
Json to_json(const RationalPoint& q) { return Json::array({rational_to_json(q.x), rational_to_json(q.y)}); }

Json to_json(const CoeffPoly& p) {
  Json out = Json::array();
  const auto names = variable_names(p.ring());
  for (const auto& [e, c] : p.terms()) {
    Json m = Json::object();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (e[i] != 0) m[std::string(names[i])] = e[i];
    for (const auto& [a, k] : c.terms()) out.push_back({{"A", a}, {"m", m}, {"c", big_to_json(k)}});
  }
  return out;
}

Json to_json(const AlgebraElement& e) {
  Json terms = Json::array();
  for (const auto& [p, c] : e.terms()) terms.push_back({{"p", to_json(p)}, {"c", to_json(c)}});
  return {{"ring", ring_name(e.ring())}, {"terms", std::move(terms)}};
}

Json to_json(const RaySeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"ring", ring_name(s.ring())}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const NormalElement& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back({{"j", w.cone + 1}, {"a", w.a}, {"b", w.b}, {"name", monomial_name(w)}, {"c", to_json(c)}});
  return {{"ring", ring_name(e.ring())}, {"terms", std::move(terms)}};
}

Json to_json(const BrokenLineTrace& t) {
  Json events = Json::array();
  for (const auto& ev : t.events)
    events.push_back({{"point", to_json(ev.point)},
                      {"ray", to_json(ev.ray)},
                      {"lift", to_json(ev.lift)},
                      {"ell", ev.ell},
                      {"N", ev.N},
                      {"factor", to_json(ev.factor)}});
  return {{"charge", to_json(t.charge)},
          {"endpoint", to_json(t.endpoint)},
          {"initial_exponent", to_json(t.initial_exponent)},
          {"events", std::move(events)},
          {"final_exponent", to_json(t.final_exponent)},
          {"coefficient", to_json(t.coefficient)}};
}

Json to_json(const Report& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back({{"input", w.input}, {"computed", w.computed}, {"expected", w.expected}});
  return {{"name", r.name},
          {"params", std::move(params)},
          {"status", status_name(r.status)},
          {"checks", r.checks},
          {"failures", r.failures},
          {"witnesses", std::move(witnesses)},
          {"notes", r.notes}};
}

BPoint bpoint_from_json(const Json& j) {
  const auto [m, n] = int_pair(j, "point");
  const BPoint p{m, n};
  if (!is_canonical(p)) fail("point [" + p.to_string() + "] is not canonical");
  return p;
}

Matrix2 matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) fail("matrix must be [[a,b],[c,d]]");
  const auto [a, b] = int_pair(j[0], "matrix row");
  const auto [c, d] = int_pair(j[1], "matrix row");
  if (a * d - b * c != 1) fail("matrix must have determinant 1");
  return Matrix2::make(a, b, c, d);
}

CoeffPoly poly_from_json(Ring ring, const Json& j) {
  if (!j.is_array()) fail("polynomial must be a list of terms");
  std::vector<CoeffPoly::Term> terms;
  std::optional<std::pair<Exponents, int>> last;
  for (const auto& t : j) {
    expect_keys(t, {"A", "m", "c"});
    const std::int64_t a = int_from_json(t["A"], "A exponent");
    if (a < std::numeric_limits<int>::min() || a > std::numeric_limits<int>::max()) fail("A exponent out of range");
    const Json& m = t["m"];
    if (!m.is_object()) fail("\"m\" must be an object");
    Exponents e{};
    for (const auto& [var, pow] : m.items()) {
      const int idx = variable_index(ring, var);
      if (idx < 0) fail("unknown variable \"" + var + "\" for ring " + std::string(ring_name(ring)));
      const std::int64_t k = int_from_json(pow, "variable exponent");
      if (k <= 0 || k > std::numeric_limits<std::uint16_t>::max())
        fail("exponent of " + var + " must be a positive integer, got " + pow.dump());
      e[static_cast<std::size_t>(idx)] = static_cast<std::uint16_t>(k);
    }
    const BigInt c = big_from_json(t["c"]);
    if (c == 0) fail("zero coefficient stored");
    const std::pair<Exponents, int> key{e, static_cast<int>(a)};
    if (last && !(*last < key)) fail("terms are not in canonical order");
    last = key;
    if (!terms.empty() && terms.back().first == e)
      terms.back().second += ALaurent::monomial(static_cast<int>(a), c);
    else
      terms.emplace_back(e, ALaurent::monomial(static_cast<int>(a), c));
  }
  return CoeffPoly::from_terms(ring, std::move(terms));
}

Ring ring_from_name(std::string_view name) {
  for (Ring r : {Ring::S04, Ring::S11, Ring::Peripheral})
    if (ring_name(r) == name) return r;
  fail("unknown ring \"" + std::string(name) + "\"");
}

namespace {
Ring ring_field(const Json& j) {
  const Json& r = field(j, "ring");
  if (!r.is_string()) fail("\"ring\" must be a string");
  return ring_from_name(r.get<std::string>());
}
}  // namespace

AlgebraElement element_from_json(const Json& j) {
  expect_keys(j, {"ring", "terms"});
  const Ring ring = ring_field(j);
  const Json& terms = j["terms"];
  if (!terms.is_array()) fail("\"terms\" must be a list");
  AlgebraElement e(ring);
  std::optional<BPoint> last;
  for (const auto& t : terms) {
    expect_keys(t, {"p", "c"});
    const BPoint p = bpoint_from_json(t["p"]);
    if (last && !(*last < p)) fail("terms are not in canonical order");
    last = p;
    const CoeffPoly c = poly_from_json(ring, t["c"]);
    if (c.is_zero()) fail("zero coefficient stored at [" + p.to_string() + "]");
    e.add(p, c);
  }
  return e;
}

RaySeries series_from_json(const Json& j) {
  expect_keys(j, {"ring", "order", "coeffs"});
  const Ring ring = ring_field(j);
  const Json& coeffs = j["coeffs"];
  if (!coeffs.is_array() || coeffs.empty()) fail("\"coeffs\" must be a non-empty list");
  if (int_from_json(j["order"], "order") != static_cast<std::int64_t>(coeffs.size()) - 1)
    fail("\"order\" does not match the number of coefficients");
  std::vector<CoeffPoly> cs;
  for (const auto& c : coeffs) cs.push_back(poly_from_json(ring, c));
  try {
    return RaySeries(ring, std::move(cs));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

NormalElement normal_from_json(const Json& j) {
  expect_keys(j, {"ring", "terms"});
  const Ring ring = ring_field(j);
  const Json& terms = j["terms"];
  if (!terms.is_array()) fail("\"terms\" must be a list");
  NormalElement e(ring);
  std::optional<NormalMonomial> last;
  for (const auto& t : terms) {
    expect_keys(t, {"j", "a", "b", "name", "c"});
    const std::int64_t cone = int_from_json(t["j"], "j");
    if (cone < 1 || cone > 3) fail("\"j\" must be 1, 2 or 3");
    const NormalMonomial w{static_cast<int>(cone - 1), int_from_json(t["a"], "a"), int_from_json(t["b"], "b")};
    if (w.a < 0 || w.b < 0) fail("negative monomial exponent");
    if (!t["name"].is_string() || t["name"].get<std::string>() != monomial_name(w))
      fail("monomial name does not match its exponents");
    if (last && !(*last < w)) fail("terms are not in canonical order");
    last = w;
    const CoeffPoly c = poly_from_json(ring, t["c"]);
    if (c.is_zero()) fail("zero coefficient stored");
    try {
      e.add(w, c);
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
  }
  return e;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace skein::io
