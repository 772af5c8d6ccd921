#include "skein/coeff_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

constexpr std::array<std::string_view, 4> kS04Names{"R10", "R01", "R11", "y"};
constexpr std::array<std::string_view, 1> kS11Names{"z"};
constexpr std::array<std::string_view, 4> kPeriphNames{"a1", "a2", "a3", "a4"};

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

std::vector<CoeffPoly::Term> collect(std::map<Exponents, ALaurent>&& acc) {
  std::vector<CoeffPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.emplace_back(e, std::move(c));
  return out;
}

template <class Op>
std::vector<CoeffPoly::Term> merge(const std::vector<CoeffPoly::Term>& a,
                                   const std::vector<CoeffPoly::Term>& b, Op op) {
  std::vector<CoeffPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, op(ALaurent(), j->second));
      ++j;
    } else {
      ALaurent c = op(i->second, j->second);
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t variable_count(Ring ring) { return variable_names(ring).size(); }

std::span<const std::string_view> variable_names(Ring ring) {
  switch (ring) {
    case Ring::S04: return kS04Names;
    case Ring::S11: return kS11Names;
    case Ring::Peripheral: return kPeriphNames;
  }
  throw std::logic_error("unknown ring");
}

std::string_view ring_name(Ring ring) {
  switch (ring) {
    case Ring::S04: return "s04";
    case Ring::S11: return "s11";
    case Ring::Peripheral: return "peripheral";
  }
  throw std::logic_error("unknown ring");
}

int variable_index(Ring ring, std::string_view name) {
  auto names = variable_names(ring);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

CoeffPoly::CoeffPoly(Ring ring, const ALaurent& constant) : ring_(ring) {
  if (!constant.is_zero()) terms_.emplace_back(Exponents{}, constant);
}

CoeffPoly CoeffPoly::variable(Ring ring, int index, unsigned power) {
  if (index < 0 || static_cast<std::size_t>(index) >= variable_count(ring))
    throw std::out_of_range("variable index out of range for ring");
  Exponents e{};
  e[static_cast<std::size_t>(index)] = static_cast<std::uint16_t>(power);
  return monomial(ring, e, ALaurent(1));
}

CoeffPoly CoeffPoly::monomial(Ring ring, const Exponents& e, const ALaurent& c) {
  CoeffPoly p(ring);
  if (!c.is_zero()) p.terms_.emplace_back(e, c);
  return p;
}

CoeffPoly CoeffPoly::from_terms(Ring ring, std::vector<Term> terms) {
  std::map<Exponents, ALaurent> acc;
  const std::size_t nv = variable_count(ring);
  for (auto& [e, c] : terms) {
    for (std::size_t i = nv; i < kMaxVars; ++i)
      if (e[i] != 0) throw std::invalid_argument("exponent on a variable outside the ring");
    acc[e] += c;
  }
  CoeffPoly p(ring);
  p.terms_ = collect(std::move(acc));
  return p;
}

ALaurent CoeffPoly::coeff(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& k) { return t.first < k; });
  if (it != terms_.end() && it->first == e) return it->second;
  return {};
}

unsigned CoeffPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool CoeffPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second.nonnegative(); });
}

CoeffPoly CoeffPoly::bar() const {
  return map_coefficients([](const ALaurent& c) { return c.bar(); });
}

CoeffPoly CoeffPoly::at_A_one() const {
  return map_coefficients([](const ALaurent& c) { return ALaurent::monomial(0, c.at_one()); });
}

CoeffPoly CoeffPoly::map_coefficients(const std::function<ALaurent(const ALaurent&)>& f) const {
  CoeffPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    ALaurent v = f(c);
    if (!v.is_zero()) r.terms_.emplace_back(e, std::move(v));
  }
  return r;
}

CoeffPoly CoeffPoly::permute_variables(const std::array<int, kMaxVars>& perm) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  const std::size_t nv = variable_count(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents n{};
    for (std::size_t i = 0; i < nv; ++i) n[static_cast<std::size_t>(perm[i])] = e[i];
    out.emplace_back(n, c);
  }
  return from_terms(ring_, std::move(out));
}

CoeffPoly CoeffPoly::substitute(Ring target, std::span<const CoeffPoly> images) const {
  const std::size_t nv = variable_count(ring_);
  if (images.size() != nv) throw std::invalid_argument("substitute: wrong number of images");
  for (const auto& im : images)
    if (im.ring() != target) throw std::invalid_argument("substitute: image ring mismatch");
  // Power tables keep repeated substitution cheap.
  std::vector<std::vector<CoeffPoly>> powers(nv);
  CoeffPoly result(target);
  for (const auto& [e, c] : terms_) {
    CoeffPoly term(target, c);
    for (std::size_t i = 0; i < nv; ++i) {
      auto& tbl = powers[i];
      if (tbl.empty()) tbl.emplace_back(target, ALaurent(1));
      while (tbl.size() <= e[i]) tbl.push_back(tbl.back() * images[i]);
      if (e[i] > 0) term *= tbl[e[i]];
    }
    result += term;
  }
  return result;
}

CoeffPoly CoeffPoly::substitute_one(int index, const CoeffPoly& image) const {
  std::vector<CoeffPoly> images;
  for (std::size_t i = 0; i < variable_count(ring_); ++i)
    images.push_back(static_cast<int>(i) == index ? image : variable(ring_, static_cast<int>(i)));
  return substitute(ring_, images);
}

void CoeffPoly::check_ring(const CoeffPoly& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("coefficient ring mismatch");
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  check_ring(o);
  terms_ = merge(terms_, o.terms_, [](const ALaurent& a, const ALaurent& b) { return a + b; });
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  check_ring(o);
  terms_ = merge(terms_, o.terms_, [](const ALaurent& a, const ALaurent& b) { return a - b; });
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  a.check_ring(b);
  CoeffPoly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.terms_.size() == 1 && a.terms_.front().first == Exponents{}) return b * a.terms_.front().second;
  if (b.terms_.size() == 1 && b.terms_.front().first == Exponents{}) return a * b.terms_.front().second;
  std::map<Exponents, ALaurent> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[add(ea, eb)] += ca * cb;
  r.terms_ = collect(std::move(acc));
  return r;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) { return *this = *this * o; }

CoeffPoly& CoeffPoly::operator*=(const ALaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

CoeffPoly CoeffPoly::pow(unsigned k) const {
  CoeffPoly r(ring_, ALaurent(1));
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  auto names = variable_names(ring_);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << "(" << c.to_string() << ")";
    } else {
      os << "(" << c.to_string() << ")*" << mono;
    }
  }
  return os.str();
}

CoeffPoly specialize_A4_to_A2(const CoeffPoly& p) {
  return p.map_coefficients([](const ALaurent& c) { return c.rescale_exponents(1, 2); });
}

CoeffPoly specialize_s04_to_s11(const CoeffPoly& p) {
  if (p.ring() != Ring::S04) throw std::invalid_argument("specialize_s04_to_s11: expects S04 ring");
  const CoeffPoly zero(Ring::S11);
  const std::array<CoeffPoly, 4> images{zero, zero, zero, CoeffPoly::variable(Ring::S11, 0)};
  return specialize_A4_to_A2(p).substitute(Ring::S11, images);
}

}  // namespace skein
