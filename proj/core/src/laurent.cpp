#include "skein/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

void normalize(std::vector<ALaurent::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ALaurent::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms = std::move(out);
}

template <class Op>
std::vector<ALaurent::Term> merge(const std::vector<ALaurent::Term>& a,
                                  const std::vector<ALaurent::Term>& b, Op op) {
  std::vector<ALaurent::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, op(BigInt(0), j->second));
      ++j;
    } else {
      BigInt c = op(i->second, j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ALaurent::ALaurent(long long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

ALaurent ALaurent::monomial(int exponent, BigInt c) {
  ALaurent r;
  if (c != 0) r.terms_.emplace_back(exponent, std::move(c));
  return r;
}

ALaurent ALaurent::from_terms(std::vector<Term> terms) {
  ALaurent r;
  normalize(terms);
  r.terms_ = std::move(terms);
  return r;
}

BigInt ALaurent::coeff(int exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int ALaurent::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero");
  return terms_.front().first;
}

int ALaurent::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero");
  return terms_.back().first;
}

bool ALaurent::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second > 0; });
}

BigInt ALaurent::at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

ALaurent ALaurent::bar() const {
  ALaurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

ALaurent ALaurent::rescale_exponents(int num, int den) const {
  if (den == 0) throw std::invalid_argument("rescale_exponents: zero denominator");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    long long scaled = static_cast<long long>(t.first) * num;
    if (scaled % den != 0)
      throw std::domain_error("rescale_exponents: exponent " +
                              std::to_string(t.first) + " not divisible");
    out.emplace_back(static_cast<int>(scaled / den), t.second);
  }
  return from_terms(std::move(out));
}

std::optional<ALaurent> ALaurent::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = terms_.front();
  if (c != 1 && c != -1) return std::nullopt;
  return monomial(-e, c);
}

ALaurent& ALaurent::operator+=(const ALaurent& o) {
  terms_ = merge(terms_, o.terms_, [](const BigInt& a, const BigInt& b) { return a + b; });
  return *this;
}

ALaurent& ALaurent::operator-=(const ALaurent& o) {
  terms_ = merge(terms_, o.terms_, [](const BigInt& a, const BigInt& b) { return a - b; });
  return *this;
}

ALaurent operator*(const ALaurent& a, const ALaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[ea + eb - lo] += ca * cb;
  ALaurent r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) r.terms_.emplace_back(static_cast<int>(i) + lo, std::move(dense[i]));
  return r;
}

ALaurent& ALaurent::operator*=(const ALaurent& o) { return *this = *this * o; }

ALaurent ALaurent::operator-() const {
  ALaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

std::string ALaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "A";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace skein
