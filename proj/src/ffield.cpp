#include "newtonpoly/ffield.hpp"

#include <algorithm>
#include <random>

namespace newtonpoly {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

void require_same_field(const FqPoly& a, const FqPoly& b) {
  if (!(*a.field() == *b.field())) throw Error(ErrorCode::InvalidArgument, "polynomials over different fields");
}

}  // namespace

// ---------------------------------------------------------------- FpPoly

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coefficients) : p_(p), coeffs_(std::move(coefficients)) {
  if (p < 2 || p > kMaxFieldPrime) {
    throw Error(ErrorCode::PrimeTooLarge, "field characteristic " + std::to_string(p) + " out of range");
  }
  for (std::uint64_t& c : coeffs_) c %= p_;
  trim();
}

FpPoly FpPoly::from_rational(const RationalPoly& f, Prime p) {
  if (p.value() > kMaxFieldPrime) {
    throw Error(ErrorCode::PrimeTooLarge, std::to_string(p.value()) + " exceeds 2^31");
  }
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(f.coefficients().size());
  for (const Rational& c : f.coefficients()) coeffs.push_back(reduce_mod_p(c, p));
  return FpPoly(p.value(), std::move(coeffs));
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::scaled(std::uint64_t c) const {
  std::vector<std::uint64_t> out(coeffs_);
  for (std::uint64_t& v : out) v = v * (c % p_) % p_;
  return FpPoly(p_, std::move(out));
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(leading(), p_));
}

FpPoly FpPoly::derivative() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * (i % p_) % p_);
  return FpPoly(p_, std::move(out));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(a.coefficient(i), b.coefficient(i), a.p_);
  return FpPoly(a.p_, std::move(out));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(a.coefficient(i), b.coefficient(i), a.p_);
  return FpPoly(a.p_, std::move(out));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = (out[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.p_;
    }
  }
  return FpPoly(a.p_, std::move(out));
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(), b.coeffs_.rend());
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (degree() < divisor.degree()) return {FpPoly(p_), *this};
  const std::uint64_t lead_inv = inv_mod(divisor.leading(), p_);
  std::vector<std::uint64_t> rem(coeffs_);
  const long dd = divisor.degree();
  std::vector<std::uint64_t> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (long i = degree(); i >= dd; --i) {
    const std::uint64_t c = rem[static_cast<std::size_t>(i)] * lead_inv % p_;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (long j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dd + j)];
      slot = sub_mod(slot, c * divisor.coeffs_[static_cast<std::size_t>(j)] % p_, p_);
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {FpPoly(p_, std::move(quot)), FpPoly(p_, std::move(rem))};
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  if (new_r == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_irreducible(const FpPoly& a) {
  if (a.degree() < 1) return false;
  FqPoly lifted = FqPoly::from_fp(FiniteField::prime_field(a.modulus()), a);
  if (!is_squarefree(lifted)) return false;
  DegreeProfile profile = distinct_degree_profile(lifted);
  return profile.entries.size() == 1 && profile.entries[0].second == 1;
}

// ----------------------------------------------------------- FiniteField

FiniteField::FiniteField(const FpPoly& modulus) : modulus_(modulus.monic()) {
  if (modulus_.degree() < 1 || !is_irreducible(modulus_)) {
    throw Error(ErrorCode::PhiNotIrreducibleModP, "field modulus is not irreducible");
  }
}

std::shared_ptr<const FiniteField> FiniteField::prime_field(std::uint64_t p) {
  return std::shared_ptr<const FiniteField>(new FiniteField(FpPoly::x(p), Unchecked{}));
}

std::shared_ptr<const FiniteField> FiniteField::extension(const FpPoly& modulus) {
  if (modulus.degree() == 1) return std::shared_ptr<const FiniteField>(new FiniteField(modulus.monic(), Unchecked{}));
  return std::make_shared<const FiniteField>(modulus);
}

Integer FiniteField::order() const {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(characteristic()), static_cast<unsigned long>(degree()));
  return q;
}

FpPoly FiniteField::inv(const FpPoly& a) const {
  // Extended Euclid on (a, modulus).
  FpPoly r0 = modulus_, r1 = reduce(a);
  if (r1.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  FpPoly s0 = zero(), s1 = one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    FpPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant.
  return reduce(s0.scaled(inv_mod(r0.leading(), characteristic())));
}

FpPoly FiniteField::pow(FpPoly a, Integer e) const {
  FpPoly result = one();
  a = reduce(a);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FpPoly FiniteField::pth_root(const FpPoly& a) const {
  // a^(1/p) = a^(p^(k-1)) in F_{p^k}.
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(characteristic()), static_cast<unsigned long>(degree() - 1));
  return pow(a, e);
}

// ---------------------------------------------------------------- FqPoly

FqPoly::FqPoly(FieldRef field, std::vector<FpPoly> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (FpPoly& c : coeffs_) c = field_->reduce(c);
  trim();
}

FqPoly FqPoly::from_fp(FieldRef field, const FpPoly& a) {
  std::vector<FpPoly> coeffs;
  for (std::uint64_t c : a.coefficients()) coeffs.push_back(field->element(c));
  return FqPoly(std::move(field), std::move(coeffs));
}

FqPoly FqPoly::monomial(FieldRef field, const FpPoly& c, std::size_t power) {
  std::vector<FpPoly> coeffs(power + 1, field->zero());
  coeffs[power] = c;
  return FqPoly(std::move(field), std::move(coeffs));
}

void FqPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const FpPoly& FqPoly::coefficient(std::size_t i) const {
  static thread_local FpPoly zero;
  if (i < coeffs_.size()) return coeffs_[i];
  zero = field_->zero();
  return zero;
}

const FpPoly& FqPoly::leading() const {
  if (coeffs_.empty()) return coefficient(0);
  return coeffs_.back();
}

FqPoly FqPoly::scaled(const FpPoly& c) const {
  std::vector<FpPoly> out;
  out.reserve(coeffs_.size());
  for (const FpPoly& v : coeffs_) out.push_back(field_->mul(v, c));
  return FqPoly(field_, std::move(out));
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

FqPoly FqPoly::derivative() const {
  std::vector<FpPoly> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i].scaled(i % field_->characteristic()));
  return FqPoly(field_, std::move(out));
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  std::vector<FpPoly> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return FqPoly(a.field_, std::move(out));
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  std::vector<FpPoly> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) - b.coefficient(i);
  return FqPoly(a.field_, std::move(out));
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
  // Accumulate unreduced products, reduce once per slot.
  std::vector<FpPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return FqPoly(a.field_, std::move(out));
}

bool operator<(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(), b.coeffs_.rend());
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& divisor) const {
  require_same_field(*this, divisor);
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (degree() < divisor.degree()) return {FqPoly(field_), *this};
  const FpPoly lead_inv = field_->inv(divisor.leading());
  std::vector<FpPoly> rem(coeffs_);
  const long dd = divisor.degree();
  std::vector<FpPoly> quot(static_cast<std::size_t>(degree() - dd + 1), field_->zero());
  for (long i = degree(); i >= dd; --i) {
    const FpPoly c = field_->mul(rem[static_cast<std::size_t>(i)], lead_inv);
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (long j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - dd + j)];
      slot = field_->sub(slot, field_->mul(c, divisor.coeffs_[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {FqPoly(field_, std::move(quot)), FqPoly(field_, std::move(rem))};
}

// ------------------------------------------------------------ algorithms

FqPoly gcd_fq(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool is_squarefree(const FqPoly& a) {
  if (a.degree() < 1) return !a.is_zero();
  const FqPoly da = a.derivative();
  if (da.is_zero()) return false;
  return gcd_fq(a, da).degree() == 0;
}

FqPoly powmod(const FqPoly& base, const Integer& e, const FqPoly& m) {
  FqPoly result = FqPoly::from_fp(m.field(), FpPoly::constant(m.field()->characteristic(), 1)) % m;
  FqPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

FqPoly frobenius_power(const FqPoly& m, unsigned h) {
  const FieldRef& field = m.field();
  FqPoly y = FqPoly::monomial(field, field->one(), 1) % m;
  const Integer q = field->order();
  for (unsigned i = 0; i < h; ++i) y = powmod(y, q, m);
  return y;
}

namespace {

// a with a' = 0: a(Y) = b(Y^p), return b^(1/p) coefficientwise.
FqPoly pth_root_poly(const FqPoly& a) {
  const std::uint64_t p = a.field()->characteristic();
  std::vector<FpPoly> out;
  for (std::size_t i = 0; i < a.coefficients().size(); i += p) out.push_back(a.field()->pth_root(a.coefficient(i)));
  return FqPoly(a.field(), std::move(out));
}

void squarefree_into(const FqPoly& a, unsigned scale, std::vector<std::pair<FqPoly, unsigned>>& out) {
  if (a.degree() < 1) return;
  const std::uint64_t p = a.field()->characteristic();
  const FqPoly da = a.derivative();
  if (da.is_zero()) {
    squarefree_into(pth_root_poly(a), scale * static_cast<unsigned>(p), out);
    return;
  }
  FqPoly c = gcd_fq(a, da);
  FqPoly w = a.monic() / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    FqPoly y = gcd_fq(w, c);
    FqPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_into(pth_root_poly(c.monic()), scale * static_cast<unsigned>(p), out);
}

}  // namespace

std::vector<std::pair<FqPoly, unsigned>> squarefree_decomposition(const FqPoly& a) {
  std::vector<std::pair<FqPoly, unsigned>> out;
  squarefree_into(a.monic(), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  return out;
}

unsigned DegreeProfile::total_degree() const {
  unsigned total = 0;
  for (auto [h, count] : entries) total += h * count;
  return total;
}

unsigned DegreeProfile::factor_count() const {
  unsigned total = 0;
  for (auto [h, count] : entries) total += count;
  return total;
}

std::vector<std::pair<unsigned, FqPoly>> distinct_degree_factorization(const FqPoly& a) {
  if (!is_squarefree(a)) throw Error(ErrorCode::NotSquarefree, "distinct-degree factorisation needs a squarefree input");
  std::vector<std::pair<unsigned, FqPoly>> out;
  const FieldRef& field = a.field();
  const FqPoly y = FqPoly::monomial(field, field->one(), 1);
  const Integer q = field->order();
  FqPoly rest = a.monic();
  FqPoly w = y % rest;
  unsigned h = 1;
  while (rest.degree() >= 2 * static_cast<long>(h)) {
    w = powmod(w, q, rest);
    FqPoly g = gcd_fq(rest, w - y);
    if (g.degree() > 0) {
      out.emplace_back(h, g);
      rest = rest / g;
      w = w % rest;
    }
    ++h;
  }
  if (rest.degree() > 0) out.emplace_back(static_cast<unsigned>(rest.degree()), rest);
  return out;
}

DegreeProfile distinct_degree_profile(const FqPoly& a) {
  DegreeProfile profile;
  for (const auto& [h, part] : distinct_degree_factorization(a)) {
    profile.entries.emplace_back(h, static_cast<unsigned>(part.degree()) / h);
  }
  return profile;
}

std::vector<FqPoly> equal_degree_split(const FqPoly& a, unsigned h) {
  const FieldRef& field = a.field();
  if (a.degree() <= static_cast<long>(h)) return {a.monic()};
  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(a.degree()));
  const std::uint64_t p = field->characteristic();
  const long k = field->degree();
  Integer exponent = 0;
  if (p != 2) {
    Integer qh;
    mpz_pow_ui(qh.get_mpz_t(), field->order().get_mpz_t(), h);
    exponent = (qh - 1) / 2;
  }
  const FqPoly one = FqPoly::from_fp(field, field->one());
  for (;;) {
    std::vector<FpPoly> coeffs;
    for (long i = 0; i < a.degree(); ++i) {
      std::vector<std::uint64_t> element;
      for (long j = 0; j < k; ++j) element.push_back(rng() % p);
      coeffs.emplace_back(p, std::move(element));
    }
    FqPoly r(field, std::move(coeffs));
    if (r.degree() < 1) continue;
    FqPoly candidate(field);
    if (p == 2) {
      // Absolute trace to F_2: r + r^2 + ... + r^(2^(k h - 1)).
      FqPoly t = r % a;
      candidate = t;
      for (long i = 1; i < k * static_cast<long>(h); ++i) {
        t = (t * t) % a;
        candidate = candidate + t;
      }
    } else {
      candidate = powmod(r, exponent, a) - one;
    }
    if (candidate.is_zero()) continue;
    FqPoly g = gcd_fq(a, candidate);
    if (g.degree() > 0 && g.degree() < a.degree()) {
      std::vector<FqPoly> left = equal_degree_split(g, h);
      std::vector<FqPoly> right = equal_degree_split(a / g, h);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<std::pair<FqPoly, unsigned>> factor(const FqPoly& a) {
  std::vector<std::pair<FqPoly, unsigned>> out;
  for (const auto& [part, multiplicity] : squarefree_decomposition(a)) {
    for (const auto& [h, product] : distinct_degree_factorization(part)) {
      for (FqPoly& irreducible : equal_degree_split(product, h)) out.emplace_back(std::move(irreducible), multiplicity);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.first < r.first) return true;
    if (r.first < l.first) return false;
    return l.second < r.second;
  });
  return out;
}

Integer count_monic_irreducibles(std::uint64_t p, unsigned h) {
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  auto mobius = [](unsigned n) {
    int mu = 1;
    for (unsigned q = 2; q * q <= n; ++q) {
      if (n % q) continue;
      n /= q;
      if (n % q == 0) return 0;
      mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
  };
  Integer total = 0;
  for (unsigned d = 1; d <= h; ++d) {
    if (h % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(p), h / d);
    total += mu * term;
  }
  return total / h;
}

}  // namespace newtonpoly
