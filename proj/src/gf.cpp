/*
 * Copyright 2026 k3ord authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 */
#include "gf.hpp"

#include <algorithm>
#include <mutex>

namespace k3ord {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // this witness set is deterministic for all n < 3.3e24
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// --- dense polynomials over F_p, low-to-high coefficients ---------------

using PVec = std::vector<std::uint64_t>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PVec& a) { return static_cast<int>(a.size()) - 1; }

PVec pmul(const PVec& a, const PVec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
  }
  ptrim(r);
  return r;
}

// remainder of a modulo monic f
PVec pmod(PVec a, const PVec& f, std::uint64_t p) {
  int df = pdeg(f);
  while (pdeg(a) >= df) {
    std::uint64_t lead = a.back();
    int shift = pdeg(a) - df;
    if (lead) {
      for (int i = 0; i <= df; ++i) {
        std::uint64_t t = mulmod_u64(lead, f[i], p);
        std::uint64_t& dst = a[i + shift];
        dst = (dst + p - t) % p;
      }
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, std::uint64_t p) {
  return pmod(pmul(a, b, p), f, p);
}

PVec ppowmod(PVec base, std::uint64_t e, const PVec& f, std::uint64_t p) {
  PVec r = {1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  return powmod_u64(a, p - 2, p);
}

PVec pgcd(PVec a, PVec b, std::uint64_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // make b monic, then reduce
    std::uint64_t il = inv_mod_p(b.back(), p);
    PVec bm = b;
    for (auto& c : bm) c = mulmod_u64(c, il, p);
    PVec r = pmod(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f monic of degree n is irreducible iff it shares no factor with
// t^{p^k} - t for any k <= n/2 (every proper factor has degree <= n/2)
bool is_irreducible(const PVec& f, std::uint64_t p) {
  int n = pdeg(f);
  if (n == 1) return true;
  PVec u = {0, 1}; // t
  for (int k = 1; k <= n / 2; ++k) {
    u = ppowmod(u, p, f, p); // u = t^{p^k} mod f
    PVec d = u;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    ptrim(d);
    if (pdeg(pgcd(f, d, p)) > 0) return false;
  }
  return true;
}

// lexicographically smallest monic irreducible of degree n: candidates are
// t^n + c_{n-1} t^{n-1} + ... + c_0, tuples (c_{n-1},...,c_0) in ascending
// lexicographic order
PVec smallest_irreducible(std::uint64_t p, std::uint32_t n) {
  std::vector<std::uint64_t> digits(n, 0); // digits[0] = c_{n-1} (most significant)
  for (;;) {
    PVec f(n + 1, 0);
    f[n] = 1;
    for (std::uint32_t i = 0; i < n; ++i) f[n - 1 - i] = digits[i];
    if (is_irreducible(f, p)) return f;
    // odometer increment, last tuple position fastest
    std::int64_t pos = static_cast<std::int64_t>(n) - 1;
    while (pos >= 0) {
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) fail(Errc::internal, "no irreducible polynomial found"); // unreachable
  }
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t m) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      fs.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) fs.push_back(m);
  return fs;
}

} // namespace

struct Fq::Data {
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  std::vector<std::uint64_t> modulus;
  BigInt q;
  bool q_small = false;
  std::uint64_t q64 = 0;
  mutable std::once_flag tables_once;
  mutable std::unique_ptr<FqTables> tables;
};

Fq Fq::prime_field(std::uint64_t p) { return extension(p, 1); }

Fq Fq::extension(std::uint64_t p, std::uint32_t n) {
  if (!is_prime_u64(p)) fail(Errc::invalid_argument, "field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1 || n > 16) fail(Errc::invalid_argument, "extension degree must be in [1,16]");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->n = n;
  d->modulus = smallest_irreducible(p, n);
  d->q = boost::multiprecision::pow(BigInt(p), n);
  d->q_small = d->q <= BigInt(~0ull);
  if (d->q_small) d->q64 = static_cast<std::uint64_t>(d->q);
  return Fq(std::move(d));
}

std::uint64_t Fq::p() const { return d_->p; }
std::uint32_t Fq::degree() const { return d_->n; }
const std::vector<std::uint64_t>& Fq::modulus() const { return d_->modulus; }
const BigInt& Fq::q() const { return d_->q; }
bool Fq::q_fits_u64() const { return d_->q_small; }

std::uint64_t Fq::q_u64() const {
  if (!d_->q_small) fail(Errc::invalid_argument, "field size exceeds 64 bits");
  return d_->q64;
}

Fe Fq::zero() const { return Fe{d_->p, d_->n, std::vector<std::uint64_t>(d_->n, 0)}; }

Fe Fq::one() const {
  Fe a = zero();
  a.c[0] = 1;
  return a;
}

Fe Fq::from_int(std::int64_t v) const {
  std::int64_t m = static_cast<std::int64_t>(d_->p);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  Fe a = zero();
  a.c[0] = static_cast<std::uint64_t>(r);
  return a;
}

Fe Fq::from_residue(const BigInt& v) const {
  BigInt r = v % d_->p;
  if (r < 0) r += d_->p;
  Fe a = zero();
  a.c[0] = static_cast<std::uint64_t>(r);
  return a;
}

Fe Fq::element_at(std::uint64_t index) const {
  Fe a = zero();
  for (std::uint32_t k = 0; k < d_->n; ++k) {
    a.c[k] = index % d_->p;
    index /= d_->p;
  }
  if (index) fail(Errc::invalid_argument, "element index out of range");
  return a;
}

std::uint64_t Fq::index_of(const Fe& a) const {
  check_owner(a);
  std::uint64_t idx = 0;
  for (std::uint32_t k = d_->n; k-- > 0;) idx = idx * d_->p + a.c[k];
  return idx;
}

void Fq::check_owner(const Fe& a) const {
  if (a.p != d_->p || a.n != d_->n)
    fail(Errc::invalid_argument, "field element belongs to a different field");
}

Fe Fq::add(const Fe& a, const Fe& b) const {
  check_owner(a);
  check_owner(b);
  Fe r = a;
  for (std::uint32_t k = 0; k < d_->n; ++k) {
    r.c[k] += b.c[k];
    if (r.c[k] >= d_->p) r.c[k] -= d_->p;
  }
  return r;
}

Fe Fq::sub(const Fe& a, const Fe& b) const {
  check_owner(a);
  check_owner(b);
  Fe r = a;
  for (std::uint32_t k = 0; k < d_->n; ++k) {
    r.c[k] = r.c[k] >= b.c[k] ? r.c[k] - b.c[k] : r.c[k] + d_->p - b.c[k];
  }
  return r;
}

Fe Fq::neg(const Fe& a) const {
  check_owner(a);
  Fe r = a;
  for (std::uint32_t k = 0; k < d_->n; ++k)
    if (r.c[k]) r.c[k] = d_->p - r.c[k];
  return r;
}

Fe Fq::mul(const Fe& a, const Fe& b) const {
  check_owner(a);
  check_owner(b);
  const std::uint64_t p = d_->p;
  const std::uint32_t n = d_->n;
  if (n == 1) {
    Fe r = zero();
    r.c[0] = mulmod_u64(a.c[0], b.c[0], p);
    return r;
  }
  std::vector<std::uint64_t> prod(2 * n - 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!a.c[i]) continue;
    for (std::uint32_t j = 0; j < n; ++j)
      prod[i + j] = (prod[i + j] + mulmod_u64(a.c[i], b.c[j], p)) % p;
  }
  // reduce by the monic modulus
  for (std::uint32_t k = 2 * n - 2; k >= n; --k) {
    std::uint64_t lead = prod[k];
    if (lead) {
      for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t t = mulmod_u64(lead, d_->modulus[i], p);
        prod[k - n + i] = (prod[k - n + i] + p - t) % p;
      }
      prod[k] = 0;
    }
  }
  Fe r = zero();
  for (std::uint32_t k = 0; k < n; ++k) r.c[k] = prod[k];
  return r;
}

Fe Fq::inv(const Fe& a) const {
  check_owner(a);
  if (a.is_zero()) fail(Errc::invalid_argument, "inverse of zero");
  if (d_->n == 1) {
    Fe r = zero();
    r.c[0] = inv_mod_p(a.c[0], d_->p);
    return r;
  }
  // extended Euclid in F_p[t] against the modulus
  PVec r0 = d_->modulus, r1(a.c);
  ptrim(r1);
  PVec s0 = {}, s1 = {1};
  const std::uint64_t p = d_->p;
  while (!r1.empty()) {
    // divide r0 by r1
    std::uint64_t il = inv_mod_p(r1.back(), p);
    PVec q;
    PVec rem = r0;
    ptrim(rem);
    while (pdeg(rem) >= pdeg(r1)) {
      int shift = pdeg(rem) - pdeg(r1);
      std::uint64_t coef = mulmod_u64(rem.back(), il, p);
      if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1, 0);
      q[shift] = coef;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        std::uint64_t t = mulmod_u64(coef, r1[i], p);
        rem[i + shift] = (rem[i + shift] + p - t) % p;
      }
      ptrim(rem);
    }
    PVec qs1 = pmul(q, s1, p);
    PVec s2 = s0;
    if (s2.size() < qs1.size()) s2.resize(qs1.size(), 0);
    for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] = (s2[i] + p - qs1[i]) % p;
    ptrim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a unit since modulus is irreducible); s0 * a = r0 mod modulus
  std::uint64_t scale = inv_mod_p(r0[0], p);
  Fe out = zero();
  for (std::size_t i = 0; i < s0.size(); ++i) out.c[i] = mulmod_u64(s0[i], scale, p);
  return out;
}

Fe Fq::pow(const Fe& a, const BigInt& e) const {
  check_owner(a);
  if (e < 0) fail(Errc::invalid_argument, "negative exponent");
  if (e == 0) return one();
  Fe result = one();
  Fe base = a;
  BigInt ex = e;
  while (ex > 0) {
    if (boost::multiprecision::bit_test(ex, 0)) result = mul(result, base);
    ex >>= 1;
    if (ex > 0) base = mul(base, base);
  }
  return result;
}

Fe Fq::pow_u64(const Fe& a, std::uint64_t e) const { return pow(a, BigInt(e)); }

const FqTables& Fq::tables() const {
  std::call_once(d_->tables_once, [this] {
    if (!d_->q_small || d_->q64 > (1ull << 20))
      fail(Errc::invalid_argument, "arithmetic tables limited to q <= 2^20");
    auto t = std::make_unique<FqTables>();
    const std::uint64_t q = d_->q64;
    const std::uint32_t m = static_cast<std::uint32_t>(q - 1);
    t->q_ = q;
    t->m_ = m;
    // find a generator of the multiplicative group
    Fe g = one();
    if (m > 1) {
      auto factors = prime_factors_u64(m);
      for (std::uint64_t cand = 2;; ++cand) {
        Fe e = element_at(cand);
        bool ok = true;
        for (std::uint64_t f : factors) {
          if (pow_u64(e, m / f) == one()) { ok = false; break; }
        }
        if (ok) { g = e; break; }
      }
    }
    t->exp_.resize(m ? m : 1);
    t->log_.assign(q, 0);
    Fe cur = one();
    for (std::uint32_t k = 0; k < std::max<std::uint32_t>(m, 1); ++k) {
      std::uint32_t idx = static_cast<std::uint32_t>(index_of(cur));
      t->exp_[k] = idx;
      t->log_[idx] = k;
      cur = mul(cur, g);
    }
    // Zech logarithms: zech[k] = log(1 + g^k), sentinel when 1 + g^k = 0
    t->zech_.assign(std::max<std::uint32_t>(m, 1), FqTables::kNone);
    for (std::uint32_t k = 0; k < std::max<std::uint32_t>(m, 1); ++k) {
      Fe s = element_at(t->exp_[k]);
      s.c[0] = s.c[0] + 1 == d_->p ? 0 : s.c[0] + 1;
      if (!s.is_zero()) t->zech_[k] = t->log_[index_of(s)];
    }
    t->minus_one_log_ = (d_->p == 2) ? 0 : t->log_[index_of(neg(one()))];
    d_->tables = std::move(t);
  });
  if (!d_->tables) fail(Errc::invalid_argument, "arithmetic tables limited to q <= 2^20");
  return *d_->tables;
}

} // namespace k3ord
