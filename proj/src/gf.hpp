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
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace k3ord {

using BigInt = boost::multiprecision::cpp_int;

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Canonical element of F_{p^n}: coefficient vector of the residue modulo the
// field's defining polynomial, entries in [0,p), length n.  Two elements are
// equal iff their (p, n, coefficients) agree; the defining modulus is a pure
// function of (p, n), so the pair identifies the owner field.
struct Fe {
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  std::vector<std::uint64_t> c;

  bool is_zero() const {
    for (auto v : c)
      if (v) return false;
    return true;
  }
  friend bool operator==(const Fe&, const Fe&) = default;
};

// Index-space arithmetic tables (discrete log / Zech logarithm), built on
// demand for q <= 2^20.  Element indices are the base-p digit encodings used
// by Fq::element_at, i.e. index = sum c_k p^k.
class FqTables {
public:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  std::uint64_t q() const { return q_; }

  std::uint64_t mul(std::uint64_t i, std::uint64_t j) const {
    if (i == 0 || j == 0) return 0;
    return exp_[idx_mod(log_[i] + log_[j])];
  }
  std::uint64_t add(std::uint64_t i, std::uint64_t j) const {
    if (i == 0) return j;
    if (j == 0) return i;
    std::uint32_t li = log_[i], lj = log_[j];
    std::uint32_t z = zech_[idx_mod(lj + m_ - li)];
    if (z == kNone) return 0;
    return exp_[idx_mod(li + z)];
  }
  std::uint64_t neg(std::uint64_t i) const {
    if (i == 0 || minus_one_log_ == 0) return i == 0 ? 0 : exp_[log_[i]]; // char 2: -x = x
    return exp_[idx_mod(log_[i] + minus_one_log_)];
  }
  std::uint64_t sub(std::uint64_t i, std::uint64_t j) const { return add(i, neg(j)); }
  std::uint64_t inv(std::uint64_t i) const {
    if (i == 0) fail(Errc::invalid_argument, "inverse of zero");
    return exp_[idx_mod(m_ - log_[i])];
  }
  std::uint64_t pow(std::uint64_t i, std::uint64_t e) const {
    if (i == 0) return e == 0 ? 1 : 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[i]) * (e % m_)) % m_)];
  }

private:
  friend class Fq;
  std::uint64_t q_ = 0;
  std::uint32_t m_ = 0; // q - 1
  std::uint32_t minus_one_log_ = 0;
  std::vector<std::uint32_t> exp_;  // size m, exp[k] = index of g^k
  std::vector<std::uint32_t> log_;  // size q, log[0] unused
  std::vector<std::uint32_t> zech_; // zech[k] = log(1 + g^k), kNone when zero

  std::uint32_t idx_mod(std::uint64_t v) const {
    return static_cast<std::uint32_t>(v >= m_ ? v - m_ : v);
  }
};

// F_{p^n} with the deterministic defining modulus: the lexicographically
// smallest monic irreducible of degree n over F_p (coefficients compared from
// the t^{n-1} term down).  n = 1 degenerates to the prime field with modulus t.
// Immutable after construction; cheap to copy.
class Fq {
public:
  static Fq prime_field(std::uint64_t p);
  static Fq extension(std::uint64_t p, std::uint32_t n); // 1 <= n <= 16

  std::uint64_t p() const;
  std::uint32_t degree() const;
  const std::vector<std::uint64_t>& modulus() const; // length n+1, monic
  const BigInt& q() const;
  bool q_fits_u64() const;
  std::uint64_t q_u64() const;

  Fe zero() const;
  Fe one() const;
  Fe from_int(std::int64_t v) const;
  Fe from_residue(const BigInt& v) const; // embeds Z -> F_p <= F_q

  // enumeration order: index ascending, index = sum c_k p^k (odometer on the
  // coefficient vector, constant term fastest); element 0 has index 0
  Fe element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Fe& a) const;

  Fe add(const Fe& a, const Fe& b) const;
  Fe sub(const Fe& a, const Fe& b) const;
  Fe mul(const Fe& a, const Fe& b) const;
  Fe neg(const Fe& a) const;
  Fe inv(const Fe& a) const;                 // a != 0
  Fe pow(const Fe& a, const BigInt& e) const; // e >= 0
  Fe pow_u64(const Fe& a, std::uint64_t e) const;

  // Zech-logarithm fast path; first call builds the tables (O(q), q <= 2^20)
  const FqTables& tables() const;

  friend bool operator==(const Fq& a, const Fq& b) {
    return a.p() == b.p() && a.degree() == b.degree();
  }

private:
  struct Data;
  std::shared_ptr<const Data> d_;
  explicit Fq(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  void check_owner(const Fe& a) const;
};

} // namespace k3ord
