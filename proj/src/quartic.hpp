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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf.hpp"

namespace k3ord {

inline constexpr std::uint64_t kDefaultBudget = 1ull << 31; // point evaluations per call

// One monomial c * x^e0 y^e1 z^e2 w^e3 with e0+e1+e2+e3 = 4.
struct QuarticTerm {
  std::array<std::uint8_t, 4> e{};
  BigInt coeff;
};

// Homogeneous integral quartic in four variables.  Terms are merged by
// exponent vector, zero terms dropped, and kept in a fixed lexicographic
// order; at least one term survives.
class QuarticSurface {
public:
  QuarticSurface(std::string name, std::vector<QuarticTerm> terms);

  const std::string& name() const { return name_; }
  const std::vector<QuarticTerm>& terms() const { return terms_; }

private:
  std::string name_;
  std::vector<QuarticTerm> terms_;
};

struct RTerm {
  std::array<std::uint8_t, 4> e{};
  std::uint64_t c = 0; // in [1, p)
};

// The quartic with coefficients reduced into [0,p), zero terms dropped.
class ReducedSurface {
public:
  const std::string& base_name() const { return base_name_; }
  std::uint64_t p() const { return p_; }
  const std::vector<RTerm>& terms() const { return terms_; }

  // partial derivative with respect to variable i, as reduced terms
  std::vector<RTerm> partial(unsigned i) const;

private:
  friend ReducedSurface reduce_mod_p(const QuarticSurface&, std::uint64_t);
  std::string base_name_;
  std::uint64_t p_ = 0;
  std::vector<RTerm> terms_;
};

// Fails with Errc::degenerate when every coefficient vanishes mod p.
ReducedSurface reduce_mod_p(const QuarticSurface& s, std::uint64_t p);

// Canonical representative: first nonzero coordinate equals 1.
struct ProjectivePoint {
  std::uint32_t ext_degree = 1;
  std::array<Fe, 4> coords;
};

struct SmoothnessReport {
  std::uint64_t p = 0;
  bool singular_found = false;
  std::uint32_t depth_scanned = 0; // largest extension degree fully searched
  std::optional<ProjectivePoint> witness;
};

// Searches P^3(F_{p^j}) for j = 1..depth for a common projective zero of f
// and its four partials.  Stops early on a witness.  Extension levels whose
// point count would blow the budget are skipped, which lowers depth_scanned;
// depth_scanned = 0 means nothing was searched.
SmoothnessReport singular_scan(const ReducedSurface& rs, std::uint32_t depth,
                               std::uint64_t budget = kDefaultBudget);

// Re-checks a singular witness from scratch: canonical form, f = 0, all
// partials = 0.
bool verify_witness(const ReducedSurface& rs, const ProjectivePoint& pt);

struct CountResult {
  BigInt q;
  BigInt count; // #X(F_q)
  BigInt s1;    // count - 1 - q^2
};

// Reference counter: enumerates every canonical projective representative and
// evaluates f term by term in field arithmetic.  Kept deliberately simple;
// the fast counter is validated against it.
CountResult count_points_naive(const ReducedSurface& rs, const Fq& field,
                               std::uint64_t budget = kDefaultBudget);

// Chart-decomposed counter: affine slices specialize f to a univariate
// quartic in the last coordinate (finite differences over F_p, logarithm
// tables for small extensions).  Must agree with count_points_naive exactly.
CountResult count_points_fast(const ReducedSurface& rs, const Fq& field,
                              unsigned threads = 1, std::uint64_t budget = kDefaultBudget);

enum class ReductionKind { ordinary, non_ordinary, bad_reduction };

struct OrdinaryVerdict {
  ReductionKind verdict = ReductionKind::bad_reduction;
  std::string reason; // bad_reduction only: degenerate | singular | weil_violation
  std::optional<SmoothnessReport> smoothness;
  std::optional<CountResult> count;
};

// reduce -> singular scan -> count over F_p -> Weil bound |s1| <= 22p ->
// ordinary iff s1 != 0 mod p.  Degenerate and singular reductions come back
// as bad_reduction; a blown counting budget propagates as Errc::budget.
OrdinaryVerdict is_ordinary(const QuarticSurface& s, std::uint64_t p, std::uint32_t depth = 2,
                            unsigned threads = 1, std::uint64_t budget = kDefaultBudget);

} // namespace k3ord
