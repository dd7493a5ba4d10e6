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
#include <utility>
#include <vector>

#include "quartic.hpp"
#include "rational.hpp"
#include "zpoly.hpp"

namespace k3ord {

// P(t) = a_0 + a_1 t + ... + a_22 t^22 attached to the 22-dimensional H^2.
// a holds 23 entries for a full polynomial; shorter vectors are prefixes
// a_0..a_k used by the partial-classification path.
struct FrobeniusPoly {
  std::uint64_t p = 0;
  std::uint32_t r = 1; // q = p^r
  std::vector<BigInt> a;

  BigInt q() const;
  bool is_partial() const { return a.size() < 23; }
};

// Validates p prime, r >= 1, 1 <= #coeffs <= 23.  Content checks (constant
// term, functional equation) live in validate_weil.
FrobeniusPoly frobenius_from_coeffs(std::uint64_t p, std::uint32_t r, std::vector<BigInt> a);

struct WeilCheck {
  char clause = '?'; // 'a'..'e'
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<WeilCheck> checks;
  int epsilon = 0;          // a_22 / q^22 when determined, else 0
  bool structural_pass = false; // (a),(b),(c),(e)
  bool numeric_pass = false;    // (d) root moduli within 1e-8 relative
  bool pass = false;
  bool numerical_root_failure = false; // structure fine, numerics off
};

// (a) a_0 = 1; (b) a_22 = +-q^22, fixing epsilon; (c) a_{22-j} = eps
// q^{22-2j} a_j exactly for j = 0..11; (d) every complex root has modulus 1/q
// within relative tolerance 1e-8 (squarefree reduction first, so multiple
// roots do not poison the numerics); (e) for the five smallest primes l != p
// the l-adic Newton polygon of P is identically zero-sloped.
ValidationReport validate_weil(const FrobeniusPoly& P);

struct PowerSums {
  std::uint64_t p = 0;
  std::uint32_t r = 1;
  BigInt q;
  std::vector<BigInt> s; // s[i] = s_{i+1}
};

// s_n = #X(F_{q^n}) - 1 - q^{2n} from counts over F_{q^n}, n = 1..k.
// Enforces |s_n| <= 22 q^n per power; violations are Errc::inconsistent.
PowerSums power_sums_from_counts(const std::vector<CountResult>& counts, std::uint64_t p,
                                 std::uint32_t r);

// Forward direction of Newton's identities on a full polynomial.
PowerSums power_sums_of(const FrobeniusPoly& P, unsigned k);

struct Reconstruction {
  std::vector<FrobeniusPoly> candidates; // one, or two when the sign is open
  bool ambiguous = false;
};

// a_1..a_11 by Newton's identities from s_1..s_11, then completion through
// the functional equation.  a_11 != 0 forces eps = +1; otherwise both sign
// candidates are built, filtered through validate_weil, and disambiguated by
// s_12 when supplied.  Non-integer identities or zero surviving candidates
// fail with Errc::inconsistent.
Reconstruction reconstruct_from_power_sums(const PowerSums& ps,
                                           const std::optional<BigInt>& s12 = std::nullopt);

struct NewtonPolygon {
  std::uint64_t p = 0;
  std::uint32_t r = 1;
  std::vector<std::pair<int, Rational>> points;   // (j, ord_p(a_j)/r), a_j != 0
  std::vector<std::pair<int, Rational>> vertices; // lower convex hull
  std::vector<Rational> slopes;                   // 22 entries, nondecreasing
};

// Lower convex hull of (j, ord_p(a_j)) normalized so ord(q) = 1.  Requires
// the structural checks (a)-(c) to pass.
NewtonPolygon newton_polygon(const FrobeniusPoly& P);

inline constexpr unsigned kInfiniteHeight = 0xffffffffu;

struct HeightClass {
  enum class Kind { ordinary, finite, supersingular, invalid };
  Kind kind = Kind::invalid;
  unsigned h = 0; // 1 for ordinary, 2..10 for finite, kInfiniteHeight for supersingular
  std::string reason; // invalid only
};

// Exact multiset match against {(h-1)/h x h, 1 x (22-2h), (h+1)/h x h} for
// h = 1..10, all-ones = supersingular, anything else Invalid (including the
// h = 11 pattern, which exceeds the K3 bound).
HeightClass classify_height(const NewtonPolygon& np);

// p does not divide a_1
bool is_ordinary_from_a1(const FrobeniusPoly& P);

struct SupersingularResult {
  bool yes = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> orders; // (N, multiplicity), ascending N
  int failing_index = -1; // smallest j with q^j not dividing a_j, when that is the reason
  std::string reason;     // set when yes = false
};

// Exact test: q^j | a_j for all j, then R(t) = sum (a_j/q^j) t^j must factor
// completely into cyclotomics Phi_N with phi(N) <= 22 (iterated exact
// division; Kronecker bounds the admissible orders).
SupersingularResult supersingular_exact(const FrobeniusPoly& P);

// Heights consistent with a known coefficient prefix a_0..a_k (1 <= k <= 11):
// every known point must sit on or above the candidate hull and every hull
// vertex with index <= k must be attained exactly.  Returns ascending h with
// kInfiniteHeight last; empty means no height pattern fits the prefix.
std::vector<unsigned> height_candidates_partial(const std::vector<BigInt>& a, std::uint64_t p,
                                                std::uint32_t r);

struct Ogus2Verdict {
  std::array<bool, 5> hypotheses{}; // (i) l | p-1; (ii) P = (1-t)^22 mod l;
                                    // (iii) structural integrality; (iv) root
                                    // moduli 1/p; (v) p | b_1
  bool conclusion_holds = false;    // P = (1 - p t)^22 exactly
  bool all_hypotheses() const {
    for (bool b : hypotheses)
      if (!b) return false;
    return true;
  }
};

// Trace-rigidity checker on a degree-22 polynomial 1 + b_1 t + ... + b_22
// t^22.  Requires primes p, l with l > 44.
Ogus2Verdict ogus2_check(const std::vector<BigInt>& b, std::uint64_t p, std::uint64_t ell);

struct AlgebraicPart {
  unsigned degree = 0; // total degree removed, 0..22
  std::vector<std::pair<std::uint32_t, std::uint32_t>> orders; // (N, multiplicity)
};

// Maximal factor of P built from Phi_N(q t): reciprocal roots q * (root of
// unity), the candidates for algebraic cycle classes.
AlgebraicPart algebraic_part(const FrobeniusPoly& P);

// max | |root| - 1 | over the complex roots of the squarefree part of f,
// for f expected to have all roots on the unit circle; companion-matrix
// eigenvalues polished by Newton steps
double unit_circle_deviation(const QPoly& f);

} // namespace k3ord
