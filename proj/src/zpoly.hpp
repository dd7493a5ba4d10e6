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
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gf.hpp"

namespace k3ord {

// Integer / rational polynomials, coefficients low-to-high, no trailing zeros
// except that the zero polynomial is the empty vector.
using ZPoly = std::vector<BigInt>;
using BigRat = boost::multiprecision::cpp_rational;
using QPoly = std::vector<BigRat>;

void ztrim(ZPoly& a);
int zdeg(const ZPoly& a); // -1 for zero

ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zderivative(const ZPoly& a);
BigInt zeval(const ZPoly& a, const BigInt& x);

// f(c*t): coefficient k scaled by c^k
ZPoly scale_arg(const ZPoly& f, const BigInt& c);

// Exact division over Q with an integrality check on the quotient.  Returns
// false when den is zero, does not divide, or the quotient is non-integral.
bool exact_divide(const ZPoly& num, const ZPoly& den, ZPoly* quot);

QPoly to_q(const ZPoly& a);
void qtrim(QPoly& a);
QPoly qderivative(const QPoly& a);
// remainder of a mod b (b != 0); quot receives the quotient when non-null
QPoly qdivmod(QPoly a, const QPoly& b, QPoly* quot);
QPoly qgcd(QPoly a, QPoly b); // monic unless zero
// f / gcd(f, f'): same roots, all simple
QPoly squarefree_part_q(const QPoly& f);
QPoly squarefree_part(const ZPoly& f);

std::uint32_t euler_phi(std::uint32_t n);

// Cyclotomic polynomial, computed by iterated exact division of t^N - 1 and
// memoized.  Thread-safe.
const ZPoly& cyclotomic(std::uint32_t n);

// All N >= 1 with euler_phi(N) <= max_phi, ascending.  These are the possible
// multiplicative orders of an algebraic integer whose minimal polynomial has
// degree <= max_phi and all of whose powers stay in a bounded set (Kronecker).
std::vector<std::uint32_t> admissible_orders(std::uint32_t max_phi);

} // namespace k3ord
