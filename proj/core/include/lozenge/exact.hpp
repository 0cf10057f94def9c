/*
 * Copyright 2026 The lozenge Authors
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
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @brief Exact scalars shared by every lozenge module.
 *
 * Integers and rationals are GMP-backed; rationals are kept in canonical
 * form (reduced, positive denominator).
 */

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lozenge {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Raised when an operation's input violates a documented precondition
/// (parity, size guard, shape). The message names the violated condition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// C(n, k); zero when k < 0, k > n or n < 0.
ExactInt binomial(long n, long k);

/// num/den in lowest terms. Throws PreconditionError when den == 0.
ExactRational make_rational(long num, long den = 1);

ExactRational power(const ExactRational &base, unsigned long exponent);

bool is_integer(const ExactRational &value);

/// Numerator of an integral rational; throws std::domain_error otherwise.
ExactInt to_integer(const ExactRational &value);

std::string to_string(const ExactInt &value);
std::string to_string(const ExactRational &value);

} // namespace lozenge
