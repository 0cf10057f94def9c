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

#include "lozenge/exact.hpp"

namespace lozenge {

ExactInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    ExactInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

ExactRational make_rational(long num, long den) {
    if (den == 0) throw PreconditionError("rational denominator must be nonzero");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

ExactRational power(const ExactRational &base, unsigned long exponent) {
    ExactRational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    // Powers of a reduced fraction stay reduced; 0^0 is 1/1.
    return result;
}

bool is_integer(const ExactRational &value) { return value.get_den() == 1; }

ExactInt to_integer(const ExactRational &value) {
    if (!is_integer(value))
        throw std::domain_error("expected an integer, got " + value.get_str());
    return value.get_num();
}

std::string to_string(const ExactInt &value) { return value.get_str(); }

std::string to_string(const ExactRational &value) { return value.get_str(); }

} // namespace lozenge
