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
#include <doctest.h>

#include "lozenge/exact.hpp"

using namespace lozenge;

TEST_CASE("binomial values") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(60, 30) == ExactInt("118264581564861424"));
}

TEST_CASE("binomial satisfies Pascal's rule") {
    for (long n = 1; n <= 30; ++n)
        for (long k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("rationals are canonical") {
    const ExactRational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(r) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
    CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
}

TEST_CASE("power and integrality") {
    CHECK(power(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(power(make_rational(-5), 0) == 1);
    CHECK(is_integer(make_rational(10, 5)));
    CHECK_FALSE(is_integer(make_rational(1, 2)));
    CHECK(to_integer(make_rational(-12, 4)) == -3);
    CHECK_THROWS_AS(to_integer(make_rational(1, 2)), std::domain_error);
}

TEST_CASE("large values print exactly") {
    ExactInt big = 1;
    for (int i = 0; i < 100; ++i) big *= 10;
    CHECK(to_string(big) == "1" + std::string(100, '0'));
}
