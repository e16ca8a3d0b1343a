/*
   Copyright 2026 the superell authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUPERELL_POLY_CHECKS_HPP
#define SUPERELL_POLY_CHECKS_HPP

#include "intpoly.hpp"
#include "report.hpp"

namespace superell {

/// Disc(P_N) against the closed form (-1)^{(N-1)(N-2)/2} N^{N-2}.
inline CheckReport verify_disc_pn(uint64_t N) {
    if (N < 2) throw std::invalid_argument("verify_disc_pn: N >= 2");
    BigInt actual = discriminant(pn_poly(N));
    BigInt expected = big_pow(BigInt(N), N - 2);
    if (((N - 1) * (N - 2) / 2) % 2 == 1) expected = -expected;
    return make_report("disc_pn", {{"N", std::to_string(N)}}, expected.str(), actual.str());
}

}  // namespace superell

#endif
