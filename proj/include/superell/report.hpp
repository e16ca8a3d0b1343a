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

#ifndef SUPERELL_REPORT_HPP
#define SUPERELL_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace superell {

/// One verification result. expected/actual are exact decimal or polynomial
/// renderings; no floating point anywhere.
struct CheckReport {
    std::string name;
    std::map<std::string, std::string> params;  // ordered, deterministic
    std::string expected;
    std::string actual;
    bool pass = false;
    uint64_t runtime_ms = 0;
    std::optional<uint64_t> seed;
};

inline CheckReport make_report(std::string name, std::map<std::string, std::string> params,
                               std::string expected, std::string actual) {
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.pass = expected == actual;
    r.expected = std::move(expected);
    r.actual = std::move(actual);
    return r;
}

}  // namespace superell

#endif
