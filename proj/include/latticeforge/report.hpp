/*
   Copyright 2026 the LatticeForge authors

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

#ifndef LATTICEFORGE_REPORT_HPP
#define LATTICEFORGE_REPORT_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/numeric.hpp"

namespace lf {

/// Multiset of elementary divisors with multiplicities, divisors possibly
/// rational (e.g. "(1/2)^30 1^32 2^2" in the sqrt(2)-scaled convention).
struct SmithProfile {
    std::vector<std::pair<Rat, int>> entries;
    static SmithProfile from_divisors(const std::vector<Rat>& divisors);
    static SmithProfile parse(const std::string& s);
    std::string to_string() const;
    bool operator==(const SmithProfile& o) const;
};

struct InvariantReport {
    std::string name;
    Rat det;
    long det_log2 = 0;
    Rat min;
    std::optional<unsigned long long> kissing;
    std::string kissing_mode = "skip";  // full | witness | skip
    SmithProfile smith;
    std::string hermite_2dp;
    std::optional<long> center_density_log2;
    std::string notes;

    nlohmann::ordered_json to_json() const;
    std::string to_csv_row() const;
};

std::string reports_to_csv(const std::vector<InvariantReport>& reports);
std::string rat_to_string(const Rat& q);
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace lf

#endif
