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

#include "latticeforge/report.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lf {

Rounded2dp round_hermite_2dp(const Rat& min, long det_log2, long N) {
    if (sgn(min) <= 0 || N <= 0) throw std::invalid_argument("round_hermite_2dp: bad input");
    // gamma = min * 2^(-det_log2/N); compare k <= 100*gamma via
    // k^N * 2^det_log2 <= (100*min)^N, all exact.
    auto pow_rat = [](Rat b, long e) {
        Rat r(1);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    };
    const Rat lhs_base = pow_rat(Rat(100) * min, N);
    const Rat two_d = pow2q(det_log2);
    auto le_gamma100 = [&](long k) { return pow_rat(Rat(k), N) * two_d <= lhs_base; };
    long hi = 1;
    while (le_gamma100(hi)) hi *= 2;
    long lo = 0;
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (le_gamma100(mid))
            lo = mid;
        else
            hi = mid;
    }
    // lo = floor(100*gamma); round on the half point 2*lo+1 vs 200*gamma.
    const Rat half_lhs = pow_rat(Rat(200) * min, N);
    const Rat half_rhs = pow_rat(Rat(2 * lo + 1), N) * two_d;
    Rounded2dp out{};
    if (half_rhs == half_lhs) {
        out.hundredths = lo + 1;  // half rounds up, flagged
        out.tie = true;
    } else {
        out.hundredths = (half_rhs < half_lhs) ? lo + 1 : lo;
        out.tie = false;
    }
    return out;
}

std::string SmithProfile::to_string() const {
    std::string s;
    for (const auto& [div, mult] : entries) {
        if (!s.empty()) s += " ";
        std::ostringstream os;
        if (div.get_den() == 1)
            os << div.get_num();
        else
            os << "(" << div.get_num() << "/" << div.get_den() << ")";
        os << "^" << mult;
        s += os.str();
    }
    return s.empty() ? "1^0" : s;
}

bool SmithProfile::operator==(const SmithProfile& o) const { return entries == o.entries; }

SmithProfile SmithProfile::from_divisors(const std::vector<Rat>& divisors) {
    SmithProfile p;
    for (const auto& d : divisors) {
        if (!p.entries.empty() && p.entries.back().first == d)
            ++p.entries.back().second;
        else
            p.entries.push_back({d, 1});
    }
    return p;
}

SmithProfile SmithProfile::parse(const std::string& s) {
    SmithProfile p;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        auto caret = tok.find('^');
        if (caret == std::string::npos) throw std::invalid_argument("SmithProfile::parse: missing ^");
        std::string dv = tok.substr(0, caret);
        int mult = std::stoi(tok.substr(caret + 1));
        Rat d;
        if (!dv.empty() && dv.front() == '(') {
            auto slash = dv.find('/');
            d = Rat(Int(dv.substr(1, slash - 1)), Int(dv.substr(slash + 1, dv.size() - slash - 2)));
        } else {
            d = Rat(Int(dv));
        }
        d.canonicalize();
        p.entries.push_back({d, mult});
    }
    return p;
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

nlohmann::ordered_json InvariantReport::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["det"] = rat_to_string(det);
    j["log2_det"] = det_log2;
    j["min"] = rat_to_string(min);
    if (kissing)
        j["kissing"] = *kissing;
    else
        j["kissing"] = "not computed";
    j["kissing_mode"] = kissing_mode;
    j["smith"] = smith.to_string();
    j["hermite"] = hermite_2dp;
    if (center_density_log2) j["center_density_log2"] = *center_density_log2;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

std::string InvariantReport::to_csv_row() const {
    std::ostringstream os;
    os << name << "," << det_log2 << "," << rat_to_string(min) << ",";
    if (kissing)
        os << *kissing;
    else
        os << "not computed";
    os << "," << kissing_mode << "," << smith.to_string() << "," << hermite_2dp;
    return os.str();
}

std::string reports_to_csv(const std::vector<InvariantReport>& reports) {
    std::string out = "name,log2_det,min,kissing,kissing_mode,smith,hermite\n";
    for (const auto& r : reports) out += r.to_csv_row() + "\n";
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp);
        f << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename into " + path);
}

}  // namespace lf
