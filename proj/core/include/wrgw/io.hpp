/*
   Copyright 2026 The wrgw authors

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

#ifndef WRGW_IO_HPP
#define WRGW_IO_HPP

#include <string>

#include "wrgw/degrees.hpp"

namespace wrgw {

/// Instance file schema (UTF-8 JSON): keys field, m, p, basis (list of
/// polynomial strings; optional, default the standard monomial chart),
/// x (m x p matrix of scalar strings; optional, default 0), s (list of
/// scalar strings; optional, default the roots of Wr at the chart point,
/// which must split).
struct InstanceFile {
    Field field;
    int m = 0, p = 0;
    Chart chart;
    ScalarMatrix x;
    bool has_s = false;
    std::vector<Scalar> s;

    /// Completes the specification into a validated instance. Throws if the
    /// Wronskian at the chart point does not split (when s is absent) or the
    /// stated data violate the instance invariants.
    [[nodiscard]] WronskiInstance complete() const;

    /// The chart point (no fiber validation).
    [[nodiscard]] Subspace plane() const { return chart.point(x); }
};

[[nodiscard]] InstanceFile parse_instance_file(const std::string& json_text);
[[nodiscard]] std::string instance_to_json(const WronskiInstance& inst);

[[nodiscard]] std::string local_report_text(const LocalIndexReport& rep, int m, int p,
                                            const std::vector<Scalar>& s_list);
[[nodiscard]] std::string local_report_json(const LocalIndexReport& rep, int m, int p,
                                            const std::vector<Scalar>& s_list);
[[nodiscard]] std::string global_report_text(const GlobalDegreeReport& rep);
[[nodiscard]] std::string global_report_json(const GlobalDegreeReport& rep);

/// Row-major serialization of a spanning matrix with ambient metadata.
[[nodiscard]] std::string subspace_to_json(const Subspace& w);

} // namespace wrgw

#endif
