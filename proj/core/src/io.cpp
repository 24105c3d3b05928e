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

#include "wrgw/io.hpp"

#include <sstream>

#include <json.hpp>

namespace wrgw {

using nlohmann::json;

namespace {

Chart chart_from_json(const Field& k, int m, int p, const json& j) {
    if (!j.contains("basis")) return Chart::standard(k, m, p);
    std::vector<Poly> basis;
    for (const auto& b : j.at("basis")) basis.push_back(Poly::parse(k, b.get<std::string>()));
    return Chart(m, p, std::move(basis));
}

ScalarMatrix x_from_json(const Field& k, int m, int p, const json& j) {
    ScalarMatrix x(k, static_cast<std::size_t>(m), static_cast<std::size_t>(p));
    if (!j.contains("x")) return x;
    const auto& rows = j.at("x");
    if (rows.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("instance file: x must have m rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != static_cast<std::size_t>(p))
            throw std::invalid_argument("instance file: x rows must have p entries");
        for (std::size_t jj = 0; jj < rows[i].size(); ++jj) {
            const auto& cell = rows[i][jj];
            if (cell.is_number_integer())
                x.set(i, jj, Scalar(k, cell.get<long>()));
            else
                x.set(i, jj, Scalar::parse(k, cell.get<std::string>()));
        }
    }
    return x;
}

json scalar_list_json(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

json matrix_json(const ScalarMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

} // namespace

WronskiInstance InstanceFile::complete() const {
    Subspace w = chart.point(x);
    std::vector<Scalar> roots;
    if (has_s) {
        roots = s;
    } else {
        auto r = split_distinct_roots(wronskian(w));
        if (!r)
            throw std::invalid_argument(
                "instance file: no s given and Wr(W) is not split with distinct roots");
        roots = *r;
    }
    return WronskiInstance(field, m, p, chart, std::move(roots), std::move(w));
}

InstanceFile parse_instance_file(const std::string& json_text) {
    json j = json::parse(json_text);
    Field k = Field::parse(j.at("field").get<std::string>());
    int m = j.at("m").get<int>();
    int p = j.at("p").get<int>();
    if (m < 1 || p < 1) throw std::invalid_argument("instance file: m, p must be positive");
    Chart chart = chart_from_json(k, m, p, j);
    ScalarMatrix x = x_from_json(k, m, p, j);
    InstanceFile f{k, m, p, std::move(chart), std::move(x), false, {}};
    if (j.contains("s")) {
        f.has_s = true;
        for (const auto& sv : j.at("s")) {
            if (sv.is_number_integer()) f.s.emplace_back(k, sv.get<long>());
            else f.s.push_back(Scalar::parse(k, sv.get<std::string>()));
        }
    }
    return f;
}

std::string instance_to_json(const WronskiInstance& inst) {
    json j;
    j["field"] = inst.field.str();
    j["m"] = inst.m;
    j["p"] = inst.p;
    json basis = json::array();
    for (const auto& e : inst.chart.base_basis()) basis.push_back(e.str());
    j["basis"] = basis;
    // coordinates of W in the instance's own chart: rewrite the spanning
    // rows in the chart basis and normalize to [x | I]
    ScalarMatrix in_chart = inst.w.basis() * inst.chart.basis_matrix().inverse();
    std::vector<std::size_t> order;
    for (int c = inst.p; c < inst.m + inst.p; ++c) order.push_back(static_cast<std::size_t>(c));
    for (int c = 0; c < inst.p; ++c) order.push_back(static_cast<std::size_t>(c));
    std::vector<std::size_t> pivots = in_chart.rref(order);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] != static_cast<std::size_t>(inst.p) + i)
            throw std::domain_error("instance_to_json: W is not a point of its chart");
    ScalarMatrix x(inst.field, static_cast<std::size_t>(inst.m), static_cast<std::size_t>(inst.p));
    for (std::size_t g = 0; g < static_cast<std::size_t>(inst.m); ++g)
        for (std::size_t kk = 0; kk < static_cast<std::size_t>(inst.p); ++kk)
            x.set(g, kk, in_chart.at(g, kk));
    j["x"] = matrix_json(x);
    j["s"] = scalar_list_json(inst.s_list);
    return j.dump(2);
}

std::string subspace_to_json(const Subspace& w) {
    json j;
    j["ambient_dim"] = w.ambient_dim();
    j["plane_dim"] = w.plane_dim();
    j["field"] = w.field().str();
    j["rows"] = matrix_json(w.basis());
    return j.dump(2);
}

std::string local_report_text(const LocalIndexReport& rep, int m, int p,
                              const std::vector<Scalar>& s_list) {
    std::ostringstream out;
    out << "local index at W over " << rep.w.field().str() << ", Gr(" << m << "," << m + p << ")\n";
    out << "  s               = {";
    for (std::size_t i = 0; i < s_list.size(); ++i) out << (i ? ", " : "") << s_list[i].str();
    out << "}\n";
    out << "  C               = " << rep.constant.str() << "\n";
    out << "  det B           = " << rep.det_B.str() << "\n";
    out << "  Jacobian det    = " << rep.jacobian_det.str() << "\n";
    out << "  degree (direct) = " << rep.degree_direct.str() << "\n";
    out << "  degree (<C.detB>) = " << rep.degree_formula.str() << "\n";
    out << "  scalar identity = " << (rep.scalar_identity ? "holds" : "VIOLATED") << "\n";
    out << "  agreement       = " << (rep.agrees ? "true" : "FALSE") << "\n";
    return out.str();
}

std::string local_report_json(const LocalIndexReport& rep, int m, int p,
                              const std::vector<Scalar>& s_list) {
    json j;
    j["field"] = rep.w.field().str();
    j["m"] = m;
    j["p"] = p;
    j["s"] = scalar_list_json(s_list);
    j["C"] = rep.constant.str();
    j["detB"] = rep.det_B.str();
    j["jacobianDet"] = rep.jacobian_det.str();
    j["degreeDirect"] = rep.degree_direct.str();
    j["degreeFormula"] = rep.degree_formula.str();
    j["scalarIdentity"] = rep.scalar_identity;
    j["agrees"] = rep.agrees;
    return j.dump(2);
}

std::string global_report_text(const GlobalDegreeReport& rep) {
    std::ostringstream out;
    out << "global degree report\n";
    out << "  expected n_C    = " << rep.expected.get_str() << "\n";
    out << "  rational points = " << rep.fiber.size() << "\n";
    out << "  all simple      = " << (rep.all_simple ? "true" : "false") << "\n";
    if (rep.sum) out << "  sum             = " << rep.sum->str_canonical() << "\n";
    if (rep.verdict) {
        mpz_class half = rep.expected / 2;
        out << "  verdict (= " << half.get_str() << "*H) = " << verdict_str(*rep.verdict) << "\n";
    }
    if (!rep.diagnostic.empty()) out << "  diagnostic      = " << rep.diagnostic << "\n";
    return out.str();
}

std::string global_report_json(const GlobalDegreeReport& rep) {
    json j;
    j["expected_nC"] = rep.expected.get_str();
    j["rationalCount"] = rep.fiber.size();
    j["allSimple"] = rep.all_simple;
    if (rep.sum) j["sum"] = rep.sum->str();
    if (rep.verdict) j["verdict"] = verdict_str(*rep.verdict);
    if (!rep.diagnostic.empty()) j["diagnostic"] = rep.diagnostic;
    json fiber = json::array();
    for (const auto& w : rep.fiber) fiber.push_back(json::parse(subspace_to_json(w)));
    j["fiber"] = fiber;
    return j.dump(2);
}

} // namespace wrgw
