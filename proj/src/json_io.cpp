/*
   Copyright 2026 The sympair Authors

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

#include "json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace sympair {

using nlohmann::json;

namespace {

json factor_to_json(const FactorSpec& f) {
    json j;
    switch (f.kind) {
        case FactorSpec::Kind::unity_root: j["unity_exp"] = f.unity_exp; break;
        case FactorSpec::Kind::element: j["elem"] = f.elem; break;
        case FactorSpec::Kind::quadratic: j["poly"] = f.quad; break;
    }
    j["mult"] = f.mult;
    return j;
}

FactorSpec factor_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::parse, "factor must be an object");
    const int mult = j.value("mult", 1);
    if (j.contains("unity_exp")) return FactorSpec::unity(j.at("unity_exp").get<i64>(), mult);
    if (j.contains("elem")) return FactorSpec::element(j.at("elem").get<i64>(), mult);
    if (j.contains("poly")) return FactorSpec::quadratic(j.at("poly").get<std::vector<i64>>(), mult);
    fail(Errc::parse, "factor needs one of unity_exp, elem, poly");
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

}  // namespace

CodeSpec spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::parse, std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) fail(Errc::parse, "spec must be a JSON object");
        if (!j.contains("p") || !j.contains("l")) fail(Errc::parse, "spec needs p and l");
        std::vector<FactorSpec> factors;
        for (const auto& f : j.value("factors", json::array())) factors.push_back(factor_from_json(f));
        BuildOptions opts;
        if (j.contains("omega")) opts.omega = j.at("omega").get<i64>();
        return CodeSpec::build(j.at("p").get<i64>(), j.at("l").get<i64>(), std::move(factors), opts);
    } catch (const json::exception& e) {
        fail(Errc::parse, std::string("invalid spec: ") + e.what());
    }
}

std::string spec_to_json(const CodeSpec& spec, int indent) {
    json j;
    j["p"] = spec.p();
    j["l"] = spec.l();
    j["factors"] = json::array();
    for (const auto& f : spec.factors()) j["factors"].push_back(factor_to_json(f));
    if (spec.omega() != 0) j["omega"] = spec.omega();
    j["n"] = spec.n();
    j["k"] = spec.k();
    j["generator"] = spec.generator().coeffs();
    return dump(j, indent);
}

std::string report_to_json(const DistanceReport& report, const CodeSpec& spec, int indent) {
    json j;
    j["spec"] = json::parse(spec_to_json(spec));
    j["d_H"] = report.d_hamming;
    j["d_p"] = report.d_pair;
    j["class"] = name(report.cls);
    j["witness_H"] = report.witness_hamming;
    j["witness_p"] = report.witness_pair;
    j["method"] = name(report.method);
    j["supports_examined"] = report.supports_examined;
    j["elapsed_ms"] = report.elapsed_ms;
    return dump(j, indent);
}

std::string row_to_json(const FamilyInstance& row, const RowResult* result, int indent) {
    json j;
    j["id"] = row.id;
    j["family"] = name(row.family);
    j["table"] = row.table;
    j["params"] = row.params;
    j["paper_row"] = row.paper_row;
    j["p"] = row.spec.p();
    j["n"] = row.spec.n();
    j["k"] = row.spec.k();
    json e;
    if (row.expected.redundancy) e["n_minus_k"] = *row.expected.redundancy;
    if (row.expected.d_hamming) e["d_H"] = *row.expected.d_hamming;
    if (row.expected.d_pair) e["d_p"] = *row.expected.d_pair;
    if (row.expected.cls_kind == Expected::ClsKind::exact) e["class"] = name(row.expected.cls);
    if (row.expected.cls_kind == Expected::ClsKind::not_mds) e["class"] = "not MDS";
    j["expected"] = std::move(e);
    if (!row.pinned_witness.empty()) {
        j["pinned_witness"] = row.pinned_witness;
        j["pinned_witness_pair_weight"] = row.pinned_witness_pair_weight;
    }
    if (result) {
        j["computed"] = {{"d_H", result->report.d_hamming},
                         {"d_p", result->report.d_pair},
                         {"class", name(result->report.cls)},
                         {"method", name(result->report.method)},
                         {"supports_examined", result->report.supports_examined},
                         {"elapsed_ms", result->report.elapsed_ms}};
        j["status"] = result->status;
        if (!result->notes.empty()) j["notes"] = result->notes;
    }
    return dump(j, indent);
}

std::string registry_csv_header() { return "family,params,p,n,k,d_H,d_p,class,paper_row,status"; }

std::string row_to_csv(const FamilyInstance& row, const RowResult* result) {
    auto quote = [](std::string s) {
        for (auto& ch : s)
            if (ch == ',') ch = ';';
        return s;
    };
    std::ostringstream os;
    os << name(row.family) << "," << quote(row.params) << "," << row.spec.p() << "," << row.spec.n()
       << "," << row.spec.k() << ",";
    if (result)
        os << result->report.d_hamming << "," << result->report.d_pair << ","
           << name(result->report.cls);
    else
        os << ",,";
    os << "," << quote(row.paper_row) << "," << (result ? result->status : "");
    return os.str();
}

}  // namespace sympair
