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

#include "sympair/sympair.h"

#include <cstring>
#include <new>
#include <string>

#include "catalog.hpp"
#include "json_io.hpp"
#include "pairmetric.hpp"

using namespace sympair;

struct sympair_code {
    CodeSpec spec;
};

struct sympair_report {
    DistanceReport report;
};

namespace {

thread_local std::string g_last_error;

sympair_status status_of(Errc code) {
    switch (code) {
        case Errc::invalid_argument: return SYMPAIR_ERR_INVALID_ARGUMENT;
        case Errc::modulus_mismatch: return SYMPAIR_ERR_MODULUS_MISMATCH;
        case Errc::division_by_zero: return SYMPAIR_ERR_DIVISION_BY_ZERO;
        case Errc::no_such_root: return SYMPAIR_ERR_NO_SUCH_ROOT;
        case Errc::bad_spec: return SYMPAIR_ERR_BAD_SPEC;
        case Errc::multiplicity_bound: return SYMPAIR_ERR_MULTIPLICITY;
        case Errc::too_large: return SYMPAIR_ERR_TOO_LARGE;
        case Errc::parse: return SYMPAIR_ERR_PARSE;
        case Errc::internal: return SYMPAIR_ERR_INTERNAL;
    }
    return SYMPAIR_ERR_INTERNAL;
}

template <class Fn>
sympair_status guarded(Fn&& fn) {
    try {
        fn();
        return SYMPAIR_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SYMPAIR_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

SearchOptions to_search_options(const sympair_options* opts) {
    SearchOptions s;
    if (opts) {
        s.full_enum_cap = opts->full_enum_cap;
        s.nullspace_cap = opts->nullspace_cap;
        s.workers = opts->workers;
        s.analyze_full_enum_threshold = opts->full_enum_threshold;
    }
    return s;
}

sympair_status copy_word(const Codeword& word, int64_t* buf, size_t buf_len, size_t* out_len) {
    if (out_len) *out_len = word.size();
    if (!buf) return SYMPAIR_OK;
    if (buf_len < word.size()) {
        g_last_error = "buffer too small";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    for (size_t i = 0; i < word.size(); ++i) buf[i] = word[i];
    return SYMPAIR_OK;
}

}  // namespace

extern "C" {

void sympair_options_default(sympair_options* opts) {
    if (!opts) return;
    const SearchOptions d;
    opts->full_enum_cap = d.full_enum_cap;
    opts->nullspace_cap = d.nullspace_cap;
    opts->workers = d.workers;
    opts->full_enum_threshold = d.analyze_full_enum_threshold;
}

const char* sympair_status_name(sympair_status status) {
    switch (status) {
        case SYMPAIR_OK: return "ok";
        case SYMPAIR_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SYMPAIR_ERR_MODULUS_MISMATCH: return "modulus mismatch";
        case SYMPAIR_ERR_DIVISION_BY_ZERO: return "division by zero";
        case SYMPAIR_ERR_NO_SUCH_ROOT: return "no such root of unity";
        case SYMPAIR_ERR_BAD_SPEC: return "bad code spec";
        case SYMPAIR_ERR_MULTIPLICITY: return "multiplicity above family bound";
        case SYMPAIR_ERR_TOO_LARGE: return "enumeration too large";
        case SYMPAIR_ERR_PARSE: return "parse error";
        case SYMPAIR_ERR_INTERNAL: return "internal error";
    }
    return "?";
}

const char* sympair_class_name(sympair_class cls) {
    switch (cls) {
        case SYMPAIR_CLASS_MDS: return "MDS";
        case SYMPAIR_CLASS_AMDS: return "AMDS";
        case SYMPAIR_CLASS_NEITHER: return "neither";
    }
    return "?";
}

const char* sympair_method_name(sympair_method method) {
    return method == SYMPAIR_METHOD_FULL_ENUM ? "full-enum" : "support-search";
}

const char* sympair_last_error(void) { return g_last_error.c_str(); }

void sympair_string_free(char* s) { delete[] s; }

sympair_status sympair_code_from_json(const char* json_text, sympair_code** out) {
    if (!json_text || !out) {
        g_last_error = "null argument";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new sympair_code{spec_from_json(json_text)}; });
}

sympair_status sympair_code_powers(int64_t p, int64_t l, int r1, int r2, int r3, int64_t omega,
                                   sympair_code** out) {
    if (!out) {
        g_last_error = "null argument";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        std::vector<FactorSpec> fs;
        if (r1 > 0) fs.push_back(FactorSpec::unity(0, r1));
        if (r2 > 0) fs.push_back(FactorSpec::unity(1, r2));
        if (r3 > 0) fs.push_back(FactorSpec::unity(2, r3));
        if (r1 < 0 || r2 < 0 || r3 < 0 || fs.empty())
            fail(Errc::invalid_argument, "exponents must be nonnegative with positive sum");
        BuildOptions opts;
        opts.paper_multiplicity_bound = true;
        if (omega != 0) opts.omega = omega;
        *out = new sympair_code{CodeSpec::build(p, l, std::move(fs), opts)};
    });
}

sympair_status sympair_code_3p(int64_t p, int r1, int r2, int r3, int64_t omega,
                               sympair_code** out) {
    return sympair_code_powers(p, 3, r1, r2, r3, omega, out);
}

void sympair_code_free(sympair_code* code) { delete code; }

int64_t sympair_code_p(const sympair_code* code) { return code ? code->spec.p() : 0; }
int64_t sympair_code_l(const sympair_code* code) { return code ? code->spec.l() : 0; }
int64_t sympair_code_n(const sympair_code* code) { return code ? code->spec.n() : 0; }
int64_t sympair_code_k(const sympair_code* code) { return code ? code->spec.k() : 0; }
int64_t sympair_code_omega(const sympair_code* code) { return code ? code->spec.omega() : 0; }

sympair_status sympair_code_generator(const sympair_code* code, int64_t* buf, size_t buf_len,
                                      size_t* out_len) {
    if (!code) {
        g_last_error = "null code";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return copy_word(code->spec.generator().coeffs(), buf, buf_len, out_len);
}

sympair_status sympair_code_to_json(const sympair_code* code, int indent, char** out) {
    if (!code || !out) {
        g_last_error = "null argument";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = dup_string(spec_to_json(code->spec, indent)); });
}

sympair_status sympair_code_contains(const sympair_code* code, const int64_t* word, size_t len,
                                     int* result) {
    if (!code || !word || !result) {
        g_last_error = "null argument";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *result = code->spec.contains(std::span<const i64>(word, len)) ? 1 : 0;
    });
}

sympair_status sympair_pair_weight(const int64_t* word, size_t len, int* out) {
    if (!word || !out) {
        g_last_error = "null argument";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = pair_weight(std::span<const i64>(word, len)); });
}

sympair_status sympair_analyze(const sympair_code* code, const sympair_options* opts,
                               sympair_report** out) {
    if (!code || !out) {
        g_last_error = "null argument";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new sympair_report{analyze(code->spec, to_search_options(opts))}; });
}

void sympair_report_free(sympair_report* report) { delete report; }

int sympair_report_d_hamming(const sympair_report* report) {
    return report ? report->report.d_hamming : 0;
}

int sympair_report_d_pair(const sympair_report* report) {
    return report ? report->report.d_pair : 0;
}

sympair_class sympair_report_classification(const sympair_report* report) {
    if (!report) return SYMPAIR_CLASS_NEITHER;
    switch (report->report.cls) {
        case Classification::mds: return SYMPAIR_CLASS_MDS;
        case Classification::amds: return SYMPAIR_CLASS_AMDS;
        case Classification::neither: return SYMPAIR_CLASS_NEITHER;
    }
    return SYMPAIR_CLASS_NEITHER;
}

sympair_method sympair_report_method(const sympair_report* report) {
    return report && report->report.method == Method::full_enum ? SYMPAIR_METHOD_FULL_ENUM
                                                                : SYMPAIR_METHOD_SUPPORT_SEARCH;
}

uint64_t sympair_report_supports_examined(const sympair_report* report) {
    return report ? report->report.supports_examined : 0;
}

double sympair_report_elapsed_ms(const sympair_report* report) {
    return report ? report->report.elapsed_ms : 0.0;
}

sympair_status sympair_report_witness(const sympair_report* report, int which, int64_t* buf,
                                      size_t buf_len, size_t* out_len) {
    if (!report) {
        g_last_error = "null report";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    const Codeword& w = which == SYMPAIR_WITNESS_HAMMING ? report->report.witness_hamming
                                                         : report->report.witness_pair;
    return copy_word(w, buf, buf_len, out_len);
}

sympair_status sympair_report_to_json(const sympair_report* report, const sympair_code* code,
                                      int indent, char** out) {
    if (!report || !code || !out) {
        g_last_error = "null argument";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = dup_string(report_to_json(report->report, code->spec, indent)); });
}

size_t sympair_registry_count(void) {
    try {
        return registry().size();
    } catch (...) {
        return 0;
    }
}

const char* sympair_registry_row_id(size_t index) {
    const auto& rows = registry();
    return index < rows.size() ? rows[index].id.c_str() : nullptr;
}

const char* sympair_registry_row_table(size_t index) {
    const auto& rows = registry();
    return index < rows.size() ? rows[index].table.c_str() : nullptr;
}

int64_t sympair_registry_row_p(size_t index) {
    const auto& rows = registry();
    return index < rows.size() ? rows[index].spec.p() : 0;
}

sympair_status sympair_registry_row_json(size_t index, int indent, char** out) {
    if (!out) {
        g_last_error = "null argument";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    if (index >= registry().size()) {
        g_last_error = "registry index out of range";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = dup_string(row_to_json(registry()[index], nullptr, indent)); });
}

sympair_status sympair_registry_verify(size_t index, const sympair_options* opts, int* pass,
                                       char** json_detail, char** csv_line) {
    if (index >= registry().size()) {
        g_last_error = "registry index out of range";
        return SYMPAIR_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const auto& row = registry()[index];
        const RowResult res = verify_row(row, to_search_options(opts));
        if (pass) *pass = res.pass ? 1 : 0;
        if (json_detail) *json_detail = dup_string(row_to_json(row, &res, -1));
        if (csv_line) *csv_line = dup_string(row_to_csv(row, &res));
    });
}

const char* sympair_registry_csv_header(void) {
    static const std::string header = registry_csv_header();
    return header.c_str();
}

int sympair_mds3p_condition(int r1, int r2, int r3) {
    return mds3p_condition(r1, r2, r3) ? 1 : 0;
}

}  // extern "C"
