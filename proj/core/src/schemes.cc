// Copyright 2026 The qdsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdsc/schemes.h"

#include "qdsc/catalog.h"
#include "qdsc/errors.h"

namespace qdsc {

namespace {

bool is_x_type(const F4Vector& v) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].z()) return false;
    }
    return true;
}

bool is_z_type(const F4Vector& v) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].x()) return false;
    }
    return true;
}

std::vector<F4Vector> reorder(const std::vector<F4Vector>& rows, const std::vector<std::size_t>& order,
                              const char* what) {
    if (order.empty()) {
        return rows;
    }
    if (order.size() != rows.size()) {
        throw DimensionError(std::string(what) + " generator order has " + std::to_string(order.size()) +
                             " entries for " + std::to_string(rows.size()) + " generators");
    }
    std::vector<bool> seen(rows.size(), false);
    std::vector<F4Vector> out;
    for (auto i : order) {
        if (i >= rows.size() || seen[i]) {
            throw PreconditionError(std::string(what) + " generator order is not a permutation");
        }
        seen[i] = true;
        out.push_back(rows[i]);
    }
    return out;
}

}  // namespace

MeasurementScheme repetition_scheme(std::string name, const QuantumCode& base, std::size_t fold) {
    if (fold == 0) {
        throw PreconditionError("repetition fold must be >= 1");
    }
    auto rows = measured_rows(base);
    MeasurementScheme scheme{std::move(name), {}};
    scheme.parts.push_back(RepetitionPart{std::to_string(fold) + "-fold", {rows.begin(), rows.end()}, fold});
    return scheme;
}

MeasurementScheme sm_scheme(std::string name, const QuantumCode& base, const SmSchemeSpec& spec) {
    std::vector<F4Vector> xs, zs;
    for (const auto& r : measured_rows(base)) {
        if (is_x_type(r)) {
            xs.push_back(r);
        } else if (is_z_type(r)) {
            zs.push_back(r);
        } else {
            throw PreconditionError("per-type SM protection needs X-type or Z-type rows, got " + r.to_pauli());
        }
    }
    MeasurementScheme scheme{std::move(name), {}};
    auto add = [&](std::vector<F4Vector> rows, const BinaryLinearCode& code, const char* label) {
        if (rows.empty()) {
            return;
        }
        auto part_code = make_stabilizer(std::move(rows));
        scheme.parts.push_back(SmPart{label, build_qds(part_code, code), spec.decoder});
    };
    add(reorder(xs, spec.x_order, "X"), spec.x_code, "X");
    add(reorder(zs, spec.z_order, "Z"), spec.z_code, "Z");
    return scheme;
}

std::vector<std::string> scheme_names() {
    return {"fig1-shor-6fold", "fig1-shor-sm",  "fig1-bs-6fold", "fig1-bs-sm",
            "fig2-shor-204",   "fig2-shor-216", "fig2-bs-204",   "fig2-bs-216"};
}

MeasurementScheme build_scheme(std::string_view name, const std::optional<std::filesystem::path>& data_dir,
                               SmDecoder decoder) {
    std::string n(name);
    auto sm = [&](std::string_view code) { return sm_catalog(code, data_dir); };
    auto order = [](const std::array<std::size_t, 6>& o) { return std::vector<std::size_t>(o.begin(), o.end()); };
    if (name == "fig1-shor-6fold") return repetition_scheme(n, catalog("shor"), 6);
    if (name == "fig1-bs-6fold") return repetition_scheme(n, catalog("bacon-shor"), 6);
    if (name == "fig1-shor-sm") {
        return sm_scheme(n, catalog("shor"), {sm("cw-12-2-8"), sm("grassl-18-6-8"), {}, {}, decoder});
    }
    if (name == "fig1-bs-sm") {
        return sm_scheme(n, catalog("bacon-shor"), {sm("cw-12-2-8"), sm("cw-12-2-8"), {}, {}, decoder});
    }
    if (name == "fig2-shor-204") {
        return sm_scheme(n, catalog("shor"),
                         {sm("cw-17-2-11"), sm("grassl-25-6-11"), {}, order(kShorZOrderA), decoder});
    }
    if (name == "fig2-shor-216") {
        return sm_scheme(n, catalog("shor"),
                         {sm("cw-18-2-12"), sm("grassl-25-6-11"), {}, order(kShorZOrderB), decoder});
    }
    if (name == "fig2-bs-204") {
        return sm_scheme(n, catalog("bacon-shor"), {sm("cw-17-2-11"), sm("cw-17-2-11"), {}, {}, decoder});
    }
    if (name == "fig2-bs-216") {
        return sm_scheme(n, catalog("bacon-shor"), {sm("cw-18-2-12"), sm("cw-18-2-12"), {}, {}, decoder});
    }
    throw LookupError("unknown scheme '" + n + "'");
}

std::vector<MeasurementScheme> figure1_schemes(const std::optional<std::filesystem::path>& data_dir,
                                               SmDecoder decoder) {
    std::vector<MeasurementScheme> out;
    for (const char* name : {"fig1-shor-6fold", "fig1-shor-sm", "fig1-bs-6fold", "fig1-bs-sm"}) {
        out.push_back(build_scheme(name, data_dir, decoder));
    }
    return out;
}

std::vector<MeasurementScheme> figure2_schemes(const std::optional<std::filesystem::path>& data_dir,
                                               SmDecoder decoder) {
    std::vector<MeasurementScheme> out;
    for (const char* name : {"fig2-shor-204", "fig2-shor-216", "fig2-bs-204", "fig2-bs-216"}) {
        out.push_back(build_scheme(name, data_dir, decoder));
    }
    return out;
}

}  // namespace qdsc
