// Copyright 2026 The Schwinger Authors
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


#include "schwinger/json_io.h"

#include <cmath>
#include <cstdio>

namespace schwinger {

namespace {

void write(const nlohmann::json &doc, int indent, int depth, std::string &out) {
    const auto newline = [&](int level) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<size_t>(indent * level), ' ');
        }
    };
    switch (doc.type()) {
        case nlohmann::json::value_t::object: {
            if (doc.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto &[key, value] : doc.items()) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(depth + 1);
                out += nlohmann::json(key).dump();
                out += indent >= 0 ? ": " : ":";
                write(value, indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (doc.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto &value : doc) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(depth + 1);
                write(value, indent, depth + 1, out);
            }
            newline(depth);
            out += ']';
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double v = doc.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += doc.dump();
    }
}

}  // namespace

std::string dump_json(const nlohmann::json &doc, int indent) {
    std::string out;
    write(doc, indent, 0, out);
    out += '\n';
    return out;
}

}  // namespace schwinger
