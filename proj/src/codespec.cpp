/**************************************************************************
 * codespec.cpp
 *
 * Copyright 2026 The grshull Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "grshull/codespec.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace grshull {

namespace {

struct Value {
    std::string_view text;
    std::size_t line = 0;
    std::size_t column = 0;  // 1-based column of text.front()
};

[[noreturn]] void fail_at(std::size_t line, std::size_t column, const std::string& what) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Trims v in place and advances col by the number of leading blanks removed.
std::string_view trim_at(std::string_view v, std::size_t& col) {
    while (!v.empty() && is_space(v.front())) {
        v.remove_prefix(1);
        ++col;
    }
    while (!v.empty() && is_space(v.back()))
        v.remove_suffix(1);
    return v;
}

long long parse_integer(const Value& val, const char* key) {
    long long out = 0;
    auto [p, ec] = std::from_chars(val.text.data(), val.text.data() + val.text.size(), out);
    if (ec != std::errc() || p != val.text.data() + val.text.size())
        fail_at(val.line, val.column, std::string("expected an integer for '") + key + "', got '" + std::string(val.text) + "'");
    return out;
}

std::vector<Elem> parse_list(const Field& f, const Value& val, const char* key) {
    std::string_view t = val.text;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        fail_at(val.line, val.column, std::string("expected '[e, e, ...]' for '") + key + "'");
    std::vector<Elem> out;
    std::size_t pos = 1;
    const std::size_t end = t.size() - 1;
    if (t.substr(1, end - 1).find_first_not_of(" \t") == std::string_view::npos)
        return out;
    while (pos <= end) {
        std::size_t comma = t.find(',', pos);
        if (comma == std::string_view::npos || comma > end)
            comma = end;
        std::size_t col = val.column + pos;
        std::string_view item = trim_at(t.substr(pos, comma - pos), col);
        if (item.empty())
            fail_at(val.line, col, std::string("empty element in '") + key + "'");
        try {
            out.push_back(f.parse(item));
        } catch (const Error& e) {
            fail_at(val.line, col, e.what());
        }
        pos = comma + 1;
    }
    return out;
}

}  // namespace

CodeSpec parse_code_spec(std::string_view text) {
    std::map<std::string, Value> values;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        ++line_no;
        start = nl + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t col = 1;
        line = trim_at(line, col);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos)
            fail_at(line_no, col, "expected 'key = value'");
        std::size_t key_col = col;
        std::string key(trim_at(line.substr(0, eq), key_col));
        if (key != "q" && key != "alpha" && key != "v" && key != "k" && key != "s")
            fail_at(line_no, key_col, "unknown key '" + key + "'");
        if (values.count(key))
            fail_at(line_no, key_col, "duplicate key '" + key + "'");
        std::size_t val_col = col + eq + 1;
        std::string_view val = trim_at(line.substr(eq + 1), val_col);
        if (val.empty())
            fail_at(line_no, val_col, "missing value for '" + key + "'");
        values[key] = Value{val, line_no, val_col};
        if (nl == text.size())
            break;
    }

    for (const char* required : {"q", "alpha", "k"})
        if (!values.count(required))
            fail_at(line_no, 1, std::string("missing key '") + required + "'");
    if (!values.count("v") && !values.count("s"))
        fail_at(line_no, 1, "one of 'v' or 's' is required");

    CodeSpec spec;
    const Value& qv = values["q"];
    long long q = parse_integer(qv, "q");
    try {
        if (q < 2 || q > static_cast<long long>(Field::kMaxOrder))
            throw Error(ErrorKind::UnsupportedSize, "q = " + std::to_string(q) + " is out of range");
        spec.field = Field::of_order(static_cast<std::uint32_t>(q));
    } catch (const Error& e) {
        fail_at(qv.line, qv.column, e.what());
    }
    spec.alpha = parse_list(*spec.field, values["alpha"], "alpha");
    if (values.count("v"))
        spec.v = parse_list(*spec.field, values["v"], "v");
    const Value& kv = values["k"];
    long long k = parse_integer(kv, "k");
    if (k < 0 || k > 1 << 20)
        fail_at(kv.line, kv.column, "k = " + std::to_string(k) + " is out of range");
    spec.k = static_cast<int>(k);
    if (values.count("s")) {
        const Value& sv = values["s"];
        try {
            spec.s = Poly::parse(spec.field, sv.text);
        } catch (const Error& e) {
            fail_at(sv.line, sv.column, e.what());
        }
    }
    return spec;
}

CodeSpec load_code_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_spec(buf.str());
}

GrsCode build_code(const CodeSpec& spec) {
    if (spec.v)
        return GrsCode::create(spec.field, spec.alpha, *spec.v, spec.k, spec.s);
    return GrsCode::from_column_poly(spec.field, spec.alpha, *spec.s, spec.k);
}

std::string format_code_spec(const GrsCode& code) {
    const Field& f = *code.field();
    std::ostringstream os;
    auto list = [&](const std::vector<Elem>& xs) {
        os << "[";
        for (std::size_t i = 0; i < xs.size(); ++i)
            os << (i ? ", " : "") << f.format(xs[i]);
        os << "]\n";
    };
    os << "q = " << f.order() << "\n";
    os << "alpha = ";
    list(code.alpha());
    os << "v = ";
    list(code.v());
    os << "k = " << code.k() << "\n";
    return os.str();
}

}  // namespace grshull
