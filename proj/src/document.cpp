// Copyright 2026 The modframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modframe/document.hpp"

#include <cmath>
#include <string>

#include <json.hpp>

#include "modframe/error.hpp"

namespace modframe {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& obj, const char* key) {
    if (!obj.is_object()) parse_fail("expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) parse_fail(std::string("missing field '") + key + "'");
    return *it;
}

const json& array_of(const json& v, const char* what) {
    if (!v.is_array()) parse_fail(std::string(what) + " must be an array");
    return v;
}

std::size_t count_of(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0) parse_fail(std::string(what) + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

double number_of(const json& v) {
    if (!v.is_number()) parse_fail("expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) parse_fail("numbers must be finite");
    return d;
}

Complex complex_of(const json& v) {
    if (!v.is_array() || v.size() != 2) parse_fail("complex numbers are [re, im] pairs");
    return {number_of(v[0]), number_of(v[1])};
}

// Negative zeros print as 0.0.
json complex_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json root_of(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(e.what());
    }
}

AlgebraShape shape_of(const json& root) {
    const json& dims = array_of(field(field(root, "algebra"), "block_dims"), "block_dims");
    std::vector<std::size_t> out;
    for (const auto& d : dims) out.push_back(count_of(d, "block dimension"));
    return AlgebraShape(std::move(out));
}

json shape_json(const AlgebraShape& shape) { return json{{"block_dims", shape.block_dims()}}; }

ComplexMatrix matrix_of(const json& v, std::size_t n) {
    array_of(v, "matrix");
    if (v.size() != n) throw Error(ErrorCode::DimensionError, "matrix must have " + std::to_string(n) + " rows");
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = array_of(v[i], "matrix row");
        if (row.size() != n) throw Error(ErrorCode::DimensionError, "matrix row must have " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = complex_of(row[j]);
    }
    return m;
}

AlgebraElement element_of(const json& v, const AlgebraShape& shape) {
    array_of(v, "algebra element");
    if (v.size() != shape.block_count()) {
        throw Error(ErrorCode::DimensionError, "element must have " + std::to_string(shape.block_count()) + " blocks");
    }
    std::vector<ComplexMatrix> blocks;
    for (std::size_t k = 0; k < shape.block_count(); ++k) blocks.push_back(matrix_of(v[k], shape.block_dim(k)));
    return AlgebraElement(shape, std::move(blocks));
}

json element_json(const AlgebraElement& a) {
    json blocks = json::array();
    for (const auto& b : a.blocks()) {
        json rows = json::array();
        for (std::size_t i = 0; i < b.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(complex_json(b(i, j)));
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    return blocks;
}

template <class Fn>
auto guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        parse_fail(e.what());
    }
}

}  // namespace

FrameDocument parse_frame_document(std::string_view text) {
    return guarded([&] {
        const json root = root_of(text);
        AlgebraShape shape = shape_of(root);
        const std::size_t rank = count_of(field(root, "module_rank"), "module_rank");
        if (rank == 0) throw Error(ErrorCode::DimensionError, "module_rank must be positive");
        std::vector<ModuleVector> vectors;
        for (const auto& v : array_of(field(root, "vectors"), "vectors")) {
            array_of(v, "vector");
            if (v.size() != rank) {
                throw Error(ErrorCode::DimensionError, "vector must have " + std::to_string(rank) + " components");
            }
            std::vector<AlgebraElement> comps;
            for (const auto& c : v) comps.push_back(element_of(c, shape));
            vectors.emplace_back(shape, comps);
        }
        return FrameDocument{std::move(shape), rank, std::move(vectors)};
    });
}

std::string frame_document_json(const AlgebraShape& shape, std::size_t rank, const std::vector<ModuleVector>& vectors) {
    json vs = json::array();
    for (const auto& v : vectors) {
        json comps = json::array();
        for (const auto& c : v.components()) comps.push_back(element_json(c));
        vs.push_back(std::move(comps));
    }
    return json{{"algebra", shape_json(shape)}, {"module_rank", rank}, {"vectors", std::move(vs)}}.dump();
}

ModuleOperator parse_operator_document(std::string_view text) {
    return guarded([&] {
        const json root = root_of(text);
        const AlgebraShape shape = shape_of(root);
        const std::size_t rows = count_of(field(root, "rows"), "rows");
        const std::size_t cols = count_of(field(root, "cols"), "cols");
        const json& entries = array_of(field(root, "entries"), "entries");
        if (entries.size() != rows) throw Error(ErrorCode::DimensionError, "entries must have " + std::to_string(rows) + " rows");
        std::vector<AlgebraElement> flat;
        for (const auto& row : entries) {
            array_of(row, "operator row");
            if (row.size() != cols) {
                throw Error(ErrorCode::DimensionError, "operator row must have " + std::to_string(cols) + " entries");
            }
            for (const auto& e : row) flat.push_back(element_of(e, shape));
        }
        return ModuleOperator(shape, rows, cols, flat);
    });
}

std::string operator_document_json(const ModuleOperator& t) {
    json rows = json::array();
    for (std::size_t p = 0; p < t.out_rank(); ++p) {
        json row = json::array();
        for (std::size_t q = 0; q < t.in_rank(); ++q) row.push_back(element_json(t.entry(p, q)));
        rows.push_back(std::move(row));
    }
    return json{{"algebra", shape_json(t.shape())}, {"rows", t.out_rank()}, {"cols", t.in_rank()}, {"entries", rows}}
        .dump();
}

std::vector<nonunital::TailSequence> parse_nonunital_document(std::string_view text) {
    return guarded([&] {
        const json root = root_of(text);
        std::vector<nonunital::TailSequence> out;
        for (const auto& el : array_of(field(root, "elements"), "elements")) {
            std::vector<Complex> prefix;
            for (const auto& z : array_of(field(el, "prefix"), "prefix")) prefix.push_back(complex_of(z));
            out.emplace_back(std::move(prefix), complex_of(field(el, "tail")));
        }
        return out;
    });
}

std::string nonunital_document_json(const std::vector<nonunital::TailSequence>& elements) {
    json els = json::array();
    for (const auto& e : elements) {
        json prefix = json::array();
        for (Complex z : e.prefix()) prefix.push_back(complex_json(z));
        els.push_back(json{{"prefix", std::move(prefix)}, {"tail", complex_json(e.tail())}});
    }
    return json{{"elements", std::move(els)}}.dump();
}

}  // namespace modframe
