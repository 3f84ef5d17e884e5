#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "btx/algebra.hpp"
#include "btx/block.hpp"
#include "btx/generate.hpp"
#include "btx/normality.hpp"
#include "btx/toeplitz.hpp"

namespace btx {

// ordered_json keeps key order stable, which the byte-identical report
// guarantee relies on
using json = nlohmann::ordered_json;

/// Input that fails to parse as the expected shape; the message carries the
/// field path.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline ParseError parse_fail(const std::string& path, const std::string& what) {
    return ParseError("at " + (path.empty() ? std::string("<root>") : path) + ": " + what);
}
}  // namespace detail

inline json to_json(const GaussianRational& s) { return s.str(); }

inline GaussianRational scalar_from_json(const json& j, const std::string& path) {
    if (!j.is_string()) throw detail::parse_fail(path, "expected a scalar string");
    try {
        return GaussianRational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw detail::parse_fail(path, e.what());
    }
}

inline json to_json(const DenseMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline DenseMat dense_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty())
        throw detail::parse_fail(path, "expected a nonempty array of rows");
    const std::size_t d = j.size();
    DenseMat m(d);
    for (std::size_t i = 0; i < d; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != d)
            throw detail::parse_fail(path + "[" + std::to_string(i) + "]",
                                     "expected a row of " + std::to_string(d) + " scalars");
        for (std::size_t c = 0; c < d; ++c)
            m(i, c) = scalar_from_json(row[c], path + "[" + std::to_string(i) + "][" +
                                                   std::to_string(c) + "]");
    }
    return m;
}

inline json to_json(const BlockMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.blocks(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.blocks(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline BlockMatrix block_from_json(const json& j, const std::string& path = "") {
    if (!j.is_array() || j.empty())
        throw detail::parse_fail(path, "expected a nonempty array of block rows");
    const std::size_t n = j.size();
    std::size_t d = 0;
    std::vector<DenseMat> blocks;
    blocks.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != n)
            throw detail::parse_fail(path + "[" + std::to_string(i) + "]",
                                     "expected " + std::to_string(n) + " blocks per row");
        for (std::size_t c = 0; c < n; ++c) {
            DenseMat b = dense_from_json(
                row[c], path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
            if (d == 0) d = b.dim();
            if (b.dim() != d)
                throw detail::parse_fail(path + "[" + std::to_string(i) + "][" +
                                             std::to_string(c) + "]",
                                         "inconsistent block dimension");
            blocks.push_back(std::move(b));
        }
    }
    BlockMatrix m(n, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) m(i, c) = blocks[i * n + c];
    return m;
}

inline json to_json(const BlockColumn& v) {
    json out = json::array();
    for (std::size_t k = 0; k < v.blocks(); ++k) out.push_back(to_json(v[k]));
    return out;
}

inline json to_json(const ToeplitzSpec& s) {
    json lower = json::array(), upper = json::array();
    for (std::size_t k = 1; k < s.blocks(); ++k) {
        lower.push_back(to_json(s.lower(k)));
        upper.push_back(to_json(s.upper(k)));
    }
    return json{{"n", s.blocks()},
                {"d", s.block_dim()},
                {"diag", to_json(s.diag())},
                {"lower", std::move(lower)},
                {"upper", std::move(upper)}};
}

inline ToeplitzSpec spec_from_json(const json& j, const std::string& path = "") {
    if (!j.is_object()) throw detail::parse_fail(path, "expected a spec object");
    for (const char* key : {"n", "d", "diag", "lower", "upper"})
        if (!j.contains(key)) throw detail::parse_fail(path, std::string("missing field '") + key + "'");
    if (!j["n"].is_number_unsigned() || !j["d"].is_number_unsigned())
        throw detail::parse_fail(path, "'n' and 'd' must be nonnegative integers");
    const std::size_t n = j["n"].get<std::size_t>(), d = j["d"].get<std::size_t>();
    if (n < 1 || d < 1) throw detail::parse_fail(path, "'n' and 'd' must be positive");
    DenseMat diag = dense_from_json(j["diag"], path + ".diag");
    if (diag.dim() != d) throw detail::parse_fail(path + ".diag", "dimension differs from 'd'");
    auto read_vec = [&](const char* key) {
        const json& arr = j[key];
        if (!arr.is_array() || arr.size() != n - 1)
            throw detail::parse_fail(path + "." + key,
                                     "expected " + std::to_string(n - 1) + " blocks");
        std::vector<DenseMat> out;
        for (std::size_t k = 0; k < arr.size(); ++k) {
            DenseMat b = dense_from_json(arr[k], path + "." + key + "[" + std::to_string(k) + "]");
            if (b.dim() != d)
                throw detail::parse_fail(path + "." + key + "[" + std::to_string(k) + "]",
                                         "dimension differs from 'd'");
            out.push_back(std::move(b));
        }
        return out;
    };
    return ToeplitzSpec(n, diag, read_vec("lower"), read_vec("upper"));
}

/// Algebra descriptors:
///   {"kind":"diagonal","d":k}
///   {"kind":"circulant","d":k}
///   {"kind":"poly","generator":[[...]]}
///   {"kind":"explicit","basis":[[[...]],...]}
inline CommAlgebra algebra_from_json(const json& j, const std::string& path = "") {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw detail::parse_fail(path, "expected an algebra descriptor with a 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    auto need_d = [&]() {
        if (!j.contains("d") || !j["d"].is_number_unsigned() || j["d"].get<std::size_t>() < 1)
            throw detail::parse_fail(path, "'" + kind + "' descriptor needs a positive 'd'");
        return j["d"].get<std::size_t>();
    };
    if (kind == "diagonal") {
        const std::size_t d = need_d();
        std::vector<DenseMat> basis;
        for (std::size_t k = 0; k < d; ++k) basis.push_back(DenseMat::unit(d, k, k));
        return CommAlgebra::verify(std::move(basis));
    }
    if (kind == "circulant") {
        return CommAlgebra::from_generators({DenseMat::cyclic_shift(need_d())});
    }
    if (kind == "poly") {
        if (!j.contains("generator"))
            throw detail::parse_fail(path, "'poly' descriptor needs a 'generator'");
        return CommAlgebra::from_generators(
            {dense_from_json(j["generator"], path + ".generator")});
    }
    if (kind == "explicit") {
        if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
            throw detail::parse_fail(path, "'explicit' descriptor needs a nonempty 'basis'");
        std::vector<DenseMat> basis;
        for (std::size_t k = 0; k < j["basis"].size(); ++k)
            basis.push_back(
                dense_from_json(j["basis"][k], path + ".basis[" + std::to_string(k) + "]"));
        return CommAlgebra::verify(std::move(basis));
    }
    throw detail::parse_fail(path, "unknown algebra kind '" + kind + "'");
}

inline json to_json(const NormalityReport& r) {
    json witness = nullptr;
    if (r.criterion_witness)
        witness = json::array({r.criterion_witness->first, r.criterion_witness->second});
    return json{{"is_normal", r.is_normal},
                {"criterion_witness", std::move(witness)},
                {"criterion_matches_defect", r.criterion_matches_defect},
                {"defect", to_json(r.defect)}};
}

inline const char* to_string(ShiftCommutant c) {
    switch (c) {
        case ShiftCommutant::lower_toeplitz: return "lower_toeplitz";
        case ShiftCommutant::upper_toeplitz: return "upper_toeplitz";
        case ShiftCommutant::both: return "both";
        case ShiftCommutant::neither: return "neither";
    }
    return "?";
}

inline const char* to_string(ShiftXCommutant c) {
    switch (c) {
        case ShiftXCommutant::sx_commutant: return "sx_commutant";
        case ShiftXCommutant::sx_star_commutant: return "sx_star_commutant";
        case ShiftXCommutant::both: return "both";
        case ShiftXCommutant::neither: return "neither";
    }
    return "?";
}

}  // namespace btx
