#include "commalg/io.hpp"

#include <algorithm>
#include <memory>

namespace commalg {

namespace {

[[noreturn]] void field_error(const std::string& msg) { throw ParseError(ErrorKind::FieldError, msg); }
[[noreturn]] void spec_error(const std::string& msg) { throw Error(ErrorKind::InvalidSpec, msg); }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) field_error("scalars must be JSON strings, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        field_error(e.what());
    }
}

std::size_t size_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) spec_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

}  // namespace

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, col] = line_column(text, byte);
        throw ParseError(ErrorKind::ParseError, e.what(), line, col);
    }
}

Json field_to_json(FieldTag field) {
    if (field.is_rational()) return "Q";
    return Json{{"cyclotomic", field.conductor}};
}

FieldTag field_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return FieldTag::rational();
    if (j.is_object() && j.size() == 1 && j.contains("cyclotomic") && j["cyclotomic"].is_number_integer()) {
        const auto q = j["cyclotomic"].get<long long>();
        if (q < 1 || q > 10000) field_error("cyclotomic conductor out of range: " + std::to_string(q));
        return FieldTag::cyclotomic(static_cast<int>(q));
    }
    field_error("field must be \"Q\" or {\"cyclotomic\": q}, got " + j.dump());
}

Json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return to_string(s.rational());
    Json arr = Json::array();
    for (const auto& c : s.cyclo().coeffs()) arr.push_back(to_string(c));
    return arr;
}

Scalar scalar_from_json(const Json& j, FieldTag field) {
    if (j.is_array()) {
        if (field.is_rational()) field_error("coefficient arrays need a cyclotomic field");
        std::vector<Rational> coeffs;
        for (const auto& c : j) coeffs.push_back(rational_from_json(c));
        return Scalar(cyclo_reduce(coeffs, field.conductor));
    }
    return Scalar::from_rational(rational_from_json(j), field);
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("rows"))
        field_error("matrix JSON needs \"field\" and \"rows\"");
    const FieldTag field = field_from_json(j["field"]);
    const Json& rows = j["rows"];
    if (!rows.is_array() || rows.empty()) field_error("\"rows\" must be a nonempty array");
    std::vector<std::vector<Scalar>> table;
    for (const auto& row : rows) {
        if (!row.is_array()) field_error("each row must be an array");
        auto& out = table.emplace_back();
        for (const auto& s : row) out.push_back(scalar_from_json(s, field));
        if (out.size() != table.front().size())
            throw ParseError(ErrorKind::RaggedRows, "row " + std::to_string(table.size() - 1) + " has length " +
                                                        std::to_string(out.size()) + ", expected " +
                                                        std::to_string(table.front().size()));
    }
    if (table.front().empty()) field_error("rows must be nonempty");
    Matrix m(table.size(), table.front().size(), field);
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t c = 0; c < table[i].size(); ++c) m(i, c) = table[i][c];
    return m;
}

Matrix parse_matrix(std::string_view text) { return matrix_from_json(parse_json_text(text)); }

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["field"] = field_to_json(m.field());
    out["rows"] = std::move(rows);
    return out;
}

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(scalar_to_json(c));
    return arr;
}

Poly poly_from_json(const Json& j, FieldTag field) {
    if (!j.is_array()) field_error("polynomials must be coefficient arrays");
    std::vector<Scalar> coeffs;
    for (const auto& c : j) coeffs.push_back(scalar_from_json(c, field));
    return Poly(std::move(coeffs), field);
}

Json to_json(const StructureReport& r) {
    Json factors = Json::array();
    for (const auto& f : r.invariant_factors) factors.push_back(to_json(f));
    Json out;
    out["char_poly"] = to_json(r.char_poly);
    out["min_poly"] = to_json(r.min_poly);
    out["invariant_factors"] = std::move(factors);
    out["is_balanced"] = r.is_balanced;
    out["is_nilpotent"] = r.is_nilpotent;
    out["min_equals_char"] = r.min_equals_char;
    return out;
}

Json to_json(CongruenceClass c) {
    switch (c.kind()) {
    case CongruenceClass::Kind::General: return "general";
    case CongruenceClass::Kind::Odd: return "odd";
    case CongruenceClass::Kind::QClass: return Json{{"q", c.modulus()}};
    }
    return nullptr;
}

CongruenceClass class_from_json(const Json& j) {
    if (j == "general") return CongruenceClass::general();
    if (j == "odd") return CongruenceClass::odd();
    if (j.is_object() && j.contains("q") && j["q"].is_number_integer())
        return CongruenceClass::qclass(j["q"].get<int>());
    field_error("unknown congruence class " + j.dump());
}

Json to_json(const Certificate& c) {
    Json out;
    out["f"] = to_json(c.f);
    out["g"] = to_json(c.g);
    out["class"] = to_json(c.cls);
    return out;
}

Json to_json(const SubspaceBasis& s, bool with_basis) {
    Json out;
    out["dim"] = s.dim();
    if (with_basis) {
        Json basis = Json::array();
        for (const auto& b : s.basis()) basis.push_back(to_json(b));
        out["basis"] = std::move(basis);
    }
    return out;
}

GenSpec genspec_from_json(const Json& j, std::uint64_t default_seed) {
    if (!j.is_object()) spec_error("generator spec must be a JSON object");
    GenSpec spec;
    spec.seed = default_seed;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) spec_error("seed must be a non-negative integer");
        spec.seed = j["seed"].get<std::uint64_t>();
    }
    const char* keys[] = {"nilpotent_blocks", "companion", "diag_rational", "block_diag", "conjugate_by"};
    int found = 0;
    for (const char* k : keys) found += j.contains(k) ? 1 : 0;
    if (found != 1) spec_error("generator spec needs exactly one profile key");
    for (const auto& [key, _] : j.items())
        if (key != "size" && key != "seed" && std::find(std::begin(keys), std::end(keys), key) == std::end(keys))
            spec_error("unknown generator spec key \"" + key + "\"");

    std::size_t inferred = 0;
    try {
        if (j.contains("nilpotent_blocks")) {
            NilpotentBlocks p;
            for (const auto& s : j["nilpotent_blocks"]) {
                p.sizes.push_back(size_from_json(s, "block size"));
                inferred += p.sizes.back();
            }
            spec.profile = std::move(p);
        } else if (j.contains("companion")) {
            CompanionProfile p{poly_from_json(j["companion"], FieldTag::rational())};
            inferred = p.poly.degree() > 0 ? static_cast<std::size_t>(p.poly.degree()) : 0;
            spec.profile = std::move(p);
        } else if (j.contains("diag_rational")) {
            DiagRational p;
            for (const auto& v : j["diag_rational"]) p.values.push_back(rational_from_json(v));
            inferred = p.values.size();
            spec.profile = std::move(p);
        } else if (j.contains("block_diag")) {
            BlockDiagProfile p;
            std::uint64_t child = spec.seed;
            for (const auto& part : j["block_diag"]) {
                p.parts.push_back(genspec_from_json(part, ++child));
                inferred += p.parts.back().size;
            }
            spec.profile = std::move(p);
        } else {
            const Json& c = j["conjugate_by"];
            if (!c.is_object() || !c.contains("inner")) spec_error("conjugate_by needs an \"inner\" spec");
            ConjugateBy p;
            p.height = c.value("height", 3LL);
            p.inner = std::make_shared<const GenSpec>(genspec_from_json(c["inner"], spec.seed + 1));
            inferred = p.inner->size;
            spec.profile = std::move(p);
        }
    } catch (const nlohmann::json::exception& e) {
        spec_error(std::string("malformed generator spec: ") + e.what());
    } catch (const ParseError& e) {
        spec_error(e.what());
    }
    spec.size = j.contains("size") ? size_from_json(j["size"], "size") : inferred;
    return spec;
}

}  // namespace commalg
