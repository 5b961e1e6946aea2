#include "nrt/json_io.hpp"

#include "nrt/errors.hpp"

namespace nrt {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw ParseError("malformed JSON input: " + what);
}

}  // namespace

Json field_to_json(const Field& f) {
    Json j;
    j["p"] = f.p();
    j["k"] = f.k();
    if (f.k() > 1) j["modulus"] = f.modulus();
    return j;
}

FieldPtr field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("k"))
        bad("field descriptor needs \"p\" and \"k\"");
    int p = j.at("p").get<int>();
    int k = j.at("k").get<int>();
    std::optional<std::vector<int>> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<int>>();
    return Field::make(p, k, modulus);
}

Json code_to_json(const LinearCode& c) {
    Json j;
    j["field"] = field_to_json(c.field());
    j["n"] = c.n();
    j["m"] = c.m();
    Json gens = Json::array();
    for (int i = 0; i < c.dim(); ++i) {
        Json row = Json::array();
        for (int pos = 0; pos < c.n() * c.m(); ++pos) row.push_back(c.generators().at(i, pos));
        gens.push_back(std::move(row));
    }
    j["generators"] = std::move(gens);
    return j;
}

LinearCode code_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("n") || !j.contains("m"))
        bad("code needs \"field\", \"n\", \"m\"");
    auto field = field_from_json(j.at("field"));
    int n = j.at("n").get<int>();
    int m = j.at("m").get<int>();
    if (n < 1 || m < 1) bad("code dimensions must be positive");
    std::vector<std::vector<uint32_t>> rows;
    if (j.contains("generators")) {
        for (const auto& row : j.at("generators")) {
            rows.push_back(row.get<std::vector<uint32_t>>());
        }
    }
    return LinearCode::from_generators(std::move(field), n, m, rows);
}

Json matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& jr : j) {
        if (!jr.is_array() || jr.empty()) bad("matrix row must be a non-empty array");
        std::vector<Rational> row;
        for (const auto& cell : jr) {
            if (cell.is_string())
                row.push_back(rat_parse(cell.get<std::string>()));
            else if (cell.is_number_integer())
                row.push_back(Rational(cell.get<long long>()));
            else
                bad("matrix entries must be rational strings or integers");
        }
        rows.push_back(std::move(row));
    }
    return RatMatrix::from_rows(rows);
}

std::vector<RatMatrix> group_generators_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators"))
        bad("group file needs a \"generators\" array");
    std::vector<RatMatrix> gens;
    for (const auto& jm : j.at("generators")) gens.push_back(matrix_from_json(jm));
    if (gens.empty()) bad("group file lists no generators");
    return gens;
}

}  // namespace nrt
