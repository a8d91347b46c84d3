#include "pv/json_io.hpp"

#include <stdexcept>

namespace pv {

Json matrix_to_json(const Matrix& a) {
    Json rows = Json::array();
    for (unsigned i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < a.dim(); ++j) row.push_back(format_ratfunc(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const OperatorSpec& spec, const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix JSON must be a non-empty array of rows");
    unsigned m = static_cast<unsigned>(j.size());
    Matrix a(m);
    for (unsigned r = 0; r < m; ++r) {
        const Json& row = j.at(r);
        if (!row.is_array() || row.size() != m)
            throw std::invalid_argument("matrix JSON must be square");
        for (unsigned c = 0; c < m; ++c)
            a.at(r, c) = parse_ratfunc(spec, row.at(c).get<std::string>());
    }
    return a;
}

Json jet_to_json(const Jet& b) {
    Json j;
    j["order"] = b.order();
    Json mats = Json::array();
    for (unsigned k = 0; k <= b.order(); ++k) mats.push_back(matrix_to_json(b.comp(k)));
    j["matrices"] = std::move(mats);
    return j;
}

Jet jet_from_json(const OperatorSpec& spec, const Json& j) {
    unsigned order = j.at("order").get<unsigned>();
    const Json& mats = j.at("matrices");
    if (!mats.is_array() || mats.size() != order + 1)
        throw std::invalid_argument("jet JSON needs order+1 matrices");
    std::vector<Matrix> comps;
    for (const Json& mj : mats) comps.push_back(matrix_from_json(spec, mj));
    return Jet(std::move(comps));
}

Json block_to_json(const BlockMatrix& b) {
    Json j;
    j["order"] = b.order();
    j["dim"] = b.dim();
    j["flat"] = matrix_to_json(b.flatten());
    return j;
}

}  // namespace pv
