#include "siegel/json_io.hpp"

#include <regex>

namespace siegel {

json to_json(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

json to_json(const Rat& q) { return json(rat_str(q)); }

json to_json(const IMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const arith::ExactScalar& s) {
    return json{{"a", rat_str(s.a)}, {"b", rat_str(s.b)}, {"p", s.p}};
}

json to_json(const arith::GaussExpr& g) {
    return json{{"r0", rat_str(g.r0)}, {"r1", rat_str(g.r1)}, {"p", g.p}};
}

json to_json(const QMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) {
            const Rat& q = m.at(i, j);
            if (q.get_den() == 1) row.push_back(to_json(q.get_num()));
            else row.push_back(rat_str(q));
        }
        rows.push_back(row);
    }
    return rows;
}

json to_json(const lat::Sublattice& s) {
    return json{{"n", s.H.rows},
                {"gram", to_json(s.gram_omega)},
                {"H", to_json(s.H)},
                {"type", {s.type[0], s.type[1], s.type[2]}}};
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int((long)j.get<int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw domain_error("int_from_json: expected integer or string");
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat((long)j.get<int64_t>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw domain_error("rat_from_json: expected integer or \"num/den\" string");
}

IMat imat_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("imat_from_json: expected array of arrays");
    int rows = (int)j.size();
    int cols = rows ? (int)j[0].size() : 0;
    IMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if ((int)j[i].size() != cols) throw domain_error("imat_from_json: ragged rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j[i][c]);
    }
    return m;
}

arith::ExactScalar scalar_from_json(const json& j) {
    return arith::ExactScalar(j.at("p").get<long>(), rat_from_json(j.at("a")),
                              rat_from_json(j.at("b")));
}

IMat parse_gram(const std::string& text) {
    static const std::regex scaled_id(R"(^(\d+)I(\d+)$)");
    std::smatch m;
    if (std::regex_match(text, m, scaled_id)) {
        long c = std::stol(m[1]);
        int n = std::stoi(m[2]);
        return IMat::identity(n).scaled(Int(c));
    }
    if (text.rfind("diag:", 0) == 0) {
        std::vector<Int> d;
        std::string rest = text.substr(5);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            d.push_back(Int(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return IMat::diag(d);
    }
    return imat_from_json(json::parse(text));
}

}  // namespace siegel
