#pragma once

#include <k3lat/binform.hpp>
#include <k3lat/hodge.hpp>
#include <k3lat/lattice.hpp>
#include <k3lat/mukai.hpp>

#include <json.hpp>

#include <string>

namespace k3lat {

using nlohmann::json;

// Integers below 2^53 stay JSON numbers; larger ones become strings so no
// reader loses precision.
inline json int_to_json(const Int& v) {
    static const Int lim = Int(1) << 53;
    if (abs_int(v) < lim) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

// Rationals travel as "p/q" strings (plain integer string when q = 1).
inline json rat_to_json(const Rat& v) {
    if (is_integral(v)) return int_to_json(num(v));
    return json(num(v).str() + "/" + den(v).str());
}

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }
    throw std::invalid_argument("expected a rational \"p/q\" string or an integer");
}

inline json intmat_to_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMat intmat_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows ? j[0].size() : 0;
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
    }
    return m;
}

inline json ratmat_to_json(const RatMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RatMat ratmat_from_json(const json& j) {
    std::size_t rows = j.size();
    std::size_t cols = rows ? j[0].size() : 0;
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_from_json(j[i][c]);
    }
    return m;
}

inline std::vector<Int> intvec_from_json(const json& j) {
    std::vector<Int> v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

inline json intvec_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

inline json lattice_to_json(const Lattice& l) {
    return json{{"rank", l.rank()}, {"gram", intmat_to_json(l.gram)}};
}

// Accepts {"rank": n, "gram": [[...]]} or a standard name string
// ("E8neg", "U", "K3", "rank1:d").
inline Lattice lattice_from_json(const json& j) {
    if (j.is_string()) return standard(j.get<std::string>());
    if (!j.is_object() || !j.contains("gram"))
        throw std::invalid_argument("lattice: expected a name or an object with \"gram\"");
    Lattice l{intmat_from_json(j["gram"])};
    if (j.contains("rank") && j["rank"].get<std::size_t>() != l.rank())
        throw std::invalid_argument("lattice: rank field disagrees with the Gram matrix");
    return l;
}

inline json embedding_to_json(const Embedding& e) {
    return json{{"ambient", lattice_to_json(e.ambient)}, {"basis", intmat_to_json(e.basis)}};
}

inline Embedding embedding_from_json(const json& j) {
    return Embedding(lattice_from_json(j.at("ambient")), intmat_from_json(j.at("basis")));
}

inline json isometry_to_json(const RationalIsometry& iso) {
    return json{{"source", lattice_to_json(iso.source)},
                {"target", lattice_to_json(iso.target)},
                {"matrix", ratmat_to_json(iso.matrix)}};
}

inline RationalIsometry isometry_from_json(const json& j) {
    return RationalIsometry(lattice_from_json(j.at("source")), lattice_from_json(j.at("target")),
                            ratmat_from_json(j.at("matrix")));
}

inline json binform_to_json(const BinForm& f) {
    json a = json::array();
    for (const auto& c : f.c) a.push_back(rat_to_json(c));
    return a;
}

inline BinForm binform_from_json(const json& j, int degree) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(degree) + 1)
        throw std::invalid_argument("binary form: expected " + std::to_string(degree + 1) +
                                    " coefficients");
    std::vector<Rat> c;
    for (const auto& x : j) c.push_back(rat_from_json(x));
    return BinForm(degree, std::move(c));
}

inline json mukai_to_json(const MukaiVector& v) {
    return json{{"r", int_to_json(v.r)}, {"c1", intvec_to_json(v.c1)}, {"s", int_to_json(v.s)}};
}

inline MukaiVector mukai_from_json(const json& j) {
    return MukaiVector{int_from_json(j.at("r")), intvec_from_json(j.at("c1")),
                       int_from_json(j.at("s"))};
}

} // namespace k3lat
