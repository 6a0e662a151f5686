#include "hodgelat/json_io.hpp"

#include <fstream>

namespace hodgelat {

Json json_int(const Int& v) {
    if (fits_double_exact(v)) return Json(v.get_si());
    return Json(to_string(v));
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_number_float())
        fail(ErrorCode::ParseError, "integer out of exact range; serialize it as a decimal string");
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::ParseError, "malformed integer string: " + j.get<std::string>());
        }
    }
    fail(ErrorCode::ParseError, "expected an integer (number or decimal string)");
}

Json json_rat(const Rat& v) { return Json(to_string(v)); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            Rat r(s);
            if (r.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator: " + s);
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::ParseError, "malformed rational string: " + s);
        }
    }
    fail(ErrorCode::ParseError, "expected a rational (\"p/q\" string or integer)");
}

namespace {

template <typename T, typename FromJson>
Matrix<T> matrix_from_json(const Json& j, FromJson&& from) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        fail(ErrorCode::ParseError, "expected a non-empty array of arrays");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    Matrix<T> out(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            fail(ErrorCode::ParseError, "ragged matrix rows");
        for (int c = 0; c < cols; ++c) out.at(i, c) = from(j[i][c]);
    }
    return out;
}

}  // namespace

Json int_matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
    return matrix_from_json<Int>(j, [](const Json& v) { return int_from_json(v); });
}

Json rat_matrix_to_json(const RatMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(json_rat(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix rat_matrix_from_json(const Json& j) {
    return matrix_from_json<Rat>(j, [](const Json& v) { return rat_from_json(v); });
}

std::vector<Int> int_vector_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) fail(ErrorCode::ParseError, "expected a non-empty array");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const Json& v : j) out.push_back(int_from_json(v));
    return out;
}

Json lattice_to_json(const Lattice& l) {
    Json out;
    if (l.label()) out["name"] = *l.label();
    out["gram"] = int_matrix_to_json(l.gram());
    return out;
}

Json lattice_to_json_canonical(const Lattice& l) {
    Json out;
    out["gram"] = int_matrix_to_json(l.gram());
    return out;
}

Lattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gram"))
        fail(ErrorCode::ParseError, "lattice document needs a \"gram\" field");
    std::optional<std::string> name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail(ErrorCode::ParseError, "lattice \"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    return make_lattice(int_matrix_from_json(j["gram"]), name);
}

namespace {

Json model_json(const HodgeLatticeModel& m, bool canonical) {
    Json out;
    out["lattice"] = canonical ? lattice_to_json_canonical(m.lattice) : lattice_to_json(m.lattice);
    out["endo_generator"] = rat_matrix_to_json(m.endo_generator);
    out["irreducible"] = m.irreducible_flag;
    out["k3_type"] = m.k3_type_flag;
    return out;
}

}  // namespace

Json model_to_json(const HodgeLatticeModel& m) { return model_json(m, false); }
Json model_to_json_canonical(const HodgeLatticeModel& m) { return model_json(m, true); }

HodgeLatticeModel model_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lattice") || !j.contains("endo_generator"))
        fail(ErrorCode::ParseError,
             "model document needs \"lattice\" and \"endo_generator\" fields");
    Lattice lat = lattice_from_json(j["lattice"]);
    RatMatrix gen = rat_matrix_from_json(j["endo_generator"]);
    bool irreducible = j.value("irreducible", true);
    bool k3_type = j.value("k3_type", true);
    return make_hodge_model(lat, gen, irreducible, k3_type);
}

K3SurfaceModel k3_model_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ns_basis"))
        fail(ErrorCode::ParseError, "K3 document needs an \"ns_basis\" field");
    Lattice ambient = j.contains("ambient") ? lattice_from_json(j["ambient"])
                                            : catalog(CatalogName::LambdaK3);
    IntMatrix ns = int_matrix_from_json(j["ns_basis"]);
    std::optional<RatMatrix> gen;
    if (j.contains("t_endo_generator")) gen = rat_matrix_from_json(j["t_endo_generator"]);
    return build_k3_model(ambient, ns, gen);
}

Json k3_model_to_json_canonical(const K3SurfaceModel& m) {
    Json out;
    out["ambient"] = lattice_to_json_canonical(m.ambient);
    out["ns_basis"] = int_matrix_to_json(m.ns_sub.basis);
    out["t_endo_generator"] = rat_matrix_to_json(m.t_model.endo_generator);
    return out;
}

Json inertia_to_json(const Inertia& s) {
    Json out = Json::array();
    out.push_back(s.positive);
    out.push_back(s.negative);
    if (s.zero != 0) out.push_back(s.zero);
    return out;
}

Json genus_to_json(const GenusInvariants& g) {
    Json out;
    out["rank"] = g.rank;
    out["signature"] = inertia_to_json(g.signature);
    out["disc"] = json_int(g.disc);
    Json factors = Json::array();
    for (const Int& d : g.invariant_factors) factors.push_back(json_int(d));
    out["invariant_factors"] = factors;
    if (g.fingerprint) {
        Json fp = Json::array();
        for (const Rat& q : *g.fingerprint) fp.push_back(json_rat(q));
        out["fingerprint"] = fp;
    } else {
        out["fingerprint"] = "omitted: group order exceeds the fingerprint bound";
    }
    return out;
}

Json isometry_verdict_to_json(const IsometryVerdict& v, int bound) {
    Json out;
    switch (v.state) {
        case IsometryVerdict::State::Isometric: out["state"] = "Isometric"; break;
        case IsometryVerdict::State::NotIsometric: out["state"] = "NotIsometric"; break;
        case IsometryVerdict::State::Unknown: out["state"] = "Unknown"; break;
    }
    out["reason"] = v.reason;
    out["bound"] = bound;
    if (v.witness) out["witness"] = int_matrix_to_json(*v.witness);
    return out;
}

Json embed_verdict_to_json(const EmbedVerdict& v) {
    Json out;
    out["result"] = v.embeds ? "embeds" : "inconclusive";
    out["reason"] = v.reason;
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open file: " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON in file: " + path);
    return j;
}

}  // namespace hodgelat
