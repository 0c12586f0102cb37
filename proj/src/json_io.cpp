#include "linkcob/json_io.hpp"

#include "linkcob/errors.hpp"

#include <fstream>

namespace linkcob::jsonio {

namespace {
const Int kJsonSafe = Int(1) << 53;
}

json int_to_json(const Int& x) {
    if (abs_int(x) <= kJsonSafe) return json(x.convert_to<std::int64_t>());
    return json(x.str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty()) throw ParseError("integer string is empty");
        std::size_t start = s[0] == '-' ? 1 : 0;
        if (start == s.size()) throw ParseError("integer string '" + s + "' has no digits");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw ParseError("integer string '" + s + "' has non-digit characters");
        return Int(s);
    }
    if (j.is_number_float())
        throw ParseError("non-integral number in matrix; use a decimal string for big values");
    throw ParseError("expected an integer, got " + std::string(j.type_name()));
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j, std::size_t cols_when_empty) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    if (j.empty()) return IntMatrix(0, cols_when_empty);
    std::size_t rows = j.size();
    if (!j[0].is_array()) throw ParseError("matrix rows must be arrays");
    std::size_t cols = j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix rows have inconsistent lengths");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
    }
    return m;
}

json group_to_json(const abgroup::FgAbelianGroup& g) {
    json out;
    out["free_rank"] = g.free_rank();
    json tor = json::array();
    for (const Int& d : g.torsion()) tor.push_back(int_to_json(d));
    out["torsion"] = std::move(tor);
    return out;
}

abgroup::FgAbelianGroup group_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("group must be an object");
    std::size_t free_rank = 0;
    if (j.contains("free_rank")) {
        if (!j["free_rank"].is_number_integer() && !j["free_rank"].is_number_unsigned())
            throw ParseError("free_rank must be a non-negative integer");
        auto v = j["free_rank"].get<std::int64_t>();
        if (v < 0) throw ParseError("free_rank must be non-negative");
        free_rank = static_cast<std::size_t>(v);
    }
    std::vector<Int> torsion;
    if (j.contains("torsion")) {
        if (!j["torsion"].is_array()) throw ParseError("torsion must be an array");
        for (const json& d : j["torsion"]) torsion.push_back(int_from_json(d));
    }
    try {
        return abgroup::FgAbelianGroup(free_rank, std::move(torsion));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

json form_to_json(const forms::BilinearForm& form, const std::string& name) {
    json out;
    out["epsilon"] = form.epsilon();
    out["matrix"] = matrix_to_json(form.gram());
    if (!name.empty()) out["name"] = name;
    return out;
}

forms::BilinearForm form_from_json(const json& j, std::string* name_out) {
    if (!j.is_object()) throw ParseError("form file must be a JSON object");
    if (!j.contains("epsilon") || !j.contains("matrix"))
        throw ParseError("form file needs 'epsilon' and 'matrix'");
    if (!j["epsilon"].is_number_integer())
        throw ParseError("epsilon must be the integer +1 or -1");
    int eps = j["epsilon"].get<int>();
    IntMatrix m = matrix_from_json(j["matrix"]);
    if (m.rows() != m.cols()) throw ParseError("form matrix must be square");
    if (name_out && j.contains("name") && j["name"].is_string())
        *name_out = j["name"].get<std::string>();
    try {
        return forms::BilinearForm(std::move(m), eps);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

json submodule_to_json(const zlattice::Submodule& m) {
    json out;
    out["ambient_rank"] = m.ambient_rank();
    out["basis"] = matrix_to_json(m.basis());
    return out;
}

zlattice::Submodule submodule_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ambient_rank") || !j.contains("basis"))
        throw ParseError("witness file needs 'ambient_rank' and 'basis'");
    auto amb = j["ambient_rank"].get<std::int64_t>();
    if (amb < 0) throw ParseError("ambient_rank must be non-negative");
    IntMatrix basis = matrix_from_json(j["basis"], static_cast<std::size_t>(amb));
    try {
        return zlattice::Submodule::from_generators(static_cast<std::size_t>(amb), basis);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

json sequence_to_json(const exactlink::SeifertHomologyData& data) {
    json out;
    out["groups"]["HnK"] = group_to_json(data.hn_k());
    out["groups"]["HnF"] = group_to_json(data.hn_f());
    out["groups"]["HnFK"] = group_to_json(data.hn_fk());
    out["groups"]["Hn1K"] = group_to_json(data.hn1_k());
    out["maps"]["alpha"] = matrix_to_json(data.alpha().matrix());
    out["maps"]["beta"] = matrix_to_json(data.beta().matrix());
    out["maps"]["boundary"] = matrix_to_json(data.boundary().matrix());
    return out;
}

exactlink::SeifertHomologyData sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("groups") || !j.contains("maps"))
        throw ParseError("sequence file needs 'groups' and 'maps'");
    const json& g = j["groups"];
    const json& m = j["maps"];
    for (const char* key : {"HnK", "HnF", "HnFK", "Hn1K"})
        if (!g.contains(key)) throw ParseError(std::string("missing group '") + key + "'");
    for (const char* key : {"alpha", "beta", "boundary"})
        if (!m.contains(key)) throw ParseError(std::string("missing map '") + key + "'");
    abgroup::FgAbelianGroup hnk = group_from_json(g["HnK"]);
    abgroup::FgAbelianGroup hnf = group_from_json(g["HnF"]);
    abgroup::FgAbelianGroup hnfk = group_from_json(g["HnFK"]);
    abgroup::FgAbelianGroup hn1k = group_from_json(g["Hn1K"]);
    IntMatrix alpha = matrix_from_json(m["alpha"], hnk.n_coords());
    IntMatrix beta = matrix_from_json(m["beta"], hnf.n_coords());
    IntMatrix boundary = matrix_from_json(m["boundary"], hnfk.n_coords());
    try {
        return exactlink::SeifertHomologyData(hnk, hnf, hnfk, hn1k, alpha, beta, boundary);
    } catch (const DomainError& e) {
        throw ParseError(std::string("ill-defined sequence datum: ") + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON in '" + path + "'");
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

forms::BilinearForm read_form_file(const std::string& path, std::string* name_out) {
    return form_from_json(read_json_file(path), name_out);
}

zlattice::Submodule read_witness_file(const std::string& path) {
    return submodule_from_json(read_json_file(path));
}

exactlink::SeifertHomologyData read_sequence_file(const std::string& path) {
    return sequence_from_json(read_json_file(path));
}

}  // namespace linkcob::jsonio
