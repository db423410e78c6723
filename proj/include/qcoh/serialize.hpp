#ifndef QCOH_SERIALIZE_HPP
#define QCOH_SERIALIZE_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcoh/catalog.hpp"

namespace qcoh {

using json = nlohmann::json;

namespace detail {

inline json rational_to_json(const Rational& r) { return format_rational(r); }

inline Rational rational_from_json(const json& j, const std::string& where) {
    if (!j.is_string()) throw SchemaError(where + ": rational must be a \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

inline json class_to_json(const CohClass& c) {
    json a = json::array();
    for (const auto& x : c.coeff) a.push_back(rational_to_json(x));
    return a;
}

inline CohClass class_from_json(const json& j, int n, const std::string& where) {
    if (!j.is_array() || int(j.size()) != n)
        throw SchemaError(where + ": expected an array of " + std::to_string(n) + " rationals");
    CohClass c(n);
    for (int i = 0; i < n; ++i) c[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
    return c;
}

inline json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ExactMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw SchemaError(where + ": expected a matrix");
    int rows = int(j.size());
    if (!j[0].is_array() || j[0].empty()) throw SchemaError(where + ": expected a matrix");
    int cols = int(j[0].size());
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || int(j[i].size()) != cols)
            throw SchemaError(where + ": ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = rational_from_json(j[i][c], where + " entry");
    }
    return m;
}

inline const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(where + ": missing required field '" + key + "'");
    return j.at(key);
}

inline int need_int(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer()) throw SchemaError(where + "." + key + ": expected an integer");
    return v.get<int>();
}

inline std::string need_str(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_string()) throw SchemaError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

inline std::vector<long> longs_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an integer array");
    std::vector<long> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw SchemaError(where + ": expected an integer array");
        out.push_back(x.get<long>());
    }
    return out;
}

}  // namespace detail

inline json entry_to_json(const ManifoldEntry& ent) {
    const QuantumSpec& q = ent.quantum_spec;
    const RingSpec& r = q.ring;
    json doc;

    json meta;
    meta["id"] = ent.id;
    meta["description"] = ent.description;
    meta["name"] = r.name;
    meta["dim"] = r.dim;
    if (r.fano_index) meta["fano_index"] = *r.fano_index;
    doc["meta"] = std::move(meta);

    json basis = json::array();
    for (const auto& el : r.basis.elements)
        basis.push_back(json{{"label", el.label}, {"degree", el.degree}});
    doc["basis"] = std::move(basis);

    json cup = json::array();
    for (const auto& [key, v] : r.cup.entries) {
        auto [i, j, k] = key;
        cup.push_back(json::array({i, j, k, detail::rational_to_json(v)}));
    }
    doc["cup"] = std::move(cup);
    doc["c1"] = detail::class_to_json(r.c1);

    json lat;
    lat["generators"] = q.lattice.generator_labels;
    lat["mori"] = q.lattice.mori_generators;
    json pairing;
    for (const auto& [i, row] : q.lattice.divisor_pairing) pairing[r.basis.label(i)] = row;
    lat["pairing"] = std::move(pairing);
    doc["lattice"] = std::move(lat);

    json gw;
    gw["style"] = q.gw.style == GWStyle::two_point ? "two_point" : "three_point";
    json entries = json::array();
    if (q.gw.style == GWStyle::two_point) {
        for (const auto& [key, v] : q.gw.two_point) {
            const auto& [d, idx] = key;
            entries.push_back(json{{"d", d.coords},
                                   {"i", std::vector<int>(idx.begin(), idx.end())},
                                   {"v", detail::rational_to_json(v)}});
        }
    } else {
        for (const auto& [key, v] : q.gw.three_point) {
            const auto& [d, idx] = key;
            entries.push_back(json{{"d", d.coords},
                                   {"i", std::vector<int>(idx.begin(), idx.end())},
                                   {"v", detail::rational_to_json(v)}});
        }
    }
    gw["entries"] = std::move(entries);
    doc["gw"] = std::move(gw);

    if (ent.distinguished_basis) {
        json db = json::array();
        for (const auto& c : *ent.distinguished_basis) db.push_back(detail::class_to_json(c));
        doc["distinguished_basis"] = std::move(db);
    }
    if (ent.expected) {
        const ExpectedResults& ex = *ent.expected;
        json e;
        if (ex.operator_matrix) e["operator_matrix"] = detail::matrix_to_json(*ex.operator_matrix);
        if (ex.positive_power) e["positive_power"] = *ex.positive_power;
        if (ex.odd_positive_power) e["odd_positive_power"] = *ex.odd_positive_power;
        if (ex.conjecture_o) e["conjecture_o"] = *ex.conjecture_o;
        if (ex.galkin) e["galkin"] = *ex.galkin;
        if (ex.galkin_equality) e["galkin_equality"] = *ex.galkin_equality;
        if (ex.exceeds_4sqrt2) e["exceeds_4sqrt2"] = *ex.exceeds_4sqrt2;
        doc["expected"] = std::move(e);
    }
    return doc;
}

// Canonical serialization: nlohmann keeps object keys sorted, and all
// containers above iterate deterministically, so identical entries produce
// byte-identical documents and export-load-export is a fixed point.
inline std::string export_entry(const ManifoldEntry& ent) { return entry_to_json(ent).dump(2) + "\n"; }

inline ManifoldEntry entry_from_json(const json& doc) {
    ManifoldEntry ent;
    QuantumSpec& q = ent.quantum_spec;
    RingSpec& r = q.ring;

    const json& meta = detail::need(doc, "meta", "document");
    ent.id = detail::need_str(meta, "id", "meta");
    ent.description = detail::need_str(meta, "description", "meta");
    r.name = detail::need_str(meta, "name", "meta");
    r.dim = detail::need_int(meta, "dim", "meta");
    if (meta.contains("fano_index")) {
        if (!meta["fano_index"].is_number_integer())
            throw SchemaError("meta.fano_index: expected an integer");
        r.fano_index = meta["fano_index"].get<int>();
    }

    const json& basis = detail::need(doc, "basis", "document");
    if (!basis.is_array() || basis.empty()) throw SchemaError("basis: expected a nonempty array");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::string where = "basis[" + std::to_string(i) + "]";
        r.basis.elements.push_back(
            {detail::need_str(basis[i], "label", where), detail::need_int(basis[i], "degree", where)});
    }
    int n = r.size();

    const json& cup = detail::need(doc, "cup", "document");
    if (!cup.is_array()) throw SchemaError("cup: expected an array of [i,j,k,\"v\"] rows");
    for (std::size_t t = 0; t < cup.size(); ++t) {
        std::string where = "cup[" + std::to_string(t) + "]";
        const json& row = cup[t];
        if (!row.is_array() || row.size() != 4 || !row[0].is_number_integer() ||
            !row[1].is_number_integer() || !row[2].is_number_integer())
            throw SchemaError(where + ": expected [i, j, k, \"v\"]");
        int i = row[0].get<int>(), j = row[1].get<int>(), k = row[2].get<int>();
        if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
            throw SchemaError(where + ": basis index out of range");
        r.cup.set(i, j, k, detail::rational_from_json(row[3], where));
    }
    r.c1 = detail::class_from_json(detail::need(doc, "c1", "document"), n, "c1");

    const json& lat = detail::need(doc, "lattice", "document");
    const json& gens = detail::need(lat, "generators", "lattice");
    if (!gens.is_array() || gens.empty())
        throw SchemaError("lattice.generators: expected a nonempty label array");
    for (const auto& g : gens) {
        if (!g.is_string()) throw SchemaError("lattice.generators: expected strings");
        q.lattice.generator_labels.push_back(g.get<std::string>());
    }
    q.lattice.rank = int(q.lattice.generator_labels.size());
    const json& mori = detail::need(lat, "mori", "lattice");
    if (!mori.is_array() || mori.empty()) throw SchemaError("lattice.mori: expected generator rows");
    for (std::size_t t = 0; t < mori.size(); ++t) {
        auto row = detail::longs_from_json(mori[t], "lattice.mori[" + std::to_string(t) + "]");
        if (int(row.size()) != q.lattice.rank)
            throw SchemaError("lattice.mori[" + std::to_string(t) + "]: wrong length");
        q.lattice.mori_generators.push_back(std::move(row));
    }
    const json& pairing = detail::need(lat, "pairing", "lattice");
    if (!pairing.is_object()) throw SchemaError("lattice.pairing: expected a label-keyed object");
    for (auto it = pairing.begin(); it != pairing.end(); ++it) {
        auto idx = r.basis.index_of(it.key());
        if (!idx) throw SchemaError("lattice.pairing: unknown basis label '" + it.key() + "'");
        auto row = detail::longs_from_json(it.value(), "lattice.pairing." + it.key());
        if (int(row.size()) != q.lattice.rank)
            throw SchemaError("lattice.pairing." + it.key() + ": wrong length");
        q.lattice.divisor_pairing[*idx] = std::move(row);
    }

    const json& gw = detail::need(doc, "gw", "document");
    std::string style = detail::need_str(gw, "style", "gw");
    if (style == "two_point")
        q.gw.style = GWStyle::two_point;
    else if (style == "three_point")
        q.gw.style = GWStyle::three_point;
    else
        throw SchemaError("gw.style: expected 'two_point' or 'three_point'");
    const json& entries = detail::need(gw, "entries", "gw");
    if (!entries.is_array()) throw SchemaError("gw.entries: expected an array");
    int arity = q.gw.style == GWStyle::two_point ? 2 : 3;
    for (std::size_t t = 0; t < entries.size(); ++t) {
        std::string where = "gw.entries[" + std::to_string(t) + "]";
        const json& e = entries[t];
        auto d = detail::longs_from_json(detail::need(e, "d", where), where + ".d");
        if (int(d.size()) != int(q.lattice.mori_generators.size()))
            throw SchemaError(where + ".d: wrong length");
        auto idx = detail::longs_from_json(detail::need(e, "i", where), where + ".i");
        if (int(idx.size()) != arity) throw SchemaError(where + ".i: expected " +
                                                        std::to_string(arity) + " indices");
        for (long i : idx)
            if (i < 0 || i >= n) throw SchemaError(where + ".i: basis index out of range");
        Rational v = detail::rational_from_json(detail::need(e, "v", where), where + ".v");
        if (arity == 2)
            q.gw.set2(CurveClass{std::move(d)}, int(idx[0]), int(idx[1]), std::move(v));
        else
            q.gw.set3(CurveClass{std::move(d)}, int(idx[0]), int(idx[1]), int(idx[2]),
                      std::move(v));
    }

    if (doc.contains("distinguished_basis")) {
        const json& db = doc["distinguished_basis"];
        if (!db.is_array() || int(db.size()) != n)
            throw SchemaError("distinguished_basis: expected " + std::to_string(n) + " classes");
        std::vector<CohClass> basis_classes;
        for (std::size_t t = 0; t < db.size(); ++t)
            basis_classes.push_back(detail::class_from_json(
                db[t], n, "distinguished_basis[" + std::to_string(t) + "]"));
        ent.distinguished_basis = std::move(basis_classes);
    }
    if (doc.contains("expected")) {
        const json& e = doc["expected"];
        if (!e.is_object()) throw SchemaError("expected: expected an object");
        ExpectedResults ex;
        if (e.contains("operator_matrix"))
            ex.operator_matrix = detail::matrix_from_json(e["operator_matrix"],
                                                          "expected.operator_matrix");
        if (e.contains("positive_power")) ex.positive_power = e["positive_power"].get<int>();
        if (e.contains("odd_positive_power"))
            ex.odd_positive_power = e["odd_positive_power"].get<int>();
        if (e.contains("conjecture_o")) ex.conjecture_o = e["conjecture_o"].get<bool>();
        if (e.contains("galkin")) ex.galkin = e["galkin"].get<bool>();
        if (e.contains("galkin_equality")) ex.galkin_equality = e["galkin_equality"].get<bool>();
        if (e.contains("exceeds_4sqrt2")) ex.exceeds_4sqrt2 = e["exceeds_4sqrt2"].get<bool>();
        ent.expected = std::move(ex);
    }
    return ent;
}

// Run the same structural audits the builtins satisfy; throws ValidationError
// naming every failed check.
inline void validate_entry(const ManifoldEntry& ent) {
    std::vector<std::string> problems;
    RingReport rr = validate_ring(ent.quantum_spec.ring);
    for (const auto& v : rr.violations) problems.push_back("ring: " + v);
    if (rr.pass()) {
        try {
            GWReport gr = audit_gw_table(ent.quantum_spec);
            for (const auto& v : gr.violations) problems.push_back("gw: " + v);
        } catch (const Error& e) {
            problems.push_back(std::string("gw: ") + e.what());
        }
    }
    if (!problems.empty()) {
        std::string msg = "entry '" + ent.id + "' failed validation:";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ValidationError(msg);
    }
}

inline ManifoldEntry load_entry_from_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    ManifoldEntry ent = entry_from_json(doc);
    validate_entry(ent);
    return ent;
}

inline ManifoldEntry load_entry(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw NotFoundError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_entry_from_string(buf.str());
}

// Id-or-path resolution: an existing file wins, then <QCOH_CATALOG_DIR>/<id>.json,
// then the builtin set.
inline ManifoldEntry resolve_entry(const std::string& id_or_path) {
    namespace fs = std::filesystem;
    if (fs::exists(id_or_path) && fs::is_regular_file(id_or_path)) return load_entry(id_or_path);
    if (const char* dir = std::getenv("QCOH_CATALOG_DIR")) {
        fs::path p = fs::path(dir) / (id_or_path + ".json");
        if (fs::exists(p)) return load_entry(p);
    }
    return builtin(id_or_path);
}

}  // namespace qcoh

#endif
