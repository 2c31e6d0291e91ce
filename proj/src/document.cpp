#include "biframe/document.hpp"

#include <fstream>
#include <sstream>

#include "biframe/errors.hpp"

namespace biframe {

using nlohmann::json;

namespace {

constexpr int kDocumentVersion = 1;

[[noreturn]] void fail_field(const std::string& field, const std::string& why) {
    throw ValidationError(field + ": " + why);
}

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known) fail_field(where.empty() ? it.key() : where + "." + it.key(),
                               "unknown field");
    }
}

Scalar parse_scalar(const json& v, Field field, const std::string& where) {
    if (v.is_number()) return Scalar(v.get<double>(), 0.0);
    if (v.is_array()) {
        if (field == Field::Real)
            fail_field(where, "complex value in a real space");
        if (v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            fail_field(where, "complex value must be a [re, im] number pair");
        return Scalar(v[0].get<double>(), v[1].get<double>());
    }
    fail_field(where, "expected a number or [re, im] pair");
}

json dump_scalar(const Scalar& v, Field field) {
    if (field == Field::Real) return json(v.real());
    return json::array({v.real(), v.imag()});
}

Matrix parse_family(const json& rows, Field field, int dim, std::size_t atom_count,
                    const std::string& name) {
    if (!rows.is_array()) fail_field(name, "expected a list of vectors");
    if (rows.empty()) fail_field(name, "vector list is empty");
    if (rows.size() != atom_count)
        fail_field(name, "holds " + std::to_string(rows.size()) + " vectors but measure has " +
                             std::to_string(atom_count) + " atoms");
    Matrix cols(dim, static_cast<Eigen::Index>(atom_count));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const json& vec = rows[k];
        const std::string where = name + "[" + std::to_string(k) + "]";
        if (!vec.is_array()) fail_field(where, "expected a list of scalars");
        if (vec.size() != static_cast<std::size_t>(dim))
            fail_field(where, "vector length " + std::to_string(vec.size()) +
                                  " does not match space dim " + std::to_string(dim));
        for (std::size_t i = 0; i < vec.size(); ++i)
            cols(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                parse_scalar(vec[i], field, where + "[" + std::to_string(i) + "]");
    }
    return cols;
}

} // namespace

LoadedDocument document_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("document: top level must be an object");
    require_keys(j, "", {"version", "space", "measure", "nodes", "F", "G", "symbol", "metadata"});

    if (!j.contains("version") || !j["version"].is_number_integer())
        fail_field("version", "missing or not an integer");
    if (j["version"].get<int>() != kDocumentVersion)
        fail_field("version", "unsupported document version " + j["version"].dump());

    if (!j.contains("space") || !j["space"].is_object())
        fail_field("space", "missing or not an object");
    require_keys(j["space"], "space", {"dim", "field"});
    if (!j["space"].contains("dim") || !j["space"]["dim"].is_number_integer())
        fail_field("space.dim", "missing or not an integer");
    const int dim = j["space"]["dim"].get<int>();
    if (dim < 1) fail_field("space.dim", "must be >= 1");
    if (!j["space"].contains("field") || !j["space"]["field"].is_string())
        fail_field("space.field", "missing or not a string");
    const std::string field_name = j["space"]["field"].get<std::string>();
    Field field;
    if (field_name == "real") field = Field::Real;
    else if (field_name == "complex") field = Field::Complex;
    else fail_field("space.field", "must be \"real\" or \"complex\"");

    if (!j.contains("measure") || !j["measure"].is_array())
        fail_field("measure", "missing or not a list of weights");
    if (j["measure"].empty()) fail_field("measure", "weight list is empty");
    std::vector<Atom> atoms;
    atoms.reserve(j["measure"].size());
    for (std::size_t k = 0; k < j["measure"].size(); ++k) {
        const json& w = j["measure"][k];
        const std::string where = "measure[" + std::to_string(k) + "]";
        if (!w.is_number()) fail_field(where, "weight must be a number");
        const double weight = w.get<double>();
        if (!(weight > 0.0)) fail_field(where, "weight must be positive");
        atoms.push_back({std::to_string(k), weight});
    }

    std::optional<std::vector<double>> nodes;
    if (j.contains("nodes")) {
        if (!j["nodes"].is_array() || j["nodes"].size() != atoms.size())
            fail_field("nodes", "must be a list with one coordinate per atom");
        nodes.emplace();
        for (const json& x : j["nodes"]) {
            if (!x.is_number()) fail_field("nodes", "coordinates must be numbers");
            nodes->push_back(x.get<double>());
        }
    }

    auto mu = std::make_shared<const AtomSpace>(std::move(atoms), std::move(nodes));
    const Space space{dim, field};

    if (!j.contains("F")) fail_field("F", "missing");
    if (!j.contains("G")) fail_field("G", "missing");
    Matrix f = parse_family(j["F"], field, dim, mu->size(), "F");
    Matrix g = parse_family(j["G"], field, dim, mu->size(), "G");

    std::optional<SymbolFunction> symbol;
    if (j.contains("symbol")) {
        if (!j["symbol"].is_array() || j["symbol"].size() != mu->size())
            fail_field("symbol", "must be a list with one scalar per atom");
        std::vector<Scalar> values;
        values.reserve(mu->size());
        for (std::size_t k = 0; k < j["symbol"].size(); ++k)
            values.push_back(parse_scalar(j["symbol"][k], field,
                                          "symbol[" + std::to_string(k) + "]"));
        symbol.emplace(mu, std::move(values));
    }

    std::string name, description;
    if (j.contains("metadata") && j["metadata"].is_object()) {
        const json& meta = j["metadata"];
        if (meta.contains("name") && meta["name"].is_string())
            name = meta["name"].get<std::string>();
        if (meta.contains("description") && meta["description"].is_string())
            description = meta["description"].get<std::string>();
    }

    try {
        BiframePair pair(VectorFamily(mu, space, std::move(f)),
                         VectorFamily(mu, space, std::move(g)));
        return LoadedDocument{std::move(pair), std::move(symbol), std::move(name),
                              std::move(description)};
    } catch (const Error& e) {
        throw ValidationError(e.what());
    }
}

json document_to_json(const BiframePair& pair, const std::optional<SymbolFunction>& symbol,
                      const std::string& name, const std::string& description) {
    const AtomSpace& mu = *pair.F.atom_space();
    const Space& space = pair.F.space();
    json j;
    j["version"] = kDocumentVersion;
    if (!name.empty() || !description.empty()) {
        json meta = json::object();
        if (!name.empty()) meta["name"] = name;
        if (!description.empty()) meta["description"] = description;
        j["metadata"] = std::move(meta);
    }
    j["space"] = {{"dim", space.dim},
                  {"field", space.field == Field::Real ? "real" : "complex"}};
    json weights = json::array();
    for (std::size_t k = 0; k < mu.size(); ++k) weights.push_back(mu.weight(k));
    j["measure"] = std::move(weights);
    if (mu.nodes()) j["nodes"] = *mu.nodes();

    auto dump_family = [&](const VectorFamily& fam) {
        json rows = json::array();
        for (std::size_t k = 0; k < fam.size(); ++k) {
            json row = json::array();
            for (int i = 0; i < space.dim; ++i)
                row.push_back(dump_scalar(fam.columns()(i, static_cast<Eigen::Index>(k)),
                                          space.field));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["F"] = dump_family(pair.F);
    j["G"] = dump_family(pair.G);
    if (symbol) {
        json values = json::array();
        for (const Scalar& v : symbol->values()) values.push_back(dump_scalar(v, space.field));
        j["symbol"] = std::move(values);
    }
    return j;
}

LoadedDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // Map the byte offset to a line number for the diagnostic.
        std::size_t line = 1;
        for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i)
            if (text[i] == '\n') ++line;
        throw FormatError(path + ":" + std::to_string(line) + ": " + e.what());
    }
    return document_from_json(j);
}

void save_document(const std::string& path, const BiframePair& pair,
                   const std::optional<SymbolFunction>& symbol, const std::string& name,
                   const std::string& description) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open file for writing: " + path);
    out << document_to_json(pair, symbol, name, description).dump(2) << '\n';
}

} // namespace biframe
