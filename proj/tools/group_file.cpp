#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace threefold::cli {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) schema_error(where, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(where, std::string("missing key \"") + key + "\"");
    return *it;
}

std::size_t as_size(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) schema_error(where, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

const json& as_array(const json& v, const std::string& where) {
    if (!v.is_array()) schema_error(where, "expected an array");
    return v;
}

Complex as_complex(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        schema_error(where, "expected a [re, im] pair");
    return {v[0].get<double>(), v[1].get<double>()};
}

CMatrix as_matrix(const json& v, const std::string& where) {
    const json& rows = as_array(v, where);
    if (rows.empty()) schema_error(where, "empty matrix");
    const std::size_t cols = as_array(rows[0], where + "[0]").size();
    CMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string rw = where + "[" + std::to_string(r) + "]";
        const json& row = as_array(rows[r], rw);
        if (row.size() != cols) schema_error(rw, "ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = as_complex(row[c], rw + "[" + std::to_string(c) + "]");
    }
    return m;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

GroupFile parse_group_file(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte points one past the offending character
        const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", line, column);
    }

    const std::size_t order = as_size(member(doc, "order", "document"), "order");
    const json& mult = as_array(member(doc, "mult", "document"), "mult");
    if (mult.size() != order) schema_error("mult", "expected " + std::to_string(order) + " rows");
    std::vector<std::vector<int>> table;
    for (std::size_t r = 0; r < mult.size(); ++r) {
        const std::string where = "mult[" + std::to_string(r) + "]";
        std::vector<int> row;
        for (const json& x : as_array(mult[r], where)) {
            if (!x.is_number_integer()) schema_error(where, "expected integer entries");
            row.push_back(x.get<int>());
        }
        table.push_back(std::move(row));
    }

    GroupFile out{FiniteGroup::from_table(std::move(table)), {}};

    const json& reps = as_array(member(doc, "reps", "document"), "reps");
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const std::string where = "reps[" + std::to_string(k) + "]";
        const json& r = reps[k];
        FiniteGroupRep rep{out.group, as_size(member(r, "dim", where), where + ".dim"), {}, {}};
        const json& name = member(r, "name", where);
        if (!name.is_string()) schema_error(where + ".name", "expected a string");
        rep.name = name.get<std::string>();
        const json& mats = as_array(member(r, "matrices", where), where + ".matrices");
        for (std::size_t g = 0; g < mats.size(); ++g)
            rep.matrices.push_back(as_matrix(mats[g], where + ".matrices[" + std::to_string(g) + "]"));
        out.reps.push_back(std::move(rep));
    }
    return out;
}

GroupFile load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_file(buf.str());
}

}  // namespace threefold::cli
