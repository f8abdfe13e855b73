#pragma once

#include "hecke/cocycle.hpp"
#include "hecke/errors.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/lab.hpp"
#include "hecke/module.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hecke::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Minimal TOML reader: sections, keys, strings, integers, booleans, arrays
// (nested, multiline) and inline tables. Enough for the datum/group schemas.
// ---------------------------------------------------------------------------

struct TomlValue {
    enum class Kind { String, Integer, Boolean, Array, Table };
    Kind kind = Kind::Table;
    std::string str;
    long long integer = 0;
    bool boolean = false;
    std::vector<TomlValue> array;
    std::map<std::string, TomlValue> table;

    const TomlValue &at(const std::string &key) const
    {
        auto it = table.find(key);
        if (it == table.end())
            throw InvalidInput("missing TOML key: " + key);
        return it->second;
    }
    bool has(const std::string &key) const { return table.count(key) > 0; }

    long long as_int() const
    {
        if (kind != Kind::Integer)
            throw InvalidInput("expected integer TOML value");
        return integer;
    }
    const std::string &as_string() const
    {
        if (kind != Kind::String)
            throw InvalidInput("expected string TOML value");
        return str;
    }
    const std::vector<TomlValue> &as_array() const
    {
        if (kind != Kind::Array)
            throw InvalidInput("expected array TOML value");
        return array;
    }
    /// String content of a scalar: bare numbers read as their literal text.
    std::string scalar_text() const
    {
        if (kind == Kind::String)
            return str;
        if (kind == Kind::Integer)
            return std::to_string(integer);
        throw InvalidInput("expected string or integer TOML value");
    }
};

namespace detail {

struct TomlLexer {
    std::string text;
    size_t pos = 0;

    void skip_space(bool newlines)
    {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n')
                    ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                ++pos;
            } else {
                break;
            }
        }
    }
    bool eof()
    {
        skip_space(true);
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    void expect(char c)
    {
        if (peek() != c)
            throw InvalidInput(std::string("TOML: expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    }
};

inline std::string lex_key(TomlLexer &lx)
{
    lx.skip_space(false);
    std::string key;
    while (lx.pos < lx.text.size()) {
        char c = lx.text[lx.pos];
        if (isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
            key += c;
            ++lx.pos;
        } else {
            break;
        }
    }
    if (key.empty())
        throw InvalidInput("TOML: empty key at offset " + std::to_string(lx.pos));
    return key;
}

inline TomlValue lex_value(TomlLexer &lx);

inline TomlValue lex_array(TomlLexer &lx)
{
    TomlValue v;
    v.kind = TomlValue::Kind::Array;
    lx.expect('[');
    lx.skip_space(true);
    while (lx.peek() != ']') {
        v.array.push_back(lex_value(lx));
        lx.skip_space(true);
        if (lx.peek() == ',') {
            ++lx.pos;
            lx.skip_space(true);
        }
    }
    lx.expect(']');
    return v;
}

inline TomlValue lex_inline_table(TomlLexer &lx)
{
    TomlValue v;
    v.kind = TomlValue::Kind::Table;
    lx.expect('{');
    lx.skip_space(true);
    while (lx.peek() != '}') {
        std::string key = lex_key(lx);
        lx.skip_space(false);
        lx.expect('=');
        lx.skip_space(false);
        v.table[key] = lex_value(lx);
        lx.skip_space(true);
        if (lx.peek() == ',') {
            ++lx.pos;
            lx.skip_space(true);
        }
    }
    lx.expect('}');
    return v;
}

inline TomlValue lex_value(TomlLexer &lx)
{
    lx.skip_space(false);
    char c = lx.peek();
    TomlValue v;
    if (c == '[')
        return lex_array(lx);
    if (c == '{')
        return lex_inline_table(lx);
    if (c == '"') {
        ++lx.pos;
        v.kind = TomlValue::Kind::String;
        while (lx.peek() != '"') {
            if (lx.pos >= lx.text.size())
                throw InvalidInput("TOML: unterminated string");
            v.str += lx.text[lx.pos++];
        }
        ++lx.pos;
        return v;
    }
    // bare token: integer or boolean
    std::string tok;
    while (lx.pos < lx.text.size()) {
        char t = lx.text[lx.pos];
        if (t == ',' || t == ']' || t == '}' || t == '\n' || t == ' ' || t == '\t' || t == '\r' || t == '#')
            break;
        tok += t;
        ++lx.pos;
    }
    if (tok == "true" || tok == "false") {
        v.kind = TomlValue::Kind::Boolean;
        v.boolean = tok == "true";
        return v;
    }
    try {
        size_t used = 0;
        long long n = std::stoll(tok, &used);
        if (used == tok.size()) {
            v.kind = TomlValue::Kind::Integer;
            v.integer = n;
            return v;
        }
    } catch (...) {
    }
    throw InvalidInput("TOML: cannot parse value token '" + tok + "'");
}

} // namespace detail

inline TomlValue parse_toml(const std::string &text)
{
    detail::TomlLexer lx{text, 0};
    TomlValue root;
    TomlValue *current = &root;
    while (!lx.eof()) {
        if (lx.peek() == '[') {
            ++lx.pos;
            std::string name = detail::lex_key(lx);
            lx.skip_space(false);
            lx.expect(']');
            TomlValue *node = &root;
            std::stringstream ss(name);
            std::string part;
            while (std::getline(ss, part, '.')) {
                node = &node->table[part];
                node->kind = TomlValue::Kind::Table;
            }
            current = node;
            continue;
        }
        std::string key = detail::lex_key(lx);
        lx.skip_space(false);
        lx.expect('=');
        current->table[key] = detail::lex_value(lx);
    }
    return root;
}

inline TomlValue load_toml_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_toml(ss.str());
}

// ---------------------------------------------------------------------------
// Scalar literals.
// ---------------------------------------------------------------------------

/// Cyclotomic literal: product of '*'-separated factors; each factor is a
/// Q(i) literal or z^k / zeta^k (a chosen primitive root of unity).
inline Cyc parse_cyc(const std::string &raw, const CycFieldPtr &field)
{
    std::string s;
    for (char c : raw)
        if (!isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw InvalidInput("empty scalar literal");
    Cyc out(1);
    size_t pos = 0;
    bool negate = false;
    if (s[0] == '-') {
        negate = true;
        pos = 1;
    }
    while (pos < s.size()) {
        size_t star = s.find('*', pos);
        std::string fac = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        pos = (star == std::string::npos) ? s.size() : star + 1;
        if (fac.empty())
            continue;
        if (fac[0] == 'z' || fac.rfind("zeta", 0) == 0) {
            size_t caret = fac.find('^');
            unsigned e = 1;
            if (caret != std::string::npos)
                e = static_cast<unsigned>(std::stoul(fac.substr(caret + 1)));
            out *= Cyc::zeta(field, e % field->m);
        } else {
            out *= Cyc::from_gaussian(field, parse_gaussian(fac));
        }
    }
    return negate ? -out : out;
}

// ---------------------------------------------------------------------------
// RootDatum TOML schema.
// ---------------------------------------------------------------------------

inline QVec parse_rational_vector(const TomlValue &arr)
{
    QVec out;
    for (const auto &v : arr.as_array())
        out.push_back(parse_rational(v.scalar_text()));
    return out;
}

inline QMatrix parse_rational_matrix(const TomlValue &arr)
{
    const auto &rows = arr.as_array();
    if (rows.empty())
        throw InvalidInput("empty matrix");
    size_t cols = rows[0].as_array().size();
    QMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto &row = rows[i].as_array();
        if (row.size() != cols)
            throw InvalidInput("ragged matrix");
        for (size_t j = 0; j < cols; ++j)
            m(i, j) = parse_rational(row[j].scalar_text());
    }
    return m;
}

/// Schema: rank, roots = [[..]], coroots = [[..]], simple = [..] (0-based),
/// ext = [{matrix = [[..]]}], complement = [[..]] (optional).
inline RootDatum parse_datum(const TomlValue &root)
{
    RootDatum d;
    d.rank = static_cast<size_t>(root.at("rank").as_int());
    for (const auto &r : root.at("roots").as_array())
        d.roots.push_back(parse_rational_vector(r));
    for (const auto &r : root.at("coroots").as_array())
        d.coroots.push_back(parse_rational_vector(r));
    for (const auto &s : root.at("simple").as_array())
        d.simple.push_back(static_cast<size_t>(s.as_int()));
    if (root.has("ext"))
        for (const auto &e : root.at("ext").as_array())
            d.ext.push_back(parse_rational_matrix(e.at("matrix")));
    if (root.has("complement"))
        for (const auto &c : root.at("complement").as_array())
            d.complement.push_back(parse_rational_vector(c));
    d.validate();
    return d;
}

/// Either a named standard datum ("A1", "gl3", ...) or a path to a TOML file.
inline RootDatum load_datum(const std::string &spec)
{
    if (spec.find('.') == std::string::npos || spec.rfind("gl", 0) == 0) {
        try {
            return standard_datum(spec);
        } catch (const InvalidInput &) {
            // fall through to the file path
        }
    }
    return parse_datum(load_toml_file(spec));
}

// ---------------------------------------------------------------------------
// Finite groups and cocycles (TOML).
// ---------------------------------------------------------------------------

/// Schema: order, table = [[..]] and optional [cocycle] with zeta_order and
/// values (row-major flat list of scalar literals).
inline FiniteGroup parse_group(const TomlValue &root)
{
    FiniteGroup g;
    g.n = static_cast<size_t>(root.at("order").as_int());
    for (const auto &row : root.at("table").as_array()) {
        std::vector<size_t> r;
        for (const auto &v : row.as_array())
            r.push_back(static_cast<size_t>(v.as_int()));
        g.table.push_back(std::move(r));
    }
    g.validate();
    return g;
}

inline CocycleTable parse_cocycle_table(const TomlValue &root, unsigned default_m = 4)
{
    FiniteGroup g = parse_group(root);
    unsigned m = default_m;
    if (root.has("cocycle") && root.at("cocycle").has("zeta_order"))
        m = static_cast<unsigned>(root.at("cocycle").at("zeta_order").as_int());
    auto field = make_cyc_field(m);
    CocycleTable t = CocycleTable::trivial(std::move(g), field);
    if (root.has("cocycle") && root.at("cocycle").has("values")) {
        const auto &vals = root.at("cocycle").at("values").as_array();
        if (vals.size() != t.group.n * t.group.n)
            throw InvalidInput("cocycle value list must have order^2 entries");
        for (size_t k = 0; k < vals.size(); ++k)
            t.values[k] = parse_cyc(vals[k].scalar_text(), field);
    }
    return t;
}

// ---------------------------------------------------------------------------
// HeckeElement JSON: [{"w": ["s1","g1"], "poly": {"x1^2*r": "1+i"}}].
// ---------------------------------------------------------------------------

inline size_t parse_word(const json &letters, const HeckeAlgebra &alg)
{
    const WeylGroup &wg = alg.weyl();
    size_t acc = wg.identity();
    for (const auto &l : letters) {
        std::string s = l.get<std::string>();
        if (s == "e" || s.empty())
            continue;
        if (s[0] == 's') {
            size_t pos = std::stoul(s.substr(1));
            if (pos == 0 || pos > alg.datum().simple.size())
                throw InvalidInput("simple letter out of range: " + s);
            acc = wg.mult(acc, wg.simple_element(pos - 1));
        } else if (s[0] == 'g') {
            size_t r = std::stoul(s.substr(1));
            if (r >= wg.r_order())
                throw InvalidInput("R letter out of range: " + s);
            acc = wg.mult(acc, wg.ext_element(r));
        } else {
            throw InvalidInput("unknown letter: " + s);
        }
    }
    return acc;
}

inline HeckeElement parse_element(const json &j, const HeckeAlgebra &alg)
{
    if (!j.is_array())
        throw InvalidInput("element JSON must be an array of terms");
    HeckeElement e;
    for (const auto &term : j) {
        size_t w = term.contains("w") ? parse_word(term.at("w"), alg) : alg.weyl().identity();
        Poly p(alg.rank());
        if (term.contains("poly")) {
            for (const auto &[key, val] : term.at("poly").items()) {
                Monomial m = parse_monomial_key(key, alg.rank());
                p.add_term(m, parse_gaussian(val.get<std::string>()));
            }
        } else {
            p = Poly(alg.rank(), GaussianRational(1));
        }
        e.add(w, p);
    }
    return e;
}

inline json word_to_json(size_t w, const HeckeAlgebra &alg)
{
    const WeylGroup &wg = alg.weyl();
    json letters = json::array();
    for (size_t pos : wg.w0_word(wg.w0_part(w)))
        letters.push_back("s" + std::to_string(pos + 1));
    if (wg.r_part(w) != 0)
        letters.push_back("g" + std::to_string(wg.r_part(w)));
    return letters;
}

inline json element_to_json(const HeckeElement &e, const HeckeAlgebra &alg)
{
    json out = json::array();
    for (const auto &[w, p] : e.terms) {
        json term;
        term["w"] = word_to_json(w, alg);
        json poly = json::object();
        for (const auto &[m, c] : p.terms())
            poly[monomial_key(m)] = to_string(c);
        term["poly"] = poly;
        out.push_back(term);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matrices and modules (JSON).
// ---------------------------------------------------------------------------

inline GMatrix parse_gmatrix(const json &j)
{
    if (!j.is_array() || j.empty())
        throw InvalidInput("matrix JSON must be a nonempty array of rows");
    size_t rows = j.size();
    size_t cols = j[0].size();
    GMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols)
            throw InvalidInput("ragged matrix JSON");
        for (size_t k = 0; k < cols; ++k) {
            const auto &cell = j[i][k];
            if (cell.is_number_integer())
                m(i, k) = GaussianRational(Rational(cell.get<long long>()));
            else
                m(i, k) = parse_gaussian(cell.get<std::string>());
        }
    }
    return m;
}

inline json gmatrix_to_json(const GMatrix &m)
{
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j2 = 0; j2 < m.cols(); ++j2)
            row.push_back(to_string(m(i, j2)));
        rows.push_back(row);
    }
    return rows;
}

/// Schema: {"dim": d, "r": "p/q", "gens": {"s1": M, "gamma1": M, "xi1": M}}.
inline FinDimModule parse_module(const json &j, std::shared_ptr<const HeckeAlgebra> alg)
{
    FinDimModule m;
    m.alg = std::move(alg);
    m.dim = j.at("dim").get<size_t>();
    m.r_value = j.contains("r") ? parse_gaussian(j.at("r").get<std::string>()) : GaussianRational(0);
    const auto &gens = j.at("gens");
    const HeckeAlgebra &a = m.algebra();
    for (size_t pos = 0; pos < a.datum().simple.size(); ++pos)
        m.s_mats.push_back(parse_gmatrix(gens.at("s" + std::to_string(pos + 1))));
    m.r_mats.push_back(GMatrix::identity(m.dim));
    for (size_t r = 1; r < a.weyl().r_order(); ++r)
        m.r_mats.push_back(parse_gmatrix(gens.at("gamma" + std::to_string(r))));
    for (size_t k = 0; k < a.rank(); ++k)
        m.xi_mats.push_back(parse_gmatrix(gens.at("xi" + std::to_string(k + 1))));
    return m;
}

inline json module_to_json(const FinDimModule &m)
{
    json out;
    out["dim"] = m.dim;
    out["r"] = to_string(m.r_value);
    json gens = json::object();
    for (size_t pos = 0; pos < m.s_mats.size(); ++pos)
        gens["s" + std::to_string(pos + 1)] = gmatrix_to_json(m.s_mats[pos]);
    for (size_t r = 1; r < m.r_mats.size(); ++r)
        gens["gamma" + std::to_string(r)] = gmatrix_to_json(m.r_mats[r]);
    for (size_t k = 0; k < m.xi_mats.size(); ++k)
        gens["xi" + std::to_string(k + 1)] = gmatrix_to_json(m.xi_mats[k]);
    out["gens"] = gens;
    return out;
}

inline json weight_table_to_json(const WeightTable &wt)
{
    json out = json::array();
    for (const auto &[x, mult] : wt.entries) {
        json entry;
        json coords = json::array();
        for (const auto &z : x)
            coords.push_back(to_string(z));
        entry["weight"] = coords;
        entry["multiplicity"] = mult;
        out.push_back(entry);
    }
    return out;
}

/// Nilpotent shorthand: "e12", "e12+e34", "2e12-e13", or a JSON matrix string.
inline GMatrix parse_matrix_spec(const std::string &spec, size_t n)
{
    std::string s;
    for (char c : spec)
        if (!isspace(static_cast<unsigned char>(c)))
            s += c;
    if (!s.empty() && s[0] == '[')
        return parse_gmatrix(json::parse(s));
    GMatrix m(n, n);
    if (s == "0" || s.empty())
        return m;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        }
        std::string coef;
        while (pos < s.size() && (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            coef += s[pos++];
        if (pos >= s.size() || s[pos] != 'e')
            throw InvalidInput("bad matrix shorthand: " + spec);
        ++pos;
        if (pos + 1 >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])) ||
            !isdigit(static_cast<unsigned char>(s[pos + 1])))
            throw InvalidInput("bad matrix-unit indices in: " + spec);
        size_t i = static_cast<size_t>(s[pos] - '0');
        size_t j = static_cast<size_t>(s[pos + 1] - '0');
        pos += 2;
        if (i == 0 || j == 0 || i > n || j > n)
            throw InvalidInput("matrix-unit index out of range in: " + spec);
        Rational c = coef.empty() ? Rational(1) : parse_rational(coef);
        m(i - 1, j - 1) += GaussianRational(sign * c);
    }
    return m;
}

/// Comma-separated Gaussian rationals, e.g. "2,2,0" or "1+i,0".
inline GVec parse_gvec_spec(const std::string &spec)
{
    GVec out;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ','))
        out.push_back(parse_gaussian(part));
    return out;
}

inline GMatrix diagonal_matrix(const GVec &d)
{
    GMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

inline std::vector<size_t> parse_composition(const std::string &spec)
{
    std::vector<size_t> out;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ','))
        out.push_back(std::stoul(part));
    return out;
}

} // namespace hecke::io
