#include "kaluza/json_io.hpp"

#include <algorithm>

namespace kaluza {

namespace {

const Json& require_key(const Json& doc, const char* key, const char* where)
{
    if (!doc.is_object() || !doc.contains(key)) {
        throw InputError(std::string(where) + ": missing key \"" + key + "\"");
    }
    return doc.at(key);
}

std::uint64_t require_uint(const Json& value, const char* what)
{
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw InputError(std::string(what) + " must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

std::vector<unsigned> index_from_json(const Json& value)
{
    if (!value.is_array()) {
        throw InputError("index must be a JSON array of non-negative integers");
    }
    std::vector<unsigned> out;
    out.reserve(value.size());
    for (const auto& v : value) {
        out.push_back(static_cast<unsigned>(require_uint(v, "index component")));
    }
    return out;
}

template <GradedMonoid M>
typename M::element_type element_from_json(const M& monoid, const Json& value)
{
    typename M::element_type x(index_from_json(value));
    monoid.validate(x);
    return x;
}

Json element_to_json(const MultiIndex& alpha) { return alpha.components; }
Json element_to_json(const Word& w) { return w.letters; }

template <GradedMonoid M>
CoeffTable<M> fill_table(M monoid, unsigned max_degree, const Json& entries, TableLimits limits)
{
    CoeffTable<M> table(std::move(monoid), max_degree, limits);
    std::vector<bool> seen(table.size(), false);
    for (const auto& entry : entries) {
        const auto x = element_from_json(table.monoid(), require_key(entry, "idx", "table entry"));
        if (!table.contains(x)) {
            throw InputError("table entry " + to_string(x) + " exceeds max_degree " + std::to_string(max_degree));
        }
        const std::size_t pos = table.position(x);
        if (seen[pos]) {
            throw InputError("duplicate table entry " + to_string(x));
        }
        seen[pos] = true;
        table[pos] = rational_from_json(require_key(entry, "val", "table entry"));
    }
    if (const auto missing = std::find(seen.begin(), seen.end(), false); missing != seen.end()) {
        const auto pos = static_cast<std::size_t>(missing - seen.begin());
        throw InputError("table is missing entry " + to_string(table.elements()[pos]));
    }
    return table;
}

Json violation_to_json(const Violation& v)
{
    Json at = Json::array();
    for (const auto& idx : v.at) {
        at.push_back(idx);
    }
    return Json{{"cond", v.cond}, {"at", at}, {"lhs", rational_to_json(v.lhs)}, {"rhs", rational_to_json(v.rhs)}};
}

Json indexed_to_json(const IndexedValue& v)
{
    return Json{{"at", v.at.components}, {"val", rational_to_json(v.value)}};
}

} // namespace

Json rational_to_json(const Rational& value)
{
    return to_string(value);
}

Rational rational_from_json(const Json& value)
{
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    if (value.is_number_integer()) {
        return parse_rational(value.dump());
    }
    throw InputError("expected a fraction string or integer, got " + value.dump());
}

template <GradedMonoid M>
Json table_to_json(const CoeffTable<M>& table, TableContent content)
{
    Json doc;
    doc["kind"] = to_string(M::kind);
    doc["dim"] = table.dim();
    doc["max_degree"] = table.max_degree();
    if (content == TableContent::norms_squared) {
        doc["content"] = "norms_squared";
    }
    Json entries = Json::array();
    const auto elements = table.elements();
    for (std::size_t i = 0; i < table.size(); ++i) {
        entries.push_back(Json{{"idx", element_to_json(elements[i])}, {"val", rational_to_json(table[i])}});
    }
    doc["entries"] = std::move(entries);
    return doc;
}

template Json table_to_json(const IndexTable&, TableContent);
template Json table_to_json(const WordTable&, TableContent);

Json table_to_json(const AnyTable& table, TableContent content)
{
    return std::visit([content](const auto& t) { return table_to_json(t, content); }, table);
}

ParsedTable table_from_json(const Json& doc, TableLimits limits)
{
    const auto kind = require_key(doc, "kind", "table").get<std::string>();
    const auto dim = require_uint(require_key(doc, "dim", "table"), "dim");
    const auto max_degree = static_cast<unsigned>(require_uint(require_key(doc, "max_degree", "table"), "max_degree"));
    const Json& entries = require_key(doc, "entries", "table");
    if (!entries.is_array()) {
        throw InputError("table: \"entries\" must be an array");
    }

    ParsedTable parsed{IndexTable(MultiIndexMonoid(1), 0), TableContent::coefficients};
    if (doc.contains("content")) {
        const auto content = doc.at("content").get<std::string>();
        if (content == "norms_squared") {
            parsed.content = TableContent::norms_squared;
        } else if (content != "coefficients") {
            throw InputError("table: unknown content \"" + content + "\"");
        }
    }

    if (kind == "multiindex") {
        parsed.table = fill_table(MultiIndexMonoid(dim), max_degree, entries, limits);
    } else if (kind == "word") {
        parsed.table = fill_table(WordMonoid(dim), max_degree, entries, limits);
    } else {
        throw InputError("table: unknown kind \"" + kind + "\"");
    }
    return parsed;
}

IndexTable index_table_from_overrides(const Json& doc, std::size_t dim, unsigned max_degree,
                                      const Rational& origin, const Rational& fallback)
{
    IndexTable table(MultiIndexMonoid(dim), max_degree);
    const Rational base = doc.contains("default") ? rational_from_json(doc.at("default")) : fallback;
    for (std::size_t i = 1; i < table.size(); ++i) {
        table[i] = base;
    }
    table[0] = doc.contains("origin") ? rational_from_json(doc.at("origin")) : origin;
    if (doc.contains("values")) {
        for (const auto& entry : doc.at("values")) {
            const auto alpha = element_from_json(table.monoid(), require_key(entry, "idx", "override"));
            if (table.contains(alpha)) {
                table.set(alpha, rational_from_json(require_key(entry, "val", "override")));
            }
        }
    }
    return table;
}

Json report_to_json(const CheckReport& report)
{
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back(violation_to_json(v));
    }
    return Json{{"passed", report.passed()}, {"checked_degree", report.checked_degree}, {"violations", violations}};
}

Json cert_to_json(const CertReport& report)
{
    Json doc;
    doc["verdict"] = to_string(report.verdict);
    doc["checked_degree"] = report.checked_degree;
    doc["thm1"] = report_to_json(report.thm1);
    doc["thm2"] = report_to_json(report.thm2);
    doc["q_min"] = indexed_to_json(report.q_min);
    doc["witness"] = report.witness ? indexed_to_json(*report.witness) : Json(nullptr);
    Json negatives = Json::array();
    for (const auto& n : report.negatives) {
        negatives.push_back(indexed_to_json(n));
    }
    doc["negatives"] = std::move(negatives);
    doc["dbr_b"] = report.dbr_b ? table_to_json(*report.dbr_b) : Json(nullptr);
    return doc;
}

std::vector<MeasureSpec1D> product_measure_from_json(const Json& doc)
{
    const Json& axes = require_key(doc, "axes", "product measure");
    if (!axes.is_array() || axes.empty()) {
        throw InputError("product measure: \"axes\" must be a non-empty array");
    }
    std::vector<MeasureSpec1D> out;
    for (const auto& axis : axes) {
        const auto kind = require_key(axis, "kind", "measure axis").get<std::string>();
        if (kind == "lebesgue") {
            out.push_back(MeasureSpec1D::lebesgue());
        } else if (kind == "atomic") {
            std::vector<Atom1D> atoms;
            for (const auto& atom : require_key(axis, "atoms", "atomic axis")) {
                atoms.push_back(Atom1D{rational_from_json(require_key(atom, "t", "atom")),
                                       rational_from_json(require_key(atom, "w", "atom"))});
            }
            out.push_back(MeasureSpec1D::atomic(std::move(atoms)));
        } else {
            throw InputError("measure axis: unknown kind \"" + kind + "\"");
        }
    }
    return out;
}

AtomicMeasureD atomic_measure_from_json(const Json& doc)
{
    const Json& atoms = require_key(doc, "atomsD", "atomic measure");
    if (!atoms.is_array() || atoms.empty()) {
        throw InputError("atomic measure: \"atomsD\" must be a non-empty array");
    }
    std::vector<AtomD> out;
    for (const auto& atom : atoms) {
        AtomD a;
        for (const auto& t : require_key(atom, "t", "atom")) {
            a.point.push_back(rational_from_json(t));
        }
        a.weight = rational_from_json(require_key(atom, "w", "atom"));
        out.push_back(std::move(a));
    }
    return AtomicMeasureD(std::move(out));
}

} // namespace kaluza
