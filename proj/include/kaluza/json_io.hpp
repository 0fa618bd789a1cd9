#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "kaluza/conditions.hpp"
#include "kaluza/kernels.hpp"
#include "kaluza/moments.hpp"
#include "kaluza/series.hpp"

namespace kaluza {

using Json = nlohmann::ordered_json;

using AnyTable = std::variant<IndexTable, WordTable>;

// What the "val" fields of a table file hold. Files without a "content" key hold coefficients.
enum class TableContent { coefficients, norms_squared };

struct ParsedTable {
    AnyTable table;
    TableContent content = TableContent::coefficients;
};

Json rational_to_json(const Rational& value);
// Accepts a fraction string or a JSON integer.
Rational rational_from_json(const Json& value);

// {"kind","dim","max_degree","entries":[{"idx","val"}...]} in canonical order.
template <GradedMonoid M>
Json table_to_json(const CoeffTable<M>& table, TableContent content = TableContent::coefficients);

Json table_to_json(const AnyTable& table, TableContent content = TableContent::coefficients);

// Entries may come in any order but must cover every element of degree <= max_degree exactly once.
ParsedTable table_from_json(const Json& doc, TableLimits limits = {});

// Table whose entries default to `fallback` off the origin, with per-index overrides:
// {"origin":"p/q"?, "default":"p/q"?, "values":[{"idx":[...],"val":"p/q"}...]}.
IndexTable index_table_from_overrides(const Json& doc, std::size_t dim, unsigned max_degree,
                                      const Rational& origin, const Rational& fallback);

Json report_to_json(const CheckReport& report);
Json cert_to_json(const CertReport& report);

// {"axes":[{"kind":"lebesgue"} | {"kind":"atomic","atoms":[{"t":"p/q","w":"p/q"}...]}...]}
std::vector<MeasureSpec1D> product_measure_from_json(const Json& doc);
// {"atomsD":[{"t":["p/q",...],"w":"p/q"}...]}
AtomicMeasureD atomic_measure_from_json(const Json& doc);

} // namespace kaluza
