#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rainbow/audit.hpp"
#include "rainbow/count.hpp"
#include "rainbow/injection.hpp"
#include "rainbow/search.hpp"
#include "rainbow/types.hpp"

namespace rainbow {

/// Key order is fixed, so equal reports serialize to identical bytes.
using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const BoundReport& rep);
OrderedJson to_json(const InjectionReport& rep);
OrderedJson to_json(const AuditStep& step);
OrderedJson to_json(const AuditLedger& ledger);
OrderedJson to_json(const SearchResult& result);
OrderedJson to_json(const TightnessReport& rep);

std::string text_summary(const BoundReport& rep);
std::string text_summary(const std::vector<InjectionReport>& reps);
std::string text_summary(const AuditLedger& ledger);
std::string text_summary(const SearchResult& result);
std::string text_summary(const TightnessReport& rep);

/// Ledger steps as CSV: id, description, relation, lhs_bits, rhs_bits,
/// slack, pass.
std::string ledger_csv(const AuditLedger& ledger);

/// Injection mapping rows (x, s, f_x(s)) as CSV.
using MappingRow = std::tuple<Vertex, SxTuple, TxTuple>;
std::string mapping_csv(const std::vector<MappingRow>& rows);

}  // namespace rainbow
