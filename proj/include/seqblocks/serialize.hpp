#ifndef SEQBLOCKS_SERIALIZE_HPP
#define SEQBLOCKS_SERIALIZE_HPP

#include "seqblocks/coding.hpp"
#include "seqblocks/connectors.hpp"

#include <json.hpp>

namespace seqblocks {

using Json = nlohmann::json;

/// Profiles serialize as two strings: "-inf" / "+inf" or exact fractions.
Json profile_json(const LimitProfile& p);

Json code_json(const Code& code);

/// {source, target, kind, connector_expr?, product_expr?, pattern?} for a
/// connector, {source, target, kind, reason, witness_class?} for an
/// obstruction.
Json connection_json(const CanonicalSeq& source,
                     const std::variant<Connector, Obstruction>& result);

Json subspace_json(const std::set<Block>& blocks, const SubspaceVerdict& v);

Json matrix_json(const AdjMatrix7& m, const std::string& level);

/// Exact fraction strings plus decimal renderings. The Hamming entry keeps
/// the natural /49 denominator of its definition.
Json metrics_json(const ContingencyCounts& c, const Metrics& m);

std::string block_string(Block b);

}  // namespace seqblocks

#endif
