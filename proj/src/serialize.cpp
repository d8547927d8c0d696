#include "seqblocks/serialize.hpp"

#include "seqblocks/normalize.hpp"

namespace seqblocks {

std::string block_string(Block b) { return std::string(1, block_letter(b)); }

Json profile_json(const LimitProfile& p) { return Json::array({p.lo().str(), p.hi().str()}); }

Json code_json(const Code& code) {
    Json j{
        {"value", rat_to_string(code.value)},
        {"coder", code.coder == Coder::Weighted ? "weighted" : "interleaved"},
        {"depth", code.depth},
    };
    if (code.coder == Coder::Interleaved) j["digits"] = code.digits;
    return j;
}

Json connection_json(const CanonicalSeq& source,
                     const std::variant<Connector, Obstruction>& result) {
    Json j;
    j["source"] = render(source);
    if (const auto* conn = std::get_if<Connector>(&result)) {
        j["kind"] = "connector";
        j["target"] = block_string(conn->target);
        j["connector_expr"] = render(conn->c);
        CanonicalSeq product = mul(source, conn->c);
        j["product_expr"] = render(product);
        j["product_profile"] = profile_json(exact_profile(product));
        switch (conn->pattern) {
            case ConnectorPattern::A: j["pattern"] = "A"; break;
            case ConnectorPattern::B: j["pattern"] = "B"; break;
            case ConnectorPattern::C: j["pattern"] = "C"; break;
            case ConnectorPattern::D: j["pattern"] = "D"; break;
            case ConnectorPattern::ZeroToG: j["pattern"] = "ZeroToG"; break;
            case ConnectorPattern::NegateEF: j["pattern"] = "NegateEF"; break;
            case ConnectorPattern::DominateEF: j["pattern"] = "DominateEF"; break;
        }
    } else {
        const auto& obs = std::get<Obstruction>(result);
        j["kind"] = "obstruction";
        j["target"] = block_string(obs.target);
        j["reason"] = obstruction_reason_name(obs.reason);
        j["witness_expr"] = render(source);  // the source itself is the certificate
        if (obs.witness_class) j["witness_class"] = *obs.witness_class;
    }
    return j;
}

Json subspace_json(const std::set<Block>& blocks, const SubspaceVerdict& v) {
    Json j;
    Json union_list = Json::array();
    for (Block b : blocks) union_list.push_back(block_string(b));
    j["union"] = union_list;
    j["is_subspace"] = v.is_subspace;
    if (v.is_subspace) return j;

    Json w;
    switch (v.witness) {
        case SubspaceVerdict::Witness::ZeroMissing:
            w["kind"] = "ZeroMissing";
            w["x"] = render(v.x);
            w["x_block"] = block_string(v.x_block);
            w["result"] = render(v.result);
            w["result_block"] = block_string(v.result_block);
            break;
        case SubspaceVerdict::Witness::AdditionEscape:
            w["kind"] = "AdditionEscape";
            w["x"] = render(v.x);
            w["x_block"] = block_string(v.x_block);
            w["y"] = render(v.y);
            w["y_block"] = block_string(v.y_block);
            w["result"] = render(v.result);
            w["result_block"] = block_string(v.result_block);
            break;
        case SubspaceVerdict::Witness::ScalarEscape:
            w["kind"] = "ScalarEscape";
            w["x"] = render(v.x);
            w["x_block"] = block_string(v.x_block);
            w["lambda"] = rat_to_string(v.lambda);
            w["result"] = render(v.result);
            w["result_block"] = block_string(v.result_block);
            break;
        case SubspaceVerdict::Witness::None: break;
    }
    j["witness"] = w;
    return j;
}

Json matrix_json(const AdjMatrix7& m, const std::string& level) {
    Json j;
    j["level"] = level;
    Json blocks = Json::array();
    for (Block b : kAllBlocks) blocks.push_back(block_string(b));
    j["blocks"] = blocks;
    Json rows = Json::array();
    for (Block x : kAllBlocks) {
        Json row = Json::array();
        for (Block y : kAllBlocks) row.push_back(m.get(x, y) ? 1 : 0);
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

Json metrics_json(const ContingencyCounts& c, const Metrics& m) {
    Json j;
    j["counts"] = {{"n11", c.n11}, {"n10", c.n10}, {"n01", c.n01}, {"n00", c.n00}};
    j["coverage"] = m.coverage ? Json(rat_to_string(*m.coverage)) : Json("undefined");
    j["consistency"] = rat_to_string(m.consistency);
    if (m.consistency_by_convention) j["consistency_by_convention"] = true;
    j["jaccard"] = m.jaccard ? Json(rat_to_string(*m.jaccard)) : Json("undefined");
    j["hamming"] = std::to_string(c.n11 + c.n00) + "/49";
    Json dec;
    if (m.coverage) dec["coverage"] = rat_to_double(*m.coverage);
    dec["consistency"] = rat_to_double(m.consistency);
    if (m.jaccard) dec["jaccard"] = rat_to_double(*m.jaccard);
    dec["hamming"] = rat_to_double(m.hamming);
    j["decimal"] = dec;
    return j;
}

}  // namespace seqblocks
