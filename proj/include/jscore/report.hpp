#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "contingency.hpp"
#include "matching.hpp"
#include "measures.hpp"

/**
 * @file report.hpp
 * @brief JSON form of a scoring run. Doubles are written with round-trip precision.
 */

namespace jscore {

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportDocument {
    std::string tool_version = kToolVersion;
    std::size_t n = 0;
    std::size_t t = 0;
    std::size_t k = 0;
    ScoreReport scores;
};

inline ReportDocument make_report(const ContingencyTable& table) {
    ReportDocument doc;
    doc.n = static_cast<std::size_t>(table.total());
    doc.t = table.rows();
    doc.k = table.cols();
    doc.scores = score_all(table);
    return doc;
}

inline void to_json(nlohmann::json& j, const MatchAssignment& m) {
    j = nlohmann::json{{"reference", m.reference_group}, {"matched", m.matched_group}, {"similarity", m.similarity}};
}

inline void from_json(const nlohmann::json& j, MatchAssignment& m) {
    j.at("reference").get_to(m.reference_group);
    j.at("matched").get_to(m.matched_group);
    j.at("similarity").get_to(m.similarity);
}

inline void to_json(nlohmann::json& j, const ReportDocument& d) {
    const auto& s = d.scores;
    j = nlohmann::json{
        {"tool_version", d.tool_version},
        {"input", {{"n", d.n}, {"t", d.t}, {"k", d.k}}},
        {"scores",
         {{"j", s.j},
          {"recall_sum", s.recall_sum},
          {"precision_sum", s.precision_sum},
          {"h_score", s.h_score},
          {"f_score", s.f_score},
          {"ri", s.ri},
          {"ari", s.ari},
          {"nmi", s.nmi},
          {"v_measure", s.v_measure},
          {"vi", s.vi},
          {"nvi", s.nvi}}},
        {"matching",
         {{"class_to_cluster", s.matching.class_to_cluster}, {"cluster_to_class", s.matching.cluster_to_class}}},
    };
}

inline void from_json(const nlohmann::json& j, ReportDocument& d) {
    j.at("tool_version").get_to(d.tool_version);
    const auto& in = j.at("input");
    in.at("n").get_to(d.n);
    in.at("t").get_to(d.t);
    in.at("k").get_to(d.k);
    const auto& sc = j.at("scores");
    auto& s = d.scores;
    sc.at("j").get_to(s.j);
    sc.at("recall_sum").get_to(s.recall_sum);
    sc.at("precision_sum").get_to(s.precision_sum);
    sc.at("h_score").get_to(s.h_score);
    sc.at("f_score").get_to(s.f_score);
    sc.at("ri").get_to(s.ri);
    sc.at("ari").get_to(s.ari);
    sc.at("nmi").get_to(s.nmi);
    sc.at("v_measure").get_to(s.v_measure);
    sc.at("vi").get_to(s.vi);
    sc.at("nvi").get_to(s.nvi);
    const auto& m = j.at("matching");
    m.at("class_to_cluster").get_to(s.matching.class_to_cluster);
    m.at("cluster_to_class").get_to(s.matching.cluster_to_class);
}

inline bool operator==(const ReportDocument& a, const ReportDocument& b) {
    const auto& x = a.scores;
    const auto& y = b.scores;
    return a.tool_version == b.tool_version && a.n == b.n && a.t == b.t && a.k == b.k && x.j == y.j &&
           x.recall_sum == y.recall_sum && x.precision_sum == y.precision_sum && x.h_score == y.h_score &&
           x.f_score == y.f_score && x.ri == y.ri && x.ari == y.ari && x.nmi == y.nmi &&
           x.v_measure == y.v_measure && x.vi == y.vi && x.nvi == y.nvi && x.matching == y.matching;
}

} // namespace jscore
