#include "ackkit/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ackkit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ref_json(UttRef ref) {
    return ordered_json{{"turn", ref.turn}, {"utterance", ref.utt}};
}

ordered_json exchange_json(const ExchangeNode& node) {
    ordered_json j;
    if (node.inner) {
        j["initiation"] = ordered_json{{"exchange", exchange_json(*node.inner)}};
    } else {
        j["initiation"] = ref_json(*node.init_ref);
    }
    j["initiation_act"] = to_string(node.initiation_act);
    j["initiator"] = node.initiator;
    j["completion"] = ordered_json::array();
    for (UttRef ref : node.completion) {
        j["completion"].push_back(ref_json(ref));
    }
    j["acceptances"] = ordered_json::array();
    for (UttRef ref : node.acceptances) {
        j["acceptances"].push_back(ref_json(ref));
    }
    j["status"] = to_string(node.status);
    return j;
}

ordered_json stats_json(const CorpusReport& report, bool include_dialogue_count) {
    ordered_json j;
    if (include_dialogue_count) {
        j["dialogues"] = report.dialogue_count;
    }
    j["turns"] = report.turn_count;
    j["acknowledgments"] = report.ackn_count;
    if (auto rate = report.ackn_per_turn()) {
        j["ackn_per_turn"] = *rate;
    }
    j["per_class"] = ordered_json::object();
    for (const auto& [key, count] : report.per_class) {
        j["per_class"][key] = count;
    }
    j["per_pattern"] = ordered_json::object();
    for (const auto& [key, count] : report.per_pattern) {
        j["per_pattern"][key] = count;
    }
    j["per_speaker"] = ordered_json::object();
    for (const auto& [key, count] : report.per_speaker) {
        j["per_speaker"][key] = count;
    }
    ordered_json repair;
    repair["ackn_count"] = report.repair_ackn_count;
    repair["turn_count"] = report.repair_turn_count;
    if (auto rate = report.repair_rate()) {
        repair["rate"] = *rate;
    }
    j["repair"] = repair;
    ordered_json nonrepair;
    nonrepair["ackn_count"] = report.nonrepair_ackn_count;
    nonrepair["turn_count"] = report.nonrepair_turn_count;
    if (auto rate = report.nonrepair_rate()) {
        nonrepair["rate"] = *rate;
    }
    j["nonrepair"] = nonrepair;
    return j;
}

std::string ref_str(UttRef ref) {
    return "(" + std::to_string(ref.turn) + "," + std::to_string(ref.utt) + ")";
}

std::string ratio_str(std::optional<double> rate) {
    if (!rate) {
        return "n/a";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", *rate);
    return buf;
}

void render_exchange_text(std::ostream& os, const ExchangeNode& node, int indent) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    os << pad << "[" << to_string(node.status) << "] "
       << to_string(node.initiation_act) << " exchange by " << node.initiator << "\n";
    if (node.inner) {
        os << pad << "  initiation (embedded):\n";
        render_exchange_text(os, *node.inner, indent + 2);
    } else {
        os << pad << "  initiation: " << ref_str(*node.init_ref) << "\n";
    }
    if (!node.completion.empty()) {
        os << pad << "  completion:";
        for (UttRef ref : node.completion) {
            os << ' ' << ref_str(ref);
        }
        os << "\n";
    }
    if (!node.acceptances.empty()) {
        os << pad << "  acceptances:";
        for (UttRef ref : node.acceptances) {
            os << ' ' << ref_str(ref);
        }
        os << "\n";
    }
}

} // namespace

std::string analysis_report_json(const DialogueAnalysis& analysis) {
    const Dialogue& d = analysis.dialogue;
    ordered_json j;
    j["dialogue"] = d.id;
    j["speakers"] = ordered_json::array({d.speakers[0], d.speakers[1]});
    j["turns"] = ordered_json::array();
    for (const Turn& turn : d.turns) {
        ordered_json t;
        t["speaker"] = turn.speaker;
        t["utterances"] = ordered_json::array();
        for (const Utterance& utt : turn.utterances) {
            t["utterances"].push_back(
                ordered_json{{"act", to_string(utt.act)}, {"text", utt.text}});
        }
        j["turns"].push_back(t);
    }
    j["exchanges"] = ordered_json::array();
    for (const auto& root : analysis.tree.roots) {
        j["exchanges"].push_back(exchange_json(*root));
    }
    j["self_acknowledgments"] = ordered_json::array();
    for (UttRef ref : analysis.tree.self_ackn_sites) {
        j["self_acknowledgments"].push_back(ref_json(ref));
    }
    j["orphans"] = ordered_json::array();
    for (UttRef ref : analysis.tree.orphans) {
        j["orphans"].push_back(ref_json(ref));
    }
    j["acknowledgments"] = ordered_json::array();
    for (const AcknClassification& a : analysis.acknowledgments) {
        ordered_json entry;
        entry["turn"] = a.site.turn;
        entry["utterance"] = a.site.utt;
        entry["speaker"] = a.speaker;
        entry["act"] = to_string(a.act);
        entry["class"] = to_string(a.structural_class);
        entry["pattern"] = to_string(a.pattern);
        entry["embedded"] = a.embedded;
        entry["rationale"] = a.rationale;
        j["acknowledgments"].push_back(entry);
    }
    j["assessments"] = ordered_json::array();
    for (const CoverageEntry& e : utterance_coverage(analysis.tree, d)) {
        if (utterance_at(d, e.ref).act == SpeechAct::Assess) {
            ordered_json entry = ref_json(e.ref);
            entry["speaker"] = d.turns[static_cast<size_t>(e.ref.turn)].speaker;
            entry["role"] = to_string(e.role);
            j["assessments"].push_back(entry);
        }
    }
    j["notes"] = analysis.tree.notes;
    j["stats"] = stats_json(aggregate_one(analysis), false);
    return j.dump(2) + "\n";
}

std::string corpus_report_json(const CorpusReport& report) {
    return stats_json(report, true).dump(2) + "\n";
}

std::string analysis_report_text(const DialogueAnalysis& analysis) {
    const Dialogue& d = analysis.dialogue;
    std::ostringstream os;
    os << "dialogue: " << d.id << "\n";
    os << "speakers: " << d.speakers[0] << " " << d.speakers[1] << "\n";
    os << "\nexchanges:\n";
    for (const auto& root : analysis.tree.roots) {
        render_exchange_text(os, *root, 1);
    }
    if (!analysis.tree.self_ackn_sites.empty()) {
        os << "self-acknowledgment sites:";
        for (UttRef ref : analysis.tree.self_ackn_sites) {
            os << ' ' << ref_str(ref);
        }
        os << "\n";
    }
    if (!analysis.tree.orphans.empty()) {
        os << "orphans:";
        for (UttRef ref : analysis.tree.orphans) {
            os << ' ' << ref_str(ref);
        }
        os << "\n";
    }
    os << "\nacknowledgments (" << analysis.acknowledgments.size() << "):\n";
    for (const AcknClassification& a : analysis.acknowledgments) {
        os << "  " << ref_str(a.site) << " " << a.speaker << "  "
           << to_string(a.structural_class) << "  " << to_string(a.pattern);
        if (a.embedded) {
            os << "  [embedded]";
        }
        os << "\n      " << a.rationale << "\n";
    }
    for (const std::string& note : analysis.tree.notes) {
        os << "note: " << note << "\n";
    }
    os << "\n" << corpus_report_text(aggregate_one(analysis));
    return os.str();
}

std::string corpus_report_text(const CorpusReport& report) {
    std::ostringstream os;
    os << "dialogues: " << report.dialogue_count << "\n";
    os << "turns: " << report.turn_count << "\n";
    os << "acknowledgments: " << report.ackn_count << "\n";
    os << "ackn per turn: " << ratio_str(report.ackn_per_turn()) << "\n";
    os << "per class:\n";
    for (const auto& [key, count] : report.per_class) {
        os << "  " << key << ": " << count << "\n";
    }
    os << "per pattern:\n";
    for (const auto& [key, count] : report.per_pattern) {
        os << "  " << key << ": " << count << "\n";
    }
    os << "per speaker:\n";
    for (const auto& [key, count] : report.per_speaker) {
        os << "  " << key << ": " << count << "\n";
    }
    os << "repair: " << report.repair_ackn_count << " ackn / "
       << report.repair_turn_count << " turns, rate "
       << ratio_str(report.repair_rate()) << "\n";
    os << "non-repair: " << report.nonrepair_ackn_count << " ackn / "
       << report.nonrepair_turn_count << " turns, rate "
       << ratio_str(report.nonrepair_rate()) << "\n";
    return os.str();
}

bool has_unclassified(const DialogueAnalysis& analysis) {
    for (const AcknClassification& a : analysis.acknowledgments) {
        if (a.pattern == Pattern::Unclassified) {
            return true;
        }
    }
    return false;
}

} // namespace ackkit
