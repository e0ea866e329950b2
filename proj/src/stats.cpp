#include "ackkit/stats.hpp"

#include <set>

namespace ackkit {

DialogueAnalysis analyze_dialogue(Dialogue d, const ClassifyOptions& options) {
    ExchangeTree tree = parse_exchanges(d);
    auto acks = classify_acknowledgments(tree, d, options);
    return DialogueAnalysis{std::move(d), std::move(tree), std::move(acks)};
}

std::optional<double> CorpusReport::ackn_per_turn() const {
    if (turn_count == 0) {
        return std::nullopt;
    }
    return static_cast<double>(ackn_count) / static_cast<double>(turn_count);
}

std::optional<double> CorpusReport::repair_rate() const {
    if (repair_turn_count == 0) {
        return std::nullopt;
    }
    return static_cast<double>(repair_ackn_count) /
           static_cast<double>(repair_turn_count);
}

std::optional<double> CorpusReport::nonrepair_rate() const {
    if (nonrepair_turn_count == 0) {
        return std::nullopt;
    }
    return static_cast<double>(nonrepair_ackn_count) /
           static_cast<double>(nonrepair_turn_count);
}

std::string pattern_key(Pattern p, bool embedded) {
    std::string key(to_string(p));
    if (embedded) {
        key += " (embedded)";
    }
    return key;
}

namespace {

void collect_refs(const ExchangeNode& node, std::vector<UttRef>& refs) {
    if (node.inner) {
        collect_refs(*node.inner, refs);
    } else if (node.init_ref) {
        refs.push_back(*node.init_ref);
    }
    refs.insert(refs.end(), node.completion.begin(), node.completion.end());
    refs.insert(refs.end(), node.acceptances.begin(), node.acceptances.end());
}

} // namespace

CorpusReport aggregate_one(const DialogueAnalysis& analysis) {
    const Dialogue& d = analysis.dialogue;
    CorpusReport report;
    report.dialogue_count = 1;
    report.turn_count = static_cast<long>(d.turns.size());
    report.ackn_count = static_cast<long>(analysis.acknowledgments.size());

    for (const AcknClassification& a : analysis.acknowledgments) {
        report.per_class[std::string(to_string(a.structural_class))] += 1;
        report.per_pattern[pattern_key(a.pattern, a.embedded)] += 1;
        report.per_speaker[a.speaker] += 1;
    }

    // Repair context: a root exchange whose (recursive) utterances include
    // an mrequest or mdirect. A turn participates when any of its
    // utterances is attached under such a root.
    std::set<UttRef> repair_refs;
    std::set<int> repair_turns;
    for (const auto& root : analysis.tree.roots) {
        std::vector<UttRef> refs;
        collect_refs(*root, refs);
        bool repair = false;
        for (UttRef ref : refs) {
            repair = repair || is_meta_act(utterance_at(d, ref).act);
        }
        if (repair) {
            for (UttRef ref : refs) {
                repair_refs.insert(ref);
                repair_turns.insert(ref.turn);
            }
        }
    }
    for (const AcknClassification& a : analysis.acknowledgments) {
        if (repair_refs.count(a.site)) {
            report.repair_ackn_count += 1;
        } else {
            report.nonrepair_ackn_count += 1;
        }
    }
    report.repair_turn_count = static_cast<long>(repair_turns.size());
    report.nonrepair_turn_count =
        report.turn_count - report.repair_turn_count;
    return report;
}

CorpusReport merge(CorpusReport a, const CorpusReport& b) {
    a.dialogue_count += b.dialogue_count;
    a.turn_count += b.turn_count;
    a.ackn_count += b.ackn_count;
    for (const auto& [key, count] : b.per_class) {
        a.per_class[key] += count;
    }
    for (const auto& [key, count] : b.per_pattern) {
        a.per_pattern[key] += count;
    }
    for (const auto& [key, count] : b.per_speaker) {
        a.per_speaker[key] += count;
    }
    a.repair_ackn_count += b.repair_ackn_count;
    a.repair_turn_count += b.repair_turn_count;
    a.nonrepair_ackn_count += b.nonrepair_ackn_count;
    a.nonrepair_turn_count += b.nonrepair_turn_count;
    return a;
}

CorpusReport aggregate(const std::vector<DialogueAnalysis>& corpus) {
    CorpusReport report;
    for (const DialogueAnalysis& analysis : corpus) {
        report = merge(std::move(report), aggregate_one(analysis));
    }
    return report;
}

} // namespace ackkit
