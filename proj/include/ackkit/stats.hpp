#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ackkit/classify.hpp"

namespace ackkit {

// One fully analyzed dialogue; the unit the corpus aggregator consumes.
struct DialogueAnalysis {
    Dialogue dialogue;
    ExchangeTree tree;
    std::vector<AcknClassification> acknowledgments;
};

DialogueAnalysis analyze_dialogue(Dialogue d, const ClassifyOptions& options = {});

// Corpus-level aggregate. Raw counts only; ratios are derived so that
// partial reports merge associatively. An absent ratio (zero denominator)
// is reported as absent, never 0/0.
struct CorpusReport {
    long dialogue_count = 0;
    long turn_count = 0;
    long ackn_count = 0;
    std::map<std::string, long> per_class;   // keyed by structural class name
    std::map<std::string, long> per_pattern; // embedded variants keyed separately
    std::map<std::string, long> per_speaker;

    // Repair context: exchanges containing a meta-act at any depth.
    long repair_ackn_count = 0;
    long repair_turn_count = 0;
    long nonrepair_ackn_count = 0;
    long nonrepair_turn_count = 0;

    std::optional<double> ackn_per_turn() const;
    std::optional<double> repair_rate() const;
    std::optional<double> nonrepair_rate() const;

    bool operator==(const CorpusReport&) const = default;
};

// Key used in per_pattern: the pattern name, with embedded realizations
// counted under their own key.
std::string pattern_key(Pattern p, bool embedded);

CorpusReport aggregate_one(const DialogueAnalysis& analysis);

// Associative, commutative merge of partial reports.
CorpusReport merge(CorpusReport a, const CorpusReport& b);

CorpusReport aggregate(const std::vector<DialogueAnalysis>& corpus);

} // namespace ackkit
