#pragma once

#include <string>

#include "ackkit/stats.hpp"

namespace ackkit {

// Canonical JSON renderings: keys in a fixed documented order, so equal
// inputs produce byte-identical output. The text renderings are
// human-oriented and carry no stability guarantee.

std::string analysis_report_json(const DialogueAnalysis& analysis);
std::string analysis_report_text(const DialogueAnalysis& analysis);

std::string corpus_report_json(const CorpusReport& report);
std::string corpus_report_text(const CorpusReport& report);

bool has_unclassified(const DialogueAnalysis& analysis);

} // namespace ackkit
