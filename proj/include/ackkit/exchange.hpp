#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ackkit/dialogue.hpp"

namespace ackkit {

enum class ExchangeStatus {
    Open,      // initiation awaiting completion
    Completed, // completion present, no acceptance
    Closed,    // acceptance present
};

std::string_view to_string(ExchangeStatus status);

// One exchange: an initiation (an utterance, or a whole embedded exchange
// standing in for one), an optional completion segment by the other party,
// and optional trailing acceptances by the initiator.
struct ExchangeNode {
    // Exactly one of init_ref / inner is set.
    std::optional<UttRef> init_ref;
    std::unique_ptr<ExchangeNode> inner;

    SpeechAct initiation_act = SpeechAct::Other; // inherited from inner when embedded
    std::string initiator;
    std::vector<UttRef> completion;  // all within one turn by the non-initiator
    std::vector<UttRef> acceptances; // non-empty only when completion present
    ExchangeStatus status = ExchangeStatus::Open;

    bool embedded() const { return inner != nullptr; }
    // 0 for an atomic initiation, 1 + depth(inner) otherwise.
    int embedding_depth() const;

    std::unique_ptr<ExchangeNode> clone() const;
    bool operator==(const ExchangeNode& other) const;
};

// Exchange analysis of a whole dialogue. Every utterance of the source
// dialogue appears exactly once across node slots, self_ackn_sites and
// orphans (the partition invariant).
struct ExchangeTree {
    std::vector<std::unique_ptr<ExchangeNode>> roots;
    std::vector<UttRef> self_ackn_sites; // within-turn self-acknowledgments
    std::vector<UttRef> orphans;         // utterances the grammar could not attach
    std::vector<std::string> notes;      // analysis flags, e.g. assess used as completion

    ExchangeTree clone() const;
    bool operator==(const ExchangeTree& other) const;
};

// Incremental construction shared by the batch parser and the dialogue-state
// predictor. Utterances are fed left to right; precedence is strictly
// R1 (within-turn self-ackn) > R2 (completion) > R3 (acceptance) >
// R4 (lift of the last closed inform exchange into an embedded initiation)
// > R5 (orphan). Non-ackn acts extend an active responding segment when one
// is theirs, complete an open request/mrequest when they are an inform by
// the other party, and otherwise open a new exchange.
class ExchangeBuilder {
public:
    static constexpr int kMaxEmbeddingDepth = 8;

    ExchangeBuilder(std::string speaker_a, std::string speaker_b);

    const std::string& other_speaker(std::string_view speaker) const;

    // Throws std::invalid_argument on a speaker outside the pair.
    void add(std::string_view speaker, const Utterance& utterance);

    ExchangeTree snapshot() const; // deep copy of the tree so far
    ExchangeTree take() &&;        // move the tree out; builder is spent

    // State inspection (predictor support).
    const ExchangeNode* stack_top() const;
    bool stack_empty() const { return stack_.empty(); }
    const ExchangeNode* last_closed() const { return last_closed_; }
    const std::optional<std::string>& current_turn_speaker() const {
        return current_turn_speaker_;
    }
    const std::vector<SpeechAct>& current_turn_acts() const {
        return current_turn_acts_;
    }
    int current_turn_index() const { return turn_index_; }
    // True when `speaker` completed the stack top this turn and may extend
    // the responding segment.
    bool in_completion_segment(std::string_view speaker) const;
    // True when `speaker` closed last_closed this turn and may add further
    // acceptances.
    bool in_acceptance_segment(std::string_view speaker) const;

private:
    void open_exchange(const std::string& speaker, SpeechAct act, UttRef ref);

    std::array<std::string, 2> speakers_;
    ExchangeTree tree_;
    std::vector<ExchangeNode*> stack_; // open below, top may be completed
    ExchangeNode* last_closed_ = nullptr;

    int turn_index_ = -1;
    int utt_index_ = -1;
    std::optional<std::string> current_turn_speaker_;
    std::vector<SpeechAct> current_turn_acts_;
};

// Batch analysis. Precondition: d passes validate_dialogue. Unattachable
// utterances become orphans; this never throws on valid dialogues.
ExchangeTree parse_exchanges(const Dialogue& d);

enum class CoverageRole {
    Initiation,
    Completion,
    Acceptance,
    SelfAckn,
    Orphan,
};

std::string_view to_string(CoverageRole role);

struct CoverageEntry {
    UttRef ref;
    CoverageRole role;

    bool operator==(const CoverageEntry&) const = default;
};

// Enumerates every utterance of d exactly once with its structural role,
// in document order. Throws std::invalid_argument("tree/dialogue mismatch")
// when t does not partition d's utterances.
std::vector<CoverageEntry> utterance_coverage(const ExchangeTree& t, const Dialogue& d);

} // namespace ackkit
