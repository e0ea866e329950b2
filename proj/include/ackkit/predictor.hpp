#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ackkit/classify.hpp"
#include "ackkit/exchange.hpp"

namespace ackkit {

enum class Strength {
    Expected,   // structurally awaited: an open exchange awaits completion
    Admissible, // licensed but optional
};

std::string_view to_string(Strength s);

struct Expectation {
    std::string speaker;
    SpeechAct act = SpeechAct::Other;
    std::optional<StructuralClass> class_if_ackn; // present iff act == ackn
    std::optional<Pattern> pattern_if_ackn;
    Strength strength = Strength::Admissible;
};

// Incremental dialogue state. Drives the same R1-R5 machinery as the batch
// exchange parser, so replaying a dialogue through advance() realizes
// exactly the tree parse_exchanges would build.
class DialogueState {
public:
    // Throws std::invalid_argument on duplicate labels.
    DialogueState(std::string speaker_a, std::string speaker_b);

    // Throws std::invalid_argument on a speaker outside the pair.
    void advance(std::string_view speaker, const Utterance& utterance);

    // Acknowledgment and initiation acts currently licensed for `speaker`,
    // with class and pattern forecasts for the acknowledgment entries.
    std::vector<Expectation> expected_acts(std::string_view speaker) const;

    // The exchange tree realized by the utterances advanced so far.
    ExchangeTree realized_tree() const { return builder_.snapshot(); }

    const std::optional<std::string>& current_turn_speaker() const {
        return builder_.current_turn_speaker();
    }

private:
    SpeechAct act_at(UttRef ref) const {
        return acts_[static_cast<size_t>(ref.turn)][static_cast<size_t>(ref.utt)];
    }

    ExchangeBuilder builder_;
    std::vector<std::vector<SpeechAct>> acts_; // acts advanced so far, by turn
};

DialogueState init_state(std::string speaker_a, std::string speaker_b);

// Folds advance over every utterance of d.
DialogueState replay_dialogue(const Dialogue& d);

} // namespace ackkit
