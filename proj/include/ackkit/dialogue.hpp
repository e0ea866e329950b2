#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ackkit/speech_acts.hpp"

namespace ackkit {

struct Utterance {
    SpeechAct act = SpeechAct::Other;
    std::string text; // surface form, informational only; may be empty

    bool operator==(const Utterance&) const = default;
};

struct Turn {
    std::string speaker;
    std::vector<Utterance> utterances; // non-empty

    bool operator==(const Turn&) const = default;
};

// A dyadic conversation: exactly two declared speaker labels, turns
// strictly alternating between them.
struct Dialogue {
    std::string id;
    std::array<std::string, 2> speakers;
    std::vector<Turn> turns;

    bool operator==(const Dialogue&) const = default;
};

// Position of an utterance within a dialogue (turn index, utterance index),
// both 0-based.
struct UttRef {
    int turn = 0;
    int utt = 0;

    auto operator<=>(const UttRef&) const = default;
};

const Utterance& utterance_at(const Dialogue& d, UttRef ref);

struct Violation {
    std::string rule;              // e.g. "consecutive turns same speaker"
    std::optional<int> turn_index; // offending turn, when one exists
    std::string message;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Violations are data, not faults: never throws.
ValidationResult validate_dialogue(const Dialogue& d);

// Joins consecutive same-speaker turns into single turns. Repairs the
// one invariant a hand-built Dialogue commonly breaks.
Dialogue merge_consecutive_turns(Dialogue d);

} // namespace ackkit
