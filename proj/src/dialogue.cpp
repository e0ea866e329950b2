#include "ackkit/dialogue.hpp"

#include <stdexcept>

namespace ackkit {

const Utterance& utterance_at(const Dialogue& d, UttRef ref) {
    if (ref.turn < 0 || ref.turn >= static_cast<int>(d.turns.size())) {
        throw std::out_of_range("utterance_at: turn index out of range");
    }
    const Turn& turn = d.turns[static_cast<size_t>(ref.turn)];
    if (ref.utt < 0 || ref.utt >= static_cast<int>(turn.utterances.size())) {
        throw std::out_of_range("utterance_at: utterance index out of range");
    }
    return turn.utterances[static_cast<size_t>(ref.utt)];
}

ValidationResult validate_dialogue(const Dialogue& d) {
    ValidationResult result;
    auto flag = [&](std::string rule, std::optional<int> turn, std::string message) {
        result.violations.push_back({std::move(rule), turn, std::move(message)});
    };

    if (d.speakers[0].empty() || d.speakers[1].empty()) {
        flag("speaker labels", std::nullopt, "both speaker labels must be non-empty");
    }
    if (d.speakers[0] == d.speakers[1]) {
        flag("two distinct speakers", std::nullopt,
             "declared speakers must be two distinct labels");
    }
    if (d.turns.empty()) {
        flag("no turns", std::nullopt, "dialogue has no turns");
    }

    for (size_t i = 0; i < d.turns.size(); ++i) {
        const Turn& turn = d.turns[i];
        int idx = static_cast<int>(i);
        if (turn.speaker != d.speakers[0] && turn.speaker != d.speakers[1]) {
            flag("unknown speaker", idx,
                 "turn speaker '" + turn.speaker + "' is not a declared speaker");
        }
        if (turn.utterances.empty()) {
            flag("empty turn", idx, "turn has no utterances");
        }
        if (i > 0 && d.turns[i - 1].speaker == turn.speaker) {
            flag("consecutive turns same speaker", idx,
                 "turn shares speaker '" + turn.speaker + "' with previous turn");
        }
    }
    return result;
}

Dialogue merge_consecutive_turns(Dialogue d) {
    std::vector<Turn> merged;
    for (Turn& turn : d.turns) {
        if (!merged.empty() && merged.back().speaker == turn.speaker) {
            auto& target = merged.back().utterances;
            target.insert(target.end(),
                          std::make_move_iterator(turn.utterances.begin()),
                          std::make_move_iterator(turn.utterances.end()));
        } else {
            merged.push_back(std::move(turn));
        }
    }
    d.turns = std::move(merged);
    return d;
}

} // namespace ackkit
