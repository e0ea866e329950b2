#include "ackkit/predictor.hpp"

#include <stdexcept>

namespace ackkit {

std::string_view to_string(Strength s) {
    switch (s) {
    case Strength::Expected:   return "expected";
    case Strength::Admissible: return "admissible";
    }
    return "admissible";
}

DialogueState::DialogueState(std::string speaker_a, std::string speaker_b)
    : builder_(std::move(speaker_a), std::move(speaker_b)) {}

void DialogueState::advance(std::string_view speaker, const Utterance& utterance) {
    builder_.add(speaker, utterance);
    size_t turn = static_cast<size_t>(builder_.current_turn_index());
    if (turn == acts_.size()) {
        acts_.emplace_back();
    }
    acts_[turn].push_back(utterance.act);
}

namespace {

std::optional<Pattern> catalogued(Pattern p) {
    if (p == Pattern::Unclassified) {
        return std::nullopt;
    }
    return p;
}

} // namespace

std::vector<Expectation> DialogueState::expected_acts(std::string_view speaker) const {
    builder_.other_speaker(speaker); // throws on unknown speaker
    std::string who(speaker);
    std::vector<Expectation> out;

    bool would_be_turn_initial = !builder_.current_turn_speaker() ||
                                 *builder_.current_turn_speaker() != speaker;
    const ExchangeNode* top = builder_.stack_top();

    // Completion of an open exchange initiated by the other party. This is
    // the one structurally awaited acknowledgment.
    if (would_be_turn_initial && top && top->status == ExchangeStatus::Open &&
        top->initiator != speaker) {
        out.push_back({who, SpeechAct::Ackn, StructuralClass::OtherAckn,
                       catalogued(completion_pattern(top->initiation_act, {})),
                       Strength::Expected});
    }
    if (top && top->status == ExchangeStatus::Open && top->initiator != speaker &&
        (top->initiation_act == SpeechAct::Request ||
         top->initiation_act == SpeechAct::MRequest)) {
        out.push_back({who, SpeechAct::Inform, std::nullopt, std::nullopt,
                       Strength::Expected});
    }

    // Acceptance of the completed exchange this speaker initiated.
    if (would_be_turn_initial && top &&
        top->status == ExchangeStatus::Completed && top->initiator == speaker) {
        std::vector<SpeechAct> completion_acts;
        for (UttRef ref : top->completion) {
            completion_acts.push_back(act_at(ref));
        }
        out.push_back({who, SpeechAct::Ackn, StructuralClass::SelfOtherAckn,
                       catalogued(acceptance_pattern(
                           top->initiation_act,
                           primary_completion_act(completion_acts))),
                       Strength::Admissible});
    }

    // Further acknowledgment within the responding segment this speaker
    // opened this turn.
    if (builder_.in_completion_segment(speaker)) {
        out.push_back({who, SpeechAct::Ackn, StructuralClass::OtherAckn,
                       catalogued(completion_pattern(top->initiation_act, {})),
                       Strength::Admissible});
    }

    // Further acceptance within the closing turn.
    if (builder_.in_acceptance_segment(speaker)) {
        const ExchangeNode* closed = builder_.last_closed();
        std::vector<SpeechAct> completion_acts;
        for (UttRef ref : closed->completion) {
            completion_acts.push_back(act_at(ref));
        }
        out.push_back({who, SpeechAct::Ackn, StructuralClass::SelfOtherAckn,
                       catalogued(acceptance_pattern(
                           closed->initiation_act,
                           primary_completion_act(completion_acts))),
                       Strength::Admissible});
    }

    // Lift: acknowledging the just-closed inform exchange of the other party
    // as an embedded initiation.
    if (would_be_turn_initial && builder_.stack_empty()) {
        const ExchangeNode* closed = builder_.last_closed();
        if (closed && closed->initiation_act == SpeechAct::Inform &&
            closed->initiator != speaker &&
            closed->embedding_depth() + 1 <= ExchangeBuilder::kMaxEmbeddingDepth) {
            out.push_back({who, SpeechAct::Ackn, StructuralClass::OtherAckn,
                           Pattern::InformAckn, Strength::Admissible});
        }
    }

    // Self-acknowledgment while holding the turn after a content act.
    if (builder_.current_turn_speaker() &&
        *builder_.current_turn_speaker() == speaker &&
        !builder_.current_turn_acts().empty()) {
        switch (builder_.current_turn_acts().back()) {
        case SpeechAct::Inform:
            out.push_back({who, SpeechAct::Ackn, StructuralClass::SelfAckn,
                           Pattern::InformAcknInform, Strength::Admissible});
            break;
        case SpeechAct::MRequest:
            out.push_back({who, SpeechAct::Ackn, StructuralClass::SelfAckn,
                           Pattern::MRequestSelfAckn, Strength::Admissible});
            break;
        case SpeechAct::MDirect:
            out.push_back({who, SpeechAct::Ackn, StructuralClass::SelfAckn,
                           Pattern::MDirectSelfAckn, Strength::Admissible});
            break;
        default:
            break;
        }
    }

    // Initiation acts are always admissible.
    for (SpeechAct act : {SpeechAct::Inform, SpeechAct::Request, SpeechAct::MRequest,
                          SpeechAct::MDirect, SpeechAct::Preclose}) {
        bool listed = false;
        for (const Expectation& e : out) {
            listed = listed || e.act == act;
        }
        if (!listed) {
            out.push_back({who, act, std::nullopt, std::nullopt,
                           Strength::Admissible});
        }
    }
    return out;
}

DialogueState init_state(std::string speaker_a, std::string speaker_b) {
    return DialogueState(std::move(speaker_a), std::move(speaker_b));
}

DialogueState replay_dialogue(const Dialogue& d) {
    DialogueState state(d.speakers[0], d.speakers[1]);
    for (const Turn& turn : d.turns) {
        for (const Utterance& utt : turn.utterances) {
            state.advance(turn.speaker, utt);
        }
    }
    return state;
}

} // namespace ackkit
