#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ackkit {

// Closed act inventory. ackn and assess are the acknowledgment-family acts;
// mrequest and mdirect are meta-acts addressing dialogue control.
enum class SpeechAct {
    Inform,
    Request,
    MRequest,
    MDirect,
    Preclose,
    Ackn,
    Assess,
    Other,
};

inline constexpr SpeechAct kAllSpeechActs[] = {
    SpeechAct::Inform,  SpeechAct::Request, SpeechAct::MRequest,
    SpeechAct::MDirect, SpeechAct::Preclose, SpeechAct::Ackn,
    SpeechAct::Assess,  SpeechAct::Other,
};

std::string_view to_string(SpeechAct act);

// Case-insensitive; nullopt for anything outside the inventory.
std::optional<SpeechAct> parse_speech_act(std::string_view token);

inline bool is_acknowledgment_family(SpeechAct act) {
    return act == SpeechAct::Ackn || act == SpeechAct::Assess;
}

// Acts that may open a new exchange. `other` and the acknowledgment
// family never initiate.
inline bool is_initiation_act(SpeechAct act) {
    switch (act) {
    case SpeechAct::Inform:
    case SpeechAct::Request:
    case SpeechAct::MRequest:
    case SpeechAct::MDirect:
    case SpeechAct::Preclose:
        return true;
    default:
        return false;
    }
}

// Meta-acts mark repair contexts (clarification subdialogues, explicit
// dialogue control).
inline bool is_meta_act(SpeechAct act) {
    return act == SpeechAct::MRequest || act == SpeechAct::MDirect;
}

} // namespace ackkit
