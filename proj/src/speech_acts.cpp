#include "ackkit/speech_acts.hpp"

#include <algorithm>
#include <cctype>

namespace ackkit {

std::string_view to_string(SpeechAct act) {
    switch (act) {
    case SpeechAct::Inform:   return "inform";
    case SpeechAct::Request:  return "request";
    case SpeechAct::MRequest: return "mrequest";
    case SpeechAct::MDirect:  return "mdirect";
    case SpeechAct::Preclose: return "preclose";
    case SpeechAct::Ackn:     return "ackn";
    case SpeechAct::Assess:   return "assess";
    case SpeechAct::Other:    return "other";
    }
    return "other";
}

std::optional<SpeechAct> parse_speech_act(std::string_view token) {
    std::string lowered(token);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (SpeechAct act : kAllSpeechActs) {
        if (lowered == to_string(act)) {
            return act;
        }
    }
    return std::nullopt;
}

} // namespace ackkit
