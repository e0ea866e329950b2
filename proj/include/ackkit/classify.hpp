#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ackkit/exchange.hpp"

namespace ackkit {

// The three structural classes: acknowledgment as pair completion,
// acknowledgment by the initiator after a completed pair, and
// acknowledgment inside the speaker's own turn.
enum class StructuralClass {
    OtherAckn,
    SelfOtherAckn,
    SelfAckn,
};

std::string_view to_string(StructuralClass c);

// The 12-entry pattern catalogue plus `unclassified`. Five patterns belong
// to other_ackn, four to self_other_ackn, three to self_ackn. Names render
// with `->` for turn boundaries and `+` for within-turn combination.
enum class Pattern {
    // other_ackn
    InformAckn,         // inform->ackn
    InformAcknMRequest, // inform->ackn+mrequest
    RequestAcknInform,  // request->ackn+inform
    MDirectAckn,        // mdirect->ackn
    PrecloseAckn,       // preclose->ackn
    // self_other_ackn
    InformAcknAckn,     // inform->ackn->ackn
    RequestInformAckn,  // request->inform->ackn
    MRequestInformAckn, // mrequest->inform->ackn
    MDirectAcknAckn,    // mdirect->ackn->ackn
    // self_ackn
    InformAcknInform,   // inform+ackn+inform
    MRequestSelfAckn,   // mrequest+ackn
    MDirectSelfAckn,    // mdirect+ackn
    Unclassified,
};

inline constexpr Pattern kCataloguePatterns[] = {
    Pattern::InformAckn,        Pattern::InformAcknMRequest,
    Pattern::RequestAcknInform, Pattern::MDirectAckn,
    Pattern::PrecloseAckn,      Pattern::InformAcknAckn,
    Pattern::RequestInformAckn, Pattern::MRequestInformAckn,
    Pattern::MDirectAcknAckn,   Pattern::InformAcknInform,
    Pattern::MRequestSelfAckn,  Pattern::MDirectSelfAckn,
};

std::string_view to_string(Pattern p);
StructuralClass class_of(Pattern p); // throws on Unclassified

// Act template for a catalogue pattern: one inner vector per turn.
// Throws std::invalid_argument("no template") on Unclassified.
struct PatternTemplate {
    std::vector<std::vector<SpeechAct>> turns;

    std::string to_string() const; // e.g. "request->inform->ackn"
};

PatternTemplate pattern_template(Pattern p);

struct AcknClassification {
    UttRef site;
    std::string speaker;
    SpeechAct act = SpeechAct::Ackn; // assess only when widened
    StructuralClass structural_class = StructuralClass::OtherAckn;
    Pattern pattern = Pattern::Unclassified;
    bool embedded = false;  // governing exchange's initiation is an exchange
    std::string rationale;  // which rule fired; diagnostic only

    bool operator==(const AcknClassification& other) const {
        return site == other.site && speaker == other.speaker &&
               act == other.act && structural_class == other.structural_class &&
               pattern == other.pattern && embedded == other.embedded;
    }
};

struct ClassifyOptions {
    // Widens classification to assess utterances; by default they are
    // reported separately and excluded from acknowledgment counts.
    bool include_assess = false;
};

// Pattern derivation rules, shared with the predictor's forecasts.
//
// For an acknowledgment inside a completion segment: the base
// initiation->ackn pairing, upgraded to a catalogue compound when the
// trailing same-turn acts match one exactly.
Pattern completion_pattern(SpeechAct initiation,
                           const std::vector<SpeechAct>& trailing);

// For an acceptance: initiation -> primary completion act -> ackn.
Pattern acceptance_pattern(SpeechAct initiation, SpeechAct primary_completion);

// The act that canonically answers an initiation: the last content act of
// the completion segment, falling back to its first act.
SpeechAct primary_completion_act(const std::vector<SpeechAct>& completion_acts);

// One classification per acknowledgment utterance, in document order.
// Throws std::invalid_argument("tree/dialogue mismatch") when t was not
// produced from d.
std::vector<AcknClassification>
classify_acknowledgments(const ExchangeTree& t, const Dialogue& d,
                         const ClassifyOptions& options = {});

} // namespace ackkit
