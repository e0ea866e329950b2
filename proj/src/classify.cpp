#include "ackkit/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace ackkit {

std::string_view to_string(StructuralClass c) {
    switch (c) {
    case StructuralClass::OtherAckn:     return "other_ackn";
    case StructuralClass::SelfOtherAckn: return "self_other_ackn";
    case StructuralClass::SelfAckn:      return "self_ackn";
    }
    return "other_ackn";
}

std::string_view to_string(Pattern p) {
    switch (p) {
    case Pattern::InformAckn:         return "inform->ackn";
    case Pattern::InformAcknMRequest: return "inform->ackn+mrequest";
    case Pattern::RequestAcknInform:  return "request->ackn+inform";
    case Pattern::MDirectAckn:        return "mdirect->ackn";
    case Pattern::PrecloseAckn:       return "preclose->ackn";
    case Pattern::InformAcknAckn:     return "inform->ackn->ackn";
    case Pattern::RequestInformAckn:  return "request->inform->ackn";
    case Pattern::MRequestInformAckn: return "mrequest->inform->ackn";
    case Pattern::MDirectAcknAckn:    return "mdirect->ackn->ackn";
    case Pattern::InformAcknInform:   return "inform+ackn+inform";
    case Pattern::MRequestSelfAckn:   return "mrequest+ackn";
    case Pattern::MDirectSelfAckn:    return "mdirect+ackn";
    case Pattern::Unclassified:       return "unclassified";
    }
    return "unclassified";
}

StructuralClass class_of(Pattern p) {
    switch (p) {
    case Pattern::InformAckn:
    case Pattern::InformAcknMRequest:
    case Pattern::RequestAcknInform:
    case Pattern::MDirectAckn:
    case Pattern::PrecloseAckn:
        return StructuralClass::OtherAckn;
    case Pattern::InformAcknAckn:
    case Pattern::RequestInformAckn:
    case Pattern::MRequestInformAckn:
    case Pattern::MDirectAcknAckn:
        return StructuralClass::SelfOtherAckn;
    case Pattern::InformAcknInform:
    case Pattern::MRequestSelfAckn:
    case Pattern::MDirectSelfAckn:
        return StructuralClass::SelfAckn;
    case Pattern::Unclassified:
        break;
    }
    throw std::invalid_argument("no class for unclassified pattern");
}

std::string PatternTemplate::to_string() const {
    std::string out;
    for (size_t t = 0; t < turns.size(); ++t) {
        if (t > 0) {
            out += "->";
        }
        for (size_t i = 0; i < turns[t].size(); ++i) {
            if (i > 0) {
                out += '+';
            }
            out += ackkit::to_string(turns[t][i]);
        }
    }
    return out;
}

PatternTemplate pattern_template(Pattern p) {
    using A = SpeechAct;
    switch (p) {
    case Pattern::InformAckn:         return {{{A::Inform}, {A::Ackn}}};
    case Pattern::InformAcknMRequest: return {{{A::Inform}, {A::Ackn, A::MRequest}}};
    case Pattern::RequestAcknInform:  return {{{A::Request}, {A::Ackn, A::Inform}}};
    case Pattern::MDirectAckn:        return {{{A::MDirect}, {A::Ackn}}};
    case Pattern::PrecloseAckn:       return {{{A::Preclose}, {A::Ackn}}};
    case Pattern::InformAcknAckn:     return {{{A::Inform}, {A::Ackn}, {A::Ackn}}};
    case Pattern::RequestInformAckn:  return {{{A::Request}, {A::Inform}, {A::Ackn}}};
    case Pattern::MRequestInformAckn: return {{{A::MRequest}, {A::Inform}, {A::Ackn}}};
    case Pattern::MDirectAcknAckn:    return {{{A::MDirect}, {A::Ackn}, {A::Ackn}}};
    case Pattern::InformAcknInform:   return {{{A::Inform, A::Ackn, A::Inform}}};
    case Pattern::MRequestSelfAckn:   return {{{A::MRequest, A::Ackn}}};
    case Pattern::MDirectSelfAckn:    return {{{A::MDirect, A::Ackn}}};
    case Pattern::Unclassified:
        break;
    }
    throw std::invalid_argument("no template");
}

Pattern completion_pattern(SpeechAct initiation,
                           const std::vector<SpeechAct>& trailing) {
    switch (initiation) {
    case SpeechAct::Inform:
        if (trailing.size() == 1 && trailing[0] == SpeechAct::MRequest) {
            return Pattern::InformAcknMRequest;
        }
        return Pattern::InformAckn;
    case SpeechAct::Request:
        if (trailing.size() == 1 && trailing[0] == SpeechAct::Inform) {
            return Pattern::RequestAcknInform;
        }
        return Pattern::Unclassified;
    case SpeechAct::MDirect:
        return Pattern::MDirectAckn;
    case SpeechAct::Preclose:
        return Pattern::PrecloseAckn;
    default:
        return Pattern::Unclassified;
    }
}

Pattern acceptance_pattern(SpeechAct initiation, SpeechAct primary_completion) {
    if (initiation == SpeechAct::Inform && primary_completion == SpeechAct::Ackn) {
        return Pattern::InformAcknAckn;
    }
    if (initiation == SpeechAct::Request && primary_completion == SpeechAct::Inform) {
        return Pattern::RequestInformAckn;
    }
    if (initiation == SpeechAct::MRequest && primary_completion == SpeechAct::Inform) {
        return Pattern::MRequestInformAckn;
    }
    if (initiation == SpeechAct::MDirect && primary_completion == SpeechAct::Ackn) {
        return Pattern::MDirectAcknAckn;
    }
    return Pattern::Unclassified;
}

SpeechAct primary_completion_act(const std::vector<SpeechAct>& completion_acts) {
    for (auto it = completion_acts.rbegin(); it != completion_acts.rend(); ++it) {
        if (!is_acknowledgment_family(*it)) {
            return *it;
        }
    }
    return completion_acts.front();
}

namespace {

std::string acts_joined(const std::vector<SpeechAct>& acts, char sep) {
    std::string out;
    for (size_t i = 0; i < acts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += to_string(acts[i]);
    }
    return out;
}

std::vector<SpeechAct> acts_of(const Dialogue& d, const std::vector<UttRef>& refs) {
    std::vector<SpeechAct> acts;
    acts.reserve(refs.size());
    for (UttRef ref : refs) {
        acts.push_back(utterance_at(d, ref).act);
    }
    return acts;
}

struct Collector {
    const Dialogue& dialogue;
    const ClassifyOptions& options;
    std::vector<AcknClassification> out;

    bool included(SpeechAct act) const {
        return act == SpeechAct::Ackn ||
               (options.include_assess && act == SpeechAct::Assess);
    }

    const std::string& speaker_of(UttRef ref) const {
        return dialogue.turns[static_cast<size_t>(ref.turn)].speaker;
    }

    void add(UttRef site, SpeechAct act, StructuralClass cls, Pattern pattern,
             bool embedded, std::string rationale) {
        out.push_back({site, speaker_of(site), act, cls, pattern, embedded,
                       std::move(rationale)});
    }

    void visit(const ExchangeNode& node) {
        if (node.inner) {
            visit(*node.inner);
        }
        std::string init_name(to_string(node.initiation_act));

        for (size_t i = 0; i < node.completion.size(); ++i) {
            UttRef ref = node.completion[i];
            SpeechAct act = utterance_at(dialogue, ref).act;
            if (!included(act)) {
                continue;
            }
            std::vector<SpeechAct> trailing;
            for (size_t j = i + 1; j < node.completion.size(); ++j) {
                trailing.push_back(utterance_at(dialogue, node.completion[j]).act);
            }
            Pattern pattern = completion_pattern(node.initiation_act, trailing);
            std::string rationale =
                i == 0 ? "R2: completes " + init_name + " exchange"
                       : "R2: additional act in responding segment of " +
                             init_name + " exchange";
            if (!trailing.empty() && pattern != Pattern::InformAcknMRequest &&
                pattern != Pattern::RequestAcknInform) {
                rationale += "; trailing same-turn acts: " + acts_joined(trailing, '+');
            }
            if (act == SpeechAct::Assess) {
                rationale = "assessment; " + rationale;
            }
            add(ref, act, StructuralClass::OtherAckn, pattern, node.embedded(),
                std::move(rationale));
        }

        for (size_t i = 0; i < node.acceptances.size(); ++i) {
            UttRef ref = node.acceptances[i];
            SpeechAct act = utterance_at(dialogue, ref).act;
            if (!included(act)) {
                continue;
            }
            SpeechAct primary = primary_completion_act(acts_of(dialogue, node.completion));
            Pattern pattern = acceptance_pattern(node.initiation_act, primary);
            std::string rationale =
                (i == 0 ? "R3: accepts completed " : "R3: additional acceptance of ") +
                init_name + "->" + std::string(to_string(primary)) + " exchange";
            if (act == SpeechAct::Assess) {
                rationale = "assessment; " + rationale;
            }
            add(ref, act, StructuralClass::SelfOtherAckn, pattern, node.embedded(),
                std::move(rationale));
        }
    }
};

} // namespace

std::vector<AcknClassification>
classify_acknowledgments(const ExchangeTree& t, const Dialogue& d,
                         const ClassifyOptions& options) {
    utterance_coverage(t, d); // throws on tree/dialogue mismatch

    Collector collector{d, options, {}};
    for (const auto& root : t.roots) {
        collector.visit(*root);
    }

    for (UttRef ref : t.self_ackn_sites) {
        const Turn& turn = d.turns[static_cast<size_t>(ref.turn)];
        SpeechAct act = turn.utterances[static_cast<size_t>(ref.utt)].act;
        if (!collector.included(act)) {
            continue;
        }
        SpeechAct pred = turn.utterances[static_cast<size_t>(ref.utt) - 1].act;
        bool turn_final =
            static_cast<size_t>(ref.utt) + 1 == turn.utterances.size();
        Pattern pattern = Pattern::Unclassified;
        std::string rationale;
        if (turn_final) {
            rationale = "R1: turn-final self-ackn";
        } else {
            SpeechAct next = turn.utterances[static_cast<size_t>(ref.utt) + 1].act;
            if (pred == SpeechAct::Inform && next == SpeechAct::Inform) {
                pattern = Pattern::InformAcknInform;
            } else if (pred == SpeechAct::MRequest) {
                pattern = Pattern::MRequestSelfAckn;
            } else if (pred == SpeechAct::MDirect) {
                pattern = Pattern::MDirectSelfAckn;
            }
            rationale = "R1: self-acknowledgment between " +
                        std::string(to_string(pred)) + " and " +
                        std::string(to_string(next));
        }
        collector.add(ref, act, StructuralClass::SelfAckn, pattern, false,
                      std::move(rationale));
    }

    for (UttRef ref : t.orphans) {
        SpeechAct act = utterance_at(d, ref).act;
        if (!collector.included(act)) {
            continue;
        }
        collector.add(ref, act, StructuralClass::SelfAckn, Pattern::Unclassified,
                      false, "R5: unattached; outside any adjacency pair");
    }

    std::sort(collector.out.begin(), collector.out.end(),
              [](const AcknClassification& a, const AcknClassification& b) {
                  return a.site < b.site;
              });
    return collector.out;
}

} // namespace ackkit
