#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

using ackkit::Pattern;
using ackkit::SpeechAct;
using ackkit::StructuralClass;

namespace {

enum class Role {
    Init,
    Completes, // acknowledgment or inform answering an open initiation
    Accepts,   // acknowledgment closing the pair just completed
    Lifts,     // acknowledgment completing the last closed inform exchange
               // lifted into an embedded initiation
    Orphan,
};

} // namespace

std::vector<Classification> classify(const std::vector<SpeechAct>& acts) {
    const int n = static_cast<int>(acts.size());
    if (n > 4) {
        throw std::invalid_argument("oracle domain is at most four turns");
    }

    std::vector<Role> role(acts.size(), Role::Orphan);
    std::vector<int> target(acts.size(), -1);       // initiation position
    std::vector<int> completed_by(acts.size(), -1); // position that answered an Init
    std::vector<Classification> out;

    for (int i = 0; i < n; ++i) {
        SpeechAct act = acts[i];

        if (act == SpeechAct::Request) {
            role[i] = Role::Init;
            continue;
        }

        if (act == SpeechAct::Inform) {
            // An inform answers a request uttered at the previous position;
            // anything else starts a new exchange.
            if (i > 0 && acts[i - 1] == SpeechAct::Request) {
                role[i] = Role::Completes;
                target[i] = i - 1;
                completed_by[i - 1] = i;
            } else {
                role[i] = Role::Init;
            }
            continue;
        }

        // Acknowledgment.
        Classification c;
        c.turn = i;

        if (i > 0 && role[i - 1] == Role::Completes) {
            // The exchange completed at the previous position awaits its
            // initiator, which by alternation is this very speaker.
            int init_pos = target[i - 1];
            role[i] = Role::Accepts;
            target[i] = init_pos;
            c.structural_class = StructuralClass::SelfOtherAckn;
            SpeechAct init_act = acts[init_pos];
            SpeechAct completion_act = acts[i - 1];
            if (init_act == SpeechAct::Inform && completion_act == SpeechAct::Ackn) {
                c.pattern = Pattern::InformAcknAckn;
            } else if (init_act == SpeechAct::Request &&
                       completion_act == SpeechAct::Inform) {
                c.pattern = Pattern::RequestInformAckn;
            } else {
                c.pattern = Pattern::Unclassified;
            }
            out.push_back(c);
            continue;
        }

        // Topmost still-open initiation, if any.
        int top = -1;
        for (int j = i - 1; j >= 0; --j) {
            if (role[j] == Role::Init && completed_by[j] < 0) {
                top = j;
                break;
            }
        }
        if (top >= 0) {
            if ((i - top) % 2 == 1) {
                // Initiated by the other party: this acknowledgment
                // completes it.
                role[i] = Role::Completes;
                target[i] = top;
                completed_by[top] = i;
                c.structural_class = StructuralClass::OtherAckn;
                c.pattern = acts[top] == SpeechAct::Inform ? Pattern::InformAckn
                                                           : Pattern::Unclassified;
            } else {
                // Own open initiation on top: nothing to acknowledge.
                c.structural_class = StructuralClass::SelfAckn;
                c.pattern = Pattern::Unclassified;
            }
            out.push_back(c);
            continue;
        }

        // No open exchange. Look for a closed one not superseded by a newer
        // root; only orphans may intervene.
        int accept_pos = -1;
        for (int j = i - 1; j >= 0; --j) {
            if (role[j] == Role::Orphan) {
                continue;
            }
            if (role[j] == Role::Accepts) {
                accept_pos = j;
            }
            break;
        }
        if (accept_pos >= 0) {
            int init_pos = target[accept_pos];
            bool other_initiated = (i - init_pos) % 2 == 1;
            if (acts[init_pos] == SpeechAct::Inform && other_initiated) {
                role[i] = Role::Lifts;
                c.structural_class = StructuralClass::OtherAckn;
                c.pattern = Pattern::InformAckn;
                c.embedded = true;
                out.push_back(c);
                continue;
            }
        }

        c.structural_class = StructuralClass::SelfAckn;
        c.pattern = Pattern::Unclassified;
        out.push_back(c);
    }
    return out;
}

} // namespace oracle
