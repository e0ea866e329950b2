#include "ackkit/exchange.hpp"

#include <algorithm>
#include <stdexcept>

namespace ackkit {

std::string_view to_string(ExchangeStatus status) {
    switch (status) {
    case ExchangeStatus::Open:      return "open";
    case ExchangeStatus::Completed: return "completed";
    case ExchangeStatus::Closed:    return "closed";
    }
    return "open";
}

std::string_view to_string(CoverageRole role) {
    switch (role) {
    case CoverageRole::Initiation: return "initiation";
    case CoverageRole::Completion: return "completion";
    case CoverageRole::Acceptance: return "acceptance";
    case CoverageRole::SelfAckn:   return "self_ackn";
    case CoverageRole::Orphan:     return "orphan";
    }
    return "orphan";
}

int ExchangeNode::embedding_depth() const {
    int depth = 0;
    for (const ExchangeNode* node = inner.get(); node; node = node->inner.get()) {
        ++depth;
    }
    return depth;
}

std::unique_ptr<ExchangeNode> ExchangeNode::clone() const {
    auto copy = std::make_unique<ExchangeNode>();
    copy->init_ref = init_ref;
    if (inner) {
        copy->inner = inner->clone();
    }
    copy->initiation_act = initiation_act;
    copy->initiator = initiator;
    copy->completion = completion;
    copy->acceptances = acceptances;
    copy->status = status;
    return copy;
}

bool ExchangeNode::operator==(const ExchangeNode& other) const {
    if (init_ref != other.init_ref || initiation_act != other.initiation_act ||
        initiator != other.initiator || completion != other.completion ||
        acceptances != other.acceptances || status != other.status) {
        return false;
    }
    if (static_cast<bool>(inner) != static_cast<bool>(other.inner)) {
        return false;
    }
    return !inner || *inner == *other.inner;
}

ExchangeTree ExchangeTree::clone() const {
    ExchangeTree copy;
    copy.roots.reserve(roots.size());
    for (const auto& root : roots) {
        copy.roots.push_back(root->clone());
    }
    copy.self_ackn_sites = self_ackn_sites;
    copy.orphans = orphans;
    copy.notes = notes;
    return copy;
}

bool ExchangeTree::operator==(const ExchangeTree& other) const {
    if (roots.size() != other.roots.size() ||
        self_ackn_sites != other.self_ackn_sites || orphans != other.orphans ||
        notes != other.notes) {
        return false;
    }
    for (size_t i = 0; i < roots.size(); ++i) {
        if (!(*roots[i] == *other.roots[i])) {
            return false;
        }
    }
    return true;
}

namespace {

std::string ref_str(UttRef ref) {
    return "(" + std::to_string(ref.turn) + "," + std::to_string(ref.utt) + ")";
}

} // namespace

ExchangeBuilder::ExchangeBuilder(std::string speaker_a, std::string speaker_b)
    : speakers_{std::move(speaker_a), std::move(speaker_b)} {
    if (speakers_[0] == speakers_[1]) {
        throw std::invalid_argument("speaker labels must be distinct");
    }
}

const std::string& ExchangeBuilder::other_speaker(std::string_view speaker) const {
    if (speaker == speakers_[0]) {
        return speakers_[1];
    }
    if (speaker == speakers_[1]) {
        return speakers_[0];
    }
    throw std::invalid_argument("unknown speaker '" + std::string(speaker) + "'");
}

const ExchangeNode* ExchangeBuilder::stack_top() const {
    return stack_.empty() ? nullptr : stack_.back();
}

bool ExchangeBuilder::in_completion_segment(std::string_view speaker) const {
    const ExchangeNode* top = stack_top();
    return top && top->status == ExchangeStatus::Completed &&
           !top->completion.empty() &&
           top->completion.front().turn == turn_index_ &&
           top->initiator != speaker;
}

bool ExchangeBuilder::in_acceptance_segment(std::string_view speaker) const {
    return last_closed_ && !last_closed_->acceptances.empty() &&
           last_closed_->acceptances.back().turn == turn_index_ &&
           last_closed_->initiator == speaker;
}

void ExchangeBuilder::open_exchange(const std::string& speaker, SpeechAct act,
                                    UttRef ref) {
    // A completed exchange buried by a new initiation can never be
    // accepted; it leaves the stack in its final state.
    if (!stack_.empty() && stack_.back()->status == ExchangeStatus::Completed) {
        stack_.pop_back();
    }
    auto node = std::make_unique<ExchangeNode>();
    node->init_ref = ref;
    node->initiation_act = act;
    node->initiator = speaker;
    node->status = ExchangeStatus::Open;
    stack_.push_back(node.get());
    tree_.roots.push_back(std::move(node));
    last_closed_ = nullptr; // new root exchange opens
}

void ExchangeBuilder::add(std::string_view speaker_view, const Utterance& utterance) {
    const std::string* resolved = nullptr;
    if (speaker_view == speakers_[0]) {
        resolved = &speakers_[0];
    } else if (speaker_view == speakers_[1]) {
        resolved = &speakers_[1];
    } else {
        throw std::invalid_argument("unknown speaker '" + std::string(speaker_view) + "'");
    }
    const std::string& speaker = *resolved;

    bool turn_initial = !current_turn_speaker_ || *current_turn_speaker_ != speaker;
    if (turn_initial) {
        ++turn_index_;
        utt_index_ = 0;
        current_turn_speaker_ = speaker;
        current_turn_acts_.clear();
    } else {
        ++utt_index_;
    }
    UttRef ref{turn_index_, utt_index_};
    SpeechAct act = utterance.act;
    std::optional<SpeechAct> pred;
    if (!current_turn_acts_.empty()) {
        pred = current_turn_acts_.back();
    }

    ExchangeNode* top = stack_.empty() ? nullptr : stack_.back();

    if (act == SpeechAct::Ackn && !turn_initial && pred &&
        !is_acknowledgment_family(*pred)) {
        // R1: self-acknowledgment following the speaker's own content act.
        tree_.self_ackn_sites.push_back(ref);
    } else if (in_completion_segment(speaker)) {
        // R2 continuation: the responding turn segment absorbs all
        // subsequent same-turn acts.
        top->completion.push_back(ref);
    } else if (is_acknowledgment_family(act) && in_acceptance_segment(speaker)) {
        // R3 continuation: further acceptances within the closing turn.
        last_closed_->acceptances.push_back(ref);
    } else if (is_acknowledgment_family(act)) {
        if (turn_initial && top && top->status == ExchangeStatus::Open &&
            top->initiator != speaker) {
            // R2: completes the open exchange.
            top->completion.push_back(ref);
            top->status = ExchangeStatus::Completed;
            if (act == SpeechAct::Assess) {
                tree_.notes.push_back(ref_str(ref) + ": assess completes " +
                                      std::string(to_string(top->initiation_act)) +
                                      " exchange");
            }
        } else if (act == SpeechAct::Ackn && turn_initial && top &&
                   top->status == ExchangeStatus::Completed &&
                   top->initiator == speaker) {
            // R3: acceptance closes the exchange.
            top->acceptances.push_back(ref);
            top->status = ExchangeStatus::Closed;
            stack_.pop_back();
            last_closed_ = top;
        } else if (act == SpeechAct::Ackn && turn_initial && stack_.empty() &&
                   last_closed_ &&
                   last_closed_->initiation_act == SpeechAct::Inform &&
                   last_closed_->initiator != speaker &&
                   last_closed_->embedding_depth() + 1 <= kMaxEmbeddingDepth) {
            // R4: lift the closed inform exchange into the initiation slot
            // of a new outer exchange and complete that.
            for (auto& slot : tree_.roots) {
                if (slot.get() == last_closed_) {
                    auto outer = std::make_unique<ExchangeNode>();
                    outer->inner = std::move(slot);
                    outer->initiation_act = outer->inner->initiation_act;
                    outer->initiator = outer->inner->initiator;
                    outer->completion.push_back(ref);
                    outer->status = ExchangeStatus::Completed;
                    stack_.push_back(outer.get());
                    slot = std::move(outer);
                    break;
                }
            }
            last_closed_ = nullptr;
        } else {
            // R5: orphan.
            tree_.orphans.push_back(ref);
            tree_.notes.push_back(ref_str(ref) + ": unattached " +
                                  std::string(to_string(act)));
        }
    } else if (act == SpeechAct::Inform && top &&
               top->status == ExchangeStatus::Open && top->initiator != speaker &&
               (top->initiation_act == SpeechAct::Request ||
                top->initiation_act == SpeechAct::MRequest)) {
        // Canonical pair completion: inform answers an open (m)request.
        top->completion.push_back(ref);
        top->status = ExchangeStatus::Completed;
    } else if (is_initiation_act(act)) {
        open_exchange(speaker, act, ref);
    } else {
        // `other` acts neither initiate nor pair.
        tree_.orphans.push_back(ref);
        tree_.notes.push_back(ref_str(ref) + ": unattached " +
                              std::string(to_string(act)));
    }

    current_turn_acts_.push_back(act);
}

ExchangeTree ExchangeBuilder::snapshot() const { return tree_.clone(); }

ExchangeTree ExchangeBuilder::take() && { return std::move(tree_); }

ExchangeTree parse_exchanges(const Dialogue& d) {
    ExchangeBuilder builder(d.speakers[0], d.speakers[1]);
    for (const Turn& turn : d.turns) {
        for (const Utterance& utt : turn.utterances) {
            builder.add(turn.speaker, utt);
        }
    }
    return std::move(builder).take();
}

namespace {

void collect_node(const ExchangeNode& node, std::vector<CoverageEntry>& out) {
    if (node.inner) {
        collect_node(*node.inner, out);
    } else if (node.init_ref) {
        out.push_back({*node.init_ref, CoverageRole::Initiation});
    }
    for (UttRef ref : node.completion) {
        out.push_back({ref, CoverageRole::Completion});
    }
    for (UttRef ref : node.acceptances) {
        out.push_back({ref, CoverageRole::Acceptance});
    }
}

} // namespace

std::vector<CoverageEntry> utterance_coverage(const ExchangeTree& t,
                                              const Dialogue& d) {
    if (d.turns.empty()) {
        // Empty dialogues cannot exist past validation; an empty tree here
        // means the caller paired the wrong values.
        throw std::invalid_argument("tree/dialogue mismatch");
    }
    std::vector<CoverageEntry> entries;
    for (const auto& root : t.roots) {
        collect_node(*root, entries);
    }
    for (UttRef ref : t.self_ackn_sites) {
        entries.push_back({ref, CoverageRole::SelfAckn});
    }
    for (UttRef ref : t.orphans) {
        entries.push_back({ref, CoverageRole::Orphan});
    }

    // Verify the partition against the dialogue.
    std::vector<std::vector<int>> seen(d.turns.size());
    for (size_t i = 0; i < d.turns.size(); ++i) {
        seen[i].assign(d.turns[i].utterances.size(), 0);
    }
    size_t total = 0;
    for (const auto& turn : d.turns) {
        total += turn.utterances.size();
    }
    if (entries.size() != total) {
        throw std::invalid_argument("tree/dialogue mismatch");
    }
    for (const CoverageEntry& e : entries) {
        if (e.ref.turn < 0 || e.ref.turn >= static_cast<int>(seen.size()) ||
            e.ref.utt < 0 ||
            e.ref.utt >= static_cast<int>(seen[static_cast<size_t>(e.ref.turn)].size())) {
            throw std::invalid_argument("tree/dialogue mismatch");
        }
        int& count = seen[static_cast<size_t>(e.ref.turn)][static_cast<size_t>(e.ref.utt)];
        if (++count > 1) {
            throw std::invalid_argument("tree/dialogue mismatch");
        }
    }

    std::sort(entries.begin(), entries.end(),
              [](const CoverageEntry& a, const CoverageEntry& b) {
                  return a.ref < b.ref;
              });
    return entries;
}

} // namespace ackkit
