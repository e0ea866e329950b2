#include "ackkit/transcript.hpp"

#include <cctype>
#include <vector>

namespace ackkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool has_inner_space(std::string_view s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            return true;
        }
    }
    return false;
}

// `act | optional text`; the first '|' separates act from text.
Utterance parse_utterance_body(std::string_view body, int line) {
    std::string_view act_part = body;
    std::string_view text_part;
    if (auto bar = body.find('|'); bar != std::string_view::npos) {
        act_part = body.substr(0, bar);
        text_part = body.substr(bar + 1);
    }
    act_part = trim(act_part);
    if (act_part.empty()) {
        throw ParseError(line, "missing act tag");
    }
    if (has_inner_space(act_part)) {
        throw ParseError(line, "act tag '" + std::string(act_part) +
                                   "' contains whitespace");
    }
    auto act = parse_speech_act(act_part);
    if (!act) {
        throw ParseError(line, "unknown act tag '" + std::string(act_part) + "'");
    }
    return Utterance{*act, std::string(trim(text_part))};
}

} // namespace

Dialogue parse_transcript(std::string_view text) {
    Dialogue dialogue;
    bool have_speakers_header = false;
    std::vector<std::string> seen_speakers; // appearance order when inferring

    int line_no = 0;
    int last_line = 1;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view raw = (eol == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        if (raw.empty() && pos > text.size()) {
            break; // input ended without a trailing newline fragment
        }
        ++line_no;
        last_line = line_no;
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }

        if (dialogue.turns.empty()) {
            if (line.rfind("dialogue:", 0) == 0) {
                dialogue.id = std::string(trim(line.substr(9)));
                continue;
            }
            if (line.rfind("speakers:", 0) == 0) {
                std::string_view rest = trim(line.substr(9));
                std::vector<std::string> labels;
                size_t i = 0;
                while (i < rest.size()) {
                    size_t j = i;
                    while (j < rest.size() &&
                           !std::isspace(static_cast<unsigned char>(rest[j]))) {
                        ++j;
                    }
                    labels.emplace_back(rest.substr(i, j - i));
                    i = j;
                    while (i < rest.size() &&
                           std::isspace(static_cast<unsigned char>(rest[i]))) {
                        ++i;
                    }
                }
                if (labels.size() != 2) {
                    throw ParseError(line_no, "speakers header must declare exactly two labels");
                }
                if (labels[0] == labels[1]) {
                    throw ParseError(line_no, "duplicate speaker label '" + labels[0] + "'");
                }
                dialogue.speakers = {labels[0], labels[1]};
                have_speakers_header = true;
                continue;
            }
        }

        if (line.front() == '+') {
            if (dialogue.turns.empty()) {
                throw ParseError(line_no, "'+' continuation before any turn");
            }
            dialogue.turns.back().utterances.push_back(
                parse_utterance_body(trim(line.substr(1)), line_no));
            continue;
        }

        size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(line_no, "missing ':' separator");
        }
        std::string_view speaker = trim(line.substr(0, colon));
        if (speaker.empty()) {
            throw ParseError(line_no, "missing speaker label");
        }
        if (has_inner_space(speaker)) {
            throw ParseError(line_no, "speaker label '" + std::string(speaker) +
                                          "' contains whitespace");
        }
        std::string label(speaker);
        if (have_speakers_header) {
            if (label != dialogue.speakers[0] && label != dialogue.speakers[1]) {
                throw ParseError(line_no, "unknown speaker '" + label + "'");
            }
        } else {
            bool known = false;
            for (const auto& s : seen_speakers) {
                known = known || s == label;
            }
            if (!known) {
                if (seen_speakers.size() == 2) {
                    throw ParseError(line_no, "third speaker '" + label + "'");
                }
                seen_speakers.push_back(label);
            }
        }

        Utterance utt = parse_utterance_body(trim(line.substr(colon + 1)), line_no);
        if (!dialogue.turns.empty() && dialogue.turns.back().speaker == label) {
            dialogue.turns.back().utterances.push_back(std::move(utt));
        } else {
            dialogue.turns.push_back(Turn{std::move(label), {std::move(utt)}});
        }
    }

    if (dialogue.turns.empty()) {
        throw ParseError(1, "no turns");
    }
    if (!have_speakers_header) {
        if (seen_speakers.size() < 2) {
            throw ParseError(last_line,
                             "speakers undetermined: declare a 'speakers:' header "
                             "or have both parties speak");
        }
        dialogue.speakers = {seen_speakers[0], seen_speakers[1]};
    }
    return dialogue;
}

std::string serialize_dialogue(const Dialogue& d) {
    std::string out = "dialogue:";
    if (!d.id.empty()) {
        out += ' ';
        out += d.id;
    }
    out += "\nspeakers: " + d.speakers[0] + ' ' + d.speakers[1] + '\n';
    for (const Turn& turn : d.turns) {
        bool first = true;
        for (const Utterance& utt : turn.utterances) {
            out += first ? turn.speaker + ':' : std::string("+");
            out += ' ';
            out += to_string(utt.act);
            out += " |";
            std::string_view text = trim(utt.text);
            if (!text.empty()) {
                out += ' ';
                out += text;
            }
            out += '\n';
            first = false;
        }
    }
    return out;
}

} // namespace ackkit
