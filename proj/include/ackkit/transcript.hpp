#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ackkit/dialogue.hpp"

namespace ackkit {

struct ParseDiagnostic {
    int line = 0; // 1-based, always within the input's line count
    std::string message;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, std::string message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          diagnostic_{line, std::move(message)} {}

    const ParseDiagnostic& diagnostic() const { return diagnostic_; }

private:
    ParseDiagnostic diagnostic_;
};

// Plain-text transcript format, one utterance per line:
//
//   # comment
//   dialogue: <id>
//   speakers: <label> <label>
//   <SPEAKER>: <act> | <optional text>
//   + <act> | <optional text>          (extends the current turn)
//
// Act tags are case-insensitive on input. Blank lines are ignored.
// Consecutive turn lines by the same speaker merge into one turn.
// Throws ParseError on malformed lines, unknown act tags, a `+` before
// any turn, a third speaker, or input with no turns.
Dialogue parse_transcript(std::string_view text);

// Canonical form: headers first, lowercase act tags, single space around
// separators. parse_transcript(serialize_dialogue(d)) == d for every
// valid d, and serialization of a parse is byte-stable.
std::string serialize_dialogue(const Dialogue& d);

} // namespace ackkit
