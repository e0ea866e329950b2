#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ackkit/transcript.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(ACKKIT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open fixture '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{
        "ex1.txt", "ex2.txt", "ex3.txt", "ex4.txt", "ex5.txt"};
    return names;
}

inline ackkit::Dialogue load_fixture(const std::string& name) {
    return ackkit::parse_transcript(read_file(fixture_path(name)));
}

inline std::vector<ackkit::Dialogue> load_all_fixtures() {
    std::vector<ackkit::Dialogue> dialogues;
    for (const std::string& name : fixture_names()) {
        dialogues.push_back(load_fixture(name));
    }
    return dialogues;
}

} // namespace testsupport
