// ackkit: exchange-structure and acknowledgment analysis for speech-act
// annotated transcripts.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ackkit/predictor.hpp"
#include "ackkit/report.hpp"
#include "ackkit/transcript.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitStrict = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ackkit::Dialogue load_transcript(const std::string& path) {
    return ackkit::parse_transcript(read_file(path));
}

// Files named directly are taken as-is; directories contribute their
// *.txt entries. The result is sorted so output is schedule-independent.
std::vector<std::string> collect_transcripts(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (const std::string& path : paths) {
        if (fs::is_directory(path)) {
            for (const auto& entry : fs::directory_iterator(path)) {
                if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                    files.push_back(entry.path().string());
                }
            }
        } else {
            files.push_back(path);
        }
    }
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());
    return files;
}

int run_analyze(const std::string& path, bool json, bool strict,
                bool include_assess) {
    ackkit::DialogueAnalysis analysis;
    try {
        analysis = ackkit::analyze_dialogue(load_transcript(path),
                                            {.include_assess = include_assess});
    } catch (const ackkit::ParseError& e) {
        std::cerr << path << ":" << e.diagnostic().line << ": "
                  << e.diagnostic().message << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitParse;
    }
    std::cout << (json ? ackkit::analysis_report_json(analysis)
                       : ackkit::analysis_report_text(analysis));
    if (strict && ackkit::has_unclassified(analysis)) {
        std::cerr << path << ": unclassified acknowledgment present\n";
        return kExitStrict;
    }
    return kExitOk;
}

int run_stats(const std::vector<std::string>& paths, bool json, bool strict,
              bool include_assess) {
    std::vector<std::string> files = collect_transcripts(paths);
    if (files.empty()) {
        std::cerr << "no transcript files found\n";
        return kExitUsage;
    }

    struct Slot {
        ackkit::CorpusReport report;
        bool unclassified = false;
        std::string error;
    };
    std::vector<Slot> slots(files.size());

    // Analyze files in parallel; the merge below runs in sorted path order
    // regardless of schedule.
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            try {
                auto analysis = ackkit::analyze_dialogue(
                    load_transcript(files[i]), {.include_assess = include_assess});
                slots[i].report = ackkit::aggregate_one(analysis);
                slots[i].unclassified = ackkit::has_unclassified(analysis);
            } catch (const ackkit::ParseError& e) {
                slots[i].error = files[i] + ":" + std::to_string(e.diagnostic().line) +
                                 ": " + e.diagnostic().message;
            } catch (const std::exception& e) {
                slots[i].error = files[i] + ": " + e.what();
            }
        }
    };
    size_t thread_count = std::min<size_t>(
        files.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> threads;
    for (size_t i = 0; i < thread_count; ++i) {
        threads.emplace_back(worker);
    }
    for (auto& t : threads) {
        t.join();
    }

    bool failed = false;
    bool any_unclassified = false;
    ackkit::CorpusReport total;
    for (const Slot& slot : slots) {
        if (!slot.error.empty()) {
            std::cerr << slot.error << "\n";
            failed = true;
            continue;
        }
        total = ackkit::merge(std::move(total), slot.report);
        any_unclassified = any_unclassified || slot.unclassified;
    }
    if (failed) {
        return kExitParse;
    }
    std::cout << (json ? ackkit::corpus_report_json(total)
                       : ackkit::corpus_report_text(total));
    if (strict && any_unclassified) {
        std::cerr << "unclassified acknowledgment present in corpus\n";
        return kExitStrict;
    }
    return kExitOk;
}

int run_validate(const std::string& path) {
    ackkit::Dialogue dialogue;
    try {
        dialogue = load_transcript(path);
    } catch (const ackkit::ParseError& e) {
        std::cerr << path << ":" << e.diagnostic().line << ": "
                  << e.diagnostic().message << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitParse;
    }
    auto result = ackkit::validate_dialogue(dialogue);
    if (!result.ok()) {
        for (const auto& v : result.violations) {
            std::cerr << path << ": " << v.rule;
            if (v.turn_index) {
                std::cerr << " (turn " << *v.turn_index << ")";
            }
            std::cerr << ": " << v.message << "\n";
        }
        return kExitParse;
    }
    std::cout << path << ": ok (" << dialogue.turns.size() << " turns)\n";
    return kExitOk;
}

void print_expectations(std::ostream& os, const ackkit::DialogueState& state,
                        const std::string& speaker) {
    for (const auto& e : state.expected_acts(speaker)) {
        os << "  " << e.speaker << " may produce " << ackkit::to_string(e.act)
           << " [" << ackkit::to_string(e.strength) << "]";
        if (e.class_if_ackn) {
            os << " as " << ackkit::to_string(*e.class_if_ackn);
            if (e.pattern_if_ackn) {
                os << " / " << ackkit::to_string(*e.pattern_if_ackn);
            }
        }
        os << "\n";
    }
}

int run_predict_script(const std::string& path) {
    ackkit::Dialogue dialogue;
    try {
        dialogue = load_transcript(path);
    } catch (const ackkit::ParseError& e) {
        std::cerr << path << ":" << e.diagnostic().line << ": "
                  << e.diagnostic().message << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitParse;
    }

    ackkit::DialogueState state(dialogue.speakers[0], dialogue.speakers[1]);
    for (size_t t = 0; t < dialogue.turns.size(); ++t) {
        const ackkit::Turn& turn = dialogue.turns[t];
        std::cout << "before turn " << t << " (" << turn.speaker << "):\n";
        print_expectations(std::cout, state, turn.speaker);
        bool first = true;
        for (const ackkit::Utterance& utt : turn.utterances) {
            std::cout << (first ? turn.speaker + ":" : std::string("+")) << " "
                      << ackkit::to_string(utt.act);
            if (!utt.text.empty()) {
                std::cout << " | " << utt.text;
            }
            std::cout << "\n";
            state.advance(turn.speaker, utt);
            first = false;
        }
    }
    return kExitOk;
}

// Line-oriented developer aid: `speaker: act` opens or extends turns,
// `+ act` continues the current one. Prints expectations for both parties
// after every act.
int run_predict_interactive(std::istream& in, const std::string& speaker_a,
                            const std::string& speaker_b) {
    ackkit::DialogueState state(speaker_a, speaker_b);
    std::string line;
    while (std::getline(in, line)) {
        std::string_view view(line);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) {
            view.remove_suffix(1);
        }
        while (!view.empty() && view.front() == ' ') {
            view.remove_prefix(1);
        }
        if (view.empty() || view.front() == '#') {
            continue;
        }
        if (view == "q" || view == "quit") {
            break;
        }
        std::string speaker;
        std::string_view body;
        if (view.front() == '+') {
            if (!state.current_turn_speaker()) {
                std::cerr << "'+' before any turn\n";
                continue;
            }
            speaker = *state.current_turn_speaker();
            body = view.substr(1);
        } else {
            size_t colon = view.find(':');
            if (colon == std::string_view::npos) {
                std::cerr << "expected 'speaker: act'\n";
                continue;
            }
            speaker = std::string(view.substr(0, colon));
            body = view.substr(colon + 1);
        }
        while (!body.empty() && body.front() == ' ') {
            body.remove_prefix(1);
        }
        std::string act_token(body.substr(0, body.find_first_of(" |")));
        auto act = ackkit::parse_speech_act(act_token);
        if (!act) {
            std::cerr << "unknown act tag '" << act_token << "'\n";
            continue;
        }
        try {
            state.advance(speaker, ackkit::Utterance{*act, ""});
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            continue;
        }
        std::cout << "after " << speaker << ": " << ackkit::to_string(*act) << "\n";
        print_expectations(std::cout, state, speaker_a);
        print_expectations(std::cout, state, speaker_b);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exchange-structure and acknowledgment analysis for "
                 "speech-act annotated transcripts"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> paths;
    bool json = false;
    bool text = false;
    bool strict = false;
    bool include_assess = false;
    std::string script;
    bool interactive = false;
    std::vector<std::string> speakers{"W", "U"};

    CLI::App* analyze = app.add_subcommand("analyze", "analyze one transcript");
    analyze->add_option("file", file, "transcript file")->required();
    analyze->add_flag("--json", json, "machine-readable report");
    analyze->add_flag("--text", text, "human-readable report (default)");
    analyze->add_flag("--strict", strict, "exit 3 on unclassified acknowledgments");
    analyze->add_flag("--include-assess", include_assess,
                      "classify assess acts alongside ackn");

    CLI::App* stats = app.add_subcommand("stats", "aggregate a corpus");
    stats->add_option("paths", paths, "transcript files or directories")->required();
    stats->add_flag("--json", json, "machine-readable report");
    stats->add_flag("--text", text, "human-readable report (default)");
    stats->add_flag("--strict", strict, "exit 3 on unclassified acknowledgments");
    stats->add_flag("--include-assess", include_assess,
                    "classify assess acts alongside ackn");

    CLI::App* validate = app.add_subcommand("validate", "check format and invariants");
    validate->add_option("file", file, "transcript file")->required();

    CLI::App* predict = app.add_subcommand("predict", "expected-act prediction");
    auto* script_opt = predict->add_option("--script", script,
                                           "replay a transcript with expectations");
    auto* interactive_opt =
        predict->add_flag("--interactive", interactive, "read acts from stdin");
    predict->add_option("--speakers", speakers, "speaker labels for --interactive")
        ->expected(2);
    script_opt->excludes(interactive_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (json && text) {
        std::cerr << "--json and --text are mutually exclusive\n";
        return kExitUsage;
    }

    if (analyze->parsed()) {
        return run_analyze(file, json, strict, include_assess);
    }
    if (stats->parsed()) {
        return run_stats(paths, json, strict, include_assess);
    }
    if (validate->parsed()) {
        return run_validate(file);
    }
    if (predict->parsed()) {
        if (!script.empty()) {
            return run_predict_script(script);
        }
        if (interactive) {
            return run_predict_interactive(std::cin, speakers[0], speakers[1]);
        }
        std::cerr << "predict requires --script <file> or --interactive\n";
        return kExitUsage;
    }
    return kExitUsage;
}
