#include <doctest.h>

#include <algorithm>
#include <random>

#include "ackkit/stats.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace ackkit;

namespace {

std::vector<DialogueAnalysis> fixture_corpus() {
    std::vector<DialogueAnalysis> corpus;
    for (Dialogue& d : testsupport::load_all_fixtures()) {
        corpus.push_back(analyze_dialogue(std::move(d)));
    }
    return corpus;
}

long sum_counts(const std::map<std::string, long>& m) {
    long total = 0;
    for (const auto& [key, count] : m) {
        total += count;
    }
    return total;
}

} // namespace

TEST_CASE("fixture corpus totals") {
    CorpusReport report = aggregate(fixture_corpus());
    CHECK(report.dialogue_count == 5);
    CHECK(report.turn_count == 14);
    CHECK(report.ackn_count == 7);
    REQUIRE(report.ackn_per_turn());
    CHECK(*report.ackn_per_turn() == 0.5); // 7/14, exactly representable

    CHECK(report.per_class.at("other_ackn") == 4);
    CHECK(report.per_class.at("self_other_ackn") == 2);
    CHECK(report.per_class.at("self_ackn") == 1);

    std::map<std::string, long> expected_patterns{
        {"inform->ackn", 2},
        {"inform->ackn (embedded)", 1},
        {"inform->ackn+mrequest", 1},
        {"request->inform->ackn", 1},
        {"inform+ackn+inform", 1},
        {"inform->ackn->ackn", 1},
    };
    CHECK(report.per_pattern == expected_patterns);
    CHECK(sum_counts(report.per_pattern) == report.ackn_count);
    CHECK(sum_counts(report.per_class) == report.ackn_count);

    CHECK(report.per_speaker.at("W") == 3);
    CHECK(report.per_speaker.at("U") == 4);
}

TEST_CASE("the clarification fixture is the only repair context") {
    CorpusReport report = aggregate(fixture_corpus());
    CHECK(report.repair_ackn_count == 1);
    CHECK(report.repair_turn_count == 2);
    CHECK(report.nonrepair_ackn_count == 6);
    CHECK(report.nonrepair_turn_count == 12);
    REQUIRE(report.repair_rate());
    CHECK(*report.repair_rate() == doctest::Approx(0.5));
}

TEST_CASE("empty corpus reports zeros with absent ratios") {
    CorpusReport report = aggregate({});
    CHECK(report.dialogue_count == 0);
    CHECK(report.turn_count == 0);
    CHECK(report.ackn_count == 0);
    CHECK_FALSE(report.ackn_per_turn());
    CHECK_FALSE(report.repair_rate());
    CHECK_FALSE(report.nonrepair_rate());
    CHECK(report.per_pattern.empty());
}

TEST_CASE("sum identities hold on generated corpora") {
    std::mt19937 rng(37);
    for (int round = 0; round < 30; ++round) {
        std::vector<DialogueAnalysis> corpus;
        std::uniform_int_distribution<int> size(0, 8);
        int n = size(rng);
        for (int i = 0; i < n; ++i) {
            corpus.push_back(analyze_dialogue(testsupport::random_dialogue(rng)));
        }
        CorpusReport report = aggregate(corpus);
        CHECK(sum_counts(report.per_class) == report.ackn_count);
        CHECK(sum_counts(report.per_pattern) == report.ackn_count);
        CHECK(sum_counts(report.per_speaker) == report.ackn_count);
        CHECK(report.repair_ackn_count + report.nonrepair_ackn_count ==
              report.ackn_count);
        CHECK(report.repair_turn_count + report.nonrepair_turn_count ==
              report.turn_count);
    }
}

TEST_CASE("aggregation is permutation-invariant") {
    auto corpus = fixture_corpus();
    CorpusReport forward = aggregate(corpus);
    std::mt19937 rng(41);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(corpus.begin(), corpus.end(), rng);
        CHECK(aggregate(corpus) == forward);
    }
}

TEST_CASE("merge is associative") {
    auto corpus = fixture_corpus();
    std::vector<CorpusReport> parts;
    for (const auto& analysis : corpus) {
        parts.push_back(aggregate_one(analysis));
    }
    CorpusReport left = merge(merge(parts[0], parts[1]), parts[2]);
    CorpusReport right = merge(parts[0], merge(parts[1], parts[2]));
    CHECK(left == right);
}

TEST_CASE("adding an acknowledgment-free dialogue dilutes the rate") {
    auto corpus = fixture_corpus();
    CorpusReport before = aggregate(corpus);

    Dialogue quiet;
    quiet.id = "quiet";
    quiet.speakers = {"W", "U"};
    quiet.turns = {{"W", {{SpeechAct::Inform, ""}}},
                   {"U", {{SpeechAct::Inform, ""}}}};
    corpus.push_back(analyze_dialogue(std::move(quiet)));
    CorpusReport after = aggregate(corpus);

    CHECK(after.ackn_count == before.ackn_count);
    CHECK(after.turn_count == before.turn_count + 2);
    CHECK(*after.ackn_per_turn() <= *before.ackn_per_turn());
}

TEST_CASE("the assess switch widens the count") {
    Dialogue d = testsupport::load_fixture("ex5.txt");
    auto narrow = analyze_dialogue(d, {.include_assess = false});
    auto wide = analyze_dialogue(d, {.include_assess = true});
    CHECK(aggregate_one(narrow).ackn_count == 3);
    CHECK(aggregate_one(wide).ackn_count == 4);
}
