#include <doctest.h>

#include <random>

#include "ackkit/exchange.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace ackkit;

namespace {

// Compact construction: one entry per turn, speakers alternating W, U, W...
Dialogue acts_dialogue(const std::vector<std::vector<SpeechAct>>& turns,
                       bool wizard_first = true) {
    Dialogue d;
    d.id = "t";
    d.speakers = {"W", "U"};
    bool wizard = wizard_first;
    for (const auto& acts : turns) {
        Turn turn;
        turn.speaker = wizard ? "W" : "U";
        for (SpeechAct act : acts) {
            turn.utterances.push_back({act, ""});
        }
        d.turns.push_back(std::move(turn));
        wizard = !wizard;
    }
    return d;
}

std::vector<CoverageRole> roles_of(const Dialogue& d) {
    ExchangeTree tree = parse_exchanges(d);
    std::vector<CoverageRole> roles;
    for (const CoverageEntry& e : utterance_coverage(tree, d)) {
        roles.push_back(e.role);
    }
    return roles;
}

} // namespace

TEST_CASE("inform answered by ackn forms a completed pair") {
    Dialogue d = acts_dialogue({{SpeechAct::Inform}, {SpeechAct::Ackn}});
    ExchangeTree tree = parse_exchanges(d);
    REQUIRE(tree.roots.size() == 1);
    const ExchangeNode& node = *tree.roots[0];
    CHECK(node.init_ref == UttRef{0, 0});
    CHECK(node.initiation_act == SpeechAct::Inform);
    CHECK(node.initiator == "W");
    CHECK(node.completion == std::vector<UttRef>{{1, 0}});
    CHECK(node.acceptances.empty());
    CHECK(node.status == ExchangeStatus::Completed);
}

TEST_CASE("request-inform-ackn closes with an acceptance") {
    Dialogue d = acts_dialogue(
        {{SpeechAct::Request}, {SpeechAct::Inform}, {SpeechAct::Ackn}});
    ExchangeTree tree = parse_exchanges(d);
    REQUIRE(tree.roots.size() == 1);
    const ExchangeNode& node = *tree.roots[0];
    CHECK(node.initiation_act == SpeechAct::Request);
    CHECK(node.completion == std::vector<UttRef>{{1, 0}});
    CHECK(node.acceptances == std::vector<UttRef>{{2, 0}});
    CHECK(node.status == ExchangeStatus::Closed);
}

TEST_CASE("acknowledgment cascade lifts the closed exchange into an embedding") {
    Dialogue d = acts_dialogue({{SpeechAct::Inform},
                                {SpeechAct::Ackn},
                                {SpeechAct::Ackn},
                                {SpeechAct::Ackn, SpeechAct::Assess}});
    ExchangeTree tree = parse_exchanges(d);
    REQUIRE(tree.roots.size() == 1);
    const ExchangeNode& outer = *tree.roots[0];
    CHECK(outer.embedded());
    CHECK(outer.initiation_act == SpeechAct::Inform);
    CHECK(outer.initiator == "W");
    CHECK(outer.completion == std::vector<UttRef>{{3, 0}, {3, 1}});
    CHECK(outer.status == ExchangeStatus::Completed);
    CHECK(outer.embedding_depth() == 1);

    REQUIRE(outer.inner);
    const ExchangeNode& inner = *outer.inner;
    CHECK(inner.init_ref == UttRef{0, 0});
    CHECK(inner.completion == std::vector<UttRef>{{1, 0}});
    CHECK(inner.acceptances == std::vector<UttRef>{{2, 0}});
    CHECK(inner.status == ExchangeStatus::Closed);
}

TEST_CASE("an unanswered initiation stays open") {
    Dialogue d = acts_dialogue({{SpeechAct::Inform}});
    ExchangeTree tree = parse_exchanges(d);
    REQUIRE(tree.roots.size() == 1);
    CHECK(tree.roots[0]->status == ExchangeStatus::Open);
    CHECK(tree.roots[0]->completion.empty());
}

TEST_CASE("mid-turn acknowledgment after own content act is a self site") {
    Dialogue d = acts_dialogue(
        {{SpeechAct::Inform, SpeechAct::Ackn, SpeechAct::Inform}});
    ExchangeTree tree = parse_exchanges(d);
    CHECK(tree.roots.size() == 2);
    CHECK(tree.self_ackn_sites == std::vector<UttRef>{{0, 1}});
    CHECK(roles_of(d) == std::vector<CoverageRole>{CoverageRole::Initiation,
                                                   CoverageRole::SelfAckn,
                                                   CoverageRole::Initiation});
}

TEST_CASE("coverage of the basic inform-ackn-inform dialogue") {
    Dialogue d = acts_dialogue(
        {{SpeechAct::Inform}, {SpeechAct::Ackn}, {SpeechAct::Inform}});
    CHECK(roles_of(d) == std::vector<CoverageRole>{CoverageRole::Initiation,
                                                   CoverageRole::Completion,
                                                   CoverageRole::Initiation});
}

TEST_CASE("coverage faults on a tree/dialogue mismatch") {
    Dialogue d = acts_dialogue({{SpeechAct::Inform}, {SpeechAct::Ackn}});
    Dialogue other = acts_dialogue({{SpeechAct::Inform}});
    ExchangeTree tree = parse_exchanges(d);
    CHECK_THROWS_AS(utterance_coverage(tree, other), std::invalid_argument);

    Dialogue empty;
    empty.speakers = {"W", "U"};
    CHECK_THROWS_AS(utterance_coverage(ExchangeTree{}, empty),
                    std::invalid_argument);
}

TEST_CASE("parsing is deterministic") {
    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        Dialogue d = testsupport::random_dialogue(rng);
        CHECK(parse_exchanges(d) == parse_exchanges(d));
    }
}

TEST_CASE("partition invariant on fixtures and generated dialogues") {
    for (const Dialogue& d : testsupport::load_all_fixtures()) {
        CHECK(utterance_coverage(parse_exchanges(d), d).size() > 0);
    }
    std::mt19937 rng(17);
    for (int i = 0; i < 1000; ++i) {
        Dialogue d = testsupport::random_dialogue(rng);
        size_t total = 0;
        for (const Turn& turn : d.turns) {
            total += turn.utterances.size();
        }
        // utterance_coverage throws unless the roles partition the dialogue.
        CHECK(utterance_coverage(parse_exchanges(d), d).size() == total);
    }
}

namespace {

void check_node_invariants(const ExchangeNode& node) {
    if (!node.acceptances.empty()) {
        CHECK_FALSE(node.completion.empty());
    }
    switch (node.status) {
    case ExchangeStatus::Open:
        CHECK(node.completion.empty());
        break;
    case ExchangeStatus::Completed:
        CHECK_FALSE(node.completion.empty());
        CHECK(node.acceptances.empty());
        break;
    case ExchangeStatus::Closed:
        CHECK_FALSE(node.acceptances.empty());
        break;
    }
    CHECK(node.embedding_depth() <= ExchangeBuilder::kMaxEmbeddingDepth);
    if (!node.completion.empty()) {
        int turn = node.completion.front().turn;
        for (UttRef ref : node.completion) {
            CHECK(ref.turn == turn);
        }
    }
    if (node.inner) {
        check_node_invariants(*node.inner);
    }
}

} // namespace

TEST_CASE("node invariants hold on generated dialogues") {
    std::mt19937 rng(19);
    for (int i = 0; i < 1000; ++i) {
        Dialogue d = testsupport::random_dialogue(rng);
        ExchangeTree tree = parse_exchanges(d);
        for (const auto& root : tree.roots) {
            check_node_invariants(*root);
        }
    }
}

TEST_CASE("embedding depth is capped; overflow becomes orphans") {
    // inform, ackn, ackn closes the pair; every further ackn pair lifts one
    // level. 21 turns would need depth 9: the final lift must be refused.
    std::vector<std::vector<SpeechAct>> turns;
    for (int i = 0; i < 21; ++i) {
        turns.push_back({i == 0 ? SpeechAct::Inform : SpeechAct::Ackn});
    }
    Dialogue d = acts_dialogue(turns);
    REQUIRE(validate_dialogue(d).ok());
    ExchangeTree tree = parse_exchanges(d);
    REQUIRE(tree.roots.size() == 1);
    CHECK(tree.roots[0]->embedding_depth() == ExchangeBuilder::kMaxEmbeddingDepth);
    CHECK_FALSE(tree.orphans.empty());
    utterance_coverage(tree, d); // partition still holds
}

TEST_CASE("acknowledgment-free dialogues have no self sites and pair canonically") {
    std::mt19937 rng(23);
    int checked = 0;
    while (checked < 200) {
        Dialogue d = testsupport::random_dialogue(rng);
        bool has_ack = false;
        for (Turn& turn : d.turns) {
            for (Utterance& utt : turn.utterances) {
                has_ack = has_ack || is_acknowledgment_family(utt.act);
            }
        }
        if (has_ack) {
            continue;
        }
        ++checked;
        ExchangeTree tree = parse_exchanges(d);
        CHECK(tree.self_ackn_sites.empty());
        for (const auto& root : tree.roots) {
            CHECK_FALSE(root->embedded());
            if (!root->completion.empty()) {
                SpeechAct first =
                    utterance_at(d, root->completion.front()).act;
                // Without acknowledgments the only canonical completion is
                // inform answering an (m)request.
                CHECK(first == SpeechAct::Inform);
                CHECK((root->initiation_act == SpeechAct::Request ||
                       root->initiation_act == SpeechAct::MRequest));
            }
        }
    }
}

TEST_CASE("fixture exchange shapes") {
    auto fixtures = testsupport::load_all_fixtures();

    SUBCASE("two informs bracket the acknowledged one") {
        ExchangeTree tree = parse_exchanges(fixtures[0]);
        REQUIRE(tree.roots.size() == 2);
        CHECK(tree.roots[0]->status == ExchangeStatus::Completed);
        CHECK(tree.roots[1]->status == ExchangeStatus::Open);
    }
    SUBCASE("clarification attaches to the responding segment") {
        ExchangeTree tree = parse_exchanges(fixtures[1]);
        REQUIRE(tree.roots.size() == 2);
        CHECK(tree.roots[0]->completion ==
              std::vector<UttRef>{{1, 0}, {1, 1}});
    }
    SUBCASE("request exchange closes") {
        ExchangeTree tree = parse_exchanges(fixtures[2]);
        REQUIRE(tree.roots.size() == 1);
        CHECK(tree.roots[0]->status == ExchangeStatus::Closed);
    }
    SUBCASE("extended wizard turn yields a self site between informs") {
        Dialogue& d = fixtures[3];
        REQUIRE(d.turns.size() == 1);
        CHECK(roles_of(d) == std::vector<CoverageRole>{CoverageRole::Initiation,
                                                       CoverageRole::SelfAckn,
                                                       CoverageRole::Initiation});
    }
    SUBCASE("cascade embeds the closed exchange") {
        ExchangeTree tree = parse_exchanges(fixtures[4]);
        REQUIRE(tree.roots.size() == 1);
        CHECK(tree.roots[0]->embedded());
        CHECK(tree.roots[0]->initiation_act == SpeechAct::Inform);
    }
}
