#include <doctest.h>

#include "support.hpp"
#include "tablog/error.hpp"
#include "tablog/poset.hpp"
#include "tablog/reduction.hpp"

using namespace tablog;
using namespace tablog::testing;

namespace {

std::vector<std::string> names_of(const ElementSubset& s) { return s.names(); }

Poset pos_path2(bool rooted) {
  return build_pos(load_graph(read_text(data_path("path2.graph"))), rooted).poset;
}

}  // namespace

TEST_CASE("load_poset builds a two-element chain") {
  Poset p = load_poset("el a\nel b\nlt a b");
  CHECK(p.size() == 2);
  CHECK(p.less(0, 1));
  CHECK_FALSE(p.leq(1, 0));
  CHECK(p.covers() == std::vector<std::pair<Element, Element>>{{0, 1}});
}

TEST_CASE("load_poset rejects reflexive pairs and cycles") {
  CHECK_THROWS_AS(load_poset("el a\nlt a a"), CycleError);
  CHECK_THROWS_AS(load_poset(read_text(data_path("cycle.poset"))), CycleError);
}

TEST_CASE("load_poset reduces to covers") {
  Poset p = load_poset("el a\nel b\nel c\nlt a b\nlt b c\nlt a c");
  CHECK(p.covers() == std::vector<std::pair<Element, Element>>{{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK(write_poset(p) == "el a\nel b\nel c\nlt a b\nlt b c\n");
}

TEST_CASE("load_poset reports malformed input") {
  CHECK_THROWS_AS(load_poset("el a\nel a"), ParseError);
  CHECK_THROWS_AS(load_poset("el a\nlt a b"), ParseError);
  CHECK_THROWS_AS(load_poset("el a b"), ParseError);
  CHECK_THROWS_AS(load_poset("node a"), ParseError);
  try {
    load_poset("# header\n\nel a\nbogus\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  Poset p = load_poset("# c\n\n  el a  \n# x\nel b\r\nlt a b\n");
  CHECK(p.size() == 2);
  CHECK(p.cover_count() == 1);
}

TEST_CASE("writer sorts covers by name and round-trips") {
  Poset p = load_poset("el z\nel a\nel m\nlt z m\nlt a m\n");
  CHECK(write_poset(p) == "el z\nel a\nel m\nlt a m\nlt z m\n");
  Poset again = load_poset(write_poset(p));
  CHECK(again.names() == p.names());
  CHECK(again.covers() == p.covers());
}

TEST_CASE("upset") {
  Poset c = chain(3);
  CHECK(upset(c, 0).members == std::vector<Element>{0, 1, 2});
  CHECK(upset(c, 2).members == std::vector<Element>{2});
  CHECK_THROWS_AS(upset(c, 7), UnknownElementError);

  Poset p = pos_path2(false);
  auto up = upset(p, p.index_of("E1:u|v"));
  CHECK(up.size() == 3);
  CHECK(up.names() == std::vector<std::string>{"E1:u|v", "TOP1", "TOP2"});
}

TEST_CASE("depth") {
  Poset c = chain(3);
  CHECK(c.depth(0) == 3);
  CHECK(c.depth(2) == 1);
  CHECK(c.depth() == 3);
  CHECK(Poset{}.depth() == 0);
  Poset p = pos_path2(true);
  CHECK(p.depth(p.index_of("BOT")) == 5);
  for (Element m : maximal_elements(p).members) CHECK(p.depth(m) == 1);
}

TEST_CASE("minimal and maximal elements") {
  Poset c = chain(3);
  CHECK(minimal_elements(c).members == std::vector<Element>{0});
  CHECK(maximal_elements(c).members == std::vector<Element>{2});
  Poset a = antichain(3);
  CHECK(minimal_elements(a).size() == 3);
  CHECK(maximal_elements(a).size() == 3);
  CHECK(minimal_elements(Poset{}).empty());

  Poset p = pos_path2(true);
  CHECK(names_of(minimal_elements(p)) == std::vector<std::string>{"BOT"});
  auto maxes = names_of(maximal_elements(p));
  std::sort(maxes.begin(), maxes.end());
  CHECK(maxes == std::vector<std::string>{"INFA", "INFB", "TOP1", "TOP2"});
}

TEST_CASE("rooted and tree predicates") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(is_rooted(chain(n)));
    CHECK(is_tree(chain(n)));
  }
  CHECK_FALSE(is_rooted(antichain(2)));
  CHECK_FALSE(is_tree(antichain(2)));
  CHECK_FALSE(is_rooted(Poset{}));

  Poset p = pos_path2(true);
  CHECK(root_of(p) == p.index_of("BOT"));
  CHECK_FALSE(is_tree(p));
  CHECK_FALSE(is_chain(p, downset(p, p.index_of("TOP1"))));
}

TEST_CASE("isucc") {
  Poset c = chain(3);
  CHECK(isucc(c, 0).members == std::vector<Element>{1});
  CHECK(isucc(c, 2).empty());
  Poset p = pos_path2(false);
  CHECK(isucc(p, p.index_of("V:v")).names() == std::vector<std::string>{"Va:v", "Vb:v"});
}

TEST_CASE("induced upset keeps names and order") {
  Poset p = pos_path2(true);
  Subposet s = induced_upset(p, p.index_of("Va:u"));
  CHECK(s.poset.size() == 5);  // Va:u, E1:u|v, INFA, TOP1, TOP2
  CHECK(s.poset.name(0) == "Va:u");
  CHECK(is_rooted(s.poset));
  for (Element i = 0; i < s.poset.size(); ++i) CHECK(s.poset.name(i) == p.name(s.to_parent[i]));
}

TEST_CASE("random posets satisfy the order invariants") {
  std::mt19937 rng(20240611);
  for (int round = 0; round < 300; ++round) {
    std::uniform_int_distribution<std::size_t> size(0, 8);
    Poset p = random_poset(rng, size(rng), 0.35);
    const std::size_t n = p.size();

    // Closure of the covers reproduces the order and its covers.
    Poset again = Poset::from_relation(p.names(), p.covers());
    CHECK(again.covers() == p.covers());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) CHECK(again.leq(a, b) == p.leq(a, b));

    // Covers are exactly the pairs with nothing strictly between.
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        bool between = false;
        for (Element c = 0; c < n; ++c) between |= p.less(a, c) && p.less(c, b);
        bool cover = std::find(p.upper_covers(a).begin(), p.upper_covers(a).end(), b) !=
                     p.upper_covers(a).end();
        CHECK(cover == (p.less(a, b) && !between));
      }

    for (Element x = 0; x < n; ++x) {
      // Quadratic-scan oracles.
      std::vector<Element> up;
      bool minimal = true, maximal = true;
      for (Element y = 0; y < n; ++y) {
        if (p.leq(x, y)) up.push_back(y);
        if (p.less(y, x)) minimal = false;
        if (p.less(x, y)) maximal = false;
      }
      CHECK(upset(p, x).members == up);
      CHECK(minimal_elements(p).contains(x) == minimal);
      CHECK(maximal_elements(p).contains(x) == maximal);
      for (Element y : up) {
        CHECK(p.depth(x) >= p.depth(y));
        CHECK(p.upset_size(x) >= p.upset_size(y));
      }
    }
    if (is_tree(p)) CHECK(is_rooted(p));
  }
}
