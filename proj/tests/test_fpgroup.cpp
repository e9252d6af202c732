#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eta/coset_enum.hpp"
#include "eta/error.hpp"
#include "eta/presentation.hpp"
#include "oracles.hpp"

using namespace eta;

namespace {

Word parse_word(const std::string& gens, const std::string& w) {
  return parse_presentation("<" + gens + " | " + w + ">").relators.at(0);
}

std::size_t cosets(const std::string& text, std::size_t cap = kDefaultMaxCosets) {
  const auto t = todd_coxeter(parse_presentation(text), {}, cap);
  REQUIRE(t.complete());
  return t.num_cosets();
}

}  // namespace

TEST_CASE("parsing examples") {
  auto p = parse_presentation("< a | a^3 >");
  CHECK(p.generators == std::vector<std::string>{"a"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 3);

  p = parse_presentation("< a,b | a^2, b^2, (a b)^2 >");
  CHECK(p.generators.size() == 2);
  CHECK(p.relators.size() == 3);

  p = parse_presentation("< a,b | [a,b] >");
  CHECK(p.relators[0] == Word{{0, true}, {1, true}, {0, false}, {1, false}});

  CHECK(parse_word("a,b", "a^b") == Word{{1, true}, {0, false}, {1, false}});
  CHECK(parse_word("a,b", "a^-2") == Word{{0, true}, {0, true}});
  CHECK(parse_word("a,b", "ab = ba").size() == 4);
  CHECK(parse_word("x1,x2", "x1 x2^-1").size() == 2);
  CHECK(parse_presentation("< | >").generators.empty());
  CHECK(parse_presentation("<a|1>").relators.at(0).empty());
}

TEST_CASE("left-normed commutators") {
  const Word abc = parse_word("a,b,c", "[a,b,c]");
  const Word ab = parse_word("a,b,c", "[a,b]");
  const Word c = parse_word("a,b,c", "c");
  CHECK(abc == commutator(ab, c));
}

TEST_CASE("parse errors carry positions") {
  auto pos = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_presentation(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(pos("< a | b >").first == 1);
  CHECK(pos("< a | b >").second == 7);
  CHECK(pos("< a |\n  a^ >").first == 2);
  CHECK(pos("< a, a | >") != std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(pos("< a | a^3") != std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(pos("a | a") != std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("render round trip") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len(0, 12), gen(0, 2), inv(0, 1);
  Presentation p{{"a", "b", "xy"}, {}};
  for (int i = 0; i < 50; ++i) {
    Word w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back({static_cast<std::uint32_t>(gen(rng)), inv(rng) == 1});
    w = free_reduce(w);
    if (!w.empty()) p.relators.push_back(w);
  }
  const Presentation back = parse_presentation(render_presentation(p));
  CHECK(back.generators == p.generators);
  REQUIRE(back.relators.size() == p.relators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) CHECK(free_reduce(back.relators[i]) == p.relators[i]);
  CHECK_NOTHROW(validate(p));
  p.relators.push_back({{7, false}});
  CHECK_THROWS_AS(validate(p), Error);
}

TEST_CASE("coset enumeration examples") {
  CHECK(cosets("< a | a^3 >") == 3);
  CHECK(cosets("< a,b | a^2, b^3, (a b)^2 >") == 6);
  CHECK(cosets("< a,b | a^2, b^2, (a b)^2 >") == 4);
  CHECK(cosets("< a | a >") == 1);
  CHECK(cosets("< a, b | a^4, b^2 = a^2, a^b = a^-1 >") == 8);
  CHECK(cosets("< a, b | a^2, b^3, (a b)^5 >") == 60);

  const auto t = todd_coxeter(parse_presentation("< a | >"), {}, 100);
  CHECK(t.status() == TableStatus::capacity_exceeded);
  CHECK(t.cosets_defined() >= 100);
}

TEST_CASE("subgroup cosets") {
  const auto p = parse_presentation("< a,b | a^2, b^3, (a b)^2 >");
  const std::vector<Word> sub{{{0, false}}};
  const auto t = todd_coxeter(p, sub);
  CHECK(t.num_cosets() == 3);
  CHECK_FALSE(t.subgroup_trivial());
  CHECK(relators_close(t, p, sub));
}

TEST_CASE("tables close and are reproducible") {
  for (const char* text : {"< a | a^3 >", "< a,b | a^2, b^3, (a b)^2 >", "< a,b | a^4, b^4, (a b)^2, (a^-1 b)^2 >"}) {
    const auto p = parse_presentation(text);
    const auto t1 = todd_coxeter(p, {});
    const auto t2 = todd_coxeter(p, {});
    CHECK(t1 == t2);
    CHECK(relators_close(t1, p));
    for (std::size_t c = 0; c < t1.num_cosets(); ++c)
      for (std::uint32_t g = 0; g < p.generators.size(); ++g)
        CHECK(t1.act(t1.act(c, Letter{g, false}), Letter{g, true}) == c);
  }
}

TEST_CASE("regular representation") {
  auto rep = [](const char* text) { return regular_representation(todd_coxeter(parse_presentation(text), {})); };
  const auto c3 = rep("< a | a^3 >");
  CHECK(c3.group.order() == 3);
  CHECK(c3.generator_images[0].to_cycle_string() == "(0 1 2)");

  const auto s3 = rep("< a,b | a^2, b^3, (a b)^2 >");
  CHECK(s3.group.order() == 6);
  std::vector<oracle::Images> gens;
  for (const Perm& g : s3.generator_images) gens.push_back({g.images().begin(), g.images().end()});
  CHECK(oracle::closure(gens, 6).size() == 6);
  CHECK(s3.generator_images[0] * s3.generator_images[1] != s3.generator_images[1] * s3.generator_images[0]);

  const auto one = rep("< a | a >");
  CHECK(one.group.order() == 1);
}
