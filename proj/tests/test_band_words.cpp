#include "sbcert/band_word.hpp"
#include "sbcert/io/presentation_file.hpp"

#include <catch_amalgamated.hpp>

#include <functional>
#include <set>

using namespace sbcert;

namespace {

AlgebraPresentation fixture(const std::string& name) {
  auto r = load_presentation(std::string(SBCERT_FIXTURES) + "/" + name + ".alg");
  REQUIRE(r.ok());
  return *r.algebra;
}

using Seq = std::vector<std::vector<int>>;  // a0, b0, a1, b1, ...

// Orbit key of a cyclic sequence under even rotations and reversal.
Seq class_key(const Seq& s) {
  Seq best;
  Seq rev(s.rbegin(), s.rend());
  for (const Seq* base : std::vector<const Seq*>{&s, &rev}) {
    for (std::size_t k = 0; k < base->size(); k += 2) {
      Seq r(base->begin() + k, base->end());
      r.insert(r.end(), base->begin(), base->begin() + k);
      if (best.empty() || r < best) best = r;
    }
  }
  return best;
}

bool primitive(const Seq& s) {
  for (std::size_t k = 2; k < s.size(); k += 2) {
    if (s.size() % k) continue;
    Seq r(s.begin() + k, s.end());
    r.insert(r.end(), s.begin(), s.begin() + k);
    if (r == s) return false;
  }
  return true;
}

// Brute-force band words: all proper sigma-paths between valency-two vertices,
// chained letter by letter with the band conditions.
std::set<Seq> brute_force_classes(const AlgebraPresentation& alg, long max_total) {
  const auto& q = alg.quiver();
  std::vector<std::vector<int>> paths;
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (q.valency(q.source(a)) != 2) continue;
    long top = static_cast<long>(alg.cycles()[alg.cycle_of(a)].arrows.size()) * alg.cycles()[alg.cycle_of(a)].multiplicity;
    std::vector<int> p{a};
    while (static_cast<long>(p.size()) < top) {
      if (q.valency(q.target(p.back())) == 2) paths.push_back(p);
      p.push_back(alg.sigma(p.back()));
    }
  }
  std::set<Seq> out;
  Seq cur;
  long total = 0;
  std::function<void()> grow = [&] {
    // cur has even length: next is an a-path starting where the last b starts
    bool want_a = cur.size() % 2 == 0;
    for (const auto& p : paths) {
      long len = static_cast<long>(p.size());
      if (total + len > max_total) continue;
      if (want_a) {
        if (!cur.empty()) {
          const auto& b = cur.back();
          if (q.source(p.front()) != q.source(b.front()) || p.front() == b.front()) continue;
        }
      } else {
        const auto& a = cur.back();
        if (q.target(p.back()) != q.target(a.back()) || p.back() == a.back()) continue;
      }
      cur.push_back(p);
      total += len;
      if (!want_a) {
        const auto& a0 = cur.front();
        if (q.source(p.front()) == q.source(a0.front()) && p.front() != a0.front() && primitive(cur)) {
          out.insert(class_key(cur));
        }
      }
      grow();
      total -= len;
      cur.pop_back();
    }
  };
  grow();
  return out;
}

Seq as_seq(const BandWord& w) {
  Seq s;
  for (int t = 0; t < w.size(); ++t) {
    s.push_back(w.a[t]);
    s.push_back(w.b[t]);
  }
  return s;
}

}  // namespace

TEST_CASE("enumeration agrees with a brute-force letter walk") {
  const std::vector<std::pair<std::string, long>> cases{{"dihedral", 8},   {"commutative", 6}, {"hecke", 8},
                                                        {"two_crossings", 10}, {"nakayama2", 8},   {"nakayama3", 8},
                                                        {"ztilde1", 8},    {"ztilde2", 8},     {"short_cycle", 10},
                                                        {"nakayama_finite", 8}};
  for (const auto& [name, cap] : cases) {
    INFO(name);
    auto alg = fixture(name);
    auto oracle = brute_force_classes(alg, cap);
    auto words = enumerate_band_words(alg, cap);
    std::set<Seq> got;
    for (const auto& w : words) {
      CHECK_FALSE(check_band_word(alg, w).has_value());
      CHECK(w.total_length() <= cap);
      got.insert(class_key(as_seq(w)));
    }
    CHECK(got.size() == words.size());
    CHECK(got == oracle);
  }
}

TEST_CASE("words come out sorted by total length") {
  auto alg = fixture("two_crossings");
  auto words = enumerate_band_words(alg, 12);
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1].total_length() <= words[i].total_length());
}

TEST_CASE("commutative local algebra has exactly one minimal word a = x, b = y") {
  auto alg = fixture("commutative");
  auto words = enumerate_minimal_band_words(alg);
  REQUIRE(words.size() == 1);
  CHECK(word_to_cli(alg, words[0]) == "x|y");
}

TEST_CASE("minimal words of the double Nakayama algebras are valid") {
  for (const auto& name : {"nakayama2", "nakayama3", "nakayama4"}) {
    auto alg = fixture(name);
    auto words = enumerate_minimal_band_words(alg);
    CHECK_FALSE(words.empty());
    for (const auto& w : words) {
      CHECK_FALSE(check_band_word(alg, w).has_value());
      for (int t = 0; t < w.size(); ++t) {
        CHECK(w.a[t] == minimal_path_from(alg, w.a[t].front()));
        CHECK(w.b[t] == minimal_path_to(alg, w.b[t].back()));
      }
    }
  }
}

TEST_CASE("minimal words are exactly the enumerated words of minimal paths") {
  const std::vector<std::pair<std::string, long>> cases{{"dihedral", 16}, {"hecke", 24},   {"two_crossings", 24},
                                                        {"nakayama3", 24}, {"ztilde2", 24}, {"short_cycle", 24}};
  for (const auto& [name, cap] : cases) {
    INFO(name);
    auto alg = fixture(name);
    std::set<Seq> expected;
    for (const auto& w : enumerate_band_words(alg, cap)) {
      bool minimal = true;
      for (int t = 0; t < w.size(); ++t) {
        minimal = minimal && w.a[t] == minimal_path_from(alg, w.a[t].front()) &&
                  w.b[t] == minimal_path_to(alg, w.b[t].back());
      }
      if (minimal) expected.insert(class_key(as_seq(w)));
    }
    std::set<Seq> got;
    for (const auto& w : enumerate_minimal_band_words(alg)) got.insert(class_key(as_seq(w)));
    CHECK(got == expected);
  }
}

TEST_CASE("a cycle through a single valency-two vertex blocks minimal words") {
  auto alg = fixture("short_cycle");
  CHECK(enumerate_minimal_band_words(alg).empty());
  CHECK_FALSE(enumerate_band_words(alg, 6).empty());
}

TEST_CASE("canonical form is invariant under rotation and inversion") {
  auto alg = fixture("nakayama3");
  for (const auto& w : enumerate_band_words(alg, 10)) {
    auto key = word_key(alg, canonical_word(alg, w));
    for (int k = 0; k < w.size(); ++k) {
      CHECK(word_key(alg, canonical_word(alg, rotate(w, k))) == key);
      CHECK(word_key(alg, canonical_word(alg, invert(rotate(w, k)))) == key);
      CHECK_FALSE(check_band_word(alg, invert(rotate(w, k))).has_value());
    }
  }
}

TEST_CASE("words print and parse back") {
  for (const auto& name : {"two_crossings", "nakayama3", "ztilde2"}) {
    auto alg = fixture(name);
    for (const auto& w : enumerate_band_words(alg, 10)) {
      auto back = parse_word(alg, word_to_cli(alg, w));
      CHECK(back == w);
    }
  }
  auto alg = fixture("two_crossings");
  CHECK(word_to_text(alg, parse_word(alg, "alpha1.alpha2.alpha3|beta")) == "e -alpha1.alpha2.alpha3-> f <-beta- e");
}

TEST_CASE("invalid words name the violated clause") {
  auto alg = fixture("dihedral");
  CHECK(check_band_word(alg, parse_word(alg, "x|x")).has_value());
  CHECK(check_band_word(alg, parse_word(alg, "x.y.x.y|y")).has_value());  // not proper
  CHECK(check_band_word(alg, parse_word(alg, "x|y|x|y")).has_value());    // not primitive
  CHECK_THROWS(parse_word(alg, "x|"));
  CHECK_THROWS(parse_word(alg, "x|z"));
  CHECK_THROWS(parse_word(alg, "x"));
}
