#include <doctest.h>

#include <random>

#include "soplab/error.hpp"
#include "soplab/groups/checks.hpp"
#include "support/perm_oracle.hpp"

using namespace soplab;
using namespace soplab::groups;
using qlinalg::make_rational;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

GroupWord w(std::string_view text, std::vector<GenSymbol> const& gens = {"a", "b", "c", "x", "y"}) {
  return parse_word(text, gens);
}

GroupWord random_word(std::mt19937_64& rng, std::vector<GenSymbol> const& gens,
                      std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> out;
  for (std::size_t i = len(rng); i > 0; --i) out.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
  return GroupWord(std::move(out));
}

AffineDyadicMap random_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> k(-4, 4), num(-20, 20), e(0, 4);
  return {k(rng), make_rational(num(rng), 1L << e(rng))};
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(w("x x-1")).empty());
  CHECK(free_reduce(w("x y y-1 x")) == w("x2"));
  CHECK(free_reduce(w("a b-1 c")) == w("a b-1 c"));
  CHECK(to_string(w("b-1 a b a-2")) == "b-1 a b a-2");
  CHECK(sq_relator("a", "b") == w("b-1 a b a-2"));
  CHECK(to_string(GroupWord()) == "");

  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    auto const u = random_word(rng, {"a", "b"}, 12), v = random_word(rng, {"a", "b"}, 12);
    auto const r = free_reduce(u);
    CHECK(r.is_reduced());
    CHECK(free_reduce(r) == r);
    CHECK((u * u.inverse()).empty());
    CHECK(((u * v) * u) == (u * (v * u)));
    CHECK(parse_word(to_string(r), {"a", "b"}) == r);
    CHECK(cyclically_equivalent(r, r.rotated(3)));
    CHECK(cyclically_equivalent(r, r.inverse()));
  }
}

TEST_CASE("word parsing uses the longest generator name") {
  std::vector<GenSymbol> const gens = {"a", "a1", "a10"};
  CHECK(parse_word("a10 a1^-2 a3", gens) ==
        GroupWord({{"a10", 1}, {"a1", -1}, {"a1", -1}, {"a", 1}, {"a", 1}, {"a", 1}}));
  CHECK(kind_of([&] { parse_word("q", gens); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { parse_word("a^x", gens); }) == ErrorKind::Parse);
}

TEST_CASE("presentation text format and presets") {
  auto const p = parse_presentation("# sq pair\nA, B\nB-1 A B A-2\n\nA A-1\n");
  CHECK(p.generators == std::vector<GenSymbol>{"A", "B"});
  REQUIRE(p.relators.size() == 1);  // trivial relator dropped
  CHECK(p.relators[0] == sq_relator("A", "B"));
  CHECK(parse_presentation(p.to_text()).relators == p.relators);
  CHECK(kind_of([] { parse_presentation("# only comments\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_presentation("a a\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_presentation("a\nb\n"); }) == ErrorKind::Parse);

  CHECK(preset("higman").relators.size() == 4);
  auto const c4 = preset("chain-4");
  CHECK(c4.generators.size() == 4);
  CHECK(c4.relators.size() == 6);
  CHECK(c4.relators[0] == sq_relator("x0", "x1"));
  CHECK(preset("cyclic-5").relators[0] == w("a5"));
  CHECK(kind_of([] { preset("square"); }) == ErrorKind::Usage);
  CHECK(kind_of([] { preset("chain-1"); }) == ErrorKind::Usage);
  CHECK(kind_of([] { preset("chain-x"); }) == ErrorKind::Usage);
}

TEST_CASE("todd-coxeter on the reference presentations") {
  for (auto strategy : {Strategy::Hlt, Strategy::Felsch}) {
    auto const c5 = todd_coxeter(preset("cyclic-5"), {}, 100, strategy);
    CHECK(c5.status_text() == "Closed(5)");
    for (auto name : {"triangle", "two-cycle"}) {
      auto const t = todd_coxeter(preset(name), {}, kDefaultMaxCosets, strategy);
      CHECK(t.status_text() == "Closed(1)");
      CHECK(verify_coset_table(t, preset(name), {}).empty());
    }
    auto const h = todd_coxeter(preset("higman"), {}, 100'000, strategy);
    CHECK(h.status == TableStatus::Overflow);
    CHECK(h.status_text() == "Overflow(100000)");
    CHECK(h.rows.empty());
  }
  CHECK(kind_of([] { todd_coxeter(preset("cyclic-5"), {}, 0); }) == ErrorKind::Range);
  CHECK(todd_coxeter(preset("cyclic-5"), {}, 4).status == TableStatus::Overflow);
}

TEST_CASE("todd-coxeter matches known orders and the permutation oracle") {
  struct Known {
    char const* text;
    std::size_t order;
  };
  Known const cases[] = {
      {"r s\nr7\ns2\nr s r s\n", 14},              // dihedral
      {"a b\na2\nb3\na b a b\n", 6},               // S3
      {"a b\na2\nb3\na b a b a b\n", 12},          // A4
      {"a b\na2\nb3\na b a b a b a b\n", 24},      // S4
      {"a b\na2\nb3\na b a b a b a b a b\n", 60},  // A5
      {"i j\ni4\ni2 j-2\nj-1 i j i\n", 8},         // Q8
      {"a b\na3\nb3\na-1 b-1 a b\n", 9},           // Z3 x Z3
  };
  for (auto const& c : cases) {
    auto const p = parse_presentation(c.text);
    auto const hlt = todd_coxeter(p, {}, 10'000);
    auto const felsch = todd_coxeter(p, {}, 10'000, Strategy::Felsch);
    REQUIRE(hlt.closed());
    CHECK(hlt.index == c.order);
    CHECK(hlt.rows == felsch.rows);
    CHECK(testing::permutation_group_order(hlt, 1000) == c.order);
  }
}

TEST_CASE("random presentations: strategies agree and tables are sound") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pw(2, 5);
  std::vector<GenSymbol> const gens = {"a", "b"};
  int closed = 0;
  for (int t = 0; t < 150; ++t) {
    Presentation p{
        "random", gens, {GroupWord::power("a", pw(rng)), GroupWord::power("b", pw(rng))}};
    auto const extra = free_reduce(random_word(rng, gens, 8));
    if (!extra.empty()) p.relators.push_back(extra);
    auto const hlt = todd_coxeter(p, {}, 5'000);
    auto const felsch = todd_coxeter(p, {}, 5'000, Strategy::Felsch);
    if (!hlt.closed() || !felsch.closed()) continue;
    ++closed;
    CHECK(hlt.rows == felsch.rows);
    CHECK(verify_coset_table(hlt, p, {}).empty());
    auto const order = testing::permutation_group_order(hlt, 6'000);
    CHECK(order == hlt.index);
    // Lagrange: [G : ⟨a⟩]·|a| = |G|.
    auto const sub = todd_coxeter(p, {GroupWord::power("a", 1)}, 5'000);
    REQUIRE(sub.closed());
    CHECK(verify_coset_table(sub, p, {GroupWord::power("a", 1)}).empty());
    CHECK(sub.index * testing::perm_order(testing::generator_perm(hlt, 0)) == hlt.index);
  }
  CHECK(closed > 50);
}

TEST_CASE("table verification rejects tampered tables") {
  auto const p = preset("cyclic-5");
  auto t = todd_coxeter(p, {}, 100);
  REQUIRE(verify_coset_table(t, p, {}).empty());
  auto bad = t;
  std::swap(bad.rows[1], bad.rows[2]);
  CHECK_FALSE(verify_coset_table(bad, p, {}).empty());
  auto six = p;
  six.relators = {GroupWord::power("a", 6)};
  CHECK_FALSE(verify_coset_table(t, six, {}).empty());
  CHECK_FALSE(verify_coset_table(t, p, {GroupWord::power("a", 1)}).empty());
}

TEST_CASE("affine dyadic maps form a group") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    auto const f = random_map(rng), g = random_map(rng), h = random_map(rng);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f * f.inverse()).is_identity());
    CHECK((f.inverse() * f).is_identity());
    CHECK(f * AffineDyadicMap::identity() == f);
    auto const pt = make_rational(static_cast<long>(t) - 150, 7);
    CHECK((f * g).apply(pt) == f.apply(g.apply(pt)));
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(-2) == (f * f).inverse());
  }
  CHECK(kind_of([] { AffineDyadicMap(0, make_rational(1, 3)); }) == ErrorKind::Domain);
  CHECK(evaluate_bs12(w("b-1 a b")) == evaluate_bs12(w("a2")));
  CHECK(evaluate_bs12(w("b-1 a b")).apply(make_rational(5)) == 7);
  CHECK(kind_of([] { evaluate_bs12(w("c")); }) == ErrorKind::Domain);
}

TEST_CASE("length-2 chain in the affine model") {
  auto const r = bs12_chain_check();
  CHECK(r.passed());
  CHECK(r.claim == "groups.chain_model");
  CHECK(r.values.at("conjugate_offset") == "2/1");
  CHECK(r.values.at("reversed_holds") == "0/1");
  auto const p2 = chain_probe(2, 1000);
  CHECK(p2.passed());
  auto const p3 = chain_probe(3, 20'000);
  CHECK(p3.status == Status::Inconclusive);
}

TEST_CASE("britton reduction examples") {
  auto const oracle = path_group_oracle();
  auto const cac = britton_reduce(hnn_from_word(w("c-1 a c")), oracle);
  CHECK(cac.log.empty());
  CHECK(cac.word.stable_letters() == 2);
  CHECK(cac.nontrivial());

  auto const cbc = britton_reduce(hnn_from_word(w("c-1 b c")), oracle);
  REQUIRE(cbc.log.size() == 1);
  CHECK(cbc.word.stable_letters() == 0);
  CHECK(cbc.word.g[0] == evaluate_bs12(w("b2")));

  auto const cb2c = britton_reduce(hnn_from_word(w("c b2 c-1")), oracle);
  REQUIRE(cb2c.log.size() == 1);
  CHECK(cb2c.word.g[0] == evaluate_bs12(w("b")));

  // b ∉ ⟨b²⟩, so c b c⁻¹ is already reduced.
  CHECK(britton_reduce(hnn_from_word(w("c b c-1")), oracle).log.empty());
  // Nested pinches collapse completely.
  auto const nested = britton_reduce(hnn_from_word(w("c-1 c-1 b c c b-4")), oracle);
  CHECK(nested.log.size() == 2);
  CHECK_FALSE(nested.nontrivial());

  auto const report = britton_check(w("c-1 a c"));
  CHECK(report.passed());
  CHECK(report.values.at("nontrivial") == "1/1");
}

TEST_CASE("britton reduction: soundness properties") {
  auto const oracle = path_group_oracle();
  std::mt19937_64 rng(9);
  std::vector<GenSymbol> const gens = {"a", "b", "c"};
  for (int t = 0; t < 400; ++t) {
    auto const u = random_word(rng, gens, 10);
    auto const form = britton_reduce(hnn_from_word(u), oracle);
    CHECK_FALSE(form.has_pinch(oracle));
    CHECK(form.word.stable_exponent_sum() == hnn_from_word(u).stable_exponent_sum());
    for (auto const& s : form.log) {
      // t⁻¹gt = g² and tgt⁻¹ = √g on the affine side.
      if (s.eps < 0)
        CHECK(s.image == s.inner * s.inner);
      else
        CHECK(s.image * s.image == s.inner);
    }
    CHECK(britton_reduce(form.word, oracle).log.empty());
    // u u⁻¹ is the identity, so a complete reduction must reach e.
    auto const trivial = britton_reduce(hnn_from_word(u * u.inverse()), oracle);
    CHECK_FALSE(trivial.nontrivial());
    auto const raw = GroupWord([&] {
      auto l = u.letters();
      auto const inv = u.inverse().letters();
      l.insert(l.end(), inv.begin(), inv.end());
      return l;
    }());
    CHECK_FALSE(britton_reduce(hnn_from_word(raw), oracle).nontrivial());
    // Conjugating by c doubles the b-exponent.
    std::uniform_int_distribution<int> k(-5, 5);
    int const e = k(rng);
    auto const conj = britton_reduce(
        hnn_from_word(GroupWord({{"c", -1}}) * GroupWord::power("b", e) * GroupWord({{"c", 1}})),
        oracle);
    CHECK(conj.word.stable_letters() == 0);
    CHECK(conj.word.g[0] == evaluate_bs12(GroupWord::power("b", 2 * e)));
  }
}

TEST_CASE("broken oracle is detected") {
  auto oracle = path_group_oracle();
  oracle.phi = [](AffineDyadicMap const& g) { return g; };
  CHECK(kind_of([&] { britton_reduce(hnn_from_word(w("c-1 b c")), oracle); }) ==
        ErrorKind::Consistency);
}

TEST_CASE("free amalgam of the squaring pair is the Higman presentation") {
  auto const type = AdjacencyType::sq_pair();
  auto const am = build_free_amalgam(type);
  CHECK(am.k.generators == std::vector<GenSymbol>{"a0", "a1", "a2", "a3"});
  std::vector<GroupWord> const expected = {sq_relator("a0", "a1"), sq_relator("a1", "a2"),
                                           sq_relator("a2", "a3"), sq_relator("a3", "a0")};
  CHECK(same_relator_set(am.k.relators, expected));
  CHECK(am.data.pair_groups.size() == 4);
  CHECK(am.data.pair_groups[3].relators == std::vector<GroupWord>{sq_relator("a3", "a0")});
  CHECK(am.data.k0.generators == std::vector<GenSymbol>{"a0", "a2"});
  CHECK(am.data.k0.relators.empty());
  CHECK(am.data.k1.generators == std::vector<GenSymbol>{"a0", "a1", "a2"});
  CHECK(am.data.into_k2.size() == 2);
  auto const flat = flattening_check(am, type);
  CHECK(flat.passed());
  CHECK(flat.values.at("matches_higman") == "1/1");

  auto const plain = build_free_amalgam(type, false);
  CHECK(plain.data.pair_groups[3].relators == std::vector<GroupWord>{sq_relator("a0", "a3")});
  CHECK(flattening_check(plain, type).status == Status::Fail);
}

TEST_CASE("free and central pairs") {
  auto const free = build_free_amalgam(AdjacencyType::free_pair());
  CHECK(free.k.generators.size() == 4);
  CHECK(free.k.relators.empty());

  auto const central = build_free_amalgam(AdjacencyType::central_pair());
  CHECK(central.k.generators == std::vector<GenSymbol>{"a0", "a1", "a2", "a3", "z"});
  CHECK(central.k.relators.size() == 4);  // [a_i, z], each from two pair groups
  for (int i = 0; i < 4; ++i)
    CHECK(std::find(central.k.relators.begin(), central.k.relators.end(),
                    commutator("a" + std::to_string(i), "z")) != central.k.relators.end());
  CHECK(central.data.k0.generators == std::vector<GenSymbol>{"a0", "a2", "z"});
  CHECK(flattening_check(central, AdjacencyType::central_pair()).passed());

  // Longer tuples and an auxiliary generator.
  AdjacencyType wide{
      "wide",     {"x", "u", "y", "v", "h"},
      {"x", "u"}, {"y", "v"},
      {},         {w("x y u-1", {"x", "u", "y", "v", "h"}), w("h2", {"x", "u", "y", "v", "h"})}};
  auto const am = build_free_amalgam(wide);
  CHECK(am.k.has_generator("a3_1"));
  CHECK(am.k.has_generator("h_30"));
  CHECK(am.k.relators.size() == 8);
  CHECK(flattening_check(am, wide).passed());
}

TEST_CASE("invalid adjacency types are construction errors") {
  auto t = AdjacencyType::sq_pair();
  t.second = {"x"};
  CHECK(kind_of([&] { build_free_amalgam(t); }) == ErrorKind::Construction);
  t = AdjacencyType::sq_pair();
  t.second = {};
  CHECK(kind_of([&] { build_free_amalgam(t); }) == ErrorKind::Construction);
  t = AdjacencyType::central_pair();
  t.constants = {"z", "x"};
  CHECK(kind_of([&] { build_free_amalgam(t); }) == ErrorKind::Construction);
  AdjacencyType clash{"clash", {"x", "y", "a1"}, {"x"}, {"y"}, {"a1"}, {}};
  CHECK(kind_of([&] { build_free_amalgam(clash); }) == ErrorKind::Construction);
  CHECK(kind_of([] { AdjacencyType::by_name("nope"); }) == ErrorKind::Usage);
}

TEST_CASE("adjacency types are preserved in K") {
  auto const type = AdjacencyType::sq_pair();
  auto const am = build_free_amalgam(type);
  auto const r = adjacency_type_check(am.k, am.data.pairs, type.relators);
  CHECK(r.passed());
  CHECK(r.values.at("pairs") == "4/1");
  CHECK(r.values.at("by_relator") == "4/1");
  CHECK(am.data.pairs[3].label() == "(a3,a0)");

  auto const free = build_free_amalgam(AdjacencyType::free_pair());
  CHECK(adjacency_type_check(free.k, free.data.pairs, {}).passed());

  // A consequence that is not itself a relator of K: traced in a closed table.
  AdjacencyType z3{"z3", {"x", "y"}, {"x"}, {"y"}, {}, {w("x3"), w("y x-1")}};
  auto const zk = build_free_amalgam(z3);
  auto const traced = adjacency_type_check(zk.k, zk.data.pairs, {w("x y x"), w("x y-1")});
  CHECK(traced.passed());
  CHECK(traced.values.at("by_trace") == "4/1");
  auto const broken = adjacency_type_check(zk.k, zk.data.pairs, {w("x")});
  CHECK(broken.status == Status::Fail);
  CHECK(kind_of([&] { require_pass(broken); }) == ErrorKind::Falsification);

  // Sq(a0, a2) is not a relator of K and the enumeration does not close.
  std::vector<PairInstance> const skew = {{0, 2, {{"x", "a0"}, {"y", "a2"}}}};
  auto const open = adjacency_type_check(am.k, skew, type.relators, 2'000);
  CHECK(open.status == Status::Inconclusive);
}

TEST_CASE("triangle refutation and collapse probes") {
  auto const tri = triangle_refutation_check();
  CHECK(tri.passed());
  CHECK(tri.witness.at("table") == "Closed(1)");
  CHECK(triangle_refutation_check(kDefaultMaxCosets, preset("two-cycle")).passed());
  auto const four = triangle_refutation_check(100'000, preset("higman"));
  CHECK(four.status == Status::Inconclusive);
  CHECK(four.witness.at("table") == "Overflow(100000)");
  auto const s3 = parse_presentation("a b\na2\nb3\na b a b\n");
  CHECK(triangle_refutation_check(1000, s3).status == Status::Fail);
  CHECK(enumerate_check(s3, 1000).values.at("index") == "6/1");
}
