#include <random>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "omlkit/catalog.hpp"
#include "omlkit/oml.hpp"
#include "oracles.hpp"

using namespace omlkit;

namespace {

OmlSpec spec_of(std::vector<std::string> elems, std::vector<std::pair<std::string, std::string>> leq,
                std::vector<std::pair<std::string, std::string>> perp) {
    OmlSpec s;
    s.name = "t";
    s.elements = std::move(elems);
    s.leq = std::move(leq);
    s.perp = std::move(perp);
    return s;
}

ErrorKind kind_of(const OmlSpec& s, std::size_t cap = kMaxElements) {
    try {
        (void)build_ortholattice(s, cap);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::BadInput;
}

}  // namespace

class CorpusTables : public ::testing::TestWithParam<std::string> {};

TEST_P(CorpusTables, MatchReferenceOrderMeetJoinPerp) {
    const OmlSpec spec = catalog_spec(parse_catalog_id(GetParam()));
    const OmlRef X = build_oml(spec);
    const oracle::Poset P = oracle::from_spec(spec);
    ASSERT_EQ(static_cast<int>(X->size()), P.size());
    for (int x = 0; x < P.size(); ++x) {
        EXPECT_EQ(X->perp(x), P.perp[x]);
        for (int y = 0; y < P.size(); ++y) {
            EXPECT_EQ(X->leq(x, y), P.leq[x][y]);
            EXPECT_EQ(X->meet(x, y), P.meet(x, y));
            EXPECT_EQ(X->join(x, y), P.join(x, y));
        }
    }
    EXPECT_TRUE(oracle::is_orthomodular(P));
    EXPECT_TRUE(validate_orthomodular_three_ways(*X).all());
}

TEST_P(CorpusTables, SasakiProjectionMatchesReference) {
    const OmlSpec spec = catalog_spec(parse_catalog_id(GetParam()));
    const OmlRef X = build_oml(spec);
    const oracle::Poset P = oracle::from_spec(spec);
    for (int a = 0; a < P.size(); ++a) EXPECT_EQ(oracle::as_ints(sasaki_projection(*X, a)), oracle::sasaki(P, a));
}

TEST_P(CorpusTables, DownsetsAreOrthomodularWithRelativePerp) {
    const OmlRef X = testing_corpus::make(GetParam());
    for (elem_t a = 0; a < X->size(); ++a) {
        const OmlRef D = downset_oml(*X, a);
        const Table members = downset_members(*X, a);
        ASSERT_EQ(D->size(), static_cast<std::size_t>(__builtin_popcountll(X->down(a))));
        for (elem_t i = 0; i < D->size(); ++i) {
            EXPECT_EQ(members[D->perp(i)], X->meet(a, X->perp(members[i])));
            EXPECT_EQ(D->label(i), X->label(members[i]));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Catalog, CorpusTables, ::testing::ValuesIn(testing_corpus::oml_ids()), testing_corpus::param_name);

TEST(Oml, BenzeneIsOrtholatticeButFailsAllThreeConditions) {
    const Ortholattice B = gen_benzene();
    const auto v = validate_orthomodular_three_ways(B);
    ASSERT_TRUE(v.join_form && v.meet_form && v.kernel_form);
    const auto [x, y] = *v.join_form;
    EXPECT_EQ(B.label(x), "x");
    EXPECT_EQ(B.label(y), "y");
    // The witness really violates x ≤ y ⇒ x ∨ (x⊥ ∧ y) = y.
    EXPECT_TRUE(B.leq(x, y));
    EXPECT_NE(B.join(x, B.meet(B.perp(x), y)), y);
    EXPECT_FALSE(oracle::is_orthomodular(oracle::from_spec(benzene_spec())));
    try {
        (void)to_oml(B);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotOrthomodular);
        EXPECT_EQ(e.witness(), (std::vector<std::size_t>{x, y}));
    }
}

TEST(Oml, ConstructionErrors) {
    EXPECT_EQ(kind_of(spec_of({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "1"}, {"1", "0"}}, {{"0", "1"}, {"a", "b"}})),
              ErrorKind::NotAPoset);
    // Two maximal elements: no top.
    EXPECT_EQ(kind_of(spec_of({"0", "a", "b", "c"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}}, {{"0", "c"}, {"a", "b"}})),
              ErrorKind::NotALattice);
    // Self-complementary elements are only allowed in the one-element lattice.
    EXPECT_EQ(kind_of(spec_of({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}, {{"0", "1"}, {"a", "a"}})), ErrorKind::BadInput);
    // x ∧ x⊥ ≠ 0: square 0 < a, b < 1 with a ↔ 1 and 0 ↔ b.
    EXPECT_EQ(kind_of(spec_of({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}, {{"a", "1"}, {"0", "b"}})),
              ErrorKind::NotOrtho);
    // Perp not antitone: chain 0 < a < b < 1 with a ↔ b.
    EXPECT_EQ(kind_of(spec_of({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}}, {{"0", "1"}, {"a", "b"}})),
              ErrorKind::NotOrtho);
    EXPECT_EQ(kind_of(spec_of({"0", "0"}, {{"0", "0"}}, {{"0", "0"}})), ErrorKind::BadInput);
    EXPECT_EQ(kind_of(spec_of({"0", "1"}, {{"0", "z"}}, {{"0", "1"}})), ErrorKind::BadInput);
    EXPECT_EQ(kind_of(spec_of({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}, {{"0", "1"}})), ErrorKind::BadInput);
    EXPECT_EQ(kind_of(mo_spec(2), 5), ErrorKind::SizeCap);
    OmlSpec wrong_top = mo_spec(1);
    wrong_top.top = "a";
    EXPECT_EQ(kind_of(wrong_top), ErrorKind::NotALattice);
}

TEST(Oml, SizeCapIsInclusive) {
    EXPECT_NO_THROW((void)build_ortholattice(mo_spec(2), 6));
    EXPECT_NO_THROW((void)build_ortholattice(boolean_spec(6)));
}

TEST(Oml, OrthoRelationFacts) {
    for (const auto& id : testing_corpus::oml_ids()) {
        const OmlRef X = testing_corpus::make(id);
        for (elem_t x = 0; x < X->size(); ++x) {
            EXPECT_TRUE(ortho(*X, x, X->bottom()));
            for (elem_t y = 0; y < X->size(); ++y) EXPECT_EQ(ortho(*X, x, y), ortho(*X, y, x));
        }
    }
}

TEST(Oml, JoinOfSubsetsMatchesFoldedJoin) {
    const OmlRef X = gen_boolean(4);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Bits set = rng() & X->everything();
        elem_t acc = X->bottom();
        for_each_bit(set, [&](elem_t x) { acc = X->join(acc, x); });
        EXPECT_EQ(X->join_of(set), acc);
    }
}

TEST(Oml, CoversOfMo2) {
    const OmlRef X = gen_mo(2);
    EXPECT_EQ(X->covers().size(), 8u);
    EXPECT_EQ(X->atoms().size(), 4u);
}
