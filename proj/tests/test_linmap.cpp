#include <random>
#include <set>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "omlkit/linmap.hpp"
#include "oracles.hpp"

using namespace omlkit;

namespace {

std::vector<std::vector<int>> tables_of(const std::vector<LinMap>& maps) {
    std::vector<std::vector<int>> out;
    for (const auto& f : maps) out.push_back(oracle::as_ints(f.table()));
    return out;
}

}  // namespace

class TinyLattices : public ::testing::TestWithParam<std::string> {};

TEST_P(TinyLattices, EnumerationMatchesDefinitionalBruteForce) {
    const OmlSpec spec = catalog_spec(parse_catalog_id(GetParam()));
    const OmlRef X = build_oml(spec);
    const oracle::Poset P = oracle::from_spec(spec);
    const auto maps = enumerate_lin(X);
    EXPECT_EQ(tables_of(maps), oracle::all_linear(P));
    EXPECT_EQ(tables_of(enumerate_lin_exhaustive(X)), tables_of(maps));
    for (const auto& f : maps) EXPECT_EQ(oracle::as_ints(f.adjoint_table()), *oracle::adjoint(P, oracle::as_ints(f.table())));
}

INSTANTIATE_TEST_SUITE_P(Catalog, TinyLattices, ::testing::ValuesIn(testing_corpus::tiny_ids()),
                         testing_corpus::param_name);

// Counts certified by the brute-force oracle above, frozen here.
TEST(LinMap, FrozenCounts) {
    EXPECT_EQ(enumerate_lin(gen_one()).size(), 1u);
    EXPECT_EQ(enumerate_lin(gen_chain2()).size(), 2u);
    EXPECT_EQ(enumerate_lin(gen_boolean(2)).size(), 16u);
    EXPECT_EQ(enumerate_lin(gen_mo(1)).size(), 16u);
    EXPECT_EQ(enumerate_lin(gen_mo(2)).size(), 234u);
    EXPECT_EQ(enumerate_lin(gen_boolean(3)).size(), 512u);
    EXPECT_EQ(enumerate_lin(gen_mo(3)).size(), 13376u);
}

TEST(LinMap, EnumerationIsSortedAndIndependentOfJobs) {
    for (const auto& id : {"boolean3", "mo3", "product(mo2,chain2)"}) {
        const OmlRef X = testing_corpus::make(id);
        const auto one = enumerate_lin(X, 1);
        const auto many = enumerate_lin(X, 4);
        EXPECT_TRUE(std::is_sorted(one.begin(), one.end(), [](const LinMap& a, const LinMap& b) { return a.table() < b.table(); }));
        EXPECT_EQ(tables_of(one), tables_of(many)) << id;
    }
}

TEST(LinMap, RandomTablesAgreeWithOracle) {
    std::mt19937 rng(20261018);
    for (const auto& id : {"boolean3", "mo3", "product(chain2,chain2)", "product(mo2,chain2)"}) {
        const OmlSpec spec = catalog_spec(parse_catalog_id(id));
        const OmlRef X = build_oml(spec);
        const oracle::Poset P = oracle::from_spec(spec);
        const auto lin = enumerate_lin(X);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(X->size()) - 1);
        std::uniform_int_distribution<std::size_t> pick_map(0, lin.size() - 1);
        for (int trial = 0; trial < 400; ++trial) {
            Table t(X->size());
            if (trial % 2) {
                // Perturb a linear map in one place.
                t = lin[pick_map(rng)].table();
                t[pick(rng)] = static_cast<elem_t>(pick(rng));
            } else {
                for (auto& v : t) v = static_cast<elem_t>(pick(rng));
            }
            const auto res = try_adjoint(LatMap(X, X, t));
            const auto expect = oracle::adjoint(P, oracle::as_ints(t));
            ASSERT_EQ(res.has_value(), expect.has_value()) << id << " " << render_table(*X, t);
            if (expect) {
                EXPECT_EQ(oracle::as_ints(res.value().adjoint_table()), *expect);
            }
        }
    }
}

TEST(LinMap, NoAdjointCarriesReason) {
    const OmlRef X = gen_mo(2);
    const auto res = try_adjoint(LatMap(X, X, Table(6, 5)));
    ASSERT_FALSE(res);
    EXPECT_EQ(res.error().reason, "f(0) is not 0");
    EXPECT_THROW((void)res.value(), Error);
    // a ↦ a, everything else nonzero ↦ 1: breaks a ∨ a' = 1 nowhere but lacks a right adjoint.
    const auto res2 = try_adjoint(LatMap(X, X, Table{0, 1, 2, 1, 1, 5}));
    EXPECT_FALSE(res2);
}

TEST(LinMap, LatMapRejectsBadTables) {
    const OmlRef X = gen_chain2();
    EXPECT_THROW(LatMap(X, X, Table{0}), Error);
    EXPECT_THROW(LatMap(X, X, Table{0, 2}), Error);
}

TEST(LinMap, CategoryOperations) {
    const OmlRef X = gen_mo(2);
    const auto maps = enumerate_lin(X);
    const LinMap id = identity_map(X);
    const LinMap z = zero_map(X, X);
    EXPECT_TRUE(std::find(maps.begin(), maps.end(), id) != maps.end());
    EXPECT_TRUE(std::find(maps.begin(), maps.end(), z) != maps.end());
    for (const auto& f : maps) {
        EXPECT_EQ(compose(id, f), f);
        EXPECT_EQ(compose(f, id), f);
        EXPECT_EQ(compose(z, f), z);
        EXPECT_EQ(join_maps(f, f), f);
        EXPECT_FALSE(linmap_violation(join_maps(f, id)));
    }
    const OmlRef Y = gen_chain2();
    EXPECT_THROW((void)compose(identity_map(Y), id), Error);
    EXPECT_THROW((void)join_maps(identity_map(Y), id), Error);
    EXPECT_THROW((void)is_self_adjoint(zero_map(X, Y)), Error);
}

TEST(LinMap, SasakiMapsAreSelfAdjointIdempotent) {
    for (const auto& id : testing_corpus::oml_ids()) {
        const OmlRef X = testing_corpus::make(id);
        for (elem_t a = 0; a < X->size(); ++a) {
            const LinMap p = sasaki_map(X, a);
            EXPECT_FALSE(linmap_violation(p)) << id;
            EXPECT_TRUE(is_self_adjoint(p));
            EXPECT_EQ(compose(p, p), p);
            EXPECT_EQ(image(p), X->down(a));
        }
    }
}

TEST(LinMap, KernelIsPrincipalDownset) {
    for (const auto& id : {"chain2", "boolean3", "mo3", "product(mo2,chain2)"}) {
        const OmlRef X = testing_corpus::make(id);
        for (const auto& f : enumerate_lin(X)) {
            const Kernel k = kernel(f);
            EXPECT_EQ(k.zero_set, X->down(k.generator)) << f.render();
        }
    }
}

TEST(LinMap, DownsetEmbeddingIsDaggerMono) {
    for (const auto& id : {"boolean3", "mo3", "product(mo2,chain2)"}) {
        const OmlRef X = testing_corpus::make(id);
        for (elem_t a = 0; a < X->size(); ++a) {
            const LinMap e = downset_embedding(X, a);
            EXPECT_FALSE(linmap_violation(e));
            EXPECT_EQ(compose(dagger(e), e).table(), identity_map(e.dom()).table());
            // e ∘ e* is π_a on X.
            EXPECT_EQ(compose(e, dagger(e)).table(), sasaki_projection(*X, a));
            // The adjoint is the one try_adjoint would construct.
            EXPECT_EQ(try_adjoint(e.map()).value().adjoint_table(), e.adjoint_table());
        }
    }
}

TEST(LinMap, RenderUsesCodomainLabels) {
    const OmlRef X = gen_mo(2);
    EXPECT_EQ(identity_map(X).render(), "[0,a,a',b,b',1]");
    EXPECT_EQ(sasaki_map(X, 1).render(), "[0,a,0,a,a,a]");
}
