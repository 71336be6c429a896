#include <gtest/gtest.h>

#include "omlkit/catalog.hpp"
#include "oracles.hpp"

using namespace omlkit;

TEST(Catalog, Sizes) {
    EXPECT_EQ(gen_one()->size(), 1u);
    EXPECT_EQ(gen_chain2()->size(), 2u);
    for (unsigned k = 0; k <= 6; ++k) EXPECT_EQ(gen_boolean(k)->size(), std::size_t{1} << k);
    for (unsigned m = 1; m <= 8; ++m) EXPECT_EQ(gen_mo(m)->size(), 2 * m + 2);
    EXPECT_EQ(gen_benzene().size(), 6u);
    EXPECT_EQ(gen_product(*gen_mo(2), *gen_chain2())->size(), 12u);
}

TEST(Catalog, ElementOrderingIsFixed) {
    EXPECT_EQ(gen_mo(2)->labels(), (std::vector<std::string>{"0", "a", "a'", "b", "b'", "1"}));
    EXPECT_EQ(gen_boolean(2)->labels(), (std::vector<std::string>{"0", "a", "b", "1"}));
    EXPECT_EQ(gen_chain2()->labels(), (std::vector<std::string>{"0", "1"}));
    const OmlRef P = gen_product(*gen_chain2(), *gen_chain2());
    EXPECT_EQ(P->labels(), (std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"}));
    for (const auto& id : {"one", "chain2", "boolean3", "mo4", "product(mo2,chain2)"}) {
        const OmlRef X = generate(parse_catalog_id(id));
        EXPECT_EQ(X->bottom(), 0);
        EXPECT_EQ(X->top(), X->size() - 1);
    }
}

TEST(Catalog, IsomorphismsBetweenFamilies) {
    using oracle::from_spec;
    using oracle::isomorphic;
    EXPECT_TRUE(isomorphic(from_spec(mo_spec(1)), from_spec(boolean_spec(2))));
    EXPECT_TRUE(isomorphic(from_spec(boolean_spec(1)), from_spec(chain2_spec())));
    EXPECT_TRUE(isomorphic(from_spec(product_spec(*gen_chain2(), *gen_chain2())), from_spec(boolean_spec(2))));
    EXPECT_TRUE(isomorphic(from_spec(product_spec(*gen_boolean(2), *gen_chain2())), from_spec(boolean_spec(3))));
    EXPECT_FALSE(isomorphic(from_spec(mo_spec(3)), from_spec(boolean_spec(3))));
    EXPECT_FALSE(isomorphic(from_spec(mo_spec(2)), from_spec(benzene_spec())));
}

TEST(Catalog, ProductIsComponentwise) {
    const OmlRef A = gen_mo(2), B = gen_chain2();
    const OmlRef P = gen_product(*A, *B);
    const std::size_t nb = B->size();
    for (elem_t x = 0; x < P->size(); ++x) {
        EXPECT_EQ(P->perp(x), A->perp(x / nb) * nb + B->perp(x % nb));
        for (elem_t y = 0; y < P->size(); ++y) {
            EXPECT_EQ(P->leq(x, y), A->leq(x / nb, y / nb) && B->leq(x % nb, y % nb));
            EXPECT_EQ(P->meet(x, y), A->meet(x / nb, y / nb) * nb + B->meet(x % nb, y % nb));
        }
    }
}

TEST(Catalog, ParameterRanges) {
    auto kind = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::BadInput;
    };
    EXPECT_EQ(kind([] { (void)boolean_spec(7); }), ErrorKind::ParameterOutOfRange);
    EXPECT_EQ(kind([] { (void)mo_spec(0); }), ErrorKind::ParameterOutOfRange);
    EXPECT_EQ(kind([] { (void)mo_spec(9); }), ErrorKind::ParameterOutOfRange);
    EXPECT_EQ(kind([] { (void)gen_product(*gen_mo(8), *gen_mo(8)); }), ErrorKind::SizeCap);
}

TEST(Catalog, IdRoundTrip) {
    for (const auto& text : {"one", "chain2", "benzene", "boolean3", "mo2", "product(mo2,chain2)",
                             "product(product(chain2,chain2),mo1)"}) {
        EXPECT_EQ(parse_catalog_id(text).to_string(), text);
    }
    const CatalogId id = parse_catalog_id("product(mo2,chain2)");
    EXPECT_EQ(id.family, Family::Product);
    ASSERT_EQ(id.operands.size(), 2u);
    EXPECT_EQ(id.operands[0].family, Family::Mo);
    EXPECT_EQ(id.operands[0].parameter, 2u);
    for (const auto& bad : {"", "mo", "boolean", "mo2x", "product(mo2)", "product(mo2,chain2", "cube3", "benzene1"})
        EXPECT_THROW((void)parse_catalog_id(bad), Error) << bad;
}
