#include "doctest.h"

#include "linkcob/abgroup.hpp"
#include "linkcob/errors.hpp"
#include "testutil.hpp"

#include <set>

using namespace linkcob;
using namespace linkcob::abgroup;

namespace {

std::vector<std::vector<Int>> all_elements(const FgAbelianGroup& g) {
    REQUIRE(g.is_finite());
    if (g.torsion().empty()) return {std::vector<Int>(g.n_coords(), 0)};
    return torsion_elements(g, Int(100000));
}

// Element-level exactness oracle for finite groups: compare the image set of
// f with the kernel set of g directly.
bool brute_force_exact(const GroupHom& f, const GroupHom& g) {
    std::set<std::vector<Int>> image, kernel;
    for (const auto& x : all_elements(f.source())) image.insert(f.apply(x));
    std::vector<Int> zero(g.target().n_coords(), 0);
    for (const auto& y : all_elements(f.target()))
        if (g.apply(y) == zero) kernel.insert(y);
    return image == kernel;
}

GroupHom cyclic_mult(const Int& n, const Int& c) {
    FgAbelianGroup zn(0, {n});
    return GroupHom(zn, zn, IntMatrix{{c}});
}

}  // namespace

TEST_CASE("from_presentation: examples") {
    CHECK(from_presentation(IntMatrix(0, 2)) == FgAbelianGroup::free(2));
    CHECK(from_presentation(IntMatrix{{2, 1}, {1, 2}}) == FgAbelianGroup(0, {Int(3)}));
    CHECK(from_presentation(IntMatrix::identity(3)) == FgAbelianGroup::trivial());
}

TEST_CASE("from_presentation: normal form is presentation independent") {
    auto g = testutil::rng(0xF00D);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 2 + iter % 4, r = 1 + iter % 3;
        IntMatrix rel = testutil::random_matrix(g, r, n, 5);
        FgAbelianGroup a = from_presentation(rel);
        IntMatrix mixed = testutil::random_unimodular(g, r) * rel;
        CHECK(from_presentation(mixed) == a);
        CHECK(from_presentation(IntMatrix::vstack(rel, mixed)) == a);
    }
}

TEST_CASE("GroupHom: well-definedness is enforced") {
    FgAbelianGroup z2(0, {Int(2)});
    FgAbelianGroup z4(0, {Int(4)});
    FgAbelianGroup z = FgAbelianGroup::free(1);
    // Z2 -> Z4 sending 1 to 2 is fine; sending 1 to 1 is not.
    CHECK_NOTHROW(GroupHom(z2, z4, IntMatrix{{2}}));
    IntMatrix bad{{1}};
    CHECK_THROWS_AS(GroupHom(z2, z4, bad), DomainError);
    // Torsion cannot map to infinite order.
    CHECK_THROWS_AS(GroupHom(z2, z, bad), DomainError);
    // Z4 -> Z2 by reduction works.
    CHECK_NOTHROW(GroupHom(z4, z2, IntMatrix{{1}}));
}

TEST_CASE("is_exact_at: basic cases on Z") {
    FgAbelianGroup z = FgAbelianGroup::free(1);
    GroupHom id = GroupHom::identity(z);
    GroupHom zero = GroupHom::zero(z, z);
    CHECK(is_exact_at(id, zero));      // im(id) = Z = ker(0)
    CHECK(is_exact_at(zero, id));      // im(0) = 0 = ker(id)
    CHECK_FALSE(is_exact_at(id, id));  // im = Z but ker = 0

    FgAbelianGroup z2(0, {Int(2)});
    GroupHom mult2(z, z, IntMatrix{{2}});
    GroupHom proj(z, z2, IntMatrix{{1}});
    CHECK(is_exact_at(mult2, proj));  // im(2*) = 2Z = ker(mod 2)
}

TEST_CASE("is_exact_at: composability is enforced") {
    FgAbelianGroup z = FgAbelianGroup::free(1);
    FgAbelianGroup zz = FgAbelianGroup::free(2);
    GroupHom f = GroupHom::identity(z);
    GroupHom g = GroupHom::identity(zz);
    CHECK_THROWS_AS(is_exact_at(f, g), DomainError);
}

TEST_CASE("is_exact_at: agrees with the element-level oracle on finite fixtures") {
    FgAbelianGroup z4(0, {Int(4)});
    FgAbelianGroup z6(0, {Int(6)});
    FgAbelianGroup z2(0, {Int(2)});
    FgAbelianGroup z2z4(0, {Int(2), Int(4)});

    std::vector<std::pair<GroupHom, GroupHom>> fixtures;
    fixtures.emplace_back(cyclic_mult(6, 2), cyclic_mult(6, 3));
    fixtures.emplace_back(cyclic_mult(6, 3), cyclic_mult(6, 2));
    fixtures.emplace_back(cyclic_mult(4, 2), cyclic_mult(4, 2));
    fixtures.emplace_back(cyclic_mult(9, 3), cyclic_mult(9, 3));
    fixtures.emplace_back(cyclic_mult(4, 0), cyclic_mult(4, 2));
    fixtures.emplace_back(cyclic_mult(6, 2), cyclic_mult(6, 2));
    fixtures.emplace_back(GroupHom(z2, z2z4, IntMatrix{{1}, {2}}),
                          GroupHom(z2z4, z4, IntMatrix{{2, 1}}));
    fixtures.emplace_back(GroupHom(z2, z2z4, IntMatrix{{1}, {0}}),
                          GroupHom(z2z4, z2, IntMatrix{{0, 1}}));
    fixtures.emplace_back(GroupHom(z4, z2z4, IntMatrix{{0}, {0}}),
                          GroupHom(z2z4, z6, IntMatrix{{3, 0}}));

    for (const auto& [f, g] : fixtures) {
        CHECK(f.target().order() <= 200);
        CHECK(is_exact_at(f, g) == brute_force_exact(f, g));
    }
}

TEST_CASE("is_graph_of_isomorphism: examples") {
    FgAbelianGroup z = FgAbelianGroup::free(1);
    SubgroupInProduct diag{z, z, IntMatrix{{1, 1}}};
    auto id = is_graph_of_isomorphism(diag);
    REQUIRE(id.has_value());
    CHECK(id->is_identity());

    FgAbelianGroup z3(0, {Int(3)});
    SubgroupInProduct negdiag{z3, z3, IntMatrix{{1, -1}}};
    auto neg = is_graph_of_isomorphism(negdiag);
    REQUIRE(neg.has_value());
    CHECK(neg->matrix() == IntMatrix{{2}});  // -1 mod 3

    SubgroupInProduct axis{z, z, IntMatrix{{1, 0}}};
    CHECK_FALSE(is_graph_of_isomorphism(axis).has_value());

    // Index-2 diagonal: projection to the first factor is not onto.
    SubgroupInProduct sparse{z, z, IntMatrix{{2, 2}}};
    CHECK_FALSE(is_graph_of_isomorphism(sparse).has_value());

    // Graph of multiplication by 2: injective but not surjective.
    SubgroupInProduct doubled{z, z, IntMatrix{{1, 2}}};
    CHECK_FALSE(is_graph_of_isomorphism(doubled).has_value());

    // Mixed shapes are a caller error.
    SubgroupInProduct mixed{z, z3, IntMatrix{{1, 1}}};
    CHECK_THROWS_AS(is_graph_of_isomorphism(mixed), DomainError);
}

TEST_CASE("is_graph_of_isomorphism: diagonal gives the identity on assorted groups") {
    std::vector<FgAbelianGroup> gs{FgAbelianGroup::trivial(), FgAbelianGroup::free(1),
                                   FgAbelianGroup::free(3), FgAbelianGroup(0, {Int(3)}),
                                   FgAbelianGroup(0, {Int(2), Int(4)})};
    for (const auto& g : gs) {
        SubgroupInProduct diag = graph_of(GroupHom::identity(g));
        auto phi = is_graph_of_isomorphism(diag);
        REQUIRE(phi.has_value());
        CHECK(phi->is_identity());
    }
}

TEST_CASE("is_graph_of_isomorphism: extracted map regenerates the subgroup") {
    FgAbelianGroup g(0, {Int(2), Int(4)});
    IntMatrix a{{1, 1}, {0, 1}};  // e1 -> e1, e2 -> e1 + e2: an automorphism
    GroupHom phi(g, g, a);
    REQUIRE(phi.is_isomorphism());
    SubgroupInProduct h = graph_of(phi);
    auto back = is_graph_of_isomorphism(h);
    REQUIRE(back.has_value());
    CHECK(back->matrix() == phi.matrix());
    CHECK(graph_of(*back).lattice() == h.lattice());
}

TEST_CASE("torsion_elements: examples and budget") {
    CHECK(torsion_elements(FgAbelianGroup::free(1), Int(10)).empty());
    CHECK(torsion_elements(FgAbelianGroup(0, {Int(3)}), Int(10)).size() == 3);
    CHECK(torsion_elements(FgAbelianGroup(0, {Int(2), Int(4)}), Int(10)).size() == 8);

    std::set<std::vector<Int>> uniq;
    for (auto& e : torsion_elements(FgAbelianGroup(1, {Int(2), Int(4)}), Int(10))) uniq.insert(e);
    CHECK(uniq.size() == 8);  // exactly once each, free coordinate pinned at zero

    FgAbelianGroup big(0, {Int(100), Int(100)});
    CHECK_THROWS_AS(torsion_elements(big, Int(200)), BudgetError);
}

TEST_CASE("subgroup order in a finite product") {
    FgAbelianGroup z3(0, {Int(3)});
    SubgroupInProduct h{z3, z3, IntMatrix{{1, 2}}};
    CHECK(h.order() == 3);
    SubgroupInProduct whole{z3, z3, IntMatrix{{1, 0}, {0, 1}}};
    CHECK(whole.order() == 9);
    SubgroupInProduct zero{z3, z3, IntMatrix(0, 2)};
    CHECK(zero.order() == 1);
}
