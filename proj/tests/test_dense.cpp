#include <functional>

#include <catch2/catch_amalgamated.hpp>

#include "eqmult/eqmult.hpp"
#include "oracles.hpp"

using namespace eqmult;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::bad_arguments;
}

std::vector<int> row_of(const DenseMatrix& m, std::int64_t row) {
    std::vector<int> out;
    for (std::int64_t c = 0; c < m.cols(); ++c) out.push_back(m.entry(row, c));
    return out;
}

}  // namespace

TEST_CASE("epsilon pairing on the symplectic basis") {
    const auto sp2 = GroupSpec::symplectic(2);
    CHECK(epsilon(1, 2, sp2) == 1);
    CHECK(epsilon(2, 1, sp2) == -1);
    CHECK(epsilon(1, 1, sp2) == 0);
    CHECK(epsilon(2, 2, sp2) == 0);

    const auto sp4 = GroupSpec::symplectic(4);
    CHECK(epsilon(3, 4, sp4) == 1);
    CHECK(epsilon(4, 3, sp4) == -1);
    CHECK(epsilon(1, 3, sp4) == 0);
    CHECK(epsilon(2, 3, sp4) == 0);

    CHECK(code_of([&] { epsilon(0, 1, sp2); }) == ErrorCode::index_out_of_range);
    CHECK(code_of([&] { epsilon(1, 3, sp2); }) == ErrorCode::index_out_of_range);
}

TEST_CASE("chi is the signed indicator on free indices") {
    CHECK(chi(std::vector<int>{1}, std::vector<int>{2, 3}, 3) == 1);
    CHECK(chi(std::vector<int>{2}, std::vector<int>{1, 3}, 3) == -1);
    CHECK(chi(std::vector<int>{1}, std::vector<int>{1, 3}, 3) == 0);
    CHECK(code_of([] { chi(std::vector<int>{1}, std::vector<int>{2}, 3); }) ==
          ErrorCode::size_mismatch);

    SECTION("swapping two entries flips the sign") {
        SplitMix64 rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = static_cast<int>(rng.next_int(2, 5));
            auto perm = oracles::random_permutation(n, rng).one_line();
            const int s = static_cast<int>(rng.next_int(0, n));
            std::vector<int> top(perm.begin(), perm.begin() + s);
            std::vector<int> bottom(perm.begin() + s, perm.end());
            const int before = chi(top, bottom, n);
            std::size_t a = static_cast<std::size_t>(rng.next_int(0, n - 1));
            std::size_t b = static_cast<std::size_t>(rng.next_int(0, n - 2));
            if (b >= a) ++b;
            std::swap(perm[a], perm[b]);
            std::vector<int> top2(perm.begin(), perm.begin() + s);
            std::vector<int> bottom2(perm.begin() + s, perm.end());
            CHECK(chi(top2, bottom2, n) == -before);
        }
    }
}

TEST_CASE("dense realisations of the basic diagrams") {
    SECTION("vertical strand is the identity") {
        for (int n = 1; n <= 3; ++n) {
            const auto m = dense_matrix(GroupSpec::orthogonal(n), new_diagram(1, 1, {{1, 2}}));
            for (std::int64_t r = 0; r < m.rows(); ++r) {
                for (std::int64_t c = 0; c < m.cols(); ++c) {
                    CHECK(m.entry(r, c) == (r == c ? 1 : 0));
                }
            }
        }
    }
    SECTION("single cup rows") {
        const auto cup = new_diagram(0, 2, {{1, 2}});
        CHECK(row_of(dense_matrix(GroupSpec::orthogonal(2), cup), 0) ==
              std::vector<int>{1, 0, 0, 1});
        CHECK(row_of(dense_matrix(GroupSpec::symplectic(2), cup), 0) ==
              std::vector<int>{0, 1, -1, 0});
    }
    SECTION("two bottom free vertices for SO(2)") {
        const auto frees = new_diagram(0, 2, {{1}, {2}});
        CHECK(row_of(dense_matrix(GroupSpec::special_orthogonal(2), frees), 0) ==
              std::vector<int>{0, 1, -1, 0});
    }
    SECTION("inadmissible diagrams are rejected") {
        CHECK(code_of([] {
                  dense_matrix(GroupSpec::orthogonal(2), new_diagram(0, 2, {{1}, {2}}));
              }) == ErrorCode::kind_mismatch);
    }
}

TEST_CASE("dense entries stay in the advertised ranges") {
    for (const auto group : oracles::all_groups()) {
        for (int n : oracles::test_dimensions(group)) {
            const GroupSpec g(group, n);
            for (int total = 0; total <= 4; ++total) {
                for (int l = 0; l <= total; ++l) {
                    for (const auto& d : enumerate_diagrams(g, total - l, l)) {
                        const auto m = dense_matrix(g, d);
                        for (std::int64_t r = 0; r < m.rows(); ++r) {
                            for (std::int64_t c = 0; c < m.cols(); ++c) {
                                const int e = m.entry(r, c);
                                CHECK((e >= -1 && e <= 1));
                                if (group == Group::orthogonal || group == Group::symmetric) {
                                    CHECK(e >= 0);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("naive multiplication and its operation counts") {
    const auto g = GroupSpec::orthogonal(2);
    SECTION("identity") {
        const auto m = dense_matrix(g, new_diagram(1, 1, {{1, 2}}));
        const TensorVector<std::int64_t> v(2, 1, {3, 7});
        CHECK(naive_mult(m, v).coeffs() == std::vector<std::int64_t>{3, 7});
    }
    SECTION("cup row sums the diagonal") {
        const auto m = dense_matrix(g, new_diagram(0, 2, {{1, 2}}));
        const TensorVector<std::int64_t> v(2, 2, {1, 2, 3, 4});
        CHECK(naive_mult(m, v).coeffs() == std::vector<std::int64_t>{5});
    }
    SECTION("order-zero convention") {
        const auto m = dense_matrix(g, new_diagram(0, 0, {}));
        const TensorVector<std::int64_t> v(2, 0, {11});
        CHECK(naive_mult(m, v).coeffs() == std::vector<std::int64_t>{11});
    }
    SECTION("counts are n^(l+k) mults and n^l (n^k - 1) adds") {
        for (int l = 0; l <= 2; ++l) {
            for (int k = 0; k <= 2; ++k) {
                if ((l + k) % 2 != 0) continue;
                for (const auto& d : enumerate_diagrams(GroupSpec::orthogonal(3), k, l)) {
                    const auto m = dense_matrix(GroupSpec::orthogonal(3), d);
                    TensorVector<std::int64_t> v(3, k);
                    OpCounter counter;
                    naive_mult(m, v, &counter);
                    const auto total = counter.total();
                    CHECK(total.formal_mults == static_cast<std::uint64_t>(pow_int(3, l + k)));
                    CHECK(total.formal_adds ==
                          static_cast<std::uint64_t>(pow_int(3, l) * (pow_int(3, k) - 1)));
                    CHECK(total.real_mults == total.formal_mults);
                    CHECK(total.real_adds == total.formal_adds);
                }
            }
        }
    }
}

TEST_CASE("exact group elements act factorwise") {
    SECTION("identity acts trivially") {
        const auto g = GroupSpec::orthogonal(2);
        const TensorVector<std::int64_t> v(2, 2, {1, 2, 3, 4});
        CHECK(group_element_action(g, GroupElement::identity(2), v) == v);
    }
    SECTION("sign flip on one axis") {
        const auto g = GroupSpec::orthogonal(2);
        const GroupElement elem(2, {1, 0, 0, -1});
        const TensorVector<std::int64_t> v(2, 2, {1, 2, 3, 4});
        CHECK(group_element_action(g, elem, v).coeffs() ==
              std::vector<std::int64_t>{1, -2, -3, 4});
    }
    SECTION("basis swap") {
        const auto g = GroupSpec::symmetric(2);
        const GroupElement elem(2, {0, 1, 1, 0});
        const TensorVector<std::int64_t> v(2, 1, {5, 9});
        CHECK(group_element_action(g, elem, v).coeffs() == std::vector<std::int64_t>{9, 5});
    }
    SECTION("defining relations are enforced") {
        const TensorVector<std::int64_t> v(2, 1, {1, 1});
        CHECK(code_of([&] {
                  group_element_action(GroupSpec::orthogonal(2), GroupElement(2, {1, 1, 0, 1}),
                                       v);
              }) == ErrorCode::not_a_group_element);
        CHECK(code_of([&] {
                  group_element_action(GroupSpec::special_orthogonal(2),
                                       GroupElement(2, {1, 0, 0, -1}), v);
              }) == ErrorCode::not_a_group_element);
        CHECK(code_of([&] {
                  group_element_action(GroupSpec::symmetric(2), GroupElement(2, {1, 0, 0, -1}),
                                       v);
              }) == ErrorCode::not_a_group_element);
        // shear preserves epsilon, so it passes for Sp but fails for O
        const GroupElement shear(2, {1, 1, 0, 1});
        CHECK_NOTHROW(group_element_action(GroupSpec::symplectic(2), shear,
                                           TensorVector<std::int64_t>(2, 1, {1, 1})));
    }
}

TEST_CASE("spanning matrices are equivariant") {
    SplitMix64 rng(41);
    for (const auto group : oracles::all_groups()) {
        for (int n : oracles::test_dimensions(group)) {
            const GroupSpec g(group, n);
            for (int total = 0; total <= 4; ++total) {
                for (int l = 0; l <= total; ++l) {
                    const int k = total - l;
                    for (const auto& d : enumerate_diagrams(g, k, l)) {
                        const auto m = dense_matrix(g, d);
                        const auto v = random_integer_vector<std::int64_t>(n, k, -5, 5, rng);
                        for (int trial = 0; trial < 3; ++trial) {
                            const auto elem = oracles::random_generator(g, rng);
                            const auto lhs = naive_mult(m, group_element_action(g, elem, v));
                            const auto rhs = group_element_action(g, elem, naive_mult(m, v));
                            REQUIRE(lhs == rhs);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("tensor products of diagrams map to Kronecker products") {
    SplitMix64 rng(17);
    auto check_pair = [](const GroupSpec& g, const PartitionDiagram& d1,
                         const PartitionDiagram& d2) {
        const auto combined = dense_matrix(g, tensor_product(d1, d2));
        const auto expected = oracles::kronecker(dense_matrix(g, d1), dense_matrix(g, d2));
        REQUIRE(combined == expected);
    };
    for (const auto group : oracles::all_groups()) {
        const int n = group == Group::symmetric ? 4 : 2;
        const GroupSpec g(group, n);
        std::vector<PartitionDiagram> pool;
        for (int total = 0; total <= 3; ++total) {
            for (int l = 0; l <= total; ++l) {
                for (const auto& d : enumerate_diagrams(g, total - l, l)) {
                    if (group == Group::symmetric &&
                        kind_of(d, g).block_count > 2) {
                        continue;  // keep the pair admissible after the product
                    }
                    pool.push_back(d);
                }
            }
        }
        int done = 0;
        while (done < 12) {
            const auto& d1 = pool[static_cast<std::size_t>(
                rng.next_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
            const auto& d2 = pool[static_cast<std::size_t>(
                rng.next_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
            if (!is_admissible(g, tensor_product(d1, d2))) continue;
            check_pair(g, d1, d2);
            ++done;
        }
    }
}
