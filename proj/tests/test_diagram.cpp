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

}  // namespace

TEST_CASE("diagram construction validates the partition") {
    CHECK(new_diagram(1, 1, {{1, 2}}).blocks().size() == 1);
    CHECK(new_diagram(2, 2, {{1, 2}, {3, 4}}).blocks().size() == 2);
    CHECK(code_of([] { new_diagram(1, 1, {{1}, {1, 2}}); }) == ErrorCode::overlapping_blocks);
    CHECK(code_of([] { new_diagram(1, 1, {{1}}); }) == ErrorCode::uncovered_vertex);
    CHECK(code_of([] { new_diagram(1, 1, {{1, 2}, {}}); }) == ErrorCode::empty_block);
    CHECK(code_of([] { new_diagram(1, 1, {{1, 2, 3}}); }) == ErrorCode::index_out_of_range);

    SECTION("equality is set partition equality") {
        CHECK(new_diagram(2, 2, {{4, 3}, {2, 1}}) == new_diagram(2, 2, {{1, 2}, {3, 4}}));
    }
}

TEST_CASE("classify splits blocks by row") {
    SECTION("cap and cup") {
        const auto cls = classify(new_diagram(2, 2, {{1, 2}, {3, 4}}));
        CHECK(cls.top_pair_count() == 1);
        CHECK(cls.bottom_pair_count() == 1);
        CHECK(cls.cross_count() == 0);
    }
    SECTION("identity strand") {
        const auto cls = classify(new_diagram(1, 1, {{1, 2}}));
        CHECK(cls.top_pair_count() == 0);
        CHECK(cls.bottom_pair_count() == 0);
        CHECK(cls.cross_count() == 1);
    }
    SECTION("all singletons as a 3-diagram") {
        const auto d = new_diagram(1, 2, {{1}, {2}, {3}});
        CHECK(kind_of(d, GroupSpec::special_orthogonal(3)).tag == DiagramKind::Tag::n_diagram);
        const auto cls = classify(d);
        CHECK(cls.top_free_count() == 1);
        CHECK(cls.bottom_free_count() == 2);
        CHECK(cls.top_pair_count() == 0);
        CHECK(cls.bottom_pair_count() == 0);
        CHECK(cls.cross_count() == 0);
    }
}

TEST_CASE("kind_of recognises the group families") {
    const auto brauer = new_diagram(2, 2, {{1, 2}, {3, 4}});
    CHECK(kind_of(brauer, GroupSpec::orthogonal(3)).tag == DiagramKind::Tag::brauer);
    CHECK(kind_of(new_diagram(1, 2, {{1}, {2}, {3}}), GroupSpec::special_orthogonal(3)).tag ==
          DiagramKind::Tag::n_diagram);

    const auto two_singles = new_diagram(1, 1, {{1}, {2}});
    const auto kind = kind_of(two_singles, GroupSpec::symmetric(1));
    CHECK(kind.tag == DiagramKind::Tag::general_partition);
    CHECK(kind.block_count == 2);
    CHECK_FALSE(kind.basis_condition_ok);

    CHECK(code_of([&] { require_admissible(GroupSpec::symmetric(1), two_singles); }) ==
          ErrorCode::kind_mismatch);
    CHECK(code_of([&] {
              require_admissible(GroupSpec::orthogonal(2), new_diagram(1, 1, {{1}, {2}}));
          }) == ErrorCode::kind_mismatch);
}

TEST_CASE("planarity via boundary interleaving") {
    CHECK(is_planar(new_diagram(2, 2, {{1, 3}, {2, 4}})));   // parallel strands
    CHECK_FALSE(is_planar(new_diagram(2, 2, {{1, 4}, {2, 3}})));  // the swap
    CHECK(is_planar(new_diagram(2, 2, {{1, 2}, {3, 4}})));   // nested cap-cup
    CHECK(is_planar(new_diagram(0, 0, {})));
}

TEST_CASE("tensor product places diagrams side by side") {
    const auto id1 = new_diagram(1, 1, {{1, 2}});
    CHECK(tensor_product(id1, id1) == new_diagram(2, 2, {{1, 3}, {2, 4}}));

    const auto cap = new_diagram(2, 0, {{1, 2}});
    const auto cup = new_diagram(0, 2, {{1, 2}});
    CHECK(tensor_product(cap, cup) == new_diagram(2, 2, {{1, 2}, {3, 4}}));

    const auto unit = new_diagram(0, 0, {});
    const auto d = new_diagram(2, 1, {{1, 3}, {2}});
    CHECK(tensor_product(unit, d) == d);
    CHECK(tensor_product(d, unit) == d);
}

TEST_CASE("tensor product preserves planarity") {
    SplitMix64 rng(2024);
    const auto pool = enumerate_diagrams(GroupSpec::symmetric(4), 2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& d1 = pool[static_cast<std::size_t>(
            rng.next_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
        const auto& d2 = pool[static_cast<std::size_t>(
            rng.next_int(0, static_cast<std::int64_t>(pool.size()) - 1))];
        if (is_planar(d1) && is_planar(d2)) {
            CHECK(is_planar(tensor_product(d1, d2)));
        }
    }
}

TEST_CASE("relabel_rows renames rows and inverts cleanly") {
    const auto d = new_diagram(2, 2, {{1, 3}, {2, 4}});
    const auto swapped = relabel_rows(d, Permutation::from_cycles(2, {{1, 2}}),
                                      Permutation::identity(2));
    CHECK(swapped == new_diagram(2, 2, {{2, 3}, {1, 4}}));

    SplitMix64 rng(99);
    for (const auto& diagram : enumerate_diagrams(GroupSpec::symmetric(4), 2, 2)) {
        const auto st = oracles::random_permutation(2, rng);
        const auto sb = oracles::random_permutation(2, rng);
        CHECK(relabel_rows(relabel_rows(diagram, st, sb), st.inverse(), sb.inverse()) == diagram);
    }

    CHECK(code_of([&] { relabel_rows(d, Permutation::identity(3), Permutation::identity(2)); }) ==
          ErrorCode::size_mismatch);
}

TEST_CASE("enumeration counts match the closed forms") {
    CHECK(enumerate_diagrams(GroupSpec::orthogonal(3), 2, 2).size() == 3);
    CHECK(enumerate_diagrams(GroupSpec::orthogonal(3), 2, 1).empty());  // odd vertex count
    CHECK(enumerate_diagrams(GroupSpec::symmetric(2), 1, 1).size() == 2);

    SECTION("Brauer counts against exhaustive generation") {
        for (int total = 0; total <= 8; total += 2) {
            std::size_t matchings = 0;
            for (const auto& partition : oracles::all_partitions(total)) {
                matchings += oracles::is_all_pairs(partition);
            }
            CHECK(matchings == oracles::double_factorial(total - 1));
            for (int l = 0; l <= total && total <= 6; ++l) {
                CHECK(enumerate_diagrams(GroupSpec::orthogonal(2), total - l, l).size() ==
                      matchings);
            }
        }
    }

    SECTION("symmetric group counts hit the Bell numbers when n is large") {
        for (int total = 0; total <= 5; ++total) {
            for (int l = 0; l <= total; ++l) {
                CHECK(enumerate_diagrams(GroupSpec::symmetric(total == 0 ? 1 : total), total - l,
                                         l)
                          .size() == oracles::bell_number(total));
            }
        }
    }

    SECTION("(l+k)\\n diagrams against exhaustive generation") {
        for (int n = 1; n <= 3; ++n) {
            const GroupSpec g = GroupSpec::special_orthogonal(n);
            for (int total = 0; total <= 6; ++total) {
                std::size_t brauer = 0, ndiag = 0;
                for (const auto& partition : oracles::all_partitions(total)) {
                    brauer += oracles::is_all_pairs(partition);
                    ndiag += oracles::is_n_diagram_shape(partition, n);
                }
                for (int l = 0; l <= total; ++l) {
                    CHECK(enumerate_diagrams(g, total - l, l).size() == brauer + ndiag);
                }
                if (total < n || (total - n) % 2 != 0) CHECK(ndiag == 0);
            }
        }
    }

    SECTION("deterministic lexicographic order") {
        const auto diagrams = enumerate_diagrams(GroupSpec::orthogonal(2), 2, 2);
        REQUIRE(diagrams.size() == 3);
        CHECK(diagrams[0] == new_diagram(2, 2, {{1, 2}, {3, 4}}));
        CHECK(diagrams[1] == new_diagram(2, 2, {{1, 3}, {2, 4}}));
        CHECK(diagrams[2] == new_diagram(2, 2, {{1, 4}, {2, 3}}));
    }
}

TEST_CASE("classification counts satisfy the row equations") {
    for (int total = 2; total <= 6; total += 2) {
        for (int l = 0; l <= total; ++l) {
            const int k = total - l;
            for (const auto& d : enumerate_diagrams(GroupSpec::orthogonal(2), k, l)) {
                const auto cls = classify(d);
                CHECK(2 * cls.top_pair_count() + cls.cross_count() == l);
                CHECK(2 * cls.bottom_pair_count() + cls.cross_count() == k);
            }
        }
    }
    const int n = 3;
    for (int total = n; total <= 6; total += 2) {
        for (int l = 0; l <= total; ++l) {
            const int k = total - l;
            for (const auto& d : enumerate_diagrams(GroupSpec::special_orthogonal(n), k, l)) {
                if (kind_of(d, GroupSpec::special_orthogonal(n)).tag !=
                    DiagramKind::Tag::n_diagram) {
                    continue;
                }
                const auto cls = classify(d);
                const int s = cls.top_free_count();
                CHECK(2 * cls.top_pair_count() + cls.cross_count() + s == l);
                CHECK(2 * cls.bottom_pair_count() + cls.cross_count() + (n - s) == k);
            }
        }
    }
}
