#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "heis/group_algebra.hpp"

using namespace heis;

TEST_CASE("group algebra product") {
    PermAlgElem s1 = perm_alg_of(perm_si(3, 0));
    PermAlgElem s2 = perm_alg_of(perm_si(3, 1));
    CHECK(mul(s1, s1) == perm_alg_unit(3));
    CHECK(mul(mul(s1, s2), s1) == mul(mul(s2, s1), s2));
}

TEST_CASE("young symmetrizers are idempotent, sizes <= 5") {
    for (int n = 0; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n)) {
            PermAlgElem e = young_symmetrizer(lam);
            CHECK(mul(e, e) == e);
        }
}

TEST_CASE("symmetrizer special shapes") {
    PermAlgElem e2 = young_symmetrizer(Partition{2});
    PermAlgElem want(2);
    for (const Perm& p : all_perms(2)) want.add(p, Rat(1, 2));
    CHECK(e2 == want);

    PermAlgElem alt3 = young_symmetrizer(Partition{1, 1, 1});
    PermAlgElem want3(3);
    for (const Perm& p : all_perms(3)) want3.add(p, Rat(perm_sign(p), 6));
    CHECK(alt3 == want3);
}

TEST_CASE("specht dimension via matrix rank") {
    // dim(QS_n e_lam) = f^lam, checked by rank of right multiplication by e_lam.
    for (int n = 1; n <= 4; ++n) {
        auto perms = all_perms(n);
        for (const Partition& lam : partitions_of(n)) {
            PermAlgElem e = young_symmetrizer(lam);
            // rows: images pi * e expressed in the group basis
            std::vector<std::vector<Rat>> mat;
            for (const Perm& p : perms) {
                PermAlgElem img = mul(perm_alg_of(p), e);
                std::vector<Rat> row(perms.size(), 0);
                for (auto& [q, c] : img.coeffs())
                    row[std::lower_bound(perms.begin(), perms.end(), q) - perms.begin()] = c;
                mat.push_back(row);
            }
            // Gaussian elimination
            int rank = 0;
            size_t cols = perms.size();
            for (size_t col = 0; col < cols && rank < static_cast<int>(mat.size()); ++col) {
                int pivot = -1;
                for (size_t r = rank; r < mat.size(); ++r)
                    if (mat[r][col] != 0) {
                        pivot = static_cast<int>(r);
                        break;
                    }
                if (pivot < 0) continue;
                std::swap(mat[rank], mat[pivot]);
                for (size_t r = 0; r < mat.size(); ++r) {
                    if (static_cast<int>(r) == rank || mat[r][col] == 0) continue;
                    Rat f = mat[r][col] / mat[rank][col];
                    for (size_t cc = col; cc < cols; ++cc) mat[r][cc] -= f * mat[rank][cc];
                }
                ++rank;
            }
            CHECK(Int(rank) == num_standard_tableaux(lam));
        }
    }
}

TEST_CASE("delta_colored basics") {
    // Delta(identity) is the identity in every block
    for (int n = 1; n <= 3; ++n) {
        ColoredBlockElem d = delta_colored(perm_alg_unit(n));
        for (int r = 0; r <= n; ++r) {
            for (size_t i = 0; i < d.block_size(r); ++i)
                for (size_t j = 0; j < d.block_size(r); ++j) {
                    if (i == j) {
                        PairAlg want;
                        pair_alg_add(want, {perm_identity(r), perm_identity(n - r)}, 1);
                        CHECK(d.entry(r, i, j) == want);
                    } else {
                        CHECK(d.entry(r, i, j).empty());
                    }
                }
        }
    }

    // Delta(s_1) in S_2: the r=1 block is the permutation matrix swapping colorings
    ColoredBlockElem d = delta_colored(perm_alg_of(perm_si(2, 0)));
    REQUIRE(d.block_size(1) == 2);
    PairAlg unit1;
    pair_alg_add(unit1, {perm_identity(1), perm_identity(1)}, 1);
    CHECK(d.entry(1, 0, 1) == unit1);
    CHECK(d.entry(1, 1, 0) == unit1);
    CHECK(d.entry(1, 0, 0).empty());
    CHECK(d.entry(1, 1, 1).empty());
}

TEST_CASE("delta_colored is multiplicative") {
    std::mt19937 rng(53);
    auto perms = all_perms(3);
    for (int trial = 0; trial < 6; ++trial) {
        PermAlgElem a(3), b(3);
        a.add(perms[rng() % perms.size()], Rat((int)(rng() % 5) - 2));
        a.add(perms[rng() % perms.size()], 1);
        b.add(perms[rng() % perms.size()], Rat((int)(rng() % 5) - 2));
        b.add(perms[rng() % perms.size()], 1);
        CHECK(mul(delta_colored(a), delta_colored(b)) == delta_colored(mul(a, b)));
    }
    // also n = 4 once
    auto perms4 = all_perms(4);
    PermAlgElem a(4), b(4);
    a.add(perms4[7], 1);
    b.add(perms4[17], Rat(2));
    CHECK(mul(delta_colored(a), delta_colored(b)) == delta_colored(mul(a, b)));
}

TEST_CASE("trivial splitting witnesses") {
    for (int n = 0; n <= 4; ++n) CHECK(verify_trivial_split(n));
}
