#include <gtest/gtest.h>

#include "oracles.hpp"
#include "simdiag/reduction.hpp"
#include "simdiag/sds.hpp"

using namespace simdiag;

namespace {

const ToleranceConfig kCfg{};
const Complex I1{0.0, 1.0};

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

ComplexMatrix diag(std::initializer_list<Complex> xs) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) m(i, i) = x, ++i;
    return m;
}

ReducedFamily family(std::vector<ComplexMatrix> ls) {
    ReducedFamily f;
    f.lambda0 = ComplexVector::Zero(static_cast<Eigen::Index>(ls.size()));
    f.lambda0(0) = 1.0;
    f.L = std::move(ls);
    return f;
}

ReducedFamily reduced_of(const std::vector<ComplexMatrix>& mats) {
    const LinearPencil p(mats);
    const MaxRankWitness w = max_rank_point(p, kCfg);
    return build_reduced_family(std::get<ReductionResult>(reduce(p, w, kCfg)), w, kCfg);
}

}  // namespace

TEST(BuildReducedFamily, ComplexExample) {
    const ReducedFamily f = reduced_of({mat2(0, 1, 1, 1), mat2(1, 1, 1, 0)});
    EXPECT_LE((f.L[0] - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE((f.L[1] - mat2(0, -1, 1, 1)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(BuildReducedFamily, SingletonAndEntrywise) {
    const ReducedFamily one = reduced_of({mat2(2, 1, 1, 3)});
    EXPECT_LE((one.L[0] - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-14);
    const ReducedFamily f = reduced_of({diag({1, 2}), diag({3, 4})});
    EXPECT_LE((f.L[1] - diag({3, 2})).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(BuildReducedFamily, IdentityCombination) {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.integer(1, 6), m = rng.integer(1, 4);
        std::vector<ComplexMatrix> mats;
        for (int j = 0; j < m; ++j) mats.push_back(rng.symmetric(n));
        const ReducedFamily f = reduced_of(mats);
        ComplexMatrix s = ComplexMatrix::Zero(n, n);
        for (int j = 0; j < m; ++j) s += f.lambda0(j) * f.L[static_cast<std::size_t>(j)];
        EXPECT_LE((s - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(PairwiseCommute, Examples) {
    EXPECT_FALSE(pairwise_commute(reduced_of({mat2(0, 1, 1, 1), mat2(1, 1, 1, 0)}), kCfg).has_value());
    const auto w = pairwise_commute(family({mat2(0, 1, 1, 0), diag({1, 2})}), kCfg);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->first, 0u);
    EXPECT_EQ(w->second, 1u);
    EXPECT_FALSE(pairwise_commute(family({mat2(5, 1, 2, 3)}), kCfg).has_value());
}

TEST(JointDiagonalize, ComplexExample) {
    const SdsResult r = joint_diagonalize(reduced_of({mat2(0, 1, 1, 1), mat2(1, 1, 1, 0)}), kCfg);
    ASSERT_EQ(r.verdict, SdsVerdict::SDS);
    const Complex dp = (1.0 + I1 * std::sqrt(3.0)) / 2.0, dm = (1.0 - I1 * std::sqrt(3.0)) / 2.0;
    // Ascending tuple order lists d- before d+.
    EXPECT_NEAR(std::abs(r.diagonals[1](0) - dm), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r.diagonals[1](1) - dp), 0.0, 1e-12);
    // Columns are parallel to the closed-form eigenvectors (d+, -1) and (d-, -1).
    const ComplexMatrix ref = mat2(dp, dm, -1.0, -1.0);
    for (int c = 0; c < 2; ++c) {
        const ComplexVector u = ref.col(c).normalized();
        EXPECT_NEAR(std::abs(u.dot(r.P.col(c))), 1.0, 1e-12);
    }
}

TEST(JointDiagonalize, JordanIsDefective) {
    const SdsResult r = joint_diagonalize(family({ComplexMatrix::Identity(2, 2), mat2(0, 1, 0, 0)}), kCfg);
    EXPECT_EQ(r.verdict, SdsVerdict::Defective);
    EXPECT_EQ(r.defective, 1u);
}

TEST(JointDiagonalize, NonCommutingFamily) {
    const SdsResult r = joint_diagonalize(family({mat2(0, 1, 1, 0), diag({1, 2})}), kCfg);
    EXPECT_EQ(r.verdict, SdsVerdict::NonCommuting);
}

TEST(JointDiagonalize, AlreadyDiagonalTuples) {
    const SdsResult r = joint_diagonalize(family({diag({1, 1, 2}), diag({3, 4, 4})}), kCfg);
    ASSERT_EQ(r.verdict, SdsVerdict::SDS);
    ASSERT_EQ(r.tuples.size(), 3u);
    const Complex expect[3][2] = {{1, 3}, {1, 4}, {2, 4}};
    for (int a = 0; a < 3; ++a)
        for (int j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(r.tuples[a](j) - expect[a][j]), 0.0, 1e-12);
    EXPECT_LE((r.P.cwiseAbs() - ComplexMatrix::Identity(3, 3).cwiseAbs()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(JointDiagonalize, EmptyFamilyIsSds) {
    ReducedFamily f;
    f.L = {ComplexMatrix(0, 0)};
    f.lambda0 = ComplexVector::Ones(1);
    const SdsResult r = joint_diagonalize(f, kCfg);
    EXPECT_EQ(r.verdict, SdsVerdict::SDS);
    EXPECT_EQ(r.P.size(), 0);
}

TEST(JointDiagonalizeProperty, CommutingDiagonalizableFamilies) {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.integer(1, 7), m = rng.integer(1, 4);
        const ComplexMatrix w = rng.well_conditioned(n), wi = w.inverse();
        std::vector<ComplexMatrix> ls;
        for (int j = 0; j < m; ++j) {
            ComplexMatrix d = ComplexMatrix::Zero(n, n);
            // Small alphabet of values so joint tuples repeat.
            for (int i = 0; i < n; ++i) d(i, i) = Complex(rng.integer(-2, 2), rng.integer(-1, 1));
            ls.push_back(w * d * wi);
        }
        const SdsResult r = joint_diagonalize(family(ls), kCfg);
        ASSERT_EQ(r.verdict, SdsVerdict::SDS) << "trial " << trial;
        std::size_t total = 0;
        for (auto s : r.block_sizes) total += s;
        EXPECT_EQ(total, static_cast<std::size_t>(n));
        for (int j = 0; j < m; ++j) {
            const double lj = std::max(1.0, ls[j].jacobiSvd().singularValues()(0));
            for (int c = 0; c < n; ++c) {
                const ComplexVector p = r.P.col(c);
                EXPECT_LE((ls[j] * p - r.diagonals[j](c) * p).norm(), 1e-8 * lj) << "trial " << trial;
            }
        }
        // Tuples strictly increasing lexicographically.
        for (std::size_t a = 1; a < r.tuples.size(); ++a) {
            bool less = false;
            for (int j = 0; j < m; ++j) {
                const Complex x = r.tuples[a - 1](j), y = r.tuples[a](j);
                if (std::abs(x - y) < 1e-6) continue;
                less = x.real() < y.real() - 1e-6 || (std::abs(x.real() - y.real()) < 1e-6 && x.imag() < y.imag());
                break;
            }
            EXPECT_TRUE(less) << "trial " << trial << " block " << a;
        }
    }
}
