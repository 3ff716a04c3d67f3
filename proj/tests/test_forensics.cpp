#include <zetalab/forensics.hpp>

#include <gtest/gtest.h>

using namespace zetalab;

namespace {

ForensicsReport one(const char* id) { return forensics({id}).front(); }

} // namespace

TEST(Forensics, PrimePowerGapIsApproximation)
{
    ForensicsReport r = one("eq16");
    EXPECT_EQ(r.verdict, Verdict::approximation);
    EXPECT_NEAR(r.deviation.to_double(), 0.0153405858, 1e-7);
}

TEST(Forensics, DigammaIdentityIsTypo)
{
    ForensicsReport r = one("eq42");
    EXPECT_EQ(r.verdict, Verdict::suspected_typo);
    ASSERT_TRUE(r.corrected_deviation.has_value());
    EXPECT_LE(*r.corrected_deviation, r.check_tol);
    EXPECT_GT(r.deviation, Real(typo_threshold));
}

TEST(Forensics, EvenClosedFormIsExact)
{
    ForensicsReport r = one("eq2");
    EXPECT_EQ(r.verdict, Verdict::exact);
    EXPECT_LE(r.deviation, r.check_tol);
}

TEST(Forensics, LiteratureLayouts)
{
    for (const char* id : {"eq22", "eq23", "eq24", "eq26"})
        EXPECT_EQ(one(id).verdict, Verdict::suspected_typo) << id;
    EXPECT_EQ(one("eq25").verdict, Verdict::exact);
    // the sign slip in the last zeta(5) sum is too small to pass the typo threshold
    ForensicsReport z5 = one("zeta5");
    EXPECT_EQ(z5.verdict, Verdict::approximation);
    EXPECT_NEAR(z5.deviation.to_double(), 1.864e-4, 1e-6);
    EXPECT_LE(*z5.corrected_deviation, z5.check_tol);
}

TEST(Forensics, LineOneFindings)
{
    ForensicsReport flat = one("eq52");
    EXPECT_EQ(flat.verdict, Verdict::suspected_typo);
    EXPECT_GT(flat.deviation, Real(0.1));
    ForensicsReport mellin = one("eq38");
    EXPECT_EQ(mellin.verdict, Verdict::suspected_typo);
    EXPECT_EQ(one("eq49").verdict, Verdict::exact);
}

TEST(Forensics, TableRow)
{
    ForensicsReport r = one("table");
    EXPECT_EQ(r.verdict, Verdict::suspected_typo);
    EXPECT_NEAR(r.deviation.to_double(), 4.447e-3, 1e-6);
}

TEST(Forensics, VerdictInvariants)
{
    for (const ForensicsReport& r : forensics(forensics_ids())) {
        if (r.verdict == Verdict::exact) {
            EXPECT_LE(r.deviation, r.check_tol) << r.formula_id;
        }
        if (r.verdict == Verdict::suspected_typo) {
            EXPECT_GT(r.deviation, Real(typo_threshold)) << r.formula_id;
            EXPECT_TRUE(isfinite(r.formula_value) && isfinite(r.oracle_value)) << r.formula_id;
        }
        EXPECT_FALSE(r.note.empty()) << r.formula_id;
    }
}

TEST(Forensics, OrderedAndValidated)
{
    auto rs = forensics({"eq5", "eq2", "eq16", "eq2"});
    ASSERT_EQ(rs.size(), 3u);
    EXPECT_EQ(rs[0].formula_id, "eq16");
    EXPECT_EQ(rs[1].formula_id, "eq2");
    EXPECT_EQ(rs[2].formula_id, "eq5");
    EXPECT_THROW(forensics({"eq2", "nope"}), ConfigError);
    EXPECT_EQ(forensics_ids().size(), 19u);
}
