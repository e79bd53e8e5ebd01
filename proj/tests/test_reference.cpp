#include <gtest/gtest.h>

#include "molpoly/acceptance.hpp"
#include "molpoly/reference.hpp"

using namespace molpoly;
using namespace molpoly::reference;

TEST(Reference, ShippedTablesAreIntact) {
    for (const auto& id : {"T1", "T2", "T4", "T5", "T6", "T7", "T8", "OBJ"}) {
        const auto& t = table(id);
        EXPECT_TRUE(t.intact()) << id;
        if (std::string(id) != "OBJ") EXPECT_EQ(t.tolerance.size(), t.columns().size()) << id;
    }
    EXPECT_EQ(table("T1").rows().size(), 22u);
    EXPECT_EQ(table("T7").rows().size(), 7u);
    EXPECT_EQ(obj().size(), 17u);
    EXPECT_THROW(table("T3"), std::invalid_argument);
}

TEST(Reference, Fnv1aKnownValues) {
    EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cull);
}

TEST(Reference, ParseComplex) {
    EXPECT_EQ(parse_complex("0.4050-0.0000j"), cplx(0.405, 0));
    EXPECT_EQ(parse_complex("-0.1775+0.3575j"), cplx(-0.1775, 0.3575));
    EXPECT_EQ(parse_complex("1.938105e-24"), cplx(1.938105e-24, 0));
    EXPECT_EQ(parse_complex("2j"), cplx(0, 2));
    EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
}

TEST(Reference, CompareLocatesMismatches) {
    const auto& t = table("T5");
    auto rows = t.rows();
    EXPECT_TRUE(compare(t, rows).empty());
    rows[1][3] = "29";  // nnz exact
    rows[2][4] = "28";  // rank within 1
    const auto bad = compare(t, rows);
    ASSERT_EQ(bad.size(), 1u);
    EXPECT_EQ(bad[0], "T5 row d=3, column nnz: expected 28, got 29 (tolerance 0.000000)");
    rows.pop_back();
    EXPECT_EQ(compare(t, rows).back(), "T5 row d=10: missing");
}

TEST(Reference, LocateDiff) {
    EXPECT_EQ(locate_diff("a,b\n1,2\n", "a,b\n1,2\n"), "");
    EXPECT_EQ(locate_diff("a,b\n1,2\n", "a,b\n1,3\n"), "line 2, column b: expected '2', found '3'");
    EXPECT_EQ(locate_diff("a,b\n1,2\n", "a,b\n"), "line 2: missing '1,2'");
}

TEST(Reference, CorruptedTableFailsWithLocation) {
    const std::string orig = table("T7").text;
    std::string bad = orig;
    bad.replace(bad.find("2616"), 4, "2617");
    override_text("T7", bad);
    EXPECT_FALSE(table("T7").intact());
    EXPECT_EQ(locate_diff(orig, table("T7").text), "line 5, column nnz: expected '2616', found '2617'");
    auto rows = table("T7").rows();
    rows[3][3] = "2616";
    const auto msgs = compare(table("T7"), rows);
    ASSERT_EQ(msgs.size(), 2u);
    EXPECT_EQ(msgs[0], "T7: checksum mismatch");
    EXPECT_EQ(msgs[1], "T7 row d=12, column nnz: expected 2617, got 2616 (tolerance 0.000000)");
    override_text("T7", orig);
    EXPECT_TRUE(table("T7").intact());
}

TEST(Reference, CriteriaSelection) {
    using acceptance::criteria_for;
    EXPECT_EQ(criteria_for("T7"), std::vector<int>{6});
    EXPECT_EQ(criteria_for("OBJ"), std::vector<int>{1});
    EXPECT_EQ(criteria_for("11"), std::vector<int>{11});
    EXPECT_THROW(criteria_for("13"), std::invalid_argument);
    EXPECT_THROW(criteria_for("T3"), std::invalid_argument);
}

TEST(Reference, CorruptedObjFailsCriterionOne) {
    const std::string orig = table("OBJ").text;
    std::string bad = orig;
    bad.replace(bad.find("666666666"), 9, "666666676");
    override_text("OBJ", bad);
    acceptance::Suite s;
    const auto c = s.run(1);
    override_text("OBJ", orig);
    EXPECT_FALSE(c.pass);
    EXPECT_NE(c.detail.find("checksum mismatch"), std::string::npos) << c.detail;
    EXPECT_NE(c.detail.find("1: expected 666666676, got 666666667"), std::string::npos) << c.detail;
}
