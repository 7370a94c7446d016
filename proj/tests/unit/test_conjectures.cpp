#include <catch2/catch_amalgamated.hpp>

#include "cyclo/conjectures.hpp"

using namespace cyclo;

namespace {

std::uint64_t evidence_value(const ConjectureReport& r, const std::string& label) {
    for (const auto& e : r.evidence)
        if (e.label == label) {
            REQUIRE(e.values.size() == 1);
            return e.values[0];
        }
    FAIL("missing evidence: " + label);
    return 0;
}

const std::vector<std::uint64_t>& evidence_values(const ConjectureReport& r,
                                                  const std::string& label) {
    for (const auto& e : r.evidence)
        if (e.label == label) return e.values;
    FAIL("missing evidence: " + label);
    static const std::vector<std::uint64_t> empty;
    return empty;
}

}  // namespace

TEST_CASE("p2q2: both orientations of the winning product occur", "[conjectures]") {
    const auto r35 = check_p2q2(3, 5);
    CHECK(r35.verdict == Verdict::Holds);
    const auto mixed35 = evidence_value(r35, "H(phi_p phi_q phi_p2q phi_pq2)");
    const auto squares35 = evidence_value(r35, "H(phi_p phi_q phi_p2 phi_q2)");
    CHECK(mixed35 > squares35);  // the paper's 3^2 5^2 example
    CHECK(evidence_value(r35, "B(n)") == mixed35);

    const auto r511 = check_p2q2(5, 11);
    CHECK(r511.verdict == Verdict::Holds);
    const auto mixed511 = evidence_value(r511, "H(phi_p phi_q phi_p2q phi_pq2)");
    const auto squares511 = evidence_value(r511, "H(phi_p phi_q phi_p2 phi_q2)");
    CHECK(squares511 > mixed511);  // the paper's 5^2 11^2 example
    CHECK(evidence_value(r511, "B(n)") == squares511);

    CHECK(check_p2q2(2, 3).verdict == Verdict::Holds);
    CHECK_THROWS_AS(check_p2q2(5, 3), InputOutOfRange);
    CHECK_THROWS_AS(check_p2q2(4, 7), InputOutOfRange);
}

TEST_CASE("2q^b: theorem cases and a searched case", "[conjectures]") {
    CHECK(check_2qb(3, 1).verdict == Verdict::Holds);   // B(6) = 2
    CHECK(check_2qb(3, 2).verdict == Verdict::Holds);   // B(18) = 2
    CHECK(check_2qb(3, 4).verdict == Verdict::Holds);   // B(162), 10 divisors
    CHECK(evidence_value(check_2qb(3, 4), "B(n)") == 2);
    CHECK_THROWS_AS(check_2qb(2, 3), InputOutOfRange);
}

TEST_CASE("pq^b strictness: skip below b=3, search at b=3", "[conjectures]") {
    CHECK(check_pqb_strict(3, 5, 2).verdict == Verdict::Skipped);
    const auto r = check_pqb_strict(3, 5, 3);  // n = 375
    CHECK(r.verdict == Verdict::Holds);
    CHECK(evidence_value(r, "B(n)") > 3);
    CHECK(check_pqb_strict(5, 7, 3).verdict == Verdict::Holds);  // n = 1715
    CHECK_THROWS_AS(check_pqb_strict(2, 5, 3), InputOutOfRange);
}

TEST_CASE("pq^b divisibility scans", "[conjectures]") {
    const auto r = check_pq_divisibility(3, 2, 20);
    CHECK(r.verdict == Verdict::Holds);
    const auto& qs = evidence_values(r, "q");
    CHECK(qs == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19});
    for (std::uint64_t v : evidence_values(r, "B(pq^b)")) CHECK(v % 3 == 0);

    const auto r1 = check_pq_divisibility(3, 1, 20);
    CHECK(r1.verdict == Verdict::Holds);
    for (std::uint64_t v : evidence_values(r1, "B(pq^b)")) CHECK(v == 3);

    CHECK(check_pq_divisibility(3, 1, 3).verdict == Verdict::Skipped);
    CHECK_THROWS_AS(check_pq_divisibility(2, 2, 20), InputOutOfRange);
}

TEST_CASE("divisibility values agree with the closed form when b <= 2", "[conjectures]") {
    for (std::uint32_t b : {1u, 2u}) {
        const auto r = check_pq_divisibility(5, b, 30);
        const auto& qs = evidence_values(r, "q");
        const auto& vals = evidence_values(r, "B(pq^b)");
        REQUIRE(qs.size() == vals.size());
        for (std::size_t i = 0; i < qs.size(); ++i) {
            std::uint64_t n = 5;
            for (std::uint32_t e = 0; e < b; ++e) n *= qs[i];
            const auto kf = known_formula(n);
            REQUIRE(kf);
            CHECK(vals[i] == kf->value);
        }
    }
}

TEST_CASE("out-of-shape inputs are rejected, not failed", "[conjectures]") {
    const auto r = check_pq_divisibility_point(337561);  // 7^2 83^2
    CHECK(r.verdict == Verdict::Skipped);
    CHECK(r.note.find("not of shape") != std::string::npos);

    CHECK(check_pq_divisibility_point(15).verdict == Verdict::Holds);
    CHECK(check_pq_divisibility_point(2 * 9).verdict == Verdict::Skipped);  // p = 2
    CHECK(check_pq_divisibility_point(30).verdict == Verdict::Skipped);     // 3 primes
}

TEST_CASE("parity products on small squarefree n", "[conjectures]") {
    for (std::uint64_t n : {1, 2, 3, 6, 15, 30, 105}) {
        const auto r = check_parity_products(n);
        CHECK(r.verdict == Verdict::Holds);
    }
    const auto r30 = check_parity_products(30);
    const auto matches = evidence_values(r30, "matches (odd, even)");
    CHECK((matches[0] == 1 || matches[1] == 1));
    CHECK_THROWS_AS(check_parity_products(12), NotSquarefree);
}

TEST_CASE("pqr^b: skip below b=2, search at b=2", "[conjectures]") {
    CHECK(check_pqrb(2, 3, 5, 1).verdict == Verdict::Skipped);
    const auto r = check_pqrb(2, 3, 5, 2);  // n = 150, 12 divisors
    CHECK(r.verdict == Verdict::Holds);
    const auto b = evidence_value(r, "B(n)");
    CHECK(b % 2 == 0);
    CHECK(b > 2);
    CHECK(check_pqrb(3, 5, 7, 2).verdict == Verdict::Holds);  // n = 735
    CHECK_THROWS_AS(check_pqrb(3, 2, 5, 2), InputOutOfRange);
}

TEST_CASE("finite range scans stabilize on formula families", "[conjectures]") {
    const auto r211 = finite_range_scan(2, 1, 1, 50);
    CHECK(r211.verdict == Verdict::Holds);
    CHECK(evidence_values(r211, "distinct values") == std::vector<std::uint64_t>{2});

    const auto r221 = finite_range_scan(2, 2, 1, 50);
    CHECK(r221.verdict == Verdict::Holds);
    CHECK(evidence_values(r221, "distinct values") == std::vector<std::uint64_t>{3, 4});

    const auto r312 = finite_range_scan(3, 1, 2, 50);
    CHECK(r312.verdict == Verdict::Holds);
    CHECK(evidence_values(r312, "distinct values") == std::vector<std::uint64_t>{3});

    CHECK(finite_range_scan(2, 1, 1, 7).verdict == Verdict::Skipped);  // 3 primes only
    CHECK_THROWS_AS(finite_range_scan(4, 1, 1, 50), InputOutOfRange);
}

TEST_CASE("range scan drivers cover the advertised families", "[conjectures]") {
    const auto parity = scan_parity_products(30);
    CHECK(parity.size() == 19);  // squarefree n <= 30
    CHECK(all_reports_pass(parity));

    const auto two_qb = scan_two_qb(100);
    // q^b <= 50: q=3 with b<=3, q=5 and q=7 with b<=2, then 11..47 with b=1
    CHECK(two_qb.size() == 18);
    CHECK(all_reports_pass(two_qb));

    const auto p2q2 = scan_p2q2(1300);
    CHECK(p2q2.size() == 10);  // pq <= 36: (2,3..17), (3,5..11), (5,7)
    CHECK(all_reports_pass(p2q2));

    const auto pqrb = scan_pqrb(800);
    CHECK(pqrb.size() == 6);  // 150, 294, 490, 726, 735, 750
    CHECK(all_reports_pass(pqrb));

    const auto strict = scan_pqb_strict(1500);
    CHECK(strict.size() == 2);  // 3*5^3 = 375, 3*7^3 = 1029
    CHECK(all_reports_pass(strict));
}

TEST_CASE("reports are pure functions of their parameters", "[conjectures]") {
    const auto a = check_p2q2(3, 5);
    const auto b = check_p2q2(3, 5);
    CHECK(a.verdict == b.verdict);
    REQUIRE(a.evidence.size() == b.evidence.size());
    for (std::size_t i = 0; i < a.evidence.size(); ++i) {
        CHECK(a.evidence[i].label == b.evidence[i].label);
        CHECK(a.evidence[i].values == b.evidence[i].values);
    }
    CHECK(a.nodes == b.nodes);
}
