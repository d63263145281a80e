"""q-Fibonacci families: oracles vs recursions vs closed form, evaluation
counts, and the identity verifier's adjudication behavior."""

import pytest

from qfibonacci import qfib
from qfibonacci.permstats import BoundExceeded
from qfibonacci.polyring import MultiPoly, parse_poly


def P(text):
    return parse_poly(text)


class TestOracle:
    def test_inversion_family_examples(self):
        assert qfib.qfib_oracle("I", 4) == P("x^4*q^6 + 3*x^2*y*q^5 + y^2*q^4")
        assert qfib.qfib_oracle("I", 0) == MultiPoly.one()

    def test_cycle_family_example(self):
        assert qfib.qfib_oracle("D", 3) == P("x^3*q^2 + 2*x*y*q")

    def test_cycle_type_family(self):
        assert qfib.qfib_oracle("D'", 3) == P("x^3*z1*z2 + 2*x*y*z3")

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            qfib.qfib_oracle("Q", 3)

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            qfib.qfib_oracle("I", 40)
        with pytest.raises(BoundExceeded):
            qfib.qfib_oracle("W1", 13)

    def test_counts_at_one(self):
        for fam in ("I", "I'", "M", "M'", "RB", "C", "D", "D'"):
            for n in range(10):
                assert qfib.qfib_oracle(fam, n).evaluate() == qfib.fibonacci(n)
        for fam in ("W1", "W2", "W3"):
            for n in range(1, 8):
                assert (qfib.qfib_oracle(fam, n).evaluate(q=1)
                        == qfib.fibonacci(2 * n - 2))

    def test_z_collapse_recovers_cycle_count(self):
        for n in range(9):
            dz = qfib.qfib_oracle("D'", n).substitute({"z": MultiPoly.var("q")})
            assert dz == qfib.qfib_oracle("D", n)


class TestRecursive:
    def test_examples(self):
        assert qfib.qfib_recursive("I", 2) == P("x^2*q + y")
        assert qfib.qfib_recursive("M", 3) == P("x^3*q^3 + x*y*q^2 + x*y*q")
        assert qfib.qfib_recursive("C", 1) == P("x")

    def test_matches_oracle_where_the_recursion_is_sound(self):
        for fam in ("I", "M", "C"):
            for n in range(10):
                assert qfib.qfib_recursive(fam, n) == qfib.qfib_oracle(fam, n)

    def test_primed_families_via_transform(self):
        for fam in ("I'", "M'"):
            for n in range(10):
                assert qfib.qfib_recursive(fam, n) == qfib.qfib_oracle(fam, n)

    def test_d_recursion_is_the_printed_typo_bearing_formula(self):
        # the printed formula misses residual-led words (odd cycles), so the
        # self-fed recursion agrees with the oracle only at the bases
        assert qfib.qfib_recursive("D", 0) == qfib.qfib_oracle("D", 0)
        assert qfib.qfib_recursive("D", 1) == qfib.qfib_oracle("D", 1)
        for n in range(2, 7):
            assert qfib.qfib_recursive("D", n) != qfib.qfib_oracle("D", n)

    def test_no_recursion_for_rb(self):
        with pytest.raises(ValueError):
            qfib.qfib_recursive("RB", 3)


class TestClosedForm:
    def test_examples(self):
        assert qfib.closed_form_I(4) == P("x^4*q^6 + 3*x^2*y*q^5 + y^2*q^4")
        assert qfib.closed_form_I(0) == MultiPoly.one()
        assert qfib.closed_form_I(1) == P("x")

    def test_matches_oracle(self):
        for n in range(11):
            assert qfib.closed_form_I(n) == qfib.qfib_oracle("I", n)


class TestCatalog:
    def test_size_and_ids(self):
        cat = qfib.identity_catalog()
        assert len(cat) == 19
        assert [c["id"] for c in cat] == list(qfib.IDENTITY_IDS)
        assert set(qfib.IDENTITY_IDS) == {
            "T2.1", "T2.2", "L2.3", "L2.4", "T3.1", "T3.3", "T4.1", "T4.3a",
            "T4.3b", "CASSINI", "T4.4", "T4.5", "T4.6", "T4.7", "T5.3",
            "T5.4", "T6.1", "T6.2", "T6.3"}

    def test_t41_arity(self):
        entry = next(c for c in qfib.identity_catalog() if c["id"] == "T4.1")
        assert entry["arity"] == ["m", "n"]
        assert entry["start"] == 1

    def test_variant_readings_present(self):
        readings = {c["id"]: c["readings"] for c in qfib.identity_catalog()}
        assert readings["CASSINI"] == ["q*Fn^2", "(q*Fn)^2"]
        assert len(readings["T5.3"]) == 4
        assert len(readings["T6.1"]) == 2
        assert len(readings["T6.2"]) == 3
        assert len(readings["T6.3"]) == 3
        assert len(readings["T4.6"]) == 2


class TestVerifier:
    def test_unknown_id(self):
        with pytest.raises(KeyError):
            qfib.verify_identity("T4.2")

    def test_t43a_holds_everywhere(self):
        report = qfib.verify_identity("T4.3a", max_n=10)
        assert report.holds
        assert len(report.instances) == 11
        assert all(i["verdict"] == "holds" for i in report.instances)

    def test_t41_small_instance(self):
        report = qfib.verify_identity("T4.1", max_n=4)
        assert report.holds
        assert report.instances[0]["indices"] == {"m": 1, "n": 1}

    def test_cassini_reading_reported(self):
        report = qfib.verify_identity("CASSINI", max_n=6)
        assert report.holds
        assert all(i["reading"] == "q*Fn^2" for i in report.instances)

    def test_t46_adjudication(self):
        report = qfib.verify_identity("T4.6", max_n=6)
        assert report.holds
        by_n = {i["indices"]["n"]: i["reading"] for i in report.instances}
        assert by_n[0] == by_n[1] == "as-printed"
        assert all(by_n[n] == "first-term-2n(n-1)" for n in range(2, 7))

    def test_t53_counterexample(self):
        report = qfib.verify_identity("T5.3", max_n=4)
        assert not report.holds
        assert report.counterexample["indices"] == {"n": 0}
        assert report.counterexample["lhs"] == "y*q^2 + x^2*q"
        assert report.counterexample["rhs"] == "x^2*q"
        assert set(report.counterexample["rhs_by_reading"]) == {
            "as-printed", "dd-term-y2q", "subscript-n+2-2k",
            "dd-term-y2q,subscript-n+2-2k"}

    def test_t61_counterexample(self):
        report = qfib.verify_identity("T6.1", max_n=4)
        assert not report.holds
        assert report.counterexample["indices"] == {"n": 2}
        assert report.counterexample["lhs"] == "q^3 + 2*q^2 + 2*q"

    def test_t62_t63_hold_via_derived_readings(self):
        for ident, derived in (("T6.2", "derived-tail-size-n-k"),
                               ("T6.3", "derived-gap-indexed-sum")):
            report = qfib.verify_identity(ident, max_n=8)
            assert report.holds
            late = [i for i in report.instances if i["indices"]["n"] >= 5]
            assert late and all(i["reading"] == derived for i in late)

    def test_deterministic_reports(self):
        a = qfib.verify_identity("T6.2", max_n=7).to_json_text()
        b = qfib.verify_identity("T6.2", max_n=7).to_json_text()
        assert a == b

    def test_report_json_schema(self):
        rep = qfib.verify_identity("T5.4", max_n=3).to_json()
        assert rep["id"] == "T5.4"
        assert {"indices", "verdict", "reading"} <= set(rep["instances"][0])
        assert rep["counterexample"] is None or \
            {"indices", "lhs", "rhs"} <= set(rep["counterexample"])
