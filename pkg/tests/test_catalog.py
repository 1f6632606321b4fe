import pytest
from hypothesis import given
from hypothesis import strategies as st

from trispec import catalog
from helpers import sweep
from trispec.core import FAMILIES, CentralType, parse_central_type, spectrum_checksums
from trispec.eigclass import four_case_classify
from trispec.lifts import lift_spectrum
from trispec.srg import params_from_spectrum


ALL_SMALL = list(sweep(3, 10))


class TestExamples:
    @pytest.mark.parametrize(
        "text, n",
        [("PR4(h=0,m=3)", 63), ("PR7a", 3510), ("PR5(h=0,m=5,eps=-)", 45), ("PR2d(h=1,m=4)", 72),
         ("PR3(h=0,m=4,eps=+)", 120), ("PR6(h=0,m=5)", 165), ("PR7d", 360), ("PR7e", 3240)],
    )
    def test_size(self, text, n):
        assert catalog.size(parse_central_type(text)) == n

    @pytest.mark.parametrize(
        "text, rendered",
        [
            ("PR4(h=0,m=3)", "<32; [4]^27, [-4]^35>"),
            ("PR7d", "<296; [8]^105, [-4]^252, [-64]^2>"),
            ("PR6(h=0,m=5)", "<128; [8]^44, [-4]^120>"),
            ("PR2d(h=1,m=4)", "<56; [8]^3, [0]^54, [-4]^12, [-16]^2>"),
            ("PR1(h=2)", "<8; [-1]^8>"),
            ("PR2a(h=1,m=3)", "<4; [0]^3, [-2]^2>"),
            ("PR7a", "<2816; [8]^3080, [-64]^429>"),
        ],
    )
    def test_spectrum(self, text, rendered):
        assert catalog.spectrum(parse_central_type(text)).render() == rendered

    @pytest.mark.parametrize(
        "text, rho",
        [("PR7b", -352), ("PR1(h=1)", -1), ("PR1(h=5)", -1), ("PR3(h=2,m=3,eps=+)", -8), ("PR7a", -64),
         ("PR7c", -352), ("PR7e", -352), ("PR12(h=1)", -28)],
    )
    def test_min_eigenvalue(self, text, rho):
        assert catalog.min_eigenvalue(parse_central_type(text)) == rho

    def test_params_orthogonal(self):
        p = catalog.extended_params(CentralType("PR3", h=0, m=3, eps=-1))
        assert (p.n, p.k, p.lam, p.mu, p.r, p.s, p.f, p.g) == (36, 20, 10, 12, 2, -4, 20, 15)

    def test_params_fi23_codiagram(self):
        p = catalog.extended_params(CentralType("PR7b"), "codiagram")
        assert (p.n, p.k, p.lam, p.mu, p.r, p.s, p.f, p.g) == (31671, 3510, 693, 351, 351, -9, 782, 30888)

    def test_params_gf3_even(self):
        p = catalog.extended_params(CentralType("PR5", h=0, m=4, eps=1))
        # complete tripartite K_{4,4,4}: mu = k = 8
        assert (p.n, p.k, p.lam, p.mu) == (12, 8, 4, 8)
        assert catalog.spectrum(CentralType("PR5", h=0, m=4, eps=1)).render() == "<8; [0]^9, [-4]^2>"

    def test_not_rank3(self):
        with pytest.raises(catalog.NotRank3):
            catalog.extended_params(CentralType("PR2a", h=1, m=5))
        assert not catalog.is_rank3(CentralType("PR7d"))
        assert catalog.is_rank3(CentralType("PR7c"))

    def test_side_validated(self):
        with pytest.raises(ValueError):
            catalog.extended_params(CentralType("PR4", h=0, m=3), "other")


class TestAliases:
    def test_exotic(self):
        assert catalog.resolve_aliases(CentralType("PR18")) == CentralType("PR6", h=1, m=7)
        assert catalog.resolve_aliases(CentralType("PR13")) == CentralType("PR5", h=2, m=5, eps=-1)

    def test_identity(self):
        ct = CentralType("PR2a", h=0, m=4)
        assert catalog.resolve_aliases(ct) == ct

    @pytest.mark.parametrize("fam", ["PR13", "PR14", "PR15", "PR16", "PR17", "PR18", "PR19"])
    def test_exotic_share_spectrum(self, fam):
        ct = CentralType(fam)
        assert catalog.spectrum(ct) == catalog.spectrum(catalog.resolve_aliases(ct))

    @pytest.mark.parametrize(
        "a, b",
        [
            ("PR4(h=0,m=2)", "PR2a(h=0,m=6)"),
            ("PR3(h=0,m=2,eps=-)", "PR2a(h=0,m=5)"),
            ("PR3(h=0,m=3,eps=+)", "PR2a(h=0,m=8)"),
            ("PR3(h=0,m=3,eps=-)", "PR5(h=0,m=5,eps=+)"),
            ("PR5(h=0,m=5,eps=-)", "PR6(h=0,m=4)"),
            ("PR6(h=0,m=3)", "PR1(h=2)"),
            ("PR4(h=0,m=1)", "PR2a(h=0,m=3)"),
            ("PR2a(h=1,m=5)", "PR2c(h=0,m=5)"),
            ("PR2b(h=1,m=5)", "PR2d(h=0,m=5)"),
        ],
    )
    def test_coincidences(self, a, b):
        assert catalog.spectrum(parse_central_type(a)) == catalog.spectrum(parse_central_type(b))

    def test_registry(self):
        entries = catalog.catalog_entries()
        assert len(entries) >= 24
        assert {e.family for e in entries} == set(FAMILIES)
        assert all(e.to_json_obj()["family"] == e.family for e in entries)

    def test_names(self):
        assert CentralType("PR4", h=0, m=4).alias_names[0] == "Sp8(2)"
        assert CentralType("PR3", h=1, m=4, eps=1).alias_names[0] == "2^8:O8+(2)"
        assert CentralType("PR7a").name == "Fi22"


@pytest.mark.parametrize("ct", ALL_SMALL, ids=str)
def test_checksums(ct):
    s = catalog.spectrum(ct)
    n = catalog.size(ct)
    assert s.n == n
    assert spectrum_checksums(s, n, catalog.degree(ct)) == []


@pytest.mark.parametrize("ct", [c for c in ALL_SMALL if catalog.lift_structure(c)], ids=str)
def test_lift_structure(ct):
    base, p, e = catalog.lift_structure(ct)
    lifted, n = lift_spectrum(catalog.spectrum(base), catalog.size(base), p, e)
    assert (lifted, n) == (catalog.spectrum(ct), catalog.size(ct))


RANK3 = [c for c in sweep(0, 14) if catalog.is_rank3(c)] + [CentralType(f) for f in ("PR7a", "PR7b", "PR7c")]


@pytest.mark.parametrize("ct", RANK3, ids=str)
def test_rank3_identities(ct):
    p = catalog.extended_params(ct)
    assert p.mu * p.l == p.k * (p.k - 1 - p.lam)
    if catalog.spectrum(ct).degree is not None:
        assert p == params_from_spectrum(catalog.spectrum(ct), p.n)
    else:
        # O4+(2): two disjoint triangles, mu = 0
        assert (p.n, p.k, p.lam, p.mu) == (6, 2, 1, 0)
    c = catalog.extended_params(ct, "codiagram")
    assert (c.k, c.lam, c.mu) == (p.l, p.lam_c, p.mu_c)


@given(st.sampled_from(list(sweep(6, 12, classification=True))))
def test_four_cases_hold(ct):
    assert four_case_classify(catalog.min_eigenvalue(ct))


def test_symplectic_flags():
    assert catalog.symplectic_type(CentralType("PR1", h=1))
    assert not catalog.symplectic_type(CentralType("PR1", h=2))
    assert catalog.symplectic_type(CentralType("PR4", h=0, m=4))
    assert not catalog.symplectic_type(CentralType("PR6", h=0, m=4))
    assert not catalog.symplectic_type(CentralType("PR7a"))
