from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from trispec.core import (
    STAR,
    BitMatrix,
    CentralType,
    ExtendedParams,
    InfeasibleParams,
    OutOfRange,
    ParseError,
    Spectrum,
    SpectrumError,
    normalize,
    parse_central_type,
    spectrum_checksums,
)


def spec(degree, *pairs, n=None):
    raw = [(degree, 1)] + list(pairs)
    total = n if n is not None else sum(m for _, m in raw)
    return normalize(raw, total, degree)


class TestNormalize:
    def test_star_fills_octahedron(self):
        s = normalize([(4, 1), (-2, 2), (0, STAR)], 6, 4)
        assert s.entries == ((4, 1), (0, 3), (-2, 2))
        assert s.degree == 4 and s.render() == "<4; [0]^3, [-2]^2>"

    def test_single_vertex(self):
        s = normalize([(0, 1)], 1, 0)
        assert s.entries == ((0, 1),) and s.degree == 0
        assert s.render() == "<0>"

    def test_triangle(self):
        s = normalize([(2, 1), (-1, STAR)], 3, 2)
        assert s.entries == ((2, 1), (-1, 2))

    def test_merges_duplicates_and_drops_zero(self):
        s = normalize([(3, 1), (1, 2), (1, 1), (-1, 0), (-2, 3)], 7, 3)
        assert s.entries == ((3, 1), (1, 3), (-2, 3))

    def test_negative_star(self):
        with pytest.raises(SpectrumError):
            normalize([(4, 1), (0, 6), (-2, STAR)], 6, 4)

    def test_duplicate_star(self):
        with pytest.raises(SpectrumError):
            normalize([(4, 1), (0, STAR), (-2, STAR)], 6, 4)

    def test_total_mismatch(self):
        with pytest.raises(SpectrumError):
            normalize([(4, 1), (0, 3)], 6, 4)

    def test_degree_missing(self):
        with pytest.raises(SpectrumError):
            normalize([(4, 1), (0, 5)], 6, 3)

    def test_disconnected_has_no_degree_entry(self):
        s = normalize([(2, 2), (-1, 4)], 6, 2, connected=False)
        assert s.degree is None and s.restricted == s.entries

    def test_rationals_kept_exact(self):
        s = normalize([(Fraction(1, 2), 1), (Fraction(-1, 2), 1)], 2, None)
        assert s.to_json_obj()["entries"][0]["eig"] == "1/2"

    @given(st.lists(st.tuples(st.integers(-40, 40), st.integers(0, 6)), min_size=1, max_size=8))
    def test_idempotent(self, pairs):
        raw = [(99, 1)] + pairs
        n = sum(m for _, m in raw)
        once = normalize(raw, n, 99)
        assert normalize(once.entries, n, 99) == once
        eigs = [e for e, _ in once.entries]
        assert eigs == sorted(eigs, reverse=True) and len(set(eigs)) == len(eigs)
        assert all(m > 0 for _, m in once.entries)

    @given(st.lists(st.tuples(st.integers(-40, 40), st.integers(1, 6)), max_size=6), st.integers(0, 12))
    def test_star_absorbs_remainder(self, pairs, extra):
        n = 1 + sum(m for _, m in pairs) + extra
        s = normalize([(50, 1), (0, STAR)] + pairs, n, 50)
        assert s.n == n


class TestChecksums:
    def test_sp6(self):
        s = spec(32, (4, 27), (-4, 35))
        assert spectrum_checksums(s, 63, 32) == []

    def test_complete_graph(self):
        assert spectrum_checksums(spec(8, (-1, 8)), 9, 8) == []

    def test_broken_total(self):
        s = spec(4, (-2, 2), (0, 2))
        problems = spectrum_checksums(s, 6, 4)
        assert any("total multiplicity" in p for p in problems)

    def test_trace_violation(self):
        s = spec(4, (-1, 5))
        assert any("trace" in p for p in spectrum_checksums(s, 6, 4))


class TestSpectrumJson:
    @given(st.dictionaries(st.integers(-30, 30), st.integers(1, 9), min_size=1, max_size=6))
    def test_round_trip(self, mults):
        top = max(mults) + 1
        raw = [(top, 1)] + list(mults.items())
        s = normalize(raw, sum(m for _, m in raw), top)
        assert Spectrum.from_json_obj(s.to_json_obj()) == s

    def test_rejects_bad_total(self):
        obj = spec(2, (-1, 2)).to_json_obj()
        obj["n"] = 4
        with pytest.raises(SpectrumError):
            Spectrum.from_json_obj(obj)


class TestExtendedParams:
    def test_json_round_trip(self):
        p = ExtendedParams(10, 6, 3, 4, 3, 0, 1, 1, -2, 4, 5)
        assert ExtendedParams.from_json_obj(p.to_json_obj()) == p
        assert set(p.to_json_obj()) == {"n", "k", "lambda", "mu", "l", "lambda_c", "mu_c", "r", "s", "f", "g"}

    def test_rejects_inconsistent(self):
        with pytest.raises(InfeasibleParams):
            ExtendedParams(10, 6, 3, 5, 3, 1, 1, 1, -2, 4, 5)


class TestBitMatrix:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            BitMatrix([[0, 1], [0, 0]])

    def test_rejects_diagonal(self):
        with pytest.raises(ValueError):
            BitMatrix([[1, 0], [0, 0]])

    def test_rejects_non_binary(self):
        with pytest.raises(ValueError):
            BitMatrix([[0, 2], [2, 0]])

    def test_immutable(self):
        m = BitMatrix([[0, 1], [1, 0]])
        with pytest.raises(ValueError):
            m.array[0, 1] = 0

    def test_complement_and_connectivity(self):
        tri = BitMatrix.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert tri.is_connected() and tri.regular_degree() == 2
        empty = tri.complement()
        assert empty.edge_count() == 0 and not empty.is_connected()

    def test_dimacs(self):
        m = BitMatrix.from_edges(3, [(0, 1)])
        assert m.to_dimacs() == "p edge 3 1\ne 1 2\n"

    @given(st.integers(1, 12), st.data())
    def test_complement_involution(self, n, data):
        bits = data.draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
        a = np.zeros((n, n), dtype=np.uint8)
        iu = np.triu_indices(n, 1)
        a[iu] = bits
        m = BitMatrix(a + a.T)
        assert m.complement().complement() == m


class TestCentralType:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("PR4(h=0,m=3)", CentralType("PR4", h=0, m=3)),
            ("PR4(h=0)(m=3)", CentralType("PR4", h=0, m=3)),
            ("PR5(m=6,eps=-)", CentralType("PR5", h=0, m=6, eps=-1)),
            ("PR5(h=0)(m=6)(eps=+)", CentralType("PR5", h=0, m=6, eps=1)),
            ("PR7a", CentralType("PR7a")),
            ("PR9(h=2)", CentralType("PR9", h=2)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_central_type(text) == expected

    @pytest.mark.parametrize("text", ["PR4(m=0)", "PR3(h=0,m=1,eps=+)", "PR5(h=-1,m=5,eps=+)", "PR9(m=3)", "PR7a(h=1)"])
    def test_out_of_range(self, text):
        with pytest.raises(OutOfRange):
            parse_central_type(text)

    @pytest.mark.parametrize("text", ["PR20", "PR4(h=0,m=3", "PR4(q=1)", "PR4(h=x,m=3)", "PR5(m=5,eps=0)", "PR4(h=1,h=2,m=3)"])
    def test_parse_errors(self, text):
        with pytest.raises((ParseError, OutOfRange)):
            parse_central_type(text)

    @given(st.integers(0, 9), st.integers(4, 15), st.sampled_from([1, -1]), st.sampled_from(["PR3", "PR5"]))
    def test_render_round_trip(self, h, m, eps, fam):
        ct = CentralType(fam, h=h, m=m, eps=eps)
        assert parse_central_type(str(ct)) == ct

    def test_classification_range(self):
        assert not CentralType("PR3", h=2, m=3, eps=1).in_classification_range()
        assert CentralType("PR3", h=2, m=3, eps=-1).in_classification_range()
        assert not CentralType("PR8", h=0).in_classification_range()
        assert not CentralType("PR6", h=0, m=3).in_classification_range()
        assert CentralType("PR6", h=1, m=3).in_classification_range()
