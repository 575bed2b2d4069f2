from fractions import Fraction

import numpy as np
import pytest

from pocket_spectra import formulas as fm
from pocket_spectra.catalog import parse_graph
from pocket_spectra.errors import ExcludedEigenvector, InvalidParameter, PreconditionViolation
from pocket_spectra.graph import cartesian_product, complete, cycle, disjoint_union, empty, join, matrix_of, path
from pocket_spectra.numeric import eig_sym, spectra_match
from pocket_spectra.pockets import EdgePocketSpec, VertexPocketSpec
from pocket_spectra.poly import Poly
from pocket_spectra.spectrum import SpectrumMultiset, quadratic_roots

from conftest import sympy_charpoly

X = Poly.x()
K1 = complete(1)


def oracle(g, kind):
    return Poly(sympy_charpoly(matrix_of(g, kind)))


@pytest.mark.parametrize("g1,g2", [
    (K1, cycle(4)), (K1, complete(2)), (empty(2), empty(3)), (complete(2), complete(3)),
    (cycle(5), disjoint_union(complete(3), complete(3))),
])
def test_join_formulas_match_direct(g1, g2):
    j = join(g1, g2)
    assert fm.join_charpoly_A(g1, g2) == oracle(j, "A")
    assert fm.join_charpoly_Q(g1, g2) == oracle(j, "Q")


def test_join_examples():
    assert fm.join_charpoly_A(K1, cycle(4)) == X**2 * (X + 2) * (X * X - 2 * X - 4)
    assert fm.join_charpoly_A(K1, complete(2)) == (X - 2) * (X + 1) ** 2
    assert fm.join_charpoly_A(empty(2), empty(3)) == X**3 * (X * X - 6)
    assert fm.join_charpoly_Q(K1, complete(2)) == (X - 4) * (X - 1) ** 2
    assert fm.join_charpoly_Q(complete(2), complete(3)) == (X - 8) * (X - 3) ** 4
    with pytest.raises(PreconditionViolation):
        fm.join_charpoly_A(path(3), K1)
    with pytest.raises(PreconditionViolation):
        fm.join_charpoly_Q(K1, path(3))


def test_hv_spectrum_A_examples():
    assert fm.hv_spectrum_A(cycle(4)) == SpectrumMultiset([(0, 2), -2] + quadratic_roots(1, -2, -4))
    assert fm.hv_spectrum_A(K1) == SpectrumMultiset([1, -1])
    assert fm.hv_spectrum_A(complete(3)) == SpectrumMultiset([3, (-1, 3)])
    with pytest.raises(PreconditionViolation):
        fm.hv_spectrum_A(path(3))


def test_hv_spectrum_Q_examples():
    assert fm.hv_spectrum_Q(complete(3)) == SpectrumMultiset([(2, 3), 6])
    assert fm.hv_spectrum_Q(K1) == SpectrumMultiset([0, 2])
    assert fm.hv_spectrum_Q(cycle(4)) == SpectrumMultiset([1, 3, 3] + quadratic_roots(1, -9, 16))
    assert fm.hv_spectrum_Q(cycle(4)) == fm.graph_spectrum(join(K1, cycle(4)), "Q")


def test_huv_spectrum_Q_examples():
    assert fm.huv_spectrum_Q(complete(3)) == SpectrumMultiset([(3, 4), 8])
    octa = fm.huv_spectrum_Q(cycle(4))
    assert octa == SpectrumMultiset([2, (4, 3)] + quadratic_roots(1, -12, 28))
    assert octa == fm.graph_spectrum(join(complete(2), cycle(4)), "Q")


@pytest.mark.parametrize("h", [disjoint_union(complete(3), complete(3)), cycle(6), empty(3), complete(4)])
def test_pocket_graph_spectra_for_disconnected_and_edge_cases(h):
    assert fm.hv_spectrum_A(h) == fm.graph_spectrum(join(K1, h), "A")
    assert fm.hv_spectrum_Q(h) == fm.graph_spectrum(join(K1, h), "Q")
    assert fm.huv_spectrum_Q(h) == fm.graph_spectrum(join(complete(2), h), "Q")


VERTEX_CASES = [
    VertexPocketSpec(complete(2), (0,), path(2), 0),
    VertexPocketSpec(complete(2), (0, 1), path(2), 0),
    VertexPocketSpec(cycle(4), (0, 1), join(K1, complete(3)), 0),
    VertexPocketSpec(complete(3), (0, 1, 2), join(K1, complete(3)), 0),
    VertexPocketSpec(path(4), (1, 3), join(K1, path(3)), 0),
]


@pytest.mark.parametrize("spec", VERTEX_CASES)
@pytest.mark.parametrize("kind", ["A", "Q"])
def test_vertex_pocket_charpolys(spec, kind):
    fc = fm.formula_charpoly(spec, kind)
    assert fc.check()
    assert fc.expanded == oracle(fm.build(spec), kind)
    assert fc.expanded.degree == spec.n + spec.k * (spec.m - 1)
    if spec.remainder.is_regular():
        assert fm.formula_charpoly(spec, kind, fast_path=False).expanded == fc.expanded


def test_vertex_pocket_named_examples():
    assert fm.pocket_charpoly_A(VERTEX_CASES[0]).expanded == X**3 - 2 * X
    assert fm.pocket_charpoly_A(VERTEX_CASES[1]).expanded == X**4 - 3 * X**2 + 1
    assert fm.pocket_charpoly_Q(VERTEX_CASES[0]).expanded == X**3 - 4 * X**2 + 3 * X
    assert fm.pocket_charpoly_Q(VERTEX_CASES[1]).expanded == oracle(path(4), "Q")


def test_fast_path_and_degree_errors():
    irregular = VERTEX_CASES[4]
    with pytest.raises(PreconditionViolation):
        fm.pocket_charpoly_A(irregular, fast_path=True)
    with pytest.raises(PreconditionViolation):
        fm.pocket_charpoly_Q(VertexPocketSpec(path(2), (0,), path(3), 0))


EDGE_CASES = [
    fm.matching_fixture(2, complete(5)),
    EdgePocketSpec(complete(3), tuple(complete(3).edges()), complete(5), (0, 1)),
    EdgePocketSpec(cycle(4), ((0, 1), (2, 3)), complete(4), (0, 1)),
    EdgePocketSpec(cycle(5), tuple(cycle(5).edges()), complete(4), (0, 1)),
    EdgePocketSpec(path(4), ((0, 1), (2, 3)), parse_graph("K2vP3"), (0, 1), frozenset({1})),
]


@pytest.mark.parametrize("spec", EDGE_CASES)
def test_edge_pocket_charpolys(spec):
    fc = fm.edge_pocket_charpoly_Q(spec)
    assert fc.check()
    assert fc.expanded == oracle(fm.build(spec), "Q")
    if spec.subgraph.p == spec.n:
        assert fm.spanning_edge_pocket_charpoly_Q(spec).expanded == fc.expanded


def test_edge_pocket_matching_factorization():
    fc = fm.edge_pocket_charpoly_Q(EDGE_CASES[0])
    assert fc.expanded == (X - 3) ** 5 * (X - 5) ** 2 * (X - 8) * (X * X - 15 * X + 48)


def test_edge_pocket_errors():
    star = EdgePocketSpec(parse_graph("K1,3"), ((0, 1), (0, 2)), complete(4), (0, 1))
    assert star.subgraph.regularity is None
    with pytest.raises(PreconditionViolation):
        fm.edge_pocket_charpoly_Q(star)
    partial = EdgePocketSpec(path(4), ((0, 1),), complete(4), (0, 1))
    with pytest.raises(PreconditionViolation):
        fm.spanning_edge_pocket_charpoly_Q(partial)
    with pytest.raises(InvalidParameter):
        fm.formula_charpoly(partial, "L")


def test_verification_report():
    rep = fm.verification_report(VERTEX_CASES[2], "A")
    assert rep["equal"] and rep["first_diff_coeff"] is None
    assert rep["formula_poly"] == rep["direct_poly"]
    assert fm.first_diff_coeff(X**2 + 1, X**2 + X + 1) == 1


@pytest.mark.parametrize("kind", fm.INHERIT_KINDS)
def test_inherited_spectrum_residual_depends_only_on_degree(kind):
    h1, h2 = cycle(6), disjoint_union(complete(3), complete(3))
    if kind == "Q-edge":
        make = lambda h: fm.matching_fixture(2, join(complete(2), h))
    else:
        make = lambda h: VertexPocketSpec(path(3), (0, 2), join(K1, h), 0)
    (i1, r1), (i2, r2) = fm.inherited_spectrum(kind, make(h1)), fm.inherited_spectrum(kind, make(h2))
    assert r1 == r2 and r1.degree == make(h1).n + make(h1).k
    assert i1 != i2
    spec = make(h1)
    total = i1.total + r1.degree
    assert total == fm.build(spec).order


def test_inherited_wheel_example():
    spec = VertexPocketSpec(path(3), (0, 1), join(K1, cycle(4)), 0)
    inh, _ = fm.inherited_spectrum("A-vertex", spec)
    assert inh == SpectrumMultiset([(0, 4), (-2, 2)])
    with pytest.raises(InvalidParameter):
        fm.inherited_spectrum("A-edge", spec)


def _numeric_agrees(closed, spec):
    ok, dev = spectra_match(closed, eig_sym(matrix_of(fm.build(spec), "Q")), 1e-9)
    assert ok, dev


def test_matching_closed_form_k1_is_whole_pocket():
    closed = fm.matching_pocket_spectrum_Q(1, 5, 2, complete(3))
    assert closed == SpectrumMultiset([8, (3, 4)])
    assert closed == fm.graph_spectrum(complete(5), "Q")


@pytest.mark.parametrize("k", [2, 3, 4])
def test_matching_closed_form_numeric(k):
    spec = fm.matching_fixture(k, complete(5))
    closed = fm.matching_pocket_spectrum_Q(k, 5, 2, spec.remainder)
    assert closed.total == 2 * k + 3 * k
    _numeric_agrees(closed, spec)
    assert closed.exact_sum() == int(np.trace(matrix_of(fm.build(spec), "Q")))


def test_matching_closed_form_from_spectrum_argument():
    h = join(complete(2), cycle(4))
    a = fm.matching_pocket_spectrum_Q(2, 6, 2, h.delete_vertices([0, 1]))
    b = fm.matching_pocket_spectrum_Q(2, 6, 2, fm.graph_spectrum(h, "Q"))
    assert a == b
    _numeric_agrees(a, fm.matching_fixture(2, h))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_cycle_closed_form_numeric(n):
    spec = fm.cycle_fixture(n, complete(5))
    closed = fm.cycle_pocket_spectrum_Q(n, 5, 2, spec.remainder)
    assert closed.total == n + 3 * n
    _numeric_agrees(closed, spec)


def test_cycle_closed_form_degenerate_cosine():
    closed = fm.cycle_pocket_spectrum_Q(4, 5, 2, complete(3))
    # l = 2 gives exact roots 2m + n - 6 and 2 r2 + 2
    assert closed.multiplicity(8) >= 1 and closed.multiplicity(6) >= 1
    assert closed.is_fully_exact()
    assert not fm.cycle_pocket_spectrum_Q(5, 5, 2, complete(3)).is_fully_exact()


def test_cos_term():
    assert [fm.cos_term(l, 6) for l in range(6)] == [4, 3, 1, 0, 1, 3]
    assert fm.cos_term(1, 4) == 2
    assert abs(float(fm.cos_term(1, 5)) - 2 * (1 + np.cos(2 * np.pi / 5))) < 1e-15


def test_closed_form_parameter_errors():
    with pytest.raises(InvalidParameter):
        fm.matching_pocket_spectrum_Q(2, 5, 1, complete(3))
    with pytest.raises(InvalidParameter):
        fm.matching_pocket_spectrum_Q(0, 5, 2, complete(3))
    with pytest.raises(InvalidParameter):
        fm.cycle_pocket_spectrum_Q(2, 5, 2, complete(3))
    with pytest.raises(InvalidParameter):
        fm.cycle_pocket_spectrum_Q(3, 4, 2, complete(3))


def _vertex_cert_spec(p, r):
    return VertexPocketSpec(path(3), (0, 2), join(K1, cartesian_product(cycle(p), complete(r - 1))), 0)


def test_certificate_examples():
    certs = fm.pocket_eigenvector_certificates("A", _vertex_cert_spec(3, 2), 3, 2, 1, 1)
    assert [c.eigenvalue for c in certs] == [-1, -1]
    assert fm.certificate_rank(certs) == 2
    assert all(c.residual <= 1e-9 for c in certs)
    certs = fm.pocket_eigenvector_certificates("Q", _vertex_cert_spec(4, 3), 4, 3, 2, 1)
    assert certs[0].eigenvalue == 3 and max(c.residual for c in certs) <= 1e-9
    with pytest.raises(ExcludedEigenvector):
        fm.pocket_eigenvector_certificates("A", _vertex_cert_spec(3, 3), 3, 3, 3, 2)


def test_edge_certificates_and_errors():
    h = join(complete(2), cartesian_product(cycle(3), complete(2)))
    spec = fm.matching_fixture(3, h)
    for s, t in fm.certificate_pairs(3, 3):
        certs = fm.pocket_eigenvector_certificates("Q", spec, 3, 3, s, t)
        assert fm.certificate_rank(certs) == 3
        assert max(c.residual for c in certs) <= 1e-9
    with pytest.raises(InvalidParameter):
        fm.pocket_eigenvector_certificates("A", spec, 3, 3, 1, 1)
    with pytest.raises(PreconditionViolation):
        fm.pocket_eigenvector_certificates("Q", spec, 4, 3, 1, 1)
    assert len(fm.certificate_pairs(4, 3)) == 4 * 2 - 1
