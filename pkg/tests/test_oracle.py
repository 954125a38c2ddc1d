import numpy as np
import pytest

from detloci.degrees import DegreeData
from detloci.hilbert import hilbert_function
from detloci.matrices import EmptyError, generic_matrix, witness_matrix
from detloci.oracle import (GradedIdeal, GuardError, expand_minors,
                            generators_for, hilbert_check,
                            ideal_hilbert_function, piece_dimension,
                            syzygies_in_degree, tangent_dimension)
from detloci.polys import SparsePoly

CUBIC = DegreeData((0, 0), (1, 1, 1), 1)
P = 32003


def mono(nvars, exps, cf=1):
    return SparsePoly.monomial(nvars, P, exps, cf)


def test_expand_minors_cubic_witness():
    minors = expand_minors(witness_matrix(CUBIC, "standard"))
    assert [m.terms for m in minors] == [
        {(0, 2, 0, 0): 1}, {(1, 1, 0, 0): 1}, {(2, 0, 0, 0): 1}]


def test_expand_minors_signs():
    # [[x1, x0, x2], [0, x1, x0]]: last minor is x0^2 - x1*x2
    minors = expand_minors(witness_matrix(CUBIC, "good"))
    assert minors[2].terms == {(2, 0, 0, 0): 1, (0, 1, 1, 0): P - 1}


def test_expand_minors_row_guard():
    d = DegreeData((0,) * 5, (1,) * 6, 1)
    with pytest.raises(GuardError):
        expand_minors(witness_matrix(d, "standard"))


def test_minor_degrees_follow_column_sums():
    d = DegreeData((0, 1), (2, 2, 3), 2)
    minors = expand_minors(generic_matrix(d, seed=0))
    # column pairs in lex order: (0,1), (0,2), (1,2)
    assert [m.degree() for m in minors] == [3, 4, 4]


def test_ideal_hilbert_function_principal():
    # (x0^2) in two variables: 1, 2, 2, 2, ...
    gens = [mono(2, (2, 0))]
    assert [ideal_hilbert_function(gens, v) for v in range(5)] == [1, 2, 2, 2, 2]


def test_ideal_hilbert_function_drops_zero_gens():
    gens = [SparsePoly.zero(2, P), mono(2, (2, 0))]
    assert ideal_hilbert_function(gens, 3) == 2


def test_graded_ideal_matches_formula_on_witness():
    gi = GradedIdeal(expand_minors(witness_matrix(CUBIC, "standard")))
    assert [gi.hilbert(v) for v in range(6)] == [
        hilbert_function(CUBIC, v) for v in range(6)]


def test_graded_ideal_guard():
    gens = [mono(8, (2,) + (0,) * 7)]
    with pytest.raises(GuardError):
        GradedIdeal(gens, guard=100).piece(6)
    assert piece_dimension(8, 6) > 100


def test_syzygies_koszul_pair():
    # x0, x1 in two variables: one syzygy in degree 2, none in degree 1
    gens = [mono(2, (1, 0)), mono(2, (0, 1))]
    kern, layout = syzygies_in_degree(gens, 2)
    assert [w for _, w, _ in layout] == [2, 2]
    assert kern.shape == (1, 4)
    kern1, _ = syzygies_in_degree(gens, 1)
    assert kern1.shape[0] == 0


def test_syzygies_match_resolution_rank():
    # second term twists of the length-c complex predict the count exactly
    from detloci.resolutions import eagon_northcott
    d = DegreeData((0, 0, 0), (1,) * 6, 1)
    gens = expand_minors(generic_matrix(d, seed=0))
    cx = eagon_northcott(d)
    twists = sorted(set(cx.terms[2].twists))
    assert twists == [-4]
    kern, _ = syzygies_in_degree(gens, 4)
    assert kern.shape[0] == cx.terms[2].rank == 45


def test_syzygy_vectors_annihilate_generators():
    d = DegreeData((0, 0), (1, 1, 1, 3), 1)
    gens = expand_minors(generic_matrix(d, seed=1))
    e = 4
    kern, layout = syzygies_in_degree(gens, e)
    assert kern.shape[0] > 0
    from detloci.polys import monomial_exponents
    for srow in kern[:3]:
        total = SparsePoly.zero(gens[0].nvars, P)
        for g, (off, width, low_deg) in zip(gens, layout):
            if width == 0:
                continue
            exps = monomial_exponents(g.nvars, low_deg)
            s = SparsePoly(g.nvars, P,
                           {exps[i]: int(v) for i, v in
                            enumerate(srow[off:off + width]) if v})
            total = total + s * g
        assert total.is_zero()


def test_tangent_rejects_zero_generators():
    with pytest.raises(ValueError, match="zero generator"):
        tangent_dimension(CUBIC, [SparsePoly.zero(4, P), mono(4, (1, 0, 0, 0))])


def test_tangent_cubic_generic():
    gens = generators_for(CUBIC, "generic", seed=0)
    assert tangent_dimension(CUBIC, gens) == 12


def test_tangent_cubic_witness():
    gens = generators_for(CUBIC, "standard")
    assert tangent_dimension(CUBIC, gens) == 12


def test_tangent_line_in_p3():
    # two generic linear forms cut a line; deformations sweep the
    # Grassmannian G(1, 3) of dimension 4
    d = DegreeData((0,), (1, 1), 1)
    gens = generators_for(d, "generic", seed=0)
    assert [g.degree() for g in gens] == [1, 1]
    assert tangent_dimension(d, gens) == 4
    from detloci.dimension import dimension_report
    assert dimension_report(d).dim_w == 4


def test_hilbert_check_variants_agree():
    for variant in ("standard", "good", "generic"):
        rep = hilbert_check(CUBIC, variant=variant, vmax=5)
        assert rep.match
        assert rep.attempts == 1
        assert rep.formula == rep.observed
        assert rep.seed == (0 if variant == "generic" else None)


def test_hilbert_check_rejects_empty():
    with pytest.raises(EmptyError):
        hilbert_check(DegreeData((0, 0), (0, 1, 1), 1))


def test_hilbert_check_reseeds_on_persistent_mismatch(monkeypatch):
    import detloci.oracle as oracle_mod
    monkeypatch.setattr(oracle_mod, "hilbert_function", lambda d, v: 999)
    rep = hilbert_check(CUBIC, variant="generic", seed=5, vmax=2, max_reseeds=3)
    assert not rep.match
    assert rep.attempts == 4
    assert rep.seed == 8   # last try used seed + 3


def test_hilbert_check_witness_gets_one_shot(monkeypatch):
    import detloci.oracle as oracle_mod
    monkeypatch.setattr(oracle_mod, "hilbert_function", lambda d, v: 999)
    rep = hilbert_check(CUBIC, variant="standard", vmax=2, max_reseeds=3)
    assert not rep.match
    assert rep.attempts == 1


def test_oracle_report_json():
    obj = hilbert_check(CUBIC, variant="generic", vmax=3).to_json()
    assert obj["match"] is True
    assert obj["variant"] == "generic"
    assert obj["formula"] == [1, 4, 7, 10]
    assert obj["oracle"] == obj["formula"]
    assert obj["prime"] == P
