import pytest

from oracles import substituted_longitudes
from milnorkit.diagram import linking_matrix, parse_braid, parse_pd, writhe
from milnorkit.magnus import expand, lcs_degree
from milnorkit.wirtinger import longitude, presentation
from milnorkit.words import FreeWord


def test_hopf_dump(links):
    p = presentation(links["hopf"])
    assert p.dump().splitlines()[0] == "gens: 4"
    assert p.meridians == (1, 3)
    assert "mer[1]: g2" in p.dump()
    # component 0 passes under component 1 once, positively
    assert longitude(links["hopf"], 0) == FreeWord((3,), 4)


def test_unknot():
    d = parse_pd('{"components":[[0]],"crossings":[]}')
    p = presentation(d)
    assert p.generator_count == 1 and p.relators == ()
    assert longitude(d, 0).is_identity()


def test_writhe_correction():
    trefoil = parse_braid("s1 s1 s1", 2)
    assert writhe(trefoil, 0) == 3
    lam = longitude(trefoil, 0)
    assert lam.letters[-3:] == (-1, -1, -1)
    assert sum(lam.exponent_sums()) == 0


def test_longitude_index_error(links):
    with pytest.raises(IndexError):
        longitude(links["hopf"], 2)


def test_relators_hold_modulo_lower_central_series(links):
    """Reduced arc images satisfy every relator modulo F_n, except where a
    relator closes a component up; those hold only modulo [m_i, lambda_i]."""
    n = 5
    for d in links.values():
        p = presentation(d)
        m = d.component_count
        images = _arc_images(d, n)
        depth = min((lcs_degree(lam, n) for lam in substituted_longitudes(d, n)), default=n)
        for r in p.relators:
            assert sum(r.exponent_sums()) == 0
            w = FreeWord.identity(m)
            for a in r.letters:
                g = images[abs(a) - 1]
                w = w * (g if a > 0 else g.inverse())
            closing = any(abs(a) - 1 in d.base_arcs for a in r.letters)
            k = min(n, depth + 1) if closing else n
            assert expand(w, n - 1).vanishes_below(k), (d, r)


def _arc_images(d, n):
    p = presentation(d)
    m = d.component_count
    image = {a: FreeWord((p.component_of[a] + 1,), m) for a in range(d.arc_count)}
    for _ in range(n):
        new = {}
        for i, comp in enumerate(p.components):
            P = FreeWord.identity(m)
            for k, a in enumerate(comp):
                x = p.passages[i][k - 1] if k else 0
                if x:
                    g = image[abs(x) - 1]
                    P = P * (g if x > 0 else g.inverse())
                new[a] = P.inverse() * FreeWord((i + 1,), m) * P
        image = new
    return image


def test_abelianised_longitudes_give_linking_numbers(links):
    for d in links.values():
        lm = linking_matrix(d)
        for i, lam in enumerate(substituted_longitudes(d, 2)):
            assert lam.exponent_sums() == lm[i].tolist()
