import random

import pytest

from oracles import oracle_mu
from milnorkit.diagram import braid_closure, linking_matrix, parse_braid, rebase
from milnorkit.errors import DegreeOverflow, LengthOverflow
from milnorkit.milnor import (
    MilnorTable,
    delta,
    mu,
    mu_bar,
    parse_index_key,
    reduce_longitudes,
    table,
)
from milnorkit.wirtinger import presentation


def test_mu_bar_examples():
    assert mu_bar(5, 3) == 2
    assert mu_bar(1, 0) == 1
    assert mu_bar(0, 7) == 0
    assert mu_bar(-1, 3) == 2
    with pytest.raises(ValueError):
        mu_bar(1, -1)


def test_delta_examples():
    assert delta({}, (1, 2)) == 0
    synthetic = {(1, 2): 2, (2, 3): 4, (1, 3): 0}
    assert delta(synthetic, (1, 2, 3)) == 2
    assert delta(lambda J: 0, (1, 2, 3)) == 0


def test_hopf_longitude(links):
    rl = reduce_longitudes(presentation(links["hopf"]), 2)
    assert rl.series[0].to_dict() == {"1": 1, "X2": 1}


def test_unlink_longitudes_trivial(links):
    rl = reduce_longitudes(presentation(links["unlink3"]), 6)
    assert all(s.to_dict() == {"1": 1} for s in rl.series)


def test_borromean_longitude_fixture(links):
    # hand expansion of the commutator longitude x1 x2 x1^-1 x2^-1 through degree 2
    rl = reduce_longitudes(presentation(links["borromean"]), 3)
    assert rl.series[2].to_dict() == {"1": 1, "X1.X2": 1, "X2.X1": -1}


def test_mu_lookups(links):
    rl = reduce_longitudes(presentation(links["hopf"]), 3)
    assert mu(rl, (1, 2)) == 1
    assert mu(rl, (1,)) == 0
    with pytest.raises(IndexError):
        mu(rl, (1, 3))
    with pytest.raises(LengthOverflow):
        mu(rl, (1, 2, 1, 2))


def test_table_examples(links):
    t = table(links["hopf"], 3)
    assert t.mu_bar((1, 2)) == t.mu_bar((2, 1)) == 1
    for I in t.indices(3):
        if set(I) == {1, 2}:
            assert t[I].delta == 1 and t[I].mu_bar == 0
    assert all(e.mu_bar == 0 and e.mu == 0 for e in table(links["unlink3"], 6).entries.values())
    w = table(links["whitehead"], 4)
    assert w.vanishes_through(3)
    assert abs(w.mu_bar((1, 1, 2, 2))) == 1
    assert table(links["borromean"], 3)[(1, 2, 3)].mu == 1


def test_degree_overflow(links):
    with pytest.raises(DegreeOverflow):
        table(links["hopf"], 9)


@pytest.mark.parametrize("name", ["hopf", "hopf4", "borromean", "whitehead", "unlink2", "unlink3"])
def test_series_route_matches_word_substitution(links, name):
    d = links[name]
    t = table(d, 5)
    for I, v in oracle_mu(d, 5).items():
        assert t[I].mu == v, I


def test_random_braids_match_oracle():
    rng = random.Random(3)
    for _ in range(15):
        strands = rng.randint(2, 3)
        gens = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(rng.randint(0, 6))]
        d = braid_closure(gens, strands)
        t = table(d, 4)
        for I, v in oracle_mu(d, 4).items():
            assert t[I].mu == v, (gens, I)


def test_degree_one_terms_are_linking_numbers(links):
    for d in links.values():
        rl = reduce_longitudes(presentation(d), 2)
        lm = linking_matrix(d)
        for i, s in enumerate(rl.series):
            assert s.constant_term == 1
            assert [s.coefficient((j + 1,)) for j in range(d.component_count)] == lm[i].tolist()


def test_table_invariants(links):
    for d in links.values():
        t = table(d, 5)
        for I, e in t.entries.items():
            if e.delta == 0:
                assert e.mu_bar == e.mu
            else:
                assert 0 <= e.mu_bar < e.delta and (e.mu - e.mu_bar) % e.delta == 0


def test_fast_delta_matches_definition(links):
    for d in (links["hopf4"], links["borromean"], links["whitehead"]):
        t = table(d, 5)
        mus = {I: e.mu for I, e in t.entries.items()}
        for I in t.indices():
            assert t[I].delta == delta(mus, I), I


def test_hopf_diagrams_agree(links):
    a, b = table(links["hopf"], 5), table(links["hopf4"], 5)
    assert a.first_nonvanishing() == b.first_nonvanishing()


def test_rebasing_changes_nothing_first_order(links):
    d = links["borromean"]
    base = table(d, 4).first_nonvanishing()
    for comp in range(3):
        for shift in range(1, len(d.components[comp])):
            k, bad = table(rebase(d, comp, shift), 4).first_nonvanishing()
            assert (k, bad) == base


def test_json_shape(links):
    t = table(links["hopf"], 2)
    data = MilnorTable.from_dict(__import__("json").loads(t.to_json()), 2)
    assert data.entries == t.entries
    assert '"12":{"delta":0,"mu":1,"mu_bar":1}' in t.to_json()


def test_comma_keys_for_many_components():
    d = parse_braid("", 10)
    t = table(d, 2)
    assert "1,10" in t.to_dict()["entries"]
    assert parse_index_key("1,10") == (1, 10)


def test_text_format(links):
    text = table(links["hopf"], 2).to_text()
    assert text.splitlines()[0].split() == ["I", "mu", "delta", "mu_bar"]
    assert len(text.splitlines()) == 5
