import random

import pytest
from hypothesis import given, strategies as st

from universes import Verdict, check_personal_universe, run_agreement_simulation
from universes.simulate import table1_scenario


def run(sc):
    return run_agreement_simulation(sc["events"], sc["perceptions"], sc["languages"], sc["alphabet"])


def test_table1():
    t = run(table1_scenario())
    assert [s.tokens for s in t.steps] == [(x, x) for x in "uvwxy"]
    assert t.all_agree and t.percepts_ever_differ
    assert check_personal_universe(t) is Verdict.PERSONAL_UNIVERSE_CONSISTENT


def test_empty_sequence():
    sc = table1_scenario()
    sc["events"] = []
    t = run(sc)
    assert t.all_agree
    assert t.steps == ()


def test_shared_experience():
    sc = table1_scenario()
    sc["perceptions"][1] = dict(sc["perceptions"][0])
    sc["languages"][1] = dict(sc["languages"][0])
    t = run(sc)
    assert t.all_agree and not t.percepts_ever_differ
    assert check_personal_universe(t) is Verdict.SHARED_EXPERIENCE


def test_detectable_disagreement():
    sc = table1_scenario()
    sc["languages"][1]["b2"] = "w"
    t = run(sc)
    assert [s.event for s in t.steps if not s.agree] == ["b"]
    assert check_personal_universe(t) is Verdict.DETECTABLE_DISAGREEMENT
    assert t.non_injective == (1,)


def test_errors():
    sc = table1_scenario()
    with pytest.raises(ValueError):
        run_agreement_simulation(["z"], sc["perceptions"], sc["languages"], sc["alphabet"])
    del sc["languages"][0]["c1"]
    with pytest.raises(KeyError):
        run(sc)
    with pytest.raises(ValueError):
        run_agreement_simulation([], sc["perceptions"] * 2, sc["languages"] * 2)


@given(st.integers(1, 6), st.integers(1, 4), st.integers(1, 4), st.randoms(use_true_random=False),
       st.lists(st.integers(0, 5), max_size=12))
def test_composition_law(k, npercepts, ntokens, rnd, idx):
    alphabet = list(range(k))
    perceptions = [{e: rnd.randrange(npercepts) for e in alphabet} for _ in range(2)]
    languages = [{x: rnd.randrange(ntokens) for x in range(npercepts)} for _ in range(2)]
    composed = [{e: lang[perc[e]] for e in alphabet} for perc, lang in zip(perceptions, languages)]
    events = [alphabet[i % k] for i in idx] or alphabet
    t = run_agreement_simulation(events, perceptions, languages, alphabet)
    assert [s.agree for s in t.steps] == [composed[0][e] == composed[1][e] for e in events]
    if set(events) == set(alphabet):
        assert t.all_agree == (composed[0] == composed[1])


def test_verdict_ignores_token_identity():
    sc = table1_scenario()
    rng = random.Random(3)
    names = {t: f"tok{rng.random()}" for t in "uvwxy"}
    sc["languages"] = [{p: names[t] for p, t in lang.items()} for lang in sc["languages"]]
    assert check_personal_universe(run(sc)) is Verdict.PERSONAL_UNIVERSE_CONSISTENT
