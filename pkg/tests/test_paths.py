import random

import pytest

from motzkin.paths import (
    Bargraph,
    PathClass,
    PathWord,
    PatternStats,
    Step,
    Variant,
    classify,
    elevate,
    from_bargraph,
    is_cornerless,
    is_peakless,
    is_valleyless,
    pattern_stats,
    to_bargraph,
)
from motzkin.oracle import enumerate_paths


def word(text):
    return PathWord.parse(text)


def test_step_deltas():
    assert Step.U.delta == 1
    assert Step.D.delta == -1
    assert Step.H.delta == 0
    assert Step.L.delta == -1


def test_parse_and_str_round_trip():
    for text in ["", "UD", "UHDL", "uhdl", "UuDd"]:
        w = word(text)
        assert str(w) == text.upper()


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        word("UX")


def test_cached_levels():
    w = word("UUDHD")
    assert w.end_level == 0
    assert w.min_level == 0
    assert word("").end_level == 0
    assert word("").min_level == 0
    assert word("DU").min_level == -1
    assert word("UL").end_level == 0


def test_classify_basics():
    assert classify(word(""), Variant.PLAIN) is PathClass.EXCURSION
    assert classify(word("UHD"), Variant.PLAIN) is PathClass.EXCURSION
    assert classify(word("DU"), Variant.PLAIN) is PathClass.INVALID
    assert classify(word("UU"), Variant.PLAIN) is PathClass.MEANDER


def test_classify_skew_adjacency():
    assert classify(word("ULH"), Variant.SKEW) is PathClass.INVALID
    assert classify(word("UHL"), Variant.SKEW) is PathClass.EXCURSION
    assert classify(word("UUDL"), Variant.SKEW) is PathClass.EXCURSION
    assert classify(word("UHLU"), Variant.SKEW) is PathClass.INVALID
    # L from level 0 dips below the axis
    assert classify(word("UDL"), Variant.SKEW) is PathClass.INVALID


def test_plain_rejects_l():
    assert classify(word("UHL"), Variant.PLAIN) is PathClass.INVALID


def test_pattern_stats():
    assert pattern_stats(word("UDUD")) == PatternStats(ud=2, du=1)
    assert pattern_stats(word("HHHH")) == PatternStats(ud=0, du=0)
    assert pattern_stats(word("UUDD")) == PatternStats(ud=1, du=0)
    assert pattern_stats(word("")) == PatternStats(ud=0, du=0)


def test_pattern_predicates():
    assert is_cornerless(word("UHHD"))
    w = word("UD")
    assert not is_peakless(w)
    assert is_valleyless(w)
    assert not is_cornerless(w)


def test_elevate():
    assert str(elevate(word(""))) == "UD"
    assert str(elevate(word("HH"))) == "UHHD"
    assert str(elevate(word("HUHD"))) == "UHUHDD"


def test_elevate_rejects_non_excursions():
    with pytest.raises(ValueError):
        elevate(word("UU"))
    with pytest.raises(ValueError):
        elevate(word("DU"))


def test_elevate_preserves_pattern_stats_on_cornerless():
    """The added U precedes a non-D step and the added D follows a non-U
    step, so no new UD or DU appears (except for the empty word)."""
    assert pattern_stats(elevate(word(""))) == PatternStats(ud=1, du=0)
    for n in range(1, 9):
        for w in enumerate_paths(n, Variant.PLAIN, forbid_ud=True,
                                 forbid_du=True, excursions_only=True):
            assert pattern_stats(elevate(w)) == pattern_stats(w)


def test_bargraph_validation():
    with pytest.raises(ValueError):
        Bargraph((1, 0, 2))
    with pytest.raises(ValueError):
        Bargraph((-1,))
    assert Bargraph(()).columns == ()


def test_bargraph_parse_and_str():
    b = Bargraph.parse("2,1,3")
    assert b.columns == (2, 1, 3)
    assert str(b) == "2,1,3"
    with pytest.raises(ValueError):
        Bargraph.parse("2,x")
    with pytest.raises(ValueError):
        Bargraph.parse("2,0")
    assert Bargraph.parse("").columns == ()


def test_bargraph_semiperimeter():
    assert Bargraph((1,)).semiperimeter == 2
    assert Bargraph((1, 1)).semiperimeter == 3
    assert Bargraph((2, 1)).semiperimeter == 4
    assert Bargraph((1, 2)).semiperimeter == 4
    assert Bargraph((2, 1, 3)).semiperimeter == 7
    assert Bargraph(()).semiperimeter == 0


def test_to_bargraph_examples():
    assert to_bargraph(word("")).columns == ()
    assert to_bargraph(word("HH")).columns == (1, 1)
    assert to_bargraph(word("HUHD")).columns == (1, 2)
    assert to_bargraph(word("H")).columns == (1,)


def test_to_bargraph_rejects_bad_input():
    with pytest.raises(ValueError):
        to_bargraph(word("UD"))
    with pytest.raises(ValueError):
        to_bargraph(word("UU"))


def test_from_bargraph_examples():
    assert str(from_bargraph(Bargraph((1,)))) == "H"
    assert str(from_bargraph(Bargraph((1, 1)))) == "HH"
    with pytest.raises(ValueError):
        from_bargraph(Bargraph(()))


def test_bijection_round_trip_small():
    for columns in [(1,), (2,), (1, 1), (2, 1), (1, 2), (3, 1, 2), (2, 2, 2)]:
        b = Bargraph(columns)
        w = from_bargraph(b)
        assert classify(w, Variant.PLAIN) is PathClass.EXCURSION
        assert is_cornerless(w)
        assert to_bargraph(w) == b


def test_semiperimeter_law():
    """Nonempty cornerless excursions map to semiperimeter #U + 1 + #H."""
    for n in range(1, 10):
        for w in enumerate_paths(n, Variant.PLAIN, forbid_ud=True,
                                 forbid_du=True, excursions_only=True):
            b = to_bargraph(w)
            assert b.semiperimeter == w.count(Step.U) + 1 + w.count(Step.H)


def test_random_words_classify_deterministic():
    rng = random.Random(20260823)
    for _ in range(300):
        text = "".join(rng.choice("UDHL") for _ in range(rng.randrange(0, 12)))
        w1 = word(text)
        w2 = word(text)
        for variant in Variant:
            assert classify(w1, variant) is classify(w2, variant)
        assert pattern_stats(w1) == pattern_stats(w2)
