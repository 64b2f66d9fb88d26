from pathlib import Path

import pytest

import tambara

DATA = Path(__file__).resolve().parents[2] / "tests" / "data"


def read(name):
    return (DATA / name).read_text()


def test_group():
    g = tambara.Group("sym:3")
    assert g.order == 6
    assert len(g.subgroups()) == 6
    assert g.is_subconjugate("e", "G")
    assert not g.is_subconjugate("C3", "C2")
    with pytest.raises(tambara.ParseError):
        tambara.Group("nonsense")


@pytest.mark.parametrize("ref,count", [("cyclic:2", 2), ("cyclic:3", 2), ("cyclic:4", 5), ("klein4", 19), ("sym:3", 9)])
def test_indexing_counts(ref, count):
    assert tambara.count_indexing_systems(ref) == count


def test_indexing_text_round_trip():
    for sys in tambara.indexing_systems("cyclic:4"):
        assert tambara.IndexingSystem(sys.text()) == sys
    assert tambara.validate_indexing(read("c4_low.idx"))["ok"]
    bad = tambara.validate_indexing(read("c4_bad.idx"))
    assert not bad["ok"] and bad["witness"].startswith("restriction")


def test_bispans():
    norm = tambara.Bispan(read("norm_c2.bispan"))
    res = tambara.Bispan(read("restrict_c2.bispan"))
    both = res.compose(norm)
    assert tambara.Bispan(both.text()).equivalent(both)
    assert both.canonical().text() == tambara.Bispan(both.canonical().text()).text()
    with pytest.raises(tambara.TambaraError):
        norm.compose(norm)


def test_burnside_norm_of_two():
    norm = tambara.Bispan(read("norm_c2.bispan"))
    coords, text = tambara.evaluate(norm, [2], model="burnside")
    assert text == "2*[G/G] + [G/e]"
    with pytest.raises(tambara.NormUnavailable):
        tambara.evaluate(norm, [2], model="burnside", indexing="trivial")


def test_reciprocity():
    r = tambara.verify_reciprocity("cyclic:2", "sum", "e", "C2", model="burnside")
    assert r["ok"] and r["cases"] == 4 and r["summary"] == "OK (4 cases)"
    r = tambara.verify_reciprocity("cyclic:4", "sum", "e", "C4", zmod=6, threads=2)
    assert r["ok"] and r["summands"] == 6


def test_ideal():
    assert not tambara.ideal_check("cyclic:2", ["e"], modulus=9)["ok"]
    assert tambara.ideal_check("cyclic:2", ["e"], modulus=9, indexing="trivial")["ok"]


def test_acceptance_single_criterion():
    (r,) = tambara.acceptance(only=7)
    assert r["pass"], r["detail"]
