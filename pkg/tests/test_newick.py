"""Newick grammar, errors, canonical serialization, profile files."""

import pytest

from agreetree.errors import (DuplicateLabelError, EmptySubtreeError,
                              NewickSyntaxError)
from agreetree.labels import LabelTable
from agreetree.newick import (parse_newick, parse_profile_text,
                              read_profile_file, serialize_newick,
                              write_profile_file)


def clusters_by_name(tree):
    tb = tree.table
    return {frozenset(tb.name_of(l) for l in c) for c in tree.clusters()}


def test_parse_basic_shapes():
    t = parse_newick("((a,b)x,c)r;")
    assert len(t) == 5
    assert all(t.labels[v] for v in range(5))
    t2 = parse_newick("(a,b);")
    assert len(t2) == 3
    assert not t2.labels[t2.root]


def test_parse_multilabel_node():
    t = parse_newick("((a,b)x+y,c)r;")
    tb = t.table
    v = t.node_of_label[tb.id_of("x")]
    assert t.labels[v] == {tb.id_of("x"), tb.id_of("y")}


def test_whitespace_insignificant():
    a = parse_newick("((a,b)x,c)r;")
    b = parse_newick("  ( ( a , b ) x , c ) r ;  ")
    assert clusters_by_name(a) == clusters_by_name(b)


@pytest.mark.parametrize("bad,exc", [
    ("((a,b)x,c)r", NewickSyntaxError),       # missing ';'
    ("(a,b));", NewickSyntaxError),           # trailing garbage
    ("(a,,b);", EmptySubtreeError),
    ("();", EmptySubtreeError),
    ("(a,b)x y;", NewickSyntaxError),
    (";", NewickSyntaxError),
    ("(a+,b);", NewickSyntaxError),           # dangling '+'
])
def test_parse_errors(bad, exc):
    with pytest.raises(exc):
        parse_newick(bad)


def test_syntax_error_offset():
    with pytest.raises(NewickSyntaxError) as ei:
        parse_newick("(a,b")
    assert ei.value.offset == 4


def test_duplicate_label_in_one_tree_rejected():
    with pytest.raises(DuplicateLabelError):
        parse_newick("(a,a);")
    # the same string in different trees is the whole point of profiles
    tb = LabelTable()
    parse_newick("(a,b)r;", tb)
    parse_newick("(a,c)s;", tb)


def test_roundtrip_is_canonical_identity():
    for text in ["((a,b)x,c)r;", "(a,b,c)r;", "(a,b);", "((a,b)g,c)f+r;"]:
        t = parse_newick(text)
        assert serialize_newick(t) == text
        again = parse_newick(serialize_newick(t))
        assert clusters_by_name(t) == clusters_by_name(again)


def test_multilabel_serialization_sorted():
    t = parse_newick("((a,b)g,c)r+f;")
    assert serialize_newick(t) == "((a,b)g,c)f+r;"


def test_strip_flag_omits_synthetic():
    tb = LabelTable()
    t = parse_newick("(a,b);", tb)
    from agreetree.profile import Profile, normalize_profile
    prof, synth = normalize_profile(Profile([t], tb))
    assert len(synth) == 1
    filled = prof.trees[0]
    assert serialize_newick(filled) == "(a,b)_s0;"
    assert serialize_newick(filled, strip_synthetic=True) == "(a,b);"


def test_profile_text_order_comments_blanks():
    trees, tb = parse_profile_text(
        "# marker comment\n\n(a,b)r;\n   \n(a,c)s;\n# tail\n")
    assert len(trees) == 2
    assert tb.name_of(next(iter(trees[0].labels[trees[0].root]))) == "r"
    assert tb.name_of(next(iter(trees[1].labels[trees[1].root]))) == "s"


def test_profile_file_roundtrip(tmp_path):
    path = tmp_path / "prof.nwk"
    trees, _ = parse_profile_text("(a,b)r;\n((a,b)x,c)s;\n")
    write_profile_file(str(path), trees, header="two trees")
    again, _ = read_profile_file(str(path))
    assert [serialize_newick(t) for t in again] == \
        [serialize_newick(t) for t in trees]
