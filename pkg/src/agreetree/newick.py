"""Newick parsing and serialization with internal node labels.

Grammar (whitespace insignificant outside labels):

    Tree    := Subtree ';'
    Subtree := '(' Subtree (',' Subtree)* ')' LabelOpt | Label
    Label   := token ('+' token)*        token = [A-Za-z0-9_.-]+

A '+'-joined token puts several labels on one node (used for agreement
trees, whose nodes may carry more than one taxon).  Branch lengths are not
part of the format.

Profile files hold one Newick string per line; blank lines and lines
starting with '#' are ignored, and the line rank defines the tree index.
"""

import re

from agreetree.errors import (DuplicateLabelError, EmptySubtreeError,
                              NewickSyntaxError)
from agreetree.labels import LabelTable
from agreetree.xtree import XTree

_TOKEN = re.compile(r"[A-Za-z0-9_.\-]+")


def parse_newick(text, table=None):
    """Parse one Newick string into an XTree against the given LabelTable."""
    if table is None:
        table = LabelTable()
    pos = 0
    n = len(text)
    parent, children, labels = [], [], []
    seen_here = set()

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def new_node():
        parent.append(None)
        children.append([])
        labels.append(set())
        return len(parent) - 1

    def read_label_into(v, required):
        nonlocal pos
        skip_ws()
        m = _TOKEN.match(text, pos)
        if not m:
            if required:
                raise NewickSyntaxError("expected a label", pos)
            return False
        while True:
            name = m.group(0)
            lid = table.intern(name)
            if lid in seen_here:
                raise DuplicateLabelError(
                    "label %r appears twice in one tree" % name)
            seen_here.add(lid)
            labels[v].add(lid)
            pos = m.end()
            skip_ws()
            if pos < n and text[pos] == "+":
                pos += 1
                skip_ws()
                m = _TOKEN.match(text, pos)
                if not m:
                    raise NewickSyntaxError("expected a label after '+'", pos)
            else:
                return True

    def parse_subtree():
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise NewickSyntaxError("unexpected end of input", pos)
        if text[pos] == "(":
            open_at = pos
            pos += 1
            v = new_node()
            skip_ws()
            if pos < n and text[pos] == ")":
                raise EmptySubtreeError(
                    "empty group at offset %d" % open_at)
            while True:
                c = parse_subtree()
                parent[c] = v
                children[v].append(c)
                skip_ws()
                if pos < n and text[pos] == ",":
                    pos += 1
                    skip_ws()
                    if pos < n and text[pos] in "),":
                        raise EmptySubtreeError(
                            "empty subtree at offset %d" % pos)
                    continue
                if pos < n and text[pos] == ")":
                    pos += 1
                    break
                raise NewickSyntaxError("expected ',' or ')'", pos)
            read_label_into(v, required=False)
            return v
        v = new_node()
        read_label_into(v, required=True)
        return v

    root = parse_subtree()
    skip_ws()
    if pos >= n or text[pos] != ";":
        raise NewickSyntaxError("expected ';'", pos)
    pos += 1
    skip_ws()
    if pos != n:
        raise NewickSyntaxError("trailing text after ';'", pos)
    return XTree(table, parent, children, labels, root)


def serialize_newick(tree, strip_synthetic=False):
    """Canonical Newick text: children in canonical order, node labels
    sorted by name and '+'-joined.  With strip_synthetic, generated labels
    are omitted (a node may then serialize with no label at all)."""
    table = tree.table

    def label_text(v):
        ids = tree.labels[v]
        if strip_synthetic:
            ids = [l for l in ids if not table.is_synthetic(l)]
        return "+".join(sorted(table.name_of(l) for l in ids))

    # explicit stack: trees can be deep
    out = []
    ENTER, LEAVE, COMMA = 0, 1, 2
    stack = [(ENTER, tree.root)]
    while stack:
        op, v = stack.pop()
        if op == COMMA:
            out.append(",")
        elif op == LEAVE:
            out.append(")")
            out.append(label_text(v))
        else:
            cs = tree.children[v]
            if cs:
                out.append("(")
                stack.append((LEAVE, v))
                rev = []
                for i, c in enumerate(cs):
                    if i:
                        rev.append((COMMA, c))
                    rev.append((ENTER, c))
                stack.extend(reversed(rev))
            else:
                out.append(label_text(v))
    out.append(";")
    return "".join(out)


def parse_profile_text(text, table=None):
    """Parse profile-file text: list of XTrees sharing one LabelTable."""
    if table is None:
        table = LabelTable()
    trees = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        trees.append(parse_newick(line, table))
    return trees, table


def read_profile_file(path, table=None):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_profile_text(fh.read(), table)


def write_profile_file(path, trees, header=None):
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            for line in header.splitlines():
                fh.write("# %s\n" % line)
        for t in trees:
            fh.write(serialize_newick(t) + "\n")
