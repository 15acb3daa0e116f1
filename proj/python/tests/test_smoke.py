from fractions import Fraction

import pytest

import blowup


def grid_edges(r, c):
    edges = []
    for i in range(r):
        for j in range(c):
            v = i * c + j
            if j + 1 < c:
                edges.append((v, v + 1))
            if i + 1 < r:
                edges.append((v, v + c))
    return edges


def test_grid_treewidth():
    assert blowup.treewidth(4, grid_edges(2, 2)) == 2
    assert blowup.treewidth(9, grid_edges(3, 3)) == 3


def test_tree_separator_splits_path():
    n = 9
    edges = [(i, i + 1) for i in range(n - 1)]
    weights = [Fraction(1, 3)] * n
    z = blowup.tree_separator(n, edges, weights, 2)
    assert len(z) <= 2
    # Every run between separator vertices weighs at most total / 3.
    cuts = [-1, *sorted(z), n]
    assert all(b - a - 1 <= 3 for a, b in zip(cuts, cuts[1:]))


def test_decompose_and_validate_grid():
    emb = blowup.generate("grid", 6, 6)
    cert = blowup.decompose(emb)
    valid, violations = blowup.validate(emb, cert)
    assert valid and not violations
    assert cert["alpha"] is not None


def test_tampered_certificate_rejected():
    emb = blowup.generate("stacked-triangulation", 40, seed=3)
    cert = blowup.decompose(emb)
    cert["claimed_width"] = 0
    valid, violations = blowup.validate(emb, cert)
    assert not valid
    assert violations


def test_planar_partition_certificate():
    emb = blowup.generate("stacked-triangulation", 60, seed=2)
    cert = blowup.planar_partition(emb)
    valid, _ = blowup.validate(emb, cert)
    assert valid


def test_cli_in_process():
    rc, out, _ = blowup.run(["stats", "--help"])
    assert rc == 0 and out
    rc, _, err = blowup.run(["nope"])
    assert rc == 2 and err


def test_parse_error():
    with pytest.raises(blowup.ParseError):
        blowup.decompose("{not json")
    with pytest.raises(blowup.Error):
        blowup.tree_separator(2, [(0, 1)], [1], 1)
