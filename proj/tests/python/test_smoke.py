import pytest

import spgenus

DIPOLE = "0 1\n0 1\n0 1\n"
K4 = "a b\na c\na d\nb c\nb d\nc d\n"


def test_dipole_distribution():
    assert spgenus.genus_distribution(DIPOLE) == [2, 2]


def test_oracle_agrees_with_engine():
    text = spgenus.generate(3, seed=11)
    assert spgenus.genus_distribution(text) == spgenus.genus_distribution_oracle(text)


def test_generate_is_deterministic():
    assert spgenus.generate(4, seed=9) == spgenus.generate(4, seed=9)
    assert spgenus.generate(0) == DIPOLE


def test_counts_are_exact_ints():
    # 2 + 2*5 = 12 trivalent vertices, so 2**12 embeddings in total
    counts = spgenus.genus_distribution(spgenus.generate(5, seed=2))
    assert sum(counts) == 2**12
    assert all(isinstance(c, int) for c in counts)


def test_report_fields():
    report = spgenus.compute_report(DIPOLE)
    assert report["method"] == "cubic-series-parallel"
    assert report["genus_distribution"] == [2, 2]
    assert report["vertices"] == 2
    assert report["edges"] == 3
    assert report["min_genus"] == 0
    assert report["max_genus"] == 1
    assert report["total_embeddings"] == 4

    tree = spgenus.compute_report("a b\nb c\n")
    assert tree["method"] == "blocks-and-bridges"
    assert tree["genus_distribution"] == [1]


def test_errors_become_python_exceptions():
    with pytest.raises(ValueError):
        spgenus.genus_distribution("0 0\n")  # self-loop
    with pytest.raises(ValueError):
        spgenus.genus_distribution(K4)  # treewidth 3
    with pytest.raises(ValueError):
        spgenus.generate(-1)
    with pytest.raises(RuntimeError):
        spgenus.genus_distribution_oracle(DIPOLE, limit=3)
    # the oracle itself has no treewidth restriction
    assert spgenus.genus_distribution_oracle(K4) == [2, 14]
