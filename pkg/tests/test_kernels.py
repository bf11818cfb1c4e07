import os
import subprocess
import sys

import pytest

from maxtree import kernels, _chain_py
from maxtree.enumeration import enumerate_shapes
from maxtree.histories import post_order_parents
from maxtree.shape import caterpillar

compiled = pytest.importorskip("maxtree._chain", reason="compiled kernel not built")


def test_backends_agree_on_all_shapes():
    for r, n in [(2, 14), (3, 21), (4, 22)]:
        for t in enumerate_shapes(r, n):
            parents = post_order_parents(t)
            assert list(compiled.chain_counts(parents, t.w)) == _chain_py.chain_counts(parents, t.w)


def test_empty_tree():
    assert list(compiled.chain_counts([], 3)) == _chain_py.chain_counts([], 3) == [1, 1, 1, 1]


def test_overflow_falls_back_to_python():
    parents = post_order_parents(caterpillar(2, 40))
    with pytest.raises(OverflowError):
        compiled.chain_counts(parents, 80)
    assert kernels.chain_counts(parents, 80) == _chain_py.chain_counts(parents, 80)


def test_pure_python_env_switch():
    env = dict(os.environ, MAXTREE_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import maxtree; print(maxtree.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
