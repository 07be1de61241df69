import random
from array import array

import pytest

from orbitbraids import kernels
from orbitbraids._kernels_py import reduce_letters as py_reduce
from orbitbraids._kernels_py import substitute as py_substitute


def random_tables(rng, size):
    flat = array("q")
    offsets = array("q", [0])
    images = [
        tuple(rng.choice(range(-size, size + 1)) or 1 for _ in range(rng.randint(0, 5)))
        for _ in range(size)
    ]
    for im in images:
        flat.extend(im)
        offsets.append(len(flat))
    for im in images:
        flat.extend(-c for c in reversed(im))
        offsets.append(len(flat))
    return flat, offsets


class TestPurePython:
    def test_reduce_cancels(self):
        assert py_reduce((1, -1)) == ()
        assert py_reduce((2, 1, -1, 2)) == (2, 2)
        assert py_reduce(()) == ()

    def test_reduce_nested(self):
        assert py_reduce((1, 2, 3, -3, -2, -1)) == ()

    def test_substitute_identity_tables(self):
        size = 4
        flat = array("q")
        offsets = array("q", [0])
        for c in range(1, size + 1):
            flat.append(c)
            offsets.append(len(flat))
        for c in range(1, size + 1):
            flat.append(-c)
            offsets.append(len(flat))
        assert py_substitute((1, 2, -2, 3), flat, offsets, size) == (1, 3)


compiled = pytest.importorskip("orbitbraids._kernels_cy", reason="compiled kernels not built")


class TestBackendAgreement:
    def test_reduce_agrees(self):
        rng = random.Random(61)
        letters = [c for c in range(-6, 7) if c]
        for _ in range(500):
            w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 80)))
            assert compiled.reduce_letters(w) == py_reduce(w)

    def test_substitute_agrees(self):
        rng = random.Random(62)
        size = 6
        letters = [c for c in range(-size, size + 1) if c]
        for _ in range(40):
            flat, offsets = random_tables(rng, size)
            for _ in range(20):
                w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 50)))
                assert compiled.substitute(w, flat, offsets, size) == py_substitute(
                    w, flat, offsets, size
                )

    def test_results_are_plain_ints(self):
        got = compiled.reduce_letters((1, 2, -2))
        assert got == (1,)
        assert all(type(c) is int for c in got)


class TestBackendSelection:
    def test_backend_is_known(self):
        assert kernels.backend_name() in kernels.available_backends()

    def test_swap_and_restore(self):
        original = kernels.backend_name()
        try:
            kernels.use_backend("python")
            assert kernels.backend_name() == "python"
            assert kernels.reduce_letters((1, -1)) == ()
        finally:
            kernels.use_backend(original)

    def test_unknown_backend_rejected(self):
        with pytest.raises(ValueError):
            kernels.use_backend("fortran")

    def test_same_results_through_dispatcher(self):
        rng = random.Random(63)
        original = kernels.backend_name()
        letters = [c for c in range(-4, 5) if c]
        words = [
            tuple(rng.choice(letters) for _ in range(rng.randint(0, 30)))
            for _ in range(100)
        ]
        try:
            results = {}
            for name in kernels.available_backends():
                kernels.use_backend(name)
                results[name] = [kernels.reduce_letters(w) for w in words]
        finally:
            kernels.use_backend(original)
        vals = list(results.values())
        assert all(v == vals[0] for v in vals)
