import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import matrix_pairs, rank_oracle
from pencilstrat import INF, GaussianRational, Partition, parse
from pencilstrat.exact import (
    ExactMatrix,
    ExplicitPencil,
    available_backends,
    build_coupled,
    build_P,
    extract_weyr,
    nullity,
    pencil_rank,
    rank_exact,
    reversal,
    weyr_nullity_prefix,
)
from pencilstrat.exact.rank import BACKEND, bareiss_rank, modular_rank
from pencilstrat.realize import jordan_block, realize_kcf, right_block, scramble, witness_sequence

G = GaussianRational


# -- scalars ----------------------------------------------------------------------

def test_gaussian_arithmetic():
    a, b = G(1, 2), G(Fraction(1, 2), -1)
    assert a + b == G(Fraction(3, 2), 1)
    assert a * b == G(Fraction(5, 2), 0)
    assert (a / b) * b == a
    assert a.conjugate() == G(1, -2) and a.norm() == 5
    assert G(3) == 3 and hash(G(3)) == hash(3)
    with pytest.raises(ZeroDivisionError):
        a / G(0)


@pytest.mark.parametrize("text", ["0", "-3", "1/2", "1/2+3i", "2-1/3i", "-7/5-2i"])
def test_gaussian_text_round_trip(text):
    assert str(G.parse(text)) == text


# -- matrices and rank --------------------------------------------------------------

def test_rank_examples():
    assert rank_exact(ExactMatrix.identity(3)) == 3
    assert rank_exact(ExactMatrix.zeros(2, 5)) == 0
    R2 = realize_kcf(parse("2x3: R(2)"))
    assert rank_exact(build_P(R2, 0, 1)) == 2


def test_nullity_examples():
    assert nullity(ExactMatrix.identity(4)) == 0
    assert nullity(ExactMatrix.zeros(2, 5)) == 5
    L = realize_kcf(parse("2x2: J(0;1) J(1;1)"))
    assert nullity(build_coupled(L, [0, 1], [1, 1])) == 2


def test_matrix_text_round_trip():
    M = ExactMatrix.from_rows([[G(1, 1), 0], [G(Fraction(-1, 2)), G(0, -3)]])
    assert ExactMatrix.from_text(M.to_text()) == M


gauss_entries = st.builds(G, st.integers(-3, 3), st.sampled_from([0, 0, 0, 1, -2])) | st.builds(
    G, st.fractions(min_value=-2, max_value=2, max_denominator=3)
)


@st.composite
def low_rank_matrices(draw):
    m, n, r = draw(st.integers(1, 6)), draw(st.integers(1, 6)), draw(st.integers(0, 4))
    if r == 0:
        return ExactMatrix.zeros(m, n)
    U = ExactMatrix.from_rows([[draw(gauss_entries) for _ in range(r)] for _ in range(m)])
    V = ExactMatrix.from_rows([[draw(gauss_entries) for _ in range(n)] for _ in range(r)])
    return U @ V


@given(low_rank_matrices())
def test_rank_matches_oracle_on_every_backend(M):
    expected = rank_oracle(matrix_pairs(M))
    for backend in available_backends():
        assert rank_exact(M, backend) == expected


@given(st.lists(st.integers(-40, 40), min_size=12, max_size=12), st.lists(st.integers(-2, 2), min_size=12, max_size=12))
def test_modular_and_bareiss_agree(re, im):
    # rank-deficient by repeating a row
    re = re + re[:4]
    im = im + im[:4]
    assert modular_rank(re, im, 4, 4) == bareiss_rank(re, im, 4, 4)


def test_huge_entries_still_exact():
    big = 10 ** 40
    M = ExactMatrix.from_rows([[big, big + 1], [big - 1, big]])
    assert rank_exact(M) == 2
    M = ExactMatrix.from_rows([[big, 3 * big], [2 * big, 6 * big]])
    for backend in available_backends():
        assert rank_exact(M, backend) == 1


def test_backend_selection_by_environment():
    code = "from pencilstrat.exact import BACKEND; print(BACKEND)"
    env = dict(os.environ, PENCILSTRAT_BACKEND="python")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    env["PENCILSTRAT_BACKEND"] = "fortran"
    bad = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert bad.returncode != 0 and "PENCILSTRAT_BACKEND" in bad.stderr


def test_default_backend_is_compiled_when_built():
    assert BACKEND == ("cython" if "cython" in available_backends() else "python")


# -- pencils --------------------------------------------------------------------

def test_pencil_rank_examples():
    assert pencil_rank(realize_kcf(parse("3x3: J(2;2) J(3;1)"))) == 3
    assert pencil_rank(realize_kcf(parse("2x3: R(2)"))) == 2
    assert pencil_rank(realize_kcf(parse("1x1: R(0) LT(0)"))) == 0


def test_pencil_rank_survives_eigenvalues_at_sample_points():
    # L(t) is singular at t = 0, 1, 2; only the last sample point has full rank
    s = parse("3x3: J(0;1) J(1;1) J(2;1)")
    assert pencil_rank(realize_kcf(s)) == 3
    assert pencil_rank(scramble(realize_kcf(parse("4x4: J(0;2) J(1;1) J(2;1)")), 3)) == 4


def test_build_P_layout():
    L = realize_kcf(parse("2x2: J(1;2)"))
    assert build_P(L, 3, 1) == L.at(3)
    P = build_P(L, 3, 2)
    assert P.shape == (4, 4)
    for i in range(2):
        for j in range(2):
            assert P[i, j] == L.at(3)[i, j]
            assert P[2 + i, 2 + j] == L.at(3)[i, j]
            assert P[2 + i, j] == L.B[i, j]
            assert P[i, 2 + j] == 0
    with pytest.raises(ValueError):
        build_P(L, 0, 0)


def test_build_P_nullity_on_jordan_block():
    assert nullity(build_P(jordan_block(2, 0), 0, 2)) == 2


def test_build_coupled_layout_and_errors():
    L = realize_kcf(parse("2x2: J(0;1) J(1;1)"))
    assert build_coupled(L, [5], [2]) == build_P(L, 5, 2)
    C = build_coupled(L, [0, 1], [1, 2])
    # Q block: B in the top-right corner block, i.e. block row 1, block column 0
    assert all(C[2 + i, j] == L.B[i, j] for i in range(2) for j in range(2))
    assert all(C[4 + i, j] == 0 for i in range(2) for j in range(2))
    with pytest.raises(ValueError):
        build_coupled(L, [1, 1], [1, 1])


def test_reversal():
    L = realize_kcf(parse("2x2: J(inf;2)"))
    assert reversal(reversal(L)) == L
    assert extract_weyr(reversal(L), 0) == Partition([1, 1])
    assert extract_weyr(L, INF) == Partition([1, 1])
    assert weyr_nullity_prefix(L, INF, 2) == 2


def test_extract_weyr_examples():
    L = parse("3x3: J(2;2) J(3;1)")
    P = realize_kcf(L)
    assert extract_weyr(P, 2, 3) == Partition([1, 1])
    Lk, limit = witness_sequence(L, [G(3), G(2)], G(2), 10)
    assert extract_weyr(Lk, G(2) + G(Fraction(1, 10))) == Partition([1])
    assert extract_weyr(limit, 2) == Partition([1, 1, 1])


def test_extract_weyr_singular_pencil():
    s = parse("5x6: J(0;2,1) R(1) R(0) LT(0)")
    L = scramble(realize_kcf(s), 11)
    assert extract_weyr(L, 0) == Partition([2, 1])
    assert extract_weyr(L, 1) == Partition()


def test_extract_weyr_rejects_symbolic():
    from pencilstrat import Symbolic
    with pytest.raises(TypeError):
        extract_weyr(realize_kcf(parse("1x1: J(0;1)")), Symbolic("a"))


def test_explicit_pencil_shape_check():
    with pytest.raises(ValueError):
        ExplicitPencil(ExactMatrix.zeros(2, 2), ExactMatrix.zeros(2, 3))
    assert right_block(0).A.shape == (0, 1)


def test_fallback_when_extension_missing():
    code = (
        "import sys\n"
        "class Block:\n"
        "    def find_spec(self, name, path=None, target=None):\n"
        "        if name == 'pencilstrat.exact._kernel':\n"
        "            raise ImportError('blocked')\n"
        "sys.meta_path.insert(0, Block())\n"
        "from pencilstrat.exact import BACKEND, available_backends\n"
        "from pencilstrat import parse\n"
        "from pencilstrat.realize import realize_kcf, scramble\n"
        "from pencilstrat.exact import extract_weyr\n"
        "L = scramble(realize_kcf(parse('3x4: J(1;2,1) R(0)')), 3)\n"
        "print(BACKEND, available_backends(), extract_weyr(L, 1))\n"
    )
    env = {k: v for k, v in os.environ.items() if k != "PENCILSTRAT_BACKEND"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "('python',)", "(2,1)"]
