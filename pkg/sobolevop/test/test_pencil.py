import numpy as np
import numpy.testing as npt
import pytest


def test_banded_matrix():

    from sobolevop.pencil import BandedMatrix

    a = np.array([[1, 2, 0, 0],
                  [3, 4, 5, 0],
                  [6, 7, 8, 9],
                  [0, 1j, 2, 3]])
    b = BandedMatrix.from_dense(a, 2, 1)
    assert b.shape == (4, 4)
    assert (b.lower, b.upper) == (2, 1)
    npt.assert_array_equal(b.to_dense(), a)

    x = np.array([1, -1, 2, 0.5j])
    npt.assert_allclose(b.dot(x), a @ x)
    npt.assert_array_equal(b.abs().to_dense(), np.abs(a))

    with pytest.raises(ValueError):
        BandedMatrix.from_dense(a, 1, 1)
    with pytest.raises(ValueError):
        BandedMatrix(np.zeros((2, 4)), 1, 1)


def test_banded_matrix_from_entries():

    from sobolevop.pencil import BandedMatrix

    b = BandedMatrix.from_entries(3, 1, 0, [(0, 0, 1.), (1, 0, 2.),
                                            (1, 0, 1.), (3, 2, 5.),
                                            (0, -1, 7.)])
    npt.assert_array_equal(b.to_dense(), [[1, 0, 0], [3, 0, 0], [0, 0, 0]])

    with pytest.raises(ValueError, match='outside of band'):
        BandedMatrix.from_entries(3, 1, 0, [(0, 1, 1.)])


def test_banded_pencil_interior_rows():

    from sobolevop.systems import HermiteSystem, MonomialSystem

    assert list(MonomialSystem().recurrence_pencil(5).interior_rows) \
        == [1, 2, 3, 4]
    assert list(HermiteSystem().recurrence_pencil(5).interior_rows) \
        == [0, 1, 2, 3]


def test_monomial_pencil():

    from sobolevop.pencil import pencil_residual
    from sobolevop.systems import MonomialSystem

    base = MonomialSystem()
    assert pencil_residual(base.recurrence_pencil(10), base.polys(9),
                           0.5) <= 1e-13


def test_laplace_pencil():

    from sobolevop.families import laplace_family
    from sobolevop.pencil import laplace_recurrence_pencil, pencil_residual

    polys = [laplace_family(-1.0, n) for n in range(15)]
    z = [0.3, -1.2, 2j]
    assert pencil_residual(laplace_recurrence_pencil(-1.0, 15), polys, z) \
        <= 1e-9


@pytest.mark.parametrize('system', ['monomials', 'hermite'])
def test_genfun_pencil(system):

    from sobolevop.families import GeneratingSpec, genfun_family
    from sobolevop.pencil import genfun_recurrence_pencil, pencil_residual
    from sobolevop.systems import GeneratingSystem

    base = GeneratingSystem.from_name(system)
    spec = GeneratingSpec([2, 1], base)
    polys = [genfun_family(spec, n) for n in range(12)]
    pencil = genfun_recurrence_pencil([2, 1], base, 12)
    z = [0.4, -0.9 + 0.3j, 1.7]
    assert pencil_residual(pencil, polys, z) <= 1e-9


def test_genfun_pencil_entries():

    from sobolevop.pencil import genfun_recurrence_pencil
    from sobolevop.systems import MonomialSystem

    # row n of L holds (n+1) c_k/(n+1-k)! at column n+1-k
    pencil = genfun_recurrence_pencil([2, 1], MonomialSystem(), 6)
    L, M = pencil.L.to_dense(), pencil.M.to_dense()
    npt.assert_allclose(L[3], [0, 0, 0, 2/3, 1/3, 0])
    npt.assert_allclose(M[3], [0, 0, 1/2, 1/3, 0, 0])
    npt.assert_allclose(L[0], [1, 2, 0, 0, 0, 0])
    npt.assert_allclose(M[0], [2, 0, 0, 0, 0, 0])


def test_pencil_residual_detects_wrong_family():

    from sobolevop.families import laplace_family
    from sobolevop.pencil import laplace_recurrence_pencil, pencil_residual

    polys = [laplace_family(-2.0, n) for n in range(8)]
    assert pencil_residual(laplace_recurrence_pencil(-1.0, 8), polys,
                           0.7) > 1e-3


def test_pencil_residual_truncation():

    from sobolevop.pencil import pencil_residual
    from sobolevop.systems import MonomialSystem
    from sobolevop.errors import TruncationError

    base = MonomialSystem()
    with pytest.raises(TruncationError):
        pencil_residual(base.recurrence_pencil(10), base.polys(5), 0.5)


def test_diff_pencil():

    from sobolevop.diffop import LinearDiffOp
    from sobolevop.pencil import DiffPencil
    from sobolevop.polycore import CPoly

    # z d z^n = n z^n
    dp = DiffPencil(LinearDiffOp([0, [0, 1]]), LinearDiffOp.identity(),
                    lambda n: n)
    for n in range(8):
        assert dp.residual(CPoly.monomial(n), n) == 0
    assert dp.residual(CPoly.monomial(3), 2) > 0.1


def test_diff_pencil_residual_hermite():

    from sobolevop.diffop import LinearDiffOp
    from sobolevop.families import hermite
    from sobolevop.pencil import DiffPencil, diff_pencil_residual

    # H'' - 2t H' = -2n H
    dp = DiffPencil(LinearDiffOp([0, [0, -2], 1]), LinearDiffOp.identity(),
                    lambda n: -2*n)
    for n in range(12):
        assert diff_pencil_residual(dp, hermite(n), n) <= 1e-14
    assert diff_pencil_residual(dp, hermite(5), 4) > 0.1


def test_pencil_from_recurrence():

    from sobolevop.catalogue import LaplaceFamily
    from sobolevop.pencil import pencil_from_recurrence

    pencil = pencil_from_recurrence('laplace', 6, alpha=-0.5)
    assert pencil.size == 6
    expected = LaplaceFamily(-0.5).recurrence_pencil(6)
    npt.assert_array_equal(pencil.L.to_dense(), expected.L.to_dense())
    npt.assert_array_equal(pencil.M.to_dense(), expected.M.to_dense())

    with pytest.raises(ValueError, match='unknown family'):
        pencil_from_recurrence('jacobi', 6)
