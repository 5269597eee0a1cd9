"""Reference modules shipped as workspace files (``phin fixtures``)."""
from typing import Dict

from src.cli.workspace import Workspace
from src.deform.family import FirstOrderFamily
from src.linalg.subspace import Flag
from src.modules.phin_module import FilteredPhiNModule


def d_ell(ell=3, p=2) -> Workspace:
    """
    D_l = Ee + Ef with phi(e) = e/p, phi(f) = f, N(f) = e,
    Fil^{-1} = D and Fil^0 = E(f + l e).
    """
    module = FilteredPhiNModule.build(p, [['1/%d' % p, 0], [0, 1]], [[0, 1], [0, 0]],
                                      [(-1, [[1, 0], [0, 1]]), (0, [[ell, 1]])])
    family = FirstOrderFamily.from_eps([0, -ell], [0, 1])
    return Workspace(module, {'F': Flag.from_vectors([[1, 0], [0, 1]])}, {'ok': family})


def fixture_a(ell=5, p=2) -> Workspace:
    """
    D = Ef1 + Ef2 + Ef3, phi = diag(1/p, 1, 1), N(f2) = -f1, N(f3) = f1,
    Fil^0 = E(f2 - l f1) + E(f3 + l f1); refinement (f1, f3, f2).
    """
    module = FilteredPhiNModule.build(p, [['1/%d' % p, 0, 0], [0, 1, 0], [0, 0, 1]],
                                      [[0, -1, 1], [0, 0, 0], [0, 0, 0]],
                                      [(-1, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
                                       (0, [[-ell, 1, 0], [ell, 0, 1]])])
    return Workspace(module, {'F': Flag.from_vectors([[1, 0, 0], [0, 0, 1], [0, 1, 0]])})


def fixture_a_modified(ell=5, p=2) -> Workspace:
    """Fixture A with Fil^0 = E(f2 - l f1) + E f1, which gives ks (0, -1, 0)."""
    workspace = fixture_a(ell, p)
    module = workspace.module
    modified = FilteredPhiNModule.build(p, module.phi.rows, module.monodromy.rows,
                                        [(-1, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
                                         (0, [[-ell, 1, 0], [1, 0, 0]])])
    return Workspace(modified, dict(workspace.refinements))


def fixture_c() -> Workspace:
    """
    Maximal monodromy over p = 2: phi = diag(1, 2, 4), N(e3) = e2, N(e2) = e1,
    Fil^1 = span(f2, f3), Fil^2 = span(f3) with f2 = e2 + 7 e1 and
    f3 = e3 - 2 e2 + 4 e1.
    """
    f2, f3 = [7, 1, 0], [4, -2, 1]
    module = FilteredPhiNModule.build(2, [[1, 0, 0], [0, 2, 0], [0, 0, 4]], [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
                                      [(0, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]), (1, [f2, f3]), (2, [f3])])
    families = {
        'ok': FirstOrderFamily.from_eps([0, -7, -5], [0, 1, 2]),
        'perturbed': FirstOrderFamily.from_eps([0, -7, -3], [0, 1, 2]),
    }
    return Workspace(module, {'F': Flag.from_vectors([[1, 0, 0], [0, 1, 0], [0, 0, 1]])}, families)


def fixture_workspaces() -> Dict[str, Workspace]:
    """File stem -> workspace."""
    return {
        'd_ell': d_ell(),
        'fixture_a': fixture_a(),
        'fixture_a_modified': fixture_a_modified(),
        'fixture_c': fixture_c(),
    }
