"""
测试共用的实例

JSON 文件放在仓库根目录的 fixtures/ 下，期望值与文件放在一起维护。
"""
from pathlib import Path
from typing import Dict

from core.canres import WeightedDigraph, derive_vectors, with_curves
from core.cycles import compute_cycles
from core.digraph_io import load_digraph
from core.lattice import matrices

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

FIXTURES = ("fx_a", "fx_b", "fx_c", "fx_d", "fx_e", "fx_f")


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / f"{name}.json"


def load(name: str) -> WeightedDigraph:
    """读取 fixtures/<name>.json"""
    return load_digraph(fixture_path(name))


EXPECTED: Dict[str, Dict] = {
    "fx_a": {
        "M": [[1, 1], [0, 1]],
        "S": [[-2, 1], [1, -1]],
        "mu": (3, 4),
        "epsilon": (1, 0),
        "alpha": (2, 4),
        "beta_tilde": (3, 6),
        "beta": (2, 6),
        "gamma_tilde": (0, 3),
        "gamma": (0, 4),
        "F": (2, 1),
        "Z": (1, 1),
        "witness": 2,
        "contracted": (1,),
        "defective": {1: 1},
        "c": 1,
        "fixed_canonical": (1, 0),
        "adjoint_multiplicities": (1, 0),
    },
    "fx_b": {
        "M": [[1, 1, 1, 2], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]],
        "S": [[-4, 1, 0, 1], [1, -1, 0, 0], [0, 0, -2, 1], [1, 0, 1, -1]],
        "mu": (7, 4, 3, 4),
        "epsilon": (1, 0, 1, 0),
        "alpha": (6, 4, 2, 4),
        "beta_tilde": (7, 10, 9, 18),
        "gamma_tilde": (0, 3, 0, 2),
        "gamma": (0, 4, 0, 4),
        "F": (2, 1, 2, 2),
        "Z": (1, 1, 1, 1),
        "witness": 2,
        "contracted": (3,),
        "bar_F": (2, 1, 2),
        "bar_Z": (1, 1, 1),
        "defective": {3: 1},
        "c": 5,
        "fixed_canonical": (0, 0, 1, 0),
    },
    "fx_c": {
        "mu": (3, 3, 3, 2, 2, 2, 2),
        "epsilon": (1, 1, 1, 0, 0, 0, 0),
        "alpha": (2, 2, 2, 2, 2, 2, 2),
        "gamma_tilde": (0, 0, 0, 1, 1, 0, 0),
        "gamma": (0, 0, 0, 2, 2, 2, 2),
        "F": (2, 2, 4, 1, 2, 3, 3),
        "Z": (2, 2, 4, 1, 2, 3, 3),
        "witness": None,
        "contracted": (),
        "defective": {},
        "c": 0,
        "rdp": "E7",
    },
    "fx_d": {
        "mu": (5, 2, 3, 4),
        "epsilon": (1, 0, 1, 0),
        "alpha": (4, 2, 2, 4),
        "gamma_tilde": (0, 1, 0, 2),
        "gamma": (0, 2, 0, 4),
        "F": (2, 1, 2, 2),
        "Z": (1, 1, 1, 1),
        "witness": 2,
        "contracted": (3,),
        "bar_F": (2, 1, 2),
        "bar_Z": (1, 1, 1),
        "defective": {3: 1},
        "c": 2,
        "fixed_canonical": (0, 0, 1, 0),
        "adjoint_multiplicities": (1, 0, 1, 0),
    },
    "fx_e": {
        "mu": (2,),
        "epsilon": (0,),
        "alpha": (2,),
        "gamma_tilde": (2,),
        "gamma": (2,),
        "F": (1,),
        "Z": (1,),
        "witness": None,
        "contracted": (),
        "defective": {},
        "c": 0,
    },
    "fx_f": {
        "mu": (3, 2, 2, 2),
        "epsilon": (1, 0, 0, 0),
        "alpha": (2, 2, 2, 2),
        "gamma_tilde": (0, 1, 1, 1),
        "gamma": (0, 2, 2, 2),
        "F": (2, 1, 1, 1),
        "Z": (2, 1, 1, 1),
        "witness": None,
        "contracted": (),
        "defective": {},
        "c": 0,
        "rdp": "D4",
    },
}


def stages(w: WeightedDigraph):
    """依次运行 canres 与 cycles，返回 (data, lattice, cycles)"""
    lattice = matrices(w.digraph)
    data = with_curves(w, derive_vectors(w), lattice)
    return data, lattice, compute_cycles(w, data, lattice)
