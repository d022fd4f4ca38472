"""
Γ̃ 除子的支撑点

记录最终曲面上 B̃ 与例外曲线的交点，以及两条例外曲线的交点（结点）。
"""
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class GammaPoint:
    """一个支撑点

    Attributes:
        on: 经过该点的例外曲线下标（1 或 2 个，升序）
        meets_btilde: B̃ 是否经过该点
        mult: B̃ 与 on 中各曲线在该点的相交重数，与 on 对齐
        conj_deg: 共轭点簇的大小（不可约因子的次数）
    """
    on: Tuple[int, ...]
    meets_btilde: bool
    mult: Tuple[int, ...]
    conj_deg: int = 1

    def __post_init__(self):
        if len(tuple(self.on)) != len(tuple(self.mult)):
            raise ValueError("on 与 mult 长度不一致")
        pairs = sorted(zip((int(i) for i in self.on), (int(m) for m in self.mult)))
        object.__setattr__(self, "on", tuple(p[0] for p in pairs))
        object.__setattr__(self, "mult", tuple(p[1] for p in pairs))

    @property
    def is_node(self) -> bool:
        return len(self.on) == 2

    def mult_on(self, i: int) -> int:
        """该点对 Γ̃_i 的贡献重数"""
        return self.mult[self.on.index(i)] if i in self.on else 0

    def relabel(self, perm: Dict[int, int]) -> "GammaPoint":
        return GammaPoint(tuple(perm[i] for i in self.on), self.meets_btilde, self.mult, self.conj_deg)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "on": list(self.on),
            "meets_btilde": self.meets_btilde,
            "mult": list(self.mult),
            "conj_deg": self.conj_deg,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GammaPoint":
        on = [int(i) for i in data["on"]]
        mult = data.get("mult", [0] * len(on))
        if isinstance(mult, int):
            mult = [mult] * len(on)
        return cls(
            on=tuple(on),
            meets_btilde=bool(data.get("meets_btilde", True)),
            mult=tuple(int(m) for m in mult),
            conj_deg=int(data.get("conj_deg", 1)),
        )


@dataclass(frozen=True)
class GammaData:
    """全部支撑点"""
    points: Tuple[GammaPoint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    def on_curve(self, i: int) -> List[GammaPoint]:
        return [p for p in self.points if i in p.on]

    def degree_on(self, i: int) -> int:
        """Σ mult·conj_deg，应等于 γ̃_i"""
        return sum(p.mult_on(i) * p.conj_deg for p in self.on_curve(i))

    def relabel(self, perm: Dict[int, int]) -> "GammaData":
        return GammaData(tuple(p.relabel(perm) for p in self.points))

    def to_list(self) -> List[Dict[str, Any]]:
        return [p.to_dict() for p in self.points]

    @classmethod
    def from_list(cls, items: Optional[Iterable[Dict[str, Any]]]) -> Optional["GammaData"]:
        if items is None:
            return None
        return cls(tuple(GammaPoint.from_dict(item) for item in items))


def simple_points(counts: Sequence[int]) -> GammaData:
    """每条曲线上放 counts[i] 个与 B̃ 横截的简单点"""
    points = []
    for index, count in enumerate(counts, start=1):
        points.extend(GammaPoint((index,), True, (1,)) for _ in range(count))
    return GammaData(tuple(points))


__all__ = ["GammaPoint", "GammaData", "simple_points"]
