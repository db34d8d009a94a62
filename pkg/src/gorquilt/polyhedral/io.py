"""Plain-text cone files and JSON certificate records."""

from __future__ import annotations

import json
from fractions import Fraction

from .cone import ConePresentation, GorensteinCertificate, LatticeDescription


def parse_cone(text: str) -> ConePresentation:
    """Read ``dim N`` followed by ``eq``, ``ineq``, ``lat-basis`` and ``lat-cong ... mod k`` lines."""
    n = None
    eqs, ineqs, basis, cong = [], [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        try:
            if key == "dim":
                n = int(rest[0])
                continue
            if n is None:
                raise ValueError("the first line must be 'dim N'")
            if key == "lat-cong":
                if len(rest) != n + 2 or rest[n] != "mod":
                    raise ValueError("expected 'lat-cong a1 ... aN mod k'")
                cong.append((tuple(int(v) for v in rest[:n]), int(rest[n + 1])))
                continue
            vec = tuple(int(v) for v in rest)
            if len(vec) != n:
                raise ValueError(f"expected {n} entries")
            {"eq": eqs, "ineq": ineqs, "lat-basis": basis}[key].append(vec)
        except KeyError:
            raise ValueError(f"line {lineno}: unknown keyword {key!r}") from None
        except (ValueError, IndexError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("missing 'dim N' header")
    if basis and cong:
        raise ValueError("give either lat-basis or lat-cong lines, not both")
    lattice = LatticeDescription(n, basis=tuple(basis) if basis else None, congruences=tuple(cong))
    return ConePresentation(n, tuple(eqs), tuple(ineqs), lattice)


def format_cone(c: ConePresentation) -> str:
    def row(v):
        return " ".join(str(x) for x in v)

    lines = [f"dim {c.ambient_dim}"]
    lines += [f"eq {row(e)}" for e in c.equations]
    lines += [f"ineq {row(a)}" for a in c.inequalities]
    if c.lattice.basis is not None:
        lines += [f"lat-basis {row(b)}" for b in c.lattice.basis]
    lines += [f"lat-cong {row(a)} mod {k}" for a, k in c.lattice.congruences]
    return "\n".join(lines) + "\n"


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else int(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def to_json(obj) -> str:
    """Deterministic JSON: sorted keys, fractions as strings."""
    if isinstance(obj, GorensteinCertificate):
        obj = obj.to_dict()
    return json.dumps(_jsonable(obj), sort_keys=True)
