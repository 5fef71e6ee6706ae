"""Shared plumbing for the benchmark generators.

Generators build the system and formula as text, parse both, and keep the
text around so that files written to disk are exactly what was checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..formula import FormulaAst, parse_formula
from ..system import TransitionSystem, parse_system


@dataclass(frozen=True)
class Instance:
    name: str
    system_text: str
    formula_text: str
    system: TransitionSystem = field(repr=False, compare=False)
    formula: FormulaAst = field(repr=False, compare=False)

    @classmethod
    def from_text(cls, name: str, system_text: str, formula_text: str) -> "Instance":
        ts = parse_system(system_text)
        return cls(name, system_text, formula_text, ts, parse_formula(formula_text, ts.aps))

    def __iter__(self):
        yield self.system
        yield self.formula

    def write(self, out_dir) -> tuple[Path, Path]:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        sys_path = out / f"{self.name}.sys"
        fml_path = out / f"{self.name}.hy"
        sys_path.write_text(self.system_text)
        fml_path.write_text(self.formula_text)
        return sys_path, fml_path


def nexts(n: int, text: str) -> str:
    return "X " * n + text if n else text


def conj(parts) -> str:
    parts = list(parts)
    if not parts:
        return "true"
    return " & ".join(f"({p})" for p in parts) if len(parts) > 1 else parts[0]


def disj(parts) -> str:
    parts = list(parts)
    if not parts:
        return "false"
    return " | ".join(f"({p})" for p in parts) if len(parts) > 1 else parts[0]


def system_text(aps, initial, states) -> str:
    """``states`` is a list of (props, successors) in index order."""
    lines = [f"aps: {' '.join(aps)}", f"init: {' '.join(map(str, initial))}", "states:"]
    for i, (props, succ) in enumerate(states):
        label = " ".join(p for p in aps if p in props)
        lines.append(f"{i} {{{label}}} -> {' '.join(map(str, succ))}")
    return "\n".join(lines) + "\n"
