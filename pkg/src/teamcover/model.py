"""Problem instances, solutions, and solver telemetry.

An instance is a set of experts (each with a skill set and an hourly cost),
a task (the skills we would like covered), and a scale coefficient ``lam``
that converts covered skills into the same units as cost.  The optimization
target throughout the package is the combined objective

    g(Q) = lam * |skills of Q covering the task| - sum of costs in Q.

Experts and skills use dense integer ids.  The task-relevant part of each
expert's skill set is precomputed as a bitmask so that marginal coverage
queries are a single AND/popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Expert:
    """One hireable expert: dense id, skill-id set, non-negative cost."""

    id: int
    skills: frozenset[int]
    cost: float


class Instance:
    """Immutable problem input shared by every solver.

    Parameters
    ----------
    experts : experts with dense ids 0..n-1 (in list order)
    num_skills : size of the skill universe (ids 0..num_skills-1)
    task : skill ids the task asks for
    lam : positive coverage-to-cost conversion coefficient
    """

    def __init__(self, experts: Sequence[Expert], num_skills: int,
                 task: Iterable[int], lam: float):
        self.experts = list(experts)
        self.num_skills = int(num_skills)
        self.task = frozenset(task)
        self.lam = float(lam)
        self.costs = [e.cost for e in self.experts]
        # Compact bit positions for task skills; off-task skills never matter.
        self._task_order = sorted(self.task)
        self._bit_of = {s: i for i, s in enumerate(self._task_order)}
        self.task_masks = [self._mask_of(e.skills) for e in self.experts]

    def _mask_of(self, skills: frozenset[int]) -> int:
        mask = 0
        for s in skills:
            bit = self._bit_of.get(s)
            if bit is not None:
                mask |= 1 << bit
        return mask

    @property
    def n(self) -> int:
        return len(self.experts)

    def skill_ids_of_mask(self, mask: int) -> set[int]:
        """Map a coverage bitmask back to original skill ids."""
        return {self._task_order[i] for i in range(len(self._task_order))
                if mask >> i & 1}

    def __repr__(self) -> str:
        return (f"Instance(n={self.n}, num_skills={self.num_skills}, "
                f"|task|={len(self.task)}, lam={self.lam})")


@dataclass
class Telemetry:
    """Per-run solver bookkeeping.

    ``oracle_evaluations`` counts marginal-gain queries; it is the unit used
    for cross-solver running-time comparisons.
    """

    solver_name: str
    oracle_evaluations: int = 0
    wall_time: float = 0.0


@dataclass
class Solution:
    """Result of one solver run.

    ``selected`` preserves insertion order.  ``coverage`` is the raw covered
    skill count; ``objective`` is ``lam * coverage - cost``.
    ``prefix_objectives[i]`` is the combined objective after the first
    ``i + 1`` insertions.
    """

    selected: list[int]
    objective: float
    coverage: int
    cost: float
    telemetry: Telemetry
    prefix_objectives: list[float] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.selected)


def empty_solution(solver_name: str, telemetry: Telemetry | None = None) -> Solution:
    tel = telemetry if telemetry is not None else Telemetry(solver_name)
    return Solution([], 0.0, 0, 0.0, tel, [])


def recompute_solution_values(inst: Instance, selected: Iterable[int]) -> tuple[float, int, float]:
    """From-scratch (objective, coverage, cost) of a selection. Test aid."""
    mask = 0
    cost = 0.0
    for e in selected:
        mask |= inst.task_masks[e]
        cost += inst.costs[e]
    coverage = mask.bit_count()
    return inst.lam * coverage - cost, coverage, cost


def validate_instance(inst: Instance) -> list[str]:
    """Collect every invariant violation; empty list means fully valid.

    Warnings (currently only the legal-but-odd empty task) are included with
    a ``"warning:"`` prefix.
    """
    problems: list[str] = []
    seen_ids: set[int] = set()
    for pos, e in enumerate(inst.experts):
        if e.id != pos:
            if e.id in seen_ids:
                problems.append(f"duplicate expert id {e.id}")
            else:
                problems.append(f"expert at position {pos} has id {e.id}; ids must be 0..n-1 in order")
        seen_ids.add(e.id)
        if e.cost < 0:
            problems.append(f"expert {pos}: negative cost")
        for s in sorted(e.skills):
            if not 0 <= s < inst.num_skills:
                problems.append(f"expert {pos}: skill {s} out of range (num_skills={inst.num_skills})")
    for s in sorted(inst.task):
        if not 0 <= s < inst.num_skills:
            problems.append(f"task: skill {s} out of range (num_skills={inst.num_skills})")
    if inst.lam <= 0:
        problems.append(f"lambda must be positive (got {inst.lam})")
    if not inst.task:
        problems.append("warning: task is empty")
    return problems
