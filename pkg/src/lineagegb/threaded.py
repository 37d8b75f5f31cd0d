"""Threaded Buchberger driver with lineage bookkeeping.

Shared state during a run is a lineage table (write-once per key while the
run lasts) and a FIFO task queue. Every worker runs the same loop: pull a
task, form the S-polynomial of its two captured parent polynomials, reduce
it against a snapshot of the current non-null table values taken under the
table lock, and insert a nonzero remainder under the pair of the parents'
lineages. Each insertion fans out new tasks pairing the remainder with every
element of that snapshot plus any element that landed between snapshot and
insertion, so every unordered pair of final elements gets scheduled exactly
once. A nonzero constant remainder proves the ideal is the whole ring: a
stop flag is raised, remaining tasks drain unprocessed, and the run reports
unit_found.

With ``deterministic=True`` a single worker processes tasks in queue order
(initial pairs lexicographic, fan-out in creation order against snapshot
elements in canonical key order), which reproduces runs byte for byte.
"""

from __future__ import annotations

import queue
import sys
import threading
from dataclasses import dataclass, field
from enum import Enum

from .buchberger import interreduce as _interreduce
from .buchberger import minimalize as _minimalize
from .errors import RingMismatchError
from .lineage import lineage_sort_key, lineage_to_string, task_key
from .poly import Poly, Ring
from .reduction import reduce_full, s_polynomial


class RunState(Enum):
    COMPLETED = "completed"
    UNIT_FOUND = "unit_found"


@dataclass(frozen=True)
class RunStatus:
    state: RunState
    thread_count: int


@dataclass(frozen=True)
class Task:
    """An S-pair reduction job; parent polynomial values are captured at
    creation time, so later table growth cannot change the S-polynomial."""

    key: str
    left: Poly
    right: Poly
    left_lineage: object
    right_lineage: object

    @classmethod
    def for_pair(cls, left_lineage, left, right_lineage, right) -> "Task":
        return cls(task_key(left_lineage, right_lineage), left, right, left_lineage, right_lineage)


@dataclass(frozen=True)
class InsertionRecord:
    """Journal entry: which S-pair produced a table value and against which
    snapshot it was reduced. Table values are write-once during a run, so a
    record can be replayed from the final table."""

    key: object
    left_lineage: object
    right_lineage: object
    snapshot_keys: tuple


@dataclass
class LineageTable:
    """Map from lineage keys to polynomials, or None for removed entries."""

    ring: Ring
    entries: dict = field(default_factory=dict)

    def canonical_keys(self) -> list:
        return sorted(self.entries, key=lineage_sort_key)

    def __getitem__(self, key):
        return self.entries[key]

    def __contains__(self, key) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)


class _Run:
    def __init__(self, ring, table, stream, journal):
        self.ring = ring
        self.table = table
        self.tasks: queue.Queue = queue.Queue()
        self.lock = threading.Lock()
        self.emit_lock = threading.Lock()
        self.stop = threading.Event()
        self.history: list = []  # pair keys in insertion order
        self.stream = stream
        self.journal = journal
        self.errors: list = []

    def emit(self, line: str) -> None:
        if self.stream is None:
            return
        with self.emit_lock:
            self.stream.write(line + "\n")

    def snapshot(self):
        with self.lock:
            items = [(k, v) for k, v in self.table.items() if v is not None]
            version = len(self.history)
        items.sort(key=lambda kv: lineage_sort_key(kv[0]))
        return items, version

    def insert(self, key, remainder, snapshot_keys, version):
        """Store a remainder; returns (extras, first_unit, stopped_before)."""
        is_unit = remainder.is_constant()
        with self.lock:
            stopped_before = self.stop.is_set()
            self.table[key] = remainder
            extras = list(self.history[version:])
            self.history.append(key)
            if self.journal is not None:
                self.journal.append(
                    InsertionRecord(key, key[0], key[1], tuple(snapshot_keys))
                )
            first_unit = is_unit and not stopped_before
            if is_unit:
                self.stop.set()
        return extras, first_unit, stopped_before


def _process_task(run: _Run, task: Task) -> None:
    spoly = s_polynomial(task.left, task.right)
    if spoly.is_zero():
        return
    snapshot, version = run.snapshot()
    remainder = reduce_full(spoly, [p for _, p in snapshot]).remainder
    if remainder.is_zero():
        return

    key = (task.left_lineage, task.right_lineage)
    extras, first_unit, stopped_before = run.insert(
        key, remainder, [k for k, _ in snapshot], version
    )

    from .formatting import render_poly

    run.emit(
        f"Adding the following remainder to GB: {render_poly(remainder)}"
        f" from lineage {lineage_to_string(key)}"
    )
    if remainder.is_constant():
        if first_unit:
            run.emit("Found a unit in the Groebner basis; reducing now.")
        return
    if stopped_before or run.stop.is_set():
        return  # unit found elsewhere: create no further tasks

    with run.lock:
        extra_items = [(k, run.table[k]) for k in extras]
    for g_lineage, g_poly in snapshot + extra_items:
        run.emit(
            f"Scheduling a task for lineage {lineage_to_string((key, g_lineage))}"
        )
        run.tasks.put(Task.for_pair(key, remainder, g_lineage, g_poly))


def _run_serial(run: _Run) -> None:
    while True:
        try:
            task = run.tasks.get_nowait()
        except queue.Empty:
            break
        if not run.stop.is_set():
            _process_task(run, task)


def _run_threaded(run: _Run, workers: int) -> None:
    def worker():
        while True:
            task = run.tasks.get()
            try:
                if task is None:
                    return
                if not run.stop.is_set():
                    _process_task(run, task)
            except BaseException as exc:  # surfaced after the join below
                run.errors.append(exc)
                run.stop.set()
            finally:
                run.tasks.task_done()

    threads = [threading.Thread(target=worker, name=f"gb-worker-{i}") for i in range(workers)]
    for t in threads:
        t.start()
    run.tasks.join()
    for _ in threads:
        run.tasks.put(None)
    for t in threads:
        t.join()
    if run.errors:
        raise run.errors[0]


def tgb(gens, threads: int = 1, deterministic: bool = False, verbose: bool = False,
        *, stream=None, journal=None):
    """Compute a Groebner basis with lineage tracking.

    Returns ``(LineageTable, RunStatus)``. The table holds the input
    generators under leaf keys 0..k (zero generators map to None) and every
    nonzero S-pair remainder under the pair of its parents' lineages. When a
    nonzero constant remainder appears the run stops early with state
    unit_found and pending tasks are abandoned.

    ``deterministic`` forces a single worker so runs are reproducible;
    ``verbose`` writes trace lines to ``stream`` (default stdout); a list
    passed as ``journal`` collects an InsertionRecord per new element.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("tgb requires at least one generator")
    if threads < 1:
        raise ValueError("thread count must be a positive integer")
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring != ring:
            raise RingMismatchError("generators live in different rings")

    table = {i: (g if not g.is_zero() else None) for i, g in enumerate(gens)}
    out_stream = (stream if stream is not None else sys.stdout) if verbose else None
    run = _Run(ring, table, out_stream, journal)

    live = [(i, g) for i, g in enumerate(gens) if not g.is_zero()]
    for a in range(len(live)):
        for b in range(a + 1, len(live)):
            (i, gi), (j, gj) = live[a], live[b]
            run.emit(f"Scheduling a task for lineage {lineage_to_string((i, j))}")
            run.tasks.put(Task.for_pair(i, gi, j, gj))

    workers = 1 if deterministic else threads
    if workers == 1:
        _run_serial(run)
    else:
        _run_threaded(run, workers)

    state = RunState.UNIT_FOUND if run.stop.is_set() else RunState.COMPLETED
    return LineageTable(ring, run.table), RunStatus(state, workers)


def minimalize_table(table: LineageTable) -> LineageTable:
    """Null redundant entries over the canonical key order; survivors monic."""
    keys = table.canonical_keys()
    live = [(k, table.entries[k]) for k in keys if table.entries[k] is not None]
    minimal = _minimalize([v for _, v in live])
    entries = {k: None for k in keys}
    for (k, _), v in zip(live, minimal):
        entries[k] = v
    return LineageTable(table.ring, entries)


def reduce_table(table: LineageTable) -> LineageTable:
    """Minimalize, then interreduce survivors: the reduced Groebner basis,
    keyed as in the input table."""
    keys = table.canonical_keys()
    live = [(k, table.entries[k]) for k in keys if table.entries[k] is not None]
    reduced = _interreduce([v for _, v in live])
    entries = {k: None for k in keys}
    for (k, _), v in zip(live, reduced):
        entries[k] = v
    return LineageTable(table.ring, entries)


def table_to_matrix(table: LineageTable) -> list:
    """All non-null values in canonical key order."""
    return [table.entries[k] for k in table.canonical_keys() if table.entries[k] is not None]
