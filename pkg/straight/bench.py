"""
Closed formula vs classical rewriting benchmark.

Draws seeded random cardinal fillings of one shape and content, straightens
each with both methods, and reports median times, rewrite steps and whether
the methods agreed. Runs can be recorded in a sqlite history for charting.
"""

import csv
import random
import sqlite3
import statistics
import time
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from . import config, queries
from .config import BENCH_DB, DEFAULT_REWRITE_CAP, STATE_DIR
from .enumeration import check_shape_content, enumerate_ssyt
from .errors import ValidationError
from .rearrangement import rcoeff_matrix
from .straightening import build_dbasis, straighten_classical, straighten_closed
from .tableau import Content, Filling, Partition, format_filling
from .utils import log

MAX_DRAWS = 10_000


@dataclass
class BenchTrial:
    """One filling straightened both ways."""
    trial: int
    filling: Filling
    closed_ms: float
    classical_ms: float
    steps: int
    agree: bool


@dataclass
class BenchRun:
    """Summary of a benchmark over one (shape, content)."""
    shape: Partition
    content: Content
    kostka: int
    seed: int
    threads: int
    dbasis_ms: float
    trials: List[BenchTrial] = field(default_factory=list)

    @property
    def agreements(self) -> int:
        return sum(1 for t in self.trials if t.agree)

    @property
    def closed_median_ms(self) -> Optional[float]:
        return statistics.median(t.closed_ms for t in self.trials) if self.trials else None

    @property
    def classical_median_ms(self) -> Optional[float]:
        return statistics.median(t.classical_ms for t in self.trials) if self.trials else None

    @property
    def median_steps(self) -> Optional[float]:
        return statistics.median(t.steps for t in self.trials) if self.trials else None

    @property
    def ratio(self) -> Optional[float]:
        closed, classical = self.closed_median_ms, self.classical_median_ms
        if not closed or classical is None:
            return None
        return classical / closed


def random_cardinal_filling(shape: Partition, content: Content, rng: random.Random) -> Filling:
    """Shuffle the content into the diagram until no column repeats a value."""
    values = list(content.multiset())
    for _ in range(MAX_DRAWS):
        rng.shuffle(values)
        rows, start = [], 0
        for width in shape.parts:
            rows.append(values[start:start + width])
            start += width
        filling = Filling.from_rows(rows, content.n)
        if filling.is_cardinal:
            return filling
    raise ValidationError(f"No cardinal filling drawn for shape {shape}, content {content}")


def run_bench(shape: Partition, content: Content, trials: int,
              seed: int = config.DEFAULT_SEED,
              rewrite_cap: int = DEFAULT_REWRITE_CAP,
              threads: Optional[int] = None) -> BenchRun:
    """Benchmark both methods on ``trials`` fillings drawn from ``seed``."""
    check_shape_content(shape, content)
    threads = threads or config.THREADS

    start = time.perf_counter()
    basis = enumerate_ssyt(shape, content)
    if trials and not len(basis):
        raise ValidationError(f"Shape {shape} with content {content} has no cardinal fillings")
    matrix = rcoeff_matrix(basis, threads)
    dbasis = build_dbasis(basis, matrix)
    dbasis_ms = (time.perf_counter() - start) * 1000
    log(f"D-basis for {shape} / {content}: K={len(basis)} in {dbasis_ms:.1f} ms")

    run = BenchRun(shape, content, len(basis), seed, threads, dbasis_ms)
    rng = random.Random(seed)
    for i in range(1, trials + 1):
        filling = random_cardinal_filling(shape, content, rng)

        start = time.perf_counter()
        closed = straighten_closed(filling, basis, dbasis)
        closed_ms = (time.perf_counter() - start) * 1000

        start = time.perf_counter()
        classical = straighten_classical(filling, basis, rewrite_cap)
        classical_ms = (time.perf_counter() - start) * 1000

        agree = closed.coefficients == classical.coefficients
        run.trials.append(BenchTrial(i, filling, closed_ms, classical_ms, classical.steps, agree))
        if not agree:
            log(f"[{i}/{trials}] methods disagree on\n{format_filling(filling)}")
        elif i % 10 == 0 or i == trials:
            log(f"[{i}/{trials}] closed {closed_ms:.2f} ms, classical {classical_ms:.2f} ms")
    return run


def format_table(run: BenchRun) -> str:
    """Plain-text report: one line per trial plus the summary."""
    lines = [f"{'trial':>5}  {'closed_ms':>10}  {'classical_ms':>12}  {'steps':>6}  agree"]
    for t in run.trials:
        lines.append(
            f"{t.trial:>5}  {t.closed_ms:>10.3f}  {t.classical_ms:>12.3f}  {t.steps:>6}  "
            f"{'yes' if t.agree else 'NO'}"
        )
    lines.append("-" * 50)
    lines.append(f"shape {run.shape}  content {run.content}  K={run.kostka}  seed={run.seed}")
    lines.append(f"D-basis build: {run.dbasis_ms:.3f} ms")
    if run.trials:
        lines.append(f"median closed: {run.closed_median_ms:.3f} ms")
        lines.append(f"median classical: {run.classical_median_ms:.3f} ms")
        lines.append(f"median rewrite steps: {run.median_steps:g}")
        if run.ratio is not None:
            lines.append(f"classical/closed: {run.ratio:.2f}x")
    lines.append(f"agreement: {run.agreements}/{len(run.trials)}")
    return "\n".join(lines)


# ============================================================================
# History
# ============================================================================

def init_db(db_path: Path = BENCH_DB):
    """Create the history tables if needed."""
    db_path.parent.mkdir(parents=True, exist_ok=True)
    conn = sqlite3.connect(db_path)
    c = conn.cursor()
    c.execute(queries.CREATE_RUNS)
    c.execute(queries.CREATE_TRIALS)
    conn.commit()
    conn.close()


def save_run(run: BenchRun, db_path: Path = BENCH_DB) -> int:
    """Append a run and its trials; returns the run id."""
    init_db(db_path)
    conn = sqlite3.connect(db_path)
    c = conn.cursor()
    c.execute(queries.INSERT_RUN, (
        str(run.shape), str(run.content), run.kostka, len(run.trials), run.seed,
        run.threads, run.dbasis_ms, run.closed_median_ms, run.classical_median_ms,
        run.median_steps, run.agreements, datetime.now().isoformat(),
    ))
    run_id = c.lastrowid
    for t in run.trials:
        c.execute(queries.INSERT_TRIAL, (
            run_id, t.trial, format_filling(t.filling), t.closed_ms,
            t.classical_ms, t.steps, int(t.agree),
        ))
    conn.commit()
    conn.close()
    log(f"Saved run {run_id} to {db_path}")
    return run_id


def get_runs(shape: Optional[str] = None, db_path: Path = BENCH_DB) -> List[tuple]:
    """Run summaries, oldest first, optionally for one shape."""
    init_db(db_path)
    conn = sqlite3.connect(db_path)
    c = conn.cursor()
    if shape:
        c.execute(queries.RUNS_FOR_SHAPE, (shape,))
    else:
        c.execute(queries.RUNS_ALL)
    rows = c.fetchall()
    conn.close()
    return rows


def get_trials(run_id: Optional[int] = None, db_path: Path = BENCH_DB) -> List[tuple]:
    """Trials of one run, the latest when no id is given."""
    init_db(db_path)
    conn = sqlite3.connect(db_path)
    c = conn.cursor()
    if run_id is None:
        c.execute(queries.LATEST_RUN_ID)
        run_id = c.fetchone()[0]
    rows = []
    if run_id is not None:
        c.execute(queries.TRIALS_FOR_RUN, (run_id,))
        rows = c.fetchall()
    conn.close()
    return rows


def export_to_csv(output_path: Optional[Path] = None, db_path: Path = BENCH_DB) -> Path:
    """Export the run summaries to CSV."""
    if output_path is None:
        output_path = STATE_DIR / "bench_history.csv"
    init_db(db_path)

    conn = sqlite3.connect(db_path)
    c = conn.cursor()
    c.execute("SELECT * FROM bench_runs ORDER BY id")
    rows = c.fetchall()
    columns = [desc[0] for desc in c.description]
    conn.close()

    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, 'w', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(columns)
        writer.writerows(rows)

    log(f"Exported {len(rows)} runs to {output_path}")
    return output_path
