"""
SQL queries for the benchmark history.
"""

CREATE_RUNS = """
    CREATE TABLE IF NOT EXISTS bench_runs (
        id INTEGER PRIMARY KEY AUTOINCREMENT,
        shape TEXT,
        content TEXT,
        kostka INTEGER,
        trials INTEGER,
        seed INTEGER,
        threads INTEGER,
        dbasis_ms REAL,
        closed_median_ms REAL,
        classical_median_ms REAL,
        median_steps REAL,
        agreements INTEGER,
        recorded_at TEXT
    )
"""

CREATE_TRIALS = """
    CREATE TABLE IF NOT EXISTS bench_trials (
        run_id INTEGER,
        trial INTEGER,
        filling TEXT,
        closed_ms REAL,
        classical_ms REAL,
        steps INTEGER,
        agree INTEGER,
        PRIMARY KEY (run_id, trial),
        FOREIGN KEY (run_id) REFERENCES bench_runs(id)
    )
"""

INSERT_RUN = """
    INSERT INTO bench_runs
    (shape, content, kostka, trials, seed, threads, dbasis_ms,
     closed_median_ms, classical_median_ms, median_steps, agreements, recorded_at)
    VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
"""

INSERT_TRIAL = """
    INSERT OR REPLACE INTO bench_trials
    (run_id, trial, filling, closed_ms, classical_ms, steps, agree)
    VALUES (?, ?, ?, ?, ?, ?, ?)
"""

RUNS_ALL = """
    SELECT id, shape, content, kostka, trials, closed_median_ms,
           classical_median_ms, median_steps, recorded_at
    FROM bench_runs
    ORDER BY id
"""

RUNS_FOR_SHAPE = """
    SELECT id, shape, content, kostka, trials, closed_median_ms,
           classical_median_ms, median_steps, recorded_at
    FROM bench_runs
    WHERE shape = ?
    ORDER BY id
"""

TRIALS_FOR_RUN = """
    SELECT trial, closed_ms, classical_ms, steps, agree
    FROM bench_trials
    WHERE run_id = ?
    ORDER BY trial
"""

LATEST_RUN_ID = """
    SELECT MAX(id) FROM bench_runs
"""
