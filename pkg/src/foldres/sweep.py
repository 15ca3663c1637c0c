"""Sweep driver and table emission for figure regeneration.

A sweep evaluates qubits, interaction counts, two-qubit gates, and the
log2 feasible-set ratio across chain lengths for each model/encoding
combination, then aggregates per chain length (mean, population SD,
min, max).  Instance sets follow the documented conventions:

* coordinate models average over every canonical grid whose site count
  lies in ``[N, floor(slack*N)]``;
* side-chain models average over ``samples`` seeded draws with
  per-instance RNG streams derived from (seed, N, index), so output is
  identical no matter how instances are scheduled;
* turn models are deterministic, one instance per chain length
  (chain lengths below 4 are skipped; the model is undefined there).

Emission is byte-deterministic: fixed column order, shortest
round-trip float formatting, rows sorted by (model, encoding, N,
instance id, metric), a single line feed between rows.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .encodings import Encoding
from .errors import DomainError
from .feasibility import (
    coordinate_feasible_report,
    feasible_ratio_formula,
    turn_feasible_ratio,
)
from .instances import (
    CoordinateLattice,
    SideChain,
    enumerate_grids,
    instance_rng,
)
from .resources import estimate
from .turn_model import turn_estimate

SCHEMA_VERSION = 1
CSV_HEADER = "schema_version,model,encoding,g,N,instance_id,metric,mean,sd,min,max,samples"
MODELS = ("coord2d", "coord3d", "turn2d", "turn3d", "sidechain")
METRICS = ("qubits", "interactions", "two_qubit_gates", "log2_feasible_ratio")

_VECTOR_CONF_CAP = 1 << 16


@dataclass(frozen=True)
class SweepRow:
    model: str
    encoding: str
    g: int
    n: int
    instance_id: str
    metric: str
    mean: float
    sd: float
    vmin: float | int
    vmax: float | int
    samples: int


def _aggregate(
    model: str,
    encoding: Encoding,
    n: int,
    metric: str,
    values: Sequence[float | int],
    instance_id: str = "",
) -> SweepRow:
    count = len(values)
    mean = sum(values) / count
    sd = math.sqrt(sum((float(v) - mean) ** 2 for v in values) / count)
    return SweepRow(
        model=model,
        encoding=encoding.scheme,
        g=encoding.g,
        n=n,
        instance_id=instance_id,
        metric=metric,
        mean=float(mean),
        sd=sd,
        vmin=min(values),
        vmax=max(values),
        samples=count,
    )


def _coordinate_rows(
    model: str,
    dim: int,
    encoding: Encoding,
    n_values: Iterable[int],
    grid_slack: float,
) -> list[SweepRow]:
    rows = []
    for n in n_values:
        grids = enumerate_grids(n, dim, grid_slack)
        per_metric: dict[str, list] = {metric: [] for metric in METRICS}
        for grid in grids:
            est = estimate(CoordinateLattice(dim, grid, n), encoding)
            feas = coordinate_feasible_report(grid, n, encoding)
            per_metric["qubits"].append(est.qubits)
            per_metric["interactions"].append(est.total_interactions)
            per_metric["two_qubit_gates"].append(est.two_qubit_gates)
            per_metric["log2_feasible_ratio"].append(feas.log2_ratio)
        for metric in METRICS:
            rows.append(_aggregate(model, encoding, n, metric, per_metric[metric]))
    return rows


def _turn_rows(
    model: str,
    dim: int,
    encoding: Encoding,
    n_values: Iterable[int],
    c1_override: int | None,
) -> list[SweepRow]:
    rows = []
    for n in n_values:
        if n < 4:
            continue
        breakdown = turn_estimate(n, dim, encoding, c1_override)
        feas = turn_feasible_ratio(n, dim, encoding)
        values = {
            "qubits": breakdown.total_qubits,
            "interactions": breakdown.total_interactions,
            "two_qubit_gates": breakdown.two_qubit_gates,
            "log2_feasible_ratio": feas.log2_ratio,
        }
        for metric in METRICS:
            rows.append(_aggregate(model, encoding, n, metric, [values[metric]]))
    return rows


def _cumulative_order_tables(max_width: int) -> tuple[np.ndarray, np.ndarray]:
    """T[s] = number of order>=3 subsets of s qubits; G[s] = their
    ladder gate cost sum(2(m-1) * C(s, m))."""
    sizes = max_width + 1
    terms = np.zeros(sizes, dtype=np.int64)
    gates = np.zeros(sizes, dtype=np.int64)
    for s in range(sizes):
        t = 0
        gate = 0
        for m in range(3, s + 1):
            c = math.comb(s, m)
            t += c
            gate += c * 2 * (m - 1)
        terms[s] = t
        gates[s] = gate
    return terms, gates


def _sidechain_batch(
    conf_matrix: np.ndarray, encoding: Encoding
) -> dict[str, np.ndarray]:
    """Vectorized metrics for a (samples, n) matrix of conformation counts.

    Matches resources.estimate exactly; int64 intermediates are safe up
    to 16-bit code widths, which the conf-count cap guarantees.
    """
    n = conf_matrix.shape[1]
    log2c = np.log2(conf_matrix)
    if encoding.scheme == "unary":
        q = conf_matrix.sum(axis=1)
        pairs = q * (q - 1) // 2
        return {
            "qubits": q,
            "interactions": q + pairs,
            "two_qubit_gates": 2 * pairs,
            "log2_feasible_ratio": (log2c - conf_matrix).sum(axis=1),
        }
    if encoding.scheme == "binary":
        powers = np.left_shift(1, np.arange(17, dtype=np.int64))
        widths = np.searchsorted(powers, conf_matrix, side="left").astype(np.int64)
        max_w = int(widths.max(initial=0))
        terms_tbl, gates_tbl = _cumulative_order_tables(2 * max_w)
        q = widths.sum(axis=1)
        pairs = q * (q - 1) // 2
        counts = np.stack(
            [(widths == w).sum(axis=1) for w in range(max_w + 1)], axis=1
        ).astype(np.int64)
        higher = np.zeros(len(q), dtype=np.int64)
        higher_gates = np.zeros(len(q), dtype=np.int64)
        for a in range(max_w + 1):
            for b in range(a, max_w + 1):
                if a == b:
                    npairs = counts[:, a] * (counts[:, a] - 1) // 2
                else:
                    npairs = counts[:, a] * counts[:, b]
                higher += npairs * terms_tbl[a + b]
                higher_gates += npairs * gates_tbl[a + b]
        dup = (n - 2) * (counts @ terms_tbl[: max_w + 1])
        dup_gates = (n - 2) * (counts @ gates_tbl[: max_w + 1])
        return {
            "qubits": q,
            "interactions": q + pairs + higher - dup,
            "two_qubit_gates": 2 * pairs + higher_gates - dup_gates,
            "log2_feasible_ratio": (log2c - widths).sum(axis=1),
        }
    g, b = encoding.g, encoding.block_bits
    blocks = -(-conf_matrix // g)
    total_blocks = blocks.sum(axis=1)
    q = total_blocks * b
    pairs = q * (q - 1) // 2
    terms_tbl, gates_tbl = _cumulative_order_tables(2 * b)
    block_pairs = total_blocks * (total_blocks - 1) // 2
    dup_factor = total_blocks * (total_blocks - 2)
    higher = block_pairs * terms_tbl[2 * b] - dup_factor * terms_tbl[b]
    higher_gates = block_pairs * gates_tbl[2 * b] - dup_factor * gates_tbl[b]
    return {
        "qubits": q,
        "interactions": q + pairs + higher,
        "two_qubit_gates": 2 * pairs + higher_gates,
        "log2_feasible_ratio": log2c.sum(axis=1) - q,
    }


def _sidechain_rows(
    encoding: Encoding,
    n_values: Iterable[int],
    conf_min: int,
    conf_max: int,
    samples: int,
    seed: int,
    conf_cache: dict[int, np.ndarray],
) -> list[SweepRow]:
    if conf_max > _VECTOR_CONF_CAP:
        raise DomainError(
            f"conf-max above {_VECTOR_CONF_CAP} is not supported by the sweep"
        )
    rows = []
    for n in n_values:
        if n not in conf_cache:
            conf_cache[n] = np.stack(
                [
                    instance_rng(seed, n, index).integers(
                        conf_min, conf_max + 1, size=n
                    )
                    for index in range(samples)
                ]
            ).astype(np.int64)
        metrics = _sidechain_batch(conf_cache[n], encoding)
        for metric in METRICS:
            values = metrics[metric].tolist()
            rows.append(_aggregate("sidechain", encoding, n, metric, values))
    return rows


def run_sweep(
    models: Sequence[str],
    encodings: Sequence[Encoding],
    n_min: int = 3,
    n_max: int = 100,
    *,
    grid_slack: float = 1.5,
    conf_min: int = 2,
    conf_max: int = 100,
    samples: int = 2000,
    seed: int = 0,
    c1_override: int | None = None,
) -> list[SweepRow]:
    if n_min < 3 or n_min > n_max:
        raise DomainError(f"need 3 <= n_min <= n_max, got [{n_min}, {n_max}]")
    for model in models:
        if model not in MODELS:
            raise DomainError(f"unknown model {model!r}")
    n_values = range(n_min, n_max + 1)
    conf_cache: dict[int, np.ndarray] = {}
    rows: list[SweepRow] = []
    for model in models:
        for encoding in encodings:
            if model.startswith("coord"):
                dim = int(model[-2])
                rows.extend(
                    _coordinate_rows(model, dim, encoding, n_values, grid_slack)
                )
            elif model.startswith("turn"):
                dim = int(model[-2])
                rows.extend(
                    _turn_rows(model, dim, encoding, n_values, c1_override)
                )
            else:
                rows.extend(
                    _sidechain_rows(
                        encoding,
                        n_values,
                        conf_min,
                        conf_max,
                        samples,
                        seed,
                        conf_cache,
                    )
                )
    return sort_rows(rows)


def single_instance_rows(
    model: str,
    encoding: Encoding,
    n: int,
    instance_id: str,
    values: dict[str, float | int],
) -> list[SweepRow]:
    """Rows for one concrete instance (samples = 1, SD = 0)."""
    return [
        _aggregate(model, encoding, n, metric, [value], instance_id)
        for metric, value in values.items()
    ]


def sort_rows(rows: Iterable[SweepRow]) -> list[SweepRow]:
    return sorted(
        rows, key=lambda r: (r.model, r.encoding, r.g, r.n, r.instance_id, r.metric)
    )


def _format_number(value: float | int) -> str:
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return repr(float(value))


def _row_fields(row: SweepRow) -> list[str]:
    return [
        str(SCHEMA_VERSION),
        row.model,
        row.encoding,
        str(row.g),
        str(row.n),
        row.instance_id,
        row.metric,
        repr(float(row.mean)),
        repr(float(row.sd)),
        _format_number(row.vmin),
        _format_number(row.vmax),
        str(row.samples),
    ]


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    lines = [CSV_HEADER]
    lines.extend(",".join(_row_fields(row)) for row in rows)
    return "\n".join(lines) + "\n"


def rows_to_json(rows: Iterable[SweepRow]) -> str:
    payload = [
        {
            "schema_version": SCHEMA_VERSION,
            "model": row.model,
            "encoding": row.encoding,
            "g": row.g,
            "N": row.n,
            "instance_id": row.instance_id,
            "metric": row.metric,
            "mean": float(row.mean),
            "sd": float(row.sd),
            "min": row.vmin,
            "max": row.vmax,
            "samples": row.samples,
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def write_rows(rows: Sequence[SweepRow], path: str, fmt: str = "csv") -> None:
    text = rows_to_csv(rows) if fmt == "csv" else rows_to_json(rows)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
