"""End-to-end acceptance suite.

Each test covers one numbered acceptance criterion, prints a PASS/FAIL
line (run with ``pytest -s`` to see them on success), and asserts every
sub-check at its stated tolerance.

Two sub-checks are red by design and documented in README.md and the
test bodies: the binary-encoding interaction average at chain length 15
misses its reference anchor by 21.3% against a 20% tolerance (the
anchor corresponds to a two-grid instance set, not the documented
grid-enumeration convention), and the turn-model qubit-growth exponent
fitted over chain lengths 50..100 is 2.31 against the expected
quadratic window [1.8, 2.2] (the distance registers contribute an
extra logarithmic factor).
"""

import itertools
import math
import time

import numpy as np
import pytest

from foldres import (
    BINARY,
    UNARY,
    SideChain,
    aux_dist_qubits,
    aux_pair_qubits,
    bubinary,
    census_equals_estimate,
    encode_integer,
    estimate,
    feasible_ratio_exact,
    feasible_ratio_formula,
    qubit_count,
    turn_estimate,
    turn_feasible_ratio,
    two_qubit_gate_count,
)
from foldres.sweep import run_sweep, write_rows

GATE_ENCODINGS = [UNARY, BINARY, bubinary(1), bubinary(3), bubinary(4), bubinary(7)]

TABLE_C5 = {
    0: ("10000", "000", "0001"),
    1: ("01000", "001", "0010"),
    2: ("00100", "010", "0011"),
    3: ("00010", "011", "0100"),
    4: ("00001", "100", "1000"),
}

# reference anchors for the 15-residue square-lattice cross-check
ANCHOR_QUBITS = {"unary": 135.0, "binary": 52.5}
ANCHOR_INTERACTIONS = {"unary": 9292.5, "binary": 14550.0}


def _verdict(number: int, label: str, failures: list[str]) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"[{status}] criterion {number}: {label}")
    for failure in failures:
        print(f"    - {failure}")
    assert not failures, f"criterion {number} ({label}): " + "; ".join(failures)


def test_criterion_1_encoding_table_reproduction():
    failures = []
    encodings = (UNARY, BINARY, bubinary(3))
    # warm once, then time the actual reproduction
    for r, expected in TABLE_C5.items():
        for enc, bits in zip(encodings, expected):
            assert encode_integer(r, enc, 5).bits == bits
    start = time.perf_counter()
    for r, expected in TABLE_C5.items():
        for enc, bits in zip(encodings, expected):
            if encode_integer(r, enc, 5).bits != bits:
                failures.append(f"mismatch at value {r} under {enc}")
    elapsed = time.perf_counter() - start
    if elapsed >= 1e-3:
        failures.append(f"took {elapsed * 1e3:.3f} ms, budget 1 ms")
    print(f"    encoded 15 codewords in {elapsed * 1e6:.0f} us")
    _verdict(1, "encoding table reproduction at capacity 5", failures)


def test_criterion_2_oracle_gate():
    failures = []
    start = time.perf_counter()
    checked = skipped = 0
    for n in (2, 3):
        for confs in itertools.product(range(2, 10), repeat=n):
            for enc in GATE_ENCODINGS:
                if qubit_count(confs, enc) > 24:
                    skipped += 1
                    continue
                result = census_equals_estimate(confs, enc)
                checked += 1
                if not result.matches:
                    failures.append(
                        f"{confs} under {enc}: order {result.first_divergent_order} "
                        f"census {result.census_count} vs {result.estimate_count}"
                    )
    elapsed = time.perf_counter() - start
    print(f"    census == closed form for {checked} cases ({skipped} over cap), {elapsed:.1f}s")
    if elapsed >= 300:
        failures.append(f"took {elapsed:.0f}s, budget 300s")
    _verdict(2, "brute-force census equals closed-form counts", failures)


def test_criterion_3_duplicate_term_correction():
    failures = []
    est = estimate(SideChain((8, 8, 8)), BINARY)
    if est.correction_subtracted != 3:
        failures.append(f"(8,8,8) correction {est.correction_subtracted} != 3")
    if est.total_interactions != 168:
        failures.append(f"(8,8,8) total {est.total_interactions} != 168")
    oracle = census_equals_estimate((8, 8, 8), BINARY)
    if not oracle.matches:
        failures.append("(8,8,8) not oracle-confirmed")
    for confs in itertools.product((2, 3, 4), repeat=3):
        est = estimate(SideChain(confs), BINARY)
        if est.correction_subtracted != 0:
            failures.append(f"{confs}: correction {est.correction_subtracted} != 0")
            break
    _verdict(3, "duplicate-term correction values", failures)


def test_criterion_4_ladder_gate_rule():
    failures = []
    if two_qubit_gate_count({3: 1}) != 4:
        failures.append("single 3-body term must cost 4 gates")
    rng = np.random.default_rng(14)
    for _ in range(200):
        confs = tuple(int(c) for c in rng.integers(2, 60, size=rng.integers(2, 6)))
        enc = GATE_ENCODINGS[int(rng.integers(len(GATE_ENCODINGS)))]
        est = estimate(SideChain(confs), enc)
        recomputed = sum(
            count * 2 * (order - 1)
            for order, count in est.interactions_by_order.items()
        )
        if est.two_qubit_gates != recomputed:
            failures.append(f"{confs} under {enc}: {est.two_qubit_gates} != {recomputed}")
            break
    for n in (4, 9, 21):
        for dim in (2, 3):
            bd = turn_estimate(n, dim, BINARY)
            recomputed = bd.hback_terms * 2 * (bd.hback_locality - 1) + sum(
                cls.count * 2 * (cls.locality - 1) for cls in bd.operator_classes
            )
            if bd.two_qubit_gates != recomputed:
                failures.append(f"turn n={n} dim={dim}: gate total mismatch")
    _verdict(4, "two-qubit gates equal sum of 2(m-1) per term", failures)


def test_criterion_5_feasible_set_gate():
    failures = []
    start = time.perf_counter()
    encodings = (UNARY, BINARY, bubinary(3))
    checked = 0
    for n in (1, 2, 3):
        for confs in itertools.product(range(2, 10), repeat=n):
            for enc in encodings:
                if qubit_count(confs, enc) > 20:
                    continue
                formula = feasible_ratio_formula(confs, enc)
                exact = feasible_ratio_exact(confs, enc, qubit_cap=20)
                checked += 1
                if (
                    formula.feasible_count != exact.feasible_count
                    or formula.qubits != exact.qubits
                ):
                    failures.append(
                        f"{confs} under {enc}: formula {formula.feasible_count}"
                        f"/2^{formula.qubits} vs exact {exact.feasible_count}"
                        f"/2^{exact.qubits}"
                    )
    for n in range(1, 101):
        if turn_feasible_ratio(n, 2, BINARY).log2_ratio != 0.0:
            failures.append(f"square-lattice turn ratio not 1 at n={n}")
            break
    elapsed = time.perf_counter() - start
    print(f"    formula == enumeration for {checked} instances, {elapsed:.1f}s")
    if elapsed >= 120:
        failures.append(f"took {elapsed:.0f}s, budget 120s")
    _verdict(5, "feasible ratios: closed form equals enumeration", failures)


def test_criterion_6_n15_coordinate_cross_check():
    failures = []
    rows = run_sweep(["coord2d"], [UNARY, BINARY], 15, 15)
    table = {(r.encoding, r.metric): r for r in rows}
    for scheme, anchor in ANCHOR_QUBITS.items():
        mean = table[(scheme, "qubits")].mean
        deviation = abs(mean - anchor) / anchor
        print(f"    {scheme} qubit mean {mean:.2f} vs anchor {anchor} ({deviation:+.1%})")
        if deviation > 0.10:
            failures.append(
                f"{scheme} qubit mean {mean:.2f} deviates {deviation:.1%} "
                f"from {anchor} (tolerance 10%)"
            )
    for scheme, anchor in ANCHOR_INTERACTIONS.items():
        mean = table[(scheme, "interactions")].mean
        deviation = abs(mean - anchor) / anchor
        print(
            f"    {scheme} interaction mean {mean:.1f} vs anchor {anchor} ({deviation:+.1%})"
        )
        if deviation > 0.20:
            failures.append(
                f"{scheme} interaction mean {mean:.1f} deviates {deviation:.1%} "
                f"from {anchor} (tolerance 20%)"
            )
    qrow = table[("binary", "qubits")]
    if not (qrow.vmin == 45 and qrow.vmax == 60):
        failures.append(
            f"binary qubit sample [{qrow.vmin}, {qrow.vmax}] must span 45 and 60"
        )
    # Known red: the binary interaction mean is 17650 under the documented
    # nine-grid convention (+21.3%); the anchor is matched exactly by the
    # two-grid set with 16 and 20 sites.  See README.md.
    _verdict(6, "15-residue coordinate-lattice cross-check", failures)


def _fit_slope(rows, model, scheme, metric):
    points = sorted(
        (r.n, r.mean) for r in rows if r.model == model and r.encoding == scheme and r.metric == metric
    )
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(v) for _, v in points]
    return float(np.polyfit(xs, ys, 1)[0])


def test_criterion_7_scaling_exponents():
    failures = []
    start = time.perf_counter()
    rows = run_sweep(
        ["coord2d", "turn2d", "sidechain"],
        [UNARY, BINARY, bubinary(3)],
        50,
        100,
        samples=2000,
        seed=20240901,
    )
    for scheme in ("unary", "binary", "bubinary"):
        coord = _fit_slope(rows, "coord2d", scheme, "interactions")
        print(
            f"    coordinate interaction exponent ({scheme}): {coord:.3f} "
            f"(window [3.5, 4.5])"
        )
        if not 3.5 <= coord <= 4.5:
            failures.append(
                f"coordinate interaction exponent ({scheme}) {coord:.3f} "
                f"outside [3.5, 4.5]"
            )

    turn = _fit_slope(rows, "turn2d", "binary", "qubits")
    print(f"    turn-model qubit exponent (binary): {turn:.3f} (window [1.8, 2.2])")
    for scheme in ("unary", "bubinary"):
        info = _fit_slope(rows, "turn2d", scheme, "qubits")
        print(f"      (info) turn-model qubit exponent ({scheme}): {info:.3f}")
    if not 1.8 <= turn <= 2.2:
        # Known red: distance registers grow as N^2 log N, which fits to
        # 2.31 over this window.  See README.md.
        failures.append(f"turn-model qubit exponent {turn:.3f} outside [1.8, 2.2]")

    for scheme in ("unary", "binary", "bubinary"):
        side = _fit_slope(rows, "sidechain", scheme, "qubits")
        print(f"    side-chain qubit exponent ({scheme}): {side:.3f} (window [0.9, 1.1])")
        if not 0.9 <= side <= 1.1:
            failures.append(
                f"side-chain qubit exponent ({scheme}) {side:.3f} outside [0.9, 1.1]"
            )
    elapsed = time.perf_counter() - start
    print(f"    fits completed in {elapsed:.1f}s")
    if elapsed >= 30:
        failures.append(f"took {elapsed:.0f}s, budget 30s")
    _verdict(7, "scaling exponents from seeded sweeps", failures)


def test_criterion_8_turn_model_identities():
    failures = []
    if aux_pair_qubits(15) != 42:
        failures.append(f"aux_pair(15) = {aux_pair_qubits(15)} != 42")

    def closed_dist(n, enc):
        total = 0
        for d in range(4, n, 2):
            if enc.scheme == "unary":
                width = 2 * d
            elif enc.scheme == "binary":
                width = math.ceil(2 * math.log2(d))
            else:
                width = 2 * math.ceil(d / enc.g) * enc.block_bits
            total += (n - d) * width
        return total

    def closed_pair(n):
        return sum(n - d for d in range(3, n, 2))

    for enc in (UNARY, BINARY, bubinary(3)):
        for n in range(4, 301):
            if aux_dist_qubits(n, enc) != closed_dist(n, enc):
                failures.append(f"distance registers diverge at n={n} under {enc}")
                break
            if aux_pair_qubits(n) != closed_pair(n):
                failures.append(f"contact flags diverge at n={n}")
                break
    unary_total = turn_estimate(15, 2, UNARY).total_qubits
    binary_total = turn_estimate(15, 2, BINARY).total_qubits
    print(
        f"    documented open discrepancy: computed 15-residue totals are "
        f"{unary_total}/{binary_total} (unary/binary); the narrative reference "
        f"quotes 404/226.  Recorded, not gated."
    )
    _verdict(8, "turn-model loop vs closed-form identities", failures)


@pytest.mark.parametrize("run", [1, 2])
def test_criterion_9_sweep_determinism(run, tmp_path):
    # both parametrized runs regenerate the full figure data; the second
    # compares bytes against the first via a session-scoped stash
    failures = []
    start = time.perf_counter()
    rows = run_sweep(
        ["coord2d", "coord3d", "turn2d", "turn3d", "sidechain"],
        [UNARY, BINARY, bubinary(3)],
        3,
        100,
        samples=2000,
        seed=20240901,
    )
    elapsed = time.perf_counter() - start
    out = tmp_path / f"figure-data-run{run}.csv"
    write_rows(rows, str(out), "csv")
    data = out.read_bytes()
    print(f"    run {run}: {len(rows)} rows, {len(data)} bytes, {elapsed:.1f}s")
    if elapsed >= 60:
        failures.append(f"sweep took {elapsed:.0f}s, budget 60s")
    stash = _SWEEP_BYTES.setdefault("data", data)
    if stash != data:
        failures.append("second run produced different bytes")
    _verdict(9, f"figure-regeneration sweep determinism (run {run})", failures)


_SWEEP_BYTES: dict[str, bytes] = {}
