"""
Logical error-rate estimation with post-selection.

Shots are split over workers, each drawing from its own child of
``numpy.random.SeedSequence(seed)``, and each worker walks its share in chunks. Results
depend only on the seed and the worker count.
"""

import logging
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from scipy import stats
from tqdm import tqdm

from steaneChef.config.config import Config
from steaneChef.core.codes.css_code import X, Z
from steaneChef.core.protocol.schedule import ProtocolSchedule
from steaneChef.core.sim.frame_simulator import FrameSimulator, parity_rows, syndrome_ints
from steaneChef.core.sim.lut_decoder import LutDecoder, build_lut
from steaneChef.core.sim.noise import NoiseModel
from steaneChef.utils.const import DEFAULT_CONFIDENCE
from steaneChef.utils.errors import ContractViolation

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "code",
    "p",
    "shots",
    "accepted",
    "failures",
    "r_A",
    "r_A_ci_lo",
    "r_A_ci_hi",
    "p_l",
    "p_l_ci_lo",
    "p_l_ci_hi",
    "seed",
]


def wilson_interval(successes: int, total: int, confidence: float = DEFAULT_CONFIDENCE) -> Tuple[float, float]:
    """Wilson score interval of a binomial proportion; ``(0, 1)`` when ``total`` is zero."""
    if not 0 <= successes <= total:
        raise ContractViolation(f"need 0 <= successes <= total, got {successes}/{total}")
    if not 0.0 < confidence < 1.0:
        raise ContractViolation(f"confidence must lie in (0, 1), got {confidence}")
    if total == 0:
        return 0.0, 1.0
    zq = stats.norm.ppf(0.5 + confidence / 2.0)
    phat = successes / total
    denom = 1.0 + zq * zq / total
    center = (phat + zq * zq / (2 * total)) / denom
    half = zq * math.sqrt(phat * (1.0 - phat) / total + zq * zq / (4.0 * total * total)) / denom
    return max(0.0, center - half), min(1.0, center + half)


@dataclass
class SimResult:
    """
    Aggregated outcome of one estimator at one physical error rate.

    ``r_A`` is accepted / shots and ``p_l`` is failures / accepted.
    """

    code: str
    p: float
    shots: int
    accepted: int
    failures: int
    seed: Optional[int] = None
    estimator: str = X
    workers: int = 1
    confidence: float = DEFAULT_CONFIDENCE

    def __post_init__(self):
        if not 0 <= self.failures <= self.accepted <= self.shots:
            raise ContractViolation(
                f"inconsistent counts: {self.failures} failures, {self.accepted} accepted, {self.shots} shots"
            )

    @property
    def r_A(self) -> float:
        return self.accepted / self.shots if self.shots else 0.0

    @property
    def p_l(self) -> float:
        return self.failures / self.accepted if self.accepted else 0.0

    @property
    def r_A_ci(self) -> Tuple[float, float]:
        return wilson_interval(self.accepted, self.shots, self.confidence)

    @property
    def p_l_ci(self) -> Tuple[float, float]:
        return wilson_interval(self.failures, self.accepted, self.confidence)

    def to_row(self) -> Dict[str, object]:
        r_lo, r_hi = self.r_A_ci
        p_lo, p_hi = self.p_l_ci
        return {
            "code": self.code,
            "p": self.p,
            "shots": self.shots,
            "accepted": self.accepted,
            "failures": self.failures,
            "r_A": self.r_A,
            "r_A_ci_lo": r_lo,
            "r_A_ci_hi": r_hi,
            "p_l": self.p_l,
            "p_l_ci_lo": p_lo,
            "p_l_ci_hi": p_hi,
            "seed": self.seed,
        }


def results_frame(results: Iterable[SimResult]) -> pd.DataFrame:
    """One row per result, in CSV column order."""
    return pd.DataFrame([r.to_row() for r in results], columns=CSV_COLUMNS)


@dataclass
class SlopeFit:
    slope: float
    intercept: float
    rvalue: float
    stderr: float
    points: int


def fit_slope(ps: Sequence[float], rates: Sequence[float]) -> SlopeFit:
    """
    Least-squares slope of ``log(rate)`` against ``log(p)``.

    Points with a zero rate are dropped.

    Raises:
        ContractViolation: If fewer than two usable points remain.
    """
    if len(ps) != len(rates):
        raise ContractViolation("ps and rates differ in length")
    pairs = [(p, r) for p, r in zip(ps, rates) if p > 0 and r > 0]
    if len(pairs) < 2:
        raise ContractViolation("a slope needs at least two points with nonzero rate")
    xs = np.log([p for p, _ in pairs])
    ys = np.log([r for _, r in pairs])
    fit = stats.linregress(xs, ys)
    return SlopeFit(float(fit.slope), float(fit.intercept), float(fit.rvalue), float(fit.stderr), len(pairs))


Kernel = Callable[[FrameSimulator, int, np.random.Generator], Tuple[int, int]]


def _split(total: int, parts: int) -> List[int]:
    base, extra = divmod(total, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


class _Estimator:
    """Shared worker and chunk loop of the two estimators."""

    def __init__(self, schedule: ProtocolSchedule, noise: NoiseModel, label: str):
        self.schedule = schedule
        self.noise = noise
        self.label = label
        self.sim = FrameSimulator(schedule, noise)
        self.logger = logging.getLogger(__name__)

    def run(
        self,
        kernel: Kernel,
        shots: int,
        seed: Optional[int],
        workers: Optional[int] = None,
        chunk: Optional[int] = None,
        progress: bool = False,
    ) -> SimResult:
        if shots < 0:
            raise ContractViolation("negative shot count")
        cfg = Config()
        workers = max(1, min(workers or cfg.threads, max(shots, 1)))
        chunk = max(1, chunk or cfg.shot_chunk)
        children = np.random.SeedSequence(seed).spawn(workers)
        bar = tqdm(total=shots, desc=f"{self.schedule.code.name} {self.label} p={self.noise.p:g}", disable=not progress)
        lock = threading.Lock()

        def work(child, count):
            rng = np.random.default_rng(child)
            accepted = failures = 0
            done = 0
            while done < count:
                size = min(chunk, count - done)
                a, f = kernel(self.sim, size, rng)
                accepted += a
                failures += f
                done += size
                with lock:
                    bar.update(size)
            return accepted, failures

        shares = _split(shots, workers)
        try:
            if workers == 1:
                totals = [work(children[0], shares[0])]
            else:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    totals = list(pool.map(work, children, shares))
        finally:
            bar.close()
        accepted = sum(a for a, _ in totals)
        failures = sum(f for _, f in totals)
        result = SimResult(
            self.schedule.code.name, self.noise.p, shots, accepted, failures, seed, self.label, workers
        )
        self.logger.info(
            "%s %s estimate at p=%g: r_A=%.4f p_l=%.3e (%d shots)",
            self.schedule.code.name, self.label, self.noise.p, result.r_A, result.p_l, shots,
        )
        return result


def _x_kernel(decoder: LutDecoder) -> Kernel:
    def kernel(sim: FrameSimulator, size: int, rng: np.random.Generator) -> Tuple[int, int]:
        batch = sim.run(size, rng)
        accepted = sim.checks.accepted(batch)
        residual = batch.residual_x[:, accepted]
        syndromes = syndrome_ints(parity_rows(sim.checks.h_z, residual))
        correction, heralded = decoder.decode_batch(syndromes)
        flipped = parity_rows(sim.checks.l_z, residual ^ correction).any(axis=0)
        return int(accepted.sum()), int((flipped | heralded).sum())

    return kernel


def _z_kernel(decoder: LutDecoder) -> Kernel:
    def kernel(sim: FrameSimulator, size: int, rng: np.random.Generator) -> Tuple[int, int]:
        batch = sim.run(size, rng, gadget=True)
        accepted = sim.checks.accepted(batch)
        readout = batch.gadget_record[:, accepted]
        syndromes = syndrome_ints(parity_rows(sim.checks.h_x, readout))
        correction, heralded = decoder.decode_batch(syndromes)
        residual = batch.gadget_z[:, accepted] ^ correction
        # ideal round on the |+>_L block: only an uncorrectable residual is a failure
        ideal, ideal_heralded = decoder.decode_batch(syndrome_ints(parity_rows(sim.checks.h_x, residual)))
        flipped = parity_rows(sim.checks.l_x, residual ^ ideal).any(axis=0)
        return int(accepted.sum()), int((flipped | heralded | ideal_heralded).sum())

    return kernel


def estimate_x_logical(
    schedule: ProtocolSchedule,
    noise: NoiseModel,
    shots: int,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    progress: bool = False,
) -> SimResult:
    """
    Logical X failure rate of accepted shots.

    Block 1's residual X frame is decoded from its noiseless Z-check syndrome; a shot
    fails when the corrected residual flips a logical Z parity or its syndrome is
    heralded.
    """
    decoder = build_lut(schedule.code, X)
    return _Estimator(schedule, noise, X).run(_x_kernel(decoder), shots, seed, workers, progress=progress)


def estimate_z_logical(
    schedule: ProtocolSchedule,
    noise: NoiseModel,
    shots: int,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    progress: bool = False,
) -> SimResult:
    """
    Logical Z failure rate through a Steane-type measurement of an ideal |+>_L block.

    The |+>_L block is depolarized with strength ``p``, a noisy transversal CNOT copies
    its Z errors onto block 1, and block 1 is read out in the X basis with noisy
    measurements. The decoded correction is applied to the |+>_L block, whose residual
    is then decoded from its noiseless X-check syndrome; a shot fails when that leaves an
    odd logical X parity or either syndrome is heralded.
    """
    decoder = build_lut(schedule.code, Z)
    return _Estimator(schedule, noise, Z).run(_z_kernel(decoder), shots, seed, workers, progress=progress)


def sweep(
    schedule: ProtocolSchedule,
    ps: Sequence[float],
    shots: int,
    seed: Optional[int] = None,
    basis: str = X,
    workers: Optional[int] = None,
    progress: bool = False,
) -> List[SimResult]:
    estimate = estimate_x_logical if basis == X else estimate_z_logical
    return [estimate(schedule, NoiseModel.scaled(p), shots, seed, workers, progress) for p in ps]
