"""
steane_chef.py

The synthesize → verify → simulate → inject pipeline behind the command line.

Every command writes its artifacts into one output directory together with a
``manifest.json`` that records how they were produced. Artifacts carry no timestamps,
so two runs with the same seed and config produce identical bytes; only the manifest's
``wall_clock`` differs.
"""

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from steaneChef.config.config import Config
from steaneChef.core.chefs.base_chef import BaseChef
from steaneChef.core.circuit import PrepCircuit, parse_circuit, serialize_circuit
from steaneChef.core.codes import CssCode, X, Z, parse_check_file, registry_lookup, validate
from steaneChef.core.ftcheck import VerificationReport, verify_quadruple
from steaneChef.core.protocol import ProtocolSchedule, build_protocol, parse_protocol, serialize_protocol
from steaneChef.core.sim import (
    NoiseModel,
    SimResult,
    exhaustive_inject,
    fit_slope,
    results_frame,
    sweep,
    to_stim_circuit,
)
from steaneChef.core.synth import QuadrupleResult, SynthConfig, greedy_synth, synth_quadruple
from steaneChef.core.synth.quadruple import STAGES
from steaneChef.utils.const import (
    CIRCUIT_FILE_TEMPLATE,
    INJECT_REPORT_FILENAME,
    MANIFEST_FILENAME,
    METRICS_FILENAME,
    PROTOCOL_FILENAME,
    SIM_FIT_FILENAME,
    SIM_X_FILENAME,
    SIM_Z_FILENAME,
    SUCCESS,
    VERIFY_REPORT_FILENAME,
    VIOLATIONS,
)
from steaneChef.utils.errors import (
    CircuitParseError,
    ContractViolation,
    VerificationError,
)
from steaneChef.utils.paths import PathLike, Paths
from steaneChef.utils.storage_utils import StorageUtils


def resolve_code(code_ref: str) -> CssCode:
    """A registry name, or the path of a check-matrix file."""
    path = Path(code_ref)
    if path.is_file():
        h_x, h_z = parse_check_file(path.read_text(encoding="utf-8"))
        return validate(h_x, h_z, name=path.stem)
    return registry_lookup(code_ref)


def load_circuits(paths: Sequence[PathLike]) -> List[PrepCircuit]:
    """
    Parse four circuit files, or the ``C1..C4`` files inside one directory.

    Raises:
        CircuitParseError: Listing every file that failed, with its line number.
    """
    paths = [Path(p) for p in paths]
    if len(paths) == 1 and paths[0].is_dir():
        paths = [paths[0] / CIRCUIT_FILE_TEMPLATE.format(index=i) for i in range(1, 5)]
    if len(paths) != 4:
        raise ContractViolation(f"expected 4 circuit files, got {len(paths)}")
    circuits, problems = [], []
    for path in paths:
        try:
            circuits.append(parse_circuit(path.read_text(encoding="utf-8")))
        except CircuitParseError as e:
            problems.append(f"{path}: {e}")
        except OSError as e:
            problems.append(f"{path}: {e}")
    if problems:
        raise CircuitParseError("; ".join(problems))
    return circuits


@dataclass
class RunManifest:
    """Provenance of one command's artifacts."""

    command: str
    code: str
    seed: Optional[int]
    version: str
    config: Dict[str, Any] = field(default_factory=dict)
    synth_config: Dict[str, Any] = field(default_factory=dict)
    options: Dict[str, Any] = field(default_factory=dict)
    outputs: Dict[str, str] = field(default_factory=dict)
    wall_clock: float = 0.0

    def add_output(self, path: Path) -> None:
        self.outputs[path.name] = StorageUtils.sha256_file(path)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "code": self.code,
            "seed": self.seed,
            "version": self.version,
            "config": self.config,
            "synth_config": self.synth_config,
            "options": self.options,
            "outputs": dict(sorted(self.outputs.items())),
            "wall_clock": round(self.wall_clock, 3),
        }


class SteaneChef(BaseChef):
    """
    Runs the pipeline commands and writes their artifacts.

    Emits ``artifact`` events with the path of every file written and ``stage``
    events with a short progress message.
    """

    def __init__(
        self,
        out_dir: Optional[PathLike] = None,
        synth_config: Optional[SynthConfig] = None,
        seed: Optional[int] = None,
        progress: bool = False,
        data_dir: Optional[PathLike] = None,
    ):
        super().__init__(name="steanechef", data_dir=data_dir)
        self.out_dir = Path(out_dir) if out_dir is not None else None
        cfg = synth_config or SynthConfig()
        self.synth_config = cfg.replace(seed=seed) if seed is not None else cfg
        self.progress = progress

    @property
    def seed(self) -> int:
        return self.synth_config.seed

    def output_dir(self, command: str, code_ref: str) -> Path:
        if self.out_dir is not None:
            return Paths().ensure_path(self.out_dir)
        return Paths().run_dir(self.ensure_data_dir(), command, code_ref)

    def _manifest(self, command: str, code_ref: str, **options) -> RunManifest:
        from steaneChef import __version__

        return RunManifest(
            command=command,
            code=code_ref,
            seed=self.seed,
            version=__version__,
            config=Config().snapshot(),
            synth_config=self.synth_config.to_dict(),
            options={k: (str(v) if isinstance(v, Path) else v) for k, v in options.items()},
        )

    def _write(self, manifest: RunManifest, path: Path, payload: Union[str, Dict, Any]) -> Path:
        if isinstance(payload, str):
            StorageUtils.write_text(path, payload)
        elif hasattr(payload, "to_csv"):
            StorageUtils.write_csv(path, payload)
        else:
            StorageUtils.write_json(path, payload)
        manifest.add_output(path)
        self.emit_event("artifact", path)
        return path

    def _finish(self, manifest: RunManifest, out: Path, started: float) -> Path:
        manifest.wall_clock = time.perf_counter() - started
        path = out / MANIFEST_FILENAME
        StorageUtils.write_json(path, manifest.to_dict())
        self.emit_event("artifact", path)
        return path

    def _stage(self, message: str, *args) -> None:
        self.logger.info(message, *args)
        self.emit_event("stage", message % args if args else message)

    # --- quadruples -------------------------------------------------------------

    def quadruple(self, code: CssCode, baseline: bool = False) -> QuadrupleResult:
        """Synthesize C1..C4, or four copies of the greedy circuit with ``baseline``."""
        if baseline:
            c1 = greedy_synth(code, self.synth_config)
            return QuadrupleResult(code, [c1, c1, c1, c1])
        return synth_quadruple(code, self.synth_config, verify=False)

    def schedule(
        self,
        code: CssCode,
        circuits: Optional[Sequence[PathLike]] = None,
        protocol: Optional[PathLike] = None,
    ) -> ProtocolSchedule:
        """The protocol from a protocol file, four circuit files, or fresh synthesis."""
        if protocol is not None:
            return parse_protocol(Path(protocol).read_text(encoding="utf-8"), code)
        if circuits:
            return build_protocol(*load_circuits(circuits), code)
        self._stage("no circuits given, synthesizing a quadruple for %s", code.name)
        return build_protocol(*self.quadruple(code).circuits, code)

    # --- commands ----------------------------------------------------------------

    def synth(self, code_ref: str, baseline: bool = False) -> Tuple[QuadrupleResult, Path]:
        """Write ``C1..C4``, the protocol, the metrics table and the manifest."""
        started = time.perf_counter()
        code = resolve_code(code_ref)
        out = self.output_dir("synth", code_ref)
        manifest = self._manifest("synth", code_ref, baseline=baseline)
        self._stage("synthesizing %s %s", code.name, code.label())
        result = self.quadruple(code, baseline=baseline)
        result.report = verify_quadruple(*result.circuits, code)
        for index, (stage, c) in enumerate(zip(STAGES, result.circuits), start=1):
            title = f"{stage} of {code.name}: {c.cnot_count} CNOTs, depth {c.depth()}"
            self._write(manifest, out / CIRCUIT_FILE_TEMPLATE.format(index=index), serialize_circuit(c, title))
        schedule = build_protocol(*result.circuits, code)
        self._write(manifest, out / PROTOCOL_FILENAME, serialize_protocol(schedule))
        self._write(manifest, out / METRICS_FILENAME, result.metrics())
        self._write(manifest, out / VERIFY_REPORT_FILENAME, result.report.to_dict())
        self._stage("%s: %d CNOTs, CNOT depth %d", code.name, result.total_cnots, result.cnot_depth)
        return result, self._finish(manifest, out, started)

    def verify(self, code_ref: str, circuits: Sequence[PathLike]) -> Tuple[Dict[str, Any], int]:
        """
        Check the quadruple and write ``verify.json``.

        Circuits that do not prepare |0>_L are reported and the distinctness checks
        skipped.
        """
        started = time.perf_counter()
        code = resolve_code(code_ref)
        quad = load_circuits(circuits)
        out = self.output_dir("verify", code_ref)
        manifest = self._manifest("verify", code_ref, circuits=[str(c) for c in circuits])
        try:
            report: Union[VerificationReport, Dict[str, Any]] = verify_quadruple(*quad, code)
            data = report.to_dict()
        except VerificationError as e:
            self.logger.warning("%s", e)
            prepares = [i not in e.failing for i in range(1, 5)]
            data = {"code": code.name, "t": code.t, "prepares": prepares, "conditions": [], "ok": False}
        self._write(manifest, out / VERIFY_REPORT_FILENAME, data)
        self._finish(manifest, out, started)
        return data, SUCCESS if data["ok"] else VIOLATIONS

    def simulate(
        self,
        code_ref: str,
        ps: Sequence[float],
        shots: int,
        circuits: Optional[Sequence[PathLike]] = None,
        protocol: Optional[PathLike] = None,
        force: bool = False,
        fit: bool = False,
        stim_path: Optional[PathLike] = None,
    ) -> Tuple[List[SimResult], List[SimResult], Optional[Dict[str, Any]]]:
        """
        Estimate both logical failure rates at every ``p``.

        Raises:
            VerificationError: If the quadruple fails verification and ``force`` is off.
        """
        started = time.perf_counter()
        if not ps:
            raise ContractViolation("at least one physical error rate is needed")
        code = resolve_code(code_ref)
        schedule = self.schedule(code, circuits, protocol)
        if not force:
            report = verify_quadruple(*schedule.circuits, code)
            if not report.ok:
                failed = [c.number for c in report.conditions if not c.passed]
                raise VerificationError(
                    f"quadruple fails distinctness condition(s) {failed}; pass --force to simulate anyway"
                )
        out = self.output_dir("simulate", code_ref)
        manifest = self._manifest(
            "simulate", code_ref, ps=list(ps), shots=shots, force=force, fit=fit, stim=stim_path
        )
        x_results = sweep(schedule, ps, shots, self.seed, X, progress=self.progress)
        z_results = sweep(schedule, ps, shots, self.seed, Z, progress=self.progress)
        self._write(manifest, out / SIM_X_FILENAME, results_frame(x_results))
        self._write(manifest, out / SIM_Z_FILENAME, results_frame(z_results))
        slopes = None
        if fit:
            slopes = {}
            for label, results in ((X, x_results), (Z, z_results)):
                try:
                    fitted = fit_slope([r.p for r in results], [r.p_l for r in results])
                    slopes[label] = {"slope": fitted.slope, "intercept": fitted.intercept, "points": fitted.points}
                except ContractViolation as e:
                    self.logger.warning("no %s slope: %s", label, e)
                    slopes[label] = None
            self._write(manifest, out / SIM_FIT_FILENAME, {"code": code.name, "ps": list(ps), "slopes": slopes})
        if stim_path is not None:
            circuit = to_stim_circuit(schedule, NoiseModel.scaled(ps[0]))
            self._write(manifest, Path(stim_path), str(circuit) + "\n")
        self._finish(manifest, out, started)
        return x_results, z_results, slopes

    def inject(
        self,
        code_ref: str,
        max_faults: Optional[int] = None,
        circuits: Optional[Sequence[PathLike]] = None,
        protocol: Optional[PathLike] = None,
        budget: Optional[int] = None,
        prep_only: bool = False,
    ) -> Tuple[Dict[str, Any], int]:
        """Exhaustive injection up to ``max_faults`` (default ``t``); writes ``inject.json``."""
        started = time.perf_counter()
        code = resolve_code(code_ref)
        max_faults = code.t if max_faults is None else max_faults
        schedule = self.schedule(code, circuits, protocol)
        out = self.output_dir("inject", code_ref)
        manifest = self._manifest(
            "inject", code_ref, max_faults=max_faults, budget=budget, prep_only=prep_only
        )
        self._stage("injecting up to %d faults into %r", max_faults, schedule)
        report = exhaustive_inject(schedule, max_faults, budget, prep_only, progress=self.progress)
        data = report.to_dict()
        self._write(manifest, out / INJECT_REPORT_FILENAME, data)
        self._finish(manifest, out, started)
        return data, SUCCESS if report.ok else VIOLATIONS

    def process(self, code_ref: str) -> Dict[str, Any]:
        """Synthesize and verify ``code_ref``; the library entry point of the pipeline."""
        result, manifest = self.synth(code_ref)
        return {"result": result, "manifest": manifest}


__all__ = [
    "RunManifest",
    "SteaneChef",
    "load_circuits",
    "resolve_code",
]
