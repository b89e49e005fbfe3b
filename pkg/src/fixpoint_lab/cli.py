"""
Command-line interface for fixpoint-lab.

Exit codes: 0 success, 1 usage, I/O, corpus or configuration error,
2 mathematical violation (failed certificate, audit violation, suite FAIL,
divergence).
"""
import argparse
import logging
import os
import sys
from typing import Any
import numpy as np
import fixpoint_lab.base as fp_base
import fixpoint_lab.enumeration as fp_enum
import fixpoint_lab.exception as fp_exception
from fixpoint_lab.conditions import (MappingSpec, SampleSet, check_zamfirescu, delta_from_zamfirescu,
                                     check_quasi_contractive, check_osilike_udomene, check_contractive_like)
from fixpoint_lab.conditions.element import Norm, as_point
from fixpoint_lab.corpus import Reader, Workspace
from fixpoint_lab.equivalence import (SuiteSchedules, audit_run, corollary1_suite, corollary2_suite, couple)
from fixpoint_lab.schemes import ParameterSchedule, SchemeConfig, StoppingRule, run

_logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

DEFAULT_RANDOM_PAIRS = 1000


class ExperimentConfig:
    """
    Everything a subcommand needs, validated against the loaded corpus
    """

    def __init__(self,
                 workspace: Workspace,
                 map_label: str,
                 schemes: list[SchemeConfig],
                 x0: Any,
                 stopping: StoppingRule,
                 output_dir: str,
                 seed: int = fp_base.DEFAULT_SEED,
                 schedules: SuiteSchedules | None = None,
                 floor: float | None = None,
                 delta: float | None = None,
                 random_pairs: int = DEFAULT_RANDOM_PAIRS,
                 corollary: int = 2) -> None:
        mapping = workspace.find(map_label)
        if mapping is None:
            raise fp_exception.ConfigError(f"Unknown map '{map_label}', corpus holds: {', '.join(workspace.labels)}")
        self.mapping: MappingSpec = mapping
        self.schemes = schemes
        if x0 is None:
            x0 = mapping.domain.hi
        try:
            self.x0 = as_point(x0, mapping.dimension)
        except ValueError as ex:
            raise fp_exception.ConfigError(f"x0 does not fit map '{map_label}': {ex}") from ex
        if not mapping.domain.contains(self.x0):
            raise fp_exception.ConfigError(f"x0 = {self.x0.tolist()} lies outside the domain of '{map_label}'")
        self.stopping = stopping
        self.output_dir = output_dir
        self.seed = seed
        self.schedules = schedules
        self.floor = floor
        self.delta = delta if delta is not None else mapping.certificate.get("delta")
        self.random_pairs = random_pairs
        self.corollary = corollary

    @property
    def gauge(self):
        """Gauge function of the map's certificate, if any"""
        return self.mapping.certificate.get("gauge")

    def output_path(self, *parts: str, extension: str = "csv") -> str:
        """
        File path inside the output directory
        """
        name = "_".join([self.mapping.label] + list(parts))
        return os.path.join(self.output_dir, f"{name}.{extension}")

    @classmethod
    def from_arguments(cls, arguments: argparse.Namespace) -> "ExperimentConfig":
        """
        Builds configuration from parsed command-line arguments
        """
        workspace = Workspace.from_corpus(arguments.corpus)
        floor = arguments.floor if arguments.floor is not None else 0.0
        alpha = ParameterSchedule.parse(arguments.alpha, floor)
        betas = [ParameterSchedule.parse(text) for text in (arguments.beta or ["0.5"])]
        schedules = SuiteSchedules(alpha, betas, arguments.k)
        if arguments.scheme_config:
            schemes = Reader().read_scheme_config_file(arguments.scheme_config)
        else:
            schemes = [schedules.config(fp_enum.str_to_scheme_family(name)) for name in (arguments.scheme or [])]
        x0 = None
        if arguments.x0:
            try:
                x0 = [float(item) for item in arguments.x0.split(",")]
            except ValueError as ex:
                raise fp_exception.ConfigError(f"Invalid --x0: '{arguments.x0}'") from ex
        stopping = StoppingRule(arguments.tol, arguments.max_iters)
        return cls(workspace, arguments.map, schemes, x0, stopping, arguments.out, arguments.seed, schedules,
                   arguments.floor, arguments.delta, arguments.random_pairs, arguments.corollary)


def _require_certificate(config: ExperimentConfig, key: str) -> Any:
    value = config.mapping.certificate.get(key)
    if value is None:
        raise fp_exception.ConfigError(f"Map '{config.mapping.label}' has no certificate value '{key}'")
    return value


def _audit_floor(config: ExperimentConfig, alphas: np.ndarray) -> float:
    """
    --floor, else the declared alpha floor, else the smallest emitted alpha
    """
    if config.floor is not None:
        return config.floor
    if config.schedules is not None and config.schedules.alpha.floor > 0.0:
        return config.schedules.alpha.floor
    return float(np.min(alphas)) if len(alphas) > 0 else 0.0


def cmd_certify(arguments: argparse.Namespace) -> int:
    """
    Runs the four condition checks on the named map and writes one JSON report per condition
    """
    config = ExperimentConfig.from_arguments(arguments)
    mapping = config.mapping
    norm = Norm.euclidean()
    samples = SampleSet.generate(mapping.domain, random_count=config.random_pairs, seed=config.seed)
    constants = _require_certificate(config, "zamfirescu")
    delta = config.delta if config.delta is not None else delta_from_zamfirescu(*constants)
    quasi_delta = arguments.delta if arguments.delta is not None else delta_from_zamfirescu(*constants)
    results = {
        "zamfirescu": check_zamfirescu(mapping, norm, constants, samples),
        "quasi_contractive": check_quasi_contractive(mapping, norm, quasi_delta, samples),
        "osilike_udomene": check_osilike_udomene(mapping, norm, delta, _require_certificate(config, "L"), samples),
        "contractive_like": check_contractive_like(mapping, norm, delta, _require_certificate(config, "gauge"),
                                                   samples),
    }
    workspace = Workspace()
    for name, result in results.items():
        workspace.create_document(config.output_path(name, extension="json"), result, mapping.label)
        print(f"{mapping.label} {name}: {'certificate' if result.is_valid else 'violation'}")
    workspace.write_documents()
    return EXIT_SUCCESS if all(result.is_valid for result in results.values()) else EXIT_VIOLATION


def cmd_run(arguments: argparse.Namespace) -> int:
    """
    Runs one scheme and writes its trajectory as CSV
    """
    config = ExperimentConfig.from_arguments(arguments)
    if len(config.schemes) != 1:
        raise fp_exception.ConfigError("run requires exactly one scheme")
    scheme = config.schemes[0]
    trajectory = run(config.mapping, scheme, config.x0, config.stopping)
    workspace = Workspace()
    workspace.create_document(config.output_path(scheme.name), trajectory, f"{config.mapping.label} {scheme.name}")
    workspace.write_documents()
    print(f"{config.mapping.label} {scheme.name}: {trajectory.iterations} steps, "
          f"stop {fp_enum.enum_to_str(trajectory.stop_reason)}, residual {trajectory.final_residual:.3e}")
    if trajectory.stop_reason == fp_enum.StopReason.DIVERGENCE_GUARD:
        return EXIT_VIOLATION
    return EXIT_SUCCESS


def cmd_couple(arguments: argparse.Namespace) -> int:
    """
    Couples two schemes (Mann against one given scheme, or two given schemes),
    writes the coupled run as CSV and the applicable audits as JSON
    """
    config = ExperimentConfig.from_arguments(arguments)
    if len(config.schemes) == 1:
        scheme_a, scheme_b = config.schedules.config(fp_enum.SchemeFamily.MANN), config.schemes[0]
    elif len(config.schemes) == 2:
        scheme_a, scheme_b = config.schemes
    else:
        raise fp_exception.ConfigError("couple requires one or two schemes")
    coupled = couple(config.mapping, scheme_a, scheme_b, config.x0, config.stopping, config.floor)
    audits = []
    if config.delta is not None and config.gauge is not None:
        audits = audit_run(coupled, config.delta, _audit_floor(config, coupled.candidate.alphas), config.gauge)
    else:
        _logger.warning("%s: no delta or gauge in certificate, audits skipped", config.mapping.label)
    title = f"{config.mapping.label} {scheme_a.name} vs {scheme_b.name}"
    workspace = Workspace()
    workspace.create_document(config.output_path(scheme_a.name, "vs", scheme_b.name), coupled, title)
    workspace.create_document(config.output_path(scheme_a.name, "vs", scheme_b.name, "audit", extension="json"),
                              [coupled] + audits, title)
    workspace.write_documents()
    print(f"{title}: {fp_enum.enum_to_str(coupled.outcome)}, final gap {coupled.final_gap:.3e}")
    for report in audits:
        print(f"  {report.name}: {'holds' if report.holds else f'violated at n={report.first_violation}'}")
    violated = any(not report.holds for report in audits)
    if violated or coupled.outcome == fp_enum.CoupledOutcome.COUNTEREXAMPLE:
        return EXIT_VIOLATION
    return EXIT_SUCCESS


def cmd_suite(arguments: argparse.Namespace) -> int:
    """
    Runs the corollary suite and writes the scheme matrix as CSV plus the audits as JSON
    """
    config = ExperimentConfig.from_arguments(arguments)
    suite = corollary1_suite if config.corollary == 1 else corollary2_suite
    floor = config.floor
    if floor is None and config.schedules.alpha.floor > 0.0:
        floor = config.schedules.alpha.floor
    if floor is None:
        floor = float(np.min(config.schedules.alpha.prefix(config.stopping.max_iters + 1)))
    result = suite(config.mapping, config.x0, config.schedules, config.stopping,
                   delta=config.delta, gauge=config.gauge, floor=floor)
    name = f"corollary{config.corollary}"
    workspace = Workspace()
    workspace.create_document(config.output_path(name), result, f"{config.mapping.label} {name}")
    workspace.create_document(config.output_path(name, "audit", extension="json"), result,
                              f"{config.mapping.label} {name}")
    workspace.write_documents()
    for row in result.rows:
        print(f"{row.scheme:>18} fp_error {row.fp_error:.3e} gap_tail {row.gap_tail:.3e} "
              f"iterations {row.iterations} audits {row.audit_verdict}")
    print("PASS" if result.passed else "FAIL")
    return EXIT_SUCCESS if result.passed else EXIT_VIOLATION


def _add_common_args(parser: argparse.ArgumentParser) -> None:
    """
    Arguments shared by all subcommands
    """
    parser.add_argument("--corpus", default=None, help="Corpus JSON file (default: bundled corpus)")
    parser.add_argument("--map", required=True, help="Map label in the corpus")
    parser.add_argument("--scheme", action="append", help="Scheme family (repeatable)")
    parser.add_argument("--scheme-config", default=None, help="JSON file with one scheme config or a list")
    parser.add_argument("--k", type=int, default=3, help="Number of levels of the generic multistep schemes")
    parser.add_argument("--alpha", default="0.5", help="alpha schedule: 0.5, harmonic:1 or list:0.9,0.5")
    parser.add_argument("--beta", action="append", help="beta^i schedule, repeat for i = 1..k-1")
    parser.add_argument("--floor", type=float, default=None, help="Asserted lower bound A of alpha_n")
    parser.add_argument("--delta", type=float, default=None,
                        help="Override delta of the certificate checks (quasi-contractive included) and audits")
    parser.add_argument("--x0", default=None, help="Initial point, comma separated (default: upper domain corner)")
    parser.add_argument("--tol", type=float, default=fp_base.DEFAULT_TOLERANCE, help="Residual tolerance")
    parser.add_argument("--max-iters", type=int, default=fp_base.DEFAULT_MAX_ITERS, dest="max_iters",
                        help="Iteration cap")
    parser.add_argument("--seed", type=int, default=fp_base.DEFAULT_SEED, help="Seed for sample generation")
    parser.add_argument("--random-pairs", type=int, default=DEFAULT_RANDOM_PAIRS, dest="random_pairs",
                        help="Random sample pairs added to the grid pairs")
    parser.add_argument("--corollary", type=int, choices=[1, 2], default=2, help="Suite to run")
    parser.add_argument("--out", default=".", help="Output directory")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More log output")


def build_parser() -> argparse.ArgumentParser:
    """
    Build the command-line interface argument parser.
    """
    parser = argparse.ArgumentParser(prog="fixpoint-lab",
                                     description="Fixed-point iteration schemes, certificates and audits")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_certify = sub.add_parser("certify", help="Check the contractive conditions of a map")
    _add_common_args(p_certify)
    p_certify.set_defaults(func=cmd_certify)

    p_run = sub.add_parser("run", help="Run one scheme and write its trajectory")
    _add_common_args(p_run)
    p_run.set_defaults(func=cmd_run)

    p_couple = sub.add_parser("couple", help="Couple two schemes and audit the gap inequalities")
    _add_common_args(p_couple)
    p_couple.set_defaults(func=cmd_couple)

    p_suite = sub.add_parser("suite", help="Run every scheme of a corollary against Mann")
    _add_common_args(p_suite)
    p_suite.set_defaults(func=cmd_suite)
    return parser


def main(argument_list: list[str] | None = None) -> int:
    """
    Entry point for the fixpoint-lab command-line interface.
    """
    parser = build_parser()
    try:
        arguments = parser.parse_args(argument_list)
    except SystemExit as ex:
        return EXIT_SUCCESS if ex.code in (0, None) else EXIT_USAGE
    level = logging.WARNING if arguments.verbose == 0 else logging.INFO if arguments.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return int(arguments.func(arguments))
    except (fp_exception.DomainEscape, fp_exception.NonFiniteValue) as ex:
        print(str(ex), file=sys.stderr)
        return EXIT_VIOLATION
    except (OSError, ValueError, RuntimeError, KeyError) as ex:
        print(str(ex), file=sys.stderr)
        return EXIT_USAGE
