"""
Command line front end.

Every subcommand prints its results on standard output and logs on standard error. The exit
status is 0 on success, 1 when a check or comparison fails and 2 for usage and configuration
errors.
"""

import argparse
import sys
from typing import Callable, List, Optional, Sequence, TextIO

from loguru import logger

from beliefz import __version__
from beliefz.algebra.events import Event
from beliefz.algebra.literals import parse_event
from beliefz.algebra.space import OutcomeSpace
from beliefz.cli.output import (
    iterated_lines,
    odds_table_lines,
    script_lines,
    table_diff_lines,
)
from beliefz.enums import ExitCode, Family, I2Reading, OutputFormat, Postulate, PostulateStatus
from beliefz.exceptions import BaseLookupError, BeliefzException, UsageError
from beliefz.executors.base import BaseExecutor, create_executor
from beliefz.measures.hyper import HyperMeasure
from beliefz.revision.enumeration import enumerate_operators, enumerate_preorders
from beliefz.revision.iterated import check_iterated
from beliefz.revision.orders import PlausibilityOrder
from beliefz.revision.policies import BasePolicy, create_policy
from beliefz.revision.scripts import UpgradeScript, load_script, resolve_space, run_script
from beliefz.scenario.compare import compare_table, load_fixture
from beliefz.scenario.config import ScenarioConfig, load_config
from beliefz.scenario.model import build_naive_space, build_prior, evidence_events
from beliefz.scenario.run import run as run_scenario
from beliefz.verification.propositions import (
    VerificationReport,
    verify_lemma1,
    verify_lemma2,
    verify_prop1,
    verify_prop2,
    verify_prop3,
)

Handler = Callable[[argparse.Namespace, TextIO], ExitCode]

# The first sequence of radical upgrades on the coin space.
DEFAULT_UPGRADES = ("{X1=heads, X2=heads}", "{X1=tails, X2=tails}", "{X1=heads}")
POSTULATES = {postulate.value: postulate for postulate in Postulate.iterated()}


def write_lines(stream: TextIO, lines: Sequence[str]) -> None:
    for line in lines:
        stream.write(f"{line}\n")


def configure_logging(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "WARNING")


def scenario_config(args: argparse.Namespace) -> ScenarioConfig:
    """
    The config file, if any, with the command line flags layered on top.
    """
    cfg = load_config(args.config) if getattr(args, "config", None) else ScenarioConfig()
    overrides = {}
    if args.family is not None:
        overrides["family"] = args.family
    if args.gamma is not None:
        overrides["gamma"] = args.gamma
    if not overrides:
        return cfg
    data = {
        "family": cfg.family.value,
        "gamma": None if cfg.gamma is None else str(cfg.gamma),
        "reports": [list(values) for values in cfg.reports],
    }
    data.update(overrides)
    return ScenarioConfig.from_mapping(data)


def executor_for(args: argparse.Namespace) -> BaseExecutor:
    return create_executor(args.workers)


def cmd_scenario_run(args: argparse.Namespace, out: TextIO) -> ExitCode:
    table = run_scenario(scenario_config(args))
    write_lines(out, odds_table_lines(table, OutputFormat(args.format)))
    return ExitCode.SUCCESS


def cmd_scenario_check(args: argparse.Namespace, out: TextIO) -> ExitCode:
    fixture = load_fixture(args.family)
    table = run_scenario(ScenarioConfig(family=Family(args.family)))
    diff = compare_table(table, fixture)
    write_lines(out, table_diff_lines(diff))
    return ExitCode.SUCCESS if diff.ok else ExitCode.FAILURE


def _report_exit(reports: Sequence[VerificationReport], out: TextIO) -> ExitCode:
    for report in reports:
        write_lines(out, report.lines())
    return ExitCode.SUCCESS if all(report.ok for report in reports) else ExitCode.FAILURE


def cmd_verify_postulates(args: argparse.Namespace, out: TextIO) -> ExitCode:
    if args.atoms < 2:
        raise UsageError(detail=f"At least two atoms are needed, got {args.atoms}.")
    if args.samples < 1:
        raise UsageError(detail=f"The number of samples must be positive, got {args.samples}.")
    atoms = list(range(2, args.atoms + 1))
    executor = executor_for(args)
    try:
        reports = [
            verify_lemma1(atoms, args.samples, seed=args.seed, executor=executor),
            verify_lemma2(atoms, args.samples, seed=args.seed, executor=executor),
        ]
    finally:
        executor.shutdown()
    return _report_exit(reports, out)


def _proposition(driver: Callable[..., VerificationReport]) -> Handler:
    def handler(args: argparse.Namespace, out: TextIO) -> ExitCode:
        executor = executor_for(args)
        try:
            report = driver(args.atoms, executor=executor)
        finally:
            executor.shutdown()
        return _report_exit([report], out)

    return handler


def cmd_upgrade_run(args: argparse.Namespace, out: TextIO) -> ExitCode:
    script = load_script(args.script)
    write_lines(out, script_lines(run_script(script)))
    return ExitCode.SUCCESS


def _space_name(args: argparse.Namespace, script: Optional[UpgradeScript]) -> str:
    if script is not None:
        return "naive" if script.space == build_naive_space() else "scenario"
    return args.space or ("scenario" if args.policy == "conditioning" else "naive")


def _policy(args: argparse.Namespace, space: OutcomeSpace, space_name: str) -> BasePolicy:
    if args.policy == "conditioning":
        if space_name == "scenario":
            measure = build_prior(scenario_config(args))
        else:
            measure = HyperMeasure.uniform(space)
        return create_policy("conditioning", measure=measure)
    if args.policy == "factored":
        return create_policy("factored", space=space, factors=[[name] for name in space.names])
    return create_policy(args.policy, order=PlausibilityOrder.uniform(space))


def _evidence(
    args: argparse.Namespace, space: OutcomeSpace, space_name: str, script: Optional[UpgradeScript]
) -> List[Event]:
    if script is not None:
        return list(script.steps)
    if args.evidence:
        return [parse_event(space, literal) for literal in args.evidence]
    if space_name == "naive":
        return [parse_event(space, literal) for literal in DEFAULT_UPGRADES]
    if args.policy == "conditioning":
        return evidence_events(scenario_config(args), space)
    raise UsageError(detail="Give the evidence with --evidence or --script for this space.")


def cmd_iterated_check(args: argparse.Namespace, out: TextIO) -> ExitCode:
    script = load_script(args.script) if args.script else None
    space_name = _space_name(args, script)
    space = resolve_space(space_name)
    evidence = _evidence(args, space, space_name, script)
    if len(evidence) < 2:
        raise UsageError(detail="At least two pieces of evidence are needed.")
    policy = _policy(args, space, space_name)
    result = check_iterated(policy, evidence, POSTULATES[args.postulate], I2Reading(args.reading))
    write_lines(out, iterated_lines(result))
    if result.report.status is PostulateStatus.VIOLATED:
        return ExitCode.FAILURE
    return ExitCode.SUCCESS


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> ExitCode:
    space = OutcomeSpace.anonymous(args.atoms)
    if args.belief:
        beliefs = [parse_event(space, args.belief)]
    else:
        beliefs = [event for event in space.events() if not event.is_empty]
    for belief in beliefs:
        line = f"K={belief}\tpreorders={len(enumerate_preorders(space, belief))}"
        if args.operators:
            line += f"\toperators={len(enumerate_operators(space, belief))}"
        out.write(f"{line}\n")
    return ExitCode.SUCCESS


def _scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--family", choices=[family.value for family in Family], help="Likelihood family."
    )
    parser.add_argument(
        "--gamma", help="A rational in (0, 1) for a numeric run, 'eps' for the symbolic one."
    )


def _global_flags(parser: argparse.ArgumentParser, suppress: bool = False) -> None:
    # Subcommands suppress the defaults so flags given before the subcommand survive.
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="Log at debug level.",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=argparse.SUPPRESS if suppress else 1,
        help="Worker threads for the verification checks.",
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    parser = argparse.ArgumentParser(
        prog="beliefz",
        description="Exact hyperreal belief revision and its verification suites.",
    )
    _global_flags(parser)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    scenario_run = commands.add_parser(
        "scenario-run", parents=[common], help="Tabulate the odds of the coin scenario."
    )
    scenario_run.add_argument("config", nargs="?", help="Scenario config file (YAML).")
    _scenario_flags(scenario_run)
    scenario_run.add_argument(
        "--format", choices=[fmt.value for fmt in OutputFormat], default=OutputFormat.TSV.value
    )
    scenario_run.set_defaults(handler=cmd_scenario_run)

    scenario_check = commands.add_parser(
        "scenario-check", parents=[common], help="Compare a scenario run with its fixture."
    )
    scenario_check.add_argument("--family", required=True, help="Family whose fixture to check.")
    scenario_check.set_defaults(handler=cmd_scenario_check)

    postulates = commands.add_parser(
        "verify-postulates",
        parents=[common],
        help="Check the basic postulates on random measures and conditional probabilities.",
    )
    postulates.add_argument("--atoms", type=int, default=5, help="Largest space, from 2 atoms up.")
    postulates.add_argument("--samples", type=int, default=1000)
    postulates.add_argument("--seed", type=int, default=0)
    postulates.set_defaults(handler=cmd_verify_postulates)

    for name, driver, text in (
        ("verify-prop1", verify_prop1, "Represent every operator by a regular hyperreal measure."),
        ("verify-prop2", verify_prop2, "Represent every operator by a conditional probability."),
        ("verify-prop3", verify_prop3, "Collapse lexicographic systems into hyperreal measures."),
    ):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument("--atoms", type=int, required=True)
        command.set_defaults(handler=_proposition(driver))

    upgrade = commands.add_parser(
        "upgrade-run", parents=[common], help="Run a radical upgrade script."
    )
    upgrade.add_argument("script", help="Upgrade script file.")
    upgrade.set_defaults(handler=cmd_upgrade_run)

    iterated = commands.add_parser(
        "iterated-check", parents=[common], help="Check an iterated postulate along a sequence."
    )
    iterated.add_argument("--postulate", choices=list(POSTULATES), required=True)
    iterated.add_argument(
        "--policy", choices=["conditioning", "upgrade", "factored"], default="conditioning"
    )
    iterated.add_argument("--space", choices=["naive", "scenario"])
    iterated.add_argument(
        "--reading", choices=[reading.value for reading in I2Reading], default=I2Reading.GLOSS.value
    )
    iterated.add_argument("--evidence", nargs="+", metavar="LITERAL", help="Event literals.")
    iterated.add_argument("--script", help="Take the space and evidence from an upgrade script.")
    _scenario_flags(iterated)
    iterated.set_defaults(handler=cmd_iterated_check)

    enumerate_ = commands.add_parser(
        "enumerate", parents=[common], help="Count preorders and operators per belief set."
    )
    enumerate_.add_argument("--atoms", type=int, required=True)
    enumerate_.add_argument("--belief", metavar="LITERAL", help="Only this belief set.")
    enumerate_.add_argument("--operators", action="store_true", help="Also count operators.")
    enumerate_.set_defaults(handler=cmd_enumerate)

    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.verbose)
    handler: Handler = args.handler
    try:
        return int(handler(args, out))
    except (BeliefzException, BaseLookupError) as exc:
        sys.stderr.write(f"beliefz {args.command}: {exc}\n")
        return int(ExitCode.USAGE)


def run() -> None:
    sys.exit(main())

