# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""Parser."""
from __future__ import annotations

from .. import config

ORDER_COMMANDS = {
    "verify-hopf": "Hopf axioms, derived counit and antipode, quantum Casimir",
    "verify-rmatrix": "universal R, its controls and the 3x3 matrix layer",
    "verify-boson": "boson realization and the Casimir value",
    "verify-all": "every check above, classification included",
}
PLAIN_COMMANDS = {
    "verify-frt": "RTT relations and the Hopf structure of the quantum coordinates",
    "verify-sklyanin": "Poisson brackets of the coordinates against the r-matrix bracket",
}


def _build_parser():
    """Build parser object."""
    from argparse import ArgumentDefaultsHelpFormatter, ArgumentParser
    from functools import partial
    from pathlib import Path

    from packaging.version import Version

    def _path_exists(path, parser):
        """Ensure a given path exists."""
        if path is None:
            raise parser.error("No value provided!")
        path = Path(path).absolute()
        if not path.exists():
            raise parser.error(f"Path does not exist: <{path}>.")
        return path

    def _is_file(path, parser):
        """Ensure a given path exists and it is a file."""
        path = _path_exists(path, parser)
        if not path.is_file():
            raise parser.error(f"Path should point to a file (or symlink of file): <{path}>.")
        return path

    def _min_one(value, parser):
        """Ensure an argument is not lower than 1."""
        value = int(value)
        if value < 1:
            raise parser.error("Argument can't be less than one.")
        return value

    verstr = f"qoscillator v{config.environment.version}"
    currentv = Version(config.environment.version)
    is_release = not any((currentv.is_devrelease, currentv.is_prerelease, currentv.is_postrelease))

    parser = ArgumentParser(
        description=f"qoscillator: exact checks of the Jordanian oscillator quantum group "
        f"v{config.environment.version}",
        formatter_class=ArgumentDefaultsHelpFormatter,
    )
    if not is_release:
        parser.epilog = "This is a development version; reports may change between commits."
    IsFile = partial(_is_file, parser=parser)
    PositiveInt = partial(_min_one, parser=parser)

    parser.add_argument("--version", action="version", version=verstr)

    # Options shared by every subcommand, accepted after the subcommand name
    common = ArgumentParser(add_help=False)
    g_out = common.add_argument_group("Report options")
    g_out.add_argument(
        "--output",
        "-o",
        action="store",
        type=Path,
        help="write the report to this file instead of standard output",
    )
    g_out.add_argument(
        "--format",
        dest="output_format",
        choices=("json", "text"),
        default=config.execution.output_format,
        help="report format (text is derived from the JSON document)",
    )

    g_perfm = common.add_argument_group("Options to handle performance")
    g_perfm.add_argument(
        "--nprocs",
        "--nthreads",
        action="store",
        type=PositiveInt,
        default=config.execution.nprocs,
        help="number of processes running independent checks",
    )
    g_perfm.add_argument(
        "--seed",
        "--random-seed",
        dest="_random_seed",
        action="store",
        type=int,
        default=None,
        help="initialize the random number generator of the randomized checks",
    )

    g_other = common.add_argument_group("Other options")
    g_other.add_argument(
        "-v",
        "--verbose",
        dest="verbose_count",
        action="count",
        default=0,
        help="increases log verbosity for each occurence, debug level is -vvv",
    )
    g_other.add_argument(
        "--config-file",
        action="store",
        metavar="FILE",
        type=IsFile,
        help="use pre-generated configuration file; values in the file are overridden "
        "by command line arguments",
    )
    g_other.add_argument(
        "-w",
        "--work-dir",
        action="store",
        type=Path,
        default=config.execution.work_dir,
        help="path where the run configuration is stored",
    )

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    classify = subparsers.add_parser(
        "classify",
        parents=[common],
        help="classify the Lie bialgebra structures of a Lie algebra",
        formatter_class=ArgumentDefaultsHelpFormatter,
    )
    source = classify.add_mutually_exclusive_group()
    source.add_argument(
        "--algebra",
        dest="algebra_file",
        metavar="FILE",
        type=IsFile,
        help="TOML description of the Lie algebra (basis and brackets)",
    )
    source.add_argument(
        "--preset",
        choices=("h4",),
        default=config.execution.preset,
        help="built-in Lie algebra",
    )

    for name, description in ORDER_COMMANDS.items():
        sub = subparsers.add_parser(
            name,
            parents=[common],
            help=description,
            formatter_class=ArgumentDefaultsHelpFormatter,
        )
        sub.add_argument(
            "--order",
            "-N",
            action="store",
            type=PositiveInt,
            default=config.execution.order,
            help="truncation order of the power series in z",
        )
    for name, description in PLAIN_COMMANDS.items():
        subparsers.add_parser(
            name,
            parents=[common],
            help=description,
            formatter_class=ArgumentDefaultsHelpFormatter,
        )
    return parser


def parse_args(args=None, namespace=None):
    """Parse args and run further checks on the command line."""
    import logging
    from argparse import ArgumentParser
    from pathlib import Path

    from ..algebra.lie import JacobiViolation, LieAlgebraFileError, load_lie_algebra

    # A replayed file sets the defaults, so only explicit options override it
    preparser = ArgumentParser(add_help=False)
    preparser.add_argument("--config-file", type=Path)
    replay = preparser.parse_known_args(args)[0].config_file
    if replay is not None and replay.is_file():
        skip = {"execution": ("run_uuid",)}
        config.load(replay, skip=skip)

    parser = _build_parser()
    opts = parser.parse_args(args, namespace)
    if opts.config_file:
        config.loggers.cli.info(f"Loaded previous configuration file {opts.config_file}")

    config.execution.log_level = int(max(25 - 5 * opts.verbose_count, logging.DEBUG))
    config.from_dict(vars(opts))

    # Logger of the front end
    build_log = config.loggers.cli

    if config.execution.nprocs > (config.environment.cpu_count or 1):
        build_log.warning(
            f"Requested {config.execution.nprocs} processes but only "
            f"{config.environment.cpu_count} CPUs are available"
        )

    # Input files are read once here so syntax errors surface as usage errors
    if config.execution.algebra_file is not None:
        try:
            load_lie_algebra(config.execution.algebra_file)
        except (LieAlgebraFileError, JacobiViolation) as exc:
            parser.error(f"Cannot read Lie algebra: {exc}")

    config.execution.work_dir.mkdir(exist_ok=True, parents=True)
