"""
Primary entry point for the cliquebound CLI application
"""

import os
import sys
import logging
import colorama
import argparse

from .config import Config
from .version import get_version
from .logging import setup_logging
from .loaders import open_loader, resolve_argument
from .types import Eigensolver, Keep, ReportFormat
from .report import write_counterexamples, write_report, write_summary
from .harness import run_corpus, run_gnp_search, run_kneser_family, run_sweep
from .exceptions import CliqueBoundException, CommandError, ConsistencyError


logger = logging.getLogger("cliquebound")


def invariants(args: argparse.Namespace) -> int:
    """
    CLI entry point for evaluating one graph given as graph6 or as a file.
    """
    result = run_corpus(resolve_argument(args.graph), load_config(args), campaign="invariants")
    return report(args, result)


def check(args: argparse.Namespace) -> int:
    """
    CLI entry point for verifying every graph in a corpus file.
    """
    result = run_corpus(open_loader(args.corpus), load_config(args))
    return report(args, result)


def sweep(args: argparse.Namespace) -> int:
    """
    CLI entry point for the exhaustive labeled sweep.
    """
    result = run_sweep(args.n_max, load_config(args), n_min=args.n_min)
    return report(args, result)


def gnp(args: argparse.Namespace) -> int:
    """
    CLI entry point for the seeded G(n, p) search.
    """
    result = run_gnp_search(args.n, args.p, args.trials, args.seed, load_config(args))
    return report(args, result)


def kneser(args: argparse.Namespace) -> int:
    """
    CLI entry point for the KG_{p,2} family check.
    """
    result = run_kneser_family(args.p_min, args.p_max, load_config(args))
    return report(args, result)


##########################################################################
## CLI Helpers
##########################################################################

def load_config(args: argparse.Namespace) -> Config:
    """
    Loads the configuration file (if any) and applies the command line flags on
    top of it.
    """
    config = Config.load(args.config) if args.config else Config()

    tolerances = {
        "zero_eig_tol": args.tol_zero,
        "identity_tol": args.tol_identity,
        "eigensolver": args.eigensolver,
    }
    solver = {
        "node_budget": args.node_budget,
        "time_budget": args.time_budget,
        "with_chi": args.with_chi or None,
    }
    campaign = {
        "workers": args.workers,
        "keep": args.keep,
        "progress": args.progress or None,
    }

    overrides = {}
    for key, values in (("tolerances", tolerances), ("solver", solver), ("campaign", campaign)):
        values = {k: v for k, v in values.items() if v is not None}
        if values:
            overrides[key] = config[key].copy(**values)

    if overrides:
        config = config.copy(**overrides)
    logger.debug(f"effective configuration: {config!r}")
    return config


def report(args: argparse.Namespace, result) -> int:
    """
    Writes the records and the summary and returns the campaign exit code. With
    --out the summary is written to <out>.summary.json; otherwise records stream
    to stdout and the summary goes to stderr.
    """
    if args.out:
        write_report(result.records, result.summary, args.format, args.out)
    else:
        write_report(result.records, None, args.format, None)
        write_summary(result.summary, sys.stderr)

    if args.counterexamples:
        write_counterexamples(result.summary, args.counterexamples)

    code = result.exit_code
    if code == 1:
        print(colorama.Fore.YELLOW + "falsifiable bound violated; see counterexamples", file=sys.stderr)
    elif code == 3:
        print(colorama.Fore.RED + "internal consistency failure", file=sys.stderr)
    return code


class CliqueBoundFormatter(argparse.ArgumentDefaultsHelpFormatter):

    def __init__(self, *args, **kwargs):
        if "width" not in kwargs:
            try:
                kwargs["width"] = os.get_terminal_size().columns
            except OSError:
                pass

        if "max_help_position" not in kwargs:
            kwargs["max_help_position"] = 32

        super().__init__(*args, **kwargs)


class Environ(argparse.Action):

    def __init__(self, envvar, required=False, default=None, **kwargs):
        if envvar:
            if envvar in os.environ:
                default = os.environ[envvar]
        if required and default:
            required = False
        super(Environ, self).__init__(default=default, required=required, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)


class EnvironFlag(argparse.Action):
    """
    A store_true flag whose default is read from an environment variable.
    """

    TRUTHY = {"1", "true", "yes", "on"}

    def __init__(self, envvar, default=False, **kwargs):
        if envvar and envvar in os.environ:
            default = os.environ[envvar].strip().lower() in self.TRUTHY
        super(EnvironFlag, self).__init__(nargs=0, default=default, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, True)


def positive_int(value: str) -> int:
    try:
        value = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def positive_float(value: str) -> float:
    try:
        value = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {value!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value}")
    return value


##########################################################################
## CLI Main Entry Point
##########################################################################

# argparse application description
DESCRIPTION = "Computes spectral and combinatorial graph invariants and verifies clique number bounds."
EPILOG = "Exit codes: 0 clean, 1 falsifiable bound violated, 2 input error, 3 consistency failure."

# arguments shared by every command
COMMON = {
    ("-c", "--config"): {
        "metavar": "PATH", "default": None, "type": str,
        "action": Environ, "envvar": "CLIQUEBOUND_CONFIG",
        "help": "path to a .yaml or .json configuration file (env: $CLIQUEBOUND_CONFIG)",
    },
    "--tol-zero": {
        "metavar": "TOL", "default": None, "type": positive_float,
        "action": Environ, "envvar": "CLIQUEBOUND_TOL_ZERO",
        "help": "eigenvalues within TOL of zero count as zero; 1e-8 * n if unset (env: $CLIQUEBOUND_TOL_ZERO)",
    },
    "--tol-identity": {
        "metavar": "TOL", "default": None, "type": positive_float,
        "action": Environ, "envvar": "CLIQUEBOUND_TOL_IDENTITY",
        "help": "tolerance of the trace identities; 1e-6 * 2m if unset (env: $CLIQUEBOUND_TOL_IDENTITY)",
    },
    "--eigensolver": {
        "default": None, "choices": [str(e) for e in Eigensolver],
        "action": Environ, "envvar": "CLIQUEBOUND_EIGENSOLVER",
        "help": "eigensolver used for spectra, jacobi unless configured (env: $CLIQUEBOUND_EIGENSOLVER)",
    },
    ("-f", "--format"): {
        "default": str(ReportFormat.JSONL), "choices": [str(f) for f in ReportFormat],
        "action": Environ, "envvar": "CLIQUEBOUND_FORMAT",
        "help": "format of the record report (env: $CLIQUEBOUND_FORMAT)",
    },
    ("-o", "--out"): {
        "metavar": "PATH", "default": None, "type": str,
        "action": Environ, "envvar": "CLIQUEBOUND_OUT",
        "help": "write records to PATH and the summary to PATH.summary.json (env: $CLIQUEBOUND_OUT)",
    },
    ("-w", "--workers"): {
        "metavar": "W", "default": None, "type": positive_int,
        "action": Environ, "envvar": "CLIQUEBOUND_WORKERS",
        "help": "number of worker processes (env: $CLIQUEBOUND_WORKERS)",
    },
    "--node-budget": {
        "metavar": "B", "default": None, "type": positive_int,
        "action": Environ, "envvar": "CLIQUEBOUND_NODE_BUDGET",
        "help": "search nodes per exact solve before it is aborted (env: $CLIQUEBOUND_NODE_BUDGET)",
    },
    "--time-budget": {
        "metavar": "SECS", "default": None, "type": positive_float,
        "action": Environ, "envvar": "CLIQUEBOUND_TIME_BUDGET",
        "help": "seconds per exact solve before it is aborted (env: $CLIQUEBOUND_TIME_BUDGET)",
    },
    "--with-chi": {
        "action": EnvironFlag, "envvar": "CLIQUEBOUND_WITH_CHI",
        "help": "also compute the exact chromatic number (env: $CLIQUEBOUND_WITH_CHI)",
    },
    "--keep": {
        "default": None, "choices": [str(k) for k in Keep],
        "action": Environ, "envvar": "CLIQUEBOUND_KEEP",
        "help": "which records to report, all for corpora and families and violations otherwise (env: $CLIQUEBOUND_KEEP)",
    },
    "--counterexamples": {
        "metavar": "PATH", "default": None, "type": str,
        "help": "write confirmed counterexamples to PATH as a graph6 corpus",
    },
    "--progress": {
        "action": EnvironFlag, "envvar": "CLIQUEBOUND_PROGRESS",
        "help": "show a progress bar on stderr (env: $CLIQUEBOUND_PROGRESS)",
    },
    "--verbose": {
        "action": "store_true", "default": False,
        "help": "log per-graph detail",
    },
    ("-q", "--quiet"): {
        "action": "store_true", "default": False,
        "help": "only log warnings and errors",
    },
}

# argparse commands
CMDS = {
    "invariants": {
        "help": "compute every invariant and bound of a graph",
        "func": invariants,
        "args": {
            "graph": {
                "metavar": "GRAPH",
                "help": "a graph6 string, a graph6 file or an edge-list file",
            },
        },
    },
    "check": {
        "help": "verify every bound on each graph of a graph6 corpus",
        "func": check,
        "args": {
            "--corpus": {
                "metavar": "FILE", "required": True, "type": str,
                "help": "graph6 file with one graph per line",
            },
        },
    },
    "sweep": {
        "help": "verify every bound on all labeled graphs up to n vertices",
        "func": sweep,
        "args": {
            "--n-max": {
                "metavar": "K", "required": True, "type": positive_int,
                "help": "largest number of vertices (at most 8)",
            },
            "--n-min": {
                "metavar": "K", "default": 1, "type": positive_int,
                "help": "smallest number of vertices",
            },
        },
    },
    "gnp": {
        "help": "verify every bound on seeded G(n, p) random graphs",
        "func": gnp,
        "args": {
            "--n": {
                "metavar": "N", "required": True, "type": positive_int,
                "help": "number of vertices",
            },
            "--p": {
                "metavar": "P", "required": True, "type": float,
                "help": "edge probability in [0, 1]",
            },
            "--trials": {
                "metavar": "T", "required": True, "type": positive_int,
                "help": "number of graphs to sample",
            },
            "--seed": {
                "metavar": "S", "required": True, "type": int,
                "help": "master seed; trial seeds are derived from it",
            },
        },
    },
    "kneser": {
        "help": "check the conjectured bound on the Kneser graphs KG_{p,2}",
        "func": kneser,
        "args": {
            "--p-min": {
                "metavar": "A", "default": 4, "type": int,
                "help": "smallest ground set size (at least 4)",
            },
            "--p-max": {
                "metavar": "B", "default": 12, "type": int,
                "help": "largest ground set size",
            },
        },
    },
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquebound",
        description=DESCRIPTION,
        epilog=EPILOG,
        formatter_class=CliqueBoundFormatter,
    )

    # Add version information
    parser.add_argument(
        "-v", "--version",
        action="version",
        version=f"%(prog)s {get_version()}",
        help="Show the version and exit.",
    )

    # Create subparsers for each command
    subparsers = parser.add_subparsers(title="actions")
    for cmd, cargs in CMDS.items():
        ckws = {"help": cargs.get("help"), "formatter_class": CliqueBoundFormatter, "epilog": EPILOG}
        subparser = subparsers.add_parser(cmd, **ckws)
        subparser.set_defaults(func=cargs.get("func"))

        for pargs, kwargs in {**cargs.get("args", {}), **COMMON}.items():
            if isinstance(pargs, str):
                pargs = (pargs,)
            subparser.add_argument(*pargs, **kwargs)
    return parser


def main(argv=None):
    """
    Main entry point for the cliquebound CLI application.
    """
    colorama.init(autoreset=True)
    parser = build_parser()

    # Execute the argparse CLI parser and associated command
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        sys.exit(2)

    if args.verbose:
        setup_logging(logging.DEBUG)
    elif args.quiet:
        setup_logging(logging.WARNING)

    try:
        code = args.func(args)
    except CommandError as e:
        parser.error(e)
    except ConsistencyError as e:
        print(colorama.Fore.RED + str(e), file=sys.stderr)
        sys.exit(3)
    except CliqueBoundException as e:
        print(colorama.Fore.RED + str(e), file=sys.stderr)
        sys.exit(2)
    sys.exit(code)


if __name__ == "__main__":
    main()
