import argparse
import logging
import sys
from typing import List, Optional, TextIO

from infrastructure.log_handler import logging_handler
from pluripotential.commands.command_factory import CommandFactory
from pluripotential.config.engine_config import EngineConfig
from pluripotential.core.cohomology import Theory

ONE_DOCUMENT = ("validate", "cohomology", "ddbar", "bigolin", "inflate", "check-weq",
                "real-validate", "real-inflate", "real-bigolin")
TWO_DOCUMENTS = ("check-homotopy", "tensor", "hom", "dg-hom")
ADJUNCTION = ("verify-adjunction", "real-verify-adjunction")
WRITERS = ("bigolin", "inflate", "tensor", "hom", "dg-hom", "real-inflate", "real-bigolin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pluripotential",
        description="Exact pluripotential homotopy computations on JSON documents",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("-q", "--quiet", action="count", default=0,
                        help="Be more quiet.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Be more verbose. Both -v and -q may be used multiple times.")
    parser.add_argument('--log-file', dest="log_file", type=str, nargs='?')
    parser.add_argument('--config', dest="config_path", type=str, help="Engine configuration JSON")
    parser.add_argument('--table-format', dest="table_format", type=str, help="tabulate table format")

    commands = parser.add_subparsers(dest="command", required=True)
    subparsers = {}
    for name in ONE_DOCUMENT:
        subparsers[name] = commands.add_parser(name)
        subparsers[name].add_argument("document", help="Document path or fixture_<name>")
    for name in TWO_DOCUMENTS:
        subparsers[name] = commands.add_parser(name)
        subparsers[name].add_argument("first")
        subparsers[name].add_argument("second")
    for name in ADJUNCTION:
        subparsers[name] = commands.add_parser(name)
        subparsers[name].add_argument("complex_document", help="Cochain complex document")
        subparsers[name].add_argument("bicomplex_document", help="Bicomplex document")
    for name in WRITERS:
        subparsers[name].add_argument("--write", dest="write_path", type=str, help="Write the result document here")

    subparsers["cohomology"].add_argument("--theory", choices=[theory.value for theory in Theory], default="bc")
    subparsers["bigolin"].add_argument("-p", type=int, default=0)
    subparsers["bigolin"].add_argument("-q", type=int, default=0)
    subparsers["dg-hom"].add_argument("--simplex", type=int, help="Compare simplicial Hom dimensions on Δⁿ")
    return parser


def run(argv: Optional[List[str]] = None, output: Optional[TextIO] = None) -> int:
    """
    Parses a command line, configures logging and runs the command.

    Args:
        argv (Optional[List[str]]): Arguments without the program name. Defaults to sys.argv[1:].
        output (Optional[TextIO]): Report stream. Defaults to stdout.

    Returns:
        int: The command's exit status; argparse usage errors exit with 2 on their own.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    args = logging_handler(args, EngineConfig.load(args.config_path).logging_config)
    logging.debug(f"{args=}")
    kwargs = {key: value for key, value in vars(args).items() if key not in ("command", "verbose", "quiet", "log_file")}
    return CommandFactory.launch_command_and_run_request_processor(args.command, output=output, **kwargs)


if __name__ == "__main__":
    sys.exit(run())
