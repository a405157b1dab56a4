from abc import ABC, abstractmethod
import logging
import os
import sys
from typing import Iterable, Optional, TextIO, Tuple

from setproctitle import setproctitle

from infrastructure.log_handler import get_base_path
from pluripotential.config.engine_config import EngineConfig
from pluripotential.core.exception import (
    DomainRestrictionError, MembershipError, PluripotentialError, ShapeError, ValidationError,
)
from pluripotential.io.document import build, check_object, dump, read_envelope
from pluripotential.io.exception import DocumentError
from pluripotential.io.report import Report, validation_report

EXIT_SUCCESS = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

FIXTURE_PREFIX = "fixture_"
FIXTURE_DIRECTORY = "/pluripotential/fixtures/"


class CommandBase(ABC):
    """
    Base class of every CLI command.
    It loads documents, runs the engine through `execute` and turns the outcome into a report and an exit status.

    Attributes:
        command (str): The command name, lower case.
        config (EngineConfig): Engine settings, possibly overridden by flags.
        output (TextIO): Where the report is written.
    """
    __PROCESS_PREFIX = "pluripotential_"

    def __init__(self, command: str, config_path: Optional[str] = None, table_format: Optional[str] = None,
                 output: Optional[TextIO] = None) -> None:
        """
        Initialize the CommandBase object.

        Args:
            command (str): Name of the command.
            config_path (Optional[str]): Engine configuration file. Defaults to the shipped one.
            table_format (Optional[str]): tabulate format overriding the configured one.
            output (Optional[TextIO]): Report stream. Defaults to stdout.
        """
        setproctitle(self.__PROCESS_PREFIX + command.lower().replace("-", "_"))
        self.command: str = command.lower()
        self.config = EngineConfig.load(config_path)
        if table_format:
            self.config.table_format = table_format
        self.output = output or sys.stdout
        self.logger = self.init_logging()

    def init_logging(self) -> logging.Logger:
        return logging.getLogger(type(self).__module__)

    @staticmethod
    def resolve_path(path: str) -> str:
        """Maps `fixture_<name>` to the shipped fixture file unless a file by that name exists."""
        if os.path.exists(path) or not path.startswith(FIXTURE_PREFIX):
            return path
        return get_base_path() + FIXTURE_DIRECTORY + path[len(FIXTURE_PREFIX):] + ".json"

    def load(self, path: str, kinds: Iterable[str], check: bool = True):
        """
        Reads and builds a document.

        Args:
            path (str): File path or fixture name.
            kinds (Iterable[str]): Document kinds the command accepts.
            check (bool): Whether to validate the object.

        Raises:
            DocumentError: If the file is malformed or of the wrong kind.
            ValidationError: If check is set and the object is invalid.
        """
        kinds = tuple(kinds)
        resolved = self.resolve_path(path)
        self.logger.debug(f"{path=} {resolved=}")
        with open(resolved, "r", encoding="utf-8") as f:
            envelope = read_envelope(f.read())
        if envelope.kind not in kinds:
            raise DocumentError("$.kind", f"{self.command} takes {' or '.join(kinds)}, got {envelope.kind}")
        obj = build(envelope)
        if check:
            report = check_object(obj)
            if not report.is_valid:
                raise ValidationError(report)
        return obj

    def write(self, obj, path: Optional[str]) -> None:
        if path:
            dump(obj, path)
            self.logger.info(f"Wrote {type(obj).__name__} to {path}")

    def new_report(self, title: str) -> Report:
        return Report(f"{self.command}: {title}", self.config)

    @abstractmethod
    def execute(self) -> Tuple[Report, bool]:
        """
        Runs the command.
        Implemented by the child class.

        Returns:
            Tuple[Report, bool]: The report and whether the checked property holds.
        """
        pass

    def process_request(self) -> int:
        """
        Executes the command and writes its report.

        Returns:
            int: 0 on success, 1 on a negative verdict or invalid input object, 2 on usage or document errors.
        """
        try:
            report, holds = self.execute()
        except ValidationError as e:
            self.logger.error(f"{self.command}: {e}")
            self.output.write(validation_report(e.report, self.config).render())
            return EXIT_NEGATIVE
        except MembershipError as e:
            self.logger.error(f"{self.command}: {e}")
            return EXIT_NEGATIVE
        except (DocumentError, DomainRestrictionError, ShapeError, OSError) as e:
            self.logger.error(f"{self.command}: {e}")
            return EXIT_USAGE
        except PluripotentialError as e:
            self.logger.error(f"{self.command}: {e}")
            return EXIT_NEGATIVE
        self.output.write(report.render())
        status = EXIT_SUCCESS if holds else EXIT_NEGATIVE
        self.logger.info(f"{self.command=} {status=}")
        return status
