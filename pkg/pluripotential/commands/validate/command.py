from typing import Optional, TextIO

from pluripotential.commands.command_base import CommandBase
from pluripotential.io.document import KINDS, check_object
from pluripotential.io.report import space_frame, validation_report


class Command(CommandBase):
    """Checks d² = 0, anticommutation and commuting squares of any document."""
    def __init__(self, document: str, config_path: Optional[str] = None, table_format: Optional[str] = None,
                 output: Optional[TextIO] = None) -> None:
        super().__init__("validate", config_path, table_format, output)
        self.document = document

    def execute(self):
        obj = self.load(self.document, KINDS, check=False)
        validation = check_object(obj)
        report = validation_report(validation, self.config)
        space = getattr(obj, "bicomplex", None) or getattr(obj, "source", None) or obj
        report.add_table("dimensions" if space is obj else "source dimensions", space_frame(space))
        return report, validation.is_valid
