from typing import Optional, TextIO

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.realbico import validate_real
from pluripotential.io.report import space_frame, validation_report


class Command(CommandBase):
    """Checks a real bicomplex, including σσ = id and σ∂σ = ∂̄."""
    def __init__(self, document: str, config_path: Optional[str] = None, table_format: Optional[str] = None,
                 output: Optional[TextIO] = None) -> None:
        super().__init__("real-validate", config_path, table_format, output)
        self.document = document

    def execute(self):
        a = self.load(self.document, ("real_bicomplex",), check=False)
        validation = validate_real(a)
        report = validation_report(validation, self.config)
        report.add_table("dimensions", space_frame(a.bicomplex))
        return report, validation.is_valid
