from typing import Optional, TextIO

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.realbico import inflate_real, validate_real
from pluripotential.io.report import dims_payload, space_frame


class Command(CommandBase):
    def __init__(self, document: str, write_path: Optional[str] = None, config_path: Optional[str] = None,
                 table_format: Optional[str] = None, output: Optional[TextIO] = None) -> None:
        super().__init__("real-inflate", config_path, table_format, output)
        self.document = document
        self.write_path = write_path

    def execute(self):
        c = self.load(self.document, ("cochain",))
        inflated = inflate_real(c)
        self.write(inflated, self.write_path)
        validation = validate_real(inflated)
        report = self.new_report(f"real inflation of total dimension {inflated.bicomplex.total_dim}")
        report.add_table("dimensions", space_frame(inflated.bicomplex))
        report.payload = {"dims": dims_payload(inflated.bicomplex.dims), "valid": validation.is_valid}
        return report, validation.is_valid
