from typing import Optional, TextIO

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.cohomology import total_cohomology
from pluripotential.core.realbico import bigolin_real
from pluripotential.io.report import dims_payload, grid_frame, space_frame


class Command(CommandBase):
    """The rational Bigolin complex of the σ-fixed and σ-anti-fixed vectors."""
    def __init__(self, document: str, write_path: Optional[str] = None, config_path: Optional[str] = None,
                 table_format: Optional[str] = None, output: Optional[TextIO] = None) -> None:
        super().__init__("real-bigolin", config_path, table_format, output)
        self.document = document
        self.write_path = write_path

    def execute(self):
        a = self.load(self.document, ("real_bicomplex",))
        real = bigolin_real(a)
        self.write(real.complex, self.write_path)
        table = total_cohomology(real.complex)
        report = self.new_report(f"real Bigolin complex in degrees {list(real.complex.support)}")
        report.add_table("dimensions", space_frame(real.complex))
        report.add_table("cohomology", grid_frame(table.dims, table.entries))
        report.payload = {"dims": dims_payload(real.complex.dims), "cohomology": dims_payload(table.dims)}
        return report, True
