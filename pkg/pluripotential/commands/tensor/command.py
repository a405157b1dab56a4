from typing import Optional, TextIO

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.complexes import tensor
from pluripotential.io.report import dims_payload, space_frame


class Command(CommandBase):
    def __init__(self, first: str, second: str, write_path: Optional[str] = None, config_path: Optional[str] = None,
                 table_format: Optional[str] = None, output: Optional[TextIO] = None) -> None:
        super().__init__("tensor", config_path, table_format, output)
        self.first = first
        self.second = second
        self.write_path = write_path

    def execute(self):
        a = self.load(self.first, ("cochain", "bicomplex"))
        b = self.load(self.second, (a.KIND,))
        product = tensor(a, b)
        self.write(product, self.write_path)
        report = self.new_report(f"tensor product of total dimension {product.total_dim}")
        report.add_table("dimensions", space_frame(product))
        report.payload = {"dims": dims_payload(product.dims), "total_dim": product.total_dim}
        return report, True
