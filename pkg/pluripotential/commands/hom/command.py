from typing import Optional, TextIO

from sympy.polys.domains import QQ

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.complexes import Bicomplex, internal_hom, morphism_space
from pluripotential.core.enrichment import morphisms_modulo_homotopy
from pluripotential.io.report import dims_payload, space_frame


class Command(CommandBase):
    """The internal Hom of two complexes, with the number of morphisms between them."""
    def __init__(self, first: str, second: str, write_path: Optional[str] = None, config_path: Optional[str] = None,
                 table_format: Optional[str] = None, output: Optional[TextIO] = None) -> None:
        super().__init__("hom", config_path, table_format, output)
        self.first = first
        self.second = second
        self.write_path = write_path

    def execute(self):
        a = self.load(self.first, ("cochain", "bicomplex"))
        b = self.load(self.second, (a.KIND,))
        hom = internal_hom(a, b)
        self.write(hom, self.write_path)
        report = self.new_report(f"internal Hom of total dimension {hom.total_dim}")
        report.add_table("dimensions", space_frame(hom))
        report.payload = {"dims": dims_payload(hom.dims), "total_dim": hom.total_dim}
        if hom.domain == QQ:
            report.payload["morphisms"] = morphism_space(a, b).dim
            report.add_line(f"morphisms: {report.payload['morphisms']}")
            if isinstance(a, Bicomplex):
                report.payload["morphisms_modulo_homotopy"] = morphisms_modulo_homotopy(a, b)
                report.add_line(f"modulo homotopy: {report.payload['morphisms_modulo_homotopy']}")
        return report, True
