from typing import Optional, TextIO

from sympy.polys.domains import QQ_I

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.cohomology import Theory, cohomology
from pluripotential.core.complexes import Bicomplex
from pluripotential.core.realbico import realify_bicomplex, realify_cochain
from pluripotential.io.report import dims_payload, grid_frame


class Command(CommandBase):
    def __init__(self, document: str, theory: str = "bc", config_path: Optional[str] = None,
                 table_format: Optional[str] = None, output: Optional[TextIO] = None) -> None:
        super().__init__("cohomology", config_path, table_format, output)
        self.document = document
        self.theory = Theory(theory)

    def execute(self):
        obj = self.load(self.document, ("cochain", "bicomplex"))
        gaussian = obj.domain == QQ_I
        if gaussian:
            # complex dimensions are half the dimensions over the rationals
            obj = realify_bicomplex(obj) if isinstance(obj, Bicomplex) else realify_cochain(obj)
        table = cohomology(obj, self.theory)
        dims = {key: dim // 2 if gaussian else dim for key, dim in table.dims.items()}
        report = self.new_report(f"{self.theory.value} cohomology, total dimension {sum(dims.values())}")
        report.add_table("dimensions", grid_frame(dims, table.entries))
        report.payload = {
            "theory": self.theory.value,
            "field": "Q_i" if gaussian else "Q",
            "dims": dims_payload(dims),
            "total_dim": sum(dims.values()),
        }
        return report, True
