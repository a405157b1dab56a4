from typing import Optional, TextIO

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.cohomology import total_cohomology
from pluripotential.core.enrichment import dg_hom, morphisms_modulo_homotopy, simplicial_hom_dim
from pluripotential.io.report import dims_payload, grid_frame, space_frame


class Command(CommandBase):
    """
    The mapping complex [a, b] = 𝓔 Hom(a, b).

    Exits 0 iff H⁰ of the mapping complex counts morphisms modulo homotopy and, with --simplex n,
    both sides of the simplicial Hom agree.
    """
    def __init__(self, first: str, second: str, simplex: Optional[int] = None, write_path: Optional[str] = None,
                 config_path: Optional[str] = None, table_format: Optional[str] = None,
                 output: Optional[TextIO] = None) -> None:
        super().__init__("dg-hom", config_path, table_format, output)
        self.first = first
        self.second = second
        self.simplex = simplex
        self.write_path = write_path

    def execute(self):
        a = self.load(self.first, ("bicomplex",))
        b = self.load(self.second, ("bicomplex",))
        mapping = dg_hom(a, b)
        self.write(mapping, self.write_path)
        table = total_cohomology(mapping)
        modulo_homotopy = morphisms_modulo_homotopy(a, b)
        holds = table.dim(0) == modulo_homotopy
        report = self.new_report(f"mapping complex in degrees {list(mapping.support)}")
        report.add_table("dimensions", space_frame(mapping))
        report.add_table("cohomology", grid_frame(table.dims, table.entries))
        report.add_line(f"H^0 = {table.dim(0)}, morphisms modulo homotopy = {modulo_homotopy}")
        report.payload = {
            "dims": dims_payload(mapping.dims),
            "cohomology": dims_payload(table.dims),
            "h0": table.dim(0),
            "morphisms_modulo_homotopy": modulo_homotopy,
        }
        if self.simplex is not None:
            dims = simplicial_hom_dim(a, b, self.simplex)
            report.add_line(f"n = {self.simplex}: chain maps {dims.chain_maps}, bicomplex maps {dims.bicomplex_maps}")
            report.payload["simplicial"] = {"n": self.simplex, **dims._asdict(), "agree": dims.agree}
            holds = holds and dims.agree
        return report, holds
