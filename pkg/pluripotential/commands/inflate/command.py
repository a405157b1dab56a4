from typing import Optional, TextIO

from sympy.polys.domains import QQ

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.cohomology import is_pluripotential_acyclic, is_pluripotential_weq
from pluripotential.core.complexes import CochainComplex
from pluripotential.core.inflation import inflate, inflate_map
from pluripotential.io.report import dims_payload, space_frame


class Command(CommandBase):
    """Inflates a cochain complex or a chain map."""
    def __init__(self, document: str, write_path: Optional[str] = None, config_path: Optional[str] = None,
                 table_format: Optional[str] = None, output: Optional[TextIO] = None) -> None:
        super().__init__("inflate", config_path, table_format, output)
        self.document = document
        self.write_path = write_path

    def execute(self):
        obj = self.load(self.document, ("cochain", "chain_map"))
        if isinstance(obj, CochainComplex):
            inflated = inflate(obj)
            space = inflated
        else:
            inflated = inflate_map(obj)
            space = inflated.target
        self.write(inflated, self.write_path)
        report = self.new_report(f"Inf has total dimension {space.total_dim}")
        report.add_table("dimensions" if inflated is space else "target dimensions", space_frame(space))
        report.payload = {"dims": dims_payload(space.dims), "total_dim": space.total_dim}
        if obj.domain == QQ:
            if inflated is space:
                report.payload["pluripotentially_acyclic"] = is_pluripotential_acyclic(inflated)
            else:
                report.payload["pluripotential_weq"] = is_pluripotential_weq(inflated).is_weq
        return report, True
