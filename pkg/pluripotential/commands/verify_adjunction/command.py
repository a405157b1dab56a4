from typing import Optional, TextIO

import pandas as pd

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.inflation import triangle_defects
from pluripotential.io.report import nonzero_locations


class Command(CommandBase):
    """Exits 0 iff both triangle identities of Inf ⊣ 𝓑 hold exactly on the given objects."""
    def __init__(self, complex_document: str, bicomplex_document: str, config_path: Optional[str] = None,
                 table_format: Optional[str] = None, output: Optional[TextIO] = None) -> None:
        super().__init__("verify-adjunction", config_path, table_format, output)
        self.complex_document = complex_document
        self.bicomplex_document = bicomplex_document

    def execute(self):
        c = self.load(self.complex_document, ("cochain",))
        a = self.load(self.bicomplex_document, ("bicomplex",))
        defects = triangle_defects(c, a)
        failing = {
            "inflation_side": nonzero_locations(defects.inflation_side),
            "bigolin_side": nonzero_locations(defects.bigolin_side),
        }
        records = [{"identity": "ε_Inf ∘ Inf(η) = id", "checked": len(defects.inflation_side),
                    "nonzero": len(failing["inflation_side"])},
                   {"identity": "𝓑(ε) ∘ η_𝓑 = id", "checked": len(defects.bigolin_side),
                    "nonzero": len(failing["bigolin_side"])}]
        report = self.new_report("triangle defects all zero" if defects.is_zero else "triangle defects nonzero")
        report.add_table("triangle identities", pd.DataFrame(records).set_index("identity"))
        report.payload = {"holds": defects.is_zero, "nonzero_defects": failing}
        return report, defects.is_zero
