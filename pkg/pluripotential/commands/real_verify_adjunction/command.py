from typing import Optional, TextIO

import pandas as pd

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.realbico import is_real_morphism, real_counit, real_triangle_defects
from pluripotential.io.report import nonzero_locations


class Command(CommandBase):
    """Exits 0 iff the real counit commutes with σ and both real triangle identities hold."""
    def __init__(self, complex_document: str, bicomplex_document: str, config_path: Optional[str] = None,
                 table_format: Optional[str] = None, output: Optional[TextIO] = None) -> None:
        super().__init__("real-verify-adjunction", config_path, table_format, output)
        self.complex_document = complex_document
        self.bicomplex_document = bicomplex_document

    def execute(self):
        c = self.load(self.complex_document, ("cochain",))
        a = self.load(self.bicomplex_document, ("real_bicomplex",))
        defects = real_triangle_defects(c, a)
        equivariant = is_real_morphism(real_counit(a))
        failing = {
            "inflation_side": nonzero_locations(defects.inflation_side),
            "bigolin_side": nonzero_locations(defects.bigolin_side),
        }
        records = [{"identity": "ε_ℝ ∘ Inf_ℝ(η_ℝ) = id", "nonzero": len(failing["inflation_side"])},
                   {"identity": "𝓑_ℝ(ε_ℝ) ∘ η_ℝ = id", "nonzero": len(failing["bigolin_side"])}]
        holds = defects.is_zero and equivariant
        report = self.new_report("real adjunction verified" if holds else "real adjunction fails")
        report.add_table("triangle identities", pd.DataFrame(records).set_index("identity"))
        report.add_line(f"counit commutes with σ: {equivariant}")
        report.payload = {"holds": holds, "counit_equivariant": equivariant, "nonzero_defects": failing}
        return report, holds
