from typing import Optional, TextIO

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.cohomology import aeppli, bott_chern, ddbar_lemma
from pluripotential.io.document import format_key
from pluripotential.io.report import cohomology_frame, dims_payload


class Command(CommandBase):
    """Decides the ∂∂̄-lemma; exits 0 iff it holds."""
    def __init__(self, document: str, config_path: Optional[str] = None, table_format: Optional[str] = None,
                 output: Optional[TextIO] = None) -> None:
        super().__init__("ddbar", config_path, table_format, output)
        self.document = document

    def execute(self):
        a = self.load(self.document, ("bicomplex",))
        verdict = ddbar_lemma(a)
        bc, ae = bott_chern(a), aeppli(a)
        title = "∂∂̄-lemma holds" if verdict.holds else f"∂∂̄-lemma fails at ({format_key(verdict.failing)})"
        report = self.new_report(title)
        report.add_table("Bott-Chern", cohomology_frame(bc, a.support))
        report.add_table("Aeppli", cohomology_frame(ae, a.support))
        report.payload = {
            "holds": verdict.holds,
            "failing": format_key(verdict.failing) if verdict.failing is not None else None,
            "failures": [format_key(key) for key in verdict.failures],
            "bott_chern": dims_payload(bc.dims),
            "aeppli": dims_payload(ae.dims),
        }
        return report, verdict.holds
