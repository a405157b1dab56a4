from typing import Optional, TextIO

import pandas as pd

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.bigolin import bigolin_complex, bigolin_identification
from pluripotential.core.cohomology import total_cohomology
from pluripotential.io.report import dims_payload, grid_frame, space_frame


class Command(CommandBase):
    """
    Builds 𝓑_{p,q} of a bicomplex and compares its cohomology at the junction with
    Bott-Chern and Aeppli cohomology.
    """
    def __init__(self, document: str, p: int = 0, q: int = 0, write_path: Optional[str] = None,
                 config_path: Optional[str] = None, table_format: Optional[str] = None,
                 output: Optional[TextIO] = None) -> None:
        super().__init__("bigolin", config_path, table_format, output)
        self.document = document
        self.p = p
        self.q = q
        self.write_path = write_path

    def execute(self):
        a = self.load(self.document, ("bicomplex",))
        complex_ = bigolin_complex(a, self.p, self.q)
        self.write(complex_, self.write_path)
        table = total_cohomology(complex_)
        identification = bigolin_identification(a, self.p, self.q)
        report = self.new_report(f"𝓑_{{{self.p},{self.q}}} in degrees {list(complex_.support)}")
        report.add_table("dimensions", space_frame(complex_))
        report.add_table("cohomology", grid_frame(table.dims, table.entries))
        report.add_line(f"H^{identification.top_degree} = {identification.top_cohomology}, "
                        f"H_BC^{{{self.p},{self.q}}} = {identification.bott_chern}")
        report.add_line(f"H^{identification.junction_degree} = {identification.junction_cohomology}, "
                        f"H_A^{{{self.p - 1},{self.q - 1}}} = {identification.aeppli}")
        window = self.identification_window(a)
        report.add_table("identifications", pd.DataFrame(window))
        report.payload = {
            "p": self.p,
            "q": self.q,
            "dims": dims_payload(complex_.dims),
            "cohomology": dims_payload(table.dims),
            "identification": {**identification._asdict(), "holds": identification.holds},
            "window": window,
        }
        return report, identification.holds

    def identification_window(self, a):
        """Checks the identification at every (p, q) of the support's bounding box, widened by window_margin."""
        margin = self.config.window_margin
        support = list(a.support) or [(self.p, self.q)]
        ps = range(min(p for p, _ in support) - margin, max(p for p, _ in support) + margin + 1)
        qs = range(min(q for _, q in support) - margin, max(q for _, q in support) + margin + 1)
        records = [{"p": p, "q": q, "holds": bigolin_identification(a, p, q).holds} for p in ps for q in qs]
        self.logger.debug(f"{len(records)=} {margin=}")
        return records
