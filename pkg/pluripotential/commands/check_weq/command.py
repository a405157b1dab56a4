from typing import Optional, TextIO

import pandas as pd
from sympy.polys.domains import QQ_I

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.cohomology import Theory, is_pluripotential_weq
from pluripotential.core.realbico import realify_morphism
from pluripotential.io.document import format_key
from pluripotential.io.report import dims_payload


class Command(CommandBase):
    """Exits 0 iff the morphism induces isomorphisms on Bott-Chern and Aeppli cohomology."""
    def __init__(self, document: str, config_path: Optional[str] = None, table_format: Optional[str] = None,
                 output: Optional[TextIO] = None) -> None:
        super().__init__("check-weq", config_path, table_format, output)
        self.document = document

    def execute(self):
        f = self.load(self.document, ("bicomplex_map",))
        # a Gaussian map is a weak equivalence iff its realification is
        scale = 2 if f.domain == QQ_I else 1
        verdict = is_pluripotential_weq(realify_morphism(f) if scale == 2 else f)
        records = []
        for theory in (Theory.BOTT_CHERN, Theory.AEPPLI):
            source, target = verdict.source_tables[theory], verdict.target_tables[theory]
            for key in sorted(set(source.dims) | set(target.dims)):
                records.append({"theory": theory.value, "bidegree": format_key(key), "source": source.dim(key) // scale,
                                "target": target.dim(key) // scale, "iso": (key, theory) not in verdict.failures})
        report = self.new_report("pluripotential weak equivalence" if verdict.is_weq else "not a weak equivalence")
        report.add_table("induced maps", pd.DataFrame(records))
        report.payload = {
            "is_weq": verdict.is_weq,
            "failures": [{"bidegree": format_key(key), "theory": theory.value} for key, theory in verdict.failures],
            "source": {theory.value: dims_payload({key: dim // scale for key, dim in table.dims.items()})
                       for theory, table in verdict.source_tables.items()},
            "target": {theory.value: dims_payload({key: dim // scale for key, dim in table.dims.items()})
                       for theory, table in verdict.target_tables.items()},
        }
        return report, verdict.is_weq
