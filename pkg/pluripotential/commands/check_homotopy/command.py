from typing import Optional, TextIO

from pluripotential.commands.command_base import CommandBase
from pluripotential.core.cohomology import Theory, induced_map, solve_homotopy
from pluripotential.io.report import matrices_payload


class Command(CommandBase):
    """Searches a pluripotential homotopy between two morphisms; exits 0 iff one exists."""
    def __init__(self, first: str, second: str, config_path: Optional[str] = None,
                 table_format: Optional[str] = None, output: Optional[TextIO] = None) -> None:
        super().__init__("check-homotopy", config_path, table_format, output)
        self.first = first
        self.second = second

    def execute(self):
        f = self.load(self.first, ("bicomplex_map",))
        g = self.load(self.second, ("bicomplex_map",))
        h = solve_homotopy(f, g)
        agree = {theory.value: induced_map(f, theory) == induced_map(g, theory)
                 for theory in (Theory.BOTT_CHERN, Theory.AEPPLI)}
        report = self.new_report("homotopic" if h is not None else "no pluripotential homotopy")
        for theory, same in agree.items():
            report.add_line(f"{theory}: induced maps {'agree' if same else 'differ'}")
        report.payload = {
            "homotopic": h is not None,
            "homotopy": matrices_payload(h.blocks) if h is not None else None,
            "induced_maps_agree": agree,
        }
        return report, h is not None
