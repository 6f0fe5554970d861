"""Offshoot branch-and-bound for small mixed-integer linear programs."""
from .lp import DualSimplex, LpModel, LpOutcome, LpStatus
from .model import MilpProblem, ModelError, generate_random, load_problem, make_problem, parse_mps
from .oracle import enumerate_optimum
from .search import SearchConfig, SolveResult, solve

__all__ = ["DualSimplex", "LpModel", "LpOutcome", "LpStatus", "MilpProblem", "ModelError",
           "generate_random", "load_problem", "make_problem", "parse_mps", "enumerate_optimum",
           "SearchConfig", "SolveResult", "solve"]
__version__ = "0.1.0"
