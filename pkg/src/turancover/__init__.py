"""turancover: exact desk-scale laboratory for Turán-type extremal problems.

Subpackages:

* polycore       exact sparse rational polynomial arithmetic
* hypergraph     r-graphs, Turán constructions, brute-force oracles
* diagonal       identification ideals and the counterexample certificate
* monomial       squarefree ideals, Alexander duality, hitting sets
* squarezero     square-zero quotients and Hilbert symmetrization
* dictionary     the cover-ideal Turán dictionary (ordinary + generalized)
* codegree_star  the missing codegree-star ideal and its initial degree
* cli            JSON-reporting command-line interface
"""

__version__ = "0.1.0"

from .errors import ClaimCheckError, InputError, ScaleGuardError

__all__ = ["ClaimCheckError", "InputError", "ScaleGuardError", "__version__"]
