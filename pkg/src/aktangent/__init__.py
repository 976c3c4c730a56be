"""Enumerative counts of A_k-singular plane curves tangent to a fixed line.

Submodules:

- :mod:`aktangent.exactpoly`: exact univariate, bivariate and series arithmetic,
  resultants and discriminants.
- :mod:`aktangent.closed_forms`: polynomial formulas for ``N_d^T`` of small profiles.
- :mod:`aktangent.tangency_recursion`: the line-conditioned recursion over a table.
- :mod:`aktangent.caporaso_harris`: the Caporaso-Harris recursion with tangency.
- :mod:`aktangent.ak_local`: A_k classification of germs and vanishing orders.
- :mod:`aktangent.pencil`: exact discriminant check on random pencils.
- :mod:`aktangent.consistency`: cross-checks between the above.
"""

__version__ = "0.1.0"

from .closed_forms import CountValue, nt_closed  # noqa: E402
from .profiles import SingularityProfile  # noqa: E402

__all__ = ["CountValue", "SingularityProfile", "nt_closed", "__version__"]
