"""Canonical Hecke characters of imaginary quadratic fields Q(sqrt(-D)) and
certified non-vanishing of the central derivatives of their L-functions.

The heavy lifting lives in the compiled extension ``heckederiv._core``; this
package re-exports its surface.  Quick start::

    import heckederiv as hd

    rec = hd.evaluate(11)          # untwisted, D = 11
    rec["l_prime"]                 # ~0.8623722967
    hd.certify(19)["method"]       # 'bound_chain'
    rows = hd.scan(7, 100)         # verdicts for the whole range
"""

from ._core import (
    analytic_checks,
    c_trivial_bound,
    certify,
    class_number,
    evaluate,
    gamma_abs,
    is_fundamental_discriminant,
    kernel_f,
    kronecker,
    liouville,
    r_lower_bound,
    reference_table_checks,
    residue_constants,
    scan,
    series_coefficient,
    zeta,
)

__all__ = [
    "analytic_checks",
    "c_trivial_bound",
    "certify",
    "class_number",
    "evaluate",
    "gamma_abs",
    "is_fundamental_discriminant",
    "kernel_f",
    "kronecker",
    "liouville",
    "r_lower_bound",
    "reference_table_checks",
    "residue_constants",
    "scan",
    "series_coefficient",
    "zeta",
]

__version__ = "0.1.0"
