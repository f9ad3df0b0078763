"""Root data, highest-weight irreps, coadjoint orbits and first-order calculi."""

from ._orbitcalc import (
    BudgetExceeded,
    InvalidWeight,
    Irrep,
    LieAlgebra,
    OrbitcalcError,
    RootSystem,
    SpecError,
    UnreachableWeight,
    __version__,
    algebra_from_json,
    build_irrep,
    builtin,
    direct_sum,
    freudenthal_multiplicities,
    orbit,
    verify,
    weyl_dimension,
)


def root_system(name):
    """RootSystem of a built-in algebra such as "su3" or "su2+su2"."""
    return RootSystem(builtin(name))


__all__ = [
    "BudgetExceeded",
    "InvalidWeight",
    "Irrep",
    "LieAlgebra",
    "OrbitcalcError",
    "RootSystem",
    "SpecError",
    "UnreachableWeight",
    "__version__",
    "algebra_from_json",
    "build_irrep",
    "builtin",
    "direct_sum",
    "freudenthal_multiplicities",
    "orbit",
    "root_system",
    "verify",
    "weyl_dimension",
]
