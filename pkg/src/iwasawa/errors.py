"""Exception types shared across the package."""


class IwasawaError(Exception):
    """Base class for all package errors."""


class CartanTypeError(IwasawaError, ValueError):
    """Unknown series or a rank outside the valid range for the series."""


class RootError(IwasawaError, ValueError):
    """A vector that is not a root, or a root pair of the wrong shape."""


class PrimeTooSmallError(IwasawaError, ValueError):
    """The prime violates the standing hypothesis p > h + 1."""

    def __init__(self, type_name, p, h):
        self.type_name = type_name
        self.p = p
        self.h = h
        self.minimum = smallest_admissible_prime(h)
        super().__init__(
            f"prime too small for type {type_name}: need p > {h + 1} "
            f"(smallest admissible prime is {self.minimum}), got p = {p}"
        )


class PrecisionError(IwasawaError, ArithmeticError):
    """A p-adic scalar carries too little precision for the requested result."""


class ResourceCapError(IwasawaError, RuntimeError):
    """An enumeration would exceed its configured cap."""


class ConsistencyError(IwasawaError, RuntimeError):
    """An internal identity that must hold did not (Jacobi, integrality, coverage)."""


def is_prime(n):
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def smallest_admissible_prime(h):
    q = h + 2
    while not is_prime(q):
        q += 1
    return q
